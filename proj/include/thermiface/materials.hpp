#pragma once

#include "thermiface/domain.hpp"

#include <filesystem>
#include <istream>
#include <string_view>
#include <vector>

namespace thermiface {

// Ordered material table keyed by symbol (case-sensitive, unique).
class MaterialDb {
public:
    MaterialDb() = default;

    [[nodiscard]] const std::vector<Material>& entries() const noexcept { return entries_; }
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }

    [[nodiscard]] const Material* find(std::string_view symbol) const noexcept;
    // Throws NotFound.
    [[nodiscard]] const Material& at(std::string_view symbol) const;

    // Replaces an entry with the same symbol in place, otherwise appends.
    void upsert(const Material& material);

private:
    std::vector<Material> entries_;
};

/// Average conductivities of Al, Cu, Fe, Ag, Pb, Mg.
[[nodiscard]] const MaterialDb& builtin_materials();

/// Reads `name,symbol,kappa` CSV (header required, \n or \r\n, trailing
/// newline optional) and merges it over the builtins, file entries
/// shadowing builtins by symbol. Errors carry the 1-based line number.
[[nodiscard]] MaterialDb parse_materials(std::istream& in);
[[nodiscard]] MaterialDb load_materials(const std::filesystem::path& path);

} // namespace thermiface
