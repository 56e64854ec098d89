#include "thermiface/materials.hpp"

#include "thermiface/numfmt.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <string>

namespace thermiface {

const Material* MaterialDb::find(std::string_view symbol) const noexcept {
    const auto it = std::find_if(entries_.begin(), entries_.end(),
                                 [&](const Material& m) { return m.symbol == symbol; });
    return it == entries_.end() ? nullptr : &*it;
}

const Material& MaterialDb::at(std::string_view symbol) const {
    if (const Material* m = find(symbol)) {
        return *m;
    }
    std::string known;
    for (const Material& m : entries_) {
        known += known.empty() ? "" : ", ";
        known += m.symbol;
    }
    throw Error(ErrorKind::NotFound,
                "unknown material symbol '" + std::string(symbol) + "' (known: " + known + ")");
}

void MaterialDb::upsert(const Material& material) {
    const auto it = std::find_if(entries_.begin(), entries_.end(),
                                 [&](const Material& m) { return m.symbol == material.symbol; });
    if (it != entries_.end()) {
        *it = material;
    } else {
        entries_.push_back(material);
    }
}

const MaterialDb& builtin_materials() {
    static const MaterialDb db = [] {
        MaterialDb d;
        d.upsert({"Aluminium", "Al", 204.0});
        d.upsert({"Copper", "Cu", 386.0});
        d.upsert({"Iron", "Fe", 73.0});
        d.upsert({"Silver", "Ag", 419.0});
        d.upsert({"Lead", "Pb", 35.0});
        d.upsert({"Magnesium", "Mg", 156.0});
        return d;
    }();
    return db;
}

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
    throw Error(ErrorKind::Parse, what + " (line " + std::to_string(line) + ")");
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> fields;
    std::string::size_type start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        fields.push_back(text.substr(start, comma - start));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return fields;
}

} // namespace

MaterialDb parse_materials(std::istream& in) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        lines.push_back(std::move(line));
    }
    if (lines.empty()) {
        parse_error(1, "missing header 'name,symbol,kappa'");
    }
    std::string header = lines.front();
    if (header.rfind("\xEF\xBB\xBF", 0) == 0) {
        header.erase(0, 3);
    }
    if (header != "name,symbol,kappa") {
        parse_error(1, "expected header 'name,symbol,kappa', got '" + header + "'");
    }

    MaterialDb db = builtin_materials();
    std::set<std::string> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const std::string& line = lines[i];
        if (line.empty()) {
            // A blank final line is just a trailing newline written twice by
            // some editors; anything else is malformed.
            if (i + 1 == lines.size()) {
                break;
            }
            parse_error(line_no, "empty record");
        }
        const auto fields = split_commas(line);
        if (fields.size() != 3) {
            parse_error(line_no,
                        "expected 3 fields, got " + std::to_string(fields.size()));
        }
        if (fields[0].empty()) {
            parse_error(line_no, "name must be non-empty");
        }
        if (fields[1].empty()) {
            parse_error(line_no, "symbol must be non-empty");
        }
        const auto kappa = parse_double(fields[2]);
        if (!kappa) {
            parse_error(line_no, "kappa is not a number: '" + fields[2] + "'");
        }
        if (!(*kappa > 0.0) || !std::isfinite(*kappa)) {
            parse_error(line_no, "kappa must be positive");
        }
        if (!seen.insert(fields[1]).second) {
            parse_error(line_no, "duplicate symbol '" + fields[1] + "'");
        }
        db.upsert(Material{fields[0], fields[1], *kappa});
    }
    return db;
}

MaterialDb load_materials(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::Io, "cannot open materials file '" + path.string() + "'");
    }
    return parse_materials(in);
}

} // namespace thermiface
