#pragma once

// Finite-difference discretisation of the bar problem, independent of the
// closed form in forward.hpp. Each material segment gets its own uniform
// grid so the interface is always a node. Because the exact solution is
// piecewise affine the scheme reproduces it up to linear-solve roundoff.

#include "thermiface/domain.hpp"

#include <cstddef>
#include <vector>

namespace thermiface {

struct FdSolution {
    std::vector<double> nodes; // nodes.front() == 0, nodes.back() == L
    std::vector<double> temps;
    std::size_t interface_index = 0; // nodes[interface_index] == l
    // One-sided −κ_B·(u_N − u_{N−1})/Δx_B at x = L.
    double boundary_flux = 0.0;
};

[[nodiscard]] FdSolution solve_fd(const BarSetup& setup, std::size_t cells_per_segment);

} // namespace thermiface
