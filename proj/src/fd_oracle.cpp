#include "thermiface/fd_oracle.hpp"

#include <cmath>

namespace thermiface {

namespace {

// Tridiagonal system: sub[i]·u[i−1] + diag[i]·u[i] + sup[i]·u[i+1] = rhs[i].
struct Tridiagonal {
    std::vector<double> sub, diag, sup, rhs;

    explicit Tridiagonal(std::size_t n) : sub(n, 0.0), diag(n, 0.0), sup(n, 0.0), rhs(n, 0.0) {}

    // Thomas sweep; consumes the system.
    std::vector<double> solve() {
        const std::size_t n = diag.size();
        for (std::size_t i = 1; i < n; ++i) {
            check_pivot(diag[i - 1]);
            const double w = sub[i] / diag[i - 1];
            diag[i] -= w * sup[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
        check_pivot(diag[n - 1]);
        std::vector<double> u(n);
        u[n - 1] = rhs[n - 1] / diag[n - 1];
        for (std::size_t i = n - 1; i-- > 0;) {
            u[i] = (rhs[i] - sup[i] * u[i + 1]) / diag[i];
        }
        return u;
    }

    static void check_pivot(double pivot) {
        if (pivot == 0.0 || !std::isfinite(pivot)) {
            throw Error(ErrorKind::Internal, "finite-difference system is singular");
        }
    }
};

} // namespace

FdSolution solve_fd(const BarSetup& setup, std::size_t cells_per_segment) {
    validate_bar_setup(setup);
    if (cells_per_segment < 1) {
        throw Error(ErrorKind::Validation, "cells_per_segment must be at least 1");
    }

    const std::size_t n = cells_per_segment;
    const std::size_t last = 2 * n;
    const double l = setup.interface;
    const double dx_a = l / static_cast<double>(n);
    const double dx_b = (setup.length - l) / static_cast<double>(n);
    const double ka = setup.material_a.kappa;
    const double kb = setup.material_b.kappa;

    FdSolution sol;
    sol.interface_index = n;
    sol.nodes.resize(last + 1);
    for (std::size_t i = 0; i < n; ++i) {
        sol.nodes[i] = l * static_cast<double>(i) / static_cast<double>(n);
    }
    sol.nodes[n] = l;
    for (std::size_t j = 1; j < n; ++j) {
        sol.nodes[n + j] = l + (setup.length - l) * static_cast<double>(j) / static_cast<double>(n);
    }
    sol.nodes[last] = setup.length;

    Tridiagonal sys(last + 1);
    // u(0) = F
    sys.diag[0] = 1.0;
    sys.rhs[0] = setup.source_temp;
    // u'' = 0 at interior nodes of either segment
    for (std::size_t i = 1; i < last; ++i) {
        if (i == n) {
            continue;
        }
        sys.sub[i] = -1.0;
        sys.diag[i] = 2.0;
        sys.sup[i] = -1.0;
    }
    // κ_A (u_n − u_{n−1})/Δx_A = κ_B (u_{n+1} − u_n)/Δx_B
    const double ga = ka / dx_a;
    const double gb = kb / dx_b;
    sys.sub[n] = -ga;
    sys.diag[n] = ga + gb;
    sys.sup[n] = -gb;
    // −κ_B (u_N − u_{N−1})/Δx_B = h (u_N − Ta)
    sys.sub[last] = -gb;
    sys.diag[last] = gb + setup.convection;
    sys.rhs[last] = setup.convection * setup.ambient_temp;

    sol.temps = sys.solve();
    sol.boundary_flux = -gb * (sol.temps[last] - sol.temps[last - 1]);
    return sol;
}

} // namespace thermiface
