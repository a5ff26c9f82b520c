#include "closedpoly/dependence.hpp"

#include "closedpoly/error.hpp"

namespace closedpoly {

MinorGrid jacobian_minors(const MultiPoly& f, const MultiPoly& g) {
    if (f.nvars() != g.nvars()) {
        throw DomainError("variable-count mismatch");
    }
    if (f.is_constant() || g.is_constant()) {
        throw DomainError("Jacobian minors need non-constant polynomials");
    }
    const std::size_t n = f.nvars();
    std::vector<MultiPoly> df;
    std::vector<MultiPoly> dg;
    for (std::size_t i = 0; i < n; ++i) {
        df.push_back(f.partial_derivative(i));
        dg.push_back(g.partial_derivative(i));
    }
    MinorGrid grid;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            grid.emplace(std::make_pair(i, j), df[i] * dg[j] - df[j] * dg[i]);
        }
    }
    return grid;
}

bool alg_dependent(const MultiPoly& f, const MultiPoly& g) {
    for (const auto& [ij, minor] : jacobian_minors(f, g)) {
        if (!minor.is_zero()) {
            return false;
        }
    }
    return true;
}

MultiPoly apply_derivation(const MultiPoly& f, std::size_t i, std::size_t j, const MultiPoly& g) {
    if (f.nvars() != g.nvars()) {
        throw DomainError("variable-count mismatch");
    }
    if (!(i < j && j < f.nvars())) {
        throw DomainError("derivation indices must satisfy i < j < nvars");
    }
    return f.partial_derivative(i) * g.partial_derivative(j) - f.partial_derivative(j) * g.partial_derivative(i);
}

} // namespace closedpoly
