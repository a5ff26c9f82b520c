#include "closedpoly/lp.hpp"

#include <algorithm>

#include "closedpoly/error.hpp"

namespace closedpoly::lp {

namespace {

Relation flipped(Relation rel) {
    switch (rel) {
    case Relation::less_equal:
        return Relation::greater_equal;
    case Relation::greater_equal:
        return Relation::less_equal;
    case Relation::equal:
        break;
    }
    return Relation::equal;
}

// Dense phase-1 tableau. Row `rows` is the reduced-cost row of the
// artificial objective; the last column holds right-hand sides.
class Phase1Tableau {
public:
    Phase1Tableau(std::size_t nvars, std::span<const Constraint> constraints)
        : nvars_(nvars), rows_(constraints.size()) {
        std::size_t slack_count = 0;
        std::size_t artificial_count = 0;
        std::vector<Constraint> normalized(constraints.begin(), constraints.end());
        for (auto& c : normalized) {
            if (c.coeffs.size() != nvars) {
                throw DomainError("constraint has wrong number of coefficients");
            }
            if (c.rhs.sign() < 0) {
                for (auto& a : c.coeffs) {
                    a = -a;
                }
                c.rhs = -c.rhs;
                c.rel = flipped(c.rel);
            }
            if (c.rel != Relation::equal) {
                ++slack_count;
            }
            if (c.rel != Relation::less_equal) {
                ++artificial_count;
            }
        }
        artificial_begin_ = nvars + slack_count;
        cols_ = artificial_begin_ + artificial_count;
        table_.assign(rows_ + 1, std::vector<Rational>(cols_ + 1));
        basis_.resize(rows_);

        std::size_t slack = nvars;
        std::size_t artificial = artificial_begin_;
        for (std::size_t i = 0; i < rows_; ++i) {
            const auto& c = normalized[i];
            auto& row = table_[i];
            std::copy(c.coeffs.begin(), c.coeffs.end(), row.begin());
            row[cols_] = c.rhs;
            switch (c.rel) {
            case Relation::less_equal:
                row[slack] = Rational(1);
                basis_[i] = slack++;
                break;
            case Relation::greater_equal:
                row[slack++] = Rational(-1);
                row[artificial] = Rational(1);
                basis_[i] = artificial++;
                break;
            case Relation::equal:
                row[artificial] = Rational(1);
                basis_[i] = artificial++;
                break;
            }
        }
        auto& cost = table_[rows_];
        for (std::size_t i = 0; i < rows_; ++i) {
            if (basis_[i] < artificial_begin_) {
                continue;
            }
            for (std::size_t j = 0; j < artificial_begin_; ++j) {
                cost[j] -= table_[i][j];
            }
            cost[cols_] -= table_[i][cols_];
        }
    }

    // Bland's rule: lowest-index improving column, lowest-index leaving
    // basic variable among ratio ties.
    void solve() {
        for (;;) {
            const auto& cost = table_[rows_];
            std::size_t entering = cols_;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (cost[j].sign() < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == cols_) {
                return;
            }
            std::size_t leaving = rows_;
            Rational best_ratio;
            for (std::size_t i = 0; i < rows_; ++i) {
                const Rational& a = table_[i][entering];
                if (a.sign() <= 0) {
                    continue;
                }
                Rational ratio = table_[i][cols_] / a;
                if (leaving == rows_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best_ratio = std::move(ratio);
                }
            }
            if (leaving == rows_) {
                throw InternalError("phase-1 simplex reported an unbounded direction");
            }
            pivot(leaving, entering);
        }
    }

    bool feasible() const { return table_[rows_][cols_].is_zero(); }

    std::vector<Rational> point() const {
        std::vector<Rational> x(nvars_);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (basis_[i] < nvars_) {
                x[basis_[i]] = table_[i][cols_];
            }
        }
        return x;
    }

private:
    void pivot(std::size_t r, std::size_t c) {
        auto& prow = table_[r];
        const Rational inv = prow[c].inverse();
        for (auto& v : prow) {
            if (!v.is_zero()) {
                v *= inv;
            }
        }
        for (std::size_t i = 0; i <= rows_; ++i) {
            if (i == r || table_[i][c].is_zero()) {
                continue;
            }
            const Rational factor = table_[i][c];
            auto& row = table_[i];
            for (std::size_t j = 0; j <= cols_; ++j) {
                if (!prow[j].is_zero()) {
                    row[j] -= factor * prow[j];
                }
            }
        }
        basis_[r] = c;
    }

    std::size_t nvars_;
    std::size_t rows_;
    std::size_t cols_ = 0;
    std::size_t artificial_begin_ = 0;
    std::vector<std::vector<Rational>> table_;
    std::vector<std::size_t> basis_;
};

} // namespace

std::optional<std::vector<Rational>> find_feasible_point(std::size_t nvars,
                                                         std::span<const Constraint> constraints) {
    Phase1Tableau tableau(nvars, constraints);
    tableau.solve();
    if (!tableau.feasible()) {
        return std::nullopt;
    }
    auto x = tableau.point();
    if (!satisfies(x, constraints)) {
        throw InternalError("simplex returned a point violating its constraints");
    }
    return x;
}

bool satisfies(std::span<const Rational> x, std::span<const Constraint> constraints) {
    for (const auto& v : x) {
        if (v.sign() < 0) {
            return false;
        }
    }
    for (const auto& c : constraints) {
        if (c.coeffs.size() != x.size()) {
            return false;
        }
        Rational lhs;
        for (std::size_t i = 0; i < x.size(); ++i) {
            lhs += c.coeffs[i] * x[i];
        }
        const bool ok = c.rel == Relation::equal        ? lhs == c.rhs
                        : c.rel == Relation::less_equal ? lhs <= c.rhs
                                                        : lhs >= c.rhs;
        if (!ok) {
            return false;
        }
    }
    return true;
}

} // namespace closedpoly::lp
