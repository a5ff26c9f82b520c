#include "closedpoly/monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "closedpoly/error.hpp"
#include "closedpoly/lp.hpp"
#include "closedpoly/order.hpp"
#include "closedpoly/rational.hpp"

namespace closedpoly {

namespace {

std::int64_t coordinate_sum(const ExponentVector& v) {
    return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

void require_dimension(const ExponentVector& v, const MonoidGens& gens) {
    if (v.size() != gens.nvars) {
        throw DomainError("vector dimension does not match the generators");
    }
    if (std::any_of(v.begin(), v.end(), [](auto x) { return x < 0; })) {
        throw DomainError("exponent vectors must be nonnegative");
    }
}

bool reachable(const ExponentVector& v, const MonoidGens& gens, std::map<ExponentVector, bool>& memo) {
    if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) {
        return true;
    }
    if (auto it = memo.find(v); it != memo.end()) {
        return it->second;
    }
    bool ok = false;
    for (const auto& g : gens.gens) {
        ExponentVector rest(v.size());
        bool fits = true;
        for (std::size_t i = 0; i < v.size(); ++i) {
            rest[i] = v[i] - g[i];
            fits = fits && rest[i] >= 0;
        }
        if (fits && reachable(rest, gens, memo)) {
            ok = true;
            break;
        }
    }
    memo.emplace(v, ok);
    return ok;
}

void enumerate(std::size_t index, std::int64_t remaining, ExponentVector& current, std::vector<ExponentVector>& out) {
    if (index == current.size()) {
        out.push_back(current);
        return;
    }
    for (std::int64_t e = 0; e <= remaining; ++e) {
        current[index] = e;
        enumerate(index + 1, remaining - e, current, out);
    }
    current[index] = 0;
}

} // namespace

MonoidGens make_monoid_gens(std::vector<ExponentVector> gens, std::int64_t bound) {
    if (gens.empty()) {
        throw DomainError("at least one generator is required");
    }
    MonoidGens out;
    out.nvars = gens.front().size();
    if (out.nvars == 0) {
        throw DomainError("generators must have at least one coordinate");
    }
    std::int64_t max_sum = 0;
    for (const auto& g : gens) {
        if (g.size() != out.nvars) {
            throw DomainError("generators have different lengths");
        }
        if (std::any_of(g.begin(), g.end(), [](auto x) { return x < 0; })) {
            throw DomainError("generators must be nonnegative");
        }
        const auto s = coordinate_sum(g);
        if (s == 0) {
            throw DomainError("generators must be nonzero");
        }
        max_sum = std::max(max_sum, s);
    }
    if (bound != 0 && bound < max_sum) {
        throw DomainError("bound " + std::to_string(bound) + " is below the largest generator coordinate sum " +
                          std::to_string(max_sum));
    }
    out.gens = std::move(gens);
    out.bound = bound == 0 ? max_sum : bound;
    return out;
}

std::vector<ExponentVector> parse_generators(const std::string& text) {
    std::vector<ExponentVector> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto semi = std::min(text.find(';', start), text.size());
        const std::string tuple = text.substr(start, semi - start);
        ExponentVector v;
        std::size_t pos = 0;
        while (pos <= tuple.size()) {
            const auto comma = std::min(tuple.find(',', pos), tuple.size());
            std::string item = tuple.substr(pos, comma - pos);
            item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                       item.end());
            if (item.empty() || item.size() > 9 ||
                !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); })) {
                throw DomainError("bad generator coordinate '" + item + "' in '" + text + "'");
            }
            v.push_back(std::stoll(item));
            pos = comma + 1;
        }
        out.push_back(std::move(v));
        start = semi + 1;
    }
    return out;
}

bool cone_member(const ExponentVector& v, const MonoidGens& gens) {
    require_dimension(v, gens);
    std::vector<lp::Constraint> rows;
    for (std::size_t s = 0; s < gens.nvars; ++s) {
        lp::Constraint c;
        c.rel = lp::Relation::equal;
        for (const auto& g : gens.gens) {
            c.coeffs.emplace_back(g[s]);
        }
        c.rhs = Rational(v[s]);
        rows.push_back(std::move(c));
    }
    return lp::find_feasible_point(gens.gens.size(), rows).has_value();
}

bool monoid_member(const ExponentVector& v, const MonoidGens& gens) {
    require_dimension(v, gens);
    std::map<ExponentVector, bool> memo;
    return reachable(v, gens, memo);
}

std::vector<ExponentVector> saturation_generators(const MonoidGens& gens, std::size_t cap) {
    const std::size_t count = count_monomials_up_to(gens.nvars, static_cast<std::uint64_t>(gens.bound));
    if (count > cap) {
        throw CapacityError("lattice enumeration up to coordinate sum " + std::to_string(gens.bound) + " needs " +
                            std::to_string(count) + " points (cap " + std::to_string(cap) + ")");
    }
    std::vector<ExponentVector> points;
    ExponentVector current(gens.nvars, 0);
    enumerate(0, gens.bound, current, points);
    std::stable_sort(points.begin(), points.end(),
                     [](const auto& a, const auto& b) { return coordinate_sum(a) < coordinate_sum(b); });

    std::set<ExponentVector> in_cone;
    std::vector<ExponentVector> irreducible;
    for (const auto& v : points) {
        if (coordinate_sum(v) == 0 || !cone_member(v, gens)) {
            continue;
        }
        in_cone.insert(v);
        // v = a + b with a irreducible covers every decomposition
        const bool reducible = std::any_of(irreducible.begin(), irreducible.end(), [&](const ExponentVector& a) {
            ExponentVector rest(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) {
                rest[i] = v[i] - a[i];
                if (rest[i] < 0) {
                    return false;
                }
            }
            return in_cone.count(rest) > 0;
        });
        if (!reducible) {
            irreducible.push_back(v);
        }
    }
    return irreducible;
}

bool is_saturated(const MonoidGens& gens, std::size_t cap) {
    const auto basis = saturation_generators(gens, cap);
    return std::all_of(basis.begin(), basis.end(), [&](const auto& v) { return monoid_member(v, gens); });
}

} // namespace closedpoly
