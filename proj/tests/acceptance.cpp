// Acceptance checks; prints one PASS/FAIL line per criterion.

#include <json.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "app.hpp"
#include "closedpoly/decompose.hpp"
#include "closedpoly/dependence.hpp"
#include "closedpoly/error.hpp"
#include "closedpoly/family.hpp"
#include "closedpoly/monoid.hpp"
#include "closedpoly/newton.hpp"
#include "closedpoly/text.hpp"
#include "support/generators.hpp"
#include "support/supports.hpp"

using namespace closedpoly;
using nlohmann::json;
namespace t = closedpoly::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Failure {
    std::string detail;
};

void require(bool ok, const std::string& detail) {
    if (!ok) {
        throw Failure{detail};
    }
}

json cli_json(std::vector<std::string> args, const std::string& stdin_text = "") {
    args.push_back("--json");
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, in, out, err);
    require(code == 0, "exit code " + std::to_string(code) + ": " + err.str());
    return json::parse(out.str());
}

json trace_of(std::initializer_list<std::pair<int, const char*>> entries) {
    json out = json::array();
    for (const auto& [k, outcome] : entries) {
        out.push_back({{"divisor", k}, {"outcome", outcome}});
    }
    return out;
}

const std::string kSquare = "x1^4 + 2*x1^2*x2 + x2^2";
const std::string kFamily = "x1^2*x2^4 - 2*x1^2*x2^3 + x1^2*x2^2 + 2*x1*x2^3 - 2*x1*x2^2 + x2^2 + 1";

// Decompositions collected for the dependence certificate.
std::vector<std::pair<MultiPoly, MultiPoly>> g_decompositions;

void record_decomposition(const std::string& f_text, const json& doc) {
    const auto f = parse_poly(f_text);
    g_decompositions.emplace_back(f.poly, parse_poly(doc["h"].get<std::string>(), f.nvars).poly);
}

void criterion_1() {
    const auto start = Clock::now();
    const auto pruned = cli_json({"decompose", "--poly", "-"}, kSquare);
    const auto full = cli_json({"decompose", "--poly", "-", "--no-newton"}, kSquare);
    const double elapsed = seconds_since(start);
    require(pruned["h"] == "x1^2 + x2", "h = " + pruned["h"].dump());
    require(pruned["F"] == "t^2", "F = " + pruned["F"].dump());
    require(pruned["closed"] == false, "closed flag");
    require(pruned["trace"] == trace_of({{2, "verified"}}), "pruned trace " + pruned["trace"].dump());
    require(full["h"] == pruned["h"] && full["F"] == pruned["F"], "unpruned result differs");
    require(full["trace"] == trace_of({{4, "mismatch"}, {2, "verified"}}), "unpruned trace " + full["trace"].dump());
    require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
    record_decomposition(kSquare, pruned);
}

void criterion_2() {
    const auto start = Clock::now();
    const auto doc = cli_json({"decompose", "--poly", "-"}, kFamily);
    const double elapsed = seconds_since(start);
    require(doc["h"] == "x1*x2^2 - x1*x2 + x2", "h = " + doc["h"].dump());
    require(doc["F"] == "t^2 + 1", "F = " + doc["F"].dump());
    require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
    record_decomposition(kFamily, doc);
}

void criterion_3() {
    const auto minus_one = cli_json({"family", "--poly", "-", "--mu", "-1"}, kFamily);
    require(minus_one["shifts"] == json::array({{{"lambda", "0"}, {"multiplicity", 2}}}),
            "mu=-1 shifts " + minus_one["shifts"].dump());
    require(minus_one["alpha"] == "1" && minus_one["residual"] == "1", "mu=-1 is not h^2");
    require(minus_one["verified"] == true, "mu=-1 identity");

    const auto minus_two = cli_json({"family", "--poly", "-", "--mu", "-2", "--eh", "0,-1"}, kFamily);
    const json expected = json::array({{{"lambda", "1"}, {"multiplicity", 1}}, {{"lambda", "-1"}, {"multiplicity", 1}}});
    require(minus_two["shifts"] == expected, "mu=-2 shifts " + minus_two["shifts"].dump());
    require(minus_two["alpha"] == "1" && minus_two["residual"] == "1", "mu=-2 is not (h+1)(h-1)");
    require(minus_two["verified"] == true, "mu=-2 identity");
    require(minus_two["E_f"] == json::array({"-2", "-1"}), "E(f) = " + minus_two["E_f"].dump());

    // independent expansion of both identities
    const auto f = parse_poly(kFamily).poly;
    const auto h = parse_poly("x1*x2^2 - x1*x2 + x2").poly;
    const auto one = MultiPoly::constant(2, Rational(1));
    require(f - one == h * h, "f - 1 != h^2");
    require(f - one - one == (h + one) * (h - one), "f - 2 != (h+1)(h-1)");
}

void criterion_4() {
    const auto data = parse_decomposition_data("-1: 1^2, 2^2\n-2: 1, 2, 3\ngeneric: 3, 3\n");
    auto with_d = data;
    with_d.d = 3;
    const auto report = stein_check(with_d, SteinMode::f_form);
    require(report.lhs == Rational(1), "lhs = " + report.lhs.to_string());
    require(report.rhs == Rational(3), "rhs = " + report.rhs.to_string());
    require(report.holds, "inequality reported as failing");
}

void criterion_5() {
    t::Rng rng(20260501);
    const auto start = Clock::now();
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(t::uniform_int(rng, 1, 3));
        const auto h = t::random_closed_h(rng, n, 4);
        const auto outer = t::random_outer(rng, static_cast<int>(t::uniform_int(rng, 1, 3)));
        const auto f = compose_uni(outer, h);
        const auto r = generative(f);
        require(r.h == h && r.outer == outer,
                "instance " + std::to_string(trial) + ": h = " + render_poly(h) + ", F = " + outer.to_string());
        g_decompositions.emplace_back(f, r.h);
    }
    const double elapsed = seconds_since(start);
    require(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s");
}

void criterion_6() {
    t::Rng rng(20260502);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(t::uniform_int(rng, 1, 4));
        const auto support = t::random_support(rng, n, 12, 6);
        const auto by_weights = v0_by_weights(support);
        const auto by_hull = v0_by_hull(support);
        require(by_weights == by_hull, "routes disagree on instance " + std::to_string(trial));
        int samples = 0;
        int draws = 0;
        while (samples < 500) {
            require(++draws < 5000, "too many tied weight draws on instance " + std::to_string(trial));
            const auto top = t::unique_argmax(support, t::random_weights(rng, n));
            if (!top) {
                continue;
            }
            ++samples;
            require(std::find(by_weights.begin(), by_weights.end(), *top) != by_weights.end(),
                    "argmax " + top->to_string() + " outside V0 on instance " + std::to_string(trial));
        }
    }
}

void criterion_7() {
    require(g_decompositions.size() == 202, "expected 202 decompositions, have " + std::to_string(g_decompositions.size()));
    for (const auto& [f, h] : g_decompositions) {
        for (const auto& [ij, minor] : jacobian_minors(f, h)) {
            require(minor.is_zero(), "nonzero minor for f = " + render_poly(f));
        }
        for (std::size_t i = 0; i < f.nvars(); ++i) {
            for (std::size_t j = i + 1; j < f.nvars(); ++j) {
                require(apply_derivation(f, i, j, h).is_zero(), "D(h) != 0 for f = " + render_poly(f));
            }
        }
    }
}

void criterion_8() {
    for (std::int64_t m = 2; m <= 5; ++m) {
        const auto doc = cli_json({"saturate", "--gens", "1,0;1," + std::to_string(m)});
        std::vector<ExponentVector> want;
        for (std::int64_t k = 0; k <= m; ++k) {
            want.push_back({1, k});
        }
        auto got = doc["generators"].get<std::vector<ExponentVector>>();
        std::sort(got.begin(), got.end());
        require(got == want, "m = " + std::to_string(m) + ": " + doc["generators"].dump());
        require(doc["saturated"] == false, "m = " + std::to_string(m) + " reported saturated");
    }
    require(cli_json({"saturate", "--gens", "1,0;0,1"})["saturated"] == true, "{(1,0),(0,1)} not saturated");
}

void criterion_9() {
    t::Rng rng(20260503);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto n = static_cast<std::size_t>(t::uniform_int(rng, 1, 5));
        const auto f = t::random_poly(rng, n, 8, 6);
        const auto text = render_poly(f);
        require(parse_poly(text, n).poly == f, "round trip failed for " + text);
    }
    const std::string alphabet = "x0123456789+-*/^ \n\t()ab";
    for (int trial = 0; trial < 1000; ++trial) {
        auto text = render_poly(t::random_poly(rng, 3, 6, 5));
        const auto edits = t::uniform_int(rng, 1, 5);
        for (std::int64_t e = 0; e < edits; ++e) {
            const auto pos = static_cast<std::size_t>(t::uniform_int(rng, 0, static_cast<std::int64_t>(text.size())));
            const auto ch = alphabet[static_cast<std::size_t>(t::uniform_int(rng, 0, static_cast<std::int64_t>(alphabet.size()) - 1))];
            switch (t::uniform_int(rng, 0, 2)) {
            case 0: text.insert(pos, 1, ch); break;
            case 1: if (pos < text.size()) text.erase(pos, 1); break;
            default: if (pos < text.size()) text[pos] = ch; break;
            }
        }
        try {
            parse_poly(text);
        } catch (const ParseError&) {
            // rejected cleanly
        }
    }
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void()>>> criteria{
        {"golden decomposition of (x1^2 + x2)^2 and traces", criterion_1},
        {"worked two-variable golden decomposition", criterion_2},
        {"family splitting for mu = -1, -2 and E(f)", criterion_3},
        {"Stein-Lorenzini-Najib check on worked data", criterion_4},
        {"200 random round trips", criterion_5},
        {"dual V0 characterization on 200 supports", criterion_6},
        {"dependence certificates", criterion_7},
        {"saturation of {(1,0),(1,m)}", criterion_8},
        {"parser fuzz", criterion_9},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = Clock::now();
        std::string detail;
        try {
            criteria[i].second();
        } catch (const Failure& f) {
            detail = f.detail;
        } catch (const std::exception& e) {
            detail = std::string("unexpected exception: ") + e.what();
        }
        const bool ok = detail.empty();
        failures += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << seconds_since(start) << " s)";
        if (!ok) {
            std::cout << " -- " << detail;
        }
        std::cout << "\n";
    }
    return failures == 0 ? 0 : 1;
}
