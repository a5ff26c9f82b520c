#include "app.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "closedpoly/decompose.hpp"
#include "closedpoly/dependence.hpp"
#include "closedpoly/error.hpp"
#include "closedpoly/family.hpp"
#include "closedpoly/monoid.hpp"
#include "closedpoly/newton.hpp"
#include "closedpoly/normal_form.hpp"
#include "closedpoly/text.hpp"

namespace closedpoly::cli {

namespace {

using nlohmann::json;

std::string read_source(const std::string& path, std::istream& in) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) {
        throw DomainError("cannot open '" + path + "'");
    }
    buffer << file.rdbuf();
    return buffer.str();
}

MultiPoly read_poly(const std::string& path, std::istream& in) {
    return parse_poly(read_source(path, in)).poly;
}

std::string trace_name(AttemptOutcome o) {
    return o == AttemptOutcome::verified ? "verified" : "mismatch";
}

std::string vector_string(const std::vector<std::uint64_t>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + std::to_string(v[i]);
    }
    return out + ")";
}

json monomial_list(const std::vector<Monomial>& ms) {
    json out = json::array();
    for (const auto& m : ms) {
        out.push_back(m.to_string());
    }
    return out;
}

std::string set_string(const std::set<Rational>& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& x : s) {
        out += (first ? "" : ", ") + x.to_string();
        first = false;
    }
    return out + "}";
}

std::set<Rational> parse_rational_list(const std::string& text) {
    std::set<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = std::min(text.find(',', start), text.size());
        out.insert(Rational::from_string(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

struct Options {
    std::string poly;
    std::string f;
    std::string g;
    std::string order = "grlex";
    std::string mu;
    std::string eh;
    std::string data;
    std::string mode;
    std::string gens;
    std::int64_t d = 0;
    std::int64_t bound = 0;
    bool no_newton = false;
    bool json = false;
};

int cmd_decompose(const Options& o, std::istream& in, std::ostream& out) {
    const MultiPoly f = read_poly(o.poly, in);
    const OrderSpec order = parse_order(o.order);
    DecomposeOptions opts;
    opts.pruned = !o.no_newton;
    const auto r = generative(f, order, opts);
    if (o.json) {
        json trace = json::array();
        for (const auto& t : r.trace) {
            trace.push_back({{"divisor", t.divisor}, {"outcome", trace_name(t.outcome)}});
        }
        out << json{{"command", "decompose"},
                    {"input", render_poly(f, order)},
                    {"order", order.name()},
                    {"pruned", opts.pruned},
                    {"h", render_poly(r.h, order)},
                    {"F", r.outer.to_string()},
                    {"closed", r.closed},
                    {"trace", trace}}
                   .dump(2)
            << "\n";
        return kSuccess;
    }
    out << "h      = " << render_poly(r.h, order) << "\n";
    out << "F(t)   = " << r.outer.to_string() << "\n";
    out << "closed = " << (r.closed ? "true" : "false") << "\n";
    out << "trace  =";
    if (r.trace.empty()) {
        out << " (none)";
    }
    for (const auto& t : r.trace) {
        out << " (" << t.divisor << ", " << trace_name(t.outcome) << ")";
    }
    out << "\n";
    return kSuccess;
}

int cmd_is_closed(const Options& o, std::istream& in, std::ostream& out) {
    const MultiPoly f = read_poly(o.poly, in);
    const OrderSpec order = parse_order(o.order);
    if (f.is_constant()) {
        throw DomainError("closedness is undefined for constants");
    }
    const auto d = multiplicity(leading_monomial(f, order).first);
    const bool fast = d == 1;
    const bool closed = fast || is_closed(f, order);
    if (o.json) {
        out << json{{"command", "is-closed"}, {"closed", closed}, {"fast_path", fast}, {"leading_multiplicity", d}}
                   .dump(2)
            << "\n";
    } else {
        out << (closed ? "closed" : "not closed") << (fast ? " (fast path: leading multiplicity 1)" : "") << "\n";
    }
    return kSuccess;
}

int cmd_newton(const Options& o, std::istream& in, std::ostream& out) {
    const MultiPoly f = read_poly(o.poly, in);
    const OrderSpec order = parse_order(o.order);
    const auto s = analyze(f, order);
    json weights = json::array();
    std::vector<std::string> weight_lines;
    for (const auto& v : s.v0) {
        const auto w = realizing_weights(s.support, v);
        if (!w) {
            throw InternalError("V0 element without realizing weights");
        }
        json ws = json::array();
        std::string line = v.to_string() + ": (";
        for (std::size_t i = 0; i < w->weights.size(); ++i) {
            ws.push_back(w->weights[i].to_string());
            line += (i ? ", " : "") + w->weights[i].to_string();
        }
        weights.push_back({{"monomial", v.to_string()}, {"weights", ws}});
        weight_lines.push_back(line + ")");
    }
    if (o.json) {
        out << json{{"command", "newton"},
                    {"support", monomial_list(s.support)},
                    {"v0", monomial_list(s.v0)},
                    {"d_leading", s.d_leading},
                    {"d1", s.d1},
                    {"D", s.divisors_plain},
                    {"D1", s.divisors_pruned},
                    {"weights", weights}}
                   .dump(2)
            << "\n";
        return kSuccess;
    }
    auto join = [](const std::vector<Monomial>& ms) {
        std::string r;
        for (std::size_t i = 0; i < ms.size(); ++i) {
            r += (i ? ", " : "") + ms[i].to_string();
        }
        return r;
    };
    out << "support   = {" << join(s.support) << "}\n";
    out << "V0        = {" << join(s.v0) << "}\n";
    out << "d(lead)   = " << s.d_leading << "\n";
    out << "d1        = " << s.d1 << "\n";
    out << "D(f)      = " << vector_string(s.divisors_plain) << "\n";
    out << "D1(f)     = " << vector_string(s.divisors_pruned) << "\n";
    for (const auto& l : weight_lines) {
        out << "weights   " << l << "\n";
    }
    return kSuccess;
}

int cmd_depend(const Options& o, std::istream& in, std::ostream& out) {
    MultiPoly f = read_poly(o.f, in);
    MultiPoly g = read_poly(o.g, in);
    const std::size_t n = std::max(f.nvars(), g.nvars());
    f = f.extended(n);
    g = g.extended(n);
    const auto minors = jacobian_minors(f, g);
    json nonzero = json::array();
    std::vector<std::string> lines;
    for (const auto& [ij, m] : minors) {
        if (m.is_zero()) {
            continue;
        }
        nonzero.push_back({{"i", ij.first + 1}, {"j", ij.second + 1}, {"minor", render_poly(m)}});
        lines.push_back("(" + std::to_string(ij.first + 1) + "," + std::to_string(ij.second + 1) +
                        "): " + render_poly(m));
    }
    const bool dependent = lines.empty();
    if (o.json) {
        out << json{{"command", "depend"}, {"dependent", dependent}, {"nonzero_minors", nonzero}}.dump(2) << "\n";
        return kSuccess;
    }
    out << (dependent ? "dependent" : "independent") << "\n";
    for (const auto& l : lines) {
        out << "minor " << l << "\n";
    }
    return kSuccess;
}

int cmd_family(const Options& o, std::istream& in, std::ostream& out) {
    const MultiPoly f = read_poly(o.poly, in);
    const Rational mu = Rational::from_string(o.mu);
    const auto r = generative(f);
    const auto fam = factor_shift(r, mu);
    std::optional<std::set<Rational>> ef;
    if (!o.eh.empty()) {
        ef = exceptional_image(r.outer, parse_rational_list(o.eh));
    }
    if (o.json) {
        json shifts = json::array();
        for (const auto& s : fam.shifts) {
            shifts.push_back({{"lambda", s.value.to_string()}, {"multiplicity", s.multiplicity}});
        }
        json doc{{"command", "family"},
                 {"h", render_poly(r.h)},
                 {"F", r.outer.to_string()},
                 {"mu", fam.mu.to_string()},
                 {"alpha", fam.alpha.to_string()},
                 {"shifts", shifts},
                 {"residual", fam.residual.to_string()},
                 {"verified", fam.verified}};
        if (ef) {
            json e = json::array();
            for (const auto& x : *ef) {
                e.push_back(x.to_string());
            }
            doc["E_f"] = e;
        }
        out << doc.dump(2) << "\n";
        return kSuccess;
    }
    out << "h        = " << render_poly(r.h) << "\n";
    out << "F(t)     = " << r.outer.to_string() << "\n";
    out << "mu       = " << fam.mu << "\n";
    out << "alpha    = " << fam.alpha << "\n";
    out << "shifts   =";
    if (fam.shifts.empty()) {
        out << " (none)";
    }
    for (const auto& s : fam.shifts) {
        out << " (" << s.value << ", " << s.multiplicity << ")";
    }
    out << "\n";
    out << "residual = " << fam.residual.to_string() << "\n";
    out << "verified = " << (fam.verified ? "true" : "false") << "\n";
    if (ef) {
        out << "E(f)     = " << set_string(*ef) << "\n";
    }
    return kSuccess;
}

int cmd_stein(const Options& o, std::istream& in, std::ostream& out) {
    auto data = parse_decomposition_data(read_source(o.data, in));
    if (o.d < 0) {
        throw DomainError("--d must be positive");
    }
    if (o.d > 0) {
        data.d = static_cast<std::uint64_t>(o.d);
    }
    const SteinMode mode = o.mode == "f" ? SteinMode::f_form : SteinMode::h_form;
    const auto report = stein_check(data, mode);
    if (o.json) {
        out << json{{"command", "stein"},
                    {"mode", o.mode},
                    {"lhs", report.lhs.to_string()},
                    {"rhs", report.rhs.to_string()},
                    {"holds", report.holds}}
                   .dump(2)
            << "\n";
    } else {
        out << "lhs   = " << report.lhs << "\n";
        out << "rhs   = " << report.rhs << "\n";
        out << "holds = " << (report.holds ? "true" : "false") << "\n";
    }
    return kSuccess;
}

int cmd_saturate(const Options& o, std::ostream& out, std::ostream& err) {
    const auto gens = make_monoid_gens(parse_generators(o.gens), o.bound);
    const auto basis = saturation_generators(gens);
    const bool saturated = is_saturated(gens);
    const std::string warning =
        gens.nvars >= 3 ? "enumeration bound is heuristic for 3 or more variables; raise --bound to confirm" : "";
    if (o.json) {
        json doc{{"command", "saturate"}, {"generators", basis}, {"saturated", saturated}, {"bound", gens.bound}};
        if (!warning.empty()) {
            doc["warning"] = warning;
        }
        out << doc.dump(2) << "\n";
        return kSuccess;
    }
    if (!warning.empty()) {
        err << "warning: " << warning << "\n";
    }
    out << "generators =";
    for (const auto& v : basis) {
        out << " (";
        for (std::size_t i = 0; i < v.size(); ++i) {
            out << (i ? "," : "") << v[i];
        }
        out << ")";
    }
    out << "\n";
    out << "saturated  = " << (saturated ? "true" : "false") << "\n";
    return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closed polynomials: generative polynomials, Newton pruning, families f + mu, saturation"};
    app.require_subcommand(1);
    Options o;

    auto* decompose = app.add_subcommand("decompose", "Generative polynomial h and outer F with f = F(h)");
    decompose->add_option("--poly", o.poly, "Polynomial file, or - for stdin")->required();
    decompose->add_option("--order", o.order, "Monomial order")->check(CLI::IsMember({"grlex", "grevlex"}));
    decompose->add_flag("--no-newton", o.no_newton, "Walk all divisors of the leading multiplicity");
    decompose->add_flag("--json", o.json, "Machine-readable output");

    auto* closed = app.add_subcommand("is-closed", "Decide closedness");
    closed->add_option("--poly", o.poly, "Polynomial file, or - for stdin")->required();
    closed->add_option("--order", o.order, "Monomial order")->check(CLI::IsMember({"grlex", "grevlex"}));
    closed->add_flag("--json", o.json, "Machine-readable output");

    auto* newton = app.add_subcommand("newton", "Newton polytope summary: V0, d1, D(f), D1(f)");
    newton->add_option("--poly", o.poly, "Polynomial file, or - for stdin")->required();
    newton->add_option("--order", o.order, "Monomial order")->check(CLI::IsMember({"grlex", "grevlex"}));
    newton->add_flag("--json", o.json, "Machine-readable output");

    auto* depend = app.add_subcommand("depend", "Jacobian test for algebraic dependence");
    depend->add_option("--f", o.f, "First polynomial file")->required();
    depend->add_option("--g", o.g, "Second polynomial file")->required();
    depend->add_flag("--json", o.json, "Machine-readable output");

    auto* family = app.add_subcommand("family", "Split f + mu through the generative polynomial");
    family->add_option("--poly", o.poly, "Polynomial file, or - for stdin")->required();
    family->add_option("--mu", o.mu, "Rational shift")->required();
    family->add_option("--eh", o.eh, "Exceptional set of h, comma-separated rationals");
    family->add_flag("--json", o.json, "Machine-readable output");

    auto* stein = app.add_subcommand("stein", "Check the Stein-Lorenzini-Najib inequality on factorization data");
    stein->add_option("--data", o.data, "Data file: 'shift: deg^mult, ...' per line")->required();
    stein->add_option("--mode", o.mode, "h or f")->required()->check(CLI::IsMember({"h", "f"}));
    stein->add_option("--d", o.d, "Generic factor degree (f mode)");
    stein->add_flag("--json", o.json, "Machine-readable output");

    auto* saturate = app.add_subcommand("saturate", "Saturation of a monomial subalgebra");
    saturate->add_option("--gens", o.gens, "Exponent vectors 'a1,b1;a2,b2;...'")->required();
    saturate->add_option("--bound", o.bound, "Coordinate-sum bound for enumeration");
    saturate->add_flag("--json", o.json, "Machine-readable output");

    std::vector<std::string> argv_storage{"closedpoly"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kDomainError;
    }

    try {
        if (*decompose) {
            return cmd_decompose(o, in, out);
        }
        if (*closed) {
            return cmd_is_closed(o, in, out);
        }
        if (*newton) {
            return cmd_newton(o, in, out);
        }
        if (*depend) {
            return cmd_depend(o, in, out);
        }
        if (*family) {
            return cmd_family(o, in, out);
        }
        if (*stein) {
            return cmd_stein(o, in, out);
        }
        return cmd_saturate(o, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const InternalError& e) {
        err << "internal verification failure: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }
}

} // namespace closedpoly::cli
