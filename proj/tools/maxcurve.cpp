// Command-line front end: exact point counts, maximality checks, Artin
// character values, quotient ramification, profile enumeration and
// degree-feasibility reports, with machine-readable output.
//
// Exit codes: 0 success, 1 usage or budget error, 2 verification failure.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxcurves/covers.hpp"
#include "maxcurves/curves.hpp"
#include "maxcurves/feasibility.hpp"
#include "maxcurves/fields.hpp"
#include "maxcurves/stabilizer.hpp"
#include "maxcurves/util.hpp"

using json = nlohmann::ordered_json;
using namespace maxcurves;

namespace {

struct TableData {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void emit(const json& j, const TableData& t, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        for (std::size_t i = 0; i < t.header.size(); ++i)
            std::cout << t.header[i] << (i + 1 < t.header.size() ? "," : "\n");
        for (const auto& row : t.rows)
            for (std::size_t i = 0; i < row.size(); ++i)
                std::cout << row[i] << (i + 1 < row.size() ? "," : "\n");
        return;
    }
    // fixed-width table
    std::vector<std::size_t> width(t.header.size());
    for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
    for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            std::cout << cells[i] << std::string(width[i] - cells[i].size(), ' ')
                      << (i + 1 < cells.size() ? "  " : "\n");
        }
    };
    line(t.header);
    for (const auto& row : t.rows) line(row);
}

json field_json(const Field& f) {
    return json{{"p", f.p()}, {"m", f.m()}, {"modulus", f.spec().modulus}};
}

std::vector<Residue> parse_coeffs(const std::string& s) {
    std::vector<Residue> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw InvalidArgumentError("empty coefficient in list: " + s);
        out.push_back(static_cast<Residue>(std::stoul(tok)));
    }
    if (out.empty()) throw InvalidArgumentError("empty coefficient list");
    return out;
}

CurveFamily parse_family(const std::string& name) {
    if (name == "hermitian") return CurveFamily::Hermitian;
    if (name == "ggk") return CurveFamily::GGK;
    if (name == "xn") return CurveFamily::Xn;
    if (name == "yrem") return CurveFamily::Y;
    throw InvalidArgumentError("unknown family '" + name +
                               "' (expected hermitian, ggk, xn or yrem)");
}

struct Params {
    std::uint64_t Q = 0;  // 0 = unset
    std::uint64_t q = 0;
    std::uint32_t n = 0;
};

void require_prime_power(std::uint64_t v, const char* name) {
    if (v < 2 || !prime_power(v))
        throw InvalidArgumentError(std::string(name) + " must be a prime power >= 2");
}

void require_odd_n(std::uint32_t n) {
    if (n < 3 || n % 2 == 0)
        throw InvalidArgumentError("n must be odd and >= 3 for this family");
}

/// Q for Hermitian-only analyses; accepts --Q or (--q, --n) and cross-checks
/// when both are present.
std::uint64_t resolve_q_only(const Params& p) {
    if (p.Q != 0) {
        require_prime_power(p.Q, "Q");
        if (p.q != 0) {
            std::uint64_t qn = ipow(p.q, p.n == 0 ? 1 : p.n);
            if (qn != p.Q) throw InvalidArgumentError("--Q disagrees with --q/--n");
        }
        return p.Q;
    }
    if (p.q != 0) {
        require_prime_power(p.q, "q");
        return ipow(p.q, p.n == 0 ? 1 : p.n);
    }
    throw InvalidArgumentError("missing --Q (or --q/--n)");
}

void resolve_family_params(const Params& p, std::uint64_t& q, std::uint32_t& n) {
    if (p.q == 0) throw InvalidArgumentError("this family needs --q (and --n)");
    require_prime_power(p.q, "q");
    if (p.n == 0) throw InvalidArgumentError("this family needs --n");
    require_odd_n(p.n);
    if (p.Q != 0 && ipow(p.q, p.n) != p.Q)
        throw InvalidArgumentError("--Q disagrees with --q/--n");
    q = p.q;
    n = p.n;
}

CurveModel build_model(CurveFamily fam, const Params& p) {
    switch (fam) {
        case CurveFamily::Hermitian: return make_hermitian(resolve_q_only(p));
        case CurveFamily::GGK: {
            std::uint64_t q;
            std::uint32_t n;
            resolve_family_params(p, q, n);
            return make_ggk(q, n);
        }
        case CurveFamily::Xn: {
            std::uint64_t q;
            std::uint32_t n;
            resolve_family_params(p, q, n);
            return make_xn(q, n);
        }
        case CurveFamily::Y: {
            if (p.q == 0) throw InvalidArgumentError("family yrem needs --q");
            require_prime_power(p.q, "q");
            return make_y(p.q);
        }
    }
    throw InvalidArgumentError("unknown family");
}

json model_params_json(const CurveModel& m) {
    json j;
    j["family"] = to_string(m.family);
    if (m.family == CurveFamily::Hermitian) {
        j["Q"] = m.q;
    } else {
        j["q"] = m.q;
        if (m.family != CurveFamily::Y) j["n"] = m.n;
        j["Q"] = m.sqrt_size;
    }
    return j;
}

int run_count(CurveFamily fam, const Params& p, std::optional<std::uint64_t> genus_override,
              const EnumerationBudget& budget, unsigned workers, const std::string& format,
              bool verify) {
    CurveModel model = build_model(fam, p);
    if (genus_override) model.genus = *genus_override;
    PointCount pc = check_maximal(model, budget, workers);

    json j;
    j["subcommand"] = verify ? "maximality" : "count";
    json params = model_params_json(model);
    for (auto& [k, v] : params.items()) j[k] = v;
    j["genus"] = model.genus;
    j["field"] = field_json(*model.field);
    j["count"] = json{{"affine", pc.affine},
                      {"at_infinity", pc.at_infinity},
                      {"total", pc.total},
                      {"target", pc.hasse_weil_target},
                      {"maximal", pc.maximal}};

    TableData t;
    t.header = {"family", "q",      "n",     "Q",      "genus",  "affine",
                "at_inf", "total",  "target", "maximal"};
    t.rows = {{to_string(model.family), std::to_string(model.q), std::to_string(model.n),
               std::to_string(model.sqrt_size), std::to_string(model.genus),
               std::to_string(pc.affine), std::to_string(pc.at_infinity),
               std::to_string(pc.total), std::to_string(pc.hasse_weil_target),
               pc.maximal ? "true" : "false"}};
    emit(j, t, format);
    if (verify && !pc.maximal) {
        std::cerr << "verification failed: total " << pc.total
                  << " does not attain the Hasse-Weil target " << pc.hasse_weil_target
                  << "\n";
        return 2;
    }
    return 0;
}

int run_isigma(std::uint64_t Q, const std::string& sa, const std::string& sb,
               const std::string& sc, const std::string& format) {
    HermitianStabilizer H(Q);
    const Field& F = H.field();
    StabilizerElement s = H.make(F.from_coeffs(parse_coeffs(sa)),
                                 F.from_coeffs(parse_coeffs(sb)),
                                 F.from_coeffs(parse_coeffs(sc)));
    ArtinValue av = H.artin_formula(s);
    bool wild = s.a.is_one();
    std::uint64_t oracle = wild ? H.artin_wild_valuation(s) : H.artin_fixed_point_count(s);
    bool agree = oracle == av.value;

    json j;
    j["subcommand"] = "isigma";
    j["Q"] = Q;
    j["field"] = field_json(F);
    j["element"] = json{{"a", s.a.coeffs()}, {"b", s.b.coeffs()}, {"c", s.c.coeffs()}};
    j["i"] = av.value;
    j["case_tag"] = to_string(av.case_tag);
    j["order"] = H.element_order(s);
    j["oracle"] = wild ? "wild-valuation" : "fixed-point-count";
    j["oracle_i"] = oracle;
    j["oracle_agreement"] = agree;

    TableData t;
    t.header = {"Q", "i", "case", "order", "oracle_i", "agreement"};
    t.rows = {{std::to_string(Q), std::to_string(av.value), to_string(av.case_tag),
               std::to_string(H.element_order(s)), std::to_string(oracle),
               agree ? "true" : "false"}};
    emit(j, t, format);
    if (!agree) {
        std::cerr << "verification failed: formula value " << av.value
                  << " disagrees with the oracle value " << oracle << "\n";
        return 2;
    }
    return 0;
}

int run_quotient(std::uint64_t Q, const std::vector<std::string>& gens, std::size_t cap,
                 const std::string& format) {
    HermitianStabilizer H(Q);
    const Field& F = H.field();
    std::vector<StabilizerElement> generators;
    for (const std::string& g : gens) {
        std::stringstream ss(g);
        std::string pa, pb, pc;
        if (!std::getline(ss, pa, '|') || !std::getline(ss, pb, '|') ||
            !std::getline(ss, pc, '|'))
            throw InvalidArgumentError("generator must look like a0,a1|b0,b1|c0,c1");
        generators.push_back(H.make(F.from_coeffs(parse_coeffs(pa)),
                                    F.from_coeffs(parse_coeffs(pb)),
                                    F.from_coeffs(parse_coeffs(pc))));
    }
    if (generators.empty()) throw InvalidArgumentError("need at least one --gen");
    SubgroupWitness G = SubgroupWitness::generate(H, generators, cap);
    RamificationProfile prof = ramification_profile(H, G);
    std::uint64_t genus = quotient_genus(H, G);

    json j;
    j["subcommand"] = "quotient";
    j["Q"] = Q;
    j["generators"] = gens.size();
    j["order"] = G.order();
    j["degR"] = prof.deg_r();
    j["genus"] = genus;
    j["profile"] = json{{"n0", prof.n[0]}, {"n1", prof.n[1]}, {"n2", prof.n[2]},
                        {"n3", prof.n[3]}, {"nQ1", prof.n[4]}, {"nQ2", prof.n[5]}};
    j["u"] = prof.u();
    j["v"] = prof.v();

    TableData t;
    t.header = {"Q", "order", "degR", "genus", "n0", "n1", "n2", "n3", "nQ1", "nQ2"};
    t.rows = {{std::to_string(Q), std::to_string(G.order()), std::to_string(prof.deg_r()),
               std::to_string(genus), std::to_string(prof.n[0]), std::to_string(prof.n[1]),
               std::to_string(prof.n[2]), std::to_string(prof.n[3]),
               std::to_string(prof.n[4]), std::to_string(prof.n[5])}};
    emit(j, t, format);
    return 0;
}

int run_profile(const Params& p, std::uint64_t genus, std::uint64_t d, bool stabilizer_only,
                std::size_t max_results, const std::string& format) {
    std::uint64_t Q = resolve_q_only(p);
    ProfileOptions opts{stabilizer_only};
    auto sols = profile_solutions(Q, static_cast<std::int64_t>(genus), d, opts, max_results);
    std::int64_t need = static_cast<std::int64_t>((Q - 2) * (Q + 1)) -
                        static_cast<std::int64_t>(d) * (2 * static_cast<std::int64_t>(genus) - 2);

    json j;
    j["subcommand"] = "profile";
    j["Q"] = Q;
    j["genus"] = genus;
    j["d"] = d;
    j["degR"] = need;
    j["profiles"] = json::array();
    for (const auto& s : sols) j["profiles"].push_back(s);

    TableData t;
    t.header = {"n0", "n1", "n2", "n3", "nQ1", "nQ2", "degR"};
    for (const auto& s : sols)
        t.rows.push_back({std::to_string(s[0]), std::to_string(s[1]), std::to_string(s[2]),
                          std::to_string(s[3]), std::to_string(s[4]), std::to_string(s[5]),
                          std::to_string(need)});
    emit(j, t, format);
    return 0;
}

int run_feasible(const Params& p, const std::string& family, std::optional<std::uint64_t> genus,
                 const std::string& format) {
    std::uint64_t Q = 0;
    std::uint64_t g = 0;
    std::optional<std::string> tag;
    json params;
    if (!family.empty()) {
        CurveFamily fam = parse_family(family);
        switch (fam) {
            case CurveFamily::Hermitian:
                Q = resolve_q_only(p);
                g = genus.value_or(genus_hermitian(Q));
                break;
            case CurveFamily::GGK: {
                std::uint64_t q;
                std::uint32_t n;
                resolve_family_params(p, q, n);
                Q = ipow(q, n);
                g = genus.value_or(genus_ggk(q, n));
                if (!genus) tag = q >= 3 ? "1.1" : (n >= 5 ? "1.2" : std::string());
                params["q"] = q;
                params["n"] = n;
                break;
            }
            case CurveFamily::Xn: {
                std::uint64_t q;
                std::uint32_t n;
                resolve_family_params(p, q, n);
                Q = ipow(q, n);
                g = genus.value_or(genus_xn(q, n));
                if (!genus && q >= 3) tag = "1.3";
                params["q"] = q;
                params["n"] = n;
                break;
            }
            case CurveFamily::Y: {
                if (p.q == 0) throw InvalidArgumentError("family yrem needs --q");
                require_prime_power(p.q, "q");
                Q = p.q * p.q * p.q;
                g = genus.value_or(genus_y(p.q));
                params["q"] = p.q;
                break;
            }
        }
        params["family"] = family;
    } else {
        Q = resolve_q_only(p);
        if (!genus) throw InvalidArgumentError("need --genus or --family");
        g = *genus;
    }
    if (tag && tag->empty()) tag.reset();

    FeasibilityReport rep = feasible_degrees(Q, g);
    rep.theorem_tag = tag;

    json j;
    j["subcommand"] = "feasible";
    for (auto& [k, v] : params.items()) j[k] = v;
    j["Q"] = Q;
    j["genus"] = g;
    j["A"] = rep.gc.A;
    j["B"] = rep.gc.B;
    j["k"] = rep.gc.k;
    json bounds;
    bounds["splitting"] = rep.lower_splitting;
    if (rep.lower_lemcov) bounds["lemcov"] = *rep.lower_lemcov;
    if (rep.lower_lemcov_corollary) bounds["lemcov_corollary"] = *rep.lower_lemcov_corollary;
    if (rep.lower_proplb) bounds["proplb"] = *rep.lower_proplb;
    if (rep.upper_hurwitz) bounds["hurwitz"] = *rep.upper_hurwitz;
    j["bounds"] = bounds;
    j["feasible"] = rep.feasible;
    j["unbounded"] = rep.unbounded;
    if (rep.unbounded) {
        j["lower"] = rep.lower();
        j["warning"] = "genus below 2: no Hurwitz cap, the interval is unbounded above";
    }
    j["eliminated"] = json::array();
    for (const auto& e : rep.eliminated)
        j["eliminated"].push_back(json{{"d", e.d}, {"reason", to_string(e.reason)}});
    if (rep.theorem_tag) j["theorem"] = *rep.theorem_tag;

    TableData t;
    t.header = {"q", "n", "d", "status"};
    std::string qs = params.contains("q") ? params["q"].dump() : std::to_string(Q);
    std::string ns = params.contains("n") ? params["n"].dump() : "-";
    for (const auto& e : rep.eliminated)
        t.rows.push_back({qs, ns, std::to_string(e.d), to_string(e.reason)});
    for (std::int64_t d : rep.feasible)
        t.rows.push_back({qs, ns, std::to_string(d), "feasible"});
    emit(j, t, format);
    return 0;
}

int run_theorem(const std::string& id, std::vector<std::uint64_t> qs,
                std::vector<std::uint32_t> ns, const std::string& format) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> sweep;
    if (qs.empty() && ns.empty()) {
        sweep = theorem_default_sweep(id);
    } else {
        if (qs.empty() || ns.empty())
            throw InvalidArgumentError("give both --q and --n lists, or neither");
        for (std::uint64_t q : qs)
            for (std::uint32_t n : ns) sweep.emplace_back(q, n);
    }

    json rows = json::array();
    TableData t;
    t.header = {"q", "n", "pass", "detail"};
    bool all_pass = true;
    for (auto [q, n] : sweep) {
        TheoremRow row = check_theorem(id, q, n);
        all_pass = all_pass && row.pass;
        json r;
        r["q"] = q;
        r["n"] = n;
        r["pass"] = row.pass;
        r["detail"] = row.detail;
        r["feasible"] = row.report.feasible;
        rows.push_back(r);
        t.rows.push_back({std::to_string(q), std::to_string(n), row.pass ? "pass" : "FAIL",
                          row.detail});
    }

    json j;
    j["subcommand"] = "theorem";
    j["id"] = id;
    j["rows"] = rows;
    j["pass"] = all_pass;
    emit(j, t, format);
    if (!all_pass) {
        std::cerr << "verification failed: at least one sweep row does not match\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification tooling for maximal curves and Hermitian-curve quotients"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    unsigned workers = 1;
    EnumerationBudget budget;
    if (const char* env = std::getenv("MAXCURVE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) budget.max_ops = v;
    }

    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    app.add_option("--workers", workers, "parallel workers for counting")->capture_default_str();
    app.add_option("--budget", budget.max_ops, "maximum enumeration steps");
    app.add_option("--field-budget", budget.max_field_size, "maximum field size");

    Params P;
    std::string family;
    std::optional<std::uint64_t> genus_opt;
    std::uint64_t genus_raw = 0;

    auto add_params = [&](CLI::App* sub, bool with_family) {
        sub->add_option("--Q", P.Q, "Hermitian parameter Q = q^n");
        sub->add_option("--q", P.q, "base prime power q");
        sub->add_option("--n", P.n, "odd extension exponent n");
        if (with_family) sub->add_option("--family", family, "hermitian, ggk, xn or yrem");
    };

    auto* count = app.add_subcommand("count", "exact rational point count");
    add_params(count, true);
    auto* count_genus = count->add_option("--genus", genus_raw, "genus override");

    auto* maximality = app.add_subcommand("maximality", "check the Hasse-Weil bound is attained");
    add_params(maximality, true);
    auto* max_genus = maximality->add_option("--genus", genus_raw, "genus override");

    auto* isigma = app.add_subcommand("isigma", "Artin value of a stabilizer element");
    std::string ea, eb, ec;
    isigma->add_option("--Q", P.Q, "Hermitian parameter")->required();
    isigma->add_option("--a", ea, "coefficients of a, constant first")->required();
    isigma->add_option("--b", eb, "coefficients of b")->required();
    isigma->add_option("--c", ec, "coefficients of c")->required();

    auto* quotient = app.add_subcommand("quotient", "ramification data of a generated subgroup");
    std::vector<std::string> gens;
    std::size_t cap = 10000;
    quotient->add_option("--Q", P.Q, "Hermitian parameter")->required();
    quotient->add_option("--gen", gens, "generator a0,..|b0,..|c0,..")->required();
    quotient->add_option("--cap", cap, "closure size cap")->capture_default_str();

    auto* profile = app.add_subcommand("profile", "admissible ramification profiles");
    add_params(profile, false);
    std::uint64_t prof_d = 0;
    bool stabilizer_only = false;
    std::size_t max_results = 200000;
    profile->add_option("--genus", genus_raw, "target genus")->required();
    profile->add_option("--d", prof_d, "covering degree")->required();
    profile->add_flag("--stabilizer-only", stabilizer_only,
                      "restrict to groups fixing a rational point (n0 = 0)");
    profile->add_option("--max-results", max_results, "cap on listed profiles");

    auto* feasible = app.add_subcommand("feasible", "feasible Galois covering degrees");
    add_params(feasible, true);
    auto* feas_genus = feasible->add_option("--genus", genus_raw, "explicit genus");

    auto* theorem = app.add_subcommand("theorem", "named verification sweeps (1.1, 1.2, 1.3)");
    std::string theorem_id;
    std::vector<std::uint64_t> tqs;
    std::vector<std::uint32_t> tns;
    theorem->add_option("--id", theorem_id, "1.1, 1.2 or 1.3")->required();
    theorem->add_option("--q", tqs, "q values");
    theorem->add_option("--n", tns, "n values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    }
    if (workers == 0) {
        std::cerr << "usage error: --workers must be positive\n";
        return 1;
    }
    if (budget.max_ops == 0 || budget.max_field_size == 0) {
        std::cerr << "usage error: budgets must be positive\n";
        return 1;
    }

    try {
        if (count->parsed()) {
            if (family.empty()) throw InvalidArgumentError("count needs --family");
            if (*count_genus) genus_opt = genus_raw;
            return run_count(parse_family(family), P, genus_opt, budget, workers, format,
                             false);
        }
        if (maximality->parsed()) {
            if (family.empty()) throw InvalidArgumentError("maximality needs --family");
            if (*max_genus) genus_opt = genus_raw;
            return run_count(parse_family(family), P, genus_opt, budget, workers, format,
                             true);
        }
        if (isigma->parsed()) return run_isigma(P.Q, ea, eb, ec, format);
        if (quotient->parsed()) return run_quotient(P.Q, gens, cap, format);
        if (profile->parsed())
            return run_profile(P, genus_raw, prof_d, stabilizer_only, max_results, format);
        if (feasible->parsed()) {
            if (*feas_genus) genus_opt = genus_raw;
            return run_feasible(P, family, genus_opt, format);
        }
        if (theorem->parsed()) return run_theorem(theorem_id, tqs, tns, format);
        std::cerr << "usage error: no subcommand\n";
        return 1;
    } catch (const BudgetExceededError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 1;
    } catch (const InvalidArgumentError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    }
}
