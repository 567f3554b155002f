#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "iterfact/classify.hpp"
#include "iterfact/closedform.hpp"
#include "iterfact/parse.hpp"
#include "iterfact/profile.hpp"
#include "iterfact/verify.hpp"

using namespace iterfact;
using ordered_json = nlohmann::ordered_json;

namespace {

// exit codes: 0 ok, 2 usage/parse, 3 degree cap, 4 degenerate pair,
// 5 assertion failure, 6 witness exhausted
int exit_code_for(const error& e) {
    switch (e.code()) {
        case errc::degree_overflow:
        case errc::field_cap_exceeded:
            return 3;
        case errc::not_generic:
            return 4;
        case errc::witness_search_exhausted:
            return 6;
        case errc::internal:
        case errc::overflow:
            return 1;
        default:
            return 2;
    }
}

struct FieldArgs {
    std::string field_text;
    std::string modulus_text;

    FieldPtr build() const {
        auto [p, m] = parse_field_text(field_text);
        if (modulus_text.empty()) return make_field(p, m);
        FieldPtr prime = make_field(p, 1);
        Poly mod = parse_poly(modulus_text, prime, 't');
        std::vector<u64> coeffs;
        for (int i = 0; i <= mod.degree(); ++i) coeffs.push_back(mod.coeff((u64)i).c[0]);
        return make_field(p, m, coeffs);
    }
};

struct GSpec {
    enum class Kind { plain, monomial, linearized, expgrowth } kind = Kind::plain;
    std::string text;
    u64 D = 0;

    static GSpec parse_text(const std::string& s) {
        GSpec out;
        if (s.rfind("monomial:", 0) == 0) {
            out.kind = Kind::monomial;
            out.text = s.substr(9);
            try {
                size_t used = 0;
                out.D = std::stoull(out.text, &used);
                if (used != out.text.size()) throw std::invalid_argument("");
            } catch (...) {
                fail(errc::parse_error, "monomial: expects an integer degree");
            }
        } else if (s.rfind("linearized:", 0) == 0) {
            out.kind = Kind::linearized;
            out.text = s.substr(11);
        } else if (s == "construction:expgrowth") {
            out.kind = Kind::expgrowth;
        } else {
            out.text = s;
        }
        return out;
    }

    // the polynomial actually composed
    Poly resolve(const FieldPtr& F, u64 cap) const {
        switch (kind) {
            case Kind::plain:
                return parse_poly(text, F, 'x', cap);
            case Kind::monomial:
                return Poly::monomial(F, D, one_elem(F));
            case Kind::linearized:
                return q_associate(parse_poly(text, F, 'x', cap), cap).linearized;
            case Kind::expgrowth: {
                u64 q = F->card();
                if (q <= 2) fail(errc::q_too_small, "construction:expgrowth needs q > 2");
                Poly base = Poly::monomial(F, q, one_elem(F)) - Poly::x(F);
                Poly g = Poly::one(F);
                for (u64 i = 0; i + 1 < q; ++i) g = g * base;
                if ((u64)g.degree() > cap)
                    fail(errc::degree_overflow, "construction exceeds degree cap");
                return g;
            }
        }
        fail(errc::internal, "unreachable");
    }
};

std::pair<u64, u64> parse_n_range(const std::string& text) {
    size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            u64 v = std::stoull(text);
            return {v, v};
        }
        u64 lo = std::stoull(text.substr(0, dots));
        u64 hi = std::stoull(text.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("");
        return {lo, hi};
    } catch (...) {
        fail(errc::parse_error, "bad n range '" + text + "' (use N or LO..HI)");
    }
}

std::string class_string(const PairClass& pc) {
    switch (pc.kind) {
        case PairClass::Kind::critical:
            return "critical";
        case PairClass::Kind::p_critical:
            return "p-critical";
        default:
            return "generic";
    }
}

std::string fraction(u64 num, u64 den) {
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// ---- profile command -------------------------------------------------------------

struct ProfileRow {
    u64 n;
    IterProfile prof;
    std::string census;
};

void emit_profile_rows(const std::vector<ProfileRow>& rows, const std::string& format) {
    if (format == "csv") {
        std::cout << "n,E,e,Delta,M,m,N,A,A_approx,census\n";
        for (const auto& r : rows) {
            std::cout << r.n << ',' << r.prof.max_mult << ',' << r.prof.min_mult << ','
                      << r.prof.sqfree_deg << ',' << r.prof.max_factor_deg << ','
                      << r.prof.min_factor_deg << ',' << r.prof.num_factors << ','
                      << fraction(r.prof.sqfree_deg, r.prof.num_factors) << ','
                      << fixed6(r.prof.avg_factor_deg.approx()) << ',' << r.census << '\n';
        }
        return;
    }
    if (format == "json") {
        for (const auto& r : rows) {
            ordered_json j;
            j["schema"] = 1;
            j["n"] = r.n;
            j["E"] = r.prof.max_mult;
            j["e"] = r.prof.min_mult;
            j["Delta"] = r.prof.sqfree_deg;
            j["M"] = r.prof.max_factor_deg;
            j["m"] = r.prof.min_factor_deg;
            j["N"] = r.prof.num_factors;
            j["A"] = fraction(r.prof.sqfree_deg, r.prof.num_factors);
            j["A_approx"] = r.prof.avg_factor_deg.approx();
            j["census"] = r.census;
            std::cout << j.dump() << '\n';
        }
        return;
    }
    std::printf("%-4s %-6s %-6s %-8s %-6s %-6s %-6s %-10s %-10s %s\n", "n", "E", "e", "Delta", "M",
                "m", "N", "A", "A~", "census");
    for (const auto& r : rows) {
        std::printf("%-4llu %-6llu %-6llu %-8llu %-6llu %-6llu %-6llu %-10s %-10s %s\n",
                    (unsigned long long)r.n, (unsigned long long)r.prof.max_mult,
                    (unsigned long long)r.prof.min_mult, (unsigned long long)r.prof.sqfree_deg,
                    (unsigned long long)r.prof.max_factor_deg,
                    (unsigned long long)r.prof.min_factor_deg,
                    (unsigned long long)r.prof.num_factors,
                    fraction(r.prof.sqfree_deg, r.prof.num_factors).c_str(),
                    fixed6(r.prof.avg_factor_deg.approx()).c_str(), r.census.c_str());
    }
}

int cmd_profile(const FieldArgs& fa, const std::string& f_text, const std::string& g_text,
                const std::string& n_text, const std::string& mode, bool cross_check,
                bool allow_degenerate, u64 seed, u64 cap, const std::string& format) {
    FieldPtr F = fa.build();
    Poly f = parse_poly(f_text, F, 'x', cap);
    GSpec gs = GSpec::parse_text(g_text);
    Poly g = gs.resolve(F, cap);
    auto [lo, hi] = parse_n_range(n_text);

    if (g.degree() >= 2 && f.degree() >= 1) {
        PairClass pc = classify_pair(f, g);
        if (!pc.is_generic() && !allow_degenerate)
            fail(errc::not_generic,
                 "pair is " + class_string(pc) + "; pass --allow-degenerate to proceed");
    } else if (!allow_degenerate) {
        fail(errc::not_generic, "deg g < 2; pass --allow-degenerate to proceed");
    }

    std::vector<ProfileRow> rows;
    for (u64 n = lo; n <= hi; ++n) {
        IterProfile prof;
        if (mode == "direct") {
            prof = profile_direct(f, g, n, cap, seed);
            if (cross_check) {
                IterProfile other = profile_via_root(f, g, n, cap, seed);
                if (!census_equal_aggregated(prof.census, other.census) ||
                    prof.max_mult != other.max_mult || prof.min_mult != other.min_mult) {
                    std::cerr << "cross-check mismatch at n=" << n << "\n";
                    return 5;
                }
            }
        } else if (mode == "via-root") {
            prof = profile_via_root(f, g, n, cap, seed);
        } else if (mode == "closed-form") {
            if (gs.kind == GSpec::Kind::monomial)
                prof = monomial_profile(f, gs.D, n);
            else if (gs.kind == GSpec::Kind::linearized)
                prof = linearized_profile(f, parse_poly(gs.text, F, 'x', cap), n);
            else
                fail(errc::parse_error, "closed-form mode needs monomial: or linearized: g");
        } else {
            fail(errc::parse_error, "unknown mode '" + mode + "'");
        }
        rows.push_back(ProfileRow{n, prof, prof.census.digest()});
    }
    emit_profile_rows(rows, format);
    return 0;
}

// ---- classify command ---------------------------------------------------------------

int cmd_classify(const FieldArgs& fa, const std::string& f_text, const std::string& g_text,
                 u64 cap) {
    FieldPtr F = fa.build();
    Poly f = parse_poly(f_text, F, 'x', cap);
    Poly g = GSpec::parse_text(g_text).resolve(F, cap);
    PairClass pc = classify_pair(f, g);
    switch (pc.kind) {
        case PairClass::Kind::critical:
            std::cout << "critical alpha=" << elem_to_string(pc.critical->alpha)
                      << " beta=" << elem_to_string(pc.critical->beta)
                      << " gamma=" << elem_to_string(pc.critical->gamma);
            if (pc.critical->also_p_critical) std::cout << " (also p-critical)";
            std::cout << "\n";
            break;
        case PairClass::Kind::p_critical:
            std::cout << "p-critical a=" << elem_to_string(pc.p_critical->a)
                      << " b=" << elem_to_string(pc.p_critical->b) << " h=" << pc.p_critical->h
                      << "\n";
            break;
        default:
            std::cout << "generic d=" << pc.reduction->reduced_degree << " h=" << pc.reduction->h
                      << "\n";
    }
    return 0;
}

// ---- verify command -----------------------------------------------------------------

ordered_json report_json(const CheckReport& rep) {
    ordered_json j;
    j["schema"] = 1;
    j["checker"] = rep.name;
    j["inputs"] = rep.inputs;
    j["pass"] = rep.pass();
    j["skipped"] = rep.skipped;
    if (rep.skipped) j["skip_reason"] = rep.skip_reason;
    ordered_json w = ordered_json::object();
    for (const auto& [k, v] : rep.witness) w[k] = v;
    j["witness"] = w;
    ordered_json as = ordered_json::array();
    for (const auto& a : rep.assertions) {
        ordered_json aj;
        aj["description"] = a.description;
        aj["bound"] = a.bound;
        aj["observed"] = a.observed;
        aj["pass"] = a.pass;
        as.push_back(aj);
    }
    j["assertions"] = as;
    return j;
}

int cmd_verify(const std::string& checker, const FieldArgs& fa, const std::string& f_text,
               const std::string& g_text, u64 n_max, const std::string& kind, u64 D, u64 seed,
               u64 cap) {
    FieldPtr F = fa.build();
    Poly f = parse_poly(f_text, F, 'x', cap);
    CheckReport rep;
    if (checker == "multiplicity") {
        rep = check_multiplicity_bounds(f, GSpec::parse_text(g_text).resolve(F, cap), n_max, cap,
                                        seed);
    } else if (checker == "delta-witness") {
        rep = delta_constant_witness(f, GSpec::parse_text(g_text).resolve(F, cap), n_max, 16, cap,
                                     seed)
                  .second;
    } else if (checker == "max-degree") {
        rep = check_max_degree_growth(f, GSpec::parse_text(g_text).resolve(F, cap), n_max, 16, cap,
                                      seed);
    } else if (checker == "min-degree") {
        rep = check_min_degree_equivalences(f, GSpec::parse_text(g_text).resolve(F, cap), n_max,
                                            cap, seed);
    } else if (checker == "remark") {
        rep = check_remark_dichotomy(f, GSpec::parse_text(g_text).resolve(F, cap), n_max, 16, cap,
                                     seed);
    } else if (checker == "closed-form") {
        if (kind == "monomial") {
            rep = check_closed_forms(ClosedFormKind::monomial, f, D, Poly::one(F), n_max, cap,
                                     seed);
        } else if (kind == "linearized") {
            Poly g = parse_poly(g_text, F, 'x', cap);
            rep = check_closed_forms(ClosedFormKind::linearized, f, 0, g, n_max, cap, seed);
        } else {
            fail(errc::parse_error, "closed-form needs --kind monomial|linearized");
        }
    } else {
        fail(errc::parse_error, "unknown checker '" + checker + "'");
    }
    std::cout << report_json(rep).dump() << "\n";
    if (rep.skipped) return 6;
    return rep.pass() ? 0 : 5;
}

// ---- sweep command -------------------------------------------------------------------

struct SweepJob {
    std::string q_text;
    FieldPtr F;
    Poly f;
    Poly g;
    u64 n;
    u64 seed;
    u64 cap;
};

std::string sweep_row(const SweepJob& job) {
    std::ostringstream out;
    std::string cls = "degenerate";
    u64 d = 0;
    if (job.f.degree() >= 1 && job.g.degree() >= 2) {
        PairClass pc = classify_pair(job.f, job.g);
        cls = class_string(pc);
        d = p_reduction(job.g).reduced_degree;
    }
    IterProfile p = profile_direct(job.f, job.g, job.n, job.cap, job.seed);
    out << job.q_text << ',' << poly_to_string(job.f) << ',' << poly_to_string(job.g) << ','
        << job.n << ',' << p.max_mult << ',' << p.min_mult << ',' << p.sqfree_deg << ','
        << p.max_factor_deg << ',' << p.min_factor_deg << ',' << p.num_factors << ','
        << fraction(p.sqfree_deg, p.num_factors) << ',' << cls << ',';
    if (d >= 2) out << fixed6(std::log((double)p.num_factors) / std::log((double)d));
    out << ',';
    if (d >= 2) out << fixed6(std::log((double)p.max_factor_deg) / std::log((double)d));
    out << ',';
    if (job.n > 0) out << fixed6((double)p.max_factor_deg / (double)job.n);
    return out.str();
}

std::vector<Poly> resolve_family(const ordered_json& spec, const FieldPtr& F, u64 cap, bool is_f) {
    std::vector<Poly> out;
    if (spec.contains("list")) {
        for (const auto& s : spec["list"])
            out.push_back(parse_poly(s.get<std::string>(), F, 'x', cap));
        return out;
    }
    if (spec.contains("irreducible_degree")) {
        u64 k = spec["irreducible_degree"].get<u64>();
        u64 count = pow_u64_checked(F->card(), k);
        for (u64 idx = 0; idx < count; ++idx) {
            std::vector<u64> flat((k + 1) * F->m, 0);
            u64 rem = idx;
            for (u64 i = 0; i < k; ++i) {
                FieldElem c = element_from_index(F, rem % F->card());
                rem /= F->card();
                std::copy(c.c.begin(), c.c.end(), flat.begin() + i * F->m);
            }
            FieldElem one = one_elem(F);
            std::copy(one.c.begin(), one.c.end(), flat.begin() + k * F->m);
            Poly cand = Poly::from_flat(F, std::move(flat));
            if (is_irreducible(cand)) out.push_back(cand);
        }
        return out;
    }
    if (spec.contains("family")) {
        std::string fam = spec["family"].get<std::string>();
        if (fam == "monomial") {
            out.push_back(Poly::monomial(F, spec["D"].get<u64>(), one_elem(F)));
            return out;
        }
        if (fam == "x^D+c") {
            u64 D = spec["D"].get<u64>();
            for (u64 idx = 0; idx < F->card(); ++idx)
                out.push_back(Poly::monomial(F, D, one_elem(F)) +
                              Poly::monomial(F, 0, element_from_index(F, idx)));
            return out;
        }
        fail(errc::parse_error, "unknown family '" + fam + "'");
    }
    fail(errc::parse_error, std::string("sweep: bad ") + (is_f ? "f" : "g") + " spec");
}

int cmd_sweep(const std::string& spec_path, u64 jobs_override) {
    std::ifstream in(spec_path);
    if (!in) fail(errc::parse_error, "cannot open sweep spec '" + spec_path + "'");
    ordered_json spec;
    try {
        in >> spec;
    } catch (const std::exception& e) {
        fail(errc::parse_error, std::string("sweep spec: ") + e.what());
    }
    u64 seed = spec.value("seed", 0ull);
    u64 cap = spec.value("cap", default_degree_cap);
    u64 nmax = spec.value("nmax", 2ull);
    u64 jobs = jobs_override ? jobs_override : spec.value("jobs", 1ull);

    std::vector<SweepJob> all;
    for (const auto& ftext : spec["fields"]) {
        FieldArgs fa{ftext.get<std::string>(), ""};
        FieldPtr F = fa.build();
        std::vector<Poly> fs = resolve_family(spec["f"], F, cap, true);
        std::vector<Poly> gs = resolve_family(spec["g"], F, cap, false);
        for (const Poly& f : fs)
            for (const Poly& g : gs)
                for (u64 n = 0; n <= nmax; ++n)
                    all.push_back(SweepJob{ftext.get<std::string>(), F, f, g, n, seed, cap});
    }

    std::vector<std::string> results(all.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= all.size()) return;
            results[i] = sweep_row(all[i]);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (u64 t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::cout << "q,f,g,n,E,e,Delta,M,m,N,A,class,logd_N,logd_M,M_over_n\n";
    for (const auto& r : results) std::cout << r << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact factorization profiles of iterated polynomial compositions over finite fields"};
    app.require_subcommand(1);

    FieldArgs fa;
    std::string f_text, g_text, n_text = "0..2", mode = "direct", format = "table";
    std::string checker, kind, spec_path;
    u64 seed = 0, cap = default_degree_cap, n_max = 3, D = 2, jobs = 0;
    bool cross_check = false, allow_degenerate = false;

    auto add_common_opts = [&](CLI::App* cmd) {
        cmd->add_option("--field", fa.field_text, "field: p or p^m")->required();
        cmd->add_option("--modulus", fa.modulus_text, "defining polynomial in t (optional)");
        cmd->add_option("--f", f_text, "polynomial f")->required();
        cmd->add_option("--g", g_text,
                        "polynomial g, or monomial:D / linearized:POLY / construction:expgrowth");
        cmd->add_option("--seed", seed, "factoring seed (output is seed-independent)");
        cmd->add_option("--cap", cap, "total degree cap");
    };

    CLI::App* c_classify = app.add_subcommand("classify", "classify the pair (f, g)");
    add_common_opts(c_classify);

    CLI::App* c_profile = app.add_subcommand("profile", "arithmetic functions of f(g^(n))");
    add_common_opts(c_profile);
    c_profile->add_option("--n", n_text, "iteration range N or LO..HI");
    c_profile->add_option("--mode", mode, "direct | via-root | closed-form");
    c_profile->add_flag("--cross-check", cross_check, "run direct and via-root, diff them");
    c_profile->add_flag("--allow-degenerate", allow_degenerate,
                        "profile critical/p-critical pairs");
    c_profile->add_option("--format", format, "table | csv | json");

    CLI::App* c_verify = app.add_subcommand("verify", "run a bound or closed-form checker");
    c_verify
        ->add_option("checker", checker,
                     "multiplicity | delta-witness | max-degree | min-degree | remark | closed-form")
        ->required();
    add_common_opts(c_verify);
    c_verify->add_option("--nmax", n_max, "check n = 0..nmax");
    c_verify->add_option("--kind", kind, "closed-form kind: monomial | linearized");
    c_verify->add_option("--D", D, "monomial degree for closed-form");

    CLI::App* c_sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
    c_sweep->add_option("--spec", spec_path, "JSON sweep specification")->required();
    c_sweep->add_option("--jobs", jobs, "concurrent workers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(c_classify)) return cmd_classify(fa, f_text, g_text, cap);
        if (app.got_subcommand(c_profile))
            return cmd_profile(fa, f_text, g_text, n_text, mode, cross_check, allow_degenerate,
                               seed, cap, format);
        if (app.got_subcommand(c_verify))
            return cmd_verify(checker, fa, f_text, g_text, n_max, kind, D, seed, cap);
        if (app.got_subcommand(c_sweep)) return cmd_sweep(spec_path, jobs);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
