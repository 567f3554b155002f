#include "iterfact/verify.hpp"

#include <algorithm>
#include <set>

#include "iterfact/parse.hpp"

namespace iterfact {

namespace {

std::string inputs_echo(const Poly& f, const Poly& g, u64 n_max) {
    return "field=" + field_to_string(*f.field()) + " f=" + poly_to_string(f) +
           " g=" + poly_to_string(g) + " n=0.." + std::to_string(n_max);
}

void push(CheckReport& rep, const std::string& desc, const std::string& bound,
          const std::string& observed, bool ok) {
    rep.assertions.push_back(Assertion{desc, bound, observed, ok});
}

// true iff base^exp > bound, without overflow
bool pow_exceeds(u64 base, u64 exp, u128 bound) {
    u128 acc = 1;
    for (u64 i = 0; i < exp; ++i) {
        acc *= base;
        if (acc > bound) return true;
    }
    return acc > bound;
}

u128 pow_u128(u64 base, u64 exp) {
    u128 acc = 1;
    while (exp--) acc *= base;
    return acc;
}

// generic pair whose irreducible components are each non-degenerate with g;
// the reduction over the factors of f needs every component non-critical
PReduction require_fully_generic(const Poly& f, const Poly& g, u64 seed) {
    PairClass pc = classify_pair(f, g);
    if (!pc.is_generic()) fail(errc::not_generic, "pair is critical or p-critical");
    for (const auto& [fi, e] : factor(f, seed).factors) {
        if (is_critical(fi, g))
            fail(errc::not_generic, "a component of f forms a critical pair with g");
    }
    return *pc.reduction;
}

}  // namespace

CheckReport check_multiplicity_bounds(const Poly& f, const Poly& g, u64 n_max, u64 degree_cap,
                                      u64 seed) {
    PReduction pr = require_fully_generic(f, g, seed);
    u64 D = pr.original_degree, h = pr.h, p = f.field()->p;
    CheckReport rep;
    rep.name = "multiplicity-bounds";
    rep.inputs = inputs_echo(f, g, n_max);
    rep.witness["d"] = std::to_string(pr.reduced_degree);
    rep.witness["h"] = std::to_string(h);
    for (u64 n = 0; n <= n_max; ++n) {
        IterProfile prof = profile_direct(f, g, n, degree_cap, seed);
        u128 pnh = pow_u128(p, n * h);
        bool lower = pnh <= prof.min_mult && prof.min_mult <= prof.max_mult;
        push(rep, "n=" + std::to_string(n) + " p^(nh) <= e(n) <= E(n)",
             "p^(nh)=" + std::to_string((u64)pnh),
             "e=" + std::to_string(prof.min_mult) + " E=" + std::to_string(prof.max_mult), lower);
        // E^2 (D-1) <= D (D(D-1))^n  and  E^2 <= 2 (D(D-1))^n
        u128 E2 = (u128)prof.max_mult * prof.max_mult;
        u128 kappa2n = pow_u128(D * (D - 1), n);
        bool sharp = E2 * (D - 1) <= (u128)D * kappa2n;
        bool two = E2 <= 2 * kappa2n;
        push(rep, "n=" + std::to_string(n) + " E(n)^2 (D-1) <= D (D(D-1))^n",
             "D=" + std::to_string(D), "E=" + std::to_string(prof.max_mult), sharp);
        push(rep, "n=" + std::to_string(n) + " E(n)^2 <= 2 (D(D-1))^n", "D=" + std::to_string(D),
             "E=" + std::to_string(prof.max_mult), two);
    }
    return rep;
}

// ---- the squarefree-degree witness ----------------------------------------------------

namespace {

struct WitnessSearch {
    FieldElem lambda;
    u64 j = 0;
    FieldPtr ambient;
};

// smallest non-periodic lambda with g^(j)(lambda) = alpha, scanning j = 1, 2, ...
// A periodic lambda would force its forward image alpha onto the same cycle,
// so when alpha is aperiodic every candidate qualifies, and when alpha has
// period c the test collapses to g^(c)(lambda) = lambda.
WitnessSearch find_nonperiodic_preimage(const Poly& g, const FieldElem& alpha, u64 j_cap,
                                        u32 ambient_abs_cap, u64 seed) {
    std::optional<u64> alpha_period = is_g_periodic(alpha, g);  // orbit stays in F_{q^k}
    for (u64 j = 1; j <= j_cap; ++j) {
        PreimageEnumeration en;
        try {
            en = preimage_tuples(g, alpha, j + 1, ambient_abs_cap, seed);
        } catch (const error& e) {
            if (e.code() == errc::field_cap_exceeded)
                fail(errc::witness_search_exhausted,
                     "preimage tree left the ambient-degree cap during witness search");
            throw;
        }
        std::vector<FieldElem> cands;
        for (const auto& t : en.tuples) cands.push_back(t.entries.back());
        std::sort(cands.begin(), cands.end(),
                  [](const FieldElem& a, const FieldElem& b) { return elem_cmp(a, b) < 0; });
        cands.erase(std::unique(cands.begin(), cands.end(),
                                [](const FieldElem& a, const FieldElem& b) { return a == b; }),
                    cands.end());
        Poly ge = embed_poly(g, make_embedding(g.field(), en.ambient));
        for (const FieldElem& lam : cands) {
            bool periodic = false;
            if (alpha_period) {
                FieldElem cur = lam;
                for (u64 t = 0; t < *alpha_period; ++t) cur = ge(cur);
                periodic = cur == lam;
            }
            if (!periodic) return WitnessSearch{lam, j, en.ambient};
        }
    }
    fail(errc::witness_search_exhausted, "no non-periodic preimage found within the depth cap");
}

}  // namespace

std::pair<DeltaWitness, CheckReport> delta_constant_witness(const Poly& f, const Poly& g,
                                                            u64 n_max, u32 ambient_abs_cap,
                                                            u64 degree_cap, u64 seed) {
    if (!is_irreducible(f))
        fail(errc::not_irreducible, "delta_constant_witness: f must be irreducible");
    PReduction pr = require_fully_generic(f, g, seed);
    u64 d = pr.reduced_degree, h = pr.h, p = f.field()->p;
    u64 k = (u64)f.degree();

    auto [ext, emb] = extend(f.field(), (u32)k);
    FieldElem alpha = roots_in_field(embed_poly(f, emb)).front();

    u64 j_cap = 16;
    if (ext->card_fits_u64()) j_cap = std::min<u64>(j_cap, ext->card());
    WitnessSearch ws = find_nonperiodic_preimage(g, alpha, j_cap, ambient_abs_cap, seed);

    // M: past every time any root of G' can land on lambda; each root hits a
    // non-periodic element at most once along its forward orbit
    Poly gp = derivative(pr.reduced);
    u64 M_cap = 2 * (u64)std::max(gp.degree(), 0) + 4;
    u64 M = 1;
    {
        Factorization gpf = gp.degree() >= 1 ? factor(gp, seed) : Factorization{gp.leading(), {}};
        for (const auto& [R, e] : gpf.factors) {
            u64 need = lcm_u64_checked(ws.ambient->m, (u64)f.field()->m * (u64)R.degree());
            if (need > ambient_abs_cap)
                fail(errc::witness_search_exhausted,
                     "roots of G' do not fit inside the ambient-degree cap");
            FieldPtr common = need == ws.ambient->m ? ws.ambient : make_field(f.field()->p, (u32)need);
            Embedding up = make_embedding(ws.ambient, common);
            FieldElem lam = up.embed(ws.lambda);
            Poly Re = embed_poly(R, make_embedding(R.field(), common));
            Poly ge = embed_poly(g, make_embedding(g.field(), common));
            for (const FieldElem& z : roots_in_field(Re)) {
                FieldElem cur = z;
                std::set<std::vector<u64>> seen;
                for (u64 t = 0;; ++t) {
                    if (cur == lam) {
                        M = std::max(M, t + 1);
                        break;
                    }
                    if (!seen.insert(cur.c).second) break;
                    cur = ge(cur);
                }
            }
        }
    }
    if (M > M_cap)
        fail(errc::witness_search_exhausted, "coprimality threshold exceeds the search cap");

    // gamma: smallest root of g^(M)(x) - lambda, extending the ambient if needed
    Poly gM = iterate_poly(embed_poly(g, make_embedding(g.field(), ws.ambient)), M, degree_cap);
    Poly shifted = gM - Poly::monomial(ws.ambient, 0, ws.lambda);
    Factorization shf = factor(shifted, seed);
    u64 need = (u64)ws.ambient->m * (u64)shf.factors.front().first.degree();
    for (const auto& [R, e] : shf.factors)
        need = std::min(need, (u64)ws.ambient->m * (u64)R.degree());
    if (need > ambient_abs_cap)
        fail(errc::witness_search_exhausted, "gamma lives beyond the ambient-degree cap");
    FieldPtr gfield = need == ws.ambient->m ? ws.ambient : make_field(f.field()->p, (u32)need);
    Embedding up = make_embedding(ws.ambient, gfield);
    FieldElem gamma = [&] {
        for (const auto& [R, e] : shf.factors) {
            if ((u64)ws.ambient->m * (u64)R.degree() != need) continue;
            Poly Re = embed_poly(R, up);
            for (const FieldElem& r : roots_in_field(Re)) return r;
        }
        fail(errc::internal, "no root of the witness polynomial in the chosen field");
    }();

    DeltaWitness w;
    w.lambda = ws.lambda;
    w.gamma = gamma;
    w.j = ws.j;
    w.M = M;
    w.i = ws.j + M;
    w.constant = Rational(1, (i64)pow_u64_checked(d, w.i));

    CheckReport rep;
    rep.name = "delta-witness";
    rep.inputs = inputs_echo(f, g, n_max);
    rep.witness["lambda"] = elem_to_string(ws.lambda);
    rep.witness["lambda_field"] = field_to_string(*ws.ambient);
    rep.witness["gamma"] = elem_to_string(gamma);
    rep.witness["gamma_field"] = field_to_string(*gfield);
    rep.witness["j"] = std::to_string(w.j);
    rep.witness["M"] = std::to_string(w.M);
    rep.witness["i"] = std::to_string(w.i);
    rep.witness["C"] = w.constant.str();

    if (gp.degree() >= 1) {
        Poly co = gcd_poly(shifted, embed_poly(gp, make_embedding(gp.field(), ws.ambient)));
        push(rep, "gcd(g^(M) - lambda, G') = 1", "1", poly_to_string(co), co.degree() == 0);
    }

    // flat multiplicity at gamma for small n: nu(g^(n) - gamma) = p^(nh)
    for (u64 n = 1; n <= 2; ++n) {
        if (pow_u64_checked((u64)g.degree(), n) > 600) break;
        Poly gn = iterate_poly(embed_poly(g, make_embedding(g.field(), gfield)), n, degree_cap);
        FactorCensus c = census_of(factor(gn - Poly::monomial(gfield, 0, gamma), seed));
        u64 expect = pow_u64_checked(p, n * h);
        push(rep, "n=" + std::to_string(n) + " nu(g^(n) - gamma) = p^(nh)",
             std::to_string(expect), std::to_string(c.max_multiplicity()),
             c.max_multiplicity() == expect);
    }

    u64 di = pow_u64_checked(d, w.i);
    for (u64 n = 0; n <= n_max; ++n) {
        IterProfile prof = profile_direct(f, g, n, degree_cap, seed);
        u128 dn = pow_u128(d, n);
        bool lower = (u128)prof.sqfree_deg * di >= (u128)k * dn;
        bool upper = (u128)prof.sqfree_deg <= (u128)k * dn;
        push(rep, "n=" + std::to_string(n) + " k d^(n-i) <= Delta(n)",
             "k d^n / d^i with d=" + std::to_string(d) + " i=" + std::to_string(w.i),
             "Delta=" + std::to_string(prof.sqfree_deg), lower);
        push(rep, "n=" + std::to_string(n) + " Delta(n) <= k d^n", "d=" + std::to_string(d),
             "Delta=" + std::to_string(prof.sqfree_deg), upper);
    }
    return {w, rep};
}

CheckReport check_max_degree_growth(const Poly& f, const Poly& g, u64 n_max, u32 ambient_abs_cap,
                                    u64 degree_cap, u64 seed) {
    if (!is_irreducible(f))
        fail(errc::not_irreducible, "check_max_degree_growth: f must be irreducible");
    auto [w, wrep] = delta_constant_witness(f, g, 0, ambient_abs_cap, degree_cap, seed);
    PReduction pr = p_reduction(g);
    u64 d = pr.reduced_degree;
    u64 k = (u64)f.degree();
    u64 Q = pow_u64_checked(f.field()->card(), k);
    CheckReport rep;
    rep.name = "max-degree-growth";
    rep.inputs = inputs_echo(f, g, n_max);
    rep.witness = wrep.witness;
    for (u64 n = 0; n <= n_max; ++n) {
        IterProfile prof = profile_direct(f, g, n, degree_cap, seed);
        bool divisible = prof.max_factor_deg % k == 0;
        push(rep, "n=" + std::to_string(n) + " k | M(n)", "k=" + std::to_string(k),
             "M=" + std::to_string(prof.max_factor_deg), divisible);
        if (!divisible) continue;
        // 2 Q^(M/k) > d^(n-i), the integer form of the log bound
        u64 Mk = prof.max_factor_deg / k;
        u128 rhs = n > w.i ? pow_u128(d, n - w.i) : 1;
        bool ok = pow_exceeds(Q, Mk, rhs / 2);
        push(rep, "n=" + std::to_string(n) + " 2 Q^(M(n)/k) > d^(n-i)",
             "Q=" + std::to_string(Q) + " d=" + std::to_string(d) + " i=" + std::to_string(w.i),
             "M/k=" + std::to_string(Mk), ok);
    }
    return rep;
}

CheckReport check_min_degree_equivalences(const Poly& f, const Poly& g, u64 n_max, u64 degree_cap,
                                          u64 seed) {
    if (!is_irreducible(f))
        fail(errc::not_irreducible, "check_min_degree_equivalences: f must be irreducible");
    u64 k = (u64)f.degree();
    bool periodic = has_periodic_root(f, g, seed);
    CheckReport rep;
    rep.name = "min-degree-equivalences";
    rep.inputs = inputs_echo(f, g, n_max);
    rep.witness["periodic_root"] = periodic ? "true" : "false";
    std::vector<u64> ms;
    for (u64 n = 0; n <= n_max; ++n)
        ms.push_back(profile_direct(f, g, n, degree_cap, seed).min_factor_deg);
    if (periodic) {
        for (u64 n = 0; n <= n_max; ++n)
            push(rep, "n=" + std::to_string(n) + " m(n) = k", std::to_string(k),
                 std::to_string(ms[n]), ms[n] == k);
    } else {
        bool nondecr = true;
        for (size_t i = 1; i < ms.size(); ++i) nondecr = nondecr && ms[i - 1] <= ms[i];
        push(rep, "m(n) nondecreasing", "monotone", "", nondecr);
        bool increased = !ms.empty() && ms.back() > ms.front();
        // a finite window cannot certify divergence; the trend is only reported
        rep.witness["strictly_increased_in_window"] = increased ? "true" : "false";
    }
    return rep;
}

CheckReport check_remark_dichotomy(const Poly& f, const Poly& g, u64 n_max, u32 ambient_abs_cap,
                                   u64 degree_cap, u64 seed) {
    if (!is_irreducible(f))
        fail(errc::not_irreducible, "check_remark_dichotomy: f must be irreducible");
    CheckReport rep;
    rep.name = "remark-dichotomy";
    rep.inputs = inputs_echo(f, g, n_max);
    DeltaWitness w;
    try {
        auto res = delta_constant_witness(f, g, 0, ambient_abs_cap, degree_cap, seed);
        w = res.first;
        rep.witness = res.second.witness;
    } catch (const error& e) {
        if (e.code() == errc::witness_search_exhausted) {
            rep.skipped = true;
            rep.skip_reason = "WitnessSearchExhausted: " + std::string(e.what());
            return rep;
        }
        throw;
    }
    PReduction pr = p_reduction(g);
    u64 d = pr.reduced_degree;
    u64 k = (u64)f.degree();
    u64 di = pow_u64_checked(d, w.i);
    Rational kC((i64)k, (i64)di);
    Rational c2 = kC * kC;
    if (Rational(1) < kC) c2 = kC;  // keep the bound at the forced chain value
    rep.witness["c_squared"] = c2.str();
    for (u64 n = 0; n <= n_max; ++n) {
        IterProfile prof = profile_direct(f, g, n, degree_cap, seed);
        u128 dn = pow_u128(d, n);
        bool chain = (u128)prof.sqfree_deg * di >= (u128)k * dn;
        push(rep, "n=" + std::to_string(n) + " Delta(n) >= k C d^n", "kC=" + kC.str(),
             "Delta=" + std::to_string(prof.sqfree_deg), chain);
        Rational Nr((i64)prof.num_factors);
        Rational big = Nr < prof.avg_factor_deg ? prof.avg_factor_deg : Nr;
        Rational lhs = big * big;
        Rational rhs = c2 * Rational((i64)(u64)dn);
        push(rep, "n=" + std::to_string(n) + " max(N, A)^2 >= c^2 d^n", rhs.str(), lhs.str(),
             rhs <= lhs);
    }
    return rep;
}

CheckReport check_closed_forms(ClosedFormKind kind, const Poly& f, u64 D, const Poly& g,
                               u64 n_max, u64 degree_cap, u64 seed) {
    const FieldPtr& F = f.field();
    Poly actual_g(F);
    CheckReport rep;
    if (kind == ClosedFormKind::monomial) {
        actual_g = Poly::monomial(F, D, one_elem(F));
        rep.name = "closed-form-monomial";
    } else {
        actual_g = q_associate(g, degree_cap).linearized;
        rep.name = "closed-form-linearized";
    }
    rep.inputs = inputs_echo(f, actual_g, n_max);
    for (u64 n = 0; n <= n_max; ++n) {
        IterProfile closed = kind == ClosedFormKind::monomial ? monomial_profile(f, D, n)
                                                              : linearized_profile(f, g, n);
        IterProfile direct = profile_direct(f, actual_g, n, degree_cap, seed);
        bool fn_equal = closed.max_mult == direct.max_mult && closed.min_mult == direct.min_mult &&
                        closed.sqfree_deg == direct.sqfree_deg &&
                        closed.max_factor_deg == direct.max_factor_deg &&
                        closed.min_factor_deg == direct.min_factor_deg &&
                        closed.num_factors == direct.num_factors &&
                        closed.avg_factor_deg == direct.avg_factor_deg;
        bool cen_equal = census_equal_aggregated(closed.census, direct.census);
        push(rep, "n=" + std::to_string(n) + " closed form equals direct profile",
             closed.census.aggregated().digest(), direct.census.aggregated().digest(),
             fn_equal && cen_equal);
    }
    return rep;
}

}  // namespace iterfact
