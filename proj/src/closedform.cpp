#include "iterfact/closedform.hpp"

#include <algorithm>

namespace iterfact {

u64 lte_valuation(u64 r, u64 a, u64 n) {
    if (!is_prime_u64(r)) fail(errc::hypothesis_violated, "lte: r must be prime");
    if (a < 2 || n < 1) fail(errc::hypothesis_violated, "lte: need a >= 2 and n >= 1");
    if ((a - 1) % r != 0) fail(errc::hypothesis_violated, "lte: r does not divide a - 1");
    if (r != 2) return valuation(r, a - 1) + valuation(r, n);
    if (n % 2 == 1) return valuation(2, a - 1);
    // nu_2(a^2 - 1) = nu_2(a - 1) + nu_2(a + 1), avoiding the square
    return valuation(2, a - 1) + valuation(2, a + 1) + valuation(2, n) - 1;
}

std::pair<u64, u64> split_wrt(u64 D, u64 e) {
    u64 d1 = 1, d2 = 1;
    for (auto [r, k] : factorize_u64(D).prime_powers) {
        u64 pk = pow_u64_checked(r, k);
        if (e % r == 0)
            d2 = mul_u64_checked(d2, pk);
        else
            d1 = mul_u64_checked(d1, pk);
    }
    return {d1, d2};
}

std::pair<Poly, Poly> split_wrt(const Poly& g, const Poly& h) {
    if (g.is_zero() || g.constant_term().is_zero())
        fail(errc::divisible_by_x, "split_wrt: g(0) must be nonzero");
    const FieldPtr& F = g.field();
    Poly g1 = Poly::one(F), g2 = Poly::one(F);
    if (g.degree() == 0) return {g1, g2};
    for (const auto& [R, e] : factor(g.monic()).factors) {
        Poly pw = Poly::one(F);
        for (u64 i = 0; i < e; ++i) pw = pw * R;
        if ((h % R).is_zero())
            g2 = g2 * pw;
        else
            g1 = g1 * pw;
    }
    return {g1, g2};
}

// ---- the monomial closed form ---------------------------------------------------

IterProfile monomial_profile(const Poly& f, u64 D, u64 n) {
    if (!is_irreducible(f)) fail(errc::not_irreducible, "monomial_profile: f must be irreducible");
    if (f.constant_term().is_zero()) fail(errc::monomial_f, "monomial_profile: f must not be a*x");
    const FieldPtr& F = f.field();
    if (D < 2) fail(errc::degree_too_small, "monomial_profile: D must be >= 2");
    if (D % F->p == 0) fail(errc::p_divides_d, "monomial_profile: gcd(D, p) must be 1");
    u64 q = F->card();
    u64 k = (u64)f.degree();
    u64 e = irreducible_order(f);
    auto [d1, d2] = split_wrt(D, e);
    u64 d1n = pow_u64_checked(d1, n);
    u64 d2n = pow_u64_checked(d2, n);
    u64 Dn = pow_u64_checked(D, n);

    FactorCensus census;
    for (u64 M : divisors(factorize_u64(d1n))) {
        u64 modulo = mul_u64_checked(mul_u64_checked(M, d2n), e);
        u64 deg = int_order(q, modulo);
        u64 num = mul_u64_checked(mul_u64_checked(k, d2n), euler_phi(M));
        if (num % deg != 0) fail(errc::internal, "monomial_profile: non-integral factor count");
        census.rows.push_back(CensusRow{deg, 1, num / deg, modulo, std::nullopt});
    }
    std::sort(census.rows.begin(), census.rows.end(), [](const CensusRow& a, const CensusRow& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return *a.order < *b.order;
    });

    IterProfile p = profile_from_census(n, std::move(census));
    // cross-checks of the closed form against its own census
    if (p.max_factor_deg != int_order(q, mul_u64_checked(Dn, e)) ||
        p.min_factor_deg != int_order(q, mul_u64_checked(d2n, e)))
        fail(errc::internal, "monomial_profile: order extremes disagree with census");
    p.validate(mul_u64_checked(k, Dn));
    return p;
}

// ---- order-ratio constants --------------------------------------------------------

namespace {

// nu_r(a^S - 1) without forming a^S: largest t with a^S = 1 (mod r^t)
u64 modular_valuation(u64 r, u64 a, u64 S) {
    u64 t = 0, rt = 1;
    while (rt <= UINT64_MAX / r) {
        rt *= r;
        if (powmod(a % rt, S, rt) != 1) return t;
        ++t;
    }
    fail(errc::overflow, "valuation exceeds 64-bit modulus range");
}

}  // namespace

OrderRatioBounds order_ratio_bounds(const std::vector<u64>& primes, u64 a) {
    if (a < 2) fail(errc::hypothesis_violated, "order_ratio_bounds: a must be >= 2");
    if (primes.empty()) fail(errc::hypothesis_violated, "order_ratio_bounds: empty prime set");
    OrderRatioBounds out;
    out.primes = primes;
    std::sort(out.primes.begin(), out.primes.end());
    for (size_t i = 0; i < out.primes.size(); ++i) {
        u64 r = out.primes[i];
        if (!is_prime_u64(r)) fail(errc::not_prime, "order_ratio_bounds: support must be prime");
        if (i && out.primes[i - 1] == r)
            fail(errc::hypothesis_violated, "order_ratio_bounds: repeated prime");
        if (a % r == 0) fail(errc::not_coprime, "order_ratio_bounds: a shares a prime with the set");
    }
    out.base = a;
    bool even_case =
        std::find(out.primes.begin(), out.primes.end(), 2) != out.primes.end() && a % 4 == 3;
    u64 A = even_case ? mul_u64_checked(a, a) : a;
    out.squared_base = even_case;

    u64 R = 1;
    for (u64 r : out.primes) R = mul_u64_checked(R, r);
    out.radical = R;
    u64 S = ord_mod(A, R);
    out.base_order = S;
    for (u64 r : out.primes) out.valuations.push_back(modular_valuation(r, A, S));
    u64 phiR = euler_phi(R);
    u64 AS = pow_u64_checked(A, S);  // bounded by construction at desk scale
    Rational L((i64)phiR, (i64)S);
    Rational U = Rational((i64)phiR, 1) * Rational((i64)(AS - 1), (i64)mul_u64_checked(R, S));
    if (even_case) L = L * Rational(1, 2);
    out.lower = L;
    out.upper = U;
    return out;
}

// ---- q-associates and the linearized closed form ------------------------------------

QAssociate q_associate(const Poly& g, u64 degree_cap) {
    const FieldPtr& F = g.field();
    u64 q = F->card();
    if (g.is_zero()) fail(errc::zero_polynomial, "q_associate of zero");
    u64 top = pow_u64_checked(q, (u64)g.degree());
    if (top > degree_cap) fail(errc::degree_overflow, "q_associate: linearized degree exceeds cap");
    std::vector<u64> flat((top + 1) * F->m, 0);
    for (u64 i = 0; i <= (u64)g.degree(); ++i) {
        u64 e = pow_u64_checked(q, i);
        std::copy(g.flat().begin() + i * F->m, g.flat().begin() + (i + 1) * F->m,
                  flat.begin() + e * F->m);
    }
    return QAssociate{g, Poly::from_flat(F, std::move(flat))};
}

Poly q_associate_inverse(const Poly& L) {
    const FieldPtr& F = L.field();
    u64 q = F->card();
    if (L.is_zero()) fail(errc::zero_polynomial, "q_associate_inverse of zero");
    std::vector<u64> flat;
    for (u64 i = 0; i <= (u64)L.degree(); ++i) {
        const u64* c = L.coeff_ptr(i);
        if (F->el_is_zero(c)) continue;
        u64 e = i, iw = 0;
        while (e > 1) {
            if (e % q) fail(errc::not_linearized, "exponent is not a power of the field size");
            e /= q;
            ++iw;
        }
        if (e != 1) fail(errc::not_linearized, "constant term in a linearized polynomial");
        if (flat.size() < (iw + 1) * F->m) flat.resize((iw + 1) * F->m, 0);
        std::copy(c, c + F->m, flat.begin() + iw * F->m);
    }
    return Poly::from_flat(F, std::move(flat));
}

Poly fq_order(const FieldElem& alpha, const Embedding& emb) {
    if (alpha.is_zero()) fail(errc::zero_element, "fq_order of zero");
    if (!same_field(*alpha.F, *emb.super)) fail(errc::field_mismatch, "fq_order: field mismatch");
    const FieldPtr& base = emb.sub;
    u32 k = element_degree(alpha, base->m);
    // h divides x^k - 1 since L_{x^k - 1}(alpha) = alpha^(q^k) - alpha = 0
    Poly xk1 = Poly::monomial(base, k, one_elem(base)) - Poly::one(base);
    Factorization fz = factor(xk1);
    // Frobenius powers of alpha over the base, up to q^k
    std::vector<FieldElem> frob(k + 1, alpha);
    for (u32 i = 1; i <= k; ++i) frob[i] = frobenius(frob[i - 1], base->m);
    auto vanishes = [&](const Poly& h) {
        FieldElem acc = zero_elem(alpha.F);
        for (int i = 0; i <= h.degree(); ++i) {
            FieldElem c = h.coeff((u64)i);
            if (c.is_zero()) continue;
            acc = acc + emb.embed(c) * frob[(u32)i];
        }
        return acc.is_zero();
    };
    // walk the divisor lattice by ascending degree, then canonical order
    std::vector<Poly> divs{Poly::one(base)};
    for (const auto& [R, e] : fz.factors) {
        size_t sz = divs.size();
        Poly pw = Poly::one(base);
        for (u64 i = 0; i < e; ++i) {
            pw = pw * R;
            for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pw);
        }
    }
    std::sort(divs.begin(), divs.end(), [](const Poly& a, const Poly& b) {
        return poly_cmp(a, b) < 0;
    });
    for (const Poly& h : divs) {
        if (h.degree() >= 1 && vanishes(h)) return h;
    }
    fail(errc::internal, "fq_order: no annihilating divisor of x^k - 1");
}

u64 phi_q(const Poly& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "phi_q of zero");
    if (f.degree() == 0) return 1;
    u64 q = f.field()->card();
    u64 out = 1;
    for (const auto& [h, e] : factor(f).factors) {
        u64 qd = pow_u64_checked(q, (u64)h.degree());
        out = mul_u64_checked(out, qd - 1);
        for (u64 i = 1; i < e; ++i) out = mul_u64_checked(out, qd);
    }
    return out;
}

u64 ord_x_mod(const Poly& F) {
    if (F.degree() < 1) fail(errc::constant_polynomial, "ord_x_mod: input must be nonconstant");
    if (F.constant_term().is_zero()) fail(errc::divisible_by_x, "ord_x_mod: F(0) = 0");
    return poly_order(F);
}

IterProfile linearized_profile(const Poly& f, const Poly& g, u64 n) {
    if (!is_irreducible(f)) fail(errc::not_irreducible, "linearized_profile: f must be irreducible");
    if (f.constant_term().is_zero()) fail(errc::divisible_by_x, "linearized_profile: f = a*x has root 0");
    if (g.degree() < 1) fail(errc::degree_too_small, "linearized_profile: deg g must be >= 1");
    if (g.constant_term().is_zero()) fail(errc::divisible_by_x, "linearized_profile: g(0) must be nonzero");
    const FieldPtr& F = f.field();
    if (!same_field(*F, *g.field())) fail(errc::field_mismatch, "linearized_profile: fields differ");
    u64 q = F->card();
    u64 k = (u64)f.degree();
    u64 D = (u64)g.degree();

    auto [ext, emb] = extend(F, (u32)k);
    FieldElem alpha = roots_in_field(embed_poly(f, emb)).front();
    Poly h = fq_order(alpha, emb);

    // scaling g by a unit leaves every F_q-order unchanged, so work monic
    Poly gm = g.monic();
    auto [g1, g2] = split_wrt(gm, h);
    u64 m2 = (u64)g2.degree();

    Poly g2n = Poly::one(F);
    for (u64 i = 0; i < n; ++i) g2n = g2n * g2;
    u64 qmn = pow_u64_checked(q, mul_u64_checked(m2, n));

    FactorCensus census;
    // monic divisors of g1^n from the factorization of g1
    std::vector<Poly> divs{Poly::one(F)};
    if (g1.degree() >= 1) {
        for (const auto& [R, e] : factor(g1).factors) {
            size_t sz = divs.size();
            Poly pw = Poly::one(F);
            for (u64 i = 0; i < mul_u64_checked(e, n); ++i) {
                pw = pw * R;
                for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pw);
            }
        }
    }
    for (const Poly& G : divs) {
        Poly modpoly = G * g2n * h;
        u64 deg = ord_x_mod(modpoly);
        u64 num = mul_u64_checked(mul_u64_checked(k, qmn), phi_q(G));
        if (num % deg != 0) fail(errc::internal, "linearized_profile: non-integral factor count");
        census.rows.push_back(CensusRow{deg, 1, num / deg, std::nullopt, std::move(modpoly)});
    }
    std::sort(census.rows.begin(), census.rows.end(), [](const CensusRow& a, const CensusRow& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return poly_cmp(*a.fq_order, *b.fq_order) < 0;
    });

    IterProfile p = profile_from_census(n, std::move(census));
    Poly gn = Poly::one(F);
    for (u64 i = 0; i < n; ++i) gn = gn * gm;
    if (p.max_factor_deg != ord_x_mod(gn * h) || p.min_factor_deg != ord_x_mod(g2n * h))
        fail(errc::internal, "linearized_profile: order extremes disagree with census");
    u64 total = mul_u64_checked(k, pow_u64_checked(q, mul_u64_checked(D, n)));
    p.validate(total);
    return p;
}

// ---- special-shape reduction and the exponential construction -------------------------

namespace {

bool is_monomial(const Poly& g) {
    if (g.degree() < 1) return false;
    for (int i = 0; i < g.degree(); ++i)
        if (!g.coeff((u64)i).is_zero()) return false;
    return true;
}

bool is_q_linearized(const Poly& g) {
    u64 q = g.field()->card();
    if (g.degree() < 1 || !g.constant_term().is_zero()) return false;
    for (u64 i = 1; i <= (u64)g.degree(); ++i) {
        if (g.field()->el_is_zero(g.coeff_ptr(i))) continue;
        u64 e = i;
        while (e > 1 && e % q == 0) e /= q;
        if (e != 1) return false;
    }
    return true;
}

}  // namespace

IterProfile reduce_special_g(const Poly& f, const Poly& g, u64 n, u64 degree_cap, u64 seed) {
    if (!is_monomial(g) && !is_q_linearized(g))
        fail(errc::not_special_form, "reduce_special_g: g must be a monomial or q-linearized");
    PReduction pr = p_reduction(g);
    if (pr.reduced_degree < 2)
        fail(errc::not_special_form, "reduce_special_g: linear p-reduction (p-critical pair)");
    if (pr.h > 0) {
        // the transfer needs sigma_h to fix the reduced polynomial
        for (int i = 0; i <= pr.reduced.degree(); ++i) {
            FieldElem c = pr.reduced.coeff((u64)i);
            if (!(frobenius(c, (i64)pr.h) == c))
                fail(errc::not_special_form,
                     "reduce_special_g: p-reduction not fixed by sigma_h");
        }
    }
    IterProfile base = profile_direct(f, pr.reduced, n, degree_cap, seed);
    u64 scale = pow_u64_checked(f.field()->p, mul_u64_checked(n, pr.h));
    IterProfile out = base;
    out.max_mult = mul_u64_checked(base.max_mult, scale);
    out.min_mult = mul_u64_checked(base.min_mult, scale);
    for (auto& r : out.census.rows) r.multiplicity = mul_u64_checked(r.multiplicity, scale);
    return out;
}

ExpGrowthReport exp_growth_construction(const Poly& f, u64 n_max, u64 degree_cap, u64 seed) {
    const FieldPtr& F = f.field();
    if (!F->card_fits_u64() || F->card() <= 2) fail(errc::q_too_small, "construction needs q > 2");
    u64 q = F->card();
    if (!f.is_monic() || !is_irreducible(f))
        fail(errc::not_irreducible, "construction needs monic irreducible f");
    FieldElem a0 = f.constant_term();
    if (a0.is_zero() || a0.is_one())
        fail(errc::bad_constant_term, "construction needs f(0) outside {0, 1}");
    u64 k = (u64)f.degree();

    Poly base = Poly::monomial(F, q, one_elem(F)) - Poly::x(F);
    Poly g = Poly::one(F);
    for (u64 i = 0; i + 1 < q; ++i) g = g * base;  // (x^q - x)^(q-1)
    if ((u64)g.degree() > degree_cap) fail(errc::degree_overflow, "construction exceeds degree cap");

    ExpGrowthReport rep;
    rep.g = g;

    Factorization at1 = factor(compose(f, g), seed);
    rep.separable_at_1 = true;
    rep.degrees_double_k = true;
    for (const auto& [h, e] : at1.factors) {
        if (e != 1) rep.separable_at_1 = false;
        u64 d = (u64)h.degree();
        if (d % k != 0 || d / k < 2) rep.degrees_double_k = false;
        FieldElem c = h.constant_term();
        if (!c.is_zero() && !c.is_one()) rep.has_good_factor = true;
    }
    rep.reducible_at_1 = at1.factors.size() > 1 || at1.factors[0].second > 1;

    rep.growth_ok = true;
    for (u64 n = 0; n <= n_max; ++n) {
        IterProfile p = profile_direct(f, g, n, degree_cap, seed);
        u64 two_n = pow_u64_checked(2, n);
        if (p.num_factors < two_n || p.max_factor_deg < mul_u64_checked(k, two_n))
            rep.growth_ok = false;
        rep.profiles.push_back(std::move(p));
    }
    return rep;
}

}  // namespace iterfact
