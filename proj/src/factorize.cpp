#include <algorithm>

#include "iterfact/poly.hpp"
#include "poly_internal.hpp"

namespace iterfact {

Poly mulmod_poly(const Poly& a, const Poly& b, const Poly& f) {
    const FieldPtr& Fp = a.field();
    if (Fp->m == 1 && f.is_monic()) {
        auto prod = detail::zp_mul(a.flat(), b.flat(), Fp->p);
        detail::zp_rem_inplace(prod, f.flat(), Fp->p);
        return Poly::from_flat(Fp, std::move(prod));
    }
    return (a * b) % f;
}

Poly powmod_poly(const Poly& base, u64 e, const Poly& f) {
    const FieldPtr& Fp = base.field();
    Poly r = Poly::one(Fp) % f;
    Poly b = base % f;
    while (e) {
        if (e & 1) r = mulmod_poly(r, b, f);
        b = mulmod_poly(b, b, f);
        e >>= 1;
    }
    return r;
}

Poly frobp_mod(const Poly& h, const Poly& f) {
    const FieldPtr& Fp = h.field();
    u64 p = Fp->p;
    u32 m = Fp->m;
    if (h.is_zero()) return h;
    if (p > 32) return powmod_poly(h, p, f);
    // (sum c_i x^i)^p = sum c_i^p x^(pi); spread then reduce
    if (m == 1) {
        auto spread = detail::zp_frobp_mod(h.flat(), f.flat(), p);
        return Poly::from_flat(Fp, std::move(spread));
    }
    std::vector<u64> spread(((size_t)h.degree() * p + 1) * m, 0);
    for (u64 i = 0; i <= (u64)h.degree(); ++i)
        Fp->el_pow_p(spread.data() + i * p * m, h.flat().data() + i * m, 1);
    return Poly::from_flat(Fp, std::move(spread)) % f;
}

Poly frobq_mod(const Poly& h, const Poly& f) {
    Poly cur = h % f;
    for (u32 i = 0; i < h.field()->m; ++i) cur = frobp_mod(cur, f);
    return cur;
}

// ---- squarefree decomposition -------------------------------------------------

namespace {

// f monic; returns pairwise coprime monic squarefree parts with their multiplicities
void squarefree_decomp(const Poly& f, u64 mult_scale,
                       std::vector<std::pair<Poly, u64>>& out) {
    const FieldPtr& Fp = f.field();
    u64 p = Fp->p;
    if (f.degree() < 1) return;
    Poly d = derivative(f);
    if (d.is_zero()) {
        squarefree_decomp(pth_root_poly(f), mult_scale * p, out);
        return;
    }
    Poly w = gcd_poly(f, d);
    Poly u = f / w;
    u64 i = 1;
    while (u.degree() > 0) {
        Poly y = gcd_poly(u, w);
        Poly z = u / y;
        if (z.degree() > 0) out.push_back({z, i * mult_scale});
        u = std::move(y);
        w = w / u;
        ++i;
    }
    if (w.degree() > 0) squarefree_decomp(pth_root_poly(w), mult_scale * p, out);
}

// ---- distinct-degree: u monic squarefree -> (product of same-degree factors, degree)

std::vector<std::pair<Poly, u64>> ddf(Poly u) {
    const FieldPtr& Fp = u.field();
    std::vector<std::pair<Poly, u64>> out;
    if (u.degree() < 1) return out;
    const Poly X = Poly::x(Fp);
    Poly h = X % u;
    u64 i = 0;
    const u64 block = 8;
    while (u.degree() > 0 && 2 * (i + 1) <= (u64)u.degree()) {
        u64 steps = std::min(block, (u64)u.degree() / 2 - i);
        std::vector<Poly> hs;
        hs.reserve(steps);
        Poly prod = Poly::one(Fp);
        for (u64 t = 0; t < steps; ++t) {
            h = frobq_mod(h, u);
            hs.push_back(h);
            prod = mulmod_poly(prod, h - X, u);
        }
        Poly g = gcd_poly(prod, u);
        if (g.degree() > 0) {
            for (u64 t = 0; t < steps && g.degree() > 0; ++t) {
                Poly d = gcd_poly(g, hs[t] - X);
                if (d.degree() > 0) {
                    out.push_back({d, i + t + 1});
                    u = u / d;
                    g = g / d;
                }
            }
            h = h % u;
        }
        i += steps;
    }
    if (u.degree() > 0) out.push_back({u, (u64)u.degree()});
    return out;
}

// ---- equal-degree (Cantor-Zassenhaus), seeded ----------------------------------

Poly random_poly_below(const FieldPtr& Fp, u64 deg_bound, Rng& rng) {
    std::vector<u64> flat(deg_bound * Fp->m);
    for (u64 i = 0; i < deg_bound; ++i) {
        FieldElem e = element_from_index(Fp, rng.below(Fp->card()));
        std::copy(e.c.begin(), e.c.end(), flat.begin() + i * Fp->m);
    }
    return Poly::from_flat(Fp, std::move(flat));
}

void edf(const Poly& prod, u64 r, Rng& rng, std::vector<Poly>& out) {
    const FieldPtr& Fp = prod.field();
    if ((u64)prod.degree() == r) {
        out.push_back(prod);
        return;
    }
    if (!Fp->card_fits_u64()) fail(errc::overflow, "field too large for equal-degree splitting");
    u64 q = Fp->card();
    const Poly one = Poly::one(Fp);
    while (true) {
        Poly w = random_poly_below(Fp, (u64)prod.degree(), rng);
        if (w.degree() < 1) continue;
        Poly g(Fp);
        if (Fp->p == 2) {
            // absolute trace to F_2 of w, computed mod prod
            u64 bits = r * Fp->m;
            Poly acc = w % prod, cur = acc;
            for (u64 j = 1; j < bits; ++j) {
                cur = mulmod_poly(cur, cur, prod);
                acc = acc + cur;
            }
            g = gcd_poly(acc, prod);
        } else {
            // w^((q^r-1)/2) = N(w)^((q-1)/2) with the norm chain N(w) = prod w^(q^j)
            Poly acc = w % prod, cur = acc;
            for (u64 j = 1; j < r; ++j) {
                cur = frobq_mod(cur, prod);
                acc = mulmod_poly(acc, cur, prod);
            }
            Poly c = powmod_poly(acc, (q - 1) / 2, prod);
            g = gcd_poly(c - one, prod);
        }
        if (g.degree() > 0 && g.degree() < prod.degree()) {
            edf(g, r, rng, out);
            edf(prod / g, r, rng, out);
            return;
        }
    }
}

}  // namespace

// ---- public entry points --------------------------------------------------------

Poly Factorization::reconstruct() const {
    if (factors.empty()) return Poly::monomial(leading.F, 0, leading);
    const FieldPtr& Fp = factors[0].first.field();
    Poly acc = Poly::monomial(Fp, 0, leading);
    for (const auto& [g, e] : factors) {
        Poly pw = Poly::one(Fp);
        Poly base = g;
        u64 k = e;
        while (k) {
            if (k & 1) pw = pw * base;
            if (k >>= 1) base = base * base;
        }
        acc = acc * pw;
    }
    return acc;
}

Factorization factor(const Poly& a, u64 seed, u64 degree_cap) {
    if (a.degree() < 1) fail(errc::constant_polynomial, "factor: input must be nonconstant");
    if ((u64)a.degree() > degree_cap)
        fail(errc::degree_overflow, "factor: degree exceeds cap");
    Factorization fz;
    fz.leading = a.leading();
    std::vector<std::pair<Poly, u64>> parts;
    squarefree_decomp(a.monic(), 1, parts);
    Rng rng(seed ^ 0x5eedf00dULL);
    for (const auto& [sqf, mult] : parts) {
        for (const auto& [prod, r] : ddf(sqf)) {
            std::vector<Poly> irr;
            edf(prod, r, rng, irr);
            for (Poly& g : irr) fz.factors.push_back({std::move(g), mult});
        }
    }
    std::sort(fz.factors.begin(), fz.factors.end(),
              [](const auto& x, const auto& y) { return poly_cmp(x.first, y.first) < 0; });
    if (fz.reconstruct() != a) fail(errc::internal, "factor: reconstruction mismatch");
    return fz;
}

Poly squarefree_part(const Poly& a) {
    if (a.degree() < 1) fail(errc::constant_polynomial, "squarefree_part: input must be nonconstant");
    std::vector<std::pair<Poly, u64>> parts;
    squarefree_decomp(a.monic(), 1, parts);
    Poly acc = Poly::one(a.field());
    // parts are pairwise coprime, so the radical is just their product
    std::sort(parts.begin(), parts.end(),
              [](const auto& x, const auto& y) { return poly_cmp(x.first, y.first) < 0; });
    for (const auto& [z, e] : parts) acc = acc * z;
    return acc;
}

bool is_irreducible(const Poly& a) {
    if (a.degree() < 1) fail(errc::constant_polynomial, "is_irreducible: input must be nonconstant");
    if (a.degree() == 1) return true;
    Poly f = a.monic();
    u64 n = (u64)f.degree();
    const Poly X = Poly::x(f.field());
    // Rabin: x^(q^n) = x mod f, and gcd(x^(q^(n/r)) - x, f) = 1 for primes r | n
    std::vector<u64> checkpoints;
    for (auto [r, e] : factorize_u64(n).prime_powers) checkpoints.push_back(n / r);
    std::sort(checkpoints.begin(), checkpoints.end());
    Poly h = X % f;
    size_t next = 0;
    for (u64 i = 1; i <= n; ++i) {
        h = frobq_mod(h, f);
        if (next < checkpoints.size() && checkpoints[next] == i) {
            ++next;
            if (gcd_poly(h - X, f).degree() != 0) return false;
        }
    }
    return h == X % f;
}

u64 irreducible_order(const Poly& f) {
    if (f.constant_term().is_zero())
        fail(errc::divisible_by_x, "order undefined for multiples of x");
    const FieldPtr& Fp = f.field();
    u64 n = pow_u64_checked(Fp->card(), (u64)f.degree()) - 1;
    u64 ord = n;
    Poly fm = f.monic();
    const Poly X = Poly::x(Fp);
    for (auto [r, e] : factorize_u64(n).prime_powers) {
        for (u32 i = 0; i < e && ord % r == 0; ++i) {
            if (powmod_poly(X, ord / r, fm) == Poly::one(Fp))
                ord /= r;
            else
                break;
        }
    }
    return ord;
}

u64 poly_order(const Poly& f) {
    if (f.degree() < 1) fail(errc::constant_polynomial, "poly_order: input must be nonconstant");
    if (f.constant_term().is_zero())
        fail(errc::divisible_by_x, "poly_order: f(0) = 0");
    Factorization fz = factor(f);
    u64 ord = 1, numax = 1;
    for (const auto& [h, e] : fz.factors) {
        ord = lcm_u64_checked(ord, irreducible_order(h));
        numax = std::max(numax, e);
    }
    if (numax > 1) ord = mul_u64_checked(ord, pow_u64_checked(f.field()->p, ceil_log(f.field()->p, numax)));
    return ord;
}

std::vector<FieldElem> roots_in_field(const Poly& f) {
    std::vector<FieldElem> out;
    if (f.degree() < 1) return out;
    for (const auto& [g, e] : factor(f).factors) {
        if (g.degree() == 1) out.push_back(-g.constant_term());
    }
    std::sort(out.begin(), out.end(), [](const FieldElem& a, const FieldElem& b) {
        return elem_cmp(a, b) < 0;
    });
    return out;
}

}  // namespace iterfact
