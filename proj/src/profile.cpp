#include "iterfact/profile.hpp"

#include "iterfact/parse.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace iterfact {

// ---- census ---------------------------------------------------------------------

u64 FactorCensus::distinct_factors() const {
    u64 s = 0;
    for (const auto& r : rows) s += r.count;
    return s;
}

u64 FactorCensus::squarefree_degree() const {
    u64 s = 0;
    for (const auto& r : rows) s += mul_u64_checked(r.degree, r.count);
    return s;
}

u64 FactorCensus::total_degree() const {
    u64 s = 0;
    for (const auto& r : rows)
        s += mul_u64_checked(mul_u64_checked(r.degree, r.multiplicity), r.count);
    return s;
}

u64 FactorCensus::max_degree() const {
    u64 v = 0;
    for (const auto& r : rows) v = std::max(v, r.degree);
    return v;
}

u64 FactorCensus::min_degree() const {
    u64 v = UINT64_MAX;
    for (const auto& r : rows) v = std::min(v, r.degree);
    return v == UINT64_MAX ? 0 : v;
}

u64 FactorCensus::max_multiplicity() const {
    u64 v = 0;
    for (const auto& r : rows) v = std::max(v, r.multiplicity);
    return v;
}

u64 FactorCensus::min_multiplicity() const {
    u64 v = UINT64_MAX;
    for (const auto& r : rows) v = std::min(v, r.multiplicity);
    return v == UINT64_MAX ? 0 : v;
}

FactorCensus FactorCensus::aggregated() const {
    std::map<std::pair<u64, u64>, u64> agg;
    for (const auto& r : rows) agg[{r.degree, r.multiplicity}] += r.count;
    FactorCensus out;
    for (const auto& [key, count] : agg)
        out.rows.push_back(CensusRow{key.first, key.second, count, std::nullopt, std::nullopt});
    return out;
}

std::string FactorCensus::digest() const {
    std::string out;
    for (const auto& r : rows) {
        if (!out.empty()) out += ";";
        out += std::to_string(r.degree) + ":" + std::to_string(r.multiplicity) + ":" +
               std::to_string(r.count);
        if (r.order) out += ":o=" + std::to_string(*r.order);
        if (r.fq_order) out += ":h=" + poly_to_string(*r.fq_order);
    }
    return out;
}

FactorCensus census_of(const Factorization& fz) {
    std::map<std::pair<u64, u64>, u64> agg;
    for (const auto& [g, e] : fz.factors) agg[{(u64)g.degree(), e}] += 1;
    FactorCensus out;
    for (const auto& [key, count] : agg)
        out.rows.push_back(CensusRow{key.first, key.second, count, std::nullopt, std::nullopt});
    return out;
}

bool census_equal_aggregated(const FactorCensus& a, const FactorCensus& b) {
    FactorCensus x = a.aggregated(), y = b.aggregated();
    if (x.rows.size() != y.rows.size()) return false;
    for (size_t i = 0; i < x.rows.size(); ++i) {
        const auto& r = x.rows[i];
        const auto& s = y.rows[i];
        if (r.degree != s.degree || r.multiplicity != s.multiplicity || r.count != s.count)
            return false;
    }
    return true;
}

// ---- IterProfile ------------------------------------------------------------------

IterProfile profile_from_census(u64 n, FactorCensus census) {
    if (census.rows.empty()) fail(errc::internal, "empty census");
    IterProfile p;
    p.n = n;
    p.max_mult = census.max_multiplicity();
    p.min_mult = census.min_multiplicity();
    p.sqfree_deg = census.squarefree_degree();
    p.max_factor_deg = census.max_degree();
    p.min_factor_deg = census.min_degree();
    p.num_factors = census.distinct_factors();
    p.avg_factor_deg = Rational((i64)p.sqfree_deg, (i64)p.num_factors);
    p.census = std::move(census);
    return p;
}

void IterProfile::validate(u64 expected_total_degree) const {
    auto check = [](bool ok, const char* what) {
        if (!ok) fail(errc::internal, std::string("profile invariant violated: ") + what);
    };
    check(min_mult <= max_mult, "e <= E");
    check(min_factor_deg <= max_factor_deg, "m <= M");
    check(min_factor_deg * num_factors <= sqfree_deg, "m*N <= Delta");
    check(sqfree_deg <= max_factor_deg * num_factors, "Delta <= M*N");
    check(avg_factor_deg == Rational((i64)sqfree_deg, (i64)num_factors), "A = Delta/N");
    check(census.total_degree() == expected_total_degree, "total degree conservation");
}

// ---- direct and root-reduction profiles --------------------------------------------

namespace {

u64 composed_degree_checked(const Poly& f, const Poly& g, u64 n, u64 cap) {
    if (f.degree() < 1) fail(errc::degree_too_small, "profile: deg f must be >= 1");
    if (g.degree() < 1) fail(errc::degree_too_small, "profile: deg g must be >= 1");
    u64 total = (u64)f.degree();
    for (u64 i = 0; i < n; ++i) {
        total = mul_u64_checked(total, (u64)g.degree());
        if (total > cap)
            fail(errc::degree_overflow, "profile: composed degree exceeds cap");
    }
    return total;
}

}  // namespace

IterProfile profile_direct(const Poly& f, const Poly& g, u64 n, u64 degree_cap, u64 seed) {
    u64 total = composed_degree_checked(f, g, n, degree_cap);
    Poly gn = iterate_poly(g, n, degree_cap);
    Poly comp = compose(f, gn);
    IterProfile p = profile_from_census(n, census_of(factor(comp, seed, degree_cap)));
    p.validate(total);
    return p;
}

IterProfile profile_via_root(const Poly& f, const Poly& g, u64 n, u64 degree_cap, u64 seed) {
    u64 total = composed_degree_checked(f, g, n, degree_cap);
    if (!is_irreducible(f)) fail(errc::not_irreducible, "profile_via_root: f must be irreducible");
    u64 k = (u64)f.degree();
    auto [ext, emb] = extend(f.field(), (u32)k);
    Poly fe = embed_poly(f, emb);
    std::vector<FieldElem> roots = roots_in_field(fe);
    if (roots.empty()) fail(errc::internal, "irreducible f has no root in its splitting field");
    FieldElem alpha = roots.front();
    Poly gn = iterate_poly(g, n, degree_cap);
    Poly shifted = embed_poly(gn, emb) - Poly::monomial(ext, 0, alpha);
    FactorCensus over_ext = census_of(factor(shifted, seed, degree_cap));
    FactorCensus mapped;
    for (const auto& r : over_ext.rows)
        mapped.rows.push_back(CensusRow{mul_u64_checked(r.degree, k), r.multiplicity, r.count,
                                        std::nullopt, std::nullopt});
    IterProfile p = profile_from_census(n, std::move(mapped));
    p.validate(total);
    return p;
}

// ---- spins ----------------------------------------------------------------------------

std::pair<Poly, u32> spin(const Poly& F, const Embedding& emb) {
    if (F.is_zero()) fail(errc::zero_polynomial, "spin of the zero polynomial");
    if (!same_field(*F.field(), *emb.super)) fail(errc::field_mismatch, "spin: field mismatch");
    u32 s = 1;
    for (int i = 0; i <= F.degree(); ++i) {
        FieldElem c = F.coeff((u64)i);
        if (!c.is_zero()) s = (u32)lcm_u64_checked(s, element_degree(c, emb.sub->m));
    }
    Poly acc = F, conj = F;
    for (u32 j = 1; j < s; ++j) {
        conj = frobenius_poly(conj, (i64)emb.sub->m);
        acc = acc * conj;
    }
    auto down = unembed_poly(acc, emb);
    if (!down) fail(errc::internal, "spin has coefficients outside the base field");
    return {std::move(*down), s};
}

Factorization factor_composition(const Poly& f, const Poly& g, u64 seed) {
    if (!same_field(*f.field(), *g.field()))
        fail(errc::field_mismatch, "factor_composition: fields differ");
    if (g.degree() < 1) fail(errc::degree_too_small, "factor_composition: deg g must be >= 1");
    if (!is_irreducible(f)) fail(errc::not_irreducible, "factor_composition: f must be irreducible");
    u64 k = (u64)f.degree();
    auto [ext, emb] = extend(f.field(), (u32)k);
    Poly fe = embed_poly(f, emb);
    FieldElem alpha = roots_in_field(fe).front();
    Poly shifted = embed_poly(g, emb) - Poly::monomial(ext, 0, alpha);
    Factorization over_ext = factor(shifted, seed);
    Factorization out;
    out.leading = f.leading() * g.leading().pow(k);
    for (const auto& [R, e] : over_ext.factors) {
        auto [S, s] = spin(R, emb);
        if (s != k || (u64)S.degree() != k * (u64)R.degree())
            fail(errc::internal, "spin degree defect");
        out.factors.push_back({std::move(S), e});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& x, const auto& y) { return poly_cmp(x.first, y.first) < 0; });
    for (size_t i = 1; i < out.factors.size(); ++i)
        if (out.factors[i - 1].first == out.factors[i].first)
            fail(errc::internal, "spins of distinct factors collided");
    if (out.reconstruct() != compose(f, g))
        fail(errc::internal, "factor_composition: product mismatch");
    return out;
}

// ---- preimage trees ---------------------------------------------------------------------

namespace {

struct AmbientCtx {
    FieldPtr ambient;
    Poly g_emb;  // g over ambient
};

// lift everything into a larger ambient field
void grow_ambient(AmbientCtx& ctx, const Poly& g_orig, u32 new_abs,
                  std::vector<PreimageTuple>& tuples) {
    FieldPtr next = make_field(ctx.ambient->p, new_abs);
    Embedding up = make_embedding(ctx.ambient, next);
    for (auto& t : tuples)
        for (auto& e : t.entries) e = up.embed(e);
    ctx.ambient = next;
    ctx.g_emb = embed_poly(g_orig, make_embedding(g_orig.field(), next));
}

}  // namespace

PreimageEnumeration preimage_tuples(const Poly& g, const FieldElem& alpha, u64 n,
                                    u32 ambient_abs_cap, u64 seed) {
    if (n < 1) fail(errc::degree_too_small, "preimage_tuples: n must be >= 1");
    if (g.degree() < 1) fail(errc::degree_too_small, "preimage_tuples: deg g must be >= 1");
    AmbientCtx ctx;
    ctx.ambient = alpha.F;
    ctx.g_emb = embed_poly(g, make_embedding(g.field(), ctx.ambient));
    std::vector<PreimageTuple> tuples{PreimageTuple{{alpha}}};
    for (u64 level = 2; level <= n; ++level) {
        // pass 1: splitting degree needed for every preimage at this level
        std::map<std::vector<u64>, Factorization> cache;
        u64 needed = ctx.ambient->m;
        for (const auto& t : tuples) {
            const FieldElem& gamma = t.entries.back();
            if (cache.count(gamma.c)) continue;
            Poly shifted = ctx.g_emb - Poly::monomial(ctx.ambient, 0, gamma);
            Factorization fz = factor(shifted, seed);
            for (const auto& [R, e] : fz.factors)
                needed = lcm_u64_checked(needed, (u64)ctx.ambient->m * (u64)R.degree());
            cache.emplace(gamma.c, std::move(fz));
        }
        if (needed > ambient_abs_cap)
            fail(errc::field_cap_exceeded,
                 "preimage_tuples: splitting field needs absolute degree " +
                     std::to_string(needed));
        if (needed > ctx.ambient->m) grow_ambient(ctx, g, (u32)needed, tuples);
        // pass 2: roots now split completely over the (possibly grown) ambient
        std::map<std::vector<u64>, std::vector<FieldElem>> roots;
        std::vector<PreimageTuple> next;
        for (const auto& t : tuples) {
            const FieldElem& gamma = t.entries.back();
            auto it = roots.find(gamma.c);
            if (it == roots.end()) {
                Poly shifted = ctx.g_emb - Poly::monomial(ctx.ambient, 0, gamma);
                it = roots.emplace(gamma.c, roots_in_field(shifted)).first;
                if (it->second.empty())
                    fail(errc::internal, "preimage_tuples: no roots after splitting extension");
            }
            for (const FieldElem& r : it->second) {
                PreimageTuple ext = t;
                ext.entries.push_back(r);
                next.push_back(std::move(ext));
            }
        }
        tuples = std::move(next);
    }
    return PreimageEnumeration{ctx.ambient, std::move(tuples)};
}

std::pair<u64, u64> nu_bounds(const Poly& g, const FieldElem& alpha, u64 n,
                              u32 ambient_abs_cap, u64 seed) {
    PreimageEnumeration en = preimage_tuples(g, alpha, n, ambient_abs_cap, seed);
    Poly g_emb = embed_poly(g, make_embedding(g.field(), en.ambient));
    std::map<std::vector<u64>, std::pair<u64, u64>> mult;  // lambda -> (nu*, nu)
    auto mults_of = [&](const FieldElem& lam) {
        auto it = mult.find(lam.c);
        if (it != mult.end()) return it->second;
        Poly shifted = g_emb - Poly::monomial(en.ambient, 0, lam);
        FactorCensus c = census_of(factor(shifted, seed));
        auto v = std::make_pair(c.min_multiplicity(), c.max_multiplicity());
        mult.emplace(lam.c, v);
        return v;
    };
    u64 lower = UINT64_MAX, upper = 0;
    for (const auto& t : en.tuples) {
        u64 lo = 1, hi = 1;
        for (const FieldElem& lam : t.entries) {
            auto [nmin, nmax] = mults_of(lam);
            lo = mul_u64_checked(lo, nmin);
            hi = mul_u64_checked(hi, nmax);
        }
        lower = std::min(lower, lo);
        upper = std::max(upper, hi);
    }
    return {lower, upper};
}

// ---- periodicity --------------------------------------------------------------------------

std::optional<u64> is_g_periodic(const FieldElem& alpha, const Poly& g) {
    Poly g_emb = embed_poly(g, make_embedding(g.field(), alpha.F));
    std::set<std::vector<u64>> seen;
    seen.insert(alpha.c);
    FieldElem cur = alpha;
    for (u64 i = 1;; ++i) {
        cur = g_emb(cur);
        if (cur == alpha) return i;
        if (!seen.insert(cur.c).second) return std::nullopt;  // closed a cycle without alpha
    }
}

bool has_periodic_root(const Poly& f, const Poly& g, u64 seed) {
    if (f.degree() < 1) fail(errc::degree_too_small, "has_periodic_root: deg f must be >= 1");
    if (!same_field(*f.field(), *g.field()))
        fail(errc::field_mismatch, "has_periodic_root: fields differ");
    for (const auto& [h, e] : factor(f, seed).factors) {
        auto [ext, emb] = extend(f.field(), (u32)h.degree());
        Poly he = embed_poly(h, emb);
        FieldElem alpha = roots_in_field(he).front();
        if (is_g_periodic(alpha, g)) return true;
    }
    return false;
}

}  // namespace iterfact
