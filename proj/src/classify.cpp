#include "iterfact/classify.hpp"

#include <algorithm>
#include <map>

namespace iterfact {

PReduction p_reduction(const Poly& g) {
    if (g.degree() < 1) fail(errc::constant_polynomial, "p_reduction: input must be nonconstant");
    Poly G = g;
    u64 h = 0;
    while (derivative(G).is_zero()) {
        G = pth_root_poly(G);
        ++h;
    }
    PReduction out;
    out.reduced_degree = (u64)G.degree();
    out.original_degree = (u64)g.degree();
    out.reduced = std::move(G);
    out.h = h;
    return out;
}

std::optional<PCriticalInfo> is_p_critical(const Poly& g) {
    if (g.degree() < 2) fail(errc::degree_too_small, "is_p_critical: deg g must be >= 2");
    PReduction pr = p_reduction(g);
    if (pr.reduced_degree != 1) return std::nullopt;
    return PCriticalInfo{g.leading(), g.constant_term(), pr.h};
}

std::optional<CriticalInfo> is_critical(const Poly& f, const Poly& g) {
    if (f.degree() < 1 || g.degree() < 2)
        fail(errc::degree_too_small, "is_critical: need deg f >= 1 and deg g >= 2");
    // f = beta (x - alpha)^k  iff  the squarefree part of f is linear; this
    // avoids dividing by k, which may vanish in characteristic p
    Poly sf = squarefree_part(f);
    if (sf.degree() != 1) return std::nullopt;
    FieldElem alpha = -sf.constant_term();
    Poly shifted = g - Poly::monomial(g.field(), 0, alpha);
    Poly sg = squarefree_part(shifted);
    if (sg.degree() != 1 || !(-sg.constant_term() == alpha)) return std::nullopt;
    CriticalInfo out;
    out.alpha = alpha;
    out.beta = f.leading();
    out.gamma = g.leading();
    out.k = (u64)f.degree();
    out.D = (u64)g.degree();
    return out;
}

PairClass classify_pair(const Poly& f, const Poly& g) {
    if (f.degree() < 1 || g.degree() < 2)
        fail(errc::degree_too_small, "classify_pair: need deg f >= 1 and deg g >= 2");
    PairClass out;
    if (auto crit = is_critical(f, g)) {
        out.kind = PairClass::Kind::critical;
        crit->also_p_critical = is_p_critical(g).has_value();
        out.critical = std::move(crit);
        return out;
    }
    if (auto pc = is_p_critical(g)) {
        out.kind = PairClass::Kind::p_critical;
        out.p_critical = std::move(pc);
        return out;
    }
    out.kind = PairClass::Kind::generic;
    out.reduction = p_reduction(g);
    return out;
}

IterProfile combine_profiles(const std::vector<std::pair<u64, IterProfile>>& parts, u64 n) {
    if (parts.empty()) fail(errc::empty_parts, "combine_profiles: no parts");
    IterProfile out;
    out.n = n;
    out.max_mult = 0;
    out.min_mult = UINT64_MAX;
    out.max_factor_deg = 0;
    out.min_factor_deg = UINT64_MAX;
    std::map<std::pair<u64, u64>, u64> agg;
    for (const auto& [mult, prof] : parts) {
        out.max_mult = std::max(out.max_mult, mul_u64_checked(mult, prof.max_mult));
        out.min_mult = std::min(out.min_mult, mul_u64_checked(mult, prof.min_mult));
        out.max_factor_deg = std::max(out.max_factor_deg, prof.max_factor_deg);
        out.min_factor_deg = std::min(out.min_factor_deg, prof.min_factor_deg);
        out.sqfree_deg += prof.sqfree_deg;
        out.num_factors += prof.num_factors;
        // distinct irreducible factors of distinct parts never collide (the
        // composed polynomials are pairwise coprime), so counts just add
        for (const auto& r : prof.census.rows)
            agg[{r.degree, mul_u64_checked(mult, r.multiplicity)}] += r.count;
    }
    for (const auto& [key, count] : agg)
        out.census.rows.push_back(CensusRow{key.first, key.second, count, std::nullopt, std::nullopt});
    out.avg_factor_deg = Rational((i64)out.sqfree_deg, (i64)out.num_factors);
    return out;
}

}  // namespace iterfact
