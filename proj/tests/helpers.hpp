#ifndef ITERFACT_TEST_HELPERS_HPP
#define ITERFACT_TEST_HELPERS_HPP

#include <string>

#include "iterfact/classify.hpp"
#include "iterfact/closedform.hpp"
#include "iterfact/parse.hpp"
#include "iterfact/profile.hpp"

namespace tst {

using namespace iterfact;

inline FieldPtr F(u64 p, u32 m = 1) { return make_field(p, m); }

inline Poly P(const FieldPtr& f, const std::string& s) { return parse_poly(s, f); }

// random polynomial of exact degree d
inline Poly random_poly(const FieldPtr& F, u64 d, Rng& rng) {
    u64 q = F->card();
    std::vector<u64> flat((d + 1) * F->m, 0);
    for (u64 i = 0; i < d; ++i) {
        FieldElem c = element_from_index(F, rng.below(q));
        std::copy(c.c.begin(), c.c.end(), flat.begin() + i * F->m);
    }
    FieldElem lead = element_from_index(F, 1 + rng.below(q - 1));
    std::copy(lead.c.begin(), lead.c.end(), flat.begin() + d * F->m);
    return Poly::from_flat(F, std::move(flat));
}

inline Poly random_monic(const FieldPtr& F, u64 d, Rng& rng) {
    Poly p = random_poly(F, d, rng);
    return p.monic();
}

inline Poly random_irreducible(const FieldPtr& F, u64 d, Rng& rng) {
    while (true) {
        Poly p = random_monic(F, d, rng);
        if (is_irreducible(p)) return p;
    }
}

// independent order oracle: repeated multiplication by x modulo f
inline u64 oracle_order_incremental(const Poly& f, u64 limit) {
    Poly fm = f.monic();
    const Poly X = Poly::x(f.field());
    Poly cur = X % fm;
    const Poly one = Poly::one(f.field()) % fm;
    for (u64 s = 1; s <= limit; ++s) {
        if (cur == one) return s;
        cur = mulmod_poly(cur, X, fm);
    }
    return 0;
}

// independent valuation oracle: largest t with a^n = 1 (mod r^t)
inline u64 oracle_nu_r(u64 r, u64 a, u64 n) {
    u64 t = 0, rt = 1;
    while (rt <= UINT64_MAX / r) {
        rt *= r;
        if (powmod(a % rt, n, rt) != 1) return t;
        ++t;
    }
    return t;
}

inline bool profiles_equal(const IterProfile& a, const IterProfile& b) {
    return a.max_mult == b.max_mult && a.min_mult == b.min_mult &&
           a.sqfree_deg == b.sqfree_deg && a.max_factor_deg == b.max_factor_deg &&
           a.min_factor_deg == b.min_factor_deg && a.num_factors == b.num_factors &&
           a.avg_factor_deg == b.avg_factor_deg &&
           census_equal_aggregated(a.census, b.census);
}

}  // namespace tst

#endif
