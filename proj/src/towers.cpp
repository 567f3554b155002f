#include "iterfact/poly.hpp"

namespace iterfact {

Embedding make_embedding(const FieldPtr& sub, const FieldPtr& super) {
    if (sub->p != super->p) fail(errc::field_mismatch, "embedding across characteristics");
    if (super->m % sub->m != 0)
        fail(errc::degree_mismatch, "subfield degree does not divide superfield degree");
    if (same_field(*sub, *super)) return identity_embedding(sub);
    if (sub->m == 1) return Embedding{sub, super, zero_elem(super)};
    // canonical generator image: the smallest root of sub's modulus in super
    std::vector<i64> coeffs(sub->modulus.begin(), sub->modulus.end());
    Poly mod_poly = Poly::from_ints(super, coeffs);
    std::vector<FieldElem> roots = roots_in_field(mod_poly);
    if (roots.empty()) fail(errc::internal, "modulus has no root in the extension");
    return Embedding{sub, super, roots.front()};
}

std::pair<FieldPtr, Embedding> extend(const FieldPtr& base, u32 s) {
    if (s < 1) fail(errc::degree_mismatch, "extension degree must be positive");
    if (s == 1) return {base, identity_embedding(base)};
    u64 target = (u64)base->m * s;
    if (target > Field::max_degree)
        fail(errc::field_cap_exceeded,
             "extension of absolute degree " + std::to_string(target) + " not supported");
    FieldPtr sup = make_field(base->p, (u32)target);
    // record tower provenance; safe: we are the only owner at this point
    std::const_pointer_cast<Field>(sup)->base = base;
    return {sup, make_embedding(base, sup)};
}

Poly minimal_polynomial(const FieldElem& a, const Embedding& emb) {
    if (!same_field(*a.F, *emb.super))
        fail(errc::field_mismatch, "minimal_polynomial: element not in the extension");
    u32 s = element_degree(a, emb.sub->m);
    const FieldPtr& sup = emb.super;
    Poly acc = Poly::one(sup);
    FieldElem conj = a;
    for (u32 i = 0; i < s; ++i) {
        Poly lin = Poly::x(sup) - Poly::monomial(sup, 0, conj);
        acc = acc * lin;
        conj = frobenius(conj, emb.sub->m);
    }
    auto down = unembed_poly(acc, emb);
    if (!down) fail(errc::internal, "minimal polynomial has coefficients outside the base");
    return *down;
}

}  // namespace iterfact
