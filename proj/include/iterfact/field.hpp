#ifndef ITERFACT_FIELD_HPP
#define ITERFACT_FIELD_HPP

#include <memory>
#include <optional>
#include <vector>

#include "iterfact/util.hpp"

namespace iterfact {

class Field;
class Poly;
struct Embedding;
using FieldPtr = std::shared_ptr<const Field>;

// The finite field F_{p^m}, always realized over its prime field: elements are
// residues of F_p[t] modulo a monic irreducible of degree m. Extension towers
// are flattened to this form; see extend()/Embedding. Immutable once built.
class Field {
  public:
    static constexpr u32 max_degree = 64;

    u64 p;                    // prime characteristic
    u32 m;                    // absolute degree over F_p
    std::vector<u64> modulus; // monic, length m+1, coefficients in [0, p)

    // set when this field was created by extend(): the subfield it extends
    FieldPtr base;

    bool card_fits_u64() const;
    u64 card() const;               // p^m; throws errc::overflow if it does not fit
    u64 card_mod(u64 b) const;      // p^m mod b

    // ---- raw element kernels (vectors of length m, coefficients in [0, p)) ----
    u64 reduce_int(i64 v) const;    // canonical representative of v mod p
    void el_zero(u64* dst) const;
    void el_one(u64* dst) const;
    bool el_is_zero(const u64* a) const;
    void el_add(u64* dst, const u64* a, const u64* b) const;
    void el_sub(u64* dst, const u64* a, const u64* b) const;
    void el_neg(u64* dst, const u64* a) const;
    void el_mul(u64* dst, const u64* a, const u64* b) const;  // dst may alias a or b
    void el_inv(u64* dst, const u64* a) const;                // throws on zero
    void el_pow(u64* dst, const u64* a, u64 e) const;
    void el_pow_p(u64* dst, const u64* a, u64 times) const;   // a^(p^times)
    int el_cmp(const u64* a, const u64* b) const;             // numeric order of sum c_i p^i

    u64 mm(u64 a, u64 b) const {    // scalar product mod p
        return big_p_ ? mulmod(a, b, p) : a * b % p;
    }

  private:
    friend FieldPtr make_field(u64 p, u32 m, const std::vector<u64>* modulus);
    Field() = default;
    bool big_p_ = false;
};

// Builds F_{p^m}. If no modulus is given, picks the lexicographically smallest
// monic irreducible of degree m (coefficient tuple (a_0, ..., a_{m-1}) compared
// as integers, a_0 most significant).
FieldPtr make_field(u64 p, u32 m, const std::vector<u64>* modulus = nullptr);
FieldPtr make_field(u64 p, u32 m, const std::vector<u64>& modulus);

bool same_field(const Field& a, const Field& b);

// An element of a Field; a coefficient vector of length F->m over F_p.
struct FieldElem {
    FieldPtr F;
    std::vector<u64> c;

    FieldElem() = default;
    FieldElem(FieldPtr f, std::vector<u64> coords) : F(std::move(f)), c(std::move(coords)) {}

    bool is_zero() const { return F->el_is_zero(c.data()); }
    bool is_one() const;

    FieldElem pow(u64 e) const;
    FieldElem inv() const;

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a);
    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }
};

int elem_cmp(const FieldElem& a, const FieldElem& b);

FieldElem zero_elem(const FieldPtr& F);
FieldElem one_elem(const FieldPtr& F);
FieldElem gen_elem(const FieldPtr& F);              // residue class of t
FieldElem scalar_elem(const FieldPtr& F, i64 v);    // v mod p as a constant
FieldElem element_from_index(const FieldPtr& F, u64 idx);  // base-p digits, low to high
u64 element_index(const FieldElem& a);

// alpha^(p^i); i may be negative (the automorphism group is cyclic of order m)
FieldElem frobenius(const FieldElem& a, i64 i);

// least s >= 1 with a^(Q^s) = a, for Q = p^base_abs_deg; base_abs_deg must divide
// the absolute degree of a's field
u32 element_degree(const FieldElem& a, u32 base_abs_deg);
u32 element_degree(const FieldElem& a, const Field& base);

// least s >= 1 with a^s = 1; requires a != 0 and p^m - 1 to fit in 64 bits
u64 mult_order(const FieldElem& a);

// An F_p-linear field homomorphism sub -> super fixing F_p, determined by the
// image of sub's generator. Canonical: extend()/make_embedding pick the
// smallest root of sub's modulus in super.
struct Embedding {
    FieldPtr sub;
    FieldPtr super;
    FieldElem gen_image;

    bool is_identity() const { return sub->m == super->m; }
    u32 rel_degree() const { return super->m / sub->m; }

    FieldElem embed(const FieldElem& a) const;
    // inverse on the image; empty if a is not in the embedded subfield
    std::optional<FieldElem> unembed(const FieldElem& a) const;
};

Embedding identity_embedding(const FieldPtr& F);

// F_{Q^s} for Q = base's cardinality, together with the embedding of the base.
// Implemented with the factorization machinery (root finding); see towers.cpp.
std::pair<FieldPtr, Embedding> extend(const FieldPtr& base, u32 s);

// Canonical embedding between two already-built fields (sub->m must divide super->m).
Embedding make_embedding(const FieldPtr& sub, const FieldPtr& super);

// monic irreducible over emb.sub vanishing at a (a in emb.super);
// degree = element_degree(a, emb.sub)
Poly minimal_polynomial(const FieldElem& a, const Embedding& emb);

}  // namespace iterfact

#endif
