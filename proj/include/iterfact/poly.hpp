#ifndef ITERFACT_POLY_HPP
#define ITERFACT_POLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "iterfact/field.hpp"

namespace iterfact {

// refuse to build factorization inputs or iterates above this total degree
constexpr u64 default_degree_cap = 20000;

// Univariate polynomial over a Field. Coefficients are stored flat (stride
// F->m, index = exponent) and trimmed: the leading element is nonzero unless
// the polynomial is zero.
class Poly {
  public:
    Poly() = default;
    explicit Poly(FieldPtr F) : F_(std::move(F)) {}
    Poly(FieldPtr F, const std::vector<FieldElem>& coeffs);

    static Poly from_flat(FieldPtr F, std::vector<u64> flat);
    static Poly zero(const FieldPtr& F) { return Poly(F); }
    static Poly one(const FieldPtr& F);
    static Poly x(const FieldPtr& F);
    static Poly monomial(const FieldPtr& F, u64 e, const FieldElem& c);
    // convenience: coefficients as integers (reduced mod p), index = exponent
    static Poly from_ints(const FieldPtr& F, const std::vector<i64>& coeffs);

    const FieldPtr& field() const { return F_; }
    u32 stride() const { return F_->m; }
    int degree() const { return (int)(c_.size() / F_->m) - 1; }
    bool is_zero() const { return c_.empty(); }
    FieldElem coeff(u64 i) const;
    const u64* coeff_ptr(u64 i) const { return c_.data() + i * F_->m; }
    FieldElem leading() const;
    FieldElem constant_term() const { return coeff(0); }
    bool is_monic() const;
    const std::vector<u64>& flat() const { return c_; }

    FieldElem operator()(const FieldElem& at) const;  // evaluation

    Poly scaled(const FieldElem& s) const;
    Poly monic() const;  // throws division_by_zero_poly on zero input

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  private:
    FieldPtr F_;
    std::vector<u64> c_;
    void trim();
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    friend Poly derivative(const Poly& a);
    friend Poly frobenius_poly(const Poly& f, i64 i);
    friend Poly pth_root_poly(const Poly& f);
    friend Poly gcd_poly(const Poly& a, const Poly& b);
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

// monic greatest common divisor (gcd(0, 0) = 0)
Poly gcd_poly(const Poly& a, const Poly& b);

Poly derivative(const Poly& a);
Poly compose(const Poly& f, const Poly& g);  // f(g(x))
Poly iterate_poly(const Poly& g, u64 n, u64 degree_cap = default_degree_cap);

// coefficient-wise sigma_i: sum a_j^(p^i) x^j
Poly frobenius_poly(const Poly& f, i64 i);

// inverse of the p-th power map on polynomials; every exponent with a nonzero
// coefficient must be divisible by p
Poly pth_root_poly(const Poly& f);

// canonical order: (degree, then coefficient tuple a_0, a_1, ... compared as integers)
int poly_cmp(const Poly& a, const Poly& b);

Poly embed_poly(const Poly& f, const Embedding& emb);
std::optional<Poly> unembed_poly(const Poly& f, const Embedding& emb);

// ---- factorization -----------------------------------------------------------

struct Factorization {
    FieldElem leading;
    std::vector<std::pair<Poly, u64>> factors;  // monic irreducible, multiplicity >= 1

    Poly reconstruct() const;
    u64 distinct_count() const { return factors.size(); }
};

// Canonical irreducible factorization: squarefree decomposition (with p-th
// root descent), distinct-degree splitting, then seeded equal-degree
// splitting. The output is canonically sorted and independent of the seed.
Factorization factor(const Poly& a, u64 seed = 0, u64 degree_cap = default_degree_cap);

Poly squarefree_part(const Poly& a);
bool is_irreducible(const Poly& a);

// least s >= 1 with f | x^s - 1; requires f(0) != 0
u64 poly_order(const Poly& f);
u64 irreducible_order(const Poly& f);  // f already known irreducible, f != x

// least i >= 1 with a^i = 1 (mod b); requires gcd(a, b) = 1
inline u64 int_order(u64 a, u64 b) { return ord_mod(a, b); }

// ---- modular helpers -----------------------------------------------------------

Poly mulmod_poly(const Poly& a, const Poly& b, const Poly& f);
Poly powmod_poly(const Poly& base, u64 e, const Poly& f);
Poly frobp_mod(const Poly& h, const Poly& f);  // h^p mod f
Poly frobq_mod(const Poly& h, const Poly& f);  // h^(p^m) mod f (field cardinality power)

// distinct roots of f lying in its own coefficient field, ascending
std::vector<FieldElem> roots_in_field(const Poly& f);

}  // namespace iterfact

#endif
