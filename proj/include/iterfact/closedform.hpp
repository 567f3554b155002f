#ifndef ITERFACT_CLOSEDFORM_HPP
#define ITERFACT_CLOSEDFORM_HPP

#include "iterfact/classify.hpp"
#include "iterfact/profile.hpp"

namespace iterfact {

// nu_r(a^n - 1) via the lifting-the-exponent case split; requires r | a - 1
// (and a odd when r = 2)
u64 lte_valuation(u64 r, u64 a, u64 n);

// D = d1 * d2 with gcd(d1, e) = 1 and every prime factor of d2 dividing e
std::pair<u64, u64> split_wrt(u64 D, u64 e);

// monic g = g1 * g2 with gcd(g1, h) = 1 and every irreducible factor of g2
// dividing h; requires g(0) != 0
std::pair<Poly, Poly> split_wrt(const Poly& g, const Poly& h);

// Exact profile of (f, x^D) at iteration n. Census rows carry the order of
// each irreducible factor of the composition.
IterProfile monomial_profile(const Poly& f, u64 D, u64 n);

struct OrderRatioBounds {
    std::vector<u64> primes;      // the support set
    u64 base = 0;                 // a
    u64 radical = 0;              // R, the product of the primes
    u64 base_order = 0;           // S = ord(base or base^2, R)
    std::vector<u64> valuations;  // nu_{r_i}((base or base^2)^S - 1)
    bool squared_base = false;    // the even case a = 3 (mod 4) goes through a^2
    Rational lower, upper;        // lower <= phi(b)/ord(a, b) <= upper
};

// Constants L, U with L <= phi(b)/ord(a, b) <= U for every b whose prime
// support is exactly the given set.
OrderRatioBounds order_ratio_bounds(const std::vector<u64>& primes, u64 a);

struct QAssociate {
    Poly conventional;  // g = sum a_i x^i
    Poly linearized;    // L_g = sum a_i x^(q^i)
};

QAssociate q_associate(const Poly& g, u64 degree_cap = default_degree_cap);
// inverse transcription; every exponent must be a power of the field size
Poly q_associate_inverse(const Poly& L);

// minimal monic h over emb.sub with L_h(alpha) = 0; divides x^k - 1 for alpha
// of degree k over the base; alpha must be nonzero
Poly fq_order(const FieldElem& alpha, const Embedding& emb);

// polynomial Euler totient |(F_q[x]/(f))^*|; multiplicative, and
// q^((e-1) deg h) (q^(deg h) - 1) on prime powers
u64 phi_q(const Poly& f);

// least s with F | x^s - 1; computed over the radical and lifted by the
// p-power of the largest multiplicity
u64 ord_x_mod(const Poly& F);

// Exact profile of (f, L_g) at iteration n, L_g the q-associate of g. Census
// rows carry the F_q-order of the roots of each factor.
IterProfile linearized_profile(const Poly& f, const Poly& g, u64 n);

// Profile of (f, g) for g monomial or q-linearized, computed from the profile
// of (f, G) where g = G^(p^h): multiplicities scale by p^(nh), everything
// else coincides.
IterProfile reduce_special_g(const Poly& f, const Poly& g, u64 n,
                             u64 degree_cap = default_degree_cap, u64 seed = 0);

struct ExpGrowthReport {
    Poly g;
    bool separable_at_1 = false;
    bool reducible_at_1 = false;
    bool degrees_double_k = false;  // every factor degree = d*k with d >= 2
    bool has_good_factor = false;   // monic factor with constant term outside {0, 1}
    std::vector<IterProfile> profiles;  // n = 0 .. n_max
    bool growth_ok = false;  // N(n) >= 2^n and M(n) >= k 2^n throughout
};

// g = (x^q - x)^(q-1) for the field of f; verifies the structural claims at
// n = 1 and the exponential growth of N and M up to n_max
ExpGrowthReport exp_growth_construction(const Poly& f, u64 n_max,
                                        u64 degree_cap = default_degree_cap, u64 seed = 0);

}  // namespace iterfact

#endif
