#ifndef ITERFACT_UTIL_HPP
#define ITERFACT_UTIL_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace iterfact {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

enum class errc {
    not_prime,
    reducible_modulus,
    degree_mismatch,
    zero_element,
    division_by_zero_poly,
    field_mismatch,
    degree_overflow,
    constant_polynomial,
    divisible_by_x,
    not_coprime,
    not_irreducible,
    degree_too_small,
    empty_parts,
    field_cap_exceeded,
    hypothesis_violated,
    p_divides_d,
    monomial_f,
    not_linearized,
    zero_polynomial,
    not_special_form,
    bad_constant_term,
    q_too_small,
    not_generic,
    witness_search_exhausted,
    parse_error,
    overflow,
    internal,
};

class error : public std::runtime_error {
  public:
    error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

// ---- 64-bit modular arithmetic -------------------------------------------

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

inline u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u64 lcm_u64_checked(u64 a, u64 b);
u64 pow_u64_checked(u64 base, u64 exp);
u64 mul_u64_checked(u64 a, u64 b);

// nu_r(x): exponent of the prime r in x (x > 0)
inline u64 valuation(u64 r, u64 x) {
    u64 v = 0;
    while (x % r == 0) {
        x /= r;
        ++v;
    }
    return v;
}

// least r >= 0 with p^r >= v (v >= 1)
inline u64 ceil_log(u64 p, u64 v) {
    u64 r = 0, acc = 1;
    while (acc < v) {
        acc = mul_u64_checked(acc, p);
        ++r;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(u64 n);

// ---- integer factorization ------------------------------------------------

// A positive integer together with its prime factorization.
struct FactoredInt {
    u64 value = 1;
    std::vector<std::pair<u64, u32>> prime_powers;  // (prime, exponent), primes ascending
};

// Trial division up to 10^6, then Pollard rho.
FactoredInt factorize_u64(u64 n);

u64 euler_phi(const FactoredInt& f);
inline u64 euler_phi(u64 n) { return euler_phi(factorize_u64(n)); }

// Enumerate the divisors of f in ascending order.
std::vector<u64> divisors(const FactoredInt& f);

// Stream divisors without materializing the list (unspecified order).
void for_each_divisor(const FactoredInt& f, const std::function<void(u64)>& fn);

// Least i >= 1 with a^i = 1 (mod b); requires gcd(a, b) = 1. ord(a, 1) = 1.
u64 ord_mod(u64 a, u64 b);

// ---- exact rationals --------------------------------------------------------

struct Rational {
    i64 num = 0;
    i64 den = 1;  // always > 0, gcd(|num|, den) = 1

    Rational() = default;
    Rational(i64 n) : num(n), den(1) {}
    Rational(i64 n, i64 d);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (i128)a.num * b.den < (i128)b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return (i128)a.num * b.den <= (i128)b.num * a.den;
    }
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    double approx() const { return double(num) / double(den); }
    std::string str() const;
};

// ---- deterministic rng ------------------------------------------------------

// splitmix64: tiny, seedable, identical across platforms
struct Rng {
    u64 state;
    explicit Rng(u64 seed) : state(seed) {}
    u64 next() {
        u64 z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    u64 below(u64 n) { return n ? next() % n : 0; }
};

}  // namespace iterfact

#endif
