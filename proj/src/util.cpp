#include "iterfact/util.hpp"

#include <algorithm>
#include <numeric>

namespace iterfact {

u64 mul_u64_checked(u64 a, u64 b) {
    if (a != 0 && b > UINT64_MAX / a) fail(errc::overflow, "64-bit multiply overflow");
    return a * b;
}

u64 pow_u64_checked(u64 base, u64 exp) {
    u64 r = 1;
    while (exp--) r = mul_u64_checked(r, base);
    return r;
}

u64 lcm_u64_checked(u64 a, u64 b) {
    if (a == 0 || b == 0) return 0;
    return mul_u64_checked(a / gcd_u64(a, b), b);
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // this witness set is deterministic for all n < 2^64
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

u64 pollard_rho(u64 n, Rng& rng) {
    // Brent's cycle-finding variant
    if ((n & 1) == 0) return 2;
    while (true) {
        u64 y = rng.below(n - 2) + 1;
        u64 c = rng.below(n - 1) + 1;
        u64 m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            for (u64 k = 0; k < r && g == 1; k += m) {
                ys = y;
                u64 lim = std::min(m, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = gcd_u64(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (mulmod(ys, ys, n) + c) % n;
                g = gcd_u64(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n) return g;
    }
}

void factor_rec(u64 n, std::vector<u64>& primes, Rng& rng) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        primes.push_back(n);
        return;
    }
    u64 d = pollard_rho(n, rng);
    factor_rec(d, primes, rng);
    factor_rec(n / d, primes, rng);
}

}  // namespace

FactoredInt factorize_u64(u64 n) {
    if (n == 0) fail(errc::zero_element, "cannot factor 0");
    FactoredInt out;
    out.value = n;
    std::vector<u64> primes;
    for (u64 p = 2; p <= 1000000 && p * p <= n; p == 2 ? p = 3 : p += 2) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    if (n > 1) {
        if (n < (u64)1000000 * 1000000 || is_prime_u64(n)) {
            // remaining cofactor below the trial bound squared is prime
            primes.push_back(n);
        } else {
            Rng rng(0x1234abcdu ^ n);
            factor_rec(n, primes, rng);
        }
    }
    std::sort(primes.begin(), primes.end());
    for (u64 p : primes) {
        if (!out.prime_powers.empty() && out.prime_powers.back().first == p)
            out.prime_powers.back().second++;
        else
            out.prime_powers.push_back({p, 1});
    }
    return out;
}

u64 euler_phi(const FactoredInt& f) {
    u64 r = 1;
    for (auto [p, e] : f.prime_powers) {
        r = mul_u64_checked(r, p - 1);
        for (u32 i = 1; i < e; ++i) r = mul_u64_checked(r, p);
    }
    return r;
}

void for_each_divisor(const FactoredInt& f, const std::function<void(u64)>& fn) {
    std::function<void(size_t, u64)> rec = [&](size_t i, u64 acc) {
        if (i == f.prime_powers.size()) {
            fn(acc);
            return;
        }
        auto [p, e] = f.prime_powers[i];
        for (u32 k = 0;; ++k) {
            rec(i + 1, acc);
            if (k == e) break;
            acc = mul_u64_checked(acc, p);
        }
    };
    rec(0, 1);
}

std::vector<u64> divisors(const FactoredInt& f) {
    std::vector<u64> out{1};
    for (auto [p, e] : f.prime_powers) {
        size_t n = out.size();
        u64 pe = 1;
        for (u32 i = 0; i < e; ++i) {
            pe = mul_u64_checked(pe, p);
            for (size_t j = 0; j < n; ++j) out.push_back(mul_u64_checked(out[j], pe));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

u64 ord_mod(u64 a, u64 b) {
    if (b == 0) fail(errc::not_coprime, "ord(a, 0) undefined");
    if (b == 1) return 1;
    a %= b;
    if (gcd_u64(a, b) != 1) fail(errc::not_coprime, "ord(a, b) requires gcd(a, b) = 1");
    u64 ord = euler_phi(factorize_u64(b));
    FactoredInt of = factorize_u64(ord);
    for (auto [r, e] : of.prime_powers) {
        for (u32 i = 0; i < e; ++i) {
            if (powmod(a, ord / r, b) == 1)
                ord /= r;
            else
                break;
        }
    }
    return ord;
}

Rational::Rational(i64 n, i64 d) {
    if (d == 0) fail(errc::overflow, "rational with zero denominator");
    if (d < 0) n = -n, d = -d;
    i64 g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Rational operator*(const Rational& a, const Rational& b) {
    // cross-reduce first so the products stay in 64-bit range
    i64 g_a = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
    i64 g_b = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
    return Rational((a.num / g_a) * (b.num / g_b), (a.den / g_b) * (b.den / g_a));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) fail(errc::overflow, "rational division by zero");
    return a * Rational(b.den, b.num);
}

std::string Rational::str() const { return std::to_string(num) + "/" + std::to_string(den); }

}  // namespace iterfact
