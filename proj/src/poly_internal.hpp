#ifndef ITERFACT_POLY_INTERNAL_HPP
#define ITERFACT_POLY_INTERNAL_HPP

#include <vector>

#include "iterfact/util.hpp"

// Prime-field (m == 1) coefficient kernels. Vectors are canonical (entries in
// [0, p)) on entry and exit; laziness with signed accumulators is internal.
// These carry the heavy factorization workloads, so they avoid per-step
// reductions whenever p is small enough for exact i64 accumulation.

namespace iterfact::detail {

inline void zp_trim(std::vector<u64>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// p small enough that `touches` products of size (p-1)^2 fit an i64 accumulator
inline bool zp_lazy_ok(u64 p, u64 touches) {
    return p < (1u << 20) && touches < (1ull << 22);
}

std::vector<u64> zp_mul(const std::vector<u64>& a, const std::vector<u64>& b, u64 p);

// remainder of a by monic f, in place
void zp_rem_inplace(std::vector<u64>& a, const std::vector<u64>& f, u64 p);

// quotient and remainder by arbitrary nonzero f
std::pair<std::vector<u64>, std::vector<u64>> zp_divmod(const std::vector<u64>& a,
                                                        const std::vector<u64>& f, u64 p);

std::vector<u64> zp_gcd(std::vector<u64> a, std::vector<u64> b, u64 p);

// h^p mod f (f monic) via exponent spreading; intended for small p
std::vector<u64> zp_frobp_mod(const std::vector<u64>& h, const std::vector<u64>& f, u64 p);

}  // namespace iterfact::detail

#endif
