#ifndef ITERFACT_VERIFY_HPP
#define ITERFACT_VERIFY_HPP

#include <map>
#include <string>

#include "iterfact/classify.hpp"
#include "iterfact/closedform.hpp"
#include "iterfact/profile.hpp"

namespace iterfact {

struct Assertion {
    std::string description;
    std::string bound;     // the inequality or expected value, rendered exactly
    std::string observed;  // what was computed
    bool pass = true;
};

// Structured checker output: every checker returns one of these, never a bare
// boolean. Reports are reproducible bit-for-bit for fixed inputs and seed.
struct CheckReport {
    std::string name;
    std::string inputs;
    std::vector<Assertion> assertions;
    std::map<std::string, std::string> witness;
    bool skipped = false;
    std::string skip_reason;

    bool pass() const {
        if (skipped) return false;
        for (const auto& a : assertions)
            if (!a.pass) return false;
        return true;
    }
};

// p^(nh) <= e(n) <= E(n) <= sqrt(D/(D-1)) kappa^n, compared by squaring into
// exact integer comparisons; requires a generic pair whose components are all
// non-degenerate
CheckReport check_multiplicity_bounds(const Poly& f, const Poly& g, u64 n_max,
                                      u64 degree_cap = default_degree_cap, u64 seed = 0);

struct DeltaWitness {
    FieldElem lambda;  // non-periodic preimage of alpha, g^(j)(lambda) = alpha
    FieldElem gamma;   // root of g^(M)(x) - lambda
    u64 j = 0;
    u64 M = 0;
    u64 i = 0;         // j + M
    Rational constant; // C = d^(-i)
};

// Constructive witness for the exponential lower bound on the squarefree
// degree: finds gamma with nu(g^(n) - gamma) = p^(nh), then asserts
// k d^(n-i) <= Delta(n) <= k d^n for n <= n_max.
std::pair<DeltaWitness, CheckReport> delta_constant_witness(
    const Poly& f, const Poly& g, u64 n_max, u32 ambient_abs_cap = 16,
    u64 degree_cap = default_degree_cap, u64 seed = 0);

// 2 Q^(M(n)/k) > d^(n-i), the exact-integer form of the logarithmic lower
// bound on the largest factor degree
CheckReport check_max_degree_growth(const Poly& f, const Poly& g, u64 n_max,
                                    u32 ambient_abs_cap = 16,
                                    u64 degree_cap = default_degree_cap, u64 seed = 0);

// periodic root <=> m(n) = k throughout; otherwise m is nondecreasing and the
// observed trend is reported
CheckReport check_min_degree_equivalences(const Poly& f, const Poly& g, u64 n_max,
                                          u64 degree_cap = default_degree_cap, u64 seed = 0);

// max(N(n), A(n))^2 >= c^2 d^n with c^2 = min(kC, (kC)^2), forced by
// N*A = Delta >= k C d^n; validates the chain step by step
CheckReport check_remark_dichotomy(const Poly& f, const Poly& g, u64 n_max,
                                   u32 ambient_abs_cap = 16,
                                   u64 degree_cap = default_degree_cap, u64 seed = 0);

enum class ClosedFormKind { monomial, linearized };

// closed-form census equals the directly computed census, field by field
CheckReport check_closed_forms(ClosedFormKind kind, const Poly& f, u64 D, const Poly& g,
                               u64 n_max, u64 degree_cap = default_degree_cap, u64 seed = 0);

}  // namespace iterfact

#endif
