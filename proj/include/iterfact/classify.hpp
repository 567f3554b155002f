#ifndef ITERFACT_CLASSIFY_HPP
#define ITERFACT_CLASSIFY_HPP

#include <optional>

#include "iterfact/profile.hpp"

namespace iterfact {

// g = reduced^(p^h) with reduced' != 0; h maximal
struct PReduction {
    Poly reduced;
    u64 h = 0;
    u64 reduced_degree = 0;   // d
    u64 original_degree = 0;  // D = d * p^h
};

// f = beta (x - alpha)^k, g = gamma (x - alpha)^D + alpha
struct CriticalInfo {
    FieldElem alpha, beta, gamma;
    u64 k = 0, D = 0;
    bool also_p_critical = false;
};

// g = a x^(p^h) + b
struct PCriticalInfo {
    FieldElem a, b;
    u64 h = 0;
};

struct PairClass {
    enum class Kind { critical, p_critical, generic };
    Kind kind = Kind::generic;
    std::optional<CriticalInfo> critical;
    std::optional<PCriticalInfo> p_critical;
    std::optional<PReduction> reduction;  // present for generic pairs

    bool is_generic() const { return kind == Kind::generic; }
};

PReduction p_reduction(const Poly& g);
std::optional<PCriticalInfo> is_p_critical(const Poly& g);
std::optional<CriticalInfo> is_critical(const Poly& f, const Poly& g);

// critical takes precedence when both degenerate shapes match
PairClass classify_pair(const Poly& f, const Poly& g);

// profile of a reducible f from the profiles of its distinct irreducible
// factors: parts are (multiplicity of f_i in f, profile of (f_i, g) at n)
IterProfile combine_profiles(const std::vector<std::pair<u64, IterProfile>>& parts, u64 n);

}  // namespace iterfact

#endif
