#ifndef ITERFACT_PARSE_HPP
#define ITERFACT_PARSE_HPP

#include <string>

#include "iterfact/poly.hpp"

namespace iterfact {

// Polynomial text grammar: terms `c*x^e`, `x^e`, `x`, `c` joined by `+`/`-`.
// Coefficients are integers over a prime field, or polynomials in the
// extension generator `t`, e.g. `(t+1)*x^2 + t`. Whitespace is insignificant.
// Parse failures throw errc::parse_error with a position-annotated message.
Poly parse_poly(const std::string& text, const FieldPtr& F, char var = 'x',
                u64 degree_cap = default_degree_cap);

std::string elem_to_string(const FieldElem& a);
std::string poly_to_string(const Poly& f, char var = 'x');
std::string factorization_to_string(const Factorization& fz);

// "p" or "p^m"
std::pair<u64, u32> parse_field_text(const std::string& text);
std::string field_to_string(const Field& F);

}  // namespace iterfact

#endif
