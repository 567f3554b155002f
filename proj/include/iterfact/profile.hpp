#ifndef ITERFACT_PROFILE_HPP
#define ITERFACT_PROFILE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iterfact/poly.hpp"

namespace iterfact {

// One aggregated census row: `count` distinct monic irreducible factors
// sharing this degree and multiplicity. Closed-form constructions attach the
// order (monomial case) or the F_q-order polynomial (linearized case).
struct CensusRow {
    u64 degree = 0;
    u64 multiplicity = 1;
    u64 count = 1;
    std::optional<u64> order;
    std::optional<Poly> fq_order;
};

struct FactorCensus {
    std::vector<CensusRow> rows;

    u64 distinct_factors() const;   // sum of counts
    u64 squarefree_degree() const;  // sum of degree * count
    u64 total_degree() const;       // sum of degree * multiplicity * count
    u64 max_degree() const;
    u64 min_degree() const;
    u64 max_multiplicity() const;
    u64 min_multiplicity() const;

    // aggregate by (degree, multiplicity), dropping order tags; canonical sort
    FactorCensus aggregated() const;
    std::string digest() const;  // rows "deg:mult:count[:o=..][:h=..]" joined by ';'
};

FactorCensus census_of(const Factorization& fz);
bool census_equal_aggregated(const FactorCensus& a, const FactorCensus& b);

// The seven arithmetic functions attached to the factorization of a g-iterate,
// plus the factor census they were read from.
struct IterProfile {
    u64 n = 0;
    u64 max_mult = 0;        // largest root multiplicity
    u64 min_mult = 0;        // smallest root multiplicity
    u64 sqfree_deg = 0;      // degree of the squarefree part
    u64 max_factor_deg = 0;  // largest irreducible factor degree
    u64 min_factor_deg = 0;  // smallest irreducible factor degree
    u64 num_factors = 0;     // number of distinct irreducible factors
    Rational avg_factor_deg; // sqfree_deg / num_factors, exact
    FactorCensus census;

    // checks the internal inequalities and the total-degree conservation law
    void validate(u64 expected_total_degree) const;
};

IterProfile profile_from_census(u64 n, FactorCensus census);

// ---- profile computations ------------------------------------------------------

// factor f(g^(n)(x)) directly and read off the seven functions
IterProfile profile_direct(const Poly& f, const Poly& g, u64 n,
                           u64 degree_cap = default_degree_cap, u64 seed = 0);

// root-reduction route: factor g^(n)(x) - alpha over F_{q^k} for a root alpha
// of the irreducible f, and rescale degrees by k; must match profile_direct
IterProfile profile_via_root(const Poly& f, const Poly& g, u64 n,
                             u64 degree_cap = default_degree_cap, u64 seed = 0);

// spin of F over the base field of emb, together with s_Q(F)
std::pair<Poly, u32> spin(const Poly& F, const Embedding& emb);

// factorization of f(g(x)) via spins of the irreducible factors of g(x) - alpha
// over F_{Q^k}; f irreducible over the common coefficient field
Factorization factor_composition(const Poly& f, const Poly& g, u64 seed = 0);

// ---- preimage trees and multiplicity bounds -------------------------------------

struct PreimageTuple {
    std::vector<FieldElem> entries;  // gamma_1 = alpha; g(gamma_i) = gamma_{i-1}
};

struct PreimageEnumeration {
    FieldPtr ambient;                   // common field holding every entry
    std::vector<PreimageTuple> tuples;  // all of C_n(alpha)
};

PreimageEnumeration preimage_tuples(const Poly& g, const FieldElem& alpha, u64 n,
                                    u32 ambient_abs_cap = 16, u64 seed = 0);

// (min over tuples of prod nu*(g - lambda), max over tuples of prod nu(g - lambda));
// nu and nu* of g^(n)(x) - alpha are guaranteed to lie inside
std::pair<u64, u64> nu_bounds(const Poly& g, const FieldElem& alpha, u64 n,
                              u32 ambient_abs_cap = 16, u64 seed = 0);

// least i >= 1 with g^(i)(alpha) = alpha, when the orbit of alpha returns to it
std::optional<u64> is_g_periodic(const FieldElem& alpha, const Poly& g);

// true iff some root of f in its splitting field is g-periodic; one root per
// irreducible factor suffices since g commutes with the Frobenius
bool has_periodic_root(const Poly& f, const Poly& g, u64 seed = 0);

}  // namespace iterfact

#endif
