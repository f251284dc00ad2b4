#pragma once

#include <optional>
#include <vector>

#include "hh/groebner.hpp"
#include "hh/matrix.hpp"

namespace hh {

// Standard-monomial description of C[z]/J: the monomials divisible by no
// leading monomial of the basis (Macaulay). In the finite case `monomials`
// is the whole vector-space basis; in the weight-bounded case it holds the
// standard monomials of weight <= bound for the attached weight vector.
// Always sorted ascending in the canonical lex of the ambient.
struct QuotientBasis {
    GroebnerBasis gb;
    bool finite = false;
    std::vector<Monomial> monomials;
    std::optional<WeightVector> weights;
    long bound = -1;  // meaningful only when weights is set

    std::size_t dimension() const { return monomials.size(); }

    // Standard monomials of exact weight w; requires a weight vector.
    std::vector<Monomial> slice(long w) const;
};

// Leading-term cone test: the quotient is finite-dimensional iff a pure
// power of every variable occurs among the leading monomials.
bool quotient_is_finite(const GroebnerBasis& gb);

// Full basis of a finite-dimensional quotient.
// Throws InfiniteWithoutBound when the quotient is infinite-dimensional.
QuotientBasis standard_monomials(const GroebnerBasis& gb);

// Standard monomials of weight <= weight_bound; works for both finite and
// infinite quotients and records the slicing data.
QuotientBasis standard_monomials(const GroebnerBasis& gb, const WeightVector& wv,
                                 long weight_bound);

// <df/dz_1, ..., df/dz_n>; throws when every partial vanishes.
Ideal jacobian_ideal(const Polynomial& f);

// Basis of C[z]/jacobian_ideal(f) in canonical lex.
// Throws NonIsolatedSingularity when that quotient is infinite-dimensional.
QuotientBasis milnor_algebra(const Polynomial& f);

// dim C[z]/<df/dz_1, ..., df/dz_n>.
unsigned milnor_number(const Polynomial& f);

// values[w] = number of standard monomials of weight w, for w = 0..bound.
struct HilbertFunction {
    WeightVector weights;
    std::vector<unsigned> values;
};

// Requires every basis element weight-homogeneous (NotHomogeneousGenerators).
HilbertFunction hilbert_function(const GroebnerBasis& gb, const WeightVector& wv, long bound);

// Matrix of multiplication by g from the weight-`source_weight` slice to the
// weight-`target_weight` slice of C[z]/J, in the slice bases of qb (columns
// indexed by the source slice, rows by the target slice). Requires qb sliced
// by weights, g weight-homogeneous of weight target - source (WeightMismatch
// otherwise) and, for an infinite quotient, both weights within qb.bound
// (BoundTooSmall otherwise).
QMatrix multiplication_matrix(const Polynomial& g, const QuotientBasis& qb, long source_weight,
                              long target_weight);

}  // namespace hh
