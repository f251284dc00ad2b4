#pragma once

#include <optional>
#include <vector>

#include "hh/polynomial.hpp"

namespace hh {

// Finite generating set of an ideal. Zero generators are dropped and
// duplicates up to a scalar removed; an effectively empty list is an error.
struct Ideal {
    Vars vars;
    std::vector<Polynomial> gens;

    Ideal(Vars v, std::vector<Polynomial> generators);
};

struct DivisionResult {
    std::vector<Polynomial> quotients;  // one per divisor, in list order
    Polynomial remainder;
};

// Multivariate division: p = sum quotients[i]*divisors[i] + remainder, with
// no remainder monomial divisible by any divisor's leading monomial. Each
// step reduces by the first divisor in list order whose leading monomial
// divides, so the result is deterministic for a fixed list.
DivisionResult normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors,
                           const MonomialOrder& ord);

// Reduced Groebner basis: monic elements, no leading monomial divides
// another, tails fully reduced, sorted ascending by leading monomial.
// Unique for a given ideal and order.
struct GroebnerBasis {
    Vars vars;
    MonomialOrder order;
    std::vector<Polynomial> elements;

    bool contains_one() const;
};

// Pair-selection knob; Normal picks the minimal lcm ("normal strategy").
// Fifo exists to exercise order-independence of the reduced basis in tests.
enum class PairStrategy { Normal, Fifo };

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord);

// Buchberger's algorithm with the coprime-leading-monomial and chain
// criteria. The returned basis is verified: every S-polynomial of the final
// elements reduces to zero (full check, not sampled).
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord,
                         PairStrategy strategy = PairStrategy::Normal);

// True when every S-polynomial of gb.elements has zero normal form.
bool verify_groebner(const GroebnerBasis& gb);

bool ideal_membership(const Polynomial& p, const GroebnerBasis& gb);

// Exact division: p / g when the remainder vanishes, nullopt otherwise.
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& g,
                                       const MonomialOrder& ord);

// Ideal quotient (J : g) = { h : h*g in J }, computed by the t-elimination
// of t*<g> + (1-t)*J in lex with the fresh variable greatest. Every t-free
// basis element is divisible by g; the quotients generate (J : g), returned
// as a reduced basis for `ord`.
GroebnerBasis ideal_quotient(const Ideal& j, const Polynomial& g, const MonomialOrder& ord);

// True when (J : g) == J, i.e. g is no zero divisor modulo J. Checked by
// mutual membership of generators.
bool annihilator_check(const Ideal& j, const Polynomial& g, const MonomialOrder& ord);

}  // namespace hh
