#pragma once

#include "hh/order.hpp"
#include "hh/polynomial.hpp"

namespace hh {

// Finds the smallest positive integer weights making every monomial of f the
// same weight, by solving the exact linear system on the support. The result
// has gcd(weights) == 1; `total` is the common weight of f's monomials.
//
// When the support underdetermines the weights (single monomial, absent
// variables), the least-total-weight positive solution from a bounded search
// over the nullspace is returned, e.g. a lone z1*z2 gets (1, 1).
//
// Throws NotQuasiHomogeneous when no positive weight system exists.
WeightVector detect_weights(const Polynomial& f);

}  // namespace hh
