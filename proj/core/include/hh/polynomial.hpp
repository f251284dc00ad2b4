#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hh/monomial.hpp"
#include "hh/order.hpp"
#include "hh/rational.hpp"

namespace hh {

struct Term {
    Monomial mono;
    Rational coeff;
};

// Sparse multivariate polynomial over Q. Terms are stored sorted strictly
// descending in the canonical lex order of the ambient (variable 0 strongest)
// with no zero coefficients; every operation restores that form.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(Vars vars) : vars_(std::move(vars)) {}

    static Polynomial zero(const Vars& v) { return Polynomial(v); }
    static Polynomial constant(const Vars& v, Rational c);
    static Polynomial variable(const Vars& v, std::size_t index, int power = 1);
    static Polynomial from_term(const Vars& v, Monomial m, Rational c);
    // Terms may arrive unsorted or with duplicates; they get merged.
    static Polynomial from_terms(const Vars& v, std::vector<Term> terms);

    const Vars& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    // Total degree; -1 for the zero polynomial.
    int degree() const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }

    Polynomial pow(unsigned e) const;

    // p * c*m, used heavily by the division loop.
    Polynomial times_term(const Monomial& m, const Rational& c) const;

    Polynomial derivative(std::size_t var_index) const;

    // Replace variable `var_index` by `image` (same ambient).
    Polynomial substitute(std::size_t var_index, const Polynomial& image) const;

    // Simultaneous substitution: one image per variable, all over a common
    // (possibly different) ambient. Used to evaluate relations on invariants.
    Polynomial compose(const std::vector<Polynomial>& images) const;

    // Leading term with respect to an arbitrary order; requires nonzero.
    const Term& leading_term(const MonomialOrder& ord) const;

    // Divide every coefficient by the leading one.
    Polynomial monic(const MonomialOrder& ord) const;

    // True when every monomial has the same weight; that weight lands in *w.
    bool is_weight_homogeneous(const WeightVector& wv, long* w = nullptr) const;

    // Canonical text form, e.g. "z1^2*z2 - 1/3*z2^4 + 5".
    std::string to_string() const;

  private:
    void normalize(std::vector<Term>&& raw);

    Vars vars_;
    std::vector<Term> terms_;
};

}  // namespace hh
