#pragma once

// Independent reference implementations the tests compare the engine
// against. Deliberately naive: correctness over speed.

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "hh/groebner.hpp"
#include "hh/matrix.hpp"
#include "hh/polynomial.hpp"

namespace hh::oracle {

// Plain Gaussian elimination with rational pivots (no fraction-free trick).
inline std::size_t naive_rank(QMatrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        const Rational inv = m.at(rank, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m.at(rank, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || m.at(i, col).is_zero()) continue;
            const Rational factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= factor * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

// All monomials of total degree <= cap.
inline std::vector<Monomial> monomials_up_to(const Vars& v, int cap) {
    std::vector<Monomial> out;
    if (v.size() == 1) {
        for (int a = 0; a <= cap; ++a) out.push_back(Monomial{a});
        return out;
    }
    for (int a = 0; a <= cap; ++a)
        for (int b = 0; a + b <= cap; ++b) {
            if (v.size() == 2)
                out.push_back(Monomial{a, b});
            else
                for (int c = 0; a + b + c <= cap; ++c) out.push_back(Monomial{a, b, c});
        }
    return out;
}

// Membership by linear algebra: p lies in the span of { m * g : g generator,
// deg(m * g) <= cap }. A positive answer certifies membership; a negative
// answer only rules out certificates up to the cap, so callers must pick cap
// from a known certificate bound when they expect `true`.
inline bool brute_membership(const Polynomial& p, const std::vector<Polynomial>& gens, int cap) {
    const Vars& v = p.vars();
    std::vector<Monomial> basis = monomials_up_to(v, cap);
    std::map<Monomial, std::size_t> row;
    for (std::size_t i = 0; i < basis.size(); ++i) row[basis[i]] = i;

    std::vector<std::vector<Rational>> cols;
    auto column_of = [&](const Polynomial& q) -> std::optional<std::vector<Rational>> {
        std::vector<Rational> col(basis.size());
        for (const Term& t : q.terms()) {
            auto it = row.find(t.mono);
            if (it == row.end()) return std::nullopt;  // exceeds the cap
            col[it->second] = t.coeff;
        }
        return col;
    };
    for (const Polynomial& g : gens)
        for (const Monomial& m : basis) {
            if (static_cast<int>(m.degree()) + static_cast<int>(g.degree()) > cap) continue;
            if (auto col = column_of(g.times_term(m, Rational(1)))) cols.push_back(*col);
        }
    auto target = column_of(p);
    if (!target) return false;

    QMatrix a(basis.size(), cols.size());
    QMatrix b(basis.size(), cols.size() + 1);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < basis.size(); ++i) {
            a.at(i, j) = cols[j][i];
            b.at(i, j) = cols[j][i];
        }
    for (std::size_t i = 0; i < basis.size(); ++i) b.at(i, cols.size()) = (*target)[i];
    return exact_rank(a) == exact_rank(b);
}

// Deterministic random polynomial: up to `terms` monomials of degree <= deg,
// integer coefficients in [-3, 3].
inline Polynomial random_polynomial(const Vars& v, std::mt19937& rng, int deg, int terms) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> nterms(1, terms);
    std::vector<Monomial> pool = monomials_up_to(v, deg);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    Polynomial p = Polynomial::zero(v);
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        int c = coeff(rng);
        if (c == 0) c = 1;
        p += Polynomial::from_term(v, pool[pick(rng)], Rational(c));
    }
    // Cancellation can empty the sum; tests want a usable polynomial.
    if (p.is_zero()) p = Polynomial::constant(v, Rational(1));
    return p;
}

}  // namespace hh::oracle
