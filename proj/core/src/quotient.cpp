#include "hh/quotient.hpp"

#include <algorithm>
#include <functional>

namespace hh {

namespace {

std::vector<Monomial> leading_monomials(const GroebnerBasis& gb) {
    std::vector<Monomial> lms;
    for (const Polynomial& g : gb.elements) lms.push_back(g.leading_term(gb.order).mono);
    return lms;
}

bool is_standard(const Monomial& m, const std::vector<Monomial>& lms) {
    for (const Monomial& l : lms)
        if (l.divides(m)) return false;
    return true;
}

void sort_ascending(std::vector<Monomial>& ms) {
    std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) { return a < b; });
}

}  // namespace

std::vector<Monomial> QuotientBasis::slice(long w) const {
    if (!weights) throw Error("quotient basis carries no weight vector");
    std::vector<Monomial> out;
    for (const Monomial& m : monomials)
        if (weights->weight(m) == w) out.push_back(m);
    return out;
}

bool quotient_is_finite(const GroebnerBasis& gb) {
    if (gb.contains_one()) return true;
    const std::vector<Monomial> lms = leading_monomials(gb);
    const std::size_t n = gb.vars.size();
    for (std::size_t v = 0; v < n; ++v) {
        bool pure = false;
        for (const Monomial& l : lms) {
            if (l[v] == 0) continue;
            bool only_v = true;
            for (std::size_t u = 0; u < n && only_v; ++u)
                if (u != v && l[u] > 0) only_v = false;
            if (only_v) {
                pure = true;
                break;
            }
        }
        if (!pure) return false;
    }
    return true;
}

QuotientBasis standard_monomials(const GroebnerBasis& gb) {
    if (!quotient_is_finite(gb)) throw InfiniteWithoutBound("quotient is infinite-dimensional");

    QuotientBasis qb{gb, true, {}, std::nullopt, -1};
    if (gb.contains_one()) return qb;

    const std::vector<Monomial> lms = leading_monomials(gb);
    const std::size_t n = gb.vars.size();

    // A standard monomial has e_v strictly below the minimal pure power of
    // each variable, so the search box is finite.
    std::vector<int> cap(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        int best = -1;
        for (const Monomial& l : lms) {
            if (l[v] == 0) continue;
            bool only_v = true;
            for (std::size_t u = 0; u < n && only_v; ++u)
                if (u != v && l[u] > 0) only_v = false;
            if (only_v && (best < 0 || l[v] < best)) best = l[v];
        }
        cap[v] = best;
    }

    Monomial m(n);
    std::function<void(std::size_t)> scan = [&](std::size_t v) {
        if (v == n) {
            if (is_standard(m, lms)) qb.monomials.push_back(m);
            return;
        }
        for (int e = 0; e < cap[v]; ++e) {
            m.set(v, e);
            scan(v + 1);
        }
        m.set(v, 0);
    };
    scan(0);
    sort_ascending(qb.monomials);
    return qb;
}

QuotientBasis standard_monomials(const GroebnerBasis& gb, const WeightVector& wv,
                                 long weight_bound) {
    if (wv.nvars() != gb.vars.size()) throw WeightMismatch("weight vector arity != ambient size");
    if (weight_bound < 0) throw Error("negative weight bound");

    QuotientBasis qb{gb, quotient_is_finite(gb), {}, wv, weight_bound};
    const std::vector<Monomial> lms = leading_monomials(gb);
    const std::size_t n = gb.vars.size();

    Monomial m(n);
    std::function<void(std::size_t, long)> scan = [&](std::size_t v, long left) {
        if (v == n) {
            if (is_standard(m, lms)) qb.monomials.push_back(m);
            return;
        }
        const long w = wv.weights.at(v);
        for (int e = 0; static_cast<long>(e) * w <= left; ++e) {
            m.set(v, e);
            scan(v + 1, left - static_cast<long>(e) * w);
        }
        m.set(v, 0);
    };
    scan(0, weight_bound);
    sort_ascending(qb.monomials);
    return qb;
}

Ideal jacobian_ideal(const Polynomial& f) {
    std::vector<Polynomial> partials;
    for (std::size_t v = 0; v < f.nvars(); ++v) partials.push_back(f.derivative(v));
    return Ideal(f.vars(), std::move(partials));
}

QuotientBasis milnor_algebra(const Polynomial& f) {
    GroebnerBasis gb = buchberger(jacobian_ideal(f), MonomialOrder::lex(f.nvars()));
    if (!quotient_is_finite(gb))
        throw NonIsolatedSingularity("Jacobian quotient of " + f.to_string() +
                                     " is infinite-dimensional");
    return standard_monomials(gb);
}

unsigned milnor_number(const Polynomial& f) {
    return static_cast<unsigned>(milnor_algebra(f).dimension());
}

HilbertFunction hilbert_function(const GroebnerBasis& gb, const WeightVector& wv, long bound) {
    for (const Polynomial& g : gb.elements)
        if (!g.is_weight_homogeneous(wv))
            throw NotHomogeneousGenerators("basis element " + g.to_string() +
                                           " is not weight-homogeneous");

    QuotientBasis qb = standard_monomials(gb, wv, bound);
    HilbertFunction hf{wv, std::vector<unsigned>(static_cast<std::size_t>(bound) + 1, 0)};
    for (const Monomial& m : qb.monomials) ++hf.values.at(static_cast<std::size_t>(wv.weight(m)));
    return hf;
}

QMatrix multiplication_matrix(const Polynomial& g, const QuotientBasis& qb, long source_weight,
                              long target_weight) {
    if (!qb.weights) throw Error("quotient basis carries no weight vector");
    if (g.vars() != qb.gb.vars) throw AmbientMismatch("multiplier over wrong ambient");

    long gw = 0;
    if (!g.is_weight_homogeneous(*qb.weights, &gw))
        throw WeightMismatch("multiplier is not weight-homogeneous");
    if (!g.is_zero() && gw != target_weight - source_weight)
        throw WeightMismatch("multiplier weight != target - source");
    if (!qb.finite && (source_weight > qb.bound || target_weight > qb.bound))
        throw BoundTooSmall("slice beyond the enumeration bound");

    const std::vector<Monomial> src = qb.slice(source_weight);
    const std::vector<Monomial> dst = qb.slice(target_weight);

    QMatrix m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        Polynomial img = g * Polynomial::from_term(g.vars(), src[c], Rational(1));
        Polynomial nf = normal_form(img, qb.gb.elements, qb.gb.order).remainder;
        for (const Term& t : nf.terms()) {
            auto it = std::find(dst.begin(), dst.end(), t.mono);
            if (it == dst.end())
                throw Error("internal error: normal form left the target slice");
            m.at(static_cast<std::size_t>(it - dst.begin()), c) = t.coeff;
        }
    }
    return m;
}

}  // namespace hh
