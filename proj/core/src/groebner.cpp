#include "hh/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace hh {

namespace {

MonomialOrder canonical_lex(std::size_t n) { return MonomialOrder::lex(n); }

// Scalar-free fingerprint used to dedupe generators.
Polynomial canonical_monic(const Polynomial& p) {
    return p.monic(canonical_lex(p.nvars()));
}

}  // namespace

Ideal::Ideal(Vars v, std::vector<Polynomial> generators) : vars(std::move(v)) {
    for (Polynomial& g : generators) {
        if (g.is_zero()) continue;
        if (g.vars() != vars) throw AmbientMismatch("generator over wrong variable list");
        bool dup = false;
        for (const Polynomial& h : gens)
            if (canonical_monic(h) == canonical_monic(g)) {
                dup = true;
                break;
            }
        if (!dup) gens.push_back(std::move(g));
    }
    if (gens.empty()) throw Error("ideal needs at least one nonzero generator");
}

DivisionResult normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors,
                           const MonomialOrder& ord) {
    for (const Polynomial& g : divisors)
        if (g.is_zero()) throw Error("zero divisor polynomial in division");

    DivisionResult res;
    res.quotients.assign(divisors.size(), Polynomial::zero(p.vars()));
    std::vector<Term> rem;

    Polynomial h = p;
    while (!h.is_zero()) {
        const Term t = h.leading_term(ord);
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            const Term& lt = divisors[i].leading_term(ord);
            if (!lt.mono.divides(t.mono)) continue;
            Monomial u = t.mono / lt.mono;
            Rational c = t.coeff / lt.coeff;
            res.quotients[i] += Polynomial::from_term(p.vars(), u, c);
            h -= divisors[i].times_term(u, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.push_back(t);
            h -= Polynomial::from_term(p.vars(), t.mono, t.coeff);
        }
    }
    res.remainder = Polynomial::from_terms(p.vars(), std::move(rem));
    return res;
}

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord) {
    const Term& la = a.leading_term(ord);
    const Term& lb = b.leading_term(ord);
    Monomial l = Monomial::lcm(la.mono, lb.mono);
    return a.times_term(l / la.mono, la.coeff.inverse()) -
           b.times_term(l / lb.mono, lb.coeff.inverse());
}

bool GroebnerBasis::contains_one() const {
    for (const Polynomial& g : elements)
        if (g.degree() == 0) return true;
    return false;
}

bool verify_groebner(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.elements.size(); ++i)
        for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
            Polynomial s = s_polynomial(gb.elements[i], gb.elements[j], gb.order);
            if (!normal_form(s, gb.elements, gb.order).remainder.is_zero()) return false;
        }
    return true;
}

namespace {

struct Pair {
    std::size_t i, j;    // i < j
    Monomial lcm;
    std::size_t serial;  // Fifo tie-break / selection
};

// Inter-reduces a minimal basis until stable, then sorts ascending.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g, const MonomialOrder& ord) {
    // Minimality: drop any element whose leading monomial another divides.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& mi = g[i].leading_term(ord).mono;
            const Monomial& mj = g[j].leading_term(ord).mono;
            if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            if (others.empty()) break;
            Polynomial r = normal_form(minimal[i], others, ord).remainder;
            if (r != minimal[i]) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
    }

    for (Polynomial& p : minimal) p = p.monic(ord);
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_term(ord).mono, b.leading_term(ord).mono);
    });
    return minimal;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord, PairStrategy strategy) {
    if (ord.nvars() != ideal.vars.size()) throw Error("order arity != ambient size");

    std::vector<Polynomial> g;
    for (const Polynomial& f : ideal.gens) g.push_back(f.monic(ord));

    std::vector<Pair> pending;
    std::size_t serial = 0;
    auto push_pairs = [&](std::size_t upto) {
        for (std::size_t i = 0; i < upto; ++i)
            pending.push_back({i, upto,
                               Monomial::lcm(g[i].leading_term(ord).mono,
                                             g[upto].leading_term(ord).mono),
                               serial++});
    };
    for (std::size_t j = 1; j < g.size(); ++j) push_pairs(j);

    auto is_pending = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        for (const Pair& p : pending)
            if (p.i == a && p.j == b) return true;
        return false;
    };

    while (!pending.empty()) {
        std::size_t best = 0;
        if (strategy == PairStrategy::Normal) {
            for (std::size_t k = 1; k < pending.size(); ++k)
                if (ord.less(pending[k].lcm, pending[best].lcm) ||
                    (pending[k].lcm == pending[best].lcm &&
                     pending[k].serial < pending[best].serial))
                    best = k;
        }  // Fifo: take the oldest, i.e. index 0.
        Pair pr = pending[best];
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));

        const Monomial& mi = g[pr.i].leading_term(ord).mono;
        const Monomial& mj = g[pr.j].leading_term(ord).mono;

        // Coprime leading monomials: S-polynomial reduces to zero.
        if (Monomial::coprime(mi, mj)) continue;

        // Chain criterion: a third element divides the lcm and both side
        // pairs are already settled.
        bool chained = false;
        for (std::size_t k = 0; k < g.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (g[k].leading_term(ord).mono.divides(pr.lcm) && !is_pending(pr.i, k) &&
                !is_pending(pr.j, k))
                chained = true;
        }
        if (chained) continue;

        Polynomial s = s_polynomial(g[pr.i], g[pr.j], ord);
        Polynomial r = normal_form(s, g, ord).remainder;
        if (r.is_zero()) continue;
        g.push_back(r.monic(ord));
        push_pairs(g.size() - 1);
    }

    GroebnerBasis gb{ideal.vars, ord, reduce_basis(std::move(g), ord)};
    if (!verify_groebner(gb)) throw Error("internal error: basis failed the S-pair check");
    return gb;
}

bool ideal_membership(const Polynomial& p, const GroebnerBasis& gb) {
    if (p.vars() != gb.vars) throw AmbientMismatch("membership query over wrong ambient");
    if (p.is_zero()) return true;
    return normal_form(p, gb.elements, gb.order).remainder.is_zero();
}

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& g,
                                       const MonomialOrder& ord) {
    DivisionResult d = normal_form(p, {g}, ord);
    if (!d.remainder.is_zero()) return std::nullopt;
    return d.quotients[0];
}

namespace {

Polynomial lift(const Polynomial& p, const Vars& big) {
    std::vector<Term> terms;
    for (const Term& t : p.terms()) {
        Monomial m(big.size());
        for (std::size_t v = 0; v < p.nvars(); ++v) {
            int idx = big.index_of(p.vars().name(v));
            m.set(static_cast<std::size_t>(idx), t.mono[v]);
        }
        terms.push_back({m, t.coeff});
    }
    return Polynomial::from_terms(big, std::move(terms));
}

Polynomial drop_last_var(const Polynomial& p, const Vars& small) {
    std::vector<Term> terms;
    for (const Term& t : p.terms()) {
        Monomial m(small.size());
        for (std::size_t v = 0; v < small.size(); ++v) m.set(v, t.mono[v]);
        terms.push_back({m, t.coeff});
    }
    return Polynomial::from_terms(small, std::move(terms));
}

}  // namespace

GroebnerBasis ideal_quotient(const Ideal& j, const Polynomial& g, const MonomialOrder& ord) {
    if (g.is_zero()) throw Error("ideal quotient by zero");
    if (g.vars() != j.vars) throw AmbientMismatch("quotient divisor over wrong ambient");

    const Vars big = j.vars.extended("t");
    const std::size_t tn = big.size() - 1;
    Polynomial t = Polynomial::variable(big, tn);
    Polynomial one_minus_t = Polynomial::constant(big, Rational(1)) - t;

    std::vector<Polynomial> gens;
    gens.push_back(t * lift(g, big));
    for (const Polynomial& f : j.gens) gens.push_back(one_minus_t * lift(f, big));

    // Elimination order: fresh variable strongest, original precedence after.
    std::vector<std::size_t> prec{tn};
    for (std::size_t v = 0; v < tn; ++v) prec.push_back(v);
    GroebnerBasis egb = buchberger(Ideal(big, std::move(gens)), MonomialOrder::lex(prec));

    // t-free elements generate J intersect <g>; each is divisible by g.
    std::vector<Polynomial> quotients;
    for (const Polynomial& e : egb.elements) {
        bool tfree = true;
        for (const Term& term : e.terms())
            if (term.mono[tn] > 0) {
                tfree = false;
                break;
            }
        if (!tfree) continue;
        Polynomial in_small = drop_last_var(e, j.vars);
        auto q = exact_divide(in_small, g, ord);
        if (!q) throw Error("internal error: intersection element not divisible by g");
        if (!q->is_zero()) quotients.push_back(std::move(*q));
    }
    if (quotients.empty()) throw Error("internal error: empty ideal quotient");
    return buchberger(Ideal(j.vars, std::move(quotients)), ord);
}

bool annihilator_check(const Ideal& j, const Polynomial& g, const MonomialOrder& ord) {
    GroebnerBasis gbj = buchberger(j, ord);
    GroebnerBasis q = ideal_quotient(j, g, ord);
    for (const Polynomial& e : q.elements)
        if (!ideal_membership(e, gbj)) return false;
    for (const Polynomial& f : j.gens)
        if (!ideal_membership(f, q)) return false;
    return true;
}

}  // namespace hh
