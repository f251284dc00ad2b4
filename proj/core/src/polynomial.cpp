#include "hh/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace hh {

namespace {

void require_same_ambient(const Vars& a, const Vars& b) {
    if (a != b) throw AmbientMismatch("operands live over different variable lists");
}

// Canonical storage comparator: descending lex, variable 0 strongest.
bool desc_lex(const Term& a, const Term& b) { return a.mono > b.mono; }

}  // namespace

Polynomial Polynomial::constant(const Vars& v, Rational c) {
    Polynomial p(v);
    if (!c.is_zero()) p.terms_.push_back({Monomial(v.size()), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(const Vars& v, std::size_t index, int power) {
    if (index >= v.size()) throw Error("variable index out of range");
    if (power < 0) throw Error("negative exponent");
    Monomial m(v.size());
    m.set(index, power);
    return from_term(v, m, Rational(1));
}

Polynomial Polynomial::from_term(const Vars& v, Monomial m, Rational c) {
    if (m.nvars() != v.size()) throw AmbientMismatch("monomial arity != ambient size");
    Polynomial p(v);
    if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(const Vars& v, std::vector<Term> terms) {
    for (const Term& t : terms)
        if (t.mono.nvars() != v.size()) throw AmbientMismatch("monomial arity != ambient size");
    Polynomial p(v);
    p.normalize(std::move(terms));
    return p;
}

void Polynomial::normalize(std::vector<Term>&& raw) {
    std::sort(raw.begin(), raw.end(), desc_lex);
    terms_.clear();
    for (Term& t : raw) {
        if (!terms_.empty() && terms_.back().mono == t.mono)
            terms_.back().coeff += t.coeff;
        else
            terms_.push_back(std::move(t));
        if (!terms_.empty() && terms_.back().coeff.is_zero()) terms_.pop_back();
    }
}

int Polynomial::degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (vars_ != o.vars_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

// Merge of two descending term lists.
Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_ambient(vars_, o.vars_);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        auto c = terms_[i].mono <=> o.terms_[j].mono;
        if (c > 0) {
            out.push_back(std::move(terms_[i++]));
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) out.push_back({terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    terms_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ambient(a.vars(), b.vars());
    std::vector<Term> raw;
    raw.reserve(a.terms().size() * b.terms().size());
    for (const Term& ta : a.terms())
        for (const Term& tb : b.terms())
            raw.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
    return Polynomial::from_terms(a.vars(), std::move(raw));
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (Term& t : terms_) t.coeff *= c;
    return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial base(*this), acc = Polynomial::constant(vars_, Rational(1));
    while (e) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return acc;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
    if (m.nvars() != vars_.size()) throw AmbientMismatch("monomial arity != ambient size");
    Polynomial r(vars_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    // Shifting every exponent by m preserves the descending order.
    for (const Term& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
}

Polynomial Polynomial::derivative(std::size_t var_index) const {
    if (var_index >= vars_.size()) throw Error("variable index out of range");
    std::vector<Term> raw;
    for (const Term& t : terms_) {
        int e = t.mono[var_index];
        if (e == 0) continue;
        Monomial m = t.mono;
        m.set(var_index, e - 1);
        raw.push_back({m, t.coeff * Rational(e)});
    }
    return from_terms(vars_, std::move(raw));
}

Polynomial Polynomial::substitute(std::size_t var_index, const Polynomial& image) const {
    require_same_ambient(vars_, image.vars());
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        images.push_back(i == var_index ? image : Polynomial::variable(vars_, i));
    return compose(images);
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const {
    if (images.size() != vars_.size())
        throw Error("compose needs one image per variable");
    const Vars& target = images.front().vars();
    for (const Polynomial& q : images) require_same_ambient(target, q.vars());

    // Cache powers of each image as they come up; exponents stay small.
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t v, int e) -> const Polynomial& {
        auto& tab = powers[v];
        if (tab.empty()) tab.push_back(Polynomial::constant(target, Rational(1)));
        while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * images[v]);
        return tab[e];
    };

    Polynomial acc(target);
    for (const Term& t : terms_) {
        Polynomial prod = Polynomial::constant(target, t.coeff);
        for (std::size_t v = 0; v < vars_.size(); ++v)
            if (t.mono[v] > 0) prod = prod * power(v, t.mono[v]);
        acc += prod;
    }
    return acc;
}

const Term& Polynomial::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    const Term* best = &terms_[0];
    for (const Term& t : terms_)
        if (ord.greater(t.mono, best->mono)) best = &t;
    return *best;
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
    if (terms_.empty()) return *this;
    Rational lc = leading_term(ord).coeff;
    Polynomial r(*this);
    r *= lc.inverse();
    return r;
}

bool Polynomial::is_weight_homogeneous(const WeightVector& wv, long* w) const {
    if (terms_.empty()) {
        if (w) *w = 0;
        return true;
    }
    long w0 = wv.weight(terms_.front().mono);
    for (const Term& t : terms_)
        if (wv.weight(t.mono) != w0) return false;
    if (w) *w = w0;
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        Rational c = t.coeff;
        if (i == 0) {
            if (c.sign() < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            if (c.sign() < 0) c = -c;
        }
        bool has_vars = !t.mono.is_one();
        if (!has_vars) {
            out += c.to_string();
            continue;
        }
        if (!c.is_one()) out += c.to_string() + "*";
        bool first = true;
        for (std::size_t v = 0; v < vars_.size(); ++v) {
            int e = t.mono[v];
            if (e == 0) continue;
            if (!first) out += "*";
            first = false;
            out += vars_.name(v);
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace hh
