#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "hh/monomial.hpp"

namespace hh {

// Positive integer weights per variable plus the weight of the defining
// polynomial. For a quasi-homogeneous f, weight(m) is constant over supp(f)
// and equals total.
struct WeightVector {
    std::vector<int> weights;
    long total = 0;

    long weight(const Monomial& m) const {
        long w = 0;
        for (std::size_t i = 0; i < m.nvars(); ++i) w += static_cast<long>(weights.at(i)) * m[i];
        return w;
    }
    std::size_t nvars() const { return weights.size(); }
};

// Total monomial order: plain lex or weighted degree with lex tie-break.
// `precedence` lists variable indices strongest-first, so the default
// {0,1,2} reads z1 > z2 > z3.
class MonomialOrder {
  public:
    enum class Kind { Lex, WeightedLex };

    static MonomialOrder lex(std::size_t nvars) {
        MonomialOrder o;
        o.kind_ = Kind::Lex;
        o.prec_.resize(nvars);
        std::iota(o.prec_.begin(), o.prec_.end(), 0);
        return o;
    }

    static MonomialOrder lex(std::vector<std::size_t> precedence) {
        MonomialOrder o;
        o.kind_ = Kind::Lex;
        o.prec_ = std::move(precedence);
        o.check_precedence();
        return o;
    }

    static MonomialOrder weighted_lex(std::vector<int> weights) {
        MonomialOrder o;
        o.kind_ = Kind::WeightedLex;
        o.weights_ = std::move(weights);
        for (int w : o.weights_)
            if (w <= 0) throw Error("weighted order needs positive weights");
        o.prec_.resize(o.weights_.size());
        std::iota(o.prec_.begin(), o.prec_.end(), 0);
        return o;
    }

    Kind kind() const { return kind_; }
    std::size_t nvars() const { return prec_.size(); }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        if (kind_ == Kind::WeightedLex) {
            long wa = 0, wb = 0;
            for (std::size_t i = 0; i < prec_.size(); ++i) {
                wa += static_cast<long>(weights_[i]) * a[i];
                wb += static_cast<long>(weights_[i]) * b[i];
            }
            if (auto c = wa <=> wb; c != 0) return c;
        }
        for (std::size_t v : prec_)
            if (auto c = a[v] <=> b[v]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string describe() const {
        std::string s = kind_ == Kind::Lex ? "lex" : "wlex";
        s += " prec=";
        for (std::size_t i = 0; i < prec_.size(); ++i)
            s += (i ? "," : "") + std::to_string(prec_[i]);
        if (kind_ == Kind::WeightedLex) {
            s += " w=";
            for (std::size_t i = 0; i < weights_.size(); ++i)
                s += (i ? "," : "") + std::to_string(weights_[i]);
        }
        return s;
    }

  private:
    void check_precedence() {
        std::vector<bool> seen(prec_.size(), false);
        for (std::size_t v : prec_) {
            if (v >= prec_.size() || seen[v]) throw Error("precedence is not a permutation");
            seen[v] = true;
        }
    }

    Kind kind_ = Kind::Lex;
    std::vector<std::size_t> prec_;
    std::vector<int> weights_;
};

}  // namespace hh
