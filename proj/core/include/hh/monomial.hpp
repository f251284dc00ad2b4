#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "hh/error.hpp"

namespace hh {

// Hard cap on ambient size: three working variables plus one elimination
// variable introduced internally by the ideal-quotient routine.
inline constexpr std::size_t kMaxVars = 4;

// Immutable list of variable names; identifies the ambient polynomial ring.
class Vars {
  public:
    Vars() = default;
    explicit Vars(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty() || names_.size() > kMaxVars)
            throw Error("variable list must have 1.." + std::to_string(kMaxVars) + " entries");
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j]) throw Error("duplicate variable name: " + names_[i]);
    }

    static Vars z(std::size_t n) {
        std::vector<std::string> v;
        for (std::size_t i = 1; i <= n; ++i) v.push_back("z" + std::to_string(i));
        return Vars(std::move(v));
    }
    static Vars xy() { return Vars({"x", "y"}); }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    // -1 when absent.
    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<int>(i);
        return -1;
    }

    // New ambient with one extra variable appended, name chosen to avoid clashes.
    Vars extended(const std::string& base) const {
        std::string nm = base;
        int suffix = 0;
        while (index_of(nm) >= 0) nm = base + std::to_string(suffix++);
        std::vector<std::string> v = names_;
        v.push_back(nm);
        return Vars(std::move(v));
    }

    friend bool operator==(const Vars& a, const Vars& b) { return a.names_ == b.names_; }
    friend bool operator!=(const Vars& a, const Vars& b) { return !(a == b); }

  private:
    std::vector<std::string> names_;
};

// Exponent vector over a fixed number of variables. Exponents are
// non-negative; the ambient size is carried so mixed-arity use is caught.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : n_(nvars) {
        if (nvars == 0 || nvars > kMaxVars) throw Error("bad monomial arity");
    }
    Monomial(std::initializer_list<int> exps) : n_(exps.size()) {
        if (n_ == 0 || n_ > kMaxVars) throw Error("bad monomial arity");
        std::size_t i = 0;
        for (int e : exps) {
            if (e < 0) throw Error("negative exponent");
            e_[i++] = e;
        }
    }

    std::size_t nvars() const { return n_; }
    int operator[](std::size_t i) const { return e_[i]; }
    void set(std::size_t i, int v) {
        if (v < 0) throw Error("negative exponent");
        e_[i] = v;
    }

    int degree() const { return std::accumulate(e_.begin(), e_.begin() + n_, 0); }
    bool is_one() const { return degree() == 0; }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < n_; ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r(n_);
        for (std::size_t i = 0; i < n_; ++i) r.e_[i] = e_[i] + m.e_[i];
        return r;
    }

    // Requires m.divides(*this).
    Monomial operator/(const Monomial& m) const {
        Monomial r(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (e_[i] < m.e_[i]) throw Error("monomial division underflow");
            r.e_[i] = e_[i] - m.e_[i];
        }
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.n_; ++i)
            if (a.e_[i] > 0 && b.e_[i] > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.n_ == b.n_ && std::equal(a.e_.begin(), a.e_.begin() + a.n_, b.e_.begin());
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    // Plain lex with variable 0 strongest; the canonical storage order.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.n_; ++i)
            if (auto c = a.e_[i] <=> b.e_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

  private:
    std::array<int, kMaxVars> e_{};
    std::size_t n_ = 0;
};

}  // namespace hh
