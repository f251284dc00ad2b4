#include "hh/weights.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace hh {

namespace {

using Row = std::vector<Rational>;

// In-place reduced row echelon form; returns pivot column per row rank.
std::vector<std::size_t> rref(std::vector<Row>& m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t sel = r;
        while (sel < m.size() && m[sel][c].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        Rational inv = m[r][c].inverse();
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (std::size_t j = 0; j < ncols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

// Scales a rational vector to coprime integers, preserving direction.
std::vector<long> to_integer_vector(const Row& v) {
    mpz_class l(1);
    for (const Rational& x : v) {
        mpz_class d = x.den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        l = l / g * d;
    }
    std::vector<mpz_class> ints;
    mpz_class g(0);
    for (const Rational& x : v) {
        mpz_class n = x.num() * (l / x.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        ints.push_back(n);
    }
    std::vector<long> out;
    for (mpz_class& n : ints) {
        if (g != 0) n /= g;
        if (!n.fits_slong_p()) throw Error("weight component out of range");
        out.push_back(n.get_si());
    }
    return out;
}

}  // namespace

WeightVector detect_weights(const Polynomial& f) {
    if (f.is_zero()) throw NotQuasiHomogeneous("zero polynomial has no weight system");
    const std::size_t n = f.nvars();
    const auto& terms = f.terms();

    // Homogeneity system: (e_t - e_0) . w = 0 for every support exponent e_t.
    std::vector<Row> m;
    for (std::size_t t = 1; t < terms.size(); ++t) {
        Row row(n);
        for (std::size_t j = 0; j < n; ++j)
            row[j] = Rational(terms[t].mono[j] - terms[0].mono[j]);
        m.push_back(std::move(row));
    }
    std::vector<std::size_t> pivots = rref(m, n);

    // Nullspace basis: one vector per free column.
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<long>> basis;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Row v(n, Rational(0));
        v[c] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][c];
        basis.push_back(to_integer_vector(v));
    }

    auto fail = [&] {
        throw NotQuasiHomogeneous("no positive weight system for " + f.to_string());
    };
    if (basis.empty()) fail();

    std::vector<long> best;
    auto consider = [&](const std::vector<long>& w) {
        for (long x : w)
            if (x <= 0) return;
        long g = 0;
        for (long x : w) g = std::gcd(g, x);
        std::vector<long> v(w);
        for (long& x : v) x /= g;
        long sum = std::accumulate(v.begin(), v.end(), 0L);
        if (best.empty() || sum < std::accumulate(best.begin(), best.end(), 0L)) best = v;
    };

    if (basis.size() == 1) {
        std::vector<long> v = basis[0];
        if (std::all_of(v.begin(), v.end(), [](long x) { return x < 0; }))
            for (long& x : v) x = -x;
        consider(v);
    } else {
        // Underdetermined support: bounded search over integer combinations,
        // minimizing the weight total. Box size 16 is ample for n <= 3.
        const long B = 16;
        std::vector<long> coef(basis.size(), 0);
        std::vector<long> w(n);
        auto rec = [&](auto&& self, std::size_t k) -> void {
            if (k == basis.size()) {
                for (std::size_t j = 0; j < n; ++j) {
                    long acc = 0;
                    for (std::size_t b = 0; b < basis.size(); ++b)
                        acc += coef[b] * basis[b][j];
                    w[j] = acc;
                }
                consider(w);
                return;
            }
            for (long a = -B; a <= B; ++a) {
                coef[k] = a;
                self(self, k + 1);
            }
        };
        rec(rec, 0);
    }
    if (best.empty()) fail();

    WeightVector wv;
    for (long x : best) wv.weights.push_back(static_cast<int>(x));
    wv.total = wv.weight(terms[0].mono);

    long check;
    WeightVector probe = wv;
    if (!f.is_weight_homogeneous(probe, &check) || check != wv.total)
        throw Error("weight detection postcondition failed");
    return wv;
}

}  // namespace hh
