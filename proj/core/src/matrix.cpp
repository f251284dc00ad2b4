#include "hh/matrix.hpp"

#include <gmpxx.h>

#include "hh/error.hpp"

namespace hh {

QMatrix QMatrix::stacked(const QMatrix& other) const {
    if (cols_ != other.cols_ && rows_ != 0 && other.rows_ != 0)
        throw Error("stacked matrices need equal column counts");
    std::size_t c = rows_ ? cols_ : other.cols_;
    QMatrix r(rows_ + other.rows_, c);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < other.rows_; ++i)
        for (std::size_t j = 0; j < other.cols_; ++j) r.at(rows_ + i, j) = other.at(i, j);
    return r;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw Error("matrix product shape mismatch");
    QMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

std::size_t exact_rank(const QMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    if (R == 0 || C == 0) return 0;

    // Row scaling leaves rank unchanged; clear each row to integers.
    std::vector<mpz_class> a(R * C);
    for (std::size_t i = 0; i < R; ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < C; ++j) {
            mpz_class d = m.at(i, j).den(), g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
            l = l / g * d;
        }
        for (std::size_t j = 0; j < C; ++j)
            a[i * C + j] = m.at(i, j).num() * (l / m.at(i, j).den());
    }

    std::size_t r = 0;
    mpz_class prev(1), q, rem;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t sel = r;
        while (sel < R && a[sel * C + c] == 0) ++sel;
        if (sel == R) continue;
        if (sel != r)
            for (std::size_t j = 0; j < C; ++j) std::swap(a[r * C + j], a[sel * C + j]);
        const mpz_class pivot = a[r * C + c];
        for (std::size_t i = r + 1; i < R; ++i) {
            const mpz_class lead = a[i * C + c];
            for (std::size_t j = c + 1; j < C; ++j) {
                mpz_class num = pivot * a[i * C + j] - lead * a[r * C + j];
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                            prev.get_mpz_t());
                if (rem != 0) throw Error("Bareiss interior division was not exact");
                a[i * C + j] = q;
            }
            a[i * C + c] = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

std::size_t kernel_dimension(const QMatrix& m) { return m.cols() - exact_rank(m); }

}  // namespace hh
