#include "hh/koszul.hpp"

#include <algorithm>

namespace hh {

long KoszulGenerator::weight_shift(const WeightVector& wv) const {
    long s = static_cast<long>(b_power) * wv.total;
    for (std::size_t j : etas) s += wv.weights.at(j);
    return s;
}

std::string KoszulGenerator::to_string() const {
    std::string s;
    if (b_power == 1) s = "b";
    else if (b_power > 1) s = "b^" + std::to_string(b_power);
    for (std::size_t j : etas) {
        if (!s.empty()) s += "*";
        s += "eta" + std::to_string(j + 1);
    }
    return s.empty() ? "1" : s;
}

long auto_weight_bound(const Polynomial& f, int p_max) {
    const WeightVector wv = detect_weights(f);
    long socle = 0;
    for (const Monomial& m : milnor_algebra(f).monomials) socle = std::max(socle, wv.weight(m));
    return static_cast<long>(p_max) * wv.total + socle + wv.total;
}

namespace {

// Degree-p free generators over A, in display order: the pure b-power first,
// then two-variable wedges eta1 eta2, eta2 eta3, eta3 eta1, then the full
// wedge. Negative b-powers are skipped.
std::vector<KoszulGenerator> degree_generators(std::size_t n, int p) {
    std::vector<KoszulGenerator> g;
    const int q = p / 2;
    if (p % 2 == 0) {
        g.push_back({q, {}});
        if (q >= 1) {
            if (n == 2) g.push_back({q - 1, {0, 1}});
            if (n == 3) {
                g.push_back({q - 1, {0, 1}});
                g.push_back({q - 1, {1, 2}});
                g.push_back({q - 1, {2, 0}});
            }
        }
    } else {
        for (std::size_t j = 0; j < n; ++j) g.push_back({q, {j}});
        if (n == 3 && q >= 1) g.push_back({q - 1, {0, 1, 2}});
    }
    return g;
}

// d(b^q eta_j) = (d_j f) b^{q+1};
// d(b^q eta_k eta_l) = -(d_k f) b^{q+1} eta_l + (d_l f) b^{q+1} eta_k;
// d(b^q eta1 eta2 eta3) = (d_1 f) b^{q+1} eta2 eta3 + (d_2 f) b^{q+1} eta3 eta1
//                        + (d_3 f) b^{q+1} eta1 eta2.
std::vector<KoszulTransition> degree_transitions(std::size_t n, int p) {
    std::vector<KoszulTransition> t;
    const int q = p / 2;
    if (p % 2 == 0) {
        // Sources: [b^q, (q>=1 wedges...)]; targets: [b^q eta_j ..., triple].
        if (q >= 1) {
            if (n == 2) {
                t.push_back({1, 1, 0, -1});  // eta1 eta2 -> eta2 via d_1
                t.push_back({1, 0, 1, +1});  // eta1 eta2 -> eta1 via d_2
            }
            if (n == 3) {
                t.push_back({1, 1, 0, -1});  // eta1 eta2
                t.push_back({1, 0, 1, +1});
                t.push_back({2, 2, 1, -1});  // eta2 eta3
                t.push_back({2, 1, 2, +1});
                t.push_back({3, 0, 2, -1});  // eta3 eta1
                t.push_back({3, 2, 0, +1});
            }
        }
    } else {
        // Sources: [b^q eta_1..eta_n, (q>=1 triple)]; targets: [b^{q+1}, wedges].
        for (std::size_t j = 0; j < n; ++j) t.push_back({j, 0, j, +1});
        if (n == 3 && q >= 1) {
            t.push_back({n, 2, 0, +1});  // triple -> eta2 eta3 via d_1
            t.push_back({n, 3, 1, +1});  // triple -> eta3 eta1 via d_2
            t.push_back({n, 1, 2, +1});  // triple -> eta1 eta2 via d_3
        }
    }
    return t;
}

}  // namespace

KoszulComplex::KoszulComplex(const Polynomial& f, int p_max, long weight_bound)
    : f_(f), p_max_(p_max) {
    const std::size_t n = f.nvars();
    if (n > 3) throw UnsupportedDimension("Koszul complex is built for 1..3 variables");
    if (f.is_zero()) throw Error("zero defining polynomial");
    if (p_max < 0) throw Error("negative degree cap");

    wv_ = detect_weights(f_);
    bound_ = weight_bound >= 0 ? weight_bound : auto_weight_bound(f_, p_max_);

    GroebnerBasis gb = buchberger(Ideal(f_.vars(), {f_}), MonomialOrder::lex(n));
    a_ = standard_monomials(gb, wv_, bound_);

    aslices_.resize(static_cast<std::size_t>(bound_) + 1);
    for (const Monomial& m : a_.monomials)
        aslices_[static_cast<std::size_t>(wv_.weight(m))].push_back(m);

    for (std::size_t v = 0; v < n; ++v) partials_.push_back(f_.derivative(v));

    for (int p = 0; p <= p_max_ + 1; ++p) gens_.push_back(degree_generators(n, p));
    for (int p = 0; p <= p_max_; ++p) {
        std::vector<KoszulTransition> t = degree_transitions(n, p);
        for (const KoszulTransition& tr : t) {
            if (tr.src >= gens_[static_cast<std::size_t>(p)].size() ||
                tr.dst >= gens_[static_cast<std::size_t>(p) + 1].size())
                throw Error("internal error: transition index out of range");
        }
        trans_.push_back(std::move(t));
    }
}

const std::vector<KoszulGenerator>& KoszulComplex::generators(int p) const {
    if (p < 0 || p > p_max_ + 1) throw Error("degree out of range");
    return gens_[static_cast<std::size_t>(p)];
}

const std::vector<KoszulTransition>& KoszulComplex::transitions(int p) const {
    if (p < 0 || p > p_max_) throw Error("degree out of range");
    return trans_[static_cast<std::size_t>(p)];
}

long KoszulComplex::max_shift(int p) const {
    long s = 0;
    for (const KoszulGenerator& g : generators(p)) s = std::max(s, g.weight_shift(wv_));
    return s;
}

long KoszulComplex::label_min(int p) const { return -max_shift(p); }

long KoszulComplex::label_cap(int p) const {
    long s = max_shift(p);
    if (p > 0) s = std::max(s, max_shift(p - 1));
    if (p <= p_max_) s = std::max(s, max_shift(p + 1));
    return bound_ - s;
}

const std::vector<Monomial>& KoszulComplex::slice_of(long v) const {
    static const std::vector<Monomial> empty;
    if (v < 0) return empty;
    if (v > bound_) throw BoundTooSmall("slice beyond the enumeration bound");
    return aslices_[static_cast<std::size_t>(v)];
}

long KoszulComplex::slice_dimension(int p, long w) const {
    long dim = 0;
    for (const KoszulGenerator& g : generators(p)) {
        const long v = w + g.weight_shift(wv_);
        dim += static_cast<long>(slice_of(v).size());
    }
    return dim;
}

const QMatrix& KoszulComplex::mult(std::size_t var, long source_weight) const {
    const auto key = std::make_pair(var, source_weight);
    auto it = mult_cache_.find(key);
    if (it != mult_cache_.end()) return it->second;
    const long target = source_weight + (wv_.total - wv_.weights.at(var));
    QMatrix m = multiplication_matrix(partials_.at(var), a_, source_weight, target);
    return mult_cache_.emplace(key, std::move(m)).first->second;
}

QMatrix KoszulComplex::slice_matrix(int p, long w) const {
    const std::vector<KoszulGenerator>& src = generators(p);
    const std::vector<KoszulGenerator>& dst = generators(p + 1);

    std::vector<std::size_t> col_off(src.size() + 1, 0), row_off(dst.size() + 1, 0);
    for (std::size_t i = 0; i < src.size(); ++i)
        col_off[i + 1] = col_off[i] + slice_of(w + src[i].weight_shift(wv_)).size();
    for (std::size_t i = 0; i < dst.size(); ++i)
        row_off[i + 1] = row_off[i] + slice_of(w + dst[i].weight_shift(wv_)).size();

    QMatrix m(row_off.back(), col_off.back());
    for (const KoszulTransition& t : transitions(p)) {
        const long vs = w + src[t.src].weight_shift(wv_);
        if (vs < 0) continue;
        const QMatrix& block = mult(t.var, vs);
        for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < block.cols(); ++j) {
                Rational x = block.at(i, j);
                if (t.sign < 0) x = -x;
                m.at(row_off[t.dst] + i, col_off[t.src] + j) += x;
            }
    }
    return m;
}

DifferentialSlice KoszulComplex::differential_slice(int p, long w) const {
    DifferentialSlice s;
    s.p = p;
    s.w = w;
    for (const KoszulGenerator& g : generators(p))
        for (const Monomial& m : slice_of(w + g.weight_shift(wv_))) s.cols.emplace_back(g, m);
    for (const KoszulGenerator& g : generators(p + 1))
        for (const Monomial& m : slice_of(w + g.weight_shift(wv_))) s.rows.emplace_back(g, m);
    s.matrix = slice_matrix(p, w);
    if (s.matrix.rows() != s.rows.size() || s.matrix.cols() != s.cols.size())
        throw Error("internal error: slice basis and matrix shape disagree");
    return s;
}

CohomologyReport KoszulComplex::cohomology(const std::string& case_id,
                                           const std::vector<DegreeExpectation>& expectations) const {
    CohomologyReport rep;
    rep.case_id = case_id;
    rep.f = f_;
    rep.weights = wv_;
    rep.weight_bound = bound_;
    rep.p_max = p_max_;

    std::map<std::pair<int, long>, std::size_t> rank_cache;
    auto rank_at = [&](int p, long w) -> std::size_t {
        const auto key = std::make_pair(p, w);
        auto it = rank_cache.find(key);
        if (it != rank_cache.end()) return it->second;
        std::size_t r = exact_rank(slice_matrix(p, w));
        rank_cache.emplace(key, r);
        return r;
    };

    for (int p = 0; p <= p_max_; ++p) {
        DegreeResult res;
        res.p = p;
        res.w_lo = label_min(p);
        res.w_hi = label_cap(p);

        const long band_lo = res.w_hi - wv_.total + 1;
        if (band_lo <= res.w_lo)
            throw BoundTooSmall("weight bound leaves no margin band for degree " +
                                std::to_string(p));

        bool band_clear = true;
        for (long w = res.w_lo; w <= res.w_hi; ++w) {
            SliceSummary s;
            s.w = w;
            s.dim = static_cast<std::size_t>(slice_dimension(p, w));
            s.rank_out = rank_at(p, w);
            s.rank_in = p > 0 ? rank_at(p - 1, w) : 0;
            if (s.dim < s.rank_out + s.rank_in)
                throw Error("internal error: negative cohomology dimension");
            s.h = s.dim - s.rank_out - s.rank_in;
            res.total += static_cast<long>(s.h);
            if (s.h > 0 && w >= band_lo) band_clear = false;
            if (s.dim > 0) res.slices.push_back(s);
        }
        res.finite = band_clear;

        for (const DegreeExpectation& e : expectations)
            if (e.p == p) {
                res.expected = e;
                if (e.finite && !res.finite)
                    throw BoundTooSmall("degree " + std::to_string(p) +
                                        " expected finite but the margin band is not empty");
                res.pass = (e.finite == res.finite) && (!e.finite || res.total == e.total);
                if (!res.pass) rep.pass = false;
            }
        rep.degrees.push_back(std::move(res));
    }
    return rep;
}

}  // namespace hh
