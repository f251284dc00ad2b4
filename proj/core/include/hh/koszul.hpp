#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hh/quotient.hpp"
#include "hh/weights.hpp"

namespace hh {

// One free generator b^q * eta_{i1} ^ ... ^ eta_{is} of the Koszul algebra
// A[eta_1..eta_n, b]. The differential substitutes eta_j -> (df/dz_j) * b.
// Hodge degree: deg(eta) = 1, deg(b) = 2. The grading by the weights of f
// assigns a generator the shift q*d + sum of the w_j over its etas; a class
// a*G with a in A of weight v sits in the slice labeled v - shift, the unique
// assignment (up to scale) the differential preserves.
struct KoszulGenerator {
    int b_power = 0;
    std::vector<std::size_t> etas;  // 0-based variable indices, display order

    int hodge_degree() const { return 2 * b_power + static_cast<int>(etas.size()); }
    long weight_shift(const WeightVector& wv) const;
    std::string to_string() const;  // e.g. "b^2*eta1*eta3", "1"
};

// One summand of d(G_src) = sum sign * (df/dz_var) * b * G_dst, indices into
// the generator lists of consecutive degrees.
struct KoszulTransition {
    std::size_t src = 0;
    std::size_t dst = 0;
    std::size_t var = 0;
    int sign = 1;
};

// The matrix of d restricted to one (degree, label) slice, with the row and
// column bases spelled out as (generator, standard monomial) pairs.
struct DifferentialSlice {
    int p = 0;
    long w = 0;
    std::vector<std::pair<KoszulGenerator, Monomial>> cols;  // basis of degree p
    std::vector<std::pair<KoszulGenerator, Monomial>> rows;  // basis of degree p+1
    QMatrix matrix;
};

struct DegreeExpectation {
    int p = 0;
    bool finite = true;
    long total = 0;  // consulted only when finite
};

// Exact data for one (p, w) slice: dim H^p_w = dim - rank_out - rank_in.
struct SliceSummary {
    long w = 0;
    std::size_t dim = 0;       // dim of the degree-p slice
    std::size_t rank_out = 0;  // rank of d out of it
    std::size_t rank_in = 0;   // rank of d into it
    std::size_t h = 0;
};

struct DegreeResult {
    int p = 0;
    bool finite = false;  // verdict: the top margin band is all zero
    long total = 0;       // sum of h over the scanned labels
    long w_lo = 0, w_hi = 0;
    std::vector<SliceSummary> slices;  // ascending w; all-zero slices omitted
    std::optional<DegreeExpectation> expected;
    bool pass = true;
};

struct CohomologyReport {
    std::string case_id;
    Polynomial f;
    WeightVector weights;
    long weight_bound = 0;  // algebra-weight enumeration bound actually used
    int p_max = 0;
    std::vector<DegreeResult> degrees;
    bool pass = true;
};

// Default enumeration bound: p_max*d + socle degree of the Milnor algebra
// + d, leaving a trailing band of width d as finiteness evidence.
long auto_weight_bound(const Polynomial& f, int p_max);

// The weight-graded Koszul complex of C[z_1..z_n]/<f> for n in {1,2,3}.
// Degree-p generator lists follow the usual basis order (pure b-power first,
// then the wedges eta1 eta2, eta2 eta3, eta3 eta1, then eta1 eta2 eta3), and
// slice matrices have block entries +-(df/dz_j) placed by the transitions.
class KoszulComplex {
  public:
    // weight_bound < 0 resolves via auto_weight_bound.
    KoszulComplex(const Polynomial& f, int p_max, long weight_bound = -1);

    const Polynomial& f() const { return f_; }
    const WeightVector& weights() const { return wv_; }
    int p_max() const { return p_max_; }
    long weight_bound() const { return bound_; }
    const QuotientBasis& algebra() const { return a_; }
    const Polynomial& partial(std::size_t v) const { return partials_.at(v); }

    // Generators exist for degrees 0..p_max+1, transitions for 0..p_max.
    const std::vector<KoszulGenerator>& generators(int p) const;
    const std::vector<KoszulTransition>& transitions(int p) const;

    // Smallest label with a possibly nonzero degree-p slice.
    long label_min(int p) const;
    // Largest label whose H^p data is fully inside the enumeration bound.
    long label_cap(int p) const;

    long slice_dimension(int p, long w) const;
    QMatrix slice_matrix(int p, long w) const;  // d out of (p, w)
    DifferentialSlice differential_slice(int p, long w) const;

    // Scans every degree 0..p_max over its full label range, takes exact
    // ranks, and judges finiteness by the emptiness of the top band of width
    // d. Throws BoundTooSmall when a degree expected finite still has classes
    // in the band (or the band does not fit the scanned range).
    CohomologyReport cohomology(const std::string& case_id = "",
                                const std::vector<DegreeExpectation>& expectations = {}) const;

  private:
    long max_shift(int p) const;
    const QMatrix& mult(std::size_t var, long source_weight) const;
    const std::vector<Monomial>& slice_of(long v) const;

    Polynomial f_;
    WeightVector wv_;
    int p_max_ = 0;
    long bound_ = 0;
    QuotientBasis a_;
    std::vector<std::vector<Monomial>> aslices_;  // index = algebra weight
    std::vector<Polynomial> partials_;
    std::vector<std::vector<KoszulGenerator>> gens_;
    std::vector<std::vector<KoszulTransition>> trans_;
    mutable std::map<std::pair<std::size_t, long>, QMatrix> mult_cache_;
};

}  // namespace hh
