// Acceptance gate: one test case per numbered criterion, each printing a
// single "criterion N: PASS/FAIL - ..." line before asserting its verdict.
// Two criteria encode recorded expectations that exact computation refutes
// (the degree-zero totals in criterion 1 and the D-family relation-form
// dimensions in criterion 4); they print FAIL lines with the computed truth
// and are expected to stay red.
#include <doctest.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hh/catalog.hpp"
#include "hh/groebner.hpp"
#include "hh/koszul.hpp"
#include "hh/parse.hpp"
#include "hh/quotient.hpp"
#include "hh/weights.hpp"
#include "oracles.hpp"

using namespace hh;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void report(int n, bool ok, const std::string& detail) {
    std::printf("criterion %d: %s - %s\n", n, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
}

const CatalogEntry& entry_by_id(const std::string& id) {
    for (const CatalogEntry& e : catalog())
        if (e.id == id) return e;
    throw Error("no catalog entry " + id);
}

// Sum of the H^p slice dimensions over the label window (hi-width, hi].
long band_sum(const DegreeResult& dr, long hi, long width) {
    long s = 0;
    for (const SliceSummary& sl : dr.slices)
        if (sl.w > hi - width && sl.w <= hi) s += static_cast<long>(sl.h);
    return s;
}

}  // namespace

TEST_CASE("criterion-1") {
    // One-variable fat points z1^k, k = 2..6: the pattern expects every
    // H^p total, p = 0..5, to equal k-1.
    auto t0 = Clock::now();
    Vars v = Vars::z(1);
    bool upper_ok = true;   // p >= 1
    bool degree0_ok = true; // p = 0
    bool degree0_is_k = true;
    for (int k = 2; k <= 6; ++k) {
        Polynomial f = parse_polynomial("z1^" + std::to_string(k), v);
        CohomologyReport rep = KoszulComplex(f, 5).cohomology();
        for (int p = 1; p <= 5; ++p)
            upper_ok = upper_ok && rep.degrees[p].finite && rep.degrees[p].total == k - 1;
        degree0_ok = degree0_ok && rep.degrees[0].total == k - 1;
        degree0_is_k = degree0_is_k && rep.degrees[0].finite && rep.degrees[0].total == k;
    }
    double elapsed = ms_since(t0);
    bool fast = elapsed < 1000.0;
    bool ok = upper_ok && degree0_ok && fast;
    report(1, ok,
           ok ? "H^p = k-1 for p = 0..5, k = 2..6 (" + std::to_string(elapsed) + " ms)"
              : "degree 0 computes the whole algebra k[z1]/<z1^k> of dimension k, not k-1; "
                "the k-1 pattern holds exactly for p = 1..5 (k = 2..6, " +
                    std::to_string(elapsed) + " ms)");
    CHECK(upper_ok);
    CHECK(degree0_is_k);
    CHECK(fast);
    CHECK(ok);
}

TEST_CASE("criterion-2") {
    auto t0 = Clock::now();
    std::vector<std::pair<Family, int>> cases;
    for (int k = 1; k <= 8; ++k) cases.push_back({Family::A, k});
    for (int k = 4; k <= 8; ++k) cases.push_back({Family::D, k});
    cases.push_back({Family::E6, 0});
    cases.push_back({Family::E7, 0});
    cases.push_back({Family::E8, 0});
    bool ok = true;
    for (auto [fam, k] : cases) {
        Polynomial f = curve_polynomial(fam, k);
        unsigned mu = expected_milnor_curve(fam, k);
        ok = ok && milnor_number(f) == mu;
        CohomologyReport rep = KoszulComplex(f, 5).cohomology();
        for (int p = 2; p <= 5; ++p)
            ok = ok && rep.degrees[p].finite &&
                 rep.degrees[p].total == static_cast<long>(mu);
    }
    double elapsed = ms_since(t0);
    bool fast = elapsed < 10000.0;
    ok = ok && fast;
    report(2, ok,
           "curve table: mu and H^2..H^5 totals match for A1..A8, D4..D8, E6, E7, E8 (" +
               std::to_string(elapsed) + " ms)");
    CHECK(fast);
    CHECK(ok);
}

TEST_CASE("criterion-3") {
    bool ok = true;
    std::size_t listings = 0;
    std::vector<std::string> dummy;
    auto run_family = [&](const std::string& id, int lo, int hi) {
        const CatalogEntry& e = entry_by_id(id);
        for (int k = lo; k <= hi; ++k) {
            for (const Check& c : verify_groebner_listings(e, k)) {
                ++listings;
                ok = ok && c.pass;
            }
        }
    };
    run_family("D-curve", 4, 8);
    run_family("E7-curve", 0, 0);
    run_family("D-surface", 4, 8);
    run_family("E7-surface", 0, 0);
    ok = ok && listings == 24;
    report(3, ok,
           "all " + std::to_string(listings) +
               " printed reduced bases reproduced exactly after monic normalization "
               "(D and E7 families, curve and surface, k = 4..8)");
    CHECK(ok);
}

TEST_CASE("criterion-4") {
    bool a_ok = true, d_recorded_ok = true, d_is_n_plus_2 = true, e_ok = true, sep_ok = true;
    for (int n = 2; n <= 8; ++n) {
        unsigned mu_a = milnor_number(klein_relation(Family::A, n));
        a_ok = a_ok && mu_a == static_cast<unsigned>(n - 1);
        unsigned mu_d = milnor_number(klein_relation(Family::D, n));
        d_recorded_ok = d_recorded_ok && mu_d == static_cast<unsigned>(n + 1);
        d_is_n_plus_2 = d_is_n_plus_2 && mu_d == static_cast<unsigned>(n + 2);
    }
    e_ok = e_ok && milnor_number(klein_relation(Family::E6, 0)) == 6;
    e_ok = e_ok && milnor_number(klein_relation(Family::E7, 0)) == 7;
    e_ok = e_ok && milnor_number(klein_relation(Family::E8, 0)) == 8;

    Vars v3 = Vars::z(3);
    std::vector<std::array<int, 3>> seps = {{2, 3, 4}, {2, 3, 5}, {2, 2, 5}, {3, 3, 3}, {2, 4, 4}};
    for (auto [i, j, k] : seps) {
        Polynomial f = parse_polynomial("z1^" + std::to_string(i) + " + z2^" + std::to_string(j) +
                                            " + z3^" + std::to_string(k),
                                        v3);
        sep_ok = sep_ok && milnor_number(f) == static_cast<unsigned>((i - 1) * (j - 1) * (k - 1));
    }

    bool ok = a_ok && d_recorded_ok && e_ok && sep_ok;
    report(4, ok,
           ok ? "relation-form and separated-form Milnor numbers all match"
              : "D relation forms compute mu = n+2 for n = 2..8 where the recorded table "
                "says n+1 (the section form at subscript n+2 reproduces the computed value); "
                "A rows (n-1), E rows (6/7/8), and separated forms ((i-1)(j-1)(k-1)) verify");
    CHECK(a_ok);
    CHECK(d_is_n_plus_2);
    CHECK(e_ok);
    CHECK(sep_ok);
    CHECK(ok);
}

TEST_CASE("criterion-5") {
    bool ok = true;
    for (int n = 1; n <= 6; ++n) {
        ok = ok && verify_invariant_relation(Family::A, n).pass;
        ok = ok && verify_invariant_relation(Family::D, n).pass;
    }
    ok = ok && verify_invariant_relation(Family::E6, 0).pass;
    ok = ok && verify_invariant_relation(Family::E7, 0).pass;
    auto t0 = Clock::now();
    ok = ok && verify_invariant_relation(Family::E8, 0).pass;
    double e8_ms = ms_since(t0);
    bool fast = e8_ms < 10000.0;
    ok = ok && fast;
    report(5, ok,
           "f1(e1,e2,e3) expands to the zero polynomial for all five groups "
           "(A and D swept n = 1..6; the degree-60 E8 expansion took " +
               std::to_string(e8_ms) + " ms)");
    CHECK(fast);
    CHECK(ok);
}

TEST_CASE("criterion-6") {
    std::vector<std::pair<std::string, int>> cases = {
        {"A-surface", 4}, {"A-surface", 5}, {"A-surface", 6},
        {"D-surface", 4}, {"D-surface", 5}, {"D-surface", 6},
        {"E6-surface", 0}, {"E7-surface", 0}, {"E8-surface", 0},
    };
    bool checks_ok = true;
    bool growth_ok = true;
    for (const auto& [id, k] : cases) {
        const CatalogEntry& e = entry_by_id(id);
        std::vector<std::string> notes;
        for (const Check& c : verify_cohomology(e, k, 5, -1, notes))
            checks_ok = checks_ok && c.pass;

        // The degree-1 slice dimensions must keep growing through the final
        // margin band, not merely be nonzero there.
        Polynomial f = surface_polynomial(e.family, k);
        CohomologyReport rep = KoszulComplex(f, 5).cohomology();
        const DegreeResult& h1 = rep.degrees[1];
        long d = rep.weights.total;
        growth_ok = growth_ok && !h1.finite &&
                    band_sum(h1, h1.w_hi, d) > band_sum(h1, h1.w_hi - d, d);
    }
    bool ok = checks_ok && growth_ok;
    report(6, ok,
           "surface cohomology over 9 cases (A4..A6, D4..D6, E6, E7, E8, automatic bounds): "
           "odd totals = mu from H^3, even totals = mu from H^4, H^0 matches the closed-form "
           "Hilbert series, H^2 slices are the shifted series plus the concentrated Milnor "
           "histogram, and H^1 stays infinite with strictly growing margin-band mass");
    CHECK(checks_ok);
    CHECK(growth_ok);
    CHECK(ok);
}

TEST_CASE("criterion-7") {
    bool ok = true;
    int batteries = 0;
    for (int k = 2; k <= 3; ++k)
        for (int l = 2; l <= 4; ++l) {
            VerificationOutcome o = verify_curve_annihilator(k, l);
            ok = ok && o.pass;
            ++batteries;
        }
    for (int k : {4, 5}) {
        VerificationOutcome o = verify_surface_annihilator(2, 3, k);
        ok = ok && o.pass;
        ++batteries;
    }
    report(7, ok,
           std::to_string(batteries) +
               " annihilator batteries (two-sided ideal equality, span support, codimension) "
               "for separated curves {2,3}x{2,3,4} and separated surfaces (2,3,4), (2,3,5)");
    CHECK(ok);
}

TEST_CASE("criterion-8") {
    bool ok = true;
    int cases = 0;
    for (const CatalogEntry& e : catalog()) {
        if (!e.surface) continue;
        for (int k = e.param_min; k <= e.param_max; ++k) {
            if (e.family == Family::A && k < 2) continue;
            if (e.family == Family::D && k < 4) continue;
            std::vector<std::string> notes;
            Check c = verify_remark_isomorphism(e, k, notes);
            ok = ok && c.pass;
            ++cases;
        }
    }
    report(8, ok,
           "multiplication by some coordinate embeds the Milnor algebra onto the annihilator "
           "solution space with matching slice dimensions in every one of the " +
               std::to_string(cases) + " surface cases");
    CHECK(cases >= 15);
    CHECK(ok);
}

TEST_CASE("criterion-9") {
    std::mt19937 rng(20260819u);

    // (a) Every computed basis passes the S-polynomial reduction property.
    bool spoly_ok = true;
    int bases = 0;
    for (const CatalogEntry& e : catalog()) {
        for (int k = e.param_min; k <= e.param_max; ++k) {
            if (e.surface && e.family == Family::D && k < 4) continue;
            Polynomial f = e.surface ? surface_polynomial(e.family, k)
                                     : curve_polynomial(e.family, k);
            GroebnerBasis gb =
                buchberger(jacobian_ideal(f), MonomialOrder::lex(f.vars().size()));
            spoly_ok = spoly_ok && verify_groebner(gb);
            ++bases;
        }
    }
    for (int t = 0; t < 20; ++t) {
        Vars v = Vars::z(2 + (t % 2));
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(oracle::random_polynomial(v, rng, 3, 3));
        GroebnerBasis gb = buchberger(Ideal(v, gens), MonomialOrder::lex(v.size()));
        spoly_ok = spoly_ok && verify_groebner(gb);
        ++bases;
    }

    // (b) d compose d vanishes on every materialized slice pair.
    bool dd_ok = true;
    std::vector<Polynomial> complexes = {
        curve_polynomial(Family::A, 3),
        curve_polynomial(Family::D, 5),
        curve_polynomial(Family::E7, 0),
        surface_polynomial(Family::A, 4),
        surface_polynomial(Family::D, 4),
        surface_polynomial(Family::E6, 0),
    };
    std::size_t slice_pairs = 0;
    for (const Polynomial& f : complexes) {
        KoszulComplex kc(f, 4);
        for (int p = 0; p + 1 <= 4; ++p) {
            // The composite at label w needs degree p+2 data, so stay within
            // the label range both differentials can materialize.
            const long hi = std::min(kc.label_cap(p), kc.label_cap(p + 1));
            for (long w = kc.label_min(p); w <= hi; ++w) {
                dd_ok = dd_ok && (kc.slice_matrix(p + 1, w) * kc.slice_matrix(p, w)).is_zero();
                ++slice_pairs;
            }
        }
    }

    // (c) Division reconstructs its input and leaves a reduced remainder.
    bool division_ok = true;
    for (int t = 0; t < 40; ++t) {
        Vars v = Vars::z(2);
        MonomialOrder ord = MonomialOrder::lex(2);
        std::vector<Polynomial> divisors;
        int nd = 1 + (t % 3);
        for (int i = 0; i < nd; ++i) divisors.push_back(oracle::random_polynomial(v, rng, 3, 3));
        Polynomial f = oracle::random_polynomial(v, rng, 4, 5);
        DivisionResult r = normal_form(f, divisors, ord);
        Polynomial recon = r.remainder;
        for (std::size_t i = 0; i < divisors.size(); ++i)
            recon = recon + r.quotients[i] * divisors[i];
        division_ok = division_ok && recon == f;
        for (const Term& term : r.remainder.terms())
            for (const Polynomial& dv : divisors)
                division_ok = division_ok && !dv.leading_term(ord).mono.divides(term.mono);
    }

    // (d) Quotient dimensions do not depend on the monomial order.
    bool order_ok = true;
    for (const CatalogEntry& e : catalog()) {
        for (int k = e.param_min; k <= e.param_max; ++k) {
            if (e.surface && e.family == Family::D && k < 4) continue;
            Polynomial f = e.surface ? surface_polynomial(e.family, k)
                                     : curve_polynomial(e.family, k);
            WeightVector wv = detect_weights(f);
            Ideal j = jacobian_ideal(f);
            std::size_t lex_dim =
                standard_monomials(buchberger(j, MonomialOrder::lex(f.vars().size()))).dimension();
            std::size_t wlex_dim =
                standard_monomials(buchberger(j, MonomialOrder::weighted_lex(wv.weights)))
                    .dimension();
            order_ok = order_ok && lex_dim == wlex_dim;
        }
    }

    // (e) Brute-force membership oracle agreement on 100 random small ideals.
    bool oracle_ok = true;
    int members_seen = 0;
    Vars v2 = Vars::z(2);
    MonomialOrder lex2 = MonomialOrder::lex(2);
    for (int t = 0; t < 100; ++t) {
        std::vector<Polynomial> gens;
        int ng = 2 + (t % 2);
        for (int i = 0; i < ng; ++i) gens.push_back(oracle::random_polynomial(v2, rng, 3, 3));
        GroebnerBasis gb = buchberger(Ideal(v2, gens), lex2);

        // A combination with known certificate of multiplier degree <= 2.
        Polynomial combo = Polynomial::zero(v2);
        for (const Polynomial& g : gens)
            combo = combo + oracle::random_polynomial(v2, rng, 2, 2) * g;
        if (!combo.is_zero()) {
            oracle_ok = oracle_ok && ideal_membership(combo, gb);
            oracle_ok = oracle_ok && oracle::brute_membership(combo, gens, 6);
        }

        Polynomial probe = oracle::random_polynomial(v2, rng, 3, 3);
        if (ideal_membership(probe, gb)) {
            ++members_seen;
            bool found = false;
            for (int cap : {4, 6, 8, 10, 12})
                if (oracle::brute_membership(probe, gens, cap)) {
                    found = true;
                    break;
                }
            oracle_ok = oracle_ok && found;
        } else {
            oracle_ok = oracle_ok && !oracle::brute_membership(probe, gens, 6);
        }
    }

    bool ok = spoly_ok && dd_ok && division_ok && order_ok && oracle_ok;
    report(9, ok,
           "property suites: S-polynomial reduction on " + std::to_string(bases) +
               " bases, d after d vanishing on " + std::to_string(slice_pairs) +
               " slice pairs, 40 division reconstructions, order-independent quotient "
               "dimensions across the catalog, and 100-ideal membership oracle agreement (" +
               std::to_string(members_seen) + " membership hits)");
    CHECK(spoly_ok);
    CHECK(dd_ok);
    CHECK(division_ok);
    CHECK(order_ok);
    CHECK(oracle_ok);
    CHECK(ok);
}
