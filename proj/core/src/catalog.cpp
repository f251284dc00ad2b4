#include "hh/catalog.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hh/error.hpp"
#include "hh/weights.hpp"

namespace hh {

namespace {

Polynomial zv(const Vars& v, std::size_t i, int e) { return Polynomial::variable(v, i, e); }

std::string mono_str(const Vars& v, const Monomial& m) {
    return Polynomial::from_term(v, m, Rational(1)).to_string();
}

std::string join_monos(const Vars& v, const std::vector<Monomial>& ms) {
    std::string s;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i) s += ", ";
        s += mono_str(v, ms[i]);
    }
    return s.empty() ? "(empty)" : s;
}

std::string join_polys(const std::vector<Polynomial>& ps) {
    std::string s;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) s += "; ";
        s += ps[i].to_string();
    }
    return s;
}

Check int_check(std::string name, long expected, long computed) {
    return Check{std::move(name), std::to_string(expected), std::to_string(computed),
                 expected == computed};
}

int family_mu(Family fam, int k) {
    switch (fam) {
        case Family::A:
        case Family::D: return k;
        case Family::E6: return 6;
        case Family::E7: return 7;
        case Family::E8: return 8;
    }
    throw Error("unknown family");
}

}  // namespace

void VerificationOutcome::add(Check c) {
    pass = pass && c.pass;
    checks.push_back(std::move(c));
}

void VerificationOutcome::note(std::string text) { notes.push_back(std::move(text)); }

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"A-curve", Family::A, false, 1, 8},    {"D-curve", Family::D, false, 4, 8},
        {"E6-curve", Family::E6, false, 0, 0},  {"E7-curve", Family::E7, false, 0, 0},
        {"E8-curve", Family::E8, false, 0, 0},  {"A-surface", Family::A, true, 1, 8},
        {"D-surface", Family::D, true, 1, 8},   {"E6-surface", Family::E6, true, 0, 0},
        {"E7-surface", Family::E7, true, 0, 0}, {"E8-surface", Family::E8, true, 0, 0},
    };
    return entries;
}

Polynomial curve_polynomial(Family fam, int k) {
    Vars v = Vars::z(2);
    switch (fam) {
        case Family::A:
            if (k < 1) throw Error("A-curve needs subscript >= 1");
            return zv(v, 0, k + 1) + zv(v, 1, 2);
        case Family::D:
            if (k < 3) throw Error("D-curve needs subscript >= 3");
            return zv(v, 0, 2) * zv(v, 1, 1) + zv(v, 1, k - 1);
        case Family::E6: return zv(v, 0, 3) + zv(v, 1, 4);
        case Family::E7: return zv(v, 0, 3) + zv(v, 0, 1) * zv(v, 1, 3);
        case Family::E8: return zv(v, 0, 3) + zv(v, 1, 5);
    }
    throw Error("unknown family");
}

Polynomial surface_polynomial(Family fam, int k) {
    Vars v = Vars::z(3);
    switch (fam) {
        case Family::A:
            if (k < 1) throw Error("A-surface needs subscript >= 1");
            return zv(v, 0, 2) + zv(v, 1, 2) + zv(v, 2, k + 1);
        case Family::D:
            if (k < 3) throw Error("D-surface section form needs subscript >= 3");
            return zv(v, 0, 2) + zv(v, 1, 2) * zv(v, 2, 1) + zv(v, 2, k - 1);
        case Family::E6: return zv(v, 0, 2) + zv(v, 1, 3) + zv(v, 2, 4);
        case Family::E7: return zv(v, 0, 2) + zv(v, 1, 3) + zv(v, 1, 1) * zv(v, 2, 3);
        case Family::E8: return zv(v, 0, 2) + zv(v, 1, 3) + zv(v, 2, 5);
    }
    throw Error("unknown family");
}

Polynomial klein_relation(Family fam, int n) {
    Vars v = Vars::z(3);
    switch (fam) {
        case Family::A:
            if (n < 1) throw Error("A relation needs subscript >= 1");
            return Rational(-n) * (zv(v, 0, 1) * zv(v, 1, 1)) + Rational(n) * zv(v, 2, n);
        case Family::D: {
            if (n < 1) throw Error("D relation needs subscript >= 1");
            const long s = (n % 2 == 0) ? -1 : 1;  // (-1)^(n+1)
            const Rational lam(2L * n * s);
            return lam * (Rational(4) * zv(v, 0, n + 1) + Rational(s) * zv(v, 0, 1) * zv(v, 1, 2) +
                          Rational(-s) * zv(v, 2, 2));
        }
        case Family::E6:
            return Rational(4) * (zv(v, 2, 2) - zv(v, 1, 3) + Rational(108) * zv(v, 0, 4));
        case Family::E7:
            return Rational(8) * (Rational(3) * zv(v, 2, 2) - Rational(12) * zv(v, 1, 3) +
                                  zv(v, 1, 1) * zv(v, 0, 3));
        case Family::E8:
            return Rational(10) *
                   (Rational(1728) * zv(v, 0, 5) + zv(v, 1, 3) - zv(v, 2, 2));
    }
    throw Error("unknown family");
}

std::array<Polynomial, 3> klein_invariants(Family fam, int n) {
    Vars v = Vars::xy();
    auto x = [&](int e) { return zv(v, 0, e); };
    auto y = [&](int e) { return zv(v, 1, e); };
    switch (fam) {
        case Family::A:
            if (n < 1) throw Error("A invariants need subscript >= 1");
            return {x(n), y(n), x(1) * y(1)};
        case Family::D: {
            if (n < 1) throw Error("D invariants need subscript >= 1");
            const Rational s((n % 2 == 0) ? -1L : 1L);  // (-1)^(n+1)
            return {x(2) * y(2), x(2 * n) - s * y(2 * n),
                    x(2 * n + 1) * y(1) + s * x(1) * y(2 * n + 1)};
        }
        case Family::E6:
            return {x(5) * y(1) - x(1) * y(5),
                    x(8) + Rational(14) * x(4) * y(4) + y(8),
                    -x(12) + Rational(33) * x(8) * y(4) + Rational(33) * x(4) * y(8) - y(12)};
        case Family::E7:
            return {x(8) + Rational(14) * x(4) * y(4) + y(8),
                    Rational(-3) * x(10) * y(2) + Rational(6) * x(6) * y(6) -
                        Rational(3) * x(2) * y(10),
                    -x(17) * y(1) + Rational(34) * x(13) * y(5) - Rational(34) * x(5) * y(13) +
                        x(1) * y(17)};
        case Family::E8:
            return {x(11) * y(1) + Rational(11) * x(6) * y(6) - x(1) * y(11),
                    x(20) - Rational(228) * x(15) * y(5) + Rational(494) * x(10) * y(10) +
                        Rational(228) * x(5) * y(15) + y(20),
                    x(30) + Rational(522) * x(25) * y(5) - Rational(10005) * x(20) * y(10) -
                        Rational(10005) * x(10) * y(20) - Rational(522) * x(5) * y(25) + y(30)};
    }
    throw Error("unknown family");
}

unsigned expected_milnor_curve(Family fam, int k) { return static_cast<unsigned>(family_mu(fam, k)); }

unsigned expected_milnor_surface(Family fam, int k) {
    return static_cast<unsigned>(family_mu(fam, k));
}

unsigned recorded_milnor_relation(Family fam, int n) {
    switch (fam) {
        case Family::A: return static_cast<unsigned>(n - 1);
        case Family::D: return static_cast<unsigned>(n + 1);
        default: return static_cast<unsigned>(family_mu(fam, 0));
    }
}

Check verify_invariant_relation(Family fam, int n) {
    Polynomial f1 = klein_relation(fam, n);
    std::array<Polynomial, 3> e = klein_invariants(fam, n);
    Polynomial r = f1.compose({e[0], e[1], e[2]});
    Check c;
    c.name = "invariant-relation";
    c.expected = "0";
    c.computed = r.is_zero() ? "0" : r.to_string();
    c.pass = r.is_zero();
    return c;
}

std::vector<Check> verify_milnor(const CatalogEntry& entry, int n,
                                 std::vector<std::string>& notes) {
    std::vector<Check> out;
    if (!entry.surface) {
        unsigned mu = milnor_number(curve_polynomial(entry.family, n));
        out.push_back(int_check("milnor", expected_milnor_curve(entry.family, n), mu));
        return out;
    }

    // Relation form against the recorded table value.
    Polynomial rel = klein_relation(entry.family, n);
    QuotientBasis relq = milnor_algebra(rel);
    unsigned mu_rel = static_cast<unsigned>(relq.dimension());
    out.push_back(
        int_check("milnor-relation-form", recorded_milnor_relation(entry.family, n), mu_rel));

    if (entry.family == Family::A && n >= 3) {
        notes.push_back("relation-form basis computed as {" +
                        join_monos(rel.vars(), relq.monomials) +
                        "}; a recorded listing begins with 1, z1, ... where the computed "
                        "standard basis starts 1, z3, ...; the z1 entry is flagged as a "
                        "suspected transcription slip (the dimension agrees)");
    }
    if (entry.family == Family::D) {
        unsigned mu_section =
            milnor_number(surface_polynomial(Family::D, n + 2));
        out.push_back(int_check("d-form-correspondence", mu_section, mu_rel));
        notes.push_back(
            "the recorded relation-form Milnor number n+1 = " +
            std::to_string(recorded_milnor_relation(Family::D, n)) +
            " disagrees with the exact computation n+2 = " + std::to_string(mu_rel) +
            "; the section form at subscript n+2 yields the same computed value "
            "(d-form-correspondence), so the computation stands and the recorded "
            "expectation is reported failing rather than adjusted");
    }

    // Computation form, where defined for this parameter.
    bool has_form = true;
    if (entry.family == Family::A && n < 1) has_form = false;
    if (entry.family == Family::D && n < 4) has_form = false;
    if (has_form) {
        Polynomial f = surface_polynomial(entry.family, n);
        QuotientBasis q = milnor_algebra(f);
        out.push_back(int_check("milnor-computation-form", expected_milnor_surface(entry.family, n),
                                static_cast<unsigned>(q.dimension())));
        if (entry.family == Family::E7) {
            notes.push_back("section-form standard basis computed as {" +
                            join_monos(f.vars(), q.monomials) +
                            "}; a recorded listing has z2^2 in place of z2*z3, but z2^2 "
                            "reduces to -1/3*z3^3 here and is not standard; the dimension 7 "
                            "agrees; flagged, not corrected");
        }
    }
    return out;
}

std::vector<Check> verify_groebner_listings(const CatalogEntry& entry, int k) {
    std::vector<Check> out;
    const std::size_t nv = entry.surface ? 3 : 2;
    Vars v = Vars::z(nv);
    MonomialOrder ord = MonomialOrder::lex(nv);
    auto run = [&](const std::string& name, std::vector<Polynomial> gens,
                   std::vector<Polynomial> expected) {
        GroebnerBasis gb = buchberger(Ideal(v, std::move(gens)), ord);
        Check c;
        c.name = name;
        c.expected = join_polys(expected);
        c.computed = join_polys(gb.elements);
        c.pass = gb.elements == expected;
        out.push_back(std::move(c));
    };

    if (!entry.surface && entry.family == Family::D) {
        Polynomial f = curve_polynomial(Family::D, k);
        Polynomial head = zv(v, 0, 2) + Rational(k - 1) * zv(v, 1, k - 2);
        run("gb-f-d2", {f, f.derivative(1)}, {zv(v, 1, k - 1), head});
        run("gb-jacobian", {f.derivative(0), f.derivative(1)},
            {zv(v, 1, k - 1), zv(v, 0, 1) * zv(v, 1, 1), head});
    } else if (!entry.surface && entry.family == Family::E7) {
        Polynomial f = curve_polynomial(Family::E7, 0);
        Polynomial head = zv(v, 0, 2) + Rational(1, 3) * zv(v, 1, 3);
        run("gb-f-d1", {f, f.derivative(0)}, {zv(v, 1, 6), zv(v, 0, 1) * zv(v, 1, 3), head});
        run("gb-jacobian", {f.derivative(0), f.derivative(1)},
            {zv(v, 1, 5), zv(v, 0, 1) * zv(v, 1, 2), head});
    } else if (entry.surface && entry.family == Family::D) {
        Polynomial f = surface_polynomial(Family::D, k);
        Polynomial head = zv(v, 1, 2) + Rational(k - 1) * zv(v, 2, k - 2);
        run("gb-jacobian", {f.derivative(0), f.derivative(1), f.derivative(2)},
            {zv(v, 2, k - 1), zv(v, 1, 1) * zv(v, 2, 1), head, zv(v, 0, 1)});
        run("gb-f-d1-d3", {f, f.derivative(0), f.derivative(2)},
            {zv(v, 2, k - 1), head, zv(v, 0, 1)});
    } else if (entry.surface && entry.family == Family::E7) {
        Polynomial f = surface_polynomial(Family::E7, 0);
        Polynomial head = zv(v, 1, 2) + Rational(1, 3) * zv(v, 2, 3);
        run("gb-jacobian", {f.derivative(0), f.derivative(1), f.derivative(2)},
            {zv(v, 2, 5), zv(v, 1, 1) * zv(v, 2, 2), head, zv(v, 0, 1)});
        run("gb-f-d1-d2", {f, f.derivative(0), f.derivative(1)},
            {zv(v, 2, 6), zv(v, 1, 1) * zv(v, 2, 3), head, zv(v, 0, 1)});
    }
    return out;
}

namespace {

// h values per label for one degree, absent slices meaning zero.
std::map<long, std::size_t> slice_h(const DegreeResult& dr) {
    std::map<long, std::size_t> m;
    for (const SliceSummary& s : dr.slices) m[s.w] = s.h;
    return m;
}

std::string range_vector(long lo, long hi, const std::function<long(long)>& value) {
    std::string s = "w in [" + std::to_string(lo) + ".." + std::to_string(hi) + "]: ";
    for (long w = lo; w <= hi; ++w) {
        if (w > lo) s += ",";
        s += std::to_string(value(w));
    }
    return s;
}

}  // namespace

std::vector<Check> verify_cohomology(const CatalogEntry& entry, int k, int p_max,
                                     long weight_bound, std::vector<std::string>& notes) {
    std::vector<Check> out;
    Polynomial f = entry.surface ? surface_polynomial(entry.family, k)
                                 : curve_polynomial(entry.family, k);
    const long mu = entry.surface ? expected_milnor_surface(entry.family, k)
                                  : expected_milnor_curve(entry.family, k);
    const int first_finite = entry.surface ? 3 : 2;

    std::vector<DegreeExpectation> exps;
    for (int p = 0; p <= p_max; ++p)
        exps.push_back({p, p >= first_finite, mu});

    KoszulComplex kc(f, p_max, weight_bound);
    CohomologyReport rep = kc.cohomology(entry.id, exps);
    const WeightVector& wv = kc.weights();
    const long d = wv.total;

    for (const DegreeResult& dr : rep.degrees) {
        const std::string tag = "H" + std::to_string(dr.p);
        if (dr.p >= first_finite) {
            Check c = int_check(tag + "-total", mu, dr.total);
            c.pass = c.pass && dr.finite;
            if (!dr.finite) c.computed += " (not finite)";
            out.push_back(std::move(c));
        } else {
            out.push_back(
                Check{tag + "-infinite", "infinite", dr.finite ? "finite" : "infinite",
                      !dr.finite});
        }
    }

    // H^0 is all of A: its slice dimensions are the closed-form series.
    {
        const DegreeResult& d0 = rep.degrees.at(0);
        std::vector<unsigned> series = quotient_series_coefficients(wv, d, d0.w_hi);
        auto h = slice_h(d0);
        bool ok = d0.w_lo == 0;
        for (long w = 0; ok && w <= d0.w_hi; ++w) {
            std::size_t got = h.count(w) ? h[w] : 0;
            ok = got == series[static_cast<std::size_t>(w)];
        }
        Check c;
        c.name = "H0-hilbert";
        c.expected = range_vector(0, d0.w_hi, [&](long w) {
            return static_cast<long>(series[static_cast<std::size_t>(w)]);
        });
        c.computed = range_vector(d0.w_lo, d0.w_hi, [&](long w) {
            return static_cast<long>(h.count(w) ? h[w] : 0);
        });
        c.pass = ok;
        out.push_back(std::move(c));
    }

    if (entry.surface) {
        const long W = std::accumulate(wv.weights.begin(), wv.weights.end(), 0L);

        // H^1 carries the whole infinite syzygy part: its scanned total must
        // already exceed mu and keep growing through the margin band.
        {
            const DegreeResult& d1 = rep.degrees.at(1);
            Check c;
            c.name = "H1-total-exceeds-mu";
            c.expected = "> " + std::to_string(mu);
            c.computed = std::to_string(d1.total);
            c.pass = d1.total > mu && !d1.finite;
            out.push_back(std::move(c));
        }

        // H^2 slice law: the finite part is the Milnor histogram placed at
        // labels w with w + d a Milnor weight, the infinite part is A's
        // Hilbert function shifted by W - d (the label of h*grad(f) classes).
        {
            const DegreeResult& d2 = rep.degrees.at(2);
            HilbertFunction hf =
                hilbert_function(kc.algebra().gb, wv, kc.weight_bound() + std::max(W - d, 0L));
            std::map<long, unsigned> mmu =
                weight_histogram(milnor_algebra(f).monomials, wv);
            auto h = slice_h(d2);
            auto expected_at = [&](long w) -> long {
                long val = 0;
                long ha = w + W - d;
                if (ha >= 0 && ha < static_cast<long>(hf.values.size()))
                    val += hf.values[static_cast<std::size_t>(ha)];
                auto it = mmu.find(w + d);
                if (it != mmu.end()) val += it->second;
                return val;
            };
            bool ok = true;
            for (long w = d2.w_lo; w <= d2.w_hi && ok; ++w)
                ok = expected_at(w) == static_cast<long>(h.count(w) ? h[w] : 0);
            Check c;
            c.name = "H2-slices";
            c.expected = range_vector(d2.w_lo, d2.w_hi, expected_at);
            c.computed = range_vector(d2.w_lo, d2.w_hi, [&](long w) {
                return static_cast<long>(h.count(w) ? h[w] : 0);
            });
            c.pass = ok;
            out.push_back(std::move(c));
        }

        if (entry.family == Family::E7)
            notes.push_back(
                "H2 finite summand encoded as 7: one recorded expectation leaves it as a "
                "symbolic parameter where context fixes the Milnor number");
    }
    return out;
}

Check verify_remark_isomorphism(const CatalogEntry& entry, int k,
                                std::vector<std::string>& notes) {
    Polynomial f = surface_polynomial(entry.family, k);
    const Vars& v = f.vars();
    WeightVector wv = detect_weights(f);
    const long d = wv.total;
    QuotientBasis milnor = milnor_algebra(f);
    const std::size_t mu = milnor.dimension();
    std::map<long, unsigned> hist = weight_histogram(milnor.monomials, wv);

    std::string summary;
    std::vector<int> successes;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t j = (i + 1) % 3, l = (i + 2) % 3;
        std::string why;
        bool ok = [&]() {
            GroebnerBasis gb = buchberger(
                Ideal(v, {f, f.derivative(j), f.derivative(l)}), MonomialOrder::lex(3));
            if (!quotient_is_finite(gb)) {
                why = "infinite quotient";
                return false;
            }
            QuotientBasis qfin = standard_monomials(gb);
            long wmax = 0;
            for (const Monomial& m : qfin.monomials) wmax = std::max(wmax, wv.weight(m));
            QuotientBasis qb = standard_monomials(gb, wv, wmax);
            if (qb.dimension() != qfin.dimension()) {
                why = "weight enumeration mismatch";
                return false;
            }
            Polynomial gi = f.derivative(i);
            Polynomial zi = Polynomial::variable(v, i);

            // Images of the Milnor basis under multiplication by z_i must be
            // independent solutions of g * gi = 0 in the quotient.
            QMatrix img(qb.dimension(), mu);
            for (std::size_t c = 0; c < mu; ++c) {
                Polynomial zm = zi * Polynomial::from_term(v, milnor.monomials[c], Rational(1));
                if (!ideal_membership(zm * gi, gb)) {
                    why = "image of " + mono_str(v, milnor.monomials[c]) + " is not a solution";
                    return false;
                }
                DivisionResult nf = normal_form(zm, gb.elements, gb.order);
                for (const Term& t : nf.remainder.terms()) {
                    auto it = std::find(qb.monomials.begin(), qb.monomials.end(), t.mono);
                    if (it == qb.monomials.end()) {
                        why = "normal form outside the quotient basis";
                        return false;
                    }
                    img.at(static_cast<std::size_t>(it - qb.monomials.begin()), c) = t.coeff;
                }
            }
            if (exact_rank(img) != mu) {
                why = "images are linearly dependent";
                return false;
            }

            // Per weight slice, the solution space must have exactly the
            // dimension of the image: the Milnor histogram shifted by w_i.
            const long wi = wv.weights[i];
            std::size_t kernel_total = 0;
            for (long w = 0; w <= wmax; ++w) {
                auto it = hist.find(w - wi);
                const std::size_t want = it == hist.end() ? 0 : it->second;
                if (qb.slice(w).empty()) {
                    if (want != 0) {
                        why = "empty slice at weight " + std::to_string(w);
                        return false;
                    }
                    continue;
                }
                std::size_t kd = kernel_dimension(multiplication_matrix(gi, qb, w, w + d - wi));
                kernel_total += kd;
                if (kd != want) {
                    why = "solution dimension " + std::to_string(kd) + " at weight " +
                          std::to_string(w) + ", image dimension " + std::to_string(want);
                    return false;
                }
            }
            if (kernel_total != mu) {
                why = "total solution dimension " + std::to_string(kernel_total);
                return false;
            }
            return true;
        }();
        if (!summary.empty()) summary += "; ";
        summary += "i=" + std::to_string(i + 1) + (ok ? ": isomorphism" : ": no (" + why + ")");
        if (ok) successes.push_back(static_cast<int>(i) + 1);
    }

    std::string which;
    for (std::size_t t = 0; t < successes.size(); ++t)
        which += (t ? "," : "") + std::to_string(successes[t]);
    notes.push_back("multiplication isomorphism holds for i in {" + which + "}");

    Check c;
    c.name = "remark-isomorphism";
    c.expected = "some i in {1,2,3} gives a weight-graded isomorphism";
    c.computed = summary;
    c.pass = !successes.empty();
    return c;
}

VerificationOutcome verify_entry(const CatalogEntry& entry, int param, long weight_bound) {
    VerificationOutcome out;
    out.id = entry.id;
    out.param = param;

    const bool fixed = entry.param_min == 0 && entry.param_max == 0;
    if (!entry.surface) {
        for (Check& c : verify_milnor(entry, param, out.notes)) out.add(std::move(c));
        if ((entry.family == Family::D && param >= 4) || entry.family == Family::E7)
            for (Check& c : verify_groebner_listings(entry, param)) out.add(std::move(c));
        for (Check& c : verify_cohomology(entry, param, 5, weight_bound, out.notes))
            out.add(std::move(c));
        return out;
    }

    out.add(verify_invariant_relation(entry.family, param));
    for (Check& c : verify_milnor(entry, param, out.notes)) out.add(std::move(c));
    if ((entry.family == Family::D && param >= 4) || entry.family == Family::E7)
        for (Check& c : verify_groebner_listings(entry, param)) out.add(std::move(c));
    const bool run_cohomology =
        fixed || ((entry.family == Family::A || entry.family == Family::D) && param >= 4 &&
                  param <= 6);
    if (run_cohomology)
        for (Check& c : verify_cohomology(entry, param, 5, weight_bound, out.notes))
            out.add(std::move(c));
    const bool run_remark = fixed || (entry.family == Family::A && param >= 2) ||
                            (entry.family == Family::D && param >= 4);
    if (run_remark) out.add(verify_remark_isomorphism(entry, param, out.notes));
    return out;
}

namespace {

// Shared two-sided annihilator verification. J and g live in v; the claimed
// description is J's generators plus a constant-coefficient span of the
// given monomials; codim is the expected dimension of (J:g)/J.
void annihilator_battery(VerificationOutcome& out, const Vars& v, const Ideal& j,
                         const Polynomial& g, const std::vector<Monomial>& span, long codim) {
    MonomialOrder ord = MonomialOrder::lex(v.size());
    GroebnerBasis gbj = buchberger(j, ord);

    bool all_annihilate = true;
    for (const Monomial& m : span)
        all_annihilate = all_annihilate &&
                         ideal_membership(Polynomial::from_term(v, m, Rational(1)) * g, gbj);
    out.add(Check{"span-annihilates", "every listed monomial times g lies in the ideal",
                  all_annihilate ? "yes" : "no", all_annihilate});

    GroebnerBasis quot = ideal_quotient(j, g, ord);
    std::vector<Polynomial> gens = j.gens;
    for (const Monomial& m : span) gens.push_back(Polynomial::from_term(v, m, Rational(1)));
    GroebnerBasis claimed = buchberger(Ideal(v, std::move(gens)), ord);
    out.add(Check{"ideal-equality", join_polys(claimed.elements), join_polys(quot.elements),
                  claimed.elements == quot.elements});

    bool supported = true;
    for (const Polynomial& e : quot.elements) {
        Polynomial r = normal_form(e, gbj.elements, ord).remainder;
        for (const Term& t : r.terms())
            supported = supported && std::find(span.begin(), span.end(), t.mono) != span.end();
    }
    out.add(Check{"span-support", "ideal-reduced quotient generators fall inside the span",
                  supported ? "yes" : "no", supported});

    const long dim_j = static_cast<long>(standard_monomials(gbj).dimension());
    const long dim_q = static_cast<long>(standard_monomials(quot).dimension());
    out.add(int_check("codimension", codim, dim_j - dim_q));
}

}  // namespace

VerificationOutcome verify_curve_annihilator(int k, int l) {
    VerificationOutcome out;
    out.id = "curve-annihilator";
    out.param = 10 * k + l;
    Vars v = Vars::z(2);
    Polynomial f = zv(v, 0, k) + zv(v, 1, l);
    out.note("f = " + f.to_string() + "; J = <f, df/dz1>; g = df/dz2");
    Ideal j(v, {f, f.derivative(0)});
    std::vector<Monomial> span;
    for (int a = 0; a <= k - 2; ++a)
        for (int b = 1; b <= l - 1; ++b) span.push_back(Monomial{a, b});
    annihilator_battery(out, v, j, f.derivative(1), span, static_cast<long>(k - 1) * (l - 1));
    return out;
}

VerificationOutcome verify_surface_annihilator(int i, int j, int k) {
    VerificationOutcome out;
    out.id = "surface-annihilator";
    out.param = 100 * i + 10 * j + k;
    Vars v = Vars::z(3);
    Polynomial f = zv(v, 0, i) + zv(v, 1, j) + zv(v, 2, k);
    out.note("f = " + f.to_string() + "; J = <f, df/dz1, df/dz2>; g = df/dz3");
    Ideal jd(v, {f, f.derivative(0), f.derivative(1)});
    std::vector<Monomial> span;
    for (int a = 0; a <= i - 2; ++a)
        for (int b = 0; b <= j - 2; ++b)
            for (int c = 1; c <= k - 1; ++c) span.push_back(Monomial{a, b, c});
    annihilator_battery(out, v, jd, f.derivative(2), span,
                        static_cast<long>(i - 1) * (j - 1) * (k - 1));
    return out;
}

std::vector<VerificationOutcome> run_catalog(const CatalogFilter& filter) {
    std::vector<VerificationOutcome> res;
    for (const CatalogEntry& entry : catalog()) {
        if (!filter.family.empty() && filter.family != entry.id) continue;
        for (int p = entry.param_min; p <= entry.param_max; ++p) {
            if (filter.param >= 0 && filter.param != p) continue;
            res.push_back(verify_entry(entry, p, filter.weight_bound));
        }
    }
    if (filter.family.empty() || filter.family == "curve-annihilator")
        for (int k = 2; k <= 3; ++k)
            for (int l = 2; l <= 4; ++l)
                if (filter.param < 0 || filter.param == 10 * k + l)
                    res.push_back(verify_curve_annihilator(k, l));
    if (filter.family.empty() || filter.family == "surface-annihilator")
        for (int k : {4, 5})
            if (filter.param < 0 || filter.param == 230 + k)
                res.push_back(verify_surface_annihilator(2, 3, k));
    std::stable_sort(res.begin(), res.end(),
                     [](const VerificationOutcome& a, const VerificationOutcome& b) {
                         return a.id != b.id ? a.id < b.id : a.param < b.param;
                     });
    return res;
}

std::vector<unsigned> quotient_series_coefficients(const WeightVector& wv, long d, long bound) {
    if (bound < 0) return {};
    std::vector<long> part(static_cast<std::size_t>(bound) + 1, 0);
    part[0] = 1;
    for (int wi : wv.weights)
        for (long w = wi; w <= bound; ++w)
            part[static_cast<std::size_t>(w)] += part[static_cast<std::size_t>(w - wi)];
    std::vector<unsigned> out(part.size());
    for (long w = 0; w <= bound; ++w) {
        long c = part[static_cast<std::size_t>(w)] -
                 (w >= d ? part[static_cast<std::size_t>(w - d)] : 0);
        if (c < 0) throw Error("negative series coefficient");
        out[static_cast<std::size_t>(w)] = static_cast<unsigned>(c);
    }
    return out;
}

std::map<long, unsigned> weight_histogram(const std::vector<Monomial>& ms,
                                          const WeightVector& wv) {
    std::map<long, unsigned> h;
    for (const Monomial& m : ms) ++h[wv.weight(m)];
    return h;
}

}  // namespace hh
