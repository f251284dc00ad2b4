#include <doctest.h>

#include <random>

#include "hh/error.hpp"
#include "hh/groebner.hpp"
#include "hh/parse.hpp"
#include "oracles.hpp"

using namespace hh;

namespace {

Polynomial pp(const std::string& s, const Vars& v) { return parse_polynomial(s, v); }

std::vector<Polynomial> pl(const std::string& s, const Vars& v) {
    return parse_polynomial_list(s, v);
}

}  // namespace

TEST_CASE("division reconstructs the input and leaves a reduced remainder") {
    Vars v = Vars::z(2);
    MonomialOrder ord = MonomialOrder::lex(2);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial p = oracle::random_polynomial(v, rng, 4, 5);
        std::vector<Polynomial> divisors = {oracle::random_polynomial(v, rng, 3, 3),
                                            oracle::random_polynomial(v, rng, 2, 3)};
        DivisionResult r = normal_form(p, divisors, ord);
        Polynomial rebuilt = r.remainder;
        for (std::size_t i = 0; i < divisors.size(); ++i)
            rebuilt += r.quotients[i] * divisors[i];
        CHECK(rebuilt == p);
        for (const Term& t : r.remainder.terms())
            for (const Polynomial& d : divisors)
                CHECK_FALSE(d.leading_term(ord).mono.divides(t.mono));
    }
}

TEST_CASE("buchberger reproduces a known reduced basis") {
    Vars v = Vars::z(2);
    GroebnerBasis gb = buchberger(Ideal(v, pl("z1^2*z2+z2^4; z1^2+4*z2^3", v)),
                                  MonomialOrder::lex(2));
    CHECK(gb.elements == pl("z2^4; z1^2+4*z2^3", v));
    CHECK(verify_groebner(gb));
    CHECK_FALSE(gb.contains_one());
}

TEST_CASE("basis elements are monic, reduced, and sorted ascending by leading term") {
    Vars v = Vars::z(3);
    GroebnerBasis gb = buchberger(
        Ideal(v, pl("z1^2+z2^2*z3+z3^4; 2*z1; z2^2+5*z3^3", v)), MonomialOrder::lex(3));
    for (std::size_t i = 0; i < gb.elements.size(); ++i) {
        CHECK(gb.elements[i].leading_term(gb.order).coeff.is_one());
        for (std::size_t j = 0; j < gb.elements.size(); ++j) {
            if (i == j) continue;
            // No term of element i is divisible by the leading monomial of j.
            for (const Term& t : gb.elements[i].terms())
                CHECK_FALSE(gb.elements[j].leading_term(gb.order).mono.divides(t.mono));
        }
        if (i + 1 < gb.elements.size())
            CHECK(gb.order.less(gb.elements[i].leading_term(gb.order).mono,
                                gb.elements[i + 1].leading_term(gb.order).mono));
    }
}

TEST_CASE("trivial ideal collapses to {1}") {
    Vars v = Vars::z(2);
    GroebnerBasis gb = buchberger(Ideal(v, pl("z1; z1+1", v)), MonomialOrder::lex(2));
    CHECK(gb.contains_one());
    CHECK(gb.elements.size() == 1);
    CHECK(gb.elements[0] == pp("1", v));
}

TEST_CASE("pair strategies agree on the reduced basis") {
    Vars v = Vars::z(2);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        Ideal ideal(v, {oracle::random_polynomial(v, rng, 3, 4),
                        oracle::random_polynomial(v, rng, 3, 4)});
        GroebnerBasis a = buchberger(ideal, MonomialOrder::lex(2), PairStrategy::Normal);
        GroebnerBasis b = buchberger(ideal, MonomialOrder::lex(2), PairStrategy::Fifo);
        CHECK(a.elements == b.elements);
    }
}

TEST_CASE("membership via normal form") {
    Vars v = Vars::z(2);
    GroebnerBasis gb = buchberger(Ideal(v, pl("z1^2; z1*z2", v)), MonomialOrder::lex(2));
    CHECK(ideal_membership(pp("z1^3 + z1^2*z2", v), gb));
    CHECK(ideal_membership(pp("0", v), gb));
    CHECK_FALSE(ideal_membership(pp("z1", v), gb));
    CHECK_FALSE(ideal_membership(pp("z2^2", v), gb));
}

TEST_CASE("membership agrees with the linear-algebra oracle on random ideals") {
    Vars v = Vars::z(2);
    std::mt19937 rng(20240818);
    int members_seen = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Polynomial> gens = {oracle::random_polynomial(v, rng, 3, 4),
                                        oracle::random_polynomial(v, rng, 3, 4)};
        GroebnerBasis gb = buchberger(Ideal(v, gens), MonomialOrder::lex(2));

        // A constructed member with a certificate of degree <= 5.
        Polynomial combo = oracle::random_polynomial(v, rng, 2, 3) * gens[0] +
                           oracle::random_polynomial(v, rng, 2, 3) * gens[1];
        CHECK(ideal_membership(combo, gb));
        CHECK(oracle::brute_membership(combo, gens, 5));

        // A random polynomial, checked in both directions.
        Polynomial probe = oracle::random_polynomial(v, rng, 3, 4);
        const bool member = ideal_membership(probe, gb);
        if (member) {
            ++members_seen;
            bool found = false;
            for (int cap = 4; cap <= 12 && !found; cap += 2)
                found = oracle::brute_membership(probe, gens, cap);
            CHECK(found);
        } else {
            CHECK_FALSE(oracle::brute_membership(probe, gens, 6));
        }
    }
    // The sweep must exercise both outcomes to mean anything.
    CHECK(members_seen > 0);
    CHECK(members_seen < 100);
}

TEST_CASE("s-polynomials of every computed basis reduce to zero") {
    Vars v = Vars::z(2);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        GroebnerBasis gb = buchberger(Ideal(v, {oracle::random_polynomial(v, rng, 3, 4),
                                                oracle::random_polynomial(v, rng, 3, 4),
                                                oracle::random_polynomial(v, rng, 2, 3)}),
                                      MonomialOrder::lex(2));
        CHECK(verify_groebner(gb));
    }
}

TEST_CASE("exact division") {
    Vars v = Vars::z(2);
    MonomialOrder ord = MonomialOrder::lex(2);
    auto q = exact_divide(pp("z1^2*z2 + z1*z2^2", v), pp("z1*z2", v), ord);
    REQUIRE(q.has_value());
    CHECK(*q == pp("z1 + z2", v));
    CHECK_FALSE(exact_divide(pp("z1^2*z2 + 1", v), pp("z1*z2", v), ord).has_value());
}

TEST_CASE("ideal quotient on hand-checked cases") {
    Vars v = Vars::z(2);
    MonomialOrder ord = MonomialOrder::lex(2);

    GroebnerBasis q1 = ideal_quotient(Ideal(v, pl("z1^2; z1*z2", v)), pp("z1", v), ord);
    CHECK(q1.elements == pl("z2; z1", v));

    GroebnerBasis q2 = ideal_quotient(Ideal(v, pl("z1^2; z2^2", v)), pp("z1*z2", v), ord);
    CHECK(q2.elements == pl("z2; z1", v));

    // Quotient by a unit-like divisor returns J itself.
    GroebnerBasis q3 = ideal_quotient(Ideal(v, pl("z1^2; z2^2", v)), pp("1", v), ord);
    CHECK(q3.elements == pl("z2^2; z1^2", v));
}

TEST_CASE("every quotient generator multiplies back into the ideal") {
    Vars v = Vars::z(2);
    MonomialOrder ord = MonomialOrder::lex(2);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Ideal j(v, {oracle::random_polynomial(v, rng, 3, 3),
                    oracle::random_polynomial(v, rng, 3, 3)});
        Polynomial g = oracle::random_polynomial(v, rng, 2, 2);
        if (g.is_zero()) continue;
        GroebnerBasis jb = buchberger(j, ord);
        GroebnerBasis quot = ideal_quotient(j, g, ord);
        for (const Polynomial& h : quot.elements) CHECK(ideal_membership(h * g, jb));
        // J is always contained in (J : g).
        for (const Polynomial& e : jb.elements) CHECK(ideal_membership(e, quot));
    }
}

TEST_CASE("annihilator check distinguishes zero divisors") {
    Vars v = Vars::z(2);
    MonomialOrder ord = MonomialOrder::lex(2);
    // Modulo <z1*z2>, z1 is a zero divisor; modulo <z1^2 + z2>, z1 is not.
    CHECK_FALSE(annihilator_check(Ideal(v, pl("z1*z2", v)), pp("z1", v), ord));
    CHECK(annihilator_check(Ideal(v, pl("z1^2 + z2", v)), pp("z1", v), ord));
}

TEST_CASE("weighted order changes leading terms consistently") {
    Vars v = Vars::z(2);
    // Under lex, z1 leads; under weights (1, 3), z2^2 has weight 6 > 1.
    Polynomial p = pp("z1 + z2^2", v);
    CHECK(p.leading_term(MonomialOrder::lex(2)).mono == Monomial{1, 0});
    CHECK(p.leading_term(MonomialOrder::weighted_lex({1, 3})).mono == Monomial{0, 2});
}
