#include <doctest.h>

#include <random>

#include "hh/error.hpp"
#include "hh/matrix.hpp"
#include "hh/parse.hpp"
#include "hh/polynomial.hpp"
#include "hh/weights.hpp"
#include "oracles.hpp"

using namespace hh;

TEST_CASE("rational arithmetic and normalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
    CHECK(Rational(5, 3).inverse() == Rational(3, 5));
    CHECK(Rational(-7).abs() == Rational(7));
    CHECK(Rational(0).is_zero());
    CHECK(Rational(3, 3).is_one());
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK(Rational(7, 2).to_string() == "7/2");
    CHECK(Rational(-4, 2).to_string() == "-2");
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("monomial operations") {
    Monomial a{2, 1};
    Monomial b{1, 3};
    CHECK(a.degree() == 3);
    CHECK((a * b) == Monomial{3, 4});
    CHECK(Monomial::lcm(a, b) == Monomial{2, 3});
    CHECK_FALSE(a.divides(b));
    CHECK(Monomial{1, 1}.divides(a));
    CHECK((a / Monomial{1, 1}) == Monomial{1, 0});
    CHECK_THROWS(a / b);  // negative exponent
    CHECK(Monomial::coprime(Monomial{2, 0}, Monomial{0, 3}));
    CHECK_FALSE(Monomial::coprime(a, b));
}

TEST_CASE("polynomial arithmetic") {
    Vars v = Vars::z(2);
    Polynomial z1 = Polynomial::variable(v, 0);
    Polynomial z2 = Polynomial::variable(v, 1);
    Polynomial f = z1 * z1 - Rational(2) * z2 + Polynomial::constant(v, Rational(1, 2));
    CHECK(f.num_terms() == 3);
    CHECK(f.degree() == 2);
    CHECK((f - f).is_zero());
    CHECK((z1 + z2).pow(2) == z1 * z1 + Rational(2) * z1 * z2 + z2 * z2);
    CHECK(f.derivative(0) == Rational(2) * z1);
    CHECK(f.derivative(1) == Polynomial::constant(v, Rational(-2)));
    CHECK(f.to_string() == "z1^2 - 2*z2 + 1/2");
}

TEST_CASE("substitution and composition") {
    Vars v = Vars::z(2);
    Polynomial z1 = Polynomial::variable(v, 0);
    Polynomial z2 = Polynomial::variable(v, 1);
    Polynomial f = z1 * z1 + z2;
    CHECK(f.substitute(1, z1 * z1) == Rational(2) * z1.pow(2));

    // Euler-style identity under composition into another ambient.
    Vars xy = Vars::xy();
    Polynomial x = Polynomial::variable(xy, 0);
    Polynomial y = Polynomial::variable(xy, 1);
    Polynomial g = f.compose({x * y, x + y});
    CHECK(g == x.pow(2) * y.pow(2) + x + y);
}

TEST_CASE("parser accepts the wire grammar") {
    Vars v = Vars::z(2);
    CHECK(parse_polynomial("z1^2*z2 - 1/3*z2^4 + 5", v).to_string() ==
          "z1^2*z2 - 1/3*z2^4 + 5");
    CHECK(parse_polynomial("2z1", v) == Rational(2) * Polynomial::variable(v, 0));
    CHECK(parse_polynomial("(z1+z2)^2", v) ==
          parse_polynomial("z1^2 + 2*z1*z2 + z2^2", v));
    CHECK(parse_polynomial("-z1 - -1", v).to_string() == "-z1 + 1");
    CHECK(parse_polynomial("3/2 z1 z2", v).to_string() == "3/2*z1*z2");
    CHECK(parse_polynomial("z1*(z2+1)", v) ==
          parse_polynomial("z1*z2 + z1", v));
}

TEST_CASE("parser rejects malformed input") {
    Vars v = Vars::z(2);
    CHECK_THROWS_AS(parse_polynomial("z3", v), ParseError);     // unknown variable
    CHECK_THROWS_AS(parse_polynomial("z1^", v), ParseError);    // missing exponent
    CHECK_THROWS_AS(parse_polynomial("z1 +", v), ParseError);   // dangling operator
    CHECK_THROWS_AS(parse_polynomial("(z1", v), ParseError);    // unbalanced paren
    CHECK_THROWS_AS(parse_polynomial("1/0", v), ParseError);    // zero denominator
    CHECK_THROWS_AS(parse_polynomial("z1 z2 )", v), ParseError);
    CHECK_THROWS_AS(parse_polynomial("z1^600", v), ParseError);  // exponent cap
}

TEST_CASE("printing round-trips through the parser") {
    Vars v = Vars::z(2);
    std::mt19937 rng(20240817);
    for (int i = 0; i < 50; ++i) {
        Polynomial p = oracle::random_polynomial(v, rng, 4, 6);
        CHECK(parse_polynomial(p.to_string(), v) == p);
    }
}

TEST_CASE("weight detection on quasi-homogeneous polynomials") {
    Vars v2 = Vars::z(2);
    WeightVector w = detect_weights(parse_polynomial("z1^2*z2 + z2^3", v2));
    CHECK(w.weights == std::vector<int>{1, 1});
    CHECK(w.total == 3);

    w = detect_weights(parse_polynomial("z1^3 + z1*z2^3", v2));
    CHECK(w.weights == std::vector<int>{3, 2});
    CHECK(w.total == 9);

    Vars v3 = Vars::z(3);
    w = detect_weights(parse_polynomial("z1^2 + z2^3 + z3^5", v3));
    CHECK(w.weights == std::vector<int>{15, 10, 6});
    CHECK(w.total == 30);

    CHECK_THROWS_AS(detect_weights(parse_polynomial("z1^3 + z1*z2^3 + z2^2", v2)),
                    NotQuasiHomogeneous);
    CHECK_THROWS_AS(detect_weights(Polynomial::zero(v2)), NotQuasiHomogeneous);

    long wt = 0;
    WeightVector bad{{1, 2}, 0};
    CHECK(parse_polynomial("z1^2*z2 + z2^3", v2).is_weight_homogeneous(bad, &wt) == false);
    WeightVector good{{1, 1}, 0};
    CHECK(parse_polynomial("z1^2*z2 + z2^3", v2).is_weight_homogeneous(good, &wt));
    CHECK(wt == 3);
}

TEST_CASE("ambient mismatch is caught") {
    Vars a = Vars::z(2);
    Vars b = Vars::xy();
    Polynomial p = Polynomial::variable(a, 0);
    Polynomial q = Polynomial::variable(b, 0);
    CHECK_THROWS_AS(p + q, AmbientMismatch);
}

TEST_CASE("exact rank agrees with naive Gaussian elimination") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    for (int trial = 0; trial < 60; ++trial) {
        QMatrix m(dim(rng), dim(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = Rational(num(rng), den(rng));
        CHECK(exact_rank(m) == oracle::naive_rank(m));
        CHECK(kernel_dimension(m) == m.cols() - oracle::naive_rank(m));
    }
}

TEST_CASE("rank handles degenerate shapes") {
    CHECK(exact_rank(QMatrix(0, 0)) == 0);
    CHECK(exact_rank(QMatrix(3, 0)) == 0);
    CHECK(exact_rank(QMatrix(0, 4)) == 0);
    QMatrix z(2, 3);
    CHECK(exact_rank(z) == 0);
    CHECK(kernel_dimension(z) == 3);
}
