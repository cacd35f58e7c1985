#include <complex>
#include <stdexcept>

#include "doctest.h"
#include "slocc/rational.hpp"

using slocc::Cplx;
using slocc::GaussianRational;
using slocc::Rational;

TEST_CASE("default and integer construction") {
    GaussianRational z;
    CHECK(z.is_zero());
    CHECK(z.re == 0);
    CHECK(z.im == 0);

    GaussianRational five = 5;
    CHECK(five.re == 5);
    CHECK(five.im == 0);
    CHECK_FALSE(five.is_zero());
}

TEST_CASE("rationals canonicalize to lowest terms") {
    CHECK(Rational("2/4") == Rational(1, 2));
    CHECK(Rational(-6, 8) == Rational(-3, 4));
    GaussianRational z{Rational(2, 4), Rational(0)};
    CHECK(z.re == Rational(1, 2));
}

TEST_CASE("field arithmetic") {
    const GaussianRational a{Rational(1, 2), Rational(1, 2)};
    const GaussianRational b{Rational(1, 2), Rational(-1, 2)};

    SUBCASE("(1/2 + i/2)(1/2 - i/2) = 1/2") {
        const GaussianRational p = a * b;
        CHECK(p == GaussianRational{Rational(1, 2), Rational(0)});
    }
    SUBCASE("additive inverse") {
        CHECK((a + (-a)).is_zero());
        CHECK(a - a == GaussianRational{});
    }
    SUBCASE("multiplicative inverse round trip") {
        const GaussianRational c{Rational(-3, 7), Rational(5, 11)};
        CHECK(a / c * c == a);
        CHECK(c / c == GaussianRational(1));
    }
    SUBCASE("i * i = -1") {
        const GaussianRational i{Rational(0), Rational(1)};
        CHECK(i * i == GaussianRational(-1));
    }
    SUBCASE("compound assignment") {
        GaussianRational x = a;
        x += b;
        CHECK(x == GaussianRational(1));
        x -= b;
        CHECK(x == a);
        x *= GaussianRational(2);
        CHECK(x == GaussianRational{Rational(1), Rational(1)});
        x /= GaussianRational(2);
        CHECK(x == a);
    }
}

TEST_CASE("conjugate and squared modulus") {
    const GaussianRational z{Rational(3, 4), Rational(-2, 5)};
    CHECK(z.conj() == GaussianRational{Rational(3, 4), Rational(2, 5)});
    CHECK(z.norm2() == Rational(9, 16) + Rational(4, 25));
    CHECK((z * z.conj()).re == z.norm2());
    CHECK((z * z.conj()).im == 0);
}

TEST_CASE("division by zero is rejected") {
    const GaussianRational one = 1;
    CHECK_THROWS(one / GaussianRational{});
}

TEST_CASE("text rendering") {
    CHECK(slocc::to_string(GaussianRational{}) == "0");
    CHECK(slocc::to_string(GaussianRational{Rational(3, 4), 0}) == "3/4");
    CHECK(slocc::to_string(GaussianRational{Rational(-1, 2), Rational(2)}) ==
          "-1/2+2 i");
    CHECK(slocc::to_string(GaussianRational{0, 1}) == "i");
    CHECK(slocc::to_string(GaussianRational{0, -1}) == "-i");
    CHECK(slocc::to_string(GaussianRational{1, -1}) == "1-i");
    CHECK(slocc::to_string(GaussianRational{0, Rational(2, 3)}) == "2/3 i");
}

TEST_CASE("conversion to complex double") {
    const GaussianRational z{Rational(1, 4), Rational(-3, 8)};
    const Cplx c = z.to_complex();
    CHECK(c.real() == doctest::Approx(0.25));
    CHECK(c.imag() == doctest::Approx(-0.375));
}

TEST_CASE("scalar trait helpers dispatch per carrier") {
    CHECK(slocc::scalar_is_zero(GaussianRational{}, 0.0));
    CHECK_FALSE(slocc::scalar_is_zero(GaussianRational{Rational(1, 1000000)},
                                      0.5));  // exact carrier ignores tol
    CHECK(slocc::scalar_is_zero(Cplx(1e-12, 0), 1e-9));
    CHECK_FALSE(slocc::scalar_is_zero(Cplx(1e-6, 0), 1e-9));

    CHECK(slocc::scalar_conj(Cplx(1, 2)) == Cplx(1, -2));
    CHECK(slocc::scalar_conj(GaussianRational{1, 2}) ==
          GaussianRational{1, -2});

    CHECK(slocc::scalar_to_complex(Cplx(2, 3)) == Cplx(2, 3));
    CHECK(slocc::scalar_to_complex(GaussianRational{2, 3}) == Cplx(2, 3));
}
