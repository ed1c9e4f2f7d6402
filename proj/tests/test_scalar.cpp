#include <doctest.h>

#include "trop/corpus.hpp"
#include "trop/scalar.hpp"

using namespace trop;

namespace {
const Scalar r1 = Scalar::real(1);
const Scalar r2 = Scalar::real(2);
const Scalar g2 = Scalar::ghost(2);
const Scalar ninf = Scalar::neg_inf();
}  // namespace

TEST_CASE("addition: max with tie ghostification") {
    CHECK(add(r1, r2) == r2);
    CHECK(add(r2, r2) == g2);
    CHECK(add(r2, g2) == g2);
    CHECK(add(ninf, Scalar::ghost(5)) == Scalar::ghost(5));
    CHECK(add(ninf, ninf) == ninf);
    CHECK(add(g2, g2) == g2);
}

TEST_CASE("multiplication: magnitudes add, ghost absorbs, -inf annihilates") {
    CHECK(mul(r1, r2) == Scalar::real(3));
    CHECK(mul(Scalar::ghost(1), r2) == Scalar::ghost(3));
    CHECK(mul(ninf, Scalar::ghost(7)) == ninf);
}

TEST_CASE("division") {
    CHECK(div(Scalar::real(5), r2) == Scalar::real(3));
    CHECK(div(Scalar::ghost(5), r2) == Scalar::ghost(3));
    CHECK(div(ninf, r2) == ninf);
    CHECK_THROWS_AS(div(Scalar::real(3), ninf), DomainError);
    // mul round trip, including a ghost divisor
    CHECK(div(mul(Scalar::ghost(3), r2), r2) == Scalar::ghost(3));
    CHECK(div(Scalar::real(5), Scalar::ghost(2)) == Scalar::ghost(3));
}

TEST_CASE("total order") {
    CHECK(ninf < Scalar::real(5));
    CHECK(Scalar::real(5) < Scalar::ghost(5));
    CHECK(Scalar::ghost(5) < Scalar::real(6));
    CHECK(Scalar::real(5) == Scalar::real(5));
    CHECK_FALSE(Scalar::real(5) == Scalar::ghost(5));
}

TEST_CASE("ghost map and projection") {
    CHECK(ghost(Scalar::real(3)) == Scalar::ghost(3));
    CHECK(ghost(Scalar::ghost(3)) == Scalar::ghost(3));
    CHECK(ghost(ninf) == ninf);
    CHECK(realize(Scalar::ghost(3)) == MaxPlus::of(3));
    CHECK(realize(Scalar::real(3)) == MaxPlus::of(3));
    CHECK(realize(ninf) == MaxPlus::neg_inf());
    CHECK(is_ghost(Scalar::ghost(3)));
    CHECK(is_ghost(ninf));
    CHECK_FALSE(is_ghost(Scalar::real(3)));
}

TEST_CASE("semiring axioms on random triples") {
    Corpus corpus(42);
    for (int iter = 0; iter < 2000; ++iter) {
        Scalar x = corpus.scalar(), y = corpus.scalar(), z = corpus.scalar();
        CHECK(add(x, y) == add(y, x));
        CHECK(mul(x, y) == mul(y, x));
        CHECK(add(add(x, y), z) == add(x, add(y, z)));
        CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
        CHECK(mul(x, add(y, z)) == add(mul(x, y), mul(x, z)));
        CHECK(add(x, ninf) == x);
        CHECK(mul(x, Scalar::real(0)) == x);
        if (!x.is_neg_inf()) CHECK(add(x, x) == ghost(x));
        // pi is a semiring morphism onto max-plus
        CHECK(realize(add(x, y)) == mp_add(realize(x), realize(y)));
        CHECK(realize(mul(x, y)) == mp_mul(realize(x), realize(y)));
        // order is total and antisymmetric
        CHECK(((x < y) || (y < x) || (x == y)));
        if (x < y) CHECK_FALSE(y < x);
        if (x < y && y < z) CHECK(x < z);
        if (y.is_real()) CHECK(div(mul(x, y), y) == x);
    }
}

TEST_CASE("scalar text round trip") {
    CHECK(to_string(Scalar::ghost(8)) == "8g");
    CHECK(to_string(ninf) == "-inf");
    CHECK(to_string(Scalar::real(Rational(3, 2))) == "3/2");
    CHECK(parse_scalar("2g") == g2);
    CHECK(parse_scalar("-inf") == ninf);
    CHECK(parse_scalar("3/2") == Scalar::real(Rational(3, 2)));
    CHECK(parse_scalar("-7/2g") == Scalar::ghost(Rational(-7, 2)));
    CHECK(parse_scalar("4/2") == Scalar::real(2));  // canonicalized
    CHECK_THROWS_AS(parse_scalar("abc"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar(""), ParseError);
    CHECK_THROWS_AS(parse_scalar("1.5"), ParseError);

    Corpus corpus(7);
    for (int iter = 0; iter < 200; ++iter) {
        Scalar x = corpus.scalar();
        CHECK(parse_scalar(to_string(x)) == x);
    }
}
