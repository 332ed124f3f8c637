#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"

using namespace csurg;

TEST_CASE("rationals are kept in lowest terms with positive denominator", "[rational]") {
    const Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(0, -7).den() == 1);
    CHECK(Rational(0, 5) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("rational arithmetic and ordering", "[rational]") {
    const Rational a(1, 4), b(-3, 4);
    CHECK(a + b == Rational(-1, 2));
    CHECK(a - b == Rational(1));
    CHECK(a * b == Rational(-3, 16));
    CHECK(a / b == Rational(-1, 3));
    CHECK(b < a);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-2, 3).reciprocal() == Rational(-3, 2));
    CHECK_THROWS_AS(Rational(0).reciprocal(), DomainError);
}

TEST_CASE("rational text form", "[rational]") {
    CHECK(Rational(5, 4).str() == "5/4");
    CHECK(Rational(-8, 2).str() == "-4");
    CHECK(Rational::parse("-23/4") == Rational(-23, 4));
    CHECK(Rational::parse("+6/8") == Rational(3, 4));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/"), DomainError);
    CHECK_THROWS_AS(Rational::parse("a/2"), DomainError);
    CHECK_THROWS_AS(Rational::parse(""), DomainError);
}

TEST_CASE("rational parse inverts str", "[rational][property]") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const auto r = oracle::random_rational(rng, 1000000);
        REQUIRE(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("big values stay exact", "[rational]") {
    Rational r(1);
    for (int i = 0; i < 40; ++i) r *= Rational(1000003, 999983);
    for (int i = 0; i < 40; ++i) r /= Rational(1000003, 999983);
    CHECK(r == Rational(1));
    CHECK_THROWS_AS(to_i64(BigInt(1) << 70), DomainError);
}

TEST_CASE("negative continued fraction expansion", "[neg_cf]") {
    CHECK(neg_cf_expand(Rational(-4)).entries == std::vector<std::int64_t>{-5});
    CHECK(neg_cf_expand(Rational(-1, 2)).entries == std::vector<std::int64_t>{-2, -2});
    CHECK(neg_cf_expand(Rational(-17, 5)).entries == std::vector<std::int64_t>{-5, -2, -3});
    CHECK_THROWS_AS(neg_cf_expand(Rational(0)), DomainError);
    CHECK_THROWS_AS(neg_cf_expand(Rational(1, 3)), DomainError);
}

TEST_CASE("negative continued fraction evaluation", "[neg_cf]") {
    CHECK(neg_cf_eval({{-5}}) == Rational(-4));
    CHECK(neg_cf_eval({{-3, -2}}) == Rational(-3, 2));
    // k entries equal to -2 evaluate to -1/k under the shifted convention.
    for (std::int64_t k = 1; k <= 12; ++k) {
        const NegCF twos{std::vector<std::int64_t>(static_cast<std::size_t>(k), -2)};
        CHECK(neg_cf_eval(twos) == Rational(-1, k));
        CHECK(oracle::eval_cf(twos.entries) == Rational(-1, k));
    }
    CHECK_THROWS_AS(neg_cf_eval({{-3, -1}}), DomainError);
    CHECK_THROWS_AS(neg_cf_eval({{}}), DomainError);
}

TEST_CASE("neg_cf round trip on the small-height box", "[neg_cf][property]") {
    for (std::int64_t p = 1; p <= 50; ++p)
        for (std::int64_t q = 1; q <= 50; ++q) {
            const Rational r(-p, q);
            const auto cf = neg_cf_expand(r);
            REQUIRE(cf == neg_cf_expand(r));
            for (auto e : cf.entries) REQUIRE(e <= -2);
            REQUIRE(neg_cf_eval(cf) == r);
            REQUIRE(oracle::eval_cf(cf.entries) == r);
        }
}

TEST_CASE("neg_cf round trip on random rationals", "[neg_cf][property]") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::int64_t> num(1, 1000000), den(1, 1000000);
    for (int i = 0; i < 10000; ++i) {
        const Rational r(-num(rng), den(rng));
        REQUIRE(oracle::eval_cf(neg_cf_expand(r).entries) == r);
    }
}

TEST_CASE("Bareiss determinant and rational solve", "[matrix]") {
    const IntMatrix a{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    CHECK(determinant(a) == 4);
    CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);

    const RatMatrix r = to_rational(a);
    const std::vector<Rational> b{Rational(1), Rational(0), Rational(1)};
    const auto s = solve(r, b);
    REQUIRE(s.solution);
    CHECK(r * *s.solution == b);

    const RatMatrix sing{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    const auto bad = solve(sing, {Rational(1), Rational(0)});
    CHECK_FALSE(bad.solution);
    // witness y: y^T A = 0 and y . b != 0
    const auto& y = bad.witness;
    REQUIRE(y.size() == 2);
    CHECK(y[0] * Rational(1) + y[1] * Rational(2) == Rational(0));
    CHECK_FALSE((y[0] * Rational(1)).is_zero());
}

TEST_CASE("inertia agrees with root counting", "[matrix][property]") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int i = 0; i < 500; ++i) {
        const auto s = oracle::random_symmetric(rng, dim(rng), 9);
        const auto in = inertia(s);
        REQUIRE(in.positive + in.negative + in.zero == s.rows());
        REQUIRE(in.positive + in.negative == rank(s));
        REQUIRE(in.signature() == oracle::signature_by_roots(s));
    }
}

TEST_CASE("Smith normal form", "[smith]") {
    const IntMatrix a{{-1, -1}, {-2, -4}};
    const auto f = smith_normal_form(a);
    CHECK(f.diagonal == std::vector<BigInt>{1, 2});
    CHECK(f.U * a * f.V == f.D);
    CHECK(abs(determinant(f.U)) == 1);
    CHECK(abs(determinant(f.V)) == 1);
}

TEST_CASE("Smith normal form of random integer matrices", "[smith][property]") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> entry(-6, 6), dim(1, 5);
    for (int t = 0; t < 300; ++t) {
        const std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a(i, j) = entry(rng);
        const auto f = smith_normal_form(a);
        REQUIRE(f.U * a * f.V == f.D);
        REQUIRE(abs(determinant(f.U)) == 1);
        REQUIRE(abs(determinant(f.V)) == 1);
        for (std::size_t i = 0; i < f.diagonal.size(); ++i) {
            REQUIRE(f.diagonal[i] >= 0);
            if (i + 1 < f.diagonal.size() && f.diagonal[i] != 0)
                REQUIRE(f.diagonal[i + 1] % f.diagonal[i] == 0);
        }
        if (r == c) {
            BigInt prod = 1;
            for (const auto& d : f.diagonal) prod *= d;
            REQUIRE(prod == abs(determinant(a)));
        }
    }
}
