#include <doctest.h>

#include <set>

#include "gen.hpp"

using namespace ncsylv;

TEST_CASE("param slots enumerate the pairs i < j without gaps") {
    std::set<int> slots;
    for (int j = 2; j <= kMaxDim; ++j)
        for (int i = 1; i < j; ++i) {
            Param p = Param::pair(i, j);
            CHECK(p.indices() == std::make_pair(i, j));
            slots.insert(p.slot());
        }
    CHECK(slots.size() == std::size_t(kMaxDim * (kMaxDim - 1) / 2));
    CHECK(*slots.begin() == 1);
    CHECK(*slots.rbegin() == int(slots.size()));
    CHECK(Param::q().slot() == 0);
    CHECK(Param::pair(2, 3).name() == "q[2,3]");
    CHECK_THROWS_AS(Param::pair(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(Param::pair(2, 1), std::invalid_argument);
}

TEST_CASE("qij convention: q[i,i] = 1 and q[j,i] = q[i,j]^-1") {
    CHECK(LaurentPoly::qij(2, 2).is_one());
    CHECK(LaurentPoly::qij(3, 1) * LaurentPoly::qij(1, 3) == LaurentPoly(1));
    CHECK(LaurentPoly::qij(3, 1).to_string() == "q[1,3]^-1");
}

TEST_CASE("printing") {
    LaurentPoly q = LaurentPoly::param(Param::q());
    CHECK((q * q + LaurentPoly(1)).to_string() == "q^2 + 1");
    CHECK((LaurentPoly(1) - q).to_string() == "-q + 1");
    CHECK((q.inverse() * Rational(-3, 2)).to_string() == "-3/2*q^-1");
    CHECK(LaurentPoly().to_string() == "0");
    CHECK((LaurentPoly::qij(1, 2, -1) * LaurentPoly::qij(1, 3, -1)).to_string() == "q[1,2]^-1*q[1,3]^-1");
}

TEST_CASE("ring axioms on random Laurent polynomials") {
    gen::Rng rng(11);
    for (int t = 0; t < 300; ++t) {
        auto a = gen::laurent(rng), b = gen::laurent(rng), c = gen::laurent(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * LaurentPoly(1) == a);
    }
}

TEST_CASE("specialization is a ring homomorphism") {
    // Oracle: evaluating before and after the operation must agree.
    gen::Rng rng(12);
    for (int t = 0; t < 200; ++t) {
        auto a = gen::laurent(rng, 4), b = gen::laurent(rng, 4);
        auto v = gen::assignment(rng, 4);
        CHECK((a * b).specialize(v) == a.specialize(v) * b.specialize(v));
        CHECK((a + b).specialize(v) == a.specialize(v) + b.specialize(v));
    }
}

TEST_CASE("monomial inverses and powers") {
    gen::Rng rng(13);
    for (int t = 0; t < 100; ++t) {
        LaurentPoly m(gen::monomial(rng, 4), gen::nonzero_rational(rng));
        CHECK((m * m.inverse()).is_one());
        CHECK(m.pow(3) == m * m * m);
        CHECK(m.pow(-2) * m.pow(2) == LaurentPoly(1));
    }
    LaurentPoly q = LaurentPoly::param(Param::q());
    CHECK_THROWS_AS((q + LaurentPoly(1)).inverse(), std::domain_error);
}

TEST_CASE("specialize rejects missing or zero values") {
    LaurentPoly q = LaurentPoly::param(Param::q(), -1);
    CHECK_THROWS_AS(q.specialize({}), std::invalid_argument);
    CHECK_THROWS_AS(q.specialize({{Param::q(), Rational(0)}}), std::domain_error);
    CHECK(q.specialize({{Param::q(), Rational(2)}}) == Rational(1, 2));
}

TEST_CASE("substitute ties parameters together") {
    LaurentPoly p = LaurentPoly::qij(1, 2) * LaurentPoly::qij(1, 3, -1) + LaurentPoly::qij(2, 3);
    LaurentPoly tied = p.substitute([](Param x) {
        return x.is_single() || x.indices().first == 1 ? LaurentPoly::param(Param::q()) : LaurentPoly::param(x);
    });
    CHECK(tied == LaurentPoly(1) + LaurentPoly::qij(2, 3));
}

TEST_CASE("beta polynomials: interpolation recovers random polynomials") {
    gen::Rng rng(14);
    for (int t = 0; t < 50; ++t) {
        std::vector<Rational> c;
        for (int k = rng.uniform(0, 5); k >= 0; --k) c.push_back(gen::rational(rng));
        BetaPoly p(c);
        std::vector<Rational> xs, ys;
        for (int x = 1; x <= 7; ++x) {
            xs.emplace_back(x);
            ys.push_back(p(Rational(x)));
        }
        CHECK(interpolate(xs, ys) == p);
    }
}

TEST_CASE("beta_binomial agrees with integer binomials") {
    auto binom = [](long top, int l) {
        // Generalized binomial, defined for negative top as well.
        Rational r(1);
        for (int t = 0; t < l; ++t) r = r * Rational(top - t) / Rational(t + 1);
        return r;
    };
    for (int l = 0; l <= 4; ++l)
        for (int d = 0; d <= 3; ++d)
            for (int beta = 0; beta <= 6; ++beta)
                CHECK(beta_binomial(l, d)(Rational(beta)) == binom(beta + l - 1 - d, l));
}

TEST_CASE("beta polynomial printing") {
    BetaPoly p(std::vector<Rational>{Rational(0), Rational(1, 12), Rational(3, 8), Rational(5, 12), Rational(1, 8)});
    CHECK(p.to_string() == "1/8*b^4 + 5/12*b^3 + 3/8*b^2 + 1/12*b");
    CHECK(BetaPoly().to_string() == "0");
    CHECK((BetaPoly(1) - BetaPoly::beta()).to_string() == "-b + 1");
}
