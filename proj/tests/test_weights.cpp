#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "gen.hpp"

using namespace ncsylv;

namespace {

LaurentPoly q_pow(int e) { return LaurentPoly::param(Param::q(), e); }

int inv(const std::vector<int>& v) {
    int c = 0;
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b) c += v[a] > v[b];
    return c;
}

}  // namespace

TEST_CASE("single-q weight is q^(inv mu - inv lambda)") {
    gen::Rng rng(31);
    for (int t = 0; t < 200; ++t) {
        std::vector<int> lam, mu;
        for (int k = rng.uniform(0, 6); k > 0; --k) {
            lam.push_back(rng.uniform(1, 5));
            mu.push_back(rng.uniform(1, 5));
        }
        CHECK(weight(lam, mu, WeightScheme::single_q()) == q_pow(inv(mu) - inv(lam)));
        CHECK(weight(lam, mu, WeightScheme::unit()).is_one());
    }
}

TEST_CASE("multiparameter weight collapses to single q when all q[i,j] are tied") {
    gen::Rng rng(32);
    auto tie = [](Param) { return LaurentPoly::param(Param::q()); };
    for (int t = 0; t < 200; ++t) {
        std::vector<int> lam, mu;
        for (int k = rng.uniform(0, 6); k > 0; --k) {
            lam.push_back(rng.uniform(1, 5));
            mu.push_back(rng.uniform(1, 5));
        }
        CHECK(weight(lam, mu, WeightScheme::multi_q()).substitute(tie) == weight(lam, mu, WeightScheme::single_q()));
    }
}

TEST_CASE("multiparameter weight of a transposition") {
    std::vector<int> lam{2, 1}, mu{1, 3};
    CHECK(weight(lam, mu, WeightScheme::multi_q()) == LaurentPoly::qij(1, 2, -1));
    std::vector<int> lam2{1, 2}, mu2{3, 1};
    CHECK(weight(lam2, mu2, WeightScheme::multi_q()) == LaurentPoly::qij(1, 3));
    // Block-constant table: pairs straddling the block share q.
    CHECK(weight(lam2, mu2, WeightScheme::block_constant(1)) == q_pow(1));
    CHECK(weight(lam2, mu2, WeightScheme::block_constant(3)) == LaurentPoly::qij(1, 3));
}

TEST_CASE("q-determinant of A_J as a signed sum with (-q)^(-inv sigma)") {
    // Oracle: the column-ordered expansion with explicit sign and weight.
    for (int k = 1; k <= 4; ++k) {
        auto a = NCMatrix::generic(k, k);
        Element want(k);
        std::vector<int> sigma(k);
        std::iota(sigma.begin(), sigma.end(), 1);
        do {
            Word w;
            for (int col = 1; col <= k; ++col) w.push_back(Letter(sigma[col - 1], col));
            int e = inv(sigma);
            want.add_term(w, q_pow(-e) * LaurentPoly(e % 2 ? -1 : 1));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        CHECK((det_weighted(a, WeightScheme::single_q()) - want).is_zero());
    }
}

TEST_CASE("2x2 determinants") {
    auto a = NCMatrix::generic(2, 2);
    CHECK(det_weighted(a, WeightScheme::unit()).to_string() == "a[1,1]a[2,2] - a[2,1]a[1,2]");
    CHECK(det_weighted(a, WeightScheme::single_q()).coefficient(Word::parse("a21a12")) == -q_pow(-1));
}

TEST_CASE("det(I - A) by permutations equals the subset expansion") {
    for (auto s : {WeightScheme::unit(), WeightScheme::single_q(), WeightScheme::multi_q(), WeightScheme::block_constant(1)})
        for (int m = 1; m <= 4; ++m) {
            auto a = NCMatrix::generic(m, m);
            CHECK((det_weighted(identity_minus(a), s) - det_I_minus_subsets(a, s)).is_zero());
        }
}

TEST_CASE("det(I - A) truncated keeps low-degree terms only") {
    auto a = NCMatrix::generic(3, 2);
    Element d = det_weighted(identity_minus(a), WeightScheme::unit());
    CHECK(d.max_degree() == 2);
    CHECK(d.coefficient(Word()) == LaurentPoly(1));
    CHECK(d.coefficient(Word::parse("a22")) == LaurentPoly(-1));
}

TEST_CASE("bracket matrix exponents") {
    // Entry a_kl is scaled by q^([l > j] - [k < i]).
    auto a = NCMatrix::generic(4, 1);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            auto b = bracket_matrix(a, i, j, WeightScheme::single_q());
            for (int k = 1; k <= 4; ++k)
                for (int l = 1; l <= 4; ++l) {
                    int e = (l > j) - (k < i);
                    CHECK(b.entry(k, l).coefficient(Word{Letter(k, l)}) == q_pow(e));
                }
        }
    auto b = bracket_matrix(a, 2, 2, WeightScheme::multi_q());
    CHECK(b.entry(1, 3).coefficient(Word::parse("a13")) == LaurentPoly::qij(2, 3) * LaurentPoly::qij(1, 2, -1));
    CHECK(b.entry(3, 3).coefficient(Word::parse("a33")) == LaurentPoly::qij(2, 3));
    CHECK(b.entry(2, 1).coefficient(Word::parse("a21")).is_one());
    CHECK(bracket_matrix(a, 1, 3, WeightScheme::unit()).entry(1, 4).coefficient(Word::parse("a14")).is_one());
}

TEST_CASE("weights reject mismatched lengths and non-square input") {
    std::vector<int> lam{1, 2}, mu{1};
    CHECK_THROWS_AS(weight(lam, mu, WeightScheme::single_q()), std::invalid_argument);
    CHECK_THROWS_AS(det_weighted(NCMatrix::generic({1, 2}, {1}, 2), WeightScheme::unit()), std::invalid_argument);
    CHECK_THROWS_AS(WeightScheme::block_constant(-1), std::invalid_argument);
}
