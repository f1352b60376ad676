#include <doctest.h>

#include "gen.hpp"

using namespace ncsylv;

namespace {

bool degrees_nontrivial(const VerifyReport& r) {
    std::size_t blocks = 0;
    for (const auto& d : r.degrees) blocks += d.block_count;
    return blocks > 0;
}

}  // namespace

TEST_CASE("master decomposition in the free algebra, m <= 3") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 0; n < m; ++n) {
            auto r = verify_master_decomposition(SylvesterInstance::make(Regime::cf, m, n, 5));
            CHECK_MESSAGE(r.pass, "m=", m, " n=", n);
            CHECK(degrees_nontrivial(r));
        }
}

TEST_CASE("Sylvester's identity in every regime, m = 3, n in {1, 2}, N = 4") {
    for (Regime rg : all_regimes())
        for (int n = 1; n <= 2; ++n) {
            auto r = verify_sylvester(SylvesterInstance::make(rg, 3, n, 4));
            CHECK_MESSAGE(r.pass, regime_name(rg), " n=", n);
            CHECK(r.degrees.size() == 5);
            CHECK(degrees_nontrivial(r));
        }
}

TEST_CASE("Sylvester's identity with C in path form") {
    for (Regime rg : {Regime::cf, Regime::q_cf, Regime::qij_cf})
        CHECK(verify_sylvester(SylvesterInstance::make(rg, 3, 1, 4), {}, CForm::path).pass);
}

TEST_CASE("the identity is not a free-algebra identity") {
    // Negative control: without the Cartier-Foata relations the two sides differ.
    CheckOptions o;
    o.method = CheckMethod::free_algebra;
    auto r = verify_sylvester(SylvesterInstance::make(Regime::cf, 3, 1, 3), o);
    CHECK(!r.pass);
    REQUIRE(r.first_failure() != nullptr);
    CHECK(!r.first_failure()->witness.empty());
}

TEST_CASE("multiparameter Sylvester needs the block-constant table") {
    CHECK_THROWS_AS(verify_sylvester(SylvesterInstance::make(Regime::qij_cf, 3, 1, 3, true)), std::invalid_argument);
    CHECK_THROWS_AS(SylvesterInstance::make(Regime::cf, 3, 3, 3), std::invalid_argument);
    CheckOptions o;
    o.method = CheckMethod::normal_form;
    CHECK_THROWS_AS(verify_sylvester(SylvesterInstance::make(Regime::rq, 3, 1, 3), o), std::invalid_argument);
}

TEST_CASE("determinant and path forms of C agree") {
    for (Regime rg : all_regimes()) {
        auto r = verify_c_entries(SylvesterInstance::make(rg, 3, 1, 4));
        CHECK_MESSAGE(r.pass, regime_name(rg));
    }
}

TEST_CASE("C satisfies the right-quantum relations of the matching regime") {
    for (Regime rg : all_regimes()) {
        auto r = verify_C_relations(SylvesterInstance::make(rg, 3, 1, 4));
        CHECK_MESSAGE(r.pass, regime_name(rg));
        CHECK(!r.notes.empty());
    }
}

TEST_CASE("C relation targets") {
    auto inst = SylvesterInstance::make(Regime::q_cf, 3, 1, 3);
    for (const auto& rel : c_relators(inst))
        for (const auto& [w, c] : rel.terms)
            for (Letter l : w.letters()) {
                CHECK(l.row() > 1);
                CHECK(l.col() > 1);
            }
    CHECK(right_quantum_counterpart(Regime::cf) == Regime::rq);
    CHECK(right_quantum_counterpart(Regime::qij_cf) == Regime::qij_rq);
}

TEST_CASE("inverse formula: diagonal entries in every regime") {
    for (Regime rg : all_regimes())
        for (int m = 1; m <= 3; ++m) {
            auto inst = SylvesterInstance::make(rg, m, 0, 4);
            for (int i = 1; i <= m; ++i) CHECK_MESSAGE(verify_inverse_formula(inst, i, i).pass, regime_name(rg), " m=", m, " i=", i);
        }
}

TEST_CASE("inverse formula: every entry without weights") {
    for (Regime rg : {Regime::commutative, Regime::cf, Regime::rq})
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                CHECK(verify_inverse_formula(SylvesterInstance::make(rg, 3, 0, 4), i, j).pass);
}

TEST_CASE("inverse formula: weighted off-diagonal entries carry a residual") {
    // A known non-identity: the witness must be a degree-2 term.
    auto r = verify_inverse_formula(SylvesterInstance::make(Regime::q_cf, 2, 0, 3), 1, 2);
    CHECK(!r.pass);
    REQUIRE(r.first_failure() != nullptr);
    CHECK(r.first_failure()->degree == 2);
}

TEST_CASE("inverse formula variants") {
    for (Regime rg : all_regimes()) {
        auto inst = SylvesterInstance::make(rg, 3, 0, 4);
        CHECK_MESSAGE(verify_inverse_formula(inst, 0, 0, InverseMode::weaker).pass, regime_name(rg));
        for (int n = 0; n < 3; ++n)
            CHECK_MESSAGE(verify_inverse_formula(SylvesterInstance::make(rg, 3, n, 4), 0, 0, InverseMode::nested).pass,
                          regime_name(rg), " n=", n);
    }
}

TEST_CASE("constrained sequence sums match c-products modulo the right-quantum ideal") {
    CHECK(verify_p_set_identity(5, 2, 3, 5, 4, std::nullopt).pass);
    CHECK(verify_p_set_identity(5, 2, 3, 4, 3, 5).pass);
    CHECK(verify_p_set_identity(4, 1, 2, 4, 3, std::nullopt).pass);
}

TEST_CASE("necessity of the block-constant table") {
    auto res = qij_counterexample();
    CHECK(res.confirmed);
    CHECK(res.lhs_coefficient == LaurentPoly::qij(1, 2, -1) * LaurentPoly::qij(1, 3, -1) * LaurentPoly(-1));
    CHECK(res.rhs_coefficient == LaurentPoly::qij(1, 2, -2) * LaurentPoly(-1));
    CHECK(!res.report.pass);
    CHECK(res.specialized.pass);
    CheckOptions exact;
    exact.method = CheckMethod::ideal_exact;
    CHECK(qij_counterexample(exact).confirmed);
}

TEST_CASE("specialize and exact methods agree on the rq-type instances") {
    for (Regime rg : {Regime::rq, Regime::q_rq, Regime::qij_rq})
        for (int n = 1; n <= 2; ++n) {
            auto inst = SylvesterInstance::make(rg, 3, n, 3);
            CheckOptions a, b;
            a.method = CheckMethod::ideal_specialize;
            b.method = CheckMethod::ideal_exact;
            auto ra = verify_sylvester(inst, a), rb = verify_sylvester(inst, b);
            CHECK(ra.pass == rb.pass);
            CHECK(ra.pass);
            for (std::size_t d = 0; d < ra.degrees.size(); ++d) CHECK(!ra.degrees[d].trials_disagreed);
        }
}

TEST_CASE("beta expansion against integer powers") {
    CHECK(beta_expansion_check(SylvesterInstance::make(Regime::cf, 2, 0, 4), {1, 2, 3}).pass);
    CHECK(beta_expansion_check(SylvesterInstance::make(Regime::cf, 2, 1, 4), {1, 2, 3}).pass);
    CHECK(beta_expansion_check(SylvesterInstance::make(Regime::cf, 3, 1, 4), {1, 2, 3}).pass);
    CHECK_THROWS_AS(beta_expansion_check(SylvesterInstance::make(Regime::rq, 2, 1, 3), {1}), std::invalid_argument);
}

TEST_CASE("integer powers separate the two readings of the third descent condition") {
    auto inst = SylvesterInstance::make(Regime::cf, 3, 2, 5);
    CHECK(beta_expansion_check(inst, {1, 2, 3}).pass);
    auto lit = beta_expansion_check(inst, {1, 2, 3}, ThirdCondition::literal);
    CHECK(!lit.pass);
    REQUIRE(lit.first_failure() != nullptr);
    CHECK(lit.first_failure()->degree == 5);
}

TEST_CASE("beta coefficient by interpolation equals the permutation sum") {
    CHECK(beta_coefficient(parse_index_word("132521421325"), 2).to_string() == "1/8*b^4 + 5/12*b^3 + 3/8*b^2 + 1/12*b");
    for (const auto& t : types_up_to(3, 4))
        for (const auto& o : enumerate_sequences(t, SequenceKind::ordered)) {
            if (o.empty()) continue;
            auto mu = o.cols();
            for (int n = 0; n <= 2; ++n) CHECK(beta_coefficient(mu, n) == e_mu(mu, n));
        }
}

TEST_CASE("n = 0: powers of the sum of all ordered sequences") {
    // Oracle: with n = 0, det^{-1}(I - C) is the sum of all ordered sequences,
    // so its beta-th power can be formed directly.
    const int m = 2, order = 4;
    auto sys = RelationSystem::make(Regime::cf, m);
    auto red = make_reducer(sys);
    Element s = o_sequence_sum(m, order, red);
    CHECK((s * det_weighted(identity_minus(NCMatrix::generic(m, order, red)), WeightScheme::unit()) -
           Element::one(order, red))
              .is_zero());
    Element p = Element::one(order, red);
    for (int beta = 1; beta <= 3; ++beta) {
        p = p * s;
        for (const auto& t : types_up_to(m, order))
            for (const auto& o : enumerate_sequences(t, SequenceKind::ordered))
                CHECK(p.coefficient(o) == LaurentPoly(e_mu(o.cols(), 0)(Rational(beta))));
    }
}

TEST_CASE("classical commutative identity") {
    CHECK(classical_example_check().pass);
    CHECK(classical_sylvester_check(3, 1).pass);
    CHECK(classical_sylvester_check(4, 2).pass);
}

TEST_CASE("report bookkeeping") {
    auto r = verify_sylvester(SylvesterInstance::make(Regime::cf, 2, 1, 3));
    CHECK(r.identity == "sylvester");
    CHECK(r.regime == "cf");
    CHECK(r.method == "normal-form");
    CHECK(r.max_degree == 3);
    for (std::size_t d = 0; d < r.degrees.size(); ++d) CHECK(r.degrees[d].degree == int(d));
    CHECK(r.elapsed_ms >= 0);
}
