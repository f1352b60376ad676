// Runs the twelve acceptance checks and prints one status line per check.
// Exit status is nonzero iff some check FAILs; a DEVIATION line marks a
// documented non-identity whose failure pattern matched expectations exactly.

#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <ncsylv/ncsylv.hpp>

using namespace ncsylv;

namespace {

enum class Status { pass, fail, deviation };

struct Line {
    Status status = Status::pass;
    std::vector<std::string> detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            status = Status::fail;
            detail.push_back("failed: " + what);
        }
    }
};

int failures = 0;

void report(int k, const std::string& title, const Line& l, double ms) {
    const char* s = l.status == Status::pass ? "PASS" : l.status == Status::fail ? "FAIL" : "DEVIATION";
    std::cout << "criterion " << k << ": " << s << "  " << title << "  (" << std::fixed;
    std::cout.precision(0);
    std::cout << ms << " ms)\n";
    for (const auto& d : l.detail) std::cout << "    " << d << "\n";
    if (l.status == Status::fail) ++failures;
}

template <class F>
void run(int k, const std::string& title, F body) {
    Stopwatch sw;
    Line l;
    try {
        body(l);
    } catch (const std::exception& e) {
        l.status = Status::fail;
        l.detail.push_back(std::string("exception: ") + e.what());
    }
    report(k, title, l, sw.ms());
}

std::string where(const VerifyReport& r) {
    std::ostringstream os;
    os << r.identity << " " << r.regime << " m=" << r.m << " n=" << r.n << " N=" << r.max_degree;
    for (const auto& note : r.notes) os << " [" << note << "]";
    if (const auto* d = r.first_failure()) {
        os << " degree " << d->degree << ":";
        for (const auto& [w, c] : d->witness) os << " (" << c << ")" << w.to_string();
    }
    return os.str();
}

bool agreeing(const VerifyReport& r) {
    for (const auto& d : r.degrees)
        if (d.trials_disagreed) return false;
    return r.pass;
}

Word W(const char* s) { return Word::parse(s); }

// Moves a randomly chosen adjacent out-of-order pair until none is left,
// applying the pair's defining relation each time.
std::pair<Word, LaurentPoly> random_rewrite(const Word& w, const RelationSystem& sys, std::mt19937_64& rng) {
    auto s = w.letters();
    LaurentPoly coef(1);
    for (;;) {
        std::vector<std::size_t> spots;
        for (std::size_t p = 0; p + 1 < s.size(); ++p) {
            bool bad = sys.regime == Regime::commutative ? s[p + 1] < s[p] : s[p].row() > s[p + 1].row();
            if (bad) spots.push_back(p);
        }
        if (spots.empty()) break;
        std::size_t p = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
        Letter x = s[p], y = s[p + 1];
        if (sys.regime != Regime::commutative)
            coef *= sys.scheme.q(y.row(), x.row()) * sys.scheme.q(y.col(), x.col()).inverse();
        std::swap(s[p], s[p + 1]);
    }
    return {Word(s), coef};
}

}  // namespace

int main() {
    const std::vector<Regime> rq_type{Regime::rq, Regime::q_rq, Regime::qij_cf, Regime::qij_rq};

    run(1, "free-algebra path decomposition, m <= 4, n < m, N = 6", [](Line& l) {
        for (int m = 1; m <= 4; ++m)
            for (int n = 0; n < m; ++n) {
                auto r = verify_master_decomposition(SylvesterInstance::make(Regime::cf, m, n, 6));
                l.require(r.pass, where(r));
            }
    });

    run(2, "decomposition of the 12-step path at n = 3", [](Line& l) {
        auto pieces = decompose_path(W("a41a13a32a22a25a54a43a33a33a31a14a44"), 3);
        std::vector<Word> want{W("a41a13a32a22a25"), W("a54"), W("a43a33a33a31a14"), W("a44")};
        l.require(pieces == want, "four factors");
    });

    run(3, "commutative Sylvester, m = 3 n = 1 and m = 4 n in {1,2}, N = 5; written example", [](Line& l) {
        for (auto [m, n] : {std::pair{3, 1}, {4, 1}, {4, 2}}) {
            auto r = verify_sylvester(SylvesterInstance::make(Regime::commutative, m, n, 5));
            l.require(r.pass, where(r));
        }
        auto ex = classical_example_check();
        l.require(ex.pass, where(ex));
    });

    run(4, "Cartier-Foata and q-Cartier-Foata Sylvester by normal form", [](Line& l) {
        for (Regime rg : {Regime::cf, Regime::q_cf}) {
            for (int m = 1; m <= 3; ++m)
                for (int n = 0; n < m; ++n) {
                    auto r = verify_sylvester(SylvesterInstance::make(rg, m, n, 5));
                    l.require(r.pass && r.method == "normal-form", where(r));
                }
            for (int n = 0; n <= 2; ++n) {
                auto r = verify_sylvester(SylvesterInstance::make(rg, 4, n, 4));
                l.require(r.pass && r.method == "normal-form", where(r));
            }
        }
    });

    run(5, "right-quantum-type Sylvester by ideal membership, m = 3, n in {1,2}, N = 4", [&](Line& l) {
        for (Regime rg : rq_type)
            for (int n = 1; n <= 2; ++n) {
                auto inst = SylvesterInstance::make(rg, 3, n, 4);
                CheckOptions rnd, exact;
                rnd.method = CheckMethod::ideal_specialize;
                rnd.trials = 3;
                exact.method = CheckMethod::ideal_exact;
                auto rs = verify_sylvester(inst, rnd);
                auto re = verify_sylvester(inst, exact);
                l.require(agreeing(rs), where(rs));
                l.require(re.pass, where(re));
            }
    });

    run(6, "C satisfies the matching relations, m = 3, n = 1, N = 4; switched words", [](Line& l) {
        for (Regime rg : all_regimes()) {
            auto r = verify_C_relations(SylvesterInstance::make(rg, 3, 1, 4));
            l.require(r.pass, where(r));
        }
        auto cf = RelationSystem::make(Regime::cf, 5);
        l.require(switch_paths_forward(W("a31a12a24a52a22a24"), {5, 3}, 2) == W("a52a24a31a12a22a24"), "6-step word");
        for (auto [from, to] : {std::pair{"a31a13a42a21a15", "a42a21a13a31a15"}, {"a31a13a42a22a25", "a42a22a25a31a13"}}) {
            Word s = switch_paths_forward(W(from), {4, 3}, 2);
            l.require(s == W(to), std::string("switched ") + from);
            l.require(normal_form_word(s, cf) == normal_form_word(W(from), cf), std::string("normal form of ") + from);
        }
    });

    run(7, "inverse formula, m <= 3, all (i,j), N = 4; weaker and nested variants", [](Line& l) {
        std::vector<std::string> deviations;
        for (Regime rg : all_regimes())
            for (int m = 1; m <= 3; ++m) {
                auto inst = SylvesterInstance::make(rg, m, 0, 4);
                for (int i = 1; i <= m; ++i)
                    for (int j = 1; j <= m; ++j) {
                        auto r = verify_inverse_formula(inst, i, j);
                        bool known = i != j && !inst.scheme().is_unit();
                        if (known) {
                            // Documented non-identity: the residual must appear, at degree 2.
                            const auto* f = r.first_failure();
                            l.require(f && f->degree == 2, "expected residual missing: " + where(r));
                            if (f) deviations.push_back(where(r));
                        } else {
                            l.require(r.pass, where(r));
                        }
                    }
                auto weak = verify_inverse_formula(inst, 0, 0, InverseMode::weaker);
                l.require(weak.pass, where(weak));
                for (int n = 0; n < m; ++n) {
                    auto nested = verify_inverse_formula(SylvesterInstance::make(rg, m, n, 4), 0, 0, InverseMode::nested);
                    l.require(nested.pass, where(nested));
                }
            }
        if (l.status == Status::pass && !deviations.empty()) {
            l.status = Status::deviation;
            l.detail.push_back("holds: every diagonal entry, every entry without weights, weaker and nested variants");
            l.detail.push_back(std::to_string(deviations.size()) +
                               " weighted off-diagonal entries are not identities; residuals, e.g.:");
            for (std::size_t t = 0; t < deviations.size() && t < 4; ++t) l.detail.push_back("  " + deviations[t]);
        }
    });

    run(8, "multiparameter counterexample, n = 1, m = 3", [](Line& l) {
        auto res = qij_counterexample();
        LaurentPoly want_l = LaurentPoly::qij(1, 2, -1) * LaurentPoly::qij(1, 3, -1) * LaurentPoly(-1);
        LaurentPoly want_r = LaurentPoly::qij(1, 2, -2) * LaurentPoly(-1);
        l.require(res.lhs_coefficient == want_l, "lhs coefficient " + res.lhs_coefficient.to_string());
        l.require(res.rhs_coefficient == want_r, "rhs coefficient " + res.rhs_coefficient.to_string());
        l.require(!res.report.pass, "generic table should fail");
        l.require(res.specialized.pass, "block-constant table should hold");
        l.require(res.confirmed, "expected failure confirmed");
        if (l.status == Status::pass)
            l.detail.push_back("a[2,1]a[3,2]a[1,3]: " + res.lhs_coefficient.to_string() + " vs " +
                               res.rhs_coefficient.to_string() + "; expected failure confirmed");
    });

    run(9, "beta-extension: e_mu example, integer powers, n = 0 oracle", [](Line& l) {
        const std::string want = "1/8*b^4 + 5/12*b^3 + 3/8*b^2 + 1/12*b";
        auto mu = parse_index_word("132521421325");
        l.require(e_mu(mu, 2).to_string() == want, "permutation sum gives " + e_mu(mu, 2).to_string());
        l.require(beta_coefficient(mu, 2).to_string() == want, "interpolated coefficient");
        for (auto [m, n] : {std::pair{2, 0}, {2, 1}, {3, 1}}) {
            auto r = beta_expansion_check(SylvesterInstance::make(Regime::cf, m, n, 4), {1, 2, 3});
            l.require(r.pass, where(r));
        }
        // The default reading of the third descent condition is the one integer powers confirm.
        auto sep = SylvesterInstance::make(Regime::cf, 3, 2, 5);
        auto def = beta_expansion_check(sep, {1, 2, 3});
        auto lit = beta_expansion_check(sep, {1, 2, 3}, ThirdCondition::literal);
        l.require(def.pass, where(def));
        l.require(!lit.pass, "literal reading should fail at m = 3, n = 2, N = 5");
        for (int m = 2; m <= 3; ++m) {
            // Sum of all ordered sequences is det^{-1}(I - A) in the Cartier-Foata quotient.
            auto red = make_reducer(RelationSystem::make(Regime::cf, m));
            Element s = o_sequence_sum(m, 4, red);
            Element p = Element::one(4, red);
            for (int beta = 1; beta <= 3; ++beta) {
                p = p * s;
                for (const auto& t : types_up_to(m, 4))
                    for (const auto& o : enumerate_sequences(t, SequenceKind::ordered))
                        l.require(p.coefficient(o) == LaurentPoly(e_mu(o.cols(), 0)(Rational(beta))),
                                  "n = 0 coefficient of " + o.to_string());
            }
        }
    });

    run(10, "phi bijection on types with total <= 5, m <= 3; 19-step decomposition", [](Line& l) {
        for (int m = 1; m <= 3; ++m)
            for (const auto& t : types_up_to(m, 5)) {
                auto ordered = enumerate_sequences(t, SequenceKind::ordered);
                auto paths = enumerate_sequences(t, SequenceKind::path);
                std::set<Word> image;
                for (const auto& o : ordered) image.insert(phi(o));
                l.require(std::vector<Word>(image.begin(), image.end()) == paths && image.size() == ordered.size(),
                          "bijection on a type of size " + std::to_string(ordered.size()));
            }
        auto d = cycle_decomposition(W("a13a11a12a13a22a23a22a21a23a22a23a32a31a31a33a32a32a33a33"), 0);
        l.require(d.concatenation() == W("a22a32a23a13a31a11a22a12a21a13a31a33a23a32a22a23a32a33a33"),
                  "19-step decomposition");
    });

    run(11, "constrained sequence sums, m = 5, n = 2, (i,j,k) = (3,5,4), counts <= 1", [](Line& l) {
        auto r = verify_p_set_identity(5, 2, 3, 5, 4, std::nullopt);
        l.require(r.pass, where(r));
        auto got = enumerate_constrained(2, 3, 5, 4, {1, 1});
        std::vector<Word> want;
        for (int code = 0; code < 390625; ++code) {
            Word w;
            for (int p = 0, c = code; p < 4; ++p, c /= 25) w.push_back(Letter(c % 25 / 5 + 1, c % 5 + 1));
            std::map<int, int> st, en;
            bool sorted = true;
            for (std::size_t p = 0; p < 4; ++p) {
                ++st[w[p].row()];
                ++en[w[p].col()];
                sorted = sorted && (p == 0 || w[p - 1].row() <= w[p].row());
            }
            if (sorted && st[1] == 1 && en[1] == 1 && st[2] == 1 && en[2] == 1 && st[3] == 1 && st[5] == 1 && en[4] == 2)
                want.push_back(w);
        }
        std::sort(want.begin(), want.end());
        l.require(got.size() == 12 && got == want, "the 12-element set");
    });

    run(12, "engine self-consistency", [&](Line& l) {
        std::mt19937_64 rng(2024);
        auto uni = [&](int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); };
        int words = 0;
        for (int t = 0; t < 1000; ++t, ++words) {
            Regime rg = std::vector<Regime>{Regime::commutative, Regime::cf, Regime::q_cf, Regime::qij_cf}[t % 4];
            auto sys = RelationSystem::make(rg, 3);
            Word w;
            for (int k = uni(0, 6); k > 0; --k) w.push_back(Letter(uni(1, 3), uni(1, 3)));
            l.require(random_rewrite(w, sys, rng) == normal_form_word(w, sys), "path independence for " + w.to_string());
        }
        auto cf = RelationSystem::make(Regime::cf, 3);
        auto rels = relators(cf);
        auto rand_word = [&](int lo, int hi) {
            Word w;
            for (int k = uni(lo, hi); k > 0; --k) w.push_back(Letter(uni(1, 3), uni(1, 3)));
            return w;
        };
        for (int t = 0; t < 200; ++t) {
            Element x;
            if (t % 2 == 0) {
                for (int s = uni(1, 3); s > 0; --s)
                    x += Element::monomial(rand_word(0, 2), LaurentPoly(uni(1, 5))) *
                         rels[std::size_t(uni(0, int(rels.size()) - 1))].element() *
                         Element::monomial(rand_word(0, 1), LaurentPoly(1));
            } else {
                for (int s = uni(1, 4); s > 0; --s) x.add_term(rand_word(0, 4), LaurentPoly(uni(-3, 3)));
            }
            MembershipMethod exact{MembershipMethod::Kind::exact};
            l.require(is_in_ideal(x, cf, exact).in_ideal() == normal_form(x, cf).is_zero(),
                      "membership vs normal form on " + x.to_string());
        }
        for (Regime rg : rq_type)
            for (int n = 1; n <= 2; ++n) {
                auto inst = SylvesterInstance::make(rg, 3, n, 4);
                CheckOptions a, b;
                a.method = CheckMethod::ideal_specialize;
                b.method = CheckMethod::ideal_exact;
                auto s1 = verify_sylvester(inst, a), s2 = verify_sylvester(inst, b);
                auto c1 = verify_C_relations(inst, a), c2 = verify_C_relations(inst, b);
                l.require(s1.pass == s2.pass, "sylvester methods agree: " + where(s1));
                l.require(c1.pass == c2.pass, "c-relations methods agree: " + where(c1));
            }
        CheckOptions a, b;
        a.method = CheckMethod::ideal_specialize;
        b.method = CheckMethod::ideal_exact;
        l.require(qij_counterexample(a).confirmed == qij_counterexample(b).confirmed, "counterexample methods agree");
        if (l.status == Status::pass) l.detail.push_back(std::to_string(words) + " words, 200 elements checked");
    });

    std::cout << (failures ? "acceptance: FAIL\n" : "acceptance: all criteria pass or carry a documented deviation\n");
    return failures ? 1 : 0;
}
