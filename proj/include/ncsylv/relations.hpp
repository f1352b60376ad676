#ifndef NCSYLV_RELATIONS_HPP
#define NCSYLV_RELATIONS_HPP

// The seven relation regimes, normal forms for the regimes whose relations
// only swap letters from different rows, and graded ideal membership.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "linalg.hpp"
#include "parallel.hpp"
#include "weights.hpp"

namespace ncsylv {

enum class Regime { commutative, cf, rq, q_cf, q_rq, qij_cf, qij_rq };

inline const std::vector<Regime>& all_regimes() {
    static const std::vector<Regime> r{Regime::commutative, Regime::cf,     Regime::rq,    Regime::q_cf,
                                       Regime::q_rq,        Regime::qij_cf, Regime::qij_rq};
    return r;
}

inline std::string regime_name(Regime r) {
    switch (r) {
        case Regime::commutative: return "commutative";
        case Regime::cf: return "cf";
        case Regime::rq: return "rq";
        case Regime::q_cf: return "q-cf";
        case Regime::q_rq: return "q-rq";
        case Regime::qij_cf: return "qij-cf";
        case Regime::qij_rq: return "qij-rq";
    }
    return "?";
}

inline std::optional<Regime> parse_regime(const std::string& s) {
    for (Regime r : all_regimes())
        if (regime_name(r) == s) return r;
    return std::nullopt;
}

/// Regimes whose relations are monomial swaps of letters in different rows.
inline bool has_normal_form(Regime r) {
    return r == Regime::commutative || r == Regime::cf || r == Regime::q_cf || r == Regime::qij_cf;
}

inline bool is_multiparameter(Regime r) { return r == Regime::qij_cf || r == Regime::qij_rq; }

struct RelationSystem {
    Regime regime = Regime::cf;
    int m = 2;
    WeightScheme scheme = WeightScheme::unit();
    /// When set, relators containing a letter from this column are dropped.
    std::optional<int> dropped_column;

    /// block_n >= 0 ties q[i,j] for i <= block_n < j together (multiparameter regimes only).
    static RelationSystem make(Regime r, int m, int block_n = -1) {
        if (m < 1 || m > kMaxDim) throw std::invalid_argument("dimension must be between 1 and " + std::to_string(kMaxDim));
        RelationSystem s;
        s.regime = r;
        s.m = m;
        switch (r) {
            case Regime::commutative:
            case Regime::cf:
            case Regime::rq: s.scheme = WeightScheme::unit(); break;
            case Regime::q_cf:
            case Regime::q_rq: s.scheme = WeightScheme::single_q(); break;
            case Regime::qij_cf:
            case Regime::qij_rq:
                s.scheme = block_n >= 0 ? WeightScheme::block_constant(block_n) : WeightScheme::multi_q();
                break;
        }
        return s;
    }

    bool normal_form_available() const { return has_normal_form(regime) && !dropped_column; }

    std::string describe() const {
        std::string d = regime_name(regime) + " m=" + std::to_string(m) + " weights=" + scheme.describe();
        if (dropped_column) d += " without column " + std::to_string(*dropped_column);
        return d;
    }
};

struct Relator {
    std::vector<std::pair<Word, LaurentPoly>> terms;  // sorted by word; first coefficient is 1
    std::vector<int> rows, cols;                      // sorted row and column multisets

    Element element() const {
        Element e;
        for (const auto& [w, c] : terms) e.add_term(w, c);
        return e;
    }
    std::string to_string() const { return element().to_string(); }
};

namespace detail {

inline std::vector<int> sorted_copy(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

inline void push_relator(std::vector<Relator>& out, std::set<std::string>& seen, const Element& e) {
    if (e.is_zero()) return;
    auto terms = e.sorted_terms();
    LaurentPoly lead_inv = terms.front().second.inverse();
    Relator r;
    for (auto& [w, c] : terms) r.terms.emplace_back(w, c * lead_inv);
    r.rows = sorted_copy(r.terms.front().first.rows());
    r.cols = sorted_copy(r.terms.front().first.cols());
    for (const auto& [w, c] : r.terms)
        if (sorted_copy(w.rows()) != r.rows || sorted_copy(w.cols()) != r.cols)
            throw std::logic_error("relator does not preserve row/column multisets: " + r.to_string());
    std::string key = r.to_string();
    if (seen.insert(key).second) out.push_back(std::move(r));
}

}  // namespace detail

/// Generating relators of the regime's ideal, normalized so the coefficient of
/// the smallest word is 1, deduplicated.
inline std::vector<Relator> relators(const RelationSystem& sys) {
    std::vector<Relator> out;
    std::set<std::string> seen;
    const int m = sys.m;
    const WeightScheme& s = sys.scheme;
    auto a = [](int i, int j) { return Word{Letter(i, j)}; };
    auto dropped = [&](int k, int l) { return sys.dropped_column && (k == *sys.dropped_column || l == *sys.dropped_column); };

    if (sys.regime == Regime::commutative) {
        for (int i = 1; i <= m; ++i)
            for (int k = 1; k <= m; ++k)
                for (int j = 1; j <= m; ++j)
                    for (int l = 1; l <= m; ++l) {
                        if (dropped(k, l)) continue;
                        Element e;
                        e.add_term(a(i, k) + a(j, l), LaurentPoly(1));
                        e.add_term(a(j, l) + a(i, k), LaurentPoly(-1));
                        detail::push_relator(out, seen, e);
                    }
        return out;
    }

    const bool cf_type = has_normal_form(sys.regime);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            if (i == j) continue;
            for (int k = 1; k <= m; ++k)
                for (int l = 1; l <= m; ++l) {
                    if (dropped(k, l)) continue;
                    Element e;
                    if (cf_type) {
                        // q_kl a_jl a_ik = q_ij a_ik a_jl
                        e.add_term(a(j, l) + a(i, k), s.q(k, l));
                        e.add_term(a(i, k) + a(j, l), -s.q(i, j));
                    } else {
                        // a_ik a_jl - q_ij^-1 a_jk a_il = q_kl q_ij^-1 a_jl a_ik - q_kl a_il a_jk
                        LaurentPoly qij_inv = s.q(j, i);
                        e.add_term(a(i, k) + a(j, l), LaurentPoly(1));
                        e.add_term(a(j, k) + a(i, l), -qij_inv);
                        e.add_term(a(j, l) + a(i, k), -(s.q(k, l) * qij_inv));
                        e.add_term(a(i, l) + a(j, k), s.q(k, l));
                    }
                    detail::push_relator(out, seen, e);
                }
        }
    return out;
}

/// Canonical representative of a word modulo a swap-type ideal: letters are
/// stably sorted by row (by row then column in the commutative regime). Each
/// pair x...y with row(x) > row(y) is swapped exactly once, contributing
/// q(row y, row x) q(col y, col x)^{-1}.
inline std::pair<Word, LaurentPoly> normal_form_word(const Word& w, const RelationSystem& sys) {
    if (!sys.normal_form_available())
        throw std::logic_error("normal form is only defined for the commutative and Cartier-Foata-type regimes");
    auto letters = w.letters();
    Monomial factor;
    if (sys.regime == Regime::commutative) {
        std::sort(letters.begin(), letters.end());
        return {Word(letters), LaurentPoly(1)};
    }
    if (!sys.scheme.is_unit()) {
        for (std::size_t p = 0; p < letters.size(); ++p)
            for (std::size_t r = p + 1; r < letters.size(); ++r) {
                Letter x = letters[p], y = letters[r];
                if (x.row() > y.row())
                    factor = factor * sys.scheme.q_monomial(y.row(), x.row()) *
                             sys.scheme.q_monomial(y.col(), x.col()).inverse();
            }
    }
    std::stable_sort(letters.begin(), letters.end(), [](Letter x, Letter y) { return x.row() < y.row(); });
    return {Word(letters), LaurentPoly(factor, Rational(1))};
}

inline Element normal_form(const Element& x, const RelationSystem& sys) {
    Element out(x.order());
    for (const auto& [w, c] : x.terms()) {
        auto [nw, f] = normal_form_word(w, sys);
        out.add_term(nw, c * f);
    }
    return out;
}

/// Keeps elements in normal form during arithmetic. An optional filter drops
/// canonical words that cannot contribute to the quantity of interest.
class NormalFormReducer : public WordReducer {
public:
    explicit NormalFormReducer(RelationSystem sys, std::function<bool(const Word&)> keep = {})
        : sys_(std::move(sys)), keep_(std::move(keep)) {
        if (!sys_.normal_form_available()) throw std::logic_error("NormalFormReducer needs a swap-type regime");
    }
    std::optional<std::pair<Word, LaurentPoly>> reduce(const Word& w) const override {
        auto nf = normal_form_word(w, sys_);
        if (keep_ && !keep_(nf.first)) return std::nullopt;
        return nf;
    }
    const RelationSystem& system() const { return sys_; }

private:
    RelationSystem sys_;
    std::function<bool(const Word&)> keep_;
};

inline ReducerPtr make_reducer(const RelationSystem& sys, std::function<bool(const Word&)> keep = {}) {
    return std::make_shared<NormalFormReducer>(sys, std::move(keep));
}

// ---------------------------------------------------------------------------
// Ideal membership

struct MembershipMethod {
    enum class Kind { specialize, exact };
    Kind kind = Kind::specialize;
    std::uint64_t seed = 1;
    int trials = 3;
};

enum class Verdict { in_ideal, probably_in_ideal, not_in_ideal };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::in_ideal: return "in-ideal";
        case Verdict::probably_in_ideal: return "probably-in-ideal";
        case Verdict::not_in_ideal: return "not-in-ideal";
    }
    return "?";
}

struct BlockVerdict {
    int degree = 0;
    std::vector<int> rows, cols;
    Verdict verdict = Verdict::in_ideal;
    int trials = 0;
    std::vector<std::uint64_t> seeds;
    bool trials_disagreed = false;
    std::size_t words = 0, generators = 0;
    /// Residual after reduction (nonempty exactly when not in the ideal).
    std::vector<std::pair<Word, std::string>> witness;
};

struct MembershipReport {
    std::vector<BlockVerdict> blocks;  // ordered by (degree, rows, cols)
    bool in_ideal() const {
        return std::none_of(blocks.begin(), blocks.end(),
                            [](const BlockVerdict& b) { return b.verdict == Verdict::not_in_ideal; });
    }
    const BlockVerdict* first_failure() const {
        for (const auto& b : blocks)
            if (b.verdict == Verdict::not_in_ideal) return &b;
        return nullptr;
    }
};

/// Distinct random nonzero rationals num/den, num and den in [1, 10^9].
inline Assignment random_assignment(const std::vector<Param>& params, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(1, 1000000000L);
    Assignment a;
    std::set<Rational> used;
    for (Param p : params) {
        Rational v;
        do {
            v = Rational(dist(rng), dist(rng));
            v.canonicalize();
        } while (used.count(v));
        used.insert(v);
        a.emplace(p, v);
    }
    return a;
}

namespace detail {

struct BlockProblem {
    std::vector<Word> words;                           // column index -> word
    SparseRow<LaurentPoly> target;                     // the block of x
    std::vector<SparseRow<LaurentPoly>> generators;   // u * r * v rows
};

inline SparseRow<LaurentPoly> to_row(std::map<int, LaurentPoly>& m) {
    SparseRow<LaurentPoly> r;
    for (auto& [k, v] : m)
        if (!v.is_zero()) r.emplace_back(k, std::move(v));
    return r;
}

// Collects the generators u*r*v connected to the target's words. Generators
// outside that component cannot affect membership, so the whole grading
// block is never enumerated.
inline BlockProblem build_block(const std::vector<std::pair<Word, LaurentPoly>>& block,
                                const std::vector<Relator>& rels,
                                const std::unordered_map<std::string, std::vector<std::size_t>>& by_window,
                                std::size_t word_cap) {
    BlockProblem bp;
    std::unordered_map<Word, int> index;
    auto id_of = [&](const Word& w) {
        auto [it, inserted] = index.try_emplace(w, int(bp.words.size()));
        if (inserted) {
            bp.words.push_back(w);
            if (bp.words.size() > word_cap) throw std::length_error("ideal membership: block exceeds word cap");
        }
        return it->second;
    };
    std::map<int, LaurentPoly> t;
    for (const auto& [w, c] : block) t[id_of(w)] += c;
    bp.target = to_row(t);

    std::set<std::tuple<std::size_t, std::size_t, std::string>> seen;
    for (std::size_t next = 0; next < bp.words.size(); ++next) {
        const Word w = bp.words[next];
        for (std::size_t p = 0; p + 1 < w.size(); ++p) {
            auto it = by_window.find(w.substr(p, 2).bytes());
            if (it == by_window.end()) continue;
            Word u = w.substr(0, p), v = w.substr(p + 2);
            for (std::size_t ri : it->second) {
                if (!seen.emplace(p, ri, (u + v).bytes()).second) continue;
                std::map<int, LaurentPoly> g;
                for (const auto& [rw, rc] : rels[ri].terms) g[id_of(u + rw + v)] += rc;
                auto row = to_row(g);
                if (!row.empty()) bp.generators.push_back(std::move(row));
            }
        }
    }
    return bp;
}

template <class S>
SparseRow<S> sorted_row(SparseRow<S> r) {
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
}

inline SparseRow<Rational> specialize_row(const SparseRow<LaurentPoly>& r, const Assignment& a) {
    SparseRow<Rational> out;
    for (const auto& [k, c] : r) {
        Rational v = c.specialize(a);
        if (v != 0) out.emplace_back(k, v);
    }
    return out;
}

}  // namespace detail

/// Decides, per degree and per (row multiset, column multiset) block, whether
/// x lies in the two-sided ideal generated by the regime's relators.
inline MembershipReport is_in_ideal(const Element& x, const RelationSystem& sys, const MembershipMethod& method = {},
                                    std::size_t word_cap = 400000) {
    using Key = std::tuple<int, std::vector<int>, std::vector<int>>;
    std::map<Key, std::vector<std::pair<Word, LaurentPoly>>> blocks;
    for (const auto& [w, c] : x.sorted_terms())
        blocks[Key(int(w.size()), detail::sorted_copy(w.rows()), detail::sorted_copy(w.cols()))].emplace_back(w, c);

    const auto rels = relators(sys);
    std::unordered_map<std::string, std::vector<std::size_t>> by_window;
    for (std::size_t ri = 0; ri < rels.size(); ++ri)
        for (const auto& [w, c] : rels[ri].terms) {
            auto& v = by_window[w.bytes()];
            if (v.empty() || v.back() != ri) v.push_back(ri);
        }

    std::vector<std::pair<Key, std::vector<std::pair<Word, LaurentPoly>>>> work(blocks.begin(), blocks.end());
    MembershipReport report;
    report.blocks.resize(work.size());

    parallel_for(work.size(), [&](std::size_t bi) {
        const auto& [key, terms] = work[bi];
        BlockVerdict& bv = report.blocks[bi];
        bv.degree = std::get<0>(key);
        bv.rows = std::get<1>(key);
        bv.cols = std::get<2>(key);
        if (bv.degree < 2) {
            bv.verdict = Verdict::not_in_ideal;
            for (const auto& [w, c] : terms) bv.witness.emplace_back(w, c.to_string());
            return;
        }
        auto bp = detail::build_block(terms, rels, by_window, word_cap);
        bv.words = bp.words.size();
        bv.generators = bp.generators.size();

        auto witness_from = [&](const auto& residual) {
            using Ops = ScalarOps<typename std::decay_t<decltype(residual)>::value_type::second_type>;
            for (std::size_t t = 0; t < residual.size() && t < 8; ++t)
                bv.witness.emplace_back(bp.words[residual[t].first], Ops::str(residual[t].second));
        };

        if (method.kind == MembershipMethod::Kind::exact) {
            SpanTester<LaurentPoly> span;
            for (auto& g : bp.generators) span.add(g);
            auto res = span.residual(bp.target);
            bv.trials = 0;
            bv.verdict = res.empty() ? Verdict::in_ideal : Verdict::not_in_ideal;
            witness_from(res);
            return;
        }

        // Parameters present in this block's problem.
        std::set<Param> present;
        auto note = [&](const SparseRow<LaurentPoly>& r) {
            for (const auto& [k, c] : r)
                for (Param p : c.params()) present.insert(p);
        };
        note(bp.target);
        for (const auto& g : bp.generators) note(g);
        std::vector<Param> params(present.begin(), present.end());
        const int trials = params.empty() ? 1 : std::max(1, method.trials);

        int in_count = 0;
        SparseRow<Rational> first_residual;
        bool have_residual = false;
        for (int t = 0; t < trials; ++t) {
            std::uint64_t seed = method.seed + std::uint64_t(t);
            bv.seeds.push_back(seed);
            Assignment a = random_assignment(params, seed);
            SpanTester<Rational> span;
            for (const auto& g : bp.generators) {
                auto r = detail::specialize_row(g, a);
                if (!r.empty()) span.add(std::move(r));
            }
            auto res = span.residual(detail::specialize_row(bp.target, a));
            if (res.empty()) {
                ++in_count;
            } else if (!have_residual) {
                first_residual = res;
                have_residual = true;
            }
        }
        bv.trials = trials;
        if (in_count == trials) {
            bv.verdict = params.empty() ? Verdict::in_ideal : Verdict::probably_in_ideal;
        } else {
            bv.verdict = Verdict::not_in_ideal;
            bv.trials_disagreed = in_count > 0;
            witness_from(first_residual);
        }
    });
    return report;
}

}  // namespace ncsylv

#endif  // NCSYLV_RELATIONS_HPP
