#ifndef NCSYLV_PATHS_HPP
#define NCSYLV_PATHS_HPP

// Lattice-path combinatorics on words: path decomposition through a height
// threshold, balanced/ordered/path sequences, the bijection phi from ordered
// sequences to path sequences, disjoint cycle decompositions, and the
// polynomials e_mu(beta).

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "coeff.hpp"
#include "element.hpp"
#include "word.hpp"

namespace ncsylv {

using TypeVector = std::vector<int>;

inline bool is_lattice_path(const Word& w) {
    for (std::size_t p = 1; p < w.size(); ++p)
        if (w[p - 1].col() != w[p].row()) return false;
    return true;
}

/// Splits a lattice path with endpoints above n at every intermediate point
/// whose height exceeds n. Each segment starts and ends above n and stays at
/// or below n in between.
inline std::vector<Word> decompose_path(const Word& path, int n) {
    if (path.empty()) throw std::invalid_argument("decompose_path: empty path");
    if (!is_lattice_path(path)) throw std::invalid_argument("decompose_path: not a lattice path");
    if (path[0].row() <= n || path[path.size() - 1].col() <= n)
        throw std::invalid_argument("decompose_path: start and end heights must exceed n");
    std::vector<Word> out;
    Word cur;
    for (std::size_t p = 0; p < path.size(); ++p) {
        cur.push_back(path[p]);
        if (path[p].col() > n) {
            out.push_back(cur);
            cur = Word();
        }
    }
    return out;
}

/// (k_1, ..., k_m): number of steps starting at each height. Throws if some
/// height is started and ended a different number of times.
inline TypeVector type_of(const Word& w, int m) {
    TypeVector starts(m, 0), ends(m, 0);
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (w[p].row() > m || w[p].col() > m) throw std::out_of_range("type_of: height exceeds m");
        ++starts[w[p].row() - 1];
        ++ends[w[p].col() - 1];
    }
    if (starts != ends) throw std::invalid_argument("type_of: sequence is not balanced: " + w.to_string());
    return starts;
}

inline bool is_balanced(const Word& w) {
    std::map<int, int> net;
    for (std::size_t p = 0; p < w.size(); ++p) {
        ++net[w[p].row()];
        --net[w[p].col()];
    }
    return std::all_of(net.begin(), net.end(), [](const auto& kv) { return kv.second == 0; });
}

inline bool is_ordered(const Word& w) {
    for (std::size_t p = 1; p < w.size(); ++p)
        if (w[p - 1].row() > w[p].row()) return false;
    return is_balanced(w);
}

/// A concatenation of closed paths at levels h_1 < h_2 < ..., the path at
/// level h staying at or above h.
inline bool is_p_sequence(const Word& w) {
    std::size_t p = 0;
    int prev_level = 0;
    while (p < w.size()) {
        int level = w[p].row();
        if (level <= prev_level) return false;
        int cur = level;
        while (p < w.size() && w[p].row() == cur) {
            cur = w[p].col();
            if (cur < level) return false;
            ++p;
        }
        if (cur != level) return false;
        prev_level = level;
    }
    return true;
}

namespace detail {

inline void distinct_arrangements(std::vector<int> multiset, const std::function<void(const std::vector<int>&)>& f) {
    std::sort(multiset.begin(), multiset.end());
    do {
        f(multiset);
    } while (std::next_permutation(multiset.begin(), multiset.end()));
}

inline std::vector<int> expand_type(const TypeVector& t) {
    std::vector<int> v;
    for (std::size_t h = 0; h < t.size(); ++h)
        for (int c = 0; c < t[h]; ++c) v.push_back(int(h) + 1);
    return v;
}

}  // namespace detail

enum class SequenceKind { ordered, path, balanced };

/// All sequences of the given type and kind, sorted, without duplicates.
/// height_cap restricts every height to at most the cap.
inline std::vector<Word> enumerate_sequences(const TypeVector& t, SequenceKind kind,
                                             std::optional<int> height_cap = std::nullopt, int max_size = 10) {
    int total = 0;
    for (int k : t) {
        if (k < 0) throw std::invalid_argument("enumerate_sequences: negative count");
        total += k;
    }
    if (total > max_size) throw std::length_error("enumerate_sequences: size exceeds enumeration cap");
    if (height_cap)
        for (std::size_t h = std::size_t(*height_cap); h < t.size(); ++h)
            if (t[h] > 0) return {};
    auto heights = detail::expand_type(t);
    std::vector<Word> out;
    if (kind == SequenceKind::ordered) {
        detail::distinct_arrangements(heights, [&](const std::vector<int>& ends) {
            out.push_back(Word::from_indices(heights, ends));
        });
    } else {
        detail::distinct_arrangements(heights, [&](const std::vector<int>& starts) {
            detail::distinct_arrangements(heights, [&](const std::vector<int>& ends) {
                Word w = Word::from_indices(starts, ends);
                if (kind == SequenceKind::balanced || is_p_sequence(w)) out.push_back(std::move(w));
            });
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Length of the longest prefix that is part of a path sequence: consecutive
/// steps chain, except that a step may start higher than the previous one
/// ended provided the whole remainder stays at or above that height.
inline std::size_t p_prefix_length(const std::vector<Letter>& s) {
    std::vector<int> suffix_min(s.size() + 1, kMaxIndex + 1);
    for (std::size_t p = s.size(); p-- > 0;)
        suffix_min[p] = std::min({suffix_min[p + 1], s[p].row(), s[p].col()});
    int prev_end = 0;
    for (std::size_t p = 0; p < s.size(); ++p) {
        int start = s[p].row();
        bool chained = p > 0 && start == prev_end;
        bool jump = start > prev_end && suffix_min[p] >= start;
        if (!chained && !jump) return p;
        prev_end = s[p].col();
    }
    return s.size();
}

/// The bijection from ordered sequences to path sequences: repeatedly take the
/// first step after the valid prefix that starts at the prefix's final height
/// and switch it leftwards to the end of the prefix.
inline Word phi(const Word& alpha) {
    if (!is_ordered(alpha)) throw std::invalid_argument("phi: input is not an ordered sequence");
    auto s = alpha.letters();
    for (;;) {
        std::size_t x = p_prefix_length(s);
        if (x == s.size()) break;
        int height = s[x - 1].col();
        std::size_t y = x;
        while (y < s.size() && s[y].row() != height) ++y;
        if (y == s.size()) throw std::logic_error("phi: no step leaves height " + std::to_string(height));
        std::rotate(s.begin() + std::ptrdiff_t(x), s.begin() + std::ptrdiff_t(y), s.begin() + std::ptrdiff_t(y) + 1);
    }
    return Word(s);
}

struct Cycle {
    Word steps;
    std::set<int> heights;  // starting heights
    bool high = false;      // contains a height above n
};

struct CycleDecomp {
    std::vector<Cycle> cycles;
    Word concatenation() const {
        Word w;
        for (const auto& c : cycles) w += c.steps;
        return w;
    }
    /// 1-based indices of cycles containing a height above n.
    std::vector<int> high_indices() const {
        std::vector<int> j;
        for (std::size_t t = 0; t < cycles.size(); ++t)
            if (cycles[t].high) j.push_back(int(t) + 1);
        return j;
    }
    std::string to_string() const {
        std::string out;
        for (const auto& c : cycles) out += "(" + c.steps.to_string() + ")";
        return out;
    }
};

inline bool disjoint(const Cycle& a, const Cycle& b) {
    for (int h : a.heights)
        if (b.heights.count(h)) return false;
    return true;
}

/// Disjoint cycle decomposition of a path sequence: follow the path until a
/// height repeats, pull out the cycle that closed, and continue with the rest.
inline CycleDecomp cycles_of_p_sequence(const Word& p, int n) {
    auto rest = p.letters();
    CycleDecomp d;
    while (!rest.empty()) {
        std::vector<int> seen{rest[0].row()};
        std::size_t t = 0, s = 0;
        bool found = false;
        for (; t < rest.size(); ++t) {
            if (t > 0 && rest[t].row() != rest[t - 1].col())
                throw std::logic_error("cycle decomposition: sequence breaks before closing a cycle");
            int h = rest[t].col();
            auto it = std::find(seen.begin(), seen.end(), h);
            if (it != seen.end()) {
                s = std::size_t(it - seen.begin());
                found = true;
                break;
            }
            seen.push_back(h);
        }
        if (!found) throw std::logic_error("cycle decomposition: no cycle closes");
        Cycle c;
        for (std::size_t q = s; q <= t; ++q) {
            c.steps.push_back(rest[q]);
            c.heights.insert(rest[q].row());
            if (rest[q].row() > n) c.high = true;
        }
        d.cycles.push_back(std::move(c));
        rest.erase(rest.begin() + std::ptrdiff_t(s), rest.begin() + std::ptrdiff_t(t) + 1);
    }
    return d;
}

/// Cycle decomposition of an ordered sequence (through phi) or of a path sequence.
inline CycleDecomp cycle_decomposition(const Word& alpha, int n) {
    if (!is_balanced(alpha)) throw std::invalid_argument("cycle_decomposition: sequence is not balanced");
    Word p = is_p_sequence(alpha) ? alpha : phi(alpha);
    return cycles_of_p_sequence(p, n);
}

/// Reading of the third condition on permutations in e_mu(beta).
enum class ThirdCondition { later_cycle, literal };

struct EmuTerm {
    std::vector<int> pi;  // 1-based one-line notation
    int descents = 0;
};

/// Permutations contributing to e_mu(beta), with d(pi) for each.
inline std::vector<EmuTerm> e_mu_terms(const CycleDecomp& d, ThirdCondition cond = ThirdCondition::later_cycle,
                                       int max_cycles = 8) {
    const int k = int(d.cycles.size());
    if (k > max_cycles) throw std::length_error("e_mu: too many cycles for brute force");
    auto high = [&](int v) { return d.cycles[v].high; };
    auto dis = [&](int a, int b) { return disjoint(d.cycles[a], d.cycles[b]); };
    std::vector<EmuTerm> out;
    std::vector<int> pi;
    std::vector<bool> used(k, false);

    std::function<void()> rec = [&] {
        if (int(pi.size()) == k) {
            // (2) every position has a high cycle at or after it.
            for (int a = 0; a < k; ++a) {
                int b = a;
                while (b < k && !high(pi[b])) ++b;
                if (b == k) return;
                // (3) the next high cycle is reached through a shared height.
                if (b > a) {
                    bool ok = false;
                    if (cond == ThirdCondition::later_cycle) {
                        for (int c = a + 1; c <= b && !ok; ++c) ok = !dis(pi[a], pi[c]);
                    } else {
                        ok = !dis(pi[a], pi[b]);
                    }
                    if (!ok) return;
                }
            }
            // (4) descents only at high cycles.
            for (int a = 0; a + 1 < k; ++a)
                if (pi[a] > pi[a + 1] && !high(pi[a])) return;
            EmuTerm t;
            std::vector<int> sub;
            for (int v : pi) {
                t.pi.push_back(v + 1);
                if (high(v)) sub.push_back(v);
            }
            for (std::size_t a = 0; a + 1 < sub.size(); ++a)
                if (sub[a] > sub[a + 1]) ++t.descents;
            out.push_back(std::move(t));
            return;
        }
        for (int v = 0; v < k; ++v) {
            if (used[v]) continue;
            // (1) inverted pairs must be disjoint cycles.
            bool ok = true;
            for (int u : pi)
                if (u > v && !dis(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            used[v] = true;
            pi.push_back(v);
            rec();
            pi.pop_back();
            used[v] = false;
        }
    };
    rec();
    return out;
}

/// The ordered sequence a_{lambda,mu} with lambda the sorted rearrangement of mu.
inline Word ordered_word(const std::vector<int>& mu) {
    std::vector<int> lambda = mu;
    std::sort(lambda.begin(), lambda.end());
    return Word::from_indices(lambda, mu);
}

inline BetaPoly e_mu(const CycleDecomp& d, ThirdCondition cond = ThirdCondition::later_cycle) {
    int l = int(d.high_indices().size());
    BetaPoly total;
    for (const auto& t : e_mu_terms(d, cond)) total += beta_binomial(l, t.descents);
    return total;
}

/// Coefficient of a_{lambda,mu} in det(I - C)^{-beta}.
inline BetaPoly e_mu(const std::vector<int>& mu, int n, ThirdCondition cond = ThirdCondition::later_cycle) {
    return e_mu(cycle_decomposition(ordered_word(mu), n), cond);
}

/// Sequences with non-decreasing starting heights whose starts are
/// {r^{k_r}} + {i, j} and whose ends are {r^{k_r}} + ends_extra, for r <= n.
inline std::vector<Word> enumerate_constrained(int n, int i, int j, const std::vector<int>& ends_extra,
                                               const std::vector<int>& counts) {
    if (int(counts.size()) != n) throw std::invalid_argument("enumerate_constrained: need one count per low height");
    if (i <= n || j <= n || i == j) throw std::invalid_argument("enumerate_constrained: need distinct i, j > n");
    for (int e : ends_extra)
        if (e <= n) throw std::invalid_argument("enumerate_constrained: end heights must exceed n");
    std::vector<int> starts, ends;
    for (int r = 1; r <= n; ++r) {
        if (counts[r - 1] < 0) throw std::invalid_argument("enumerate_constrained: negative count");
        for (int c = 0; c < counts[r - 1]; ++c) {
            starts.push_back(r);
            ends.push_back(r);
        }
    }
    starts.push_back(i);
    starts.push_back(j);
    std::sort(starts.begin(), starts.end());
    for (int e : ends_extra) ends.push_back(e);
    std::vector<Word> out;
    detail::distinct_arrangements(ends, [&](const std::vector<int>& e) { out.push_back(Word::from_indices(starts, e)); });
    std::sort(out.begin(), out.end());
    return out;
}

/// Steps i->., j->. with both ending at k.
inline std::vector<Word> enumerate_constrained(int n, int i, int j, int k, const std::vector<int>& counts) {
    return enumerate_constrained(n, i, j, std::vector<int>{k, k}, counts);
}

/// Steps i->., j->. ending at k and l (k != l).
inline std::vector<Word> enumerate_constrained(int n, int i, int j, int k, int l, const std::vector<int>& counts) {
    if (k == l) throw std::invalid_argument("enumerate_constrained: k and l must differ");
    return enumerate_constrained(n, i, j, std::vector<int>{k, l}, counts);
}

/// For each start height in turn: moves the first remaining step leaving that
/// height to the front of the unprocessed part, then the first later step
/// leaving the height just reached, and so on until a height above n is
/// reached. The remaining steps keep their order.
inline Word switch_paths_forward(const Word& w, const std::vector<int>& starts, int n) {
    auto s = w.letters();
    std::size_t pos = 0;
    for (int start : starts) {
        int height = start;
        do {
            std::size_t y = pos;
            while (y < s.size() && s[y].row() != height) ++y;
            if (y == s.size())
                throw std::invalid_argument("switch_paths_forward: no step leaves height " + std::to_string(height));
            std::rotate(s.begin() + std::ptrdiff_t(pos), s.begin() + std::ptrdiff_t(y), s.begin() + std::ptrdiff_t(y) + 1);
            height = s[pos++].col();
        } while (height <= n);
    }
    return Word(s);
}

/// All type vectors of length m with total at most max_total.
inline std::vector<TypeVector> types_up_to(int m, int max_total) {
    std::vector<TypeVector> out;
    TypeVector t(m, 0);
    std::function<void(int, int)> rec = [&](int h, int left) {
        if (h == m) {
            out.push_back(t);
            return;
        }
        for (int c = 0; c <= left; ++c) {
            t[h] = c;
            rec(h + 1, left - c);
        }
        t[h] = 0;
    };
    rec(0, max_total);
    return out;
}

/// Sum of all ordered sequences with heights at most cap and length at most
/// order, each with coefficient 1.
inline Element o_sequence_sum(int cap, int order, ReducerPtr reducer = nullptr) {
    Element s(order, reducer);
    for (const auto& t : types_up_to(cap, order))
        for (const auto& w : enumerate_sequences(t, SequenceKind::ordered, std::nullopt, order))
            s.add_term(w, LaurentPoly(1));
    return s;
}

}  // namespace ncsylv

#endif  // NCSYLV_PATHS_HPP
