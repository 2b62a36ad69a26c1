#pragma once

/**
 * @file theorems.hpp
 * @brief Closed forms and certificates for sigma_k repetition.
 *
 *  - expatriation(w, k) is the exact minimum number of sigma_k letters, and
 *    minimal_witness builds a reduced word attaining it.
 *  - has_multiple decides max_k(w) > 1 from straddling patterns.
 *  - max_upper_bound bounds max_k(w) by straddling pair counts.
 *  - fixed_repetition_criterion decides max_k(w) > min_k(w).
 */

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "reprange/patterns.hpp"
#include "reprange/permutation.hpp"
#include "reprange/reduced_words.hpp"

namespace reprange {

/// |{w(1..k)} ∩ {k+1..n}|, cross-checked against |{w(k+1..n)} ∩ {1..k}|.
inline int expatriation(const Permutation& w, int k) {
    Permutation::check_letter(k, w.degree());
    int large_in_front = 0;
    for (int i = 1; i <= k; ++i) {
        if (w(i) > k) ++large_in_front;
    }
    int small_in_back = 0;
    for (int i = k + 1; i <= w.degree(); ++i) {
        if (w(i) <= k) ++small_in_back;
    }
    if (large_in_front != small_in_back) {
        throw std::logic_error("expatriation counts disagree for " + w.to_string());
    }
    return large_in_front;
}

inline int min_sigma_count(const Permutation& w, int k) { return expatriation(w, k); }

struct WitnessDecomposition {
    Permutation u;
    Permutation v;
    std::vector<Word> t_words; ///< t_i = sigma_{k+i} sigma_{k+i-1} ... sigma_{k+i-m+1}
    Permutation d;
    ReducedWord u_word;
    ReducedWord v_word;
    ReducedWord d_word;
    ReducedWord assembled;
};

/**
 * Factor w = u v t_0 ... t_{m-1} d with m = expat_k(w) and sigma_k used only
 * inside the t blocks.
 *
 * u rearranges the first k positions: the small values that stay in front, in
 * increasing order, then the small values that leave (Y), increasing. v
 * rearranges the last n-k positions: the large values that move in front (X),
 * increasing, then the large values that stay. d fixes both blocks setwise.
 */
inline WitnessDecomposition minimal_witness(const Permutation& w, int k) {
    const int n = w.degree();
    const int m = expatriation(w, k);

    std::vector<bool> in_front(static_cast<std::size_t>(n + 1), false);
    for (int i = 1; i <= k; ++i) in_front[static_cast<std::size_t>(w(i))] = true;

    std::vector<int> u_line;
    std::vector<int> leaving; // Y
    for (int x = 1; x <= k; ++x) {
        (in_front[static_cast<std::size_t>(x)] ? u_line : leaving).push_back(x);
    }
    u_line.insert(u_line.end(), leaving.begin(), leaving.end());

    std::vector<int> v_line;
    std::vector<int> staying;
    for (int x = k + 1; x <= n; ++x) {
        (in_front[static_cast<std::size_t>(x)] ? v_line : staying).push_back(x);
    }
    v_line.insert(v_line.end(), staying.begin(), staying.end());

    for (int x = k + 1; x <= n; ++x) u_line.push_back(x);
    std::vector<int> v_full;
    for (int x = 1; x <= k; ++x) v_full.push_back(x);
    v_full.insert(v_full.end(), v_line.begin(), v_line.end());

    auto u = Permutation::from_one_line(u_line);
    auto v = Permutation::from_one_line(v_full);

    std::vector<Word> t_words;
    Word t_letters;
    for (int i = 0; i < m; ++i) {
        Word t;
        for (int a = k + i; a >= k + i - (m - 1); --a) t.push_back(a);
        t_letters.insert(t_letters.end(), t.begin(), t.end());
        t_words.push_back(std::move(t));
    }

    const auto prefix = u * v * product_of_word(t_letters, n);
    auto d = prefix.inverse() * w;

    auto u_word = first_reduced_word(u);
    auto v_word = first_reduced_word(v);
    auto d_word = first_reduced_word(d);

    Word all = u_word.letters;
    all.insert(all.end(), v_word.letters.begin(), v_word.letters.end());
    all.insert(all.end(), t_letters.begin(), t_letters.end());
    all.insert(all.end(), d_word.letters.begin(), d_word.letters.end());

    return WitnessDecomposition{std::move(u),      std::move(v),      std::move(t_words),
                                std::move(d),      std::move(u_word), std::move(v_word),
                                std::move(d_word), ReducedWord{std::move(all), n}};
}

/// True iff some 321 or 3412 occurrence straddles k in both position and value.
inline bool has_multiple(const Permutation& w, int k) {
    Permutation::check_letter(k, w.degree());
    for (const auto& occ : all_occurrences(w)) {
        if (straddles_both(occ, k)) return true;
    }
    return false;
}

struct MaxUpperBound {
    int value = 0;
    /// When false, max_k(w) is 0 and `value` is vacuous.
    bool k_in_support = false;
};

/// min(PosPair_k, ValPair_k) + 1.
inline MaxUpperBound max_upper_bound(const Permutation& w, int k) {
    const auto pos = pos_pair_count(w, k);
    const auto val = val_pair_count(w, k);
    return {static_cast<int>(std::min(pos, val)) + 1, in_support(w, k)};
}

struct FixedCriterionWitness {
    int i = 0; ///< position of the pattern's largest value
    int j = 0; ///< position of its smallest value
    PatternOccurrence occurrence;
    std::vector<int> left;  ///< {w(q) > w(i) : i < q <= k}, in position order
    std::vector<int> right; ///< {w(q) < w(j) : k < q < j}, in position order
};

/**
 * Search 321 occurrences straddling position k for a position pair (i, j)
 * whose left and right sets are equal in size and each increasing in w.
 * Present iff max_k(w) > min_k(w).
 */
inline std::optional<FixedCriterionWitness> fixed_repetition_criterion(const Permutation& w, int k) {
    Permutation::check_letter(k, w.degree());
    for (const auto& occ : occurrences_321(w)) {
        if (!straddles_position(occ, k)) continue;
        const int i = occ.positions[0];
        const int j = occ.positions[2];
        FixedCriterionWitness cand{i, j, occ, {}, {}};
        for (int q = i + 1; q <= k; ++q) {
            if (w(q) > w(i)) cand.left.push_back(w(q));
        }
        for (int q = k + 1; q < j; ++q) {
            if (w(q) < w(j)) cand.right.push_back(w(q));
        }
        if (cand.left.size() == cand.right.size() && std::is_sorted(cand.left.begin(), cand.left.end()) &&
            std::is_sorted(cand.right.begin(), cand.right.end())) {
            return cand;
        }
    }
    return std::nullopt;
}

/// v ⋖ w in Bruhat order: w = v t for a transposition t and l(w) = l(v) + 1.
inline bool bruhat_covers(const Permutation& v, const Permutation& w) {
    if (v.degree() != w.degree()) {
        throw std::invalid_argument("degree mismatch: " + std::to_string(v.degree()) + " vs " +
                                    std::to_string(w.degree()));
    }
    if (w.length() != v.length() + 1) return false;
    const int n = v.degree();
    int first = 0;
    int second = 0;
    int diffs = 0;
    for (int i = 1; i <= n; ++i) {
        if (v(i) != w(i)) {
            if (++diffs > 2) return false;
            (diffs == 1 ? first : second) = i;
        }
    }
    return diffs == 2 && v(first) == w(second) && v(second) == w(first);
}

struct LongElementProfile {
    int min = 0;       ///< min{k, n-k}
    int bound = 0;     ///< k(n-k)
    int pos_pairs = 0; ///< (k-1)(n-k) + n-k-1
};

inline LongElementProfile long_element_profile(int n, int k) {
    if (n < 3) throw std::invalid_argument("long element profile needs n >= 3");
    Permutation::check_letter(k, n);
    return {std::min(k, n - k), k * (n - k), (k - 1) * (n - k) + n - k - 1};
}

} // namespace reprange
