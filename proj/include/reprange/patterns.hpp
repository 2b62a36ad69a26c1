#pragma once

/**
 * @file patterns.hpp
 * @brief Occurrences of 321 and 3412, and the pairs that mark straddling ones.
 *
 * Straddling at k, with positions i1 < i2 < ... and values j1 < j2 < ...:
 *
 *   321  in position: i1 <= k < i3,             position pair (i1, i3)
 *   321  in value:    j1 <= k < j3,             value pair    (j3, j1)
 *   3412 in position: i1 < i2 <= k < i3 < i4,   position pair (i2, i3)
 *   3412 in value:    j1 < j2 <= k < j3 < j4,   value pair    (j4, j1)
 *
 * A position pair always records (position of largest, position of smallest);
 * a value pair records (largest, smallest).
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "reprange/permutation.hpp"

namespace reprange {

enum class PatternKind { P321, P3412 };

inline const char* to_string(PatternKind kind) { return kind == PatternKind::P321 ? "321" : "3412"; }

struct PatternOccurrence {
    PatternKind kind = PatternKind::P321;
    std::vector<int> positions; ///< strictly increasing, 1-based
    std::vector<int> values;    ///< w at those positions

    /// Values as a digit/comma string, e.g. "5734".
    std::string values_string() const {
        std::string s;
        const bool digits = std::all_of(values.begin(), values.end(), [](int v) { return v <= 9; });
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (!digits && i > 0) s += ',';
            s += std::to_string(values[i]);
        }
        return s;
    }

    friend bool operator==(const PatternOccurrence&, const PatternOccurrence&) = default;
};

enum class Axis { position, value };

struct StraddlePair {
    Axis axis = Axis::position;
    int k = 0;
    int first = 0;
    int second = 0;

    friend bool operator==(const StraddlePair&, const StraddlePair&) = default;
    friend auto operator<=>(const StraddlePair&, const StraddlePair&) = default;
};

/// Decreasing triples, lexicographic by positions.
inline std::vector<PatternOccurrence> occurrences_321(const Permutation& w) {
    std::vector<PatternOccurrence> out;
    const int n = w.degree();
    for (int a = 1; a <= n; ++a) {
        if (w(a) < 3) continue;
        for (int b = a + 1; b <= n; ++b) {
            if (w(b) >= w(a) || w(b) < 2) continue;
            for (int c = b + 1; c <= n; ++c) {
                if (w(c) < w(b)) {
                    out.push_back({PatternKind::P321, {a, b, c}, {w(a), w(b), w(c)}});
                }
            }
        }
    }
    return out;
}

/// Quadruples with w(i3) < w(i4) < w(i1) < w(i2), lexicographic by positions.
inline std::vector<PatternOccurrence> occurrences_3412(const Permutation& w) {
    std::vector<PatternOccurrence> out;
    const int n = w.degree();
    for (int a = 1; a <= n; ++a) {
        if (w(a) < 3) continue;
        for (int b = a + 1; b <= n; ++b) {
            if (w(b) <= w(a)) continue;
            for (int c = b + 1; c <= n; ++c) {
                if (w(c) >= w(a)) continue;
                for (int d = c + 1; d <= n; ++d) {
                    if (w(d) > w(c) && w(d) < w(a)) {
                        out.push_back({PatternKind::P3412, {a, b, c, d}, {w(a), w(b), w(c), w(d)}});
                    }
                }
            }
        }
    }
    return out;
}

inline std::vector<PatternOccurrence> all_occurrences(const Permutation& w) {
    auto out = occurrences_321(w);
    auto more = occurrences_3412(w);
    out.insert(out.end(), more.begin(), more.end());
    return out;
}

inline std::size_t total_pattern_count(const Permutation& w) {
    return occurrences_321(w).size() + occurrences_3412(w).size();
}

namespace detail {

inline std::vector<int> sorted_values(const PatternOccurrence& occ) {
    auto v = occ.values;
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace detail

inline bool straddles_position(const PatternOccurrence& occ, int k) {
    const auto& p = occ.positions;
    if (occ.kind == PatternKind::P321) return p[0] <= k && k < p[2];
    return p[1] <= k && k < p[2];
}

inline bool straddles_value(const PatternOccurrence& occ, int k) {
    const auto j = detail::sorted_values(occ);
    if (occ.kind == PatternKind::P321) return j[0] <= k && k < j[2];
    return j[1] <= k && k < j[2];
}

inline bool straddles_both(const PatternOccurrence& occ, int k) {
    return straddles_position(occ, k) && straddles_value(occ, k);
}

/// Marker of a position-straddling occurrence; caller checks straddles_position first.
inline StraddlePair position_pair_of(const PatternOccurrence& occ, int k) {
    const auto& p = occ.positions;
    if (occ.kind == PatternKind::P321) return {Axis::position, k, p[0], p[2]};
    return {Axis::position, k, p[1], p[2]};
}

inline StraddlePair value_pair_of(const PatternOccurrence& occ, int k) {
    const auto j = detail::sorted_values(occ);
    return {Axis::value, k, j.back(), j.front()};
}

/// Distinct position pairs at k, ordered by (first, second).
inline std::vector<StraddlePair> position_pairs(const Permutation& w, int k) {
    Permutation::check_letter(k, w.degree());
    std::set<StraddlePair> pairs;
    for (const auto& occ : all_occurrences(w)) {
        if (straddles_position(occ, k)) pairs.insert(position_pair_of(occ, k));
    }
    return {pairs.begin(), pairs.end()};
}

/// Distinct value pairs at k, ordered by (first, second).
inline std::vector<StraddlePair> value_pairs(const Permutation& w, int k) {
    Permutation::check_letter(k, w.degree());
    std::set<StraddlePair> pairs;
    for (const auto& occ : all_occurrences(w)) {
        if (straddles_value(occ, k)) pairs.insert(value_pair_of(occ, k));
    }
    return {pairs.begin(), pairs.end()};
}

inline std::size_t pos_pair_count(const Permutation& w, int k) { return position_pairs(w, k).size(); }

inline std::size_t val_pair_count(const Permutation& w, int k) { return value_pairs(w, k).size(); }

/// Every occurrence that `pair` marks, in position order.
inline std::vector<PatternOccurrence> occurrences_marked_by(const Permutation& w, const StraddlePair& pair) {
    std::vector<PatternOccurrence> out;
    for (auto& occ : all_occurrences(w)) {
        if (pair.axis == Axis::position) {
            if (straddles_position(occ, pair.k) && position_pair_of(occ, pair.k) == pair) out.push_back(occ);
        } else if (straddles_value(occ, pair.k) && value_pair_of(occ, pair.k) == pair) {
            out.push_back(occ);
        }
    }
    return out;
}

/// Occurrences straddling k along `axis`, 321s first then 3412s.
inline std::vector<PatternOccurrence> straddling_occurrences(const Permutation& w, int k, Axis axis) {
    Permutation::check_letter(k, w.degree());
    std::vector<PatternOccurrence> out;
    for (auto& occ : all_occurrences(w)) {
        if (axis == Axis::position ? straddles_position(occ, k) : straddles_value(occ, k)) out.push_back(occ);
    }
    return out;
}

} // namespace reprange
