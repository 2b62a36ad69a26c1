#pragma once

/**
 * @file verify.hpp
 * @brief Exhaustive sweeps over S_n checking each closed form against the
 * memoized min/max recursion (or, for `oracle`, the recursion against full
 * enumeration of reduced words).
 *
 * Permutations are split into contiguous lexicographic rank ranges, one per
 * worker. Each worker owns its RangeMemo for the duration of one degree.
 * Failures are sorted before they are returned, so reports do not depend on
 * the worker count.
 */

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "reprange/patterns.hpp"
#include "reprange/permutation.hpp"
#include "reprange/reduced_words.hpp"
#include "reprange/theorems.hpp"

namespace reprange {

enum class Check { min, max_gt_1, max_bound, fixed, lemma1, witness, oracle, long_element, bruhat_examples };

struct CheckInfo {
    Check id;
    std::string_view name;
    int max_degree; ///< refuse sweeps beyond this
};

/// Degree caps: the DP-backed sweeps stop at 7, full enumeration of R(w) at 6,
/// formula and pair-count sweeps at 8.
inline constexpr std::array<CheckInfo, 9> kChecks{{
    {Check::min, "min", 7},
    {Check::max_gt_1, "max_gt_1", 7},
    {Check::max_bound, "max_bound", 7},
    {Check::fixed, "fixed", 7},
    {Check::lemma1, "lemma1", 7},
    {Check::witness, "witness", 7},
    {Check::oracle, "oracle", 6},
    {Check::long_element, "long_element", 8},
    {Check::bruhat_examples, "bruhat_examples", 8},
}};

inline constexpr int kMaxSweepDegree = 8;

inline const CheckInfo& info(Check c) {
    return *std::find_if(kChecks.begin(), kChecks.end(), [c](const CheckInfo& i) { return i.id == c; });
}

inline std::optional<Check> parse_check(std::string_view name) {
    for (const auto& i : kChecks) {
        if (i.name == name) return i.id;
    }
    return std::nullopt;
}

/// Raised when a requested sweep exceeds its degree cap.
class SweepRefused : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Failure {
    Permutation w;
    int k = 0;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string theorem_id;
    std::vector<int> degree_range;
    std::uint64_t cases_checked = 0;
    std::vector<Failure> failures;
    std::chrono::milliseconds elapsed{0};

    bool passed() const noexcept { return failures.empty(); }
};

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

/// The permutation of [1, n] with the given lexicographic rank.
inline Permutation unrank(int n, std::uint64_t rank) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> out;
    out.reserve(pool.size());
    for (int i = n; i >= 1; --i) {
        const auto block = factorial(i - 1);
        const auto idx = static_cast<std::size_t>(rank / block);
        rank %= block;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation::from_one_line(out);
}

namespace detail {

inline std::string str(bool b) { return b ? "true" : "false"; }
inline std::string str(int v) { return std::to_string(v); }
inline std::string str(std::size_t v) { return std::to_string(v); }
inline std::string str(const std::string& s) { return s; }

template <class T>
void expect_eq(std::vector<Failure>& out, const Permutation& w, int k, const T& expected, const T& actual) {
    if (!(expected == actual)) out.push_back({w, k, str(expected), str(actual)});
}

/// Runs the per-(w, k) checks for one permutation.
inline void check_permutation(Check c, const Permutation& w, RangeMemo& memo, std::vector<Failure>& out) {
    const int n = w.degree();

    if (c == Check::oracle) {
        std::vector<int> lo(static_cast<std::size_t>(n), -1);
        std::vector<int> hi(static_cast<std::size_t>(n), -1);
        for (const auto& word : enumerate_reduced_words(w)) {
            for (int k = 1; k < n; ++k) {
                const auto cnt = static_cast<int>(word.count(k));
                auto& l = lo[static_cast<std::size_t>(k)];
                auto& h = hi[static_cast<std::size_t>(k)];
                l = l < 0 ? cnt : std::min(l, cnt);
                h = std::max(h, cnt);
            }
        }
        for (int k = 1; k < n; ++k) {
            const auto r = memo.range(w, k);
            const std::string expected = str(lo[static_cast<std::size_t>(k)]) + ".." + str(hi[static_cast<std::size_t>(k)]);
            const std::string actual = str(r.min_count) + ".." + str(r.max_count);
            expect_eq(out, w, k, expected, actual);
        }
        return;
    }

    for (int k = 1; k < n; ++k) {
        switch (c) {
        case Check::min:
            expect_eq(out, w, k, memo.range(w, k).min_count, min_sigma_count(w, k));
            break;
        case Check::max_gt_1:
            expect_eq(out, w, k, memo.range(w, k).max_count > 1, has_multiple(w, k));
            break;
        case Check::max_bound: {
            const auto r = memo.range(w, k);
            const auto b = max_upper_bound(w, k);
            if (b.k_in_support && r.max_count > b.value) {
                out.push_back({w, k, "max <= " + str(b.value), "max = " + str(r.max_count)});
            }
            break;
        }
        case Check::fixed: {
            const auto r = memo.range(w, k);
            expect_eq(out, w, k, r.max_count > r.min_count, fixed_repetition_criterion(w, k).has_value());
            break;
        }
        case Check::lemma1: {
            if (memo.range(w, k).max_count != 1) break;
            for (const auto& occ : all_occurrences(w)) {
                const bool bad = occ.kind == PatternKind::P3412
                                     ? (straddles_position(occ, k) || straddles_value(occ, k))
                                     : straddles_both(occ, k);
                if (bad) {
                    out.push_back({w, k, "no forbidden straddle",
                                   std::string(to_string(occ.kind)) + " " + occ.values_string()});
                    break;
                }
            }
            break;
        }
        case Check::witness: {
            const auto wit = minimal_witness(w, k);
            const auto& letters = wit.assembled.letters;
            const bool ok = product_of_word(letters, n) == w && is_reduced(letters, n) &&
                            static_cast<int>(wit.assembled.count(k)) == expatriation(w, k) &&
                            !in_support(wit.u, k) && !in_support(wit.v, k) && !in_support(wit.d, k);
            if (!ok) out.push_back({w, k, "valid witness", "invalid witness"});
            break;
        }
        default:
            break;
        }
    }
}

inline void sort_failures(std::vector<Failure>& f) {
    std::sort(f.begin(), f.end(), [](const Failure& a, const Failure& b) {
        if (a.w != b.w) return a.w < b.w;
        return a.k < b.k;
    });
}

inline void sweep_degree(Check c, int n, unsigned workers, std::vector<Failure>& out) {
    const std::uint64_t total = factorial(n);
    const std::uint64_t parts = std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, total));
    std::mutex mu;
    auto run = [&](std::uint64_t begin, std::uint64_t end) {
        RangeMemo memo;
        std::vector<Failure> local;
        auto line = unrank(n, begin).one_line();
        for (std::uint64_t r = begin; r < end; ++r) {
            check_permutation(c, Permutation::from_one_line(line), memo, local);
            std::next_permutation(line.begin(), line.end());
        }
        std::lock_guard lock(mu);
        out.insert(out.end(), local.begin(), local.end());
    };
    if (parts == 1) {
        run(0, total);
        return;
    }
    std::vector<std::thread> threads;
    for (std::uint64_t p = 0; p < parts; ++p) {
        threads.emplace_back(run, total * p / parts, total * (p + 1) / parts);
    }
    for (auto& t : threads) t.join();
}

inline void check_long_elements(int n_min, int n_max, VerificationReport& rep) {
    for (int n = std::max(3, n_min); n <= n_max; ++n) {
        rep.degree_range.push_back(n);
        const auto w0 = Permutation::longest(n);
        RangeMemo memo;
        for (int k = 1; k < n; ++k) {
            const auto prof = long_element_profile(n, k);
            const auto r = memo.range(w0, k);
            ++rep.cases_checked;
            auto& f = rep.failures;
            expect_eq(f, w0, k, prof.min, min_sigma_count(w0, k));
            expect_eq(f, w0, k, prof.min, r.min_count);
            expect_eq(f, w0, k, prof.pos_pairs, static_cast<int>(pos_pair_count(w0, k)));
            expect_eq(f, w0, k, prof.pos_pairs, static_cast<int>(val_pair_count(w0, k)));
            if (r.max_count > prof.bound) {
                f.push_back({w0, k, "max <= " + str(prof.bound), "max = " + str(r.max_count)});
            }
        }
    }
}

inline void check_bruhat_examples(VerificationReport& rep) {
    struct Cover {
        const char* lower;
        const char* upper;
    };
    for (const auto& [lo, up] : {Cover{"561234", "651234"}, Cover{"32541", "52341"}}) {
        const auto v = parse_permutation(lo);
        const auto w = parse_permutation(up);
        rep.degree_range.push_back(v.degree());
        ++rep.cases_checked;
        if (!bruhat_covers(v, w)) {
            rep.failures.push_back({w, 0, std::string(lo) + " covered", "not a cover"});
        }
        const auto below = total_pattern_count(v);
        const auto above = total_pattern_count(w);
        if (above >= below) {
            rep.failures.push_back({w, 0, "pattern count below " + str(below), str(above)});
        }
    }
}

} // namespace detail

/// Runs one check over S_{n_min}..S_{n_max}. Throws SweepRefused past the cap.
inline VerificationReport run_check(Check c, int n_min, int n_max, unsigned workers = 1) {
    const auto& ci = info(c);
    if (n_min < 2 || n_min > n_max) {
        throw SweepRefused("degree range must satisfy 2 <= n-min <= n");
    }
    if (n_max > ci.max_degree) {
        throw SweepRefused("check '" + std::string(ci.name) + "' is capped at n = " +
                           std::to_string(ci.max_degree) + " (requested " + std::to_string(n_max) + ")");
    }
    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.theorem_id = std::string(ci.name);
    if (c == Check::long_element) {
        detail::check_long_elements(n_min, n_max, rep);
    } else if (c == Check::bruhat_examples) {
        detail::check_bruhat_examples(rep);
    } else {
        for (int n = n_min; n <= n_max; ++n) {
            rep.degree_range.push_back(n);
            rep.cases_checked += factorial(n) * static_cast<std::uint64_t>(n - 1);
            detail::sweep_degree(c, n, std::max(1u, workers), rep.failures);
        }
    }
    detail::sort_failures(rep.failures);
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return rep;
}

/**
 * Runs several checks. With `clamp_to_caps`, each check sweeps up to
 * min(n_max, its cap) and the clamp is visible in its degree_range;
 * otherwise any check over its cap refuses the whole request.
 * n_max above kMaxSweepDegree is always refused.
 */
inline std::vector<VerificationReport> run_checks(const std::vector<Check>& checks, int n_min, int n_max,
                                                  unsigned workers = 1, bool clamp_to_caps = false) {
    if (n_max > kMaxSweepDegree) {
        throw SweepRefused("sweeps are capped at n = " + std::to_string(kMaxSweepDegree) + " (requested " +
                           std::to_string(n_max) + "); factorial growth puts larger degrees out of reach");
    }
    if (!clamp_to_caps) {
        for (auto c : checks) {
            if (n_max > info(c).max_degree) {
                throw SweepRefused("check '" + std::string(info(c).name) + "' is capped at n = " +
                                   std::to_string(info(c).max_degree) + " (requested " + std::to_string(n_max) + ")");
            }
        }
    }
    std::vector<VerificationReport> out;
    for (auto c : checks) {
        const int top = clamp_to_caps ? std::min(n_max, info(c).max_degree) : n_max;
        out.push_back(run_check(c, std::min(n_min, top), top, workers));
    }
    return out;
}

inline std::vector<Check> all_checks() {
    std::vector<Check> v;
    for (const auto& i : kChecks) v.push_back(i.id);
    return v;
}

} // namespace reprange
