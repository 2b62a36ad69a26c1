#pragma once

/**
 * @file reduced_words.hpp
 * @brief Reduced words of a permutation and the range of sigma_k repetition.
 *
 * Two independent routes:
 *  - ReducedWordEnumerator walks R(w) lazily in lexicographic order by peeling
 *    off the first letter (left descents).
 *  - RangeMemo computes min/max sigma_k counts for every k at once by a
 *    memoized recursion over right descents, never listing words.
 */

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <limits>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "reprange/permutation.hpp"

namespace reprange {

/// A word known to be reduced, with the degree it lives in.
struct ReducedWord {
    Word letters;
    int degree = 1;

    std::size_t size() const noexcept { return letters.size(); }

    std::size_t count(int k) const noexcept {
        return static_cast<std::size_t>(std::count(letters.begin(), letters.end(), k));
    }

    /// Validating constructor for externally supplied words.
    static ReducedWord from_letters(Word letters, int n) {
        for (int a : letters) Permutation::check_letter(a, n);
        if (!is_reduced(letters, n)) {
            throw std::invalid_argument("word is not reduced");
        }
        return ReducedWord{std::move(letters), n};
    }

    friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
    friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;
};

/// Lazy depth-first walk of R(w). Words come out in strictly increasing
/// lexicographic order; `limit` truncates.
class ReducedWordEnumerator {
public:
    explicit ReducedWordEnumerator(Permutation w, std::optional<std::size_t> limit = std::nullopt)
        : root_(std::move(w)), limit_(limit) {}

    std::optional<ReducedWord> next() {
        if (done_ || (limit_ && emitted_ >= *limit_)) return std::nullopt;
        if (!started_) {
            started_ = true;
            const int len = root_.length();
            if (len == 0) {
                done_ = true;
                ++emitted_;
                return ReducedWord{{}, root_.degree()};
            }
            stack_.push_back(Frame{root_, len, 1});
        }
        const int n = root_.degree();
        while (!stack_.empty()) {
            Frame& top = stack_.back();
            int letter = top.next_letter;
            while (letter < n && !top.perm.has_left_descent(letter)) ++letter;
            if (letter >= n) {
                stack_.pop_back();
                if (!prefix_.empty()) prefix_.pop_back();
                continue;
            }
            top.next_letter = letter + 1;
            prefix_.push_back(letter);
            if (top.length == 1) {
                ReducedWord out{prefix_, n};
                prefix_.pop_back();
                ++emitted_;
                return out;
            }
            Frame child{top.perm.simple_times(letter), top.length - 1, 1};
            stack_.push_back(std::move(child));
        }
        done_ = true;
        return std::nullopt;
    }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = ReducedWord;
        using difference_type = std::ptrdiff_t;
        using pointer = const ReducedWord*;
        using reference = const ReducedWord&;

        iterator() = default;
        explicit iterator(ReducedWordEnumerator* owner) : owner_(owner) { advance(); }

        reference operator*() const { return *current_; }
        pointer operator->() const { return &*current_; }
        iterator& operator++() {
            advance();
            return *this;
        }
        void operator++(int) { advance(); }

        friend bool operator==(const iterator& a, const iterator& b) {
            return a.current_.has_value() == b.current_.has_value();
        }

    private:
        void advance() { current_ = owner_ ? owner_->next() : std::nullopt; }

        ReducedWordEnumerator* owner_ = nullptr;
        std::optional<ReducedWord> current_;
    };

    iterator begin() { return iterator(this); }
    iterator end() { return iterator(); }

private:
    struct Frame {
        Permutation perm;
        int length;
        int next_letter;
    };

    Permutation root_;
    std::optional<std::size_t> limit_;
    std::vector<Frame> stack_;
    Word prefix_;
    std::size_t emitted_ = 0;
    bool started_ = false;
    bool done_ = false;
};

inline ReducedWordEnumerator enumerate_reduced_words(const Permutation& w,
                                                     std::optional<std::size_t> limit = std::nullopt) {
    return ReducedWordEnumerator(w, limit);
}

/// Lexicographically least reduced word of w.
inline ReducedWord first_reduced_word(const Permutation& w) {
    return *ReducedWordEnumerator(w, 1).next();
}

/// |R(w)| by count(w) = sum over right descents d of count(w * sigma_d).
/// Throws std::overflow_error rather than wrapping.
inline std::uint64_t count_reduced_words(const Permutation& w) {
    std::unordered_map<Permutation, std::uint64_t> memo;
    auto rec = [&memo](auto&& self, const Permutation& p) -> std::uint64_t {
        if (p.is_identity()) return 1;
        if (auto it = memo.find(p); it != memo.end()) return it->second;
        std::uint64_t total = 0;
        for (int d = 1; d < p.degree(); ++d) {
            if (!p.has_right_descent(d)) continue;
            const std::uint64_t sub = self(self, p.times_simple(d));
            if (__builtin_add_overflow(total, sub, &total)) {
                throw std::overflow_error("reduced word count of " + p.to_string() +
                                          " exceeds 64 bits");
            }
        }
        memo.emplace(p, total);
        return total;
    };
    return rec(rec, w);
}

struct SigmaRange {
    int k = 0;
    int min_count = 0;
    int max_count = 0;

    friend bool operator==(const SigmaRange&, const SigmaRange&) = default;
};

struct RepetitionProfile {
    Permutation w;
    std::vector<SigmaRange> ranges; ///< ranges[k - 1] is for sigma_k
};

/**
 * Per-permutation min/max sigma_k counts, memoized on the permutation.
 *
 * f(e) = 0 and f(w)[k] = opt over right descents d of f(w sigma_d)[k] + [d == k].
 * Entries for every permutation in the weak-order interval below a query stay
 * in the table until it is destroyed; callers choose its lifetime.
 */
class RangeMemo {
public:
    struct Entry {
        std::vector<std::int16_t> min_count; ///< index k - 1
        std::vector<std::int16_t> max_count;
    };

    const Entry& ranges(const Permutation& w) {
        if (auto it = table_.find(w); it != table_.end()) return it->second;
        const auto slots = static_cast<std::size_t>(w.degree() - 1);
        Entry e{std::vector<std::int16_t>(slots, 0), std::vector<std::int16_t>(slots, 0)};
        bool first = true;
        for (int d = 1; d < w.degree(); ++d) {
            if (!w.has_right_descent(d)) continue;
            // Node-based map: references survive rehashing during recursion.
            const Entry& sub = ranges(w.times_simple(d));
            for (std::size_t k = 0; k < slots; ++k) {
                const auto bump = static_cast<std::int16_t>(k + 1 == static_cast<std::size_t>(d) ? 1 : 0);
                const auto lo = static_cast<std::int16_t>(sub.min_count[k] + bump);
                const auto hi = static_cast<std::int16_t>(sub.max_count[k] + bump);
                if (first || lo < e.min_count[k]) e.min_count[k] = lo;
                if (first || hi > e.max_count[k]) e.max_count[k] = hi;
            }
            first = false;
        }
        return table_.emplace(w, std::move(e)).first->second;
    }

    SigmaRange range(const Permutation& w, int k) {
        Permutation::check_letter(k, w.degree());
        const auto& e = ranges(w);
        const auto i = static_cast<std::size_t>(k - 1);
        return SigmaRange{k, e.min_count[i], e.max_count[i]};
    }

    std::size_t size() const noexcept { return table_.size(); }
    void clear() { table_.clear(); }

private:
    std::unordered_map<Permutation, Entry> table_;
};

inline SigmaRange sigma_count_range(const Permutation& w, int k) {
    Permutation::check_letter(k, w.degree());
    RangeMemo memo;
    return memo.range(w, k);
}

inline RepetitionProfile repetition_profile(const Permutation& w) {
    RangeMemo memo;
    RepetitionProfile p{w, {}};
    for (int k = 1; k < w.degree(); ++k) p.ranges.push_back(memo.range(w, k));
    return p;
}

} // namespace reprange
