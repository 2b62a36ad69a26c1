#pragma once

/**
 * @file permutation.hpp
 * @brief Permutations of [1, n] and the simple-reflection words that build them.
 *
 * Everything at this interface is 1-based: w(i) for i in [1, n], generator
 * sigma_i for i in [1, n-1]. Storage is a 0-based vector with
 * values_[i - 1] == w(i).
 *
 * Products are composition of maps, (u * v)(i) = u(v(i)). Under that
 * convention w * sigma_i swaps the entries in positions i and i+1, and
 * sigma_i * w swaps the values i and i+1.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace reprange {

/// Raised for one-line input that is not a bijection on [1, n].
class InvalidPermutation : public std::invalid_argument {
public:
    InvalidPermutation(const std::string& what, std::size_t index)
        : std::invalid_argument(what), index_(index) {}

    /// 1-based position of the offending entry (0 when not tied to an entry).
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// A word in the simple reflections, letters in [1, n-1]. Not necessarily reduced.
using Word = std::vector<int>;

class Permutation {
public:
    /// Identity of degree 1.
    Permutation() : values_{1} {}

    /// Validates that `values` is a bijection on [1, values.size()].
    static Permutation from_one_line(std::span<const int> values) {
        if (values.empty()) {
            throw InvalidPermutation("permutation must have at least one entry", 0);
        }
        const auto n = values.size();
        std::vector<bool> seen(n + 1, false);
        for (std::size_t i = 0; i < n; ++i) {
            const int v = values[i];
            if (v < 1 || static_cast<std::size_t>(v) > n) {
                throw InvalidPermutation("value " + std::to_string(v) + " at position " +
                                             std::to_string(i + 1) + " is outside [1, " +
                                             std::to_string(n) + "]",
                                         i + 1);
            }
            if (seen[static_cast<std::size_t>(v)]) {
                throw InvalidPermutation("duplicate value " + std::to_string(v) +
                                             " at position " + std::to_string(i + 1),
                                         i + 1);
            }
            seen[static_cast<std::size_t>(v)] = true;
        }
        return Permutation(std::vector<int>(values.begin(), values.end()));
    }

    static Permutation from_one_line(std::initializer_list<int> values) {
        return from_one_line(std::span<const int>(values.begin(), values.size()));
    }

    static Permutation identity(int n) {
        if (n < 1) {
            throw std::invalid_argument("degree must be at least 1");
        }
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
        return Permutation(std::move(v));
    }

    /// The order-reversing permutation n(n-1)...1.
    static Permutation longest(int n) {
        auto w = identity(n);
        std::reverse(w.values_.begin(), w.values_.end());
        return w;
    }

    /// The simple reflection sigma_i in degree n.
    static Permutation simple_reflection(int n, int i) {
        check_letter(i, n);
        auto w = identity(n);
        std::swap(w.values_[static_cast<std::size_t>(i - 1)],
                  w.values_[static_cast<std::size_t>(i)]);
        return w;
    }

    int degree() const noexcept { return static_cast<int>(values_.size()); }

    /// w(i), 1-based.
    int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<int>& one_line() const noexcept { return values_; }

    bool is_identity() const noexcept {
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (values_[i] != static_cast<int>(i + 1)) return false;
        }
        return true;
    }

    /// Number of inversions, which is the Coxeter length.
    int length() const noexcept {
        int inv = 0;
        const auto n = values_.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (values_[i] > values_[j]) ++inv;
            }
        }
        return inv;
    }

    Permutation inverse() const {
        std::vector<int> inv(values_.size());
        for (std::size_t i = 0; i < values_.size(); ++i) {
            inv[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i + 1);
        }
        return Permutation(std::move(inv));
    }

    /// w * sigma_d: swaps positions d and d+1.
    Permutation times_simple(int d) const {
        check_letter(d, degree());
        auto r = *this;
        std::swap(r.values_[static_cast<std::size_t>(d - 1)], r.values_[static_cast<std::size_t>(d)]);
        return r;
    }

    /// sigma_d * w: swaps the values d and d+1.
    Permutation simple_times(int d) const {
        check_letter(d, degree());
        auto r = *this;
        for (auto& v : r.values_) {
            if (v == d) {
                v = d + 1;
            } else if (v == d + 1) {
                v = d;
            }
        }
        return r;
    }

    /// True when w(d) > w(d+1), i.e. multiplying by sigma_d on the right shortens w.
    bool has_right_descent(int d) const noexcept {
        return values_[static_cast<std::size_t>(d - 1)] > values_[static_cast<std::size_t>(d)];
    }

    /// True when value d+1 sits left of value d, i.e. sigma_d * w is shorter.
    bool has_left_descent(int d) const noexcept {
        for (int v : values_) {
            if (v == d + 1) return true;
            if (v == d) return false;
        }
        return false;
    }

    /// Digit string when n <= 9, comma-separated otherwise.
    std::string to_string() const {
        std::string s;
        const bool digits = degree() <= 9;
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (!digits && i > 0) s += ',';
            s += std::to_string(values_[i]);
        }
        return s;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    static void check_letter(int letter, int n) {
        if (letter < 1 || letter > n - 1) {
            throw std::out_of_range("generator index " + std::to_string(letter) +
                                    " is outside [1, " + std::to_string(n - 1) + "]");
        }
    }

private:
    explicit Permutation(std::vector<int> values) : values_(std::move(values)) {}

    std::vector<int> values_;
};

inline std::ostream& operator<<(std::ostream& os, const Permutation& w) {
    return os << w.to_string();
}

/// Composition (u * v)(i) = u(v(i)).
inline Permutation multiply(const Permutation& u, const Permutation& v) {
    if (u.degree() != v.degree()) {
        throw std::invalid_argument("degree mismatch: " + std::to_string(u.degree()) + " vs " +
                                    std::to_string(v.degree()));
    }
    std::vector<int> r(static_cast<std::size_t>(u.degree()));
    for (int i = 1; i <= u.degree(); ++i) r[static_cast<std::size_t>(i - 1)] = u(v(i));
    return Permutation::from_one_line(r);
}

inline Permutation operator*(const Permutation& u, const Permutation& v) { return multiply(u, v); }

inline int length(const Permutation& w) { return w.length(); }

inline Permutation inverse(const Permutation& w) { return w.inverse(); }

/// {d in [1, n-1] : w(d) > w(d+1)}, ascending.
inline std::vector<int> right_descents(const Permutation& w) {
    std::vector<int> d;
    for (int i = 1; i < w.degree(); ++i) {
        if (w.has_right_descent(i)) d.push_back(i);
    }
    return d;
}

/// {d in [1, n-1] : sigma_d * w is shorter than w}, ascending.
inline std::vector<int> left_descents(const Permutation& w) {
    return right_descents(w.inverse());
}

/// Generators appearing in reduced words of w: k with {w(1..k)} != {1..k}.
inline std::vector<int> support(const Permutation& w) {
    std::vector<int> s;
    int prefix_max = 0;
    for (int k = 1; k < w.degree(); ++k) {
        prefix_max = std::max(prefix_max, w(k));
        if (prefix_max != k) s.push_back(k);
    }
    return s;
}

inline bool in_support(const Permutation& w, int k) {
    for (int i = 1; i <= k; ++i) {
        if (w(i) > k) return true;
    }
    return false;
}

/// Left-to-right product sigma_{a_1} sigma_{a_2} ... in degree n.
inline Permutation product_of_word(std::span<const int> word, int n) {
    auto w = Permutation::identity(n);
    for (int letter : word) w = w.times_simple(letter);
    return w;
}

inline bool is_reduced(std::span<const int> word, int n) {
    return product_of_word(word, n).length() == static_cast<int>(word.size());
}

/// Accepts "4312" or "4,3,1,2". Digit strings are read one digit per entry.
inline Permutation parse_permutation(std::string_view text) {
    std::vector<int> values;
    if (text.find(',') == std::string_view::npos) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            if (c < '0' || c > '9') {
                throw InvalidPermutation("unexpected character '" + std::string(1, c) +
                                             "' at position " + std::to_string(i + 1),
                                         i + 1);
            }
            values.push_back(c - '0');
        }
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find(',', start);
            if (end == std::string_view::npos) end = text.size();
            auto field = text.substr(start, end - start);
            while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
            while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
            if (field.empty() || field.size() > 9 ||
                !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; })) {
                throw InvalidPermutation("malformed entry '" + std::string(field) +
                                             "' at position " + std::to_string(values.size() + 1),
                                         values.size() + 1);
            }
            values.push_back(std::stoi(std::string(field)));
            start = end + 1;
        }
    }
    return Permutation::from_one_line(values);
}

} // namespace reprange

template <>
struct std::hash<reprange::Permutation> {
    std::size_t operator()(const reprange::Permutation& w) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (int v : w.one_line()) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};
