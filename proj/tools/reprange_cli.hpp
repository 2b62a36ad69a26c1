#pragma once

// Command-line front end: analyze, words, witness, verify.
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "reprange/reprange.hpp"

namespace reprange::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

struct Streams {
    std::ostream& out;
    std::ostream& err;
};

inline json pair_list(const std::vector<StraddlePair>& pairs) {
    json a = json::array();
    for (const auto& p : pairs) a.push_back({p.first, p.second});
    return a;
}

inline json occurrence_list(const std::vector<PatternOccurrence>& occs) {
    json a = json::array();
    for (const auto& o : occs) a.push_back({{"positions", o.positions}, {"values", o.values}});
    return a;
}

inline std::string pairs_text(const std::vector<StraddlePair>& pairs) {
    if (pairs.empty()) return "-";
    std::string s;
    for (const auto& p : pairs) {
        if (!s.empty()) s += ' ';
        s += '(' + std::to_string(p.first) + ',' + std::to_string(p.second) + ')';
    }
    return s;
}

inline std::string occurrences_text(const std::vector<PatternOccurrence>& occs) {
    if (occs.empty()) return "-";
    std::string s;
    for (const auto& o : occs) {
        if (!s.empty()) s += ' ';
        s += o.values_string();
    }
    return s;
}

inline std::string word_text(const Word& w) {
    if (w.empty()) return "(empty)";
    std::string s;
    for (int a : w) {
        if (!s.empty()) s += ' ';
        s += std::to_string(a);
    }
    return s;
}

inline std::string set_text(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + "}";
}

struct AnalyzeRow {
    int k;
    SigmaRange range;
    int expat;
    std::vector<StraddlePair> pos;
    std::vector<StraddlePair> val;
    MaxUpperBound bound;
    std::optional<FixedCriterionWitness> varies;
};

inline std::vector<AnalyzeRow> analyze_rows(const Permutation& w, std::optional<int> only_k) {
    RangeMemo memo;
    std::vector<AnalyzeRow> rows;
    for (int k = 1; k < w.degree(); ++k) {
        if (only_k && *only_k != k) continue;
        rows.push_back({k, memo.range(w, k), expatriation(w, k), position_pairs(w, k), value_pairs(w, k),
                        max_upper_bound(w, k), fixed_repetition_criterion(w, k)});
    }
    return rows;
}

inline json analyze_json(const Permutation& w, const std::vector<AnalyzeRow>& rows) {
    json j;
    j["permutation"] = w.to_string();
    j["n"] = w.degree();
    j["rows"] = json::array();
    for (const auto& r : rows) {
        j["rows"].push_back({{"k", r.k},
                             {"min", r.range.min_count},
                             {"max", r.range.max_count},
                             {"expat", r.expat},
                             {"pos_pairs", pair_list(r.pos)},
                             {"val_pairs", pair_list(r.val)},
                             {"bound", r.bound.value},
                             {"in_support", r.bound.k_in_support},
                             {"fixed", r.range.min_count == r.range.max_count}});
    }
    j["patterns"] = {{"p321", occurrence_list(occurrences_321(w))},
                     {"p3412", occurrence_list(occurrences_3412(w))}};
    return j;
}

inline void analyze_table(std::ostream& os, const Permutation& w, const std::vector<AnalyzeRow>& rows) {
    os << "permutation " << w << " (n = " << w.degree() << ", length " << w.length() << ")\n\n";
    os << "  k  min  max  expat  PosPair  ValPair  bound  fixed\n";
    bool any_outside = false;
    for (const auto& r : rows) {
        std::string bound = std::to_string(r.bound.value);
        if (!r.bound.k_in_support) {
            bound += '*';
            any_outside = true;
        }
        os << std::setw(3) << r.k << std::setw(5) << r.range.min_count << std::setw(5) << r.range.max_count
           << std::setw(7) << r.expat << std::setw(9) << r.pos.size() << std::setw(9) << r.val.size()
           << std::setw(7) << bound << "  " << (r.range.min_count == r.range.max_count ? "yes" : "no") << '\n';
    }
    if (any_outside) os << "  * k is outside supp(w); sigma_k never appears\n";

    const auto p321 = occurrences_321(w);
    const auto p3412 = occurrences_3412(w);
    os << "\n321 patterns:  " << occurrences_text(p321) << '\n';
    os << "3412 patterns: " << occurrences_text(p3412) << '\n';

    for (const auto& r : rows) {
        os << "\nk = " << r.k << '\n';
        os << "  straddling position: " << occurrences_text(straddling_occurrences(w, r.k, Axis::position)) << '\n';
        os << "  position pairs:      " << pairs_text(r.pos) << '\n';
        os << "  straddling value:    " << occurrences_text(straddling_occurrences(w, r.k, Axis::value)) << '\n';
        os << "  value pairs:         " << pairs_text(r.val) << '\n';
        if (r.varies) {
            os << "  repetition varies:   " << r.varies->occurrence.values_string() << " at pair (" << r.varies->i
               << ',' << r.varies->j << "), L = " << set_text(r.varies->left)
               << ", R = " << set_text(r.varies->right) << '\n';
        } else {
            os << "  repetition fixed:    every reduced word has " << r.range.min_count << " sigma_" << r.k << '\n';
        }
    }
}

inline int cmd_analyze(Streams s, const std::string& text, std::optional<int> k, const std::string& format) {
    const auto w = parse_permutation(text);
    if (k) Permutation::check_letter(*k, w.degree());
    const auto rows = analyze_rows(w, k);
    if (format == "json") {
        s.out << analyze_json(w, rows).dump(2) << '\n';
    } else {
        analyze_table(s.out, w, rows);
    }
    return kOk;
}

inline int cmd_words(Streams s, const std::string& text, std::optional<std::size_t> limit, const std::string& format) {
    const auto w = parse_permutation(text);
    std::optional<std::uint64_t> count;
    try {
        count = count_reduced_words(w);
    } catch (const std::overflow_error&) {
    }
    std::vector<ReducedWord> words;
    for (const auto& rw : enumerate_reduced_words(w, limit)) words.push_back(rw);
    const bool truncated = !count || words.size() < *count;

    if (format == "json") {
        json j;
        j["permutation"] = w.to_string();
        j["count"] = count ? json(*count) : json(nullptr);
        j["truncated"] = truncated;
        j["words"] = json::array();
        for (const auto& rw : words) j["words"].push_back(rw.letters);
        s.out << j.dump(2) << '\n';
        return kOk;
    }
    for (const auto& rw : words) s.out << word_text(rw.letters) << '\n';
    s.out << "total " << (count ? std::to_string(*count) : std::string("> 2^64"));
    if (truncated) s.out << " (showing first " << words.size() << ')';
    s.out << '\n';
    return kOk;
}

inline int cmd_witness(Streams s, const std::string& text, int k, const std::string& format) {
    const auto w = parse_permutation(text);
    const auto wit = minimal_witness(w, k);
    const auto n = w.degree();
    const auto sigma = static_cast<int>(wit.assembled.count(k));
    const auto expat = expatriation(w, k);
    const bool reduced = is_reduced(wit.assembled.letters, n) && product_of_word(wit.assembled.letters, n) == w;

    if (format == "json") {
        json j;
        j["permutation"] = w.to_string();
        j["k"] = k;
        j["u"] = {{"perm", wit.u.to_string()}, {"word", wit.u_word.letters}};
        j["v"] = {{"perm", wit.v.to_string()}, {"word", wit.v_word.letters}};
        j["t"] = wit.t_words;
        j["d"] = {{"perm", wit.d.to_string()}, {"word", wit.d_word.letters}};
        j["assembled"] = wit.assembled.letters;
        j["sigma_count"] = sigma;
        j["expatriation"] = expat;
        j["reduced"] = reduced;
        s.out << j.dump(2) << '\n';
        return kOk;
    }
    s.out << "w = " << w << ", k = " << k << '\n';
    s.out << "u = " << wit.u << "  word: " << word_text(wit.u_word.letters) << '\n';
    s.out << "v = " << wit.v << "  word: " << word_text(wit.v_word.letters) << '\n';
    for (std::size_t i = 0; i < wit.t_words.size(); ++i) {
        s.out << "t_" << i << " = " << word_text(wit.t_words[i]) << '\n';
    }
    s.out << "d = " << wit.d << "  word: " << word_text(wit.d_word.letters) << '\n';
    s.out << "assembled: " << word_text(wit.assembled.letters) << '\n';
    s.out << "reduced: " << (reduced ? "yes" : "no") << '\n';
    s.out << "sigma_" << k << " count: " << sigma << " (expatriation " << expat << ")\n";
    return kOk;
}

inline json report_json(const VerificationReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures) {
        failures.push_back({{"w", f.w.to_string()}, {"k", f.k}, {"expected", f.expected}, {"actual", f.actual}});
    }
    return {{"theorem", r.theorem_id},
            {"degrees", r.degree_range},
            {"cases_checked", r.cases_checked},
            {"failures", failures},
            {"elapsed_ms", r.elapsed.count()}};
}

inline std::string degrees_text(const std::vector<int>& d) {
    if (d.empty()) return "-";
    auto [lo, hi] = std::minmax_element(d.begin(), d.end());
    return *lo == *hi ? std::to_string(*lo) : std::to_string(*lo) + ".." + std::to_string(*hi);
}

inline int cmd_verify(Streams s, int n_max, int n_min, const std::vector<std::string>& selectors, unsigned workers,
                      const std::string& format) {
    std::vector<Check> checks;
    bool all = false;
    for (const auto& name : selectors) {
        if (name == "all") {
            all = true;
            continue;
        }
        auto c = parse_check(name);
        if (!c) {
            s.err << "error: unknown theorem selector '" << name << "'\n";
            return kUsage;
        }
        if (std::find(checks.begin(), checks.end(), *c) == checks.end()) checks.push_back(*c);
    }
    if (all) checks = all_checks();

    std::vector<VerificationReport> reports;
    try {
        reports = run_checks(checks, n_min, n_max, workers, all);
    } catch (const SweepRefused& e) {
        s.err << "refused: " << e.what() << '\n';
        return kUsage;
    }

    const bool passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    if (format == "json") {
        json j;
        j["passed"] = passed;
        j["reports"] = json::array();
        for (const auto& r : reports) j["reports"].push_back(report_json(r));
        s.out << j.dump(2) << '\n';
    } else {
        s.out << std::left << std::setw(17) << "check" << std::setw(9) << "degrees" << std::right << std::setw(10)
              << "cases" << std::setw(10) << "failures" << std::setw(9) << "ms" << "  result\n";
        for (const auto& r : reports) {
            s.out << std::left << std::setw(17) << r.theorem_id << std::setw(9) << degrees_text(r.degree_range)
                  << std::right << std::setw(10) << r.cases_checked << std::setw(10) << r.failures.size()
                  << std::setw(9) << r.elapsed.count() << "  " << (r.passed() ? "PASS" : "FAIL") << '\n';
            std::size_t shown = 0;
            for (const auto& f : r.failures) {
                if (++shown > 20) {
                    s.out << "    ...\n";
                    break;
                }
                s.out << "    w = " << f.w << ", k = " << f.k << ": expected " << f.expected << ", got " << f.actual
                      << '\n';
            }
        }
        s.out << (passed ? "all checks passed" : "verification FAILED") << '\n';
    }
    return passed ? kOk : kVerifyFailed;
}

/// Parses argv and dispatches. argv[0] is the program name.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Streams s{out, err};
    CLI::App app{"Range of sigma_k repetition in reduced words of permutations", "reprange"};
    app.require_subcommand(1);

    const auto formats = CLI::IsMember({"table", "json"});

    std::string perm;
    std::string format = "table";
    std::optional<int> k;
    std::optional<std::size_t> limit;

    auto* analyze = app.add_subcommand("analyze", "min/max sigma_k counts, pairs and bounds for each k");
    analyze->add_option("perm", perm, "permutation, e.g. 4312 or 10,2,1,...")->required();
    analyze->add_option("--k", k, "restrict to one generator index");
    analyze->add_option("--format", format)->check(formats);

    auto* words = app.add_subcommand("words", "list reduced words in lexicographic order");
    words->add_option("perm", perm)->required();
    words->add_option("--limit", limit, "stop after N words");
    words->add_option("--format", format)->check(formats);

    int witness_k = 0;
    auto* witness = app.add_subcommand("witness", "reduced word with the minimum number of sigma_k");
    witness->add_option("perm", perm)->required();
    witness->add_option("--k", witness_k)->required();
    witness->add_option("--format", format)->check(formats);

    int n_max = 0;
    int n_min = 2;
    unsigned workers = 1;
    std::vector<std::string> selectors{"all"};
    auto* verify = app.add_subcommand("verify", "exhaustive sweeps over S_n");
    verify->add_option("--n", n_max, "largest degree to sweep")->required();
    verify->add_option("--n-min", n_min, "smallest degree to sweep")->capture_default_str();
    verify->add_option("--theorems", selectors, "comma-separated: min,max_gt_1,max_bound,fixed,lemma1,"
                                                "witness,oracle,long_element,bruhat_examples,all")
        ->delimiter(',');
    verify->add_option("--workers", workers)->check(CLI::Range(1u, 256u));
    verify->add_option("--format", format)->check(formats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze) return cmd_analyze(s, perm, k, format);
        if (*words) return cmd_words(s, perm, limit, format);
        if (*witness) return cmd_witness(s, perm, witness_k, format);
        if (*verify) return cmd_verify(s, n_max, n_min, selectors, workers, format);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace reprange::cli
