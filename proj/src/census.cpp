#include "pretzel/census.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "pretzel/planar.hpp"

namespace pretzel {

namespace {

// multisets of magnitudes >= 2, as non-increasing vectors
void gen_magnitudes(int max_val, int max_cnt, int max_sum, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_cnt) return;
    const int hi = std::min(max_val, cur.empty() ? max_sum : std::min(cur.back(), max_sum));
    for (int v = hi; v >= 2; --v) {
        cur.push_back(v);
        gen_magnitudes(max_val, max_cnt, max_sum - v, cur, out);
        cur.pop_back();
    }
}

// all sign assignments of a magnitude multiset, up to permutation: per run of
// equal magnitudes only the count of positives matters
void gen_signings(const std::vector<int>& mags, size_t at, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
    if (at == mags.size()) {
        out.push_back(cur);
        return;
    }
    size_t end = at;
    while (end < mags.size() && mags[end] == mags[at]) ++end;
    const int run = static_cast<int>(end - at);
    for (int pos = 0; pos <= run; ++pos) {
        for (int i = 0; i < run; ++i) cur.push_back(i < pos ? mags[at] : -mags[at]);
        gen_signings(mags, end, cur, out);
        cur.resize(cur.size() - run);
    }
}

using SpanOf = int (*)(const PretzelDiagram&);

int formula_span(const PretzelDiagram& P) { return span_formula(P).S; }
int bracket_span(const PretzelDiagram& P) { return jones_span(P); }

// sort key: case label by (item, sub-item, exception), then entries
std::tuple<int, int, int> label_key(const std::string& label) {
    const bool exc = label.find("-exception") != std::string::npos;
    const std::string base = exc ? label.substr(0, label.find('-')) : label;
    const auto dot = base.find('.');
    const int major = std::stoi(base.substr(0, dot));
    const int minor = dot == std::string::npos ? 0 : std::stoi(base.substr(dot + 1));
    return {major, minor, exc ? 1 : 0};
}

std::vector<CensusEntry> census(int S, bool knots_only, int jobs, SpanOf span_of) {
    if (S < 0) throw std::invalid_argument("span must be nonnegative");
    if (jobs <= 0) jobs = std::max(1u, std::thread::hardware_concurrency());

    const int max_val = S + 4;
    const int max_cnt = (S + 6) / 2;
    const int lambda_max = std::max((S + 4) / 2, S - 1);

    std::vector<std::vector<int>> mag_sets;
    {
        std::vector<int> cur;
        gen_magnitudes(max_val, max_cnt, sigma_cap(S), cur, mag_sets);
    }

    // each worker sweeps a slice of the magnitude multisets; candidate
    // diagrams are canonicalized and judged there, merged under a lock
    std::map<std::vector<int>, CensusEntry> kept;
    std::mutex mu;
    auto worker = [&](size_t begin, size_t step) {
        std::vector<std::vector<int>> signed_sets;
        std::map<std::vector<int>, CensusEntry> local;
        auto consider = [&](std::vector<int> entries) {
            if (entries.empty()) return;
            const PretzelDiagram C = canonical(PretzelDiagram(std::move(entries)));
            if (local.count(C.entries())) return;
            if (span_of(C) != S) return;
            const SpanVerdict v = span_formula(C);
            if (excluded_label(v.case_label)) return;
            const bool knot = is_knot(C);
            if (knots_only && !knot) return;
            local.emplace(C.entries(), CensusEntry{C, v, knot});
        };
        for (size_t i = begin; i < mag_sets.size(); i += step) {
            signed_sets.clear();
            std::vector<int> cur;
            gen_signings(mag_sets[i], 0, cur, signed_sets);
            for (const auto& big : signed_sets) {
                for (int lam = -lambda_max; lam <= lambda_max; ++lam) {
                    std::vector<int> e = big;
                    e.insert(e.end(), std::max(lam, 0), 1);
                    e.insert(e.end(), std::max(-lam, 0), -1);
                    consider(std::move(e));
                }
                for (int z = 1; z <= S; ++z) {
                    std::vector<int> e = big;
                    e.insert(e.end(), z, 0);
                    consider(std::move(e));
                }
            }
        }
        std::lock_guard<std::mutex> lock(mu);
        for (auto& [key, entry] : local)
            kept.emplace(key, std::move(entry));
    };

    if (jobs == 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t, jobs);
        for (auto& th : pool) th.join();
    }

    // the one reduced diagram with simultaneous +1 and -1 entries
    {
        const PretzelDiagram C = canonical(PretzelDiagram({1, -1}));
        if (!kept.count(C.entries()) && span_of(C) == S) {
            const SpanVerdict v = span_formula(C);
            if (!excluded_label(v.case_label) && (!knots_only || is_knot(C)))
                kept.emplace(C.entries(), CensusEntry{C, v, is_knot(C)});
        }
    }

    std::vector<CensusEntry> out;
    out.reserve(kept.size());
    for (auto& [key, entry] : kept) out.push_back(std::move(entry));
    std::sort(out.begin(), out.end(), [](const CensusEntry& a, const CensusEntry& b) {
        const auto ka = label_key(a.verdict.case_label), kb = label_key(b.verdict.case_label);
        if (ka != kb) return ka < kb;
        return a.diagram.entries() < b.diagram.entries();
    });
    return out;
}

}  // namespace

std::vector<CensusEntry> enumerate(int S, bool knots_only, int jobs) {
    return census(S, knots_only, jobs, formula_span);
}

std::vector<CensusEntry> brute_census(int S, bool knots_only, int jobs) {
    if (S > 12) throw std::domain_error("too large: brute census capped at span 12");
    return census(S, knots_only, jobs, bracket_span);
}

bool excluded_label(const std::string& label) {
    if (label == "3.2" || label == "3.3") return true;
    if (label == "6.1" || label == "6.2") return true;
    return label.rfind("4.", 0) == 0 || label.rfind("7", 0) == 0;
}

std::string render_text(const std::vector<CensusEntry>& entries) {
    std::string out;
    for (const auto& e : entries) {
        out += e.diagram.str();
        out += '\n';
    }
    return out;
}

std::string render_json(const std::vector<CensusEntry>& entries) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json obj;
        obj["diagram"] = e.diagram.entries();
        obj["S"] = e.verdict.S;
        obj["case"] = e.verdict.case_label;
        obj["knot"] = e.knot;
        arr.push_back(std::move(obj));
    }
    return arr.dump();
}

}  // namespace pretzel
