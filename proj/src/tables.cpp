#include "pretzel/tables.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "pretzel/planar.hpp"

namespace pretzel {

namespace {

std::runtime_error at_line(size_t line, const std::string& what) {
    return std::runtime_error("line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::vector<KnotRecord> load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table: " + path);

    std::vector<KnotRecord> records;
    std::set<std::string> names;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& ex) {
            throw at_line(lineno, std::string("parse error: ") + ex.what());
        }
        KnotRecord rec;
        try {
            rec.name = j.at("name").get<std::string>();
            rec.crossings = j.at("crossings").get<int>();
            rec.alternating = j.at("alternating").get<bool>();
            const auto& v1 = j.at("v1");
            const int min_deg = v1.at("min_deg").get<int>();
            const auto coeffs = v1.at("coeffs").get<std::vector<std::int64_t>>();
            for (size_t i = 0; i < coeffs.size(); ++i)
                if (coeffs[i] != 0) rec.v1[min_deg + static_cast<int>(i)] = coeffs[i];
        } catch (const nlohmann::json::exception& ex) {
            throw at_line(lineno, std::string("bad record: ") + ex.what());
        }
        if (rec.crossings <= 0) throw at_line(lineno, "crossings must be positive");
        if (rec.v1.empty()) throw at_line(lineno, "v1 must be nonzero");
        if (!names.insert(rec.name).second)
            throw at_line(lineno, "duplicate name: " + rec.name);
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<ClassificationReport> classify(const std::vector<KnotRecord>& records,
                                           int jobs) {
    // knot census per span, with each member's V1, built once per span
    std::map<int, std::vector<std::pair<PretzelDiagram, TPoly>>> pool;
    auto pool_for = [&](int S) -> const std::vector<std::pair<PretzelDiagram, TPoly>>& {
        auto it = pool.find(S);
        if (it == pool.end()) {
            std::vector<std::pair<PretzelDiagram, TPoly>> v;
            for (const CensusEntry& e : enumerate(S, true, jobs))
                v.emplace_back(e.diagram, jones1(e.diagram));
            it = pool.emplace(S, std::move(v)).first;
        }
        return it->second;
    };

    std::vector<ClassificationReport> reports;
    reports.reserve(records.size());
    for (const KnotRecord& rec : records) {
        ClassificationReport rep;
        rep.name = rec.name;
        rep.span_V = span_t(rec.v1) + 1;
        const TPoly mirrored = mirror_t(rec.v1);
        for (const auto& [diagram, v1] : pool_for(rep.span_V))
            if (v1 == rec.v1 || v1 == mirrored) rep.candidates.push_back(diagram);
        rep.verdict = rep.candidates.empty() ? Verdict::NOT_PRETZEL : Verdict::CANDIDATES;
        reports.push_back(std::move(rep));
    }
    return reports;
}

std::string render_text(const std::vector<ClassificationReport>& reports) {
    size_t name_w = 4;
    for (const auto& r : reports) name_w = std::max(name_w, r.name.size());
    std::ostringstream out;
    for (const auto& r : reports) {
        out << r.name << std::string(name_w - r.name.size() + 2, ' ')
            << "span=" << r.span_V << "  "
            << (r.verdict == Verdict::NOT_PRETZEL ? "NOT_PRETZEL" : "CANDIDATES ");
        for (const auto& d : r.candidates) out << ' ' << d.str();
        out << '\n';
    }
    return out.str();
}

std::string render_json(const std::vector<ClassificationReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json obj;
        obj["name"] = r.name;
        obj["span"] = r.span_V;
        obj["verdict"] = r.verdict == Verdict::NOT_PRETZEL ? "NOT_PRETZEL" : "CANDIDATES";
        nlohmann::ordered_json cands = nlohmann::ordered_json::array();
        for (const auto& d : r.candidates) cands.push_back(d.entries());
        obj["candidates"] = std::move(cands);
        arr.push_back(std::move(obj));
    }
    return arr.dump();
}

}  // namespace pretzel
