#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pretzel/bracket.hpp"
#include "pretzel/census.hpp"
#include "pretzel/diagram.hpp"
#include "pretzel/planar.hpp"
#include "pretzel/spanlaw.hpp"
#include "pretzel/tables.hpp"

namespace {

using namespace pretzel;

int cmd_bracket(const std::string& entries, bool verify) {
    const PretzelDiagram P = PretzelDiagram::parse(entries);
    const LaurentPoly kb = kb_closed(P);
    if (verify) {
        if (kb_recursive(P) != kb)
            throw std::runtime_error("recurrence disagrees with closed formula");
        const PlanarDiagram pd = build(P);
        if (pd.crossing_count() <= state_sum_limit() && state_sum(pd) != kb)
            throw std::runtime_error("state sum disagrees with closed formula");
    }
    std::cout << kb.str() << "\n";
    return 0;
}

int cmd_span(const std::string& entries, const std::string& method) {
    const PretzelDiagram P = PretzelDiagram::parse(entries);
    if (method == "bracket") {
        std::cout << "S=" << jones_span(P) << "\n";
        return 0;
    }
    const SpanVerdict v = span_formula(sort_desc(reduce(P)));
    if (method == "both") {
        const int sb = jones_span(P);
        if (sb != v.S)
            throw std::runtime_error("span disagreement: formula " + std::to_string(v.S) +
                                     " vs bracket " + std::to_string(sb));
    }
    std::cout << "S=" << v.S << " case=" << v.case_label;
    if (v.mirrored) std::cout << " mirrored=true";
    std::cout << "\n";
    return 0;
}

int cmd_jones(const std::string& entries, bool want_v1) {
    const PretzelDiagram P = PretzelDiagram::parse(entries);
    if (want_v1) {
        std::cout << t_poly_str(jones1(P)) << "\n";
        return 0;
    }
    const LaurentPoly a_form = jones_bracket_form(P);
    try {
        std::cout << t_poly_str(to_t_poly(a_form)) << "\n";
    } catch (const std::domain_error&) {
        // odd component count: V has half-integral t-degrees, emit the A-form
        std::cout << a_form.str() << "\n";
    }
    return 0;
}

int cmd_reduce(const std::string& entries) {
    const PretzelDiagram C = canonical(reduce(PretzelDiagram::parse(entries)));
    const DiagramParams p = params(C);
    std::cout << C.str() << "\n"
              << "r=" << p.r << " s=" << p.s << " z=" << p.z << " alpha=" << p.alpha
              << " beta=" << p.beta << " lambda=" << p.lambda << " Sigma=" << p.Sigma
              << " M=" << (p.M ? std::to_string(*p.M) : "-") << "\n";
    return 0;
}

bool same_census(const std::vector<CensusEntry>& a, const std::vector<CensusEntry>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].diagram != b[i].diagram || a[i].verdict.S != b[i].verdict.S ||
            a[i].verdict.case_label != b[i].verdict.case_label || a[i].knot != b[i].knot)
            return false;
    }
    return true;
}

int cmd_enumerate(int S, bool knots, const std::string& format, bool oracle, int jobs) {
    const auto list = pretzel::enumerate(S, knots, jobs);
    if (oracle && !same_census(list, brute_census(S, knots, jobs)))
        throw std::runtime_error("census oracle mismatch at span " + std::to_string(S));
    if (format == "json")
        std::cout << render_json(list) << "\n";
    else
        std::cout << render_text(list);
    return 0;
}

int cmd_classify(const std::string& table, const int* span_filter, const std::string& format,
                 int jobs) {
    std::vector<KnotRecord> records = load_table(table);
    if (span_filter) {
        std::vector<KnotRecord> kept;
        for (auto& r : records)
            if (span_t(r.v1) + 1 == *span_filter) kept.push_back(std::move(r));
        records = std::move(kept);
    }
    const auto reports = classify(records, jobs);
    if (format == "json")
        std::cout << render_json(reports) << "\n";
    else
        std::cout << render_text(reports);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pretzel diagram toolkit: Kauffman brackets, Jones spans, span census, "
                 "knot table matching"};
    app.require_subcommand(1);

    std::string entries;
    std::string method = "formula";
    std::string format = "text";
    std::string table;
    bool verify = false, want_v1 = false, knots = false, oracle = false;
    int span_target = 0, jobs = 0;

    const std::string entries_help = "comma-separated twist counts, e.g. 2,-3,-4 "
                                     "(prefix negative-first input with --)";

    auto* cb = app.add_subcommand("bracket", "Kauffman bracket of P(entries)");
    cb->add_option("entries", entries, entries_help)->required();
    cb->add_flag("--verify", verify, "cross-check recurrence and state sum");

    auto* cs = app.add_subcommand("span", "span of the Jones polynomial with its case");
    cs->add_option("entries", entries, entries_help)->required();
    cs->add_option("--method", method, "formula|bracket|both")
        ->check(CLI::IsMember({"formula", "bracket", "both"}));

    auto* cj = app.add_subcommand("jones", "Jones polynomial in t (A-form for odd links)");
    cj->add_option("entries", entries, entries_help)->required();
    cj->add_flag("--v1", want_v1, "unknot-normalized V1 (knots only)");

    auto* cr = app.add_subcommand("reduce", "canonical reduced form and parameters");
    cr->add_option("entries", entries, entries_help)->required();

    auto* ce = app.add_subcommand("enumerate", "all reduced diagrams with a given span");
    ce->add_option("--span", span_target, "target span")->required();
    ce->add_flag("--knots", knots, "keep knot diagrams only");
    ce->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    ce->add_flag("--oracle", oracle, "verify against the bracket-based census");
    ce->add_option("--jobs", jobs, "worker threads (default: hardware)");

    auto* cc = app.add_subcommand("classify", "match knot table rows against censuses");
    cc->add_option("--table", table, "JSON-lines knot table")->required();
    auto* span_opt = cc->add_option("--span", span_target, "only rows with this span");
    cc->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cc->add_option("--jobs", jobs, "worker threads (default: hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cb->parsed()) return cmd_bracket(entries, verify);
        if (cs->parsed()) return cmd_span(entries, method);
        if (cj->parsed()) return cmd_jones(entries, want_v1);
        if (cr->parsed()) return cmd_reduce(entries);
        if (ce->parsed()) return cmd_enumerate(span_target, knots, format, oracle, jobs);
        if (cc->parsed())
            return cmd_classify(table, span_opt->count() ? &span_target : nullptr, format,
                                jobs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
