// experiments.cpp -- the separation harness
#include "seplab/experiments.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "seplab/errors.hpp"

namespace seplab {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

PumpingConstants constants_from_slices(const std::vector<Nfa>& slices, const Letter& letter) {
    if (slices.empty()) return {1, 1}; // no languages constrain the structures
    return pumping_constants(slices, letter);
}

LanguageTable table_of(const std::vector<LanguageRef>& langs) {
    LanguageTable table;
    for (const LanguageRef& lang : langs) {
        if (table.count(lang.name))
            throw InputError("duplicate language name '" + lang.name + "'");
        table.emplace(lang.name, lang);
    }
    return table;
}

std::vector<std::string> names_of(const std::vector<LanguageRef>& langs) {
    std::vector<std::string> out;
    for (const LanguageRef& lang : langs) out.push_back(lang.name);
    return out;
}

std::vector<std::string> names_of_table(const LanguageTable& table) {
    std::vector<std::string> out;
    for (const auto& [name, ref] : table) out.push_back(name);
    return out;
}

// Compare every enumerated formula at paired states of two structures.
void compare_formulas(ExperimentReport& report, const Lts& t1, const Lts& t2,
                      const LanguageTable& table,
                      const std::vector<std::pair<StateId, StateId>>& pairs,
                      const std::vector<bool>& claimed, std::size_t depth) {
    std::vector<PdlFormula> formulas =
        enumerate_formulas(names_of_table(table), {"p"}, depth, report.size_cap);
    report.formulas_checked = formulas.size();
    report.pairs_checked = pairs.size();
    PdlEvaluator ev1(t1, table);
    PdlEvaluator ev2(t2, table);
    for (const PdlFormula& f : formulas) {
        std::set<StateId> s1 = ev1.eval(f);
        std::set<StateId> s2 = ev2.eval(f);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            bool v1 = s1.count(pairs[i].first) > 0;
            bool v2 = s2.count(pairs[i].second) > 0;
            if (v1 == v2) continue;
            FormulaDisagreement dis{f, t1.state_name(pairs[i].first),
                                    t2.state_name(pairs[i].second), v1, v2};
            (claimed[i] ? report.disagreements : report.unclaimed_disagreements)
                .push_back(std::move(dis));
        }
    }
}

} // namespace

ExperimentReport run_chain_experiment(const std::vector<LanguageRef>& langs, std::size_t d_prime,
                                      const ExperimentBounds& bounds) {
    auto start = Clock::now();
    ExperimentReport report;
    report.experiment = "chain";
    report.lang_names = names_of(langs);
    report.d = d_prime;
    report.size_cap = bounds.size_cap;

    std::vector<Nfa> slices;
    for (const LanguageRef& lang : langs)
        slices.push_back(unary_slice(*lang.as_pda(), "b", bounds.slice_bound));
    PumpingConstants c = constants_from_slices(slices, "b");
    report.m = c.m;
    report.k = c.k;
    report.l = (c.m + c.k) * d_prime;

    Lts t_l = make_chain_b(report.l);
    Lts t_lk = make_chain_b(report.l + c.k);
    LanguageTable table = table_of(langs);

    std::vector<std::pair<StateId, StateId>> pairs;
    std::vector<bool> claimed;
    const std::size_t threshold = (c.m + c.k) * d_prime;
    for (std::size_t j = 0; j <= report.l; ++j) {
        pairs.emplace_back(t_l.state(std::to_string(j)), t_lk.state(std::to_string(j + c.k)));
        claimed.push_back(j >= threshold);
    }
    report.claim_note = "claim covers states j >= " + std::to_string(threshold) +
                        "; lower pairs are reported informationally";
    compare_formulas(report, t_l, t_lk, table, pairs, claimed, d_prime);

    report.duration_ms = ms_since(start);
    return report;
}

namespace {

ExperimentReport run_witness_experiment(const std::string& name, const std::string& property,
                                        WitnessPair pair,
                                        const std::vector<LanguageRef>& langs, std::size_t d,
                                        const ExperimentBounds& bounds, bool cross_edge,
                                        PumpingConstants c, std::size_t l,
                                        Clock::time_point start) {
    ExperimentReport report;
    report.experiment = name;
    report.lang_names = names_of(langs);
    report.m = c.m;
    report.k = c.k;
    report.d = d;
    report.l = l;
    report.size_cap = bounds.size_cap;
    report.cross_edge = cross_edge;

    LanguageTable table = table_of(langs);
    StateId init1 = *pair.t1.initial();
    StateId init2 = *pair.t2.initial();
    compare_formulas(report, pair.t1, pair.t2, table, {{init1, init2}}, {true}, d);
    report.claim_note = "claim covers the two initial states";

    report.flc_property = property;
    FlcFormula f = build_property(property).flc;
    report.flc_verdicts = {flc_holds(pair.t1, init1, f), flc_holds(pair.t2, init2, f)};

    report.duration_ms = ms_since(start);
    return report;
}

} // namespace

ExperimentReport run_diabox_experiment(const std::vector<LanguageRef>& langs, std::size_t d,
                                       const ExperimentBounds& bounds, bool cross_edge) {
    auto start = Clock::now();
    std::vector<Nfa> slices;
    for (const LanguageRef& lang : langs)
        slices.push_back(unary_slice(*lang.as_pda(), "b", bounds.slice_bound));
    PumpingConstants c = constants_from_slices(slices, "b");
    WitnessPair pair = make_witness_diabox(c.m, c.k, d, cross_edge);
    return run_witness_experiment("diabox", "dia_an_box_bn", std::move(pair), langs, d, bounds,
                                  cross_edge, c, (c.m + c.k) * d, start);
}

ExperimentReport run_an_b_an_experiment(const std::vector<LanguageRef>& langs, std::size_t d,
                                        const ExperimentBounds& bounds, bool cross_edge) {
    auto start = Clock::now();
    // The pumping family holds the a-slices of the languages and of their
    // b-derivatives: paths behind the junction read one b and then a's only.
    std::vector<Nfa> slices;
    for (const LanguageRef& lang : langs) {
        slices.push_back(unary_slice(*lang.as_pda(), "a", bounds.slice_bound));
        slices.push_back(unary_slice(derivative(*lang.as_pda(), "b"), "a", bounds.slice_bound));
    }
    PumpingConstants c = constants_from_slices(slices, "a");
    WitnessPair pair = make_witness_an_b_an(c.m, c.k, d, cross_edge);
    return run_witness_experiment("anban", "dia_an_box_b_dia_an", std::move(pair), langs, d,
                                  bounds, cross_edge, c, (c.m + c.k) * d, start);
}

// ---------------------------------------------------------------------------
// Report rendering
// ---------------------------------------------------------------------------

std::string ExperimentReport::to_text() const {
    std::ostringstream out;
    out << "experiment: " << experiment << '\n';
    out << "languages:";
    for (const auto& n : lang_names) out << ' ' << n;
    out << '\n';
    out << "pumping constants: m=" << m << " k=" << k << " (d=" << d << ", l=" << l << ")\n";
    if (experiment != "chain") out << "cross edge: " << (cross_edge ? "on" : "off") << '\n';
    out << "formulas checked: " << formulas_checked << " (size cap " << size_cap
        << ", state pairs " << pairs_checked << ")\n";
    out << "note: bounded enumeration; this is a falsification harness, not a proof\n";
    if (!claim_note.empty()) out << "scope: " << claim_note << '\n';
    out << "disagreements: " << disagreements.size() << '\n';
    for (const auto& dis : disagreements)
        out << "  " << pdl_to_string(dis.formula) << "  @" << dis.state1 << "="
            << (dis.verdict1 ? "true" : "false") << "  @" << dis.state2 << "="
            << (dis.verdict2 ? "true" : "false") << '\n';
    if (!unclaimed_disagreements.empty()) {
        out << "below-threshold disagreements (outside the claim): "
            << unclaimed_disagreements.size() << '\n';
        for (const auto& dis : unclaimed_disagreements)
            out << "  " << pdl_to_string(dis.formula) << "  @" << dis.state1 << "="
                << (dis.verdict1 ? "true" : "false") << "  @" << dis.state2 << "="
                << (dis.verdict2 ? "true" : "false") << '\n';
    }
    if (flc_verdicts)
        out << "flc verdicts (" << flc_property << "): T1=" << (flc_verdicts->first ? "true" : "false")
            << " T2=" << (flc_verdicts->second ? "true" : "false") << '\n';
    out << "verdict: " << (indistinguishable() ? "indistinguishable" : "DISTINGUISHED") << '\n';
    out << "duration_ms: " << duration_ms << '\n';
    return out.str();
}

std::string ExperimentReport::to_json() const {
    nlohmann::ordered_json j;
    j["experiment"] = experiment;
    nlohmann::ordered_json params;
    params["d"] = d;
    params["size_cap"] = size_cap;
    params["langs"] = lang_names;
    if (experiment != "chain") params["cross_edge"] = cross_edge;
    j["params"] = params;
    j["m"] = m;
    j["k"] = k;
    j["l"] = l;
    j["formulas_checked"] = formulas_checked;
    auto render = [](const std::vector<FormulaDisagreement>& list) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& dis : list) {
            nlohmann::ordered_json e;
            e["formula"] = pdl_to_string(dis.formula);
            e["state1"] = dis.state1;
            e["verdict1"] = dis.verdict1;
            e["state2"] = dis.state2;
            e["verdict2"] = dis.verdict2;
            arr.push_back(std::move(e));
        }
        return arr;
    };
    j["disagreements"] = render(disagreements);
    if (!unclaimed_disagreements.empty())
        j["unclaimed_disagreements"] = render(unclaimed_disagreements);
    if (flc_verdicts) {
        nlohmann::ordered_json v;
        v["property"] = flc_property;
        v["t1"] = flc_verdicts->first;
        v["t2"] = flc_verdicts->second;
        j["flc_verdicts"] = std::move(v);
    } else {
        j["flc_verdicts"] = nullptr;
    }
    j["duration_ms"] = duration_ms;
    return j.dump(2);
}

} // namespace seplab
