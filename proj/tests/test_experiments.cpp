#include <doctest.h>

#include "seplab/experiments.hpp"

using namespace seplab;

namespace {

LanguageRef lang_anbn() { return make_language("ANBN", stock_anbn_pda()); }
LanguageRef lang_anban() { return make_language("ANBAN", stock_anban_pda()); }
LanguageRef lang_bstar() { return make_language("BSTAR", stock_bstar_nfa()); }
LanguageRef lang_astar() { return make_language("ASTAR", stock_astar_nfa()); }
LanguageRef lang_evenb() { return make_language("EVENB", stock_evenb_nfa()); }

ExperimentBounds small_bounds() {
    ExperimentBounds b;
    b.size_cap = 4;
    return b;
}

} // namespace

TEST_CASE("chain experiment") {
    SUBCASE("b* alone is indistinguishable at depth 1") {
        ExperimentReport r = run_chain_experiment({lang_bstar()}, 1, small_bounds());
        CHECK(r.experiment == "chain");
        CHECK(r.m == 1);
        CHECK(r.k == 1);
        CHECK(r.l == 2);
        CHECK(r.formulas_checked > 0);
        CHECK(r.indistinguishable());
    }
    SUBCASE("(bb)* is indistinguishable at depth 1 with period 2") {
        ExperimentReport r = run_chain_experiment({lang_evenb()}, 1, small_bounds());
        CHECK(r.m == 1);
        CHECK(r.k == 2);
        CHECK(r.l == 3);
        CHECK(r.indistinguishable());
        CHECK(r.claim_note.find("j >= 3") != std::string::npos);
    }
    SUBCASE("below the claim threshold disagreements are reported separately") {
        // <EVENB>p distinguishes state 0 (T^b_3) from state 2 (T^b_5): the
        // first is the p-state itself, reached by the empty word.
        ExperimentReport r = run_chain_experiment({lang_evenb()}, 1, small_bounds());
        CHECK(r.disagreements.empty());
        CHECK(!r.unclaimed_disagreements.empty());
    }
}

TEST_CASE("diabox experiment") {
    SUBCASE("a^n b^n with b* shows zero disagreements and the FLC split") {
        ExperimentReport r = run_diabox_experiment({lang_anbn(), lang_bstar()}, 1, small_bounds());
        CHECK(r.indistinguishable());
        REQUIRE(r.flc_verdicts.has_value());
        CHECK(r.flc_verdicts->first);
        CHECK_FALSE(r.flc_verdicts->second);
        CHECK(r.cross_edge);
        CHECK(r.flc_property == "dia_an_box_bn");
    }
    SUBCASE("no languages at all is trivially indistinguishable") {
        ExperimentReport r = run_diabox_experiment({}, 1, small_bounds());
        CHECK(r.indistinguishable());
        CHECK(r.m == 1);
        CHECK(r.k == 1);
    }
    SUBCASE("without the junction copy a depth-1 box formula distinguishes") {
        ExperimentReport r =
            run_diabox_experiment({lang_anbn()}, 1, small_bounds(), /*cross_edge=*/false);
        REQUIRE_FALSE(r.indistinguishable());
        bool found_box = false;
        for (const auto& dis : r.disagreements)
            if (pdl_to_string(dis.formula) == "[ANBN]p") found_box = true;
        CHECK(found_box);
        // The FLC verdicts stay (true, false) either way.
        CHECK(r.flc_verdicts == std::make_pair(true, false));
    }
}

TEST_CASE("an_b_an experiment") {
    SUBCASE("a* alone") {
        ExperimentReport r = run_an_b_an_experiment({lang_astar()}, 1, small_bounds());
        CHECK(r.indistinguishable());
        CHECK(r.flc_verdicts == std::make_pair(true, false));
        CHECK(r.flc_property == "dia_an_box_b_dia_an");
    }
    SUBCASE("the a^n b a^n language itself") {
        ExperimentReport r = run_an_b_an_experiment({lang_anban()}, 1, small_bounds());
        CHECK(r.indistinguishable());
        CHECK(r.flc_verdicts == std::make_pair(true, false));
    }
    SUBCASE("derivative slices of b-free languages are empty") {
        // With only a* supplied, the b-derivative contributes nothing and the
        // constants come from the a-slices alone: a* pumps with (1,1).
        ExperimentReport r = run_an_b_an_experiment({lang_astar()}, 1, small_bounds());
        CHECK(r.m == 1);
        CHECK(r.k == 1);
    }
}

TEST_CASE("reports are deterministic and machine-readable") {
    ExperimentReport r1 = run_diabox_experiment({lang_anbn(), lang_bstar()}, 1, small_bounds());
    ExperimentReport r2 = run_diabox_experiment({lang_anbn(), lang_bstar()}, 1, small_bounds());
    r1.duration_ms = r2.duration_ms = 0; // wall-clock noise aside
    CHECK(r1.to_json() == r2.to_json());
    CHECK(r1.to_text() == r2.to_text());

    CHECK(r1.to_text().find("falsification harness") != std::string::npos);
    CHECK(r1.to_json().find("\"experiment\": \"diabox\"") != std::string::npos);
    CHECK(r1.to_json().find("\"disagreements\": []") != std::string::npos);
}
