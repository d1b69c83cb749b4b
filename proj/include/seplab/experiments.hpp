// experiments.hpp -- the separation experiments: pumping-driven witness
// structures, exhaustive bounded formula enumeration, FLC verdicts
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seplab/automata.hpp"
#include "seplab/flc.hpp"
#include "seplab/pdl.hpp"
#include "seplab/pumping.hpp"

namespace seplab {

struct ExperimentBounds {
    std::size_t size_cap = 6;     // formula node-count cap for enumeration
    std::size_t slice_bound = 12; // unary_slice threshold+period budget
};

struct FormulaDisagreement {
    PdlFormula formula;
    std::string state1;
    std::string state2;
    bool verdict1 = false;
    bool verdict2 = false;
};

struct ExperimentReport {
    std::string experiment;
    std::vector<std::string> lang_names;
    std::size_t m = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    std::size_t l = 0;
    std::size_t size_cap = 0;
    bool cross_edge = false;
    std::size_t formulas_checked = 0;
    std::size_t pairs_checked = 0;
    // Disagreements at states the indistinguishability claim covers; any
    // entry here contradicts the theory and indicates an implementation bug.
    std::vector<FormulaDisagreement> disagreements;
    // Chain experiment only: state pairs below the claim threshold.
    std::vector<FormulaDisagreement> unclaimed_disagreements;
    std::string claim_note;
    std::string flc_property;
    std::optional<std::pair<bool, bool>> flc_verdicts; // (on T1, on T2)
    std::int64_t duration_ms = 0;

    bool indistinguishable() const { return disagreements.empty(); }
    std::string to_text() const;
    std::string to_json() const; // stable key and entry order
};

// Chain run: pumping constants from the b-slices, chains T^b_l and
// T^b_{l+k} with l = (m+k)*d', agreement of all enumerated formulas of
// modal depth <= d' at states j (in T^b_l) vs j+k (in T^b_{l+k}); the claim
// covers j >= (m+k)*d'.
ExperimentReport run_chain_experiment(const std::vector<LanguageRef>& langs, std::size_t d_prime,
                                      const ExperimentBounds& bounds);

// Witness-pair run for the a^n/[b^n] separation: formula agreement at the two
// initial states plus the FLC verdicts for dia_an_box_bn (expected true on T1,
// false on T2).
ExperimentReport run_diabox_experiment(const std::vector<LanguageRef>& langs, std::size_t d,
                                       const ExperimentBounds& bounds, bool cross_edge = true);

// Same for the a^n [b] a^n separation; pumping constants come from the
// a-slices of the languages together with the a-slices of their b-derivatives.
ExperimentReport run_an_b_an_experiment(const std::vector<LanguageRef>& langs, std::size_t d,
                                        const ExperimentBounds& bounds, bool cross_edge = true);

} // namespace seplab
