// pdl.hpp -- PDL over language classes: syntax, modal depth, model checking,
// bounded formula enumeration
#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "seplab/automata.hpp"
#include "seplab/lts.hpp"

namespace seplab {

enum class PdlKind { Prop, Not, Or, And, Dia, Box };

struct PdlNode;
using PdlFormula = std::shared_ptr<const PdlNode>;

struct PdlNode {
    PdlKind kind;
    std::string name;           // proposition (Prop) or language name (Dia/Box)
    PdlFormula left;            // single child for Not/Dia/Box
    PdlFormula right;
};

PdlFormula pdl_prop(std::string p);
PdlFormula pdl_not(PdlFormula f);
PdlFormula pdl_or(PdlFormula a, PdlFormula b);
PdlFormula pdl_and(PdlFormula a, PdlFormula b);
PdlFormula pdl_dia(std::string lang, PdlFormula f);
PdlFormula pdl_box(std::string lang, PdlFormula f);
PdlFormula pdl_tt();
PdlFormula pdl_ff();

// Nesting depth of modal operators, with negation counted as one level.
std::size_t modal_depth(const PdlFormula& f);
// The variant that lets negation pass through for free.
std::size_t modal_only_depth(const PdlFormula& f);

std::size_t pdl_size(const PdlFormula& f); // node count

// Structural total order / equality; used for canonicalisation.
int pdl_compare(const PdlFormula& a, const PdlFormula& b);
bool pdl_equal(const PdlFormula& a, const PdlFormula& b);

std::string pdl_to_string(const PdlFormula& f);

std::set<std::string> pdl_language_names(const PdlFormula& f);
std::set<std::string> pdl_prop_names(const PdlFormula& f);

using LanguageTable = std::map<std::string, LanguageRef>;
using StatePairSet = std::set<std::pair<StateId, StateId>>;

// { (s,t) | s ->w t for some w in L }. Regular languages go through an
// NFA/LTS product; pushdown ones through a per-source product with the LTS
// read as an NFA, then pushdown reachability.
StatePairSet reach_relation(const Lts& lts, const LanguageRef& lang);

// Evaluation context caching one reach relation per language name.
class PdlEvaluator {
public:
    PdlEvaluator(const Lts& lts, const LanguageTable& langs);

    std::set<StateId> eval(const PdlFormula& f);
    bool holds_at(StateId s, const PdlFormula& f);

private:
    const StatePairSet& relation(const std::string& lang_name);

    const Lts& lts_;
    const LanguageTable& langs_;
    std::map<std::string, StatePairSet> cache_;
};

std::set<StateId> eval_pdl(const Lts& lts, const LanguageTable& langs, const PdlFormula& f);

// All canonical formulas over the given language names and propositions with
// modal_depth <= depth and node count <= size_cap. Canonical means: operands
// of a commutative connective are ordered, and no double negation occurs.
// Deterministic order.
std::vector<PdlFormula> enumerate_formulas(const std::vector<std::string>& langs,
                                           const std::vector<std::string>& props,
                                           std::size_t depth, std::size_t size_cap);

} // namespace seplab
