// flc.hpp -- Fixpoint Logic with Chop: syntax, predicate-transformer
// semantics over finite LTS, the vpFLC recognizer, and the stock separating
// properties
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "seplab/automata.hpp"
#include "seplab/lts.hpp"
#include "seplab/pdl.hpp"

namespace seplab {

enum class FlcKind { Atom, NegAtom, Var, Tau, Dia, Box, Or, And, Mu, Nu, Chop };

struct FlcNode;
using FlcFormula = std::shared_ptr<const FlcNode>;

struct FlcNode {
    FlcKind kind;
    std::string name;   // proposition, variable, or letter
    FlcFormula left;    // binder body in left; chop/or/and children in left+right
    FlcFormula right;
};

FlcFormula flc_atom(std::string q);
FlcFormula flc_neg_atom(std::string q);
FlcFormula flc_var(std::string x);
FlcFormula flc_tau();
FlcFormula flc_dia(std::string a);
FlcFormula flc_box(std::string a);
FlcFormula flc_or(FlcFormula a, FlcFormula b);
FlcFormula flc_and(FlcFormula a, FlcFormula b);
FlcFormula flc_mu(std::string x, FlcFormula body);
FlcFormula flc_nu(std::string x, FlcFormula body);
FlcFormula flc_chop(FlcFormula a, FlcFormula b);
// q | !q for a reserved proposition; the full-state-set transformer.
FlcFormula flc_tt();

std::string flc_to_string(const FlcFormula& f);
int flc_compare(const FlcFormula& a, const FlcFormula& b);
bool flc_equal(const FlcFormula& a, const FlcFormula& b);
std::set<std::string> flc_free_vars(const FlcFormula& f);
bool flc_closed(const FlcFormula& f);
std::set<Letter> flc_letters(const FlcFormula& f);

// State sets as bitmasks; FLC evaluation supports at most 64 states.
using StateBits = std::uint64_t;

StateBits lts_universe(const Lts& lts);
std::uint64_t lts_fingerprint(const Lts& lts);

// A tabulated monotone function from state sets to state sets.
class PredicateTransformer {
public:
    PredicateTransformer(std::size_t n_states, std::uint64_t universe_fp,
                         std::vector<StateBits> table);

    StateBits apply(StateBits subset) const;
    std::size_t state_count() const { return n_states_; }
    std::uint64_t universe_fingerprint() const { return universe_fp_; }
    const std::vector<StateBits>& table() const { return table_; }

    bool operator==(const PredicateTransformer& o) const = default;
    // Pointwise inclusion.
    bool leq(const PredicateTransformer& o) const;
    // Exhaustive monotonicity check; only feasible for small state counts.
    bool is_monotone() const;
    // T subseteq T' implies f(T) subseteq f(T'), on `samples` random pairs.
    bool monotone_on_sample(std::size_t samples, std::uint64_t seed) const;

    static PredicateTransformer constant(std::size_t n, std::uint64_t fp, StateBits value);
    static PredicateTransformer identity(std::size_t n, std::uint64_t fp);

private:
    std::size_t n_states_;
    std::uint64_t universe_fp_;
    std::vector<StateBits> table_;
};

struct FlcEnvironment {
    std::map<std::string, PredicateTransformer> vars;
};

// Number of states up to which full transformer tables are built; overridable
// via the SEPLAB_FLC_STATE_CAP environment variable.
std::size_t flc_state_cap();

// Full tabulated semantics. Throws ResourceError beyond the state cap and
// InputError on unbound variables.
PredicateTransformer eval_flc(const Lts& lts, const FlcFormula& f,
                              const FlcEnvironment& env = {});

// sem(f)(S) for closed f, computed demand-driven: fixpoint approximations are
// kept only for the argument sets actually queried, so chains far beyond the
// tabulation cap stay cheap. Rejects genuinely alternating fixpoints.
StateBits flc_sem(const Lts& lts, const FlcFormula& f);

bool flc_holds(const Lts& lts, StateId s, const FlcFormula& f);

struct AlphabetPartition {
    std::set<Letter> calls;
    std::set<Letter> returns;
    std::set<Letter> internals;
};

// Syntactic membership in the vpFLC fragment: internal modalities guard
// plain compositions, call modalities pair with a matching return on the
// chop spine, fixpoint binders may head a composition.
bool is_vpflc(const FlcFormula& f, const AlphabetPartition& partition);

// ---------------------------------------------------------------------------
// Stock separating properties
// ---------------------------------------------------------------------------

struct BuiltProperty {
    std::string name;
    FlcFormula flc;
    std::optional<PdlFormula> pdl;
    LanguageTable langs; // acceptors referenced by the PDL form
};

// name in { dia_anbn, dia_anban, game_iter, dia_an_box_bn, dia_an_box_b_dia_an }
BuiltProperty build_property(const std::string& name);
std::vector<std::string> property_names();

// Stock acceptors (alphabet {a, b} throughout).
Pda stock_anbn_pda();   // { a^n b^n | n >= 1 }
Vpa stock_anbn_vpa();   // same language, a call / b return
Pda stock_anban_pda();  // { a^n b a^n | n >= 1 }
Nfa stock_bstar_nfa();  // b*
Nfa stock_astar_nfa();  // a*
Nfa stock_evenb_nfa();  // (bb)*
Nfa stock_b3star_nfa(); // (bbb)*

} // namespace seplab
