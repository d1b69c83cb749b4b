// automata.hpp -- acceptors for REG/VPL/CFL: NFA, PDA, VPA and their algebra
#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "seplab/lts.hpp"

namespace seplab {

using AutState = std::size_t;
using StackSymbol = std::string;

class Nfa {
public:
    AutState add_state(const std::string& name);
    AutState ensure_state(const std::string& name);
    void add_letter(const Letter& a);
    void add_edge(AutState src, const Letter& a, AutState dst);
    void set_start(AutState q);
    void add_accepting(AutState q);

    std::size_t state_count() const { return names_.size(); }
    const std::string& state_name(AutState q) const;
    std::optional<AutState> find_state(const std::string& name) const;
    const std::set<Letter>& alphabet() const { return alphabet_; }
    AutState start() const;
    bool accepting(AutState q) const;
    const std::set<AutState>& accepting_states() const { return accepting_; }
    const std::vector<AutState>& successors(AutState q, const Letter& a) const;
    std::vector<std::tuple<AutState, Letter, AutState>> edges() const;

    // Exactly one successor per (state, letter) pair.
    bool deterministic() const;

private:
    std::vector<std::string> names_;
    std::map<std::string, AutState> by_name_;
    std::map<std::pair<AutState, Letter>, std::vector<AutState>> succ_;
    std::set<Letter> alphabet_;
    std::optional<AutState> start_;
    std::set<AutState> accepting_;
};

bool nfa_accepts(const Nfa& nfa, const Word& w);

// Subset construction restricted to reachable subsets; the result is total
// over the input alphabet and accepts the same language.
Nfa determinize(const Nfa& nfa);

// A real-time pushdown automaton: every transition consumes one input letter.
// A transition either inspects the top stack symbol (pop set) or fires on the
// empty stack (pop empty). `push` is written bottom..top.
struct PdaTransition {
    AutState src = 0;
    Letter letter;
    std::optional<StackSymbol> pop; // nullopt = empty-stack (bottom marker) case
    std::vector<StackSymbol> push;
    AutState dst = 0;

    bool operator==(const PdaTransition&) const = default;
};

class Pda {
public:
    AutState add_state(const std::string& name);
    AutState ensure_state(const std::string& name);
    void add_letter(const Letter& a);
    void add_stack_symbol(const StackSymbol& g);
    void add_transition(PdaTransition t);
    void set_start(AutState q);
    void add_accepting(AutState q);

    std::size_t state_count() const { return names_.size(); }
    const std::string& state_name(AutState q) const;
    std::optional<AutState> find_state(const std::string& name) const;
    const std::set<Letter>& alphabet() const { return alphabet_; }
    const std::set<StackSymbol>& stack_alphabet() const { return stack_alphabet_; }
    AutState start() const;
    bool accepting(AutState q) const;
    const std::set<AutState>& accepting_states() const { return accepting_; }
    const std::vector<PdaTransition>& transitions() const { return transitions_; }
    std::size_t max_push() const;

private:
    std::vector<std::string> names_;
    std::map<std::string, AutState> by_name_;
    std::vector<PdaTransition> transitions_;
    std::set<Letter> alphabet_;
    std::set<StackSymbol> stack_alphabet_;
    std::optional<AutState> start_;
    std::set<AutState> accepting_;
};

// Run search over the configuration graph; terminates because each step
// consumes one letter. With require_empty_stack, acceptance additionally
// demands an empty final stack (the VPA convention).
bool pda_accepts(const Pda& pda, const Word& w, bool require_empty_stack = false);

// PDA accepting { w | aw in L(pda) }: a fresh initial state simulates every
// first transition the original automaton could take on `a` from the empty
// stack, then control continues in the original automaton.
Pda derivative(const Pda& pda, const Letter& a);

// L(p1) union L(p2) over a shared input alphabet, without epsilon moves:
// a fresh initial state offers both automata's initial moves.
Pda pda_union(const Pda& p1, const Pda& p2);

// Product construction pairing PDA control states with NFA states.
Pda intersect_regular(const Pda& pda, const Nfa& nfa);

// Control states q such that some configuration (q, stack) is reachable from
// (start, empty stack). Indexed by state id.
std::vector<bool> pda_reachable_controls(const Pda& pda);

bool pda_empty(const Pda& pda);

// NFA over {a} for { a^n | a^n in L(pda) }. Tests membership of a^0..a^{3*bound}
// and looks for a threshold/period pair (t, c), t + c <= bound, consistent on
// the whole window; throws InputError("bound too small ...") if none exists.
Nfa unary_slice(const Pda& pda, const Letter& a, std::size_t bound);

// Lift an NFA to a stack-ignoring PDA.
Pda nfa_to_pda(const Nfa& nfa);

struct Vpa {
    Pda pda;
    std::set<Letter> calls;
    std::set<Letter> returns;
    std::set<Letter> internals;
};

// Checks the per-letter transition shape rules: calls push one net symbol,
// returns pop (never on the bottom marker), internals keep the stack height.
bool vpa_validate(const Vpa& vpa);

bool vpa_accepts(const Vpa& vpa, const Word& w);

enum class LangClass { Reg, Vpl, Cfl };

std::string lang_class_name(LangClass c);
LangClass lang_class_from_name(const std::string& name);

// A named language with its acceptor; the member used depends on the class
// tag (Reg -> nfa, Vpl -> vpa, Cfl -> pda or vpa).
struct LanguageRef {
    std::string name;
    LangClass cls = LangClass::Reg;
    std::shared_ptr<const Nfa> nfa;
    std::shared_ptr<const Pda> pda;
    std::shared_ptr<const Vpa> vpa;

    // The acceptor as a PDA, lifting NFAs on demand.
    std::shared_ptr<const Pda> as_pda() const;
    bool member(const Word& w) const;
    const std::set<Letter>& alphabet() const;
};

LanguageRef make_language(std::string name, Nfa nfa);
LanguageRef make_language(std::string name, Pda pda);
LanguageRef make_language(std::string name, Vpa vpa);

} // namespace seplab
