// lts.hpp -- finite labelled transition systems and witness-family generators
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace seplab {

using StateId = std::size_t;
using Letter = std::string;
using Word = std::vector<Letter>;

// A finite LTS: states carry proposition sets, edges carry letters.
// Values are treated as immutable once built; all operations below are pure.
class Lts {
public:
    StateId add_state(const std::string& name);
    StateId ensure_state(const std::string& name);
    void add_letter(const Letter& a);
    void add_prop(StateId s, const std::string& prop);
    void add_transition(StateId src, const Letter& a, StateId dst);
    void set_initial(StateId s);

    std::size_t state_count() const { return names_.size(); }
    const std::string& state_name(StateId s) const;
    std::optional<StateId> find_state(const std::string& name) const;
    StateId state(const std::string& name) const; // throws InputError if absent

    const std::set<Letter>& alphabet() const { return alphabet_; }
    bool has_letter(const Letter& a) const { return alphabet_.count(a) > 0; }
    std::optional<StateId> initial() const { return initial_; }

    const std::set<std::string>& props_of(StateId s) const;
    bool has_prop(StateId s, const std::string& prop) const;
    std::set<std::string> all_props() const;

    const std::vector<StateId>& successors(StateId s, const Letter& a) const;
    // All (letter, target) pairs leaving s, in deterministic order.
    std::vector<std::pair<Letter, StateId>> out_edges(StateId s) const;
    std::size_t transition_count() const;

private:
    void check_state(StateId s) const;

    std::vector<std::string> names_;
    std::map<std::string, StateId> by_name_;
    std::vector<std::set<std::string>> props_;
    std::map<std::pair<StateId, Letter>, std::vector<StateId>> succ_;
    std::set<Letter> alphabet_;
    std::optional<StateId> initial_;
};

// { t | s ->w t } per the inductive word-reachability definition; w = epsilon
// yields {s}.
std::set<StateId> reach_by_word(const Lts& lts, StateId s, const Word& w);

// All (w, t) with |w| <= max_len and s ->w t, exhaustively.
std::set<std::pair<Word, StateId>> words_from(const Lts& lts, StateId s, std::size_t max_len);

// The b-labelled descending chain l -> l-1 -> ... -> 0 with p exactly at 0;
// initial state l. State names are the plain numbers.
Lts make_chain_b(std::size_t l);

struct WitnessPair {
    Lts t1;
    Lts t2;
};

// The a-chain / b-chain witness pair parameterised by (m, k, d), l = (m+k)*d.
// T1: a-chain l_4..0_4, then a to u, then b-chain u -> l_1 -> ... -> 0_1 with
// p at 0_1. T2: a-chain l_5..0_5, then a to dn, then two b-branches of depths
// l+1 and l+k+1 ending in p. With cross_edge, T1 additionally has
// 0_4 -a-> dn' where dn' heads a fresh copy of T2's fork substructure.
WitnessPair make_witness_diabox(std::size_t m, std::size_t k, std::size_t d, bool cross_edge);

// The a^n b a^n witness pair: left a-chains of length (m+k)*d - 1 into u
// (resp. dn), a single b-edge out, then a-chains of length (m+k)*d (and
// additionally (m+k)*d + k for T2's second branch), p at each chain end.
// cross_edge adds 0_4 -a-> dn' with a fresh fork copy, as for diabox.
WitnessPair make_witness_an_b_an(std::size_t m, std::size_t k, std::size_t d, bool cross_edge);

// "abba" -> [a,b,b,a]; tokens may also be whitespace-separated for
// multi-character letters.
Word word_from_string(const std::string& text);
std::string word_to_string(const Word& w);

} // namespace seplab
