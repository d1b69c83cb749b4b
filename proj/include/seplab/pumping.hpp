// pumping.hpp -- simultaneous transition profiles and joint pumping constants
// for families of regular languages over a single letter
#pragma once

#include <cstddef>
#include <cstdint>
#include <tuple>
#include <vector>

#include "seplab/automata.hpp"

namespace seplab {

// A relation over the disjoint union of the state sets of a fixed automaton
// list; pairs never cross automata. Canonically sorted.
struct TransitionProfile {
    std::vector<std::tuple<std::size_t, AutState, AutState>> pairs; // (automaton, q, q')
    std::uint64_t fingerprint = 0;

    bool operator==(const TransitionProfile&) const = default;
    bool operator<(const TransitionProfile& o) const { return pairs < o.pairs; }
};

struct PumpingConstants {
    std::size_t m = 0; // threshold, >= 1
    std::size_t k = 0; // period, >= 1
};

std::uint64_t automata_fingerprint(const std::vector<Nfa>& automata);

// The single-letter profile: all delta-pairs on `a`, unioned over the list.
TransitionProfile profile_of(const std::vector<Nfa>& automata, const Letter& a);

// Relational composition, per automaton.
TransitionProfile compose(const TransitionProfile& t1, const TransitionProfile& t2);

TransitionProfile identity_profile(const std::vector<Nfa>& automata);

// Enumerates profiles of a, a^2, a^3, ... until one repeats; m is the first
// occurrence of the repeating profile and k the gap, so tau_{a^m} =
// tau_{a^{m+k}} and the profile sequence is (m, k)-periodic.
PumpingConstants pumping_constants(const std::vector<Nfa>& automata, const Letter& a);

// Direct membership check of the pumping property: for every automaton, every
// m+k <= l <= l_max and 0 <= j <= j_max, a^l is accepted iff a^{l+j*k} is.
bool verify_pumping(const std::vector<Nfa>& automata, const Letter& a, PumpingConstants c,
                    std::size_t l_max, std::size_t j_max);

} // namespace seplab
