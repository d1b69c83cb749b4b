// pumping.cpp -- profile enumeration and first-repeat detection
#include "seplab/pumping.hpp"

#include <algorithm>
#include <map>

#include "seplab/errors.hpp"

namespace seplab {

std::uint64_t automata_fingerprint(const std::vector<Nfa>& automata) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(automata.size());
    for (const Nfa& a : automata) {
        mix(a.state_count());
        for (const auto& [src, letter, dst] : a.edges()) {
            mix(src);
            for (char c : letter) mix(static_cast<unsigned char>(c));
            mix(dst);
        }
    }
    return h;
}

TransitionProfile profile_of(const std::vector<Nfa>& automata, const Letter& a) {
    if (automata.empty()) throw InputError("profile_of: empty automaton list");
    for (const Nfa& nfa : automata)
        if (!nfa.alphabet().count(a))
            throw InputError("profile_of: letter '" + a + "' not in every alphabet");
    TransitionProfile out;
    out.fingerprint = automata_fingerprint(automata);
    for (std::size_t i = 0; i < automata.size(); ++i)
        for (const auto& [src, letter, dst] : automata[i].edges())
            if (letter == a) out.pairs.emplace_back(i, src, dst);
    std::sort(out.pairs.begin(), out.pairs.end());
    out.pairs.erase(std::unique(out.pairs.begin(), out.pairs.end()), out.pairs.end());
    return out;
}

TransitionProfile compose(const TransitionProfile& t1, const TransitionProfile& t2) {
    if (t1.fingerprint != t2.fingerprint)
        throw InputError("compose: profiles belong to different automaton lists");
    // Join on (automaton, middle state); t2's pairs indexed first.
    std::map<std::pair<std::size_t, AutState>, std::vector<AutState>> by_src;
    for (const auto& [i, q, q2] : t2.pairs) by_src[{i, q}].push_back(q2);
    TransitionProfile out;
    out.fingerprint = t1.fingerprint;
    for (const auto& [i, q, mid] : t1.pairs) {
        auto it = by_src.find({i, mid});
        if (it == by_src.end()) continue;
        for (AutState q2 : it->second) out.pairs.emplace_back(i, q, q2);
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    out.pairs.erase(std::unique(out.pairs.begin(), out.pairs.end()), out.pairs.end());
    return out;
}

TransitionProfile identity_profile(const std::vector<Nfa>& automata) {
    TransitionProfile out;
    out.fingerprint = automata_fingerprint(automata);
    for (std::size_t i = 0; i < automata.size(); ++i)
        for (AutState q = 0; q < automata[i].state_count(); ++q) out.pairs.emplace_back(i, q, q);
    return out;
}

PumpingConstants pumping_constants(const std::vector<Nfa>& automata, const Letter& a) {
    TransitionProfile step = profile_of(automata, a);
    std::map<TransitionProfile, std::size_t> first_seen;
    TransitionProfile current = step;
    std::size_t index = 1;
    while (true) {
        auto it = first_seen.find(current);
        if (it != first_seen.end()) return {it->second, index - it->second};
        first_seen[current] = index;
        current = compose(current, step);
        ++index;
    }
}

bool verify_pumping(const std::vector<Nfa>& automata, const Letter& a, PumpingConstants c,
                    std::size_t l_max, std::size_t j_max) {
    if (c.k == 0) throw InputError("verify_pumping: period must be positive");
    for (const Nfa& nfa : automata) {
        std::vector<bool> member(l_max + j_max * c.k + 1);
        Word w;
        for (std::size_t n = 0; n < member.size(); ++n) {
            member[n] = nfa_accepts(nfa, w);
            w.push_back(a);
        }
        for (std::size_t l = c.m + c.k; l <= l_max; ++l)
            for (std::size_t j = 0; j <= j_max; ++j)
                if (member[l] != member[l + j * c.k]) return false;
    }
    return true;
}

} // namespace seplab
