// oracles.hpp -- independent reference implementations used only by tests.
// Everything here works by explicit path enumeration or relation powering on
// the raw LTS API, deliberately avoiding the library's evaluators.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "seplab/automata.hpp"
#include "seplab/lts.hpp"
#include "seplab/pdl.hpp"

namespace seplab::oracle {

// Depth-first path enumeration, independent of words_from's BFS.
inline void enum_paths_rec(const Lts& lts, StateId s, std::size_t budget, Word& prefix,
                           std::vector<std::pair<Word, StateId>>& out) {
    out.emplace_back(prefix, s);
    if (budget == 0) return;
    for (const auto& [a, t] : lts.out_edges(s)) {
        prefix.push_back(a);
        enum_paths_rec(lts, t, budget - 1, prefix, out);
        prefix.pop_back();
    }
}

inline std::vector<std::pair<Word, StateId>> enum_paths(const Lts& lts, StateId s,
                                                        std::size_t max_len) {
    std::vector<std::pair<Word, StateId>> out;
    Word prefix;
    enum_paths_rec(lts, s, max_len, prefix, out);
    return out;
}

// Brute-force PDL evaluation: reachability by enumerated paths with a word
// length bound, membership directly on the acceptor.
inline std::set<StateId> brute_pdl(const Lts& lts, const LanguageTable& langs,
                                   const PdlFormula& f, std::size_t word_bound) {
    switch (f->kind) {
        case PdlKind::Prop: {
            std::set<StateId> out;
            for (StateId s = 0; s < lts.state_count(); ++s)
                if (lts.has_prop(s, f->name)) out.insert(s);
            return out;
        }
        case PdlKind::Not: {
            std::set<StateId> sub = brute_pdl(lts, langs, f->left, word_bound);
            std::set<StateId> out;
            for (StateId s = 0; s < lts.state_count(); ++s)
                if (!sub.count(s)) out.insert(s);
            return out;
        }
        case PdlKind::Or: {
            std::set<StateId> out = brute_pdl(lts, langs, f->left, word_bound);
            auto r = brute_pdl(lts, langs, f->right, word_bound);
            out.insert(r.begin(), r.end());
            return out;
        }
        case PdlKind::And: {
            auto l = brute_pdl(lts, langs, f->left, word_bound);
            auto r = brute_pdl(lts, langs, f->right, word_bound);
            std::set<StateId> out;
            for (StateId s : l)
                if (r.count(s)) out.insert(s);
            return out;
        }
        case PdlKind::Dia:
        case PdlKind::Box: {
            auto sub = brute_pdl(lts, langs, f->left, word_bound);
            const LanguageRef& lang = langs.at(f->name);
            std::set<StateId> out;
            for (StateId s = 0; s < lts.state_count(); ++s) {
                bool dia = false, box = true;
                for (const auto& [w, t] : enum_paths(lts, s, word_bound)) {
                    if (!lang.member(w)) continue;
                    if (sub.count(t))
                        dia = true;
                    else
                        box = false;
                }
                if (f->kind == PdlKind::Dia ? dia : box) out.insert(s);
            }
            return out;
        }
    }
    return {};
}

// --- relation powering -------------------------------------------------

using Row = std::uint64_t;
using Rel = std::vector<Row>; // Rel[s] = successor mask

inline Rel step_relation(const Lts& lts, const Letter& a) {
    Rel r(lts.state_count(), 0);
    for (StateId s = 0; s < lts.state_count(); ++s)
        for (StateId t : lts.successors(s, a)) r[s] |= Row{1} << t;
    return r;
}

inline Rel compose_rel(const Rel& r1, const Rel& r2) {
    Rel out(r1.size(), 0);
    for (StateId s = 0; s < r1.size(); ++s)
        for (StateId t = 0; t < r2.size(); ++t)
            if ((r1[s] >> t) & 1) out[s] |= r2[t];
    return out;
}

inline Row pre_image(const Rel& r, Row target) {
    Row out = 0;
    for (StateId s = 0; s < r.size(); ++s)
        if (r[s] & target) out |= Row{1} << s;
    return out;
}

inline Row prop_row(const Lts& lts, const std::string& q) {
    Row out = 0;
    for (StateId s = 0; s < lts.state_count(); ++s)
        if (lts.has_prop(s, q)) out |= Row{1} << s;
    return out;
}

// Box with an existence requirement, matching the library's FLC box.
inline Row strict_box(const Rel& r, Row target) {
    Row out = 0;
    for (StateId s = 0; s < r.size(); ++s)
        if (r[s] && !(r[s] & ~target)) out |= Row{1} << s;
    return out;
}

// The exact satisfaction sets of the five stock properties, computed by
// powering the one-step relations until the involved sequence repeats; the
// repeat makes the existential over n exhaustive.
inline Row property_dia_anbn(const Lts& lts) {
    Rel ra = step_relation(lts, "a"), rb = step_relation(lts, "b");
    Row p = prop_row(lts, "p");
    Rel pa = ra, pb = rb;
    std::map<std::pair<Rel, Rel>, std::size_t> seen;
    Row result = 0;
    while (!seen.count({pa, pb})) {
        seen[{pa, pb}] = seen.size();
        result |= pre_image(pa, pre_image(pb, p));
        pa = compose_rel(pa, ra);
        pb = compose_rel(pb, rb);
    }
    return result;
}

inline Row property_dia_anban(const Lts& lts) {
    Rel ra = step_relation(lts, "a"), rb = step_relation(lts, "b");
    Row p = prop_row(lts, "p");
    Rel pa = ra;
    std::map<Rel, std::size_t> seen;
    Row result = 0;
    while (!seen.count(pa)) {
        seen[pa] = seen.size();
        result |= pre_image(pa, pre_image(rb, pre_image(pa, p)));
        pa = compose_rel(pa, ra);
    }
    return result;
}

inline Row property_dia_an_box_bn(const Lts& lts) {
    Rel ra = step_relation(lts, "a"), rb = step_relation(lts, "b");
    Row p = prop_row(lts, "p");
    Rel pa = ra;
    Row ok = strict_box(rb, p); // all length-1 b-continuations end in p
    std::map<std::pair<Rel, Row>, std::size_t> seen;
    Row result = 0;
    while (!seen.count({pa, ok})) {
        seen[{pa, ok}] = seen.size();
        result |= pre_image(pa, ok);
        pa = compose_rel(pa, ra);
        ok = strict_box(rb, ok);
    }
    return result;
}

inline Row property_dia_an_box_b_dia_an(const Lts& lts) {
    Rel ra = step_relation(lts, "a"), rb = step_relation(lts, "b");
    Row p = prop_row(lts, "p");
    Rel pa = ra;
    std::map<Rel, std::size_t> seen;
    Row result = 0;
    while (!seen.count(pa)) {
        seen[pa] = seen.size();
        result |= pre_image(pa, strict_box(rb, pre_image(pa, p)));
        pa = compose_rel(pa, ra);
    }
    return result;
}

inline Row property_game_iter(const Lts& lts) {
    Rel ra = step_relation(lts, "a"), rb = step_relation(lts, "b");
    Row p = prop_row(lts, "p");
    Row win = 0;
    while (true) {
        Row next = pre_image(ra, strict_box(rb, p | win));
        if (next == win) return win;
        win = next;
    }
}

inline Row property_row(const Lts& lts, const std::string& name) {
    if (name == "dia_anbn") return property_dia_anbn(lts);
    if (name == "dia_anban") return property_dia_anban(lts);
    if (name == "game_iter") return property_game_iter(lts);
    if (name == "dia_an_box_bn") return property_dia_an_box_bn(lts);
    return property_dia_an_box_b_dia_an(lts);
}

} // namespace seplab::oracle
