// pdl.cpp -- PDL semantics over finite LTS and the formula enumerator
#include "seplab/pdl.hpp"

#include <algorithm>
#include <deque>

#include "seplab/errors.hpp"

namespace seplab {

namespace {
PdlFormula node(PdlKind k, std::string name, PdlFormula l, PdlFormula r) {
    auto n = std::make_shared<PdlNode>();
    n->kind = k;
    n->name = std::move(name);
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
}
} // namespace

PdlFormula pdl_prop(std::string p) { return node(PdlKind::Prop, std::move(p), nullptr, nullptr); }
PdlFormula pdl_not(PdlFormula f) { return node(PdlKind::Not, "", std::move(f), nullptr); }
PdlFormula pdl_or(PdlFormula a, PdlFormula b) {
    return node(PdlKind::Or, "", std::move(a), std::move(b));
}
PdlFormula pdl_and(PdlFormula a, PdlFormula b) {
    return node(PdlKind::And, "", std::move(a), std::move(b));
}
PdlFormula pdl_dia(std::string lang, PdlFormula f) {
    return node(PdlKind::Dia, std::move(lang), std::move(f), nullptr);
}
PdlFormula pdl_box(std::string lang, PdlFormula f) {
    return node(PdlKind::Box, std::move(lang), std::move(f), nullptr);
}
PdlFormula pdl_tt() { return pdl_or(pdl_prop("p"), pdl_not(pdl_prop("p"))); }
PdlFormula pdl_ff() { return pdl_and(pdl_prop("p"), pdl_not(pdl_prop("p"))); }

std::size_t modal_depth(const PdlFormula& f) {
    switch (f->kind) {
        case PdlKind::Prop: return 0;
        case PdlKind::Not:
        case PdlKind::Dia:
        case PdlKind::Box: return 1 + modal_depth(f->left);
        case PdlKind::Or:
        case PdlKind::And: return std::max(modal_depth(f->left), modal_depth(f->right));
    }
    return 0;
}

std::size_t modal_only_depth(const PdlFormula& f) {
    switch (f->kind) {
        case PdlKind::Prop: return 0;
        case PdlKind::Not: return modal_only_depth(f->left);
        case PdlKind::Dia:
        case PdlKind::Box: return 1 + modal_only_depth(f->left);
        case PdlKind::Or:
        case PdlKind::And: return std::max(modal_only_depth(f->left), modal_only_depth(f->right));
    }
    return 0;
}

std::size_t pdl_size(const PdlFormula& f) {
    std::size_t n = 1;
    if (f->left) n += pdl_size(f->left);
    if (f->right) n += pdl_size(f->right);
    return n;
}

int pdl_compare(const PdlFormula& a, const PdlFormula& b) {
    if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
    if (a->name != b->name) return a->name < b->name ? -1 : 1;
    if (!a->left != !b->left) return !a->left ? -1 : 1;
    if (a->left) {
        int c = pdl_compare(a->left, b->left);
        if (c != 0) return c;
    }
    if (!a->right != !b->right) return !a->right ? -1 : 1;
    if (a->right) return pdl_compare(a->right, b->right);
    return 0;
}

bool pdl_equal(const PdlFormula& a, const PdlFormula& b) { return pdl_compare(a, b) == 0; }

std::string pdl_to_string(const PdlFormula& f) {
    switch (f->kind) {
        case PdlKind::Prop: return f->name;
        case PdlKind::Not: return "~" + pdl_to_string(f->left);
        case PdlKind::Or:
            return "(" + pdl_to_string(f->left) + " | " + pdl_to_string(f->right) + ")";
        case PdlKind::And:
            return "(" + pdl_to_string(f->left) + " & " + pdl_to_string(f->right) + ")";
        case PdlKind::Dia: return "<" + f->name + ">" + pdl_to_string(f->left);
        case PdlKind::Box: return "[" + f->name + "]" + pdl_to_string(f->left);
    }
    return "?";
}

namespace {
void collect_names(const PdlFormula& f, std::set<std::string>& langs,
                   std::set<std::string>& props) {
    if (f->kind == PdlKind::Prop) props.insert(f->name);
    if (f->kind == PdlKind::Dia || f->kind == PdlKind::Box) langs.insert(f->name);
    if (f->left) collect_names(f->left, langs, props);
    if (f->right) collect_names(f->right, langs, props);
}
} // namespace

std::set<std::string> pdl_language_names(const PdlFormula& f) {
    std::set<std::string> langs, props;
    collect_names(f, langs, props);
    return langs;
}

std::set<std::string> pdl_prop_names(const PdlFormula& f) {
    std::set<std::string> langs, props;
    collect_names(f, langs, props);
    return props;
}

// ---------------------------------------------------------------------------
// Reach relations
// ---------------------------------------------------------------------------

namespace {

StatePairSet reach_relation_regular(const Lts& lts, const Nfa& nfa) {
    StatePairSet out;
    const std::size_t nr = nfa.state_count();
    for (StateId s = 0; s < lts.state_count(); ++s) {
        // BFS over the (LTS state, NFA state) product from (s, start).
        std::vector<char> seen(lts.state_count() * nr, 0);
        std::deque<std::pair<StateId, AutState>> work;
        auto visit = [&](StateId v, AutState q) {
            auto& flag = seen[v * nr + q];
            if (flag) return;
            flag = 1;
            work.emplace_back(v, q);
            if (nfa.accepting(q)) out.emplace(s, v);
        };
        visit(s, nfa.start());
        while (!work.empty()) {
            auto [v, q] = work.front();
            work.pop_front();
            for (const auto& [a, v2] : lts.out_edges(v))
                for (AutState q2 : nfa.successors(q, a)) visit(v2, q2);
        }
    }
    return out;
}

// The LTS read as an NFA with the given start; every state accepting. The
// accepting set is refined by the caller via reachable controls.
Nfa lts_as_nfa(const Lts& lts, StateId start, const std::set<Letter>& alphabet) {
    Nfa out;
    for (const Letter& a : alphabet) out.add_letter(a);
    for (StateId s = 0; s < lts.state_count(); ++s) out.add_state(lts.state_name(s));
    for (StateId s = 0; s < lts.state_count(); ++s)
        for (const auto& [a, t] : lts.out_edges(s)) out.add_edge(s, a, t);
    out.set_start(start);
    for (StateId s = 0; s < lts.state_count(); ++s) out.add_accepting(s);
    return out;
}

StatePairSet reach_relation_pushdown(const Lts& lts, const Pda& pda) {
    StatePairSet out;
    for (StateId s = 0; s < lts.state_count(); ++s) {
        Nfa track = lts_as_nfa(lts, s, pda.alphabet());
        Pda product = intersect_regular(pda, track);
        std::vector<bool> reach = pda_reachable_controls(product);
        // Product state ids are q * |S| + v by construction order.
        for (AutState q : pda.accepting_states())
            for (StateId v = 0; v < lts.state_count(); ++v)
                if (reach[q * lts.state_count() + v]) out.emplace(s, v);
    }
    return out;
}

} // namespace

StatePairSet reach_relation(const Lts& lts, const LanguageRef& lang) {
    for (const Letter& a : lang.alphabet())
        if (!lts.has_letter(a))
            throw InputError("reach_relation: language letter '" + a +
                             "' missing from the LTS alphabet");
    if (lang.cls == LangClass::Reg) {
        if (!lang.nfa) throw InputError("regular language '" + lang.name + "' lacks an NFA");
        return reach_relation_regular(lts, *lang.nfa);
    }
    return reach_relation_pushdown(lts, *lang.as_pda());
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

PdlEvaluator::PdlEvaluator(const Lts& lts, const LanguageTable& langs)
    : lts_(lts), langs_(langs) {}

const StatePairSet& PdlEvaluator::relation(const std::string& lang_name) {
    auto it = cache_.find(lang_name);
    if (it != cache_.end()) return it->second;
    auto lit = langs_.find(lang_name);
    if (lit == langs_.end())
        throw InputError("unresolved language name '" + lang_name + "'");
    return cache_.emplace(lang_name, reach_relation(lts_, lit->second)).first->second;
}

std::set<StateId> PdlEvaluator::eval(const PdlFormula& f) {
    switch (f->kind) {
        case PdlKind::Prop: {
            std::set<StateId> out;
            for (StateId s = 0; s < lts_.state_count(); ++s)
                if (lts_.has_prop(s, f->name)) out.insert(s);
            return out;
        }
        case PdlKind::Not: {
            std::set<StateId> sub = eval(f->left);
            std::set<StateId> out;
            for (StateId s = 0; s < lts_.state_count(); ++s)
                if (!sub.count(s)) out.insert(s);
            return out;
        }
        case PdlKind::Or: {
            std::set<StateId> out = eval(f->left);
            std::set<StateId> rhs = eval(f->right);
            out.insert(rhs.begin(), rhs.end());
            return out;
        }
        case PdlKind::And: {
            std::set<StateId> lhs = eval(f->left);
            std::set<StateId> rhs = eval(f->right);
            std::set<StateId> out;
            std::set_intersection(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                                  std::inserter(out, out.begin()));
            return out;
        }
        case PdlKind::Dia: {
            std::set<StateId> sub = eval(f->left);
            const StatePairSet& rel = relation(f->name);
            std::set<StateId> out;
            for (const auto& [s, t] : rel)
                if (sub.count(t)) out.insert(s);
            return out;
        }
        case PdlKind::Box: {
            std::set<StateId> sub = eval(f->left);
            const StatePairSet& rel = relation(f->name);
            std::set<StateId> out;
            for (StateId s = 0; s < lts_.state_count(); ++s) out.insert(s);
            for (const auto& [s, t] : rel)
                if (!sub.count(t)) out.erase(s);
            return out;
        }
    }
    return {};
}

bool PdlEvaluator::holds_at(StateId s, const PdlFormula& f) { return eval(f).count(s) > 0; }

std::set<StateId> eval_pdl(const Lts& lts, const LanguageTable& langs, const PdlFormula& f) {
    PdlEvaluator ev(lts, langs);
    return ev.eval(f);
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

std::vector<PdlFormula> enumerate_formulas(const std::vector<std::string>& langs,
                                           const std::vector<std::string>& props,
                                           std::size_t depth, std::size_t size_cap) {
    if (size_cap < 1) throw InputError("enumerate_formulas: size cap must be at least 1");

    std::vector<std::string> sorted_langs = langs;
    std::sort(sorted_langs.begin(), sorted_langs.end());
    std::vector<std::string> sorted_props = props;
    std::sort(sorted_props.begin(), sorted_props.end());

    // by_size[s] = canonical formulas of node count exactly s, each paired
    // with its modal depth.
    std::vector<std::vector<std::pair<PdlFormula, std::size_t>>> by_size(size_cap + 1);
    for (const std::string& p : sorted_props)
        if (size_cap >= 1) by_size[1].emplace_back(pdl_prop(p), 0);

    for (std::size_t size = 2; size <= size_cap; ++size) {
        // Negation and modalities over bodies of size-1.
        for (const auto& [body, md] : by_size[size - 1]) {
            if (md + 1 <= depth && body->kind != PdlKind::Not)
                by_size[size].emplace_back(pdl_not(body), md + 1);
            if (md + 1 <= depth) {
                for (const std::string& lang : sorted_langs) {
                    by_size[size].emplace_back(pdl_dia(lang, body), md + 1);
                    by_size[size].emplace_back(pdl_box(lang, body), md + 1);
                }
            }
        }
        // Binary connectives with ordered operands.
        for (std::size_t ls = 1; ls + 1 < size; ++ls) {
            std::size_t rs = size - 1 - ls;
            for (const auto& [lf, lmd] : by_size[ls]) {
                for (const auto& [rf, rmd] : by_size[rs]) {
                    if (pdl_compare(lf, rf) > 0) continue;
                    std::size_t md = std::max(lmd, rmd);
                    by_size[size].emplace_back(pdl_and(lf, rf), md);
                    by_size[size].emplace_back(pdl_or(lf, rf), md);
                }
            }
        }
    }

    std::vector<PdlFormula> out;
    for (std::size_t size = 1; size <= size_cap; ++size)
        for (const auto& [f, md] : by_size[size]) out.push_back(f);
    return out;
}

} // namespace seplab
