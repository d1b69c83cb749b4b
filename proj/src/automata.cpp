// automata.cpp -- NFA/PDA/VPA algorithms: membership, determinization,
// derivatives, products, pushdown reachability, unary slices
#include "seplab/automata.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "seplab/errors.hpp"

namespace seplab {

// ---------------------------------------------------------------------------
// Nfa
// ---------------------------------------------------------------------------

AutState Nfa::add_state(const std::string& name) {
    if (by_name_.count(name)) throw InputError("duplicate NFA state '" + name + "'");
    AutState q = names_.size();
    names_.push_back(name);
    by_name_[name] = q;
    return q;
}

AutState Nfa::ensure_state(const std::string& name) {
    auto it = by_name_.find(name);
    if (it != by_name_.end()) return it->second;
    return add_state(name);
}

void Nfa::add_letter(const Letter& a) {
    if (a.empty()) throw InputError("empty letter");
    alphabet_.insert(a);
}

void Nfa::add_edge(AutState src, const Letter& a, AutState dst) {
    if (src >= names_.size() || dst >= names_.size())
        throw InputError("NFA edge endpoint out of range");
    alphabet_.insert(a);
    auto& v = succ_[{src, a}];
    if (std::find(v.begin(), v.end(), dst) == v.end()) v.push_back(dst);
}

void Nfa::set_start(AutState q) {
    if (q >= names_.size()) throw InputError("NFA start state out of range");
    start_ = q;
}

void Nfa::add_accepting(AutState q) {
    if (q >= names_.size()) throw InputError("NFA accepting state out of range");
    accepting_.insert(q);
}

const std::string& Nfa::state_name(AutState q) const {
    if (q >= names_.size()) throw InputError("NFA state id out of range");
    return names_[q];
}

std::optional<AutState> Nfa::find_state(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

AutState Nfa::start() const {
    if (!start_) throw InputError("NFA has no start state");
    return *start_;
}

bool Nfa::accepting(AutState q) const { return accepting_.count(q) > 0; }

const std::vector<AutState>& Nfa::successors(AutState q, const Letter& a) const {
    static const std::vector<AutState> empty;
    auto it = succ_.find({q, a});
    return it == succ_.end() ? empty : it->second;
}

std::vector<std::tuple<AutState, Letter, AutState>> Nfa::edges() const {
    std::vector<std::tuple<AutState, Letter, AutState>> out;
    for (const auto& [key, targets] : succ_)
        for (AutState t : targets) out.emplace_back(key.first, key.second, t);
    return out;
}

bool Nfa::deterministic() const {
    for (AutState q = 0; q < names_.size(); ++q)
        for (const Letter& a : alphabet_)
            if (successors(q, a).size() != 1) return false;
    return true;
}

bool nfa_accepts(const Nfa& nfa, const Word& w) {
    for (const Letter& a : w)
        if (!nfa.alphabet().count(a))
            throw InputError("nfa_accepts: letter '" + a + "' not in alphabet");
    std::set<AutState> frontier{nfa.start()};
    for (const Letter& a : w) {
        std::set<AutState> next;
        for (AutState q : frontier)
            for (AutState t : nfa.successors(q, a)) next.insert(t);
        frontier = std::move(next);
        if (frontier.empty()) return false;
    }
    for (AutState q : frontier)
        if (nfa.accepting(q)) return true;
    return false;
}

Nfa determinize(const Nfa& nfa) {
    Nfa out;
    for (const Letter& a : nfa.alphabet()) out.add_letter(a);

    auto subset_name = [&](const std::set<AutState>& qs) {
        std::string name = "{";
        bool first = true;
        for (AutState q : qs) {
            if (!first) name += "+";
            name += nfa.state_name(q);
            first = false;
        }
        return name + "}";
    };

    std::map<std::set<AutState>, AutState> ids;
    std::deque<std::set<AutState>> work;
    auto intern = [&](const std::set<AutState>& qs) {
        auto it = ids.find(qs);
        if (it != ids.end()) return it->second;
        AutState id = out.add_state(subset_name(qs));
        ids[qs] = id;
        for (AutState q : qs)
            if (nfa.accepting(q)) {
                out.add_accepting(id);
                break;
            }
        work.push_back(qs);
        return id;
    };

    out.set_start(intern({nfa.start()}));
    while (!work.empty()) {
        std::set<AutState> qs = work.front();
        work.pop_front();
        AutState src = ids.at(qs);
        for (const Letter& a : nfa.alphabet()) {
            std::set<AutState> next;
            for (AutState q : qs)
                for (AutState t : nfa.successors(q, a)) next.insert(t);
            out.add_edge(src, a, intern(next));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Pda
// ---------------------------------------------------------------------------

AutState Pda::add_state(const std::string& name) {
    if (by_name_.count(name)) throw InputError("duplicate PDA state '" + name + "'");
    AutState q = names_.size();
    names_.push_back(name);
    by_name_[name] = q;
    return q;
}

AutState Pda::ensure_state(const std::string& name) {
    auto it = by_name_.find(name);
    if (it != by_name_.end()) return it->second;
    return add_state(name);
}

void Pda::add_letter(const Letter& a) {
    if (a.empty()) throw InputError("empty letter");
    if (stack_alphabet_.count(a))
        throw InputError("letter '" + a + "' already used as a stack symbol");
    alphabet_.insert(a);
}

void Pda::add_stack_symbol(const StackSymbol& g) {
    if (g.empty()) throw InputError("empty stack symbol");
    if (alphabet_.count(g))
        throw InputError("stack symbol '" + g + "' already used as a letter");
    stack_alphabet_.insert(g);
}

void Pda::add_transition(PdaTransition t) {
    if (t.src >= names_.size() || t.dst >= names_.size())
        throw InputError("PDA transition endpoint out of range");
    add_letter(t.letter);
    if (t.pop) add_stack_symbol(*t.pop);
    for (const StackSymbol& g : t.push) add_stack_symbol(g);
    if (std::find(transitions_.begin(), transitions_.end(), t) == transitions_.end())
        transitions_.push_back(std::move(t));
}

void Pda::set_start(AutState q) {
    if (q >= names_.size()) throw InputError("PDA start state out of range");
    start_ = q;
}

void Pda::add_accepting(AutState q) {
    if (q >= names_.size()) throw InputError("PDA accepting state out of range");
    accepting_.insert(q);
}

const std::string& Pda::state_name(AutState q) const {
    if (q >= names_.size()) throw InputError("PDA state id out of range");
    return names_[q];
}

std::optional<AutState> Pda::find_state(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

AutState Pda::start() const {
    if (!start_) throw InputError("PDA has no start state");
    return *start_;
}

bool Pda::accepting(AutState q) const { return accepting_.count(q) > 0; }

std::size_t Pda::max_push() const {
    std::size_t n = 0;
    for (const auto& t : transitions_) n = std::max(n, t.push.size());
    return n;
}

namespace {

// Stack symbols interned to chars so stacks hash as strings. Top of stack is
// the back of the string.
struct StackInterner {
    std::map<StackSymbol, char> to_char;
    std::vector<StackSymbol> from_char;

    explicit StackInterner(const Pda& pda) {
        for (const StackSymbol& g : pda.stack_alphabet()) {
            to_char[g] = static_cast<char>('A' + from_char.size());
            from_char.push_back(g);
        }
    }
    std::string intern(const std::vector<StackSymbol>& syms) const {
        std::string s;
        for (const auto& g : syms) s += to_char.at(g);
        return s;
    }
};

} // namespace

bool pda_accepts(const Pda& pda, const Word& w, bool require_empty_stack) {
    for (const Letter& a : w)
        if (!pda.alphabet().count(a))
            throw InputError("pda_accepts: letter '" + a + "' not in alphabet");

    StackInterner interner(pda);
    using Config = std::pair<AutState, std::string>;
    std::set<Config> frontier{{pda.start(), ""}};
    for (const Letter& a : w) {
        std::set<Config> next;
        for (const auto& [q, stack] : frontier) {
            for (const auto& t : pda.transitions()) {
                if (t.src != q || t.letter != a) continue;
                if (!t.pop) {
                    if (!stack.empty()) continue;
                    next.emplace(t.dst, interner.intern(t.push));
                } else {
                    if (stack.empty() || stack.back() != interner.to_char.at(*t.pop)) continue;
                    std::string s2 = stack.substr(0, stack.size() - 1);
                    s2 += interner.intern(t.push);
                    next.emplace(t.dst, std::move(s2));
                }
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) return false;
    }
    for (const auto& [q, stack] : frontier)
        if (pda.accepting(q) && (!require_empty_stack || stack.empty())) return true;
    return false;
}

namespace {

// Copies every state of `in` into `out` with a name prefix; returns the id map.
std::vector<AutState> embed_pda_states(Pda& out, const Pda& in, const std::string& prefix) {
    std::vector<AutState> map(in.state_count());
    for (AutState q = 0; q < in.state_count(); ++q)
        map[q] = out.add_state(prefix + in.state_name(q));
    return map;
}

std::vector<StackSymbol> prefix_symbols(const std::vector<StackSymbol>& syms,
                                        const std::string& prefix) {
    std::vector<StackSymbol> out;
    out.reserve(syms.size());
    for (const auto& g : syms) out.push_back(prefix + g);
    return out;
}

std::string fresh_state_name(const Pda& pda, std::string base) {
    while (pda.find_state(base)) base += "'";
    return base;
}

} // namespace

Pda derivative(const Pda& pda, const Letter& a) {
    if (!pda.alphabet().count(a))
        throw InputError("derivative: letter '" + a + "' not in alphabet");

    Pda out;
    for (const Letter& x : pda.alphabet()) out.add_letter(x);
    std::vector<AutState> map = embed_pda_states(out, pda, "");
    AutState fresh = out.add_state(fresh_state_name(pda, "@d"));
    out.set_start(fresh);
    for (AutState q : pda.accepting_states()) out.add_accepting(map[q]);
    for (const auto& t : pda.transitions())
        out.add_transition({map[t.src], t.letter, t.pop, t.push, map[t.dst]});

    // Entry moves: each first transition on `a` from the empty stack is
    // simulated one step further, materialising the stack it would have left.
    for (const auto& t : pda.transitions()) {
        if (t.src != pda.start() || t.letter != a || t.pop) continue;
        if (pda.accepting(t.dst)) out.add_accepting(fresh);
        if (t.push.empty()) {
            for (const auto& u : pda.transitions()) {
                if (u.src != t.dst || u.pop) continue;
                out.add_transition({fresh, u.letter, std::nullopt, u.push, map[u.dst]});
            }
        } else {
            StackSymbol top = t.push.back();
            std::vector<StackSymbol> below(t.push.begin(), t.push.end() - 1);
            for (const auto& u : pda.transitions()) {
                if (u.src != t.dst || !u.pop || *u.pop != top) continue;
                std::vector<StackSymbol> push = below;
                push.insert(push.end(), u.push.begin(), u.push.end());
                out.add_transition({fresh, u.letter, std::nullopt, std::move(push), map[u.dst]});
            }
        }
    }
    return out;
}

Pda pda_union(const Pda& p1, const Pda& p2) {
    if (p1.alphabet() != p2.alphabet())
        throw InputError("pda_union: input alphabets differ");

    Pda out;
    for (const Letter& x : p1.alphabet()) out.add_letter(x);
    AutState fresh = out.add_state("@u");
    out.set_start(fresh);

    auto embed = [&](const Pda& p, const std::string& prefix) {
        std::vector<AutState> map = embed_pda_states(out, p, prefix);
        for (AutState q : p.accepting_states()) out.add_accepting(map[q]);
        for (const auto& t : p.transitions()) {
            std::optional<StackSymbol> pop =
                t.pop ? std::optional<StackSymbol>(prefix + *t.pop) : std::nullopt;
            out.add_transition({map[t.src], t.letter, pop, prefix_symbols(t.push, prefix),
                                map[t.dst]});
        }
        // Initial moves re-offered from the shared fresh start.
        for (const auto& t : p.transitions()) {
            if (t.src != p.start() || t.pop) continue;
            out.add_transition({fresh, t.letter, std::nullopt, prefix_symbols(t.push, prefix),
                                map[t.dst]});
        }
        if (p.accepting(p.start())) out.add_accepting(fresh);
    };
    embed(p1, "1.");
    embed(p2, "2.");
    return out;
}

Pda intersect_regular(const Pda& pda, const Nfa& nfa) {
    if (pda.alphabet() != nfa.alphabet())
        throw InputError("intersect_regular: alphabets differ");

    Pda out;
    for (const Letter& x : pda.alphabet()) out.add_letter(x);
    std::vector<AutState> map(pda.state_count() * nfa.state_count());
    for (AutState q = 0; q < pda.state_count(); ++q)
        for (AutState r = 0; r < nfa.state_count(); ++r)
            map[q * nfa.state_count() + r] =
                out.add_state(pda.state_name(q) + "," + nfa.state_name(r));
    auto prod = [&](AutState q, AutState r) { return map[q * nfa.state_count() + r]; };

    out.set_start(prod(pda.start(), nfa.start()));
    for (AutState q : pda.accepting_states())
        for (AutState r : nfa.accepting_states()) out.add_accepting(prod(q, r));
    for (const auto& t : pda.transitions())
        for (AutState r = 0; r < nfa.state_count(); ++r)
            for (AutState r2 : nfa.successors(r, t.letter))
                out.add_transition({prod(t.src, r), t.letter, t.pop, t.push, prod(t.dst, r2)});
    return out;
}

// ---------------------------------------------------------------------------
// Pushdown reachability: productive pop-triples plus reachable stack tops.
// ---------------------------------------------------------------------------

namespace {

struct PdaAnalysis {
    const Pda& pda;
    std::size_t nq;
    std::vector<int> sym_id;              // dense stack symbol ids
    std::vector<StackSymbol> syms;
    std::size_t ng;

    struct Rule {
        AutState src;
        int pop;                          // -1 = empty-stack rule
        std::vector<int> push;            // bottom..top
        AutState dst;
    };
    std::vector<Rule> rules;

    // pop[q][g][q'] : from (q, s g) one can reach (q', s) without touching s.
    std::vector<char> pop_fact;
    std::size_t pop_idx(AutState q, int g, AutState q2) const {
        return (q * ng + static_cast<std::size_t>(g)) * nq + q2;
    }

    explicit PdaAnalysis(const Pda& p) : pda(p), nq(p.state_count()) {
        std::map<StackSymbol, int> ids;
        for (const StackSymbol& g : p.stack_alphabet()) {
            ids[g] = static_cast<int>(syms.size());
            syms.push_back(g);
        }
        ng = syms.size();
        for (const auto& t : p.transitions()) {
            Rule r;
            r.src = t.src;
            r.pop = t.pop ? ids.at(*t.pop) : -1;
            for (const auto& g : t.push) r.push.push_back(ids.at(g));
            r.dst = t.dst;
            rules.push_back(std::move(r));
        }
        saturate_pops();
    }

    // Worklist saturation of the pop relation. Chain atoms track partially
    // popped push-suffixes of a rule: chain[r][i][s] means the run has popped
    // push[i..] (0-based, top-first from the back) and sits at s with
    // push[0..i-1] still to go.
    void saturate_pops() {
        if (ng == 0) {
            pop_fact.assign(1, 0);
            return;
        }
        pop_fact.assign(nq * ng * nq, 0);
        // chain key: (rule, remaining prefix length i >= 1, state)
        std::map<std::tuple<std::size_t, std::size_t, AutState>, char> chain;
        // waiting[(state, symbol)] -> chain atoms whose next pop is (state, symbol)
        std::map<std::pair<AutState, int>, std::vector<std::pair<std::size_t, std::size_t>>> waiting;
        std::deque<std::tuple<AutState, int, AutState>> new_pops;

        auto add_pop = [&](AutState q, int g, AutState q2) {
            auto& f = pop_fact[pop_idx(q, g, q2)];
            if (f) return;
            f = 1;
            new_pops.emplace_back(q, g, q2);
        };

        std::function<void(std::size_t, std::size_t, AutState)> add_chain =
            [&](std::size_t ri, std::size_t i, AutState s) {
                auto key = std::make_tuple(ri, i, s);
                if (chain.count(key)) return;
                chain[key] = 1;
                const Rule& r = rules[ri];
                int g = r.push[i - 1]; // next symbol to pop (top of remaining prefix)
                waiting[{s, g}].emplace_back(ri, i);
                for (AutState q2 = 0; q2 < nq; ++q2) {
                    if (!pop_fact[pop_idx(s, g, q2)]) continue;
                    if (i > 1)
                        add_chain(ri, i - 1, q2);
                    else if (r.pop >= 0)
                        add_pop(r.src, r.pop, q2);
                }
            };

        for (std::size_t ri = 0; ri < rules.size(); ++ri) {
            const Rule& r = rules[ri];
            if (r.pop < 0) continue; // empty-stack rules never pop
            if (r.push.empty())
                add_pop(r.src, r.pop, r.dst);
            else
                add_chain(ri, r.push.size(), r.dst);
        }
        while (!new_pops.empty()) {
            auto [q, g, q2] = new_pops.front();
            new_pops.pop_front();
            auto it = waiting.find({q, g});
            if (it == waiting.end()) continue;
            // The waiting list may grow while we fire; index loop on purpose.
            for (std::size_t wi = 0; wi < it->second.size(); ++wi) {
                auto [ri, i] = it->second[wi];
                const Rule& r = rules[ri];
                if (i > 1)
                    add_chain(ri, i - 1, q2);
                else if (r.pop >= 0)
                    add_pop(r.src, r.pop, q2);
                it = waiting.find({q, g});
            }
        }
    }

    // Forward reachability from (start, empty stack): which control states
    // occur in some reachable configuration, and with which stack tops.
    void reach(AutState start, std::vector<char>& empty_reach, std::vector<char>& top_reach) const {
        empty_reach.assign(nq, 0);
        top_reach.assign(nq * ng, 0);
        // frame key: (rule, depth i >= 1, state): the top i symbols of the
        // reachable configuration are push[0..i-1] of that rule's instance.
        std::set<std::tuple<std::size_t, std::size_t, AutState>> frames;
        std::deque<std::tuple<int, std::size_t, std::size_t, AutState>> work;
        // work items: (kind 0=E, 1=frame; for E only the state field is used)

        auto add_empty = [&](AutState q) {
            if (empty_reach[q]) return;
            empty_reach[q] = 1;
            work.emplace_back(0, 0, 0, q);
        };
        auto add_frame = [&](std::size_t ri, std::size_t i, AutState s) {
            if (!frames.insert({ri, i, s}).second) return;
            work.emplace_back(1, ri, i, s);
        };

        add_empty(start);
        while (!work.empty()) {
            auto [kind, ri, i, s] = work.front();
            work.pop_front();
            if (kind == 0) {
                for (std::size_t rj = 0; rj < rules.size(); ++rj) {
                    const Rule& r = rules[rj];
                    if (r.src != s || r.pop >= 0) continue;
                    if (r.push.empty())
                        add_empty(r.dst);
                    else
                        add_frame(rj, r.push.size(), r.dst);
                }
            } else {
                const Rule& r = rules[ri];
                int g = r.push[i - 1];
                if (!top_reach[s * ng + g]) {
                    top_reach[s * ng + g] = 1;
                    // A newly reachable top enables that symbol's rules.
                    for (std::size_t rj = 0; rj < rules.size(); ++rj) {
                        const Rule& r2 = rules[rj];
                        if (r2.src != s || r2.pop != g) continue;
                        if (!r2.push.empty()) add_frame(rj, r2.push.size(), r2.dst);
                    }
                }
                for (AutState q2 = 0; q2 < nq; ++q2) {
                    if (!pop_fact[pop_idx(s, g, q2)]) continue;
                    if (i > 1)
                        add_frame(ri, i - 1, q2);
                    else if (r.pop < 0)
                        add_empty(q2); // the popped frame sat on the empty stack
                    // Frames of pop-rules dissolve into the providing frame's
                    // own chain, which fires through this same pop fact.
                }
            }
        }
        // Tops enable rules; rule firings with nonempty push were handled when
        // the top first appeared. Tops reached through *other* frames at the
        // same (state, symbol) are deduplicated by top_reach.
    }
};

} // namespace

std::vector<bool> pda_reachable_controls(const Pda& pda) {
    PdaAnalysis an(pda);
    std::vector<char> empty_reach, top_reach;
    an.reach(pda.start(), empty_reach, top_reach);
    std::vector<bool> out(pda.state_count(), false);
    for (AutState q = 0; q < pda.state_count(); ++q) {
        if (empty_reach[q]) out[q] = true;
        for (std::size_t g = 0; g < an.ng; ++g)
            if (top_reach[q * an.ng + g]) out[q] = true;
    }
    return out;
}

bool pda_empty(const Pda& pda) {
    std::vector<bool> reach = pda_reachable_controls(pda);
    for (AutState q : pda.accepting_states())
        if (reach[q]) return false;
    return true;
}

Nfa unary_slice(const Pda& pda, const Letter& a, std::size_t bound) {
    if (!pda.alphabet().count(a))
        throw InputError("unary_slice: letter '" + a + "' not in alphabet");
    if (bound == 0) throw InputError("unary_slice: bound must be positive");

    const std::size_t window = 3 * bound;
    std::vector<bool> member(window + 1);
    Word w;
    for (std::size_t n = 0; n <= window; ++n) {
        member[n] = pda_accepts(pda, w);
        w.push_back(a);
    }

    // Smallest (period, threshold) consistent with the whole window.
    std::optional<std::pair<std::size_t, std::size_t>> found;
    for (std::size_t c = 1; !found && c <= bound; ++c) {
        for (std::size_t t = 0; t + c <= bound; ++t) {
            bool ok = true;
            for (std::size_t n = t; n + c <= window; ++n)
                if (member[n] != member[n + c]) {
                    ok = false;
                    break;
                }
            if (ok) {
                found = {t, c};
                break;
            }
        }
    }
    if (!found)
        throw InputError("unary_slice: bound too small, no consistent threshold/period up to " +
                         std::to_string(bound));

    auto [t, c] = *found;
    Nfa out;
    out.add_letter(a);
    std::vector<AutState> ids(t + c);
    for (std::size_t i = 0; i < t + c; ++i) ids[i] = out.add_state("n" + std::to_string(i));
    for (std::size_t i = 0; i + 1 < t + c; ++i) out.add_edge(ids[i], a, ids[i + 1]);
    out.add_edge(ids[t + c - 1], a, ids[t]); // the lasso
    out.set_start(ids[0]);
    for (std::size_t i = 0; i < t + c; ++i)
        if (member[i]) out.add_accepting(ids[i]);
    return out;
}

Pda nfa_to_pda(const Nfa& nfa) {
    Pda out;
    for (const Letter& a : nfa.alphabet()) out.add_letter(a);
    std::vector<AutState> map(nfa.state_count());
    for (AutState q = 0; q < nfa.state_count(); ++q) map[q] = out.add_state(nfa.state_name(q));
    out.set_start(map[nfa.start()]);
    for (AutState q : nfa.accepting_states()) out.add_accepting(map[q]);
    for (const auto& [src, a, dst] : nfa.edges())
        out.add_transition({map[src], a, std::nullopt, {}, map[dst]});
    return out;
}

// ---------------------------------------------------------------------------
// Vpa
// ---------------------------------------------------------------------------

bool vpa_validate(const Vpa& vpa) {
    // Partition must be disjoint and cover the input alphabet.
    for (const Letter& a : vpa.pda.alphabet()) {
        int n = (vpa.calls.count(a) ? 1 : 0) + (vpa.returns.count(a) ? 1 : 0) +
                (vpa.internals.count(a) ? 1 : 0);
        if (n != 1) return false;
    }
    for (const auto& t : vpa.pda.transitions()) {
        if (vpa.calls.count(t.letter)) {
            // One net symbol pushed: on the bottom marker the pushed word is
            // the single new symbol, otherwise the old top plus the new one.
            if (t.pop ? t.push.size() != 2 : t.push.size() != 1) return false;
        } else if (vpa.returns.count(t.letter)) {
            if (!t.pop || !t.push.empty()) return false;
        } else {
            if (t.pop ? t.push.size() != 1 : !t.push.empty()) return false;
        }
    }
    return true;
}

bool vpa_accepts(const Vpa& vpa, const Word& w) {
    return pda_accepts(vpa.pda, w, /*require_empty_stack=*/true);
}

// ---------------------------------------------------------------------------
// LanguageRef
// ---------------------------------------------------------------------------

std::string lang_class_name(LangClass c) {
    switch (c) {
        case LangClass::Reg: return "reg";
        case LangClass::Vpl: return "vpl";
        case LangClass::Cfl: return "cfl";
    }
    return "?";
}

LangClass lang_class_from_name(const std::string& name) {
    if (name == "reg" || name == "REG") return LangClass::Reg;
    if (name == "vpl" || name == "VPL") return LangClass::Vpl;
    if (name == "cfl" || name == "CFL") return LangClass::Cfl;
    throw InputError("unknown language class '" + name + "'");
}

namespace {

// Empty-stack-plus-final-state acceptance folded into final-state acceptance:
// bottom-of-frame symbols are hatted so the control can tell when the stack
// empties, and an emptiness bit is tracked in the state.
Pda vpa_to_pda(const Vpa& vpa) {
    const Pda& in = vpa.pda;
    Pda out;
    for (const Letter& a : in.alphabet()) out.add_letter(a);
    const std::size_t n = in.state_count();
    std::vector<AutState> m_empty(n), m_deep(n);
    for (AutState q = 0; q < n; ++q) m_empty[q] = out.add_state(in.state_name(q) + "#e");
    for (AutState q = 0; q < n; ++q) m_deep[q] = out.add_state(in.state_name(q) + "#s");
    out.set_start(m_empty[in.start()]);
    for (AutState q : in.accepting_states()) out.add_accepting(m_empty[q]);

    auto hat = [](const StackSymbol& g) { return g + "^"; };
    auto hat_bottom = [&](std::vector<StackSymbol> push) {
        if (!push.empty()) push[0] = hat(push[0]);
        return push;
    };

    for (const auto& t : in.transitions()) {
        if (!t.pop) {
            // Fires on the empty stack; a nonempty push leaves a hatted bottom.
            AutState dst = t.push.empty() ? m_empty[t.dst] : m_deep[t.dst];
            out.add_transition({m_empty[t.src], t.letter, std::nullopt, hat_bottom(t.push), dst});
        } else {
            // Deep variant: top is an unhatted symbol.
            out.add_transition({m_deep[t.src], t.letter, t.pop, t.push, m_deep[t.dst]});
            // Hatted variant: the popped symbol was the lowest one.
            AutState dst = t.push.empty() ? m_empty[t.dst] : m_deep[t.dst];
            out.add_transition(
                {m_deep[t.src], t.letter, hat(*t.pop), hat_bottom(t.push), dst});
        }
    }
    return out;
}

} // namespace

std::shared_ptr<const Pda> LanguageRef::as_pda() const {
    if (pda) return pda;
    if (vpa) return std::make_shared<Pda>(vpa_to_pda(*vpa));
    if (nfa) return std::make_shared<Pda>(nfa_to_pda(*nfa));
    throw InputError("language '" + name + "' has no acceptor");
}

bool LanguageRef::member(const Word& w) const {
    if (vpa) return vpa_accepts(*vpa, w);
    if (pda) return pda_accepts(*pda, w);
    if (nfa) return nfa_accepts(*nfa, w);
    throw InputError("language '" + name + "' has no acceptor");
}

const std::set<Letter>& LanguageRef::alphabet() const {
    if (vpa) return vpa->pda.alphabet();
    if (pda) return pda->alphabet();
    if (nfa) return nfa->alphabet();
    throw InputError("language '" + name + "' has no acceptor");
}

LanguageRef make_language(std::string name, Nfa nfa) {
    LanguageRef ref;
    ref.name = std::move(name);
    ref.cls = LangClass::Reg;
    ref.nfa = std::make_shared<Nfa>(std::move(nfa));
    return ref;
}

LanguageRef make_language(std::string name, Pda pda) {
    LanguageRef ref;
    ref.name = std::move(name);
    ref.cls = LangClass::Cfl;
    ref.pda = std::make_shared<Pda>(std::move(pda));
    return ref;
}

LanguageRef make_language(std::string name, Vpa vpa) {
    LanguageRef ref;
    ref.name = std::move(name);
    ref.cls = LangClass::Vpl;
    ref.vpa = std::make_shared<Vpa>(std::move(vpa));
    return ref;
}

} // namespace seplab
