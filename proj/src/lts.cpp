// lts.cpp -- LTS queries and the witness-family generators
#include "seplab/lts.hpp"

#include <algorithm>
#include <sstream>

#include "seplab/errors.hpp"

namespace seplab {

StateId Lts::add_state(const std::string& name) {
    if (by_name_.count(name))
        throw InputError("duplicate state name '" + name + "'");
    StateId id = names_.size();
    names_.push_back(name);
    by_name_[name] = id;
    props_.emplace_back();
    return id;
}

StateId Lts::ensure_state(const std::string& name) {
    auto it = by_name_.find(name);
    if (it != by_name_.end()) return it->second;
    return add_state(name);
}

void Lts::add_letter(const Letter& a) {
    if (a.empty()) throw InputError("empty letter");
    alphabet_.insert(a);
}

void Lts::add_prop(StateId s, const std::string& prop) {
    check_state(s);
    props_[s].insert(prop);
}

void Lts::add_transition(StateId src, const Letter& a, StateId dst) {
    check_state(src);
    check_state(dst);
    if (!alphabet_.count(a)) alphabet_.insert(a);
    auto& v = succ_[{src, a}];
    if (std::find(v.begin(), v.end(), dst) == v.end()) v.push_back(dst);
}

void Lts::set_initial(StateId s) {
    check_state(s);
    initial_ = s;
}

const std::string& Lts::state_name(StateId s) const {
    check_state(s);
    return names_[s];
}

std::optional<StateId> Lts::find_state(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

StateId Lts::state(const std::string& name) const {
    auto id = find_state(name);
    if (!id) throw InputError("unknown state '" + name + "'");
    return *id;
}

const std::set<std::string>& Lts::props_of(StateId s) const {
    check_state(s);
    return props_[s];
}

bool Lts::has_prop(StateId s, const std::string& prop) const {
    check_state(s);
    return props_[s].count(prop) > 0;
}

std::set<std::string> Lts::all_props() const {
    std::set<std::string> out;
    for (const auto& ps : props_) out.insert(ps.begin(), ps.end());
    return out;
}

const std::vector<StateId>& Lts::successors(StateId s, const Letter& a) const {
    check_state(s);
    static const std::vector<StateId> empty;
    auto it = succ_.find({s, a});
    return it == succ_.end() ? empty : it->second;
}

std::vector<std::pair<Letter, StateId>> Lts::out_edges(StateId s) const {
    check_state(s);
    std::vector<std::pair<Letter, StateId>> out;
    for (const auto& [key, targets] : succ_) {
        if (key.first != s) continue;
        for (StateId t : targets) out.emplace_back(key.second, t);
    }
    return out;
}

std::size_t Lts::transition_count() const {
    std::size_t n = 0;
    for (const auto& [key, targets] : succ_) n += targets.size();
    return n;
}

void Lts::check_state(StateId s) const {
    if (s >= names_.size())
        throw InputError("state id " + std::to_string(s) + " out of range");
}

std::set<StateId> reach_by_word(const Lts& lts, StateId s, const Word& w) {
    if (s >= lts.state_count())
        throw InputError("reach_by_word: unknown state id");
    for (const Letter& a : w)
        if (!lts.has_letter(a))
            throw InputError("reach_by_word: letter '" + a + "' not in alphabet");
    std::set<StateId> frontier{s};
    for (const Letter& a : w) {
        std::set<StateId> next;
        for (StateId q : frontier)
            for (StateId t : lts.successors(q, a)) next.insert(t);
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return frontier;
}

std::set<std::pair<Word, StateId>> words_from(const Lts& lts, StateId s, std::size_t max_len) {
    if (s >= lts.state_count())
        throw InputError("words_from: unknown state id");
    std::set<std::pair<Word, StateId>> out;
    std::vector<std::pair<Word, StateId>> frontier{{Word{}, s}};
    out.insert(frontier.front());
    for (std::size_t len = 0; len < max_len && !frontier.empty(); ++len) {
        std::vector<std::pair<Word, StateId>> next;
        for (const auto& [w, q] : frontier) {
            for (const auto& [a, t] : lts.out_edges(q)) {
                Word w2 = w;
                w2.push_back(a);
                next.emplace_back(std::move(w2), t);
            }
        }
        for (const auto& e : next) out.insert(e);
        frontier = std::move(next);
    }
    return out;
}

Lts make_chain_b(std::size_t l) {
    Lts lts;
    lts.add_letter("a"); // the ambient alphabet is {a, b}; chains use only b
    lts.add_letter("b");
    std::vector<StateId> ids(l + 1);
    for (std::size_t i = 0; i <= l; ++i) ids[i] = lts.add_state(std::to_string(i));
    for (std::size_t i = 0; i + 1 <= l; ++i) lts.add_transition(ids[i + 1], "b", ids[i]);
    lts.add_prop(ids[0], "p");
    lts.set_initial(ids[l]);
    return lts;
}

namespace {

// Descending chain head -> ... -> tail labelled with `letter`; state names are
// "<i><suffix>" for i = len .. 0. Returns (head, tail).
std::pair<StateId, StateId> add_chain(Lts& lts, std::size_t len, const Letter& letter,
                                      const std::string& suffix) {
    StateId head = lts.add_state(std::to_string(len) + suffix);
    StateId prev = head;
    for (std::size_t i = len; i > 0; --i) {
        StateId next = lts.add_state(std::to_string(i - 1) + suffix);
        lts.add_transition(prev, letter, next);
        prev = next;
    }
    return {head, prev};
}

// The fork substructure shared by both witness families: a junction state
// with two branches; branch edges after the first (b-labelled) step use
// `tail_letter`, branch lengths counted in edges from the junction.
StateId add_fork(Lts& lts, const std::string& junction_name, const Letter& tail_letter,
                 std::size_t short_len, std::size_t long_len, const std::string& short_suffix,
                 const std::string& long_suffix) {
    StateId junction = lts.add_state(junction_name);
    auto [short_head, short_tail] = add_chain(lts, short_len - 1, tail_letter, short_suffix);
    auto [long_head, long_tail] = add_chain(lts, long_len - 1, tail_letter, long_suffix);
    lts.add_transition(junction, "b", short_head);
    lts.add_transition(junction, "b", long_head);
    lts.add_prop(short_tail, "p");
    lts.add_prop(long_tail, "p");
    return junction;
}

void check_witness_params(std::size_t m, std::size_t k, std::size_t d) {
    if (m == 0 || k == 0 || d == 0)
        throw InputError("witness parameters m, k, d must all be at least 1");
}

} // namespace

WitnessPair make_witness_diabox(std::size_t m, std::size_t k, std::size_t d, bool cross_edge) {
    check_witness_params(m, k, d);
    const std::size_t l = (m + k) * d;

    Lts t1;
    t1.add_letter("a");
    t1.add_letter("b");
    auto [head1, pre1] = add_chain(t1, l, "a", "_4");
    StateId u = t1.add_state("u");
    t1.add_transition(pre1, "a", u);
    auto [bhead, btail] = add_chain(t1, l, "b", "_1");
    t1.add_transition(u, "b", bhead);
    t1.add_prop(btail, "p");
    t1.set_initial(head1);
    if (cross_edge) {
        StateId dnc = add_fork(t1, "dn'", "b", l + 1, l + k + 1, "_2'", "_3'");
        t1.add_transition(pre1, "a", dnc);
    }

    Lts t2;
    t2.add_letter("a");
    t2.add_letter("b");
    auto [head2, pre2] = add_chain(t2, l, "a", "_5");
    StateId dn = add_fork(t2, "dn", "b", l + 1, l + k + 1, "_2", "_3");
    t2.add_transition(pre2, "a", dn);
    t2.set_initial(head2);

    return {std::move(t1), std::move(t2)};
}

WitnessPair make_witness_an_b_an(std::size_t m, std::size_t k, std::size_t d, bool cross_edge) {
    check_witness_params(m, k, d);
    const std::size_t n = (m + k) * d;

    Lts t1;
    t1.add_letter("a");
    t1.add_letter("b");
    auto [head1, pre1] = add_chain(t1, n - 1, "a", "_4");
    StateId u = t1.add_state("u");
    t1.add_transition(pre1, "a", u);
    auto [ahead, atail] = add_chain(t1, n, "a", "_1");
    t1.add_transition(u, "b", ahead);
    t1.add_prop(atail, "p");
    t1.set_initial(head1);
    if (cross_edge) {
        StateId dnc = add_fork(t1, "dn'", "a", n + 1, n + k + 1, "_2'", "_3'");
        t1.add_transition(pre1, "a", dnc);
    }

    Lts t2;
    t2.add_letter("a");
    t2.add_letter("b");
    auto [head2, pre2] = add_chain(t2, n - 1, "a", "_5");
    StateId dn = add_fork(t2, "dn", "a", n + 1, n + k + 1, "_2", "_3");
    t2.add_transition(pre2, "a", dn);
    t2.set_initial(head2);

    return {std::move(t1), std::move(t2)};
}

Word word_from_string(const std::string& text) {
    Word w;
    if (text.find_first_of(" \t") != std::string::npos) {
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) w.push_back(tok);
    } else {
        for (char c : text) w.push_back(std::string(1, c));
    }
    return w;
}

std::string word_to_string(const Word& w) {
    bool multi = false;
    for (const Letter& a : w)
        if (a.size() > 1) multi = true;
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (multi && i > 0) out += ' ';
        out += w[i];
    }
    return out;
}

} // namespace seplab
