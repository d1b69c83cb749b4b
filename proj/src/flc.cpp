// flc.cpp -- predicate-transformer semantics, fixpoint solving, vpFLC
#include "seplab/flc.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <random>

#include "seplab/errors.hpp"

namespace seplab {

// ---------------------------------------------------------------------------
// Syntax
// ---------------------------------------------------------------------------

namespace {
FlcFormula node(FlcKind k, std::string name, FlcFormula l = nullptr, FlcFormula r = nullptr) {
    auto n = std::make_shared<FlcNode>();
    n->kind = k;
    n->name = std::move(name);
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
}
} // namespace

FlcFormula flc_atom(std::string q) { return node(FlcKind::Atom, std::move(q)); }
FlcFormula flc_neg_atom(std::string q) { return node(FlcKind::NegAtom, std::move(q)); }
FlcFormula flc_var(std::string x) { return node(FlcKind::Var, std::move(x)); }
FlcFormula flc_tau() { return node(FlcKind::Tau, ""); }
FlcFormula flc_dia(std::string a) { return node(FlcKind::Dia, std::move(a)); }
FlcFormula flc_box(std::string a) { return node(FlcKind::Box, std::move(a)); }
FlcFormula flc_or(FlcFormula a, FlcFormula b) {
    return node(FlcKind::Or, "", std::move(a), std::move(b));
}
FlcFormula flc_and(FlcFormula a, FlcFormula b) {
    return node(FlcKind::And, "", std::move(a), std::move(b));
}
FlcFormula flc_mu(std::string x, FlcFormula body) {
    return node(FlcKind::Mu, std::move(x), std::move(body));
}
FlcFormula flc_nu(std::string x, FlcFormula body) {
    return node(FlcKind::Nu, std::move(x), std::move(body));
}
FlcFormula flc_chop(FlcFormula a, FlcFormula b) {
    return node(FlcKind::Chop, "", std::move(a), std::move(b));
}
FlcFormula flc_tt() { return flc_or(flc_atom("p"), flc_neg_atom("p")); }

namespace {
bool atomic_for_printing(const FlcFormula& f) {
    switch (f->kind) {
        case FlcKind::Atom:
        case FlcKind::NegAtom:
        case FlcKind::Var:
        case FlcKind::Tau:
        case FlcKind::Dia:
        case FlcKind::Box: return true;
        default: return false;
    }
}
} // namespace

std::string flc_to_string(const FlcFormula& f) {
    switch (f->kind) {
        case FlcKind::Atom: return f->name;
        case FlcKind::NegAtom: return "!" + f->name;
        case FlcKind::Var: return f->name;
        case FlcKind::Tau: return "tau";
        case FlcKind::Dia: return "<" + f->name + ">";
        case FlcKind::Box: return "[" + f->name + "]";
        case FlcKind::Or:
            return "(" + flc_to_string(f->left) + " | " + flc_to_string(f->right) + ")";
        case FlcKind::And:
            return "(" + flc_to_string(f->left) + " & " + flc_to_string(f->right) + ")";
        case FlcKind::Mu:
        case FlcKind::Nu: {
            std::string head = (f->kind == FlcKind::Mu ? "mu " : "nu ") + f->name + " . ";
            if (atomic_for_printing(f->left)) return head + flc_to_string(f->left);
            std::string body = flc_to_string(f->left);
            if (body.front() == '(') return head + body;
            return head + "(" + body + ")";
        }
        case FlcKind::Chop: {
            // Right-associative; a chop or binder on the left keeps parens.
            std::string lhs = flc_to_string(f->left);
            if (f->left->kind == FlcKind::Chop || f->left->kind == FlcKind::Mu ||
                f->left->kind == FlcKind::Nu)
                lhs = "(" + lhs + ")";
            return lhs + " ; " + flc_to_string(f->right);
        }
    }
    return "?";
}

int flc_compare(const FlcFormula& a, const FlcFormula& b) {
    if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
    if (a->name != b->name) return a->name < b->name ? -1 : 1;
    if (!a->left != !b->left) return !a->left ? -1 : 1;
    if (a->left) {
        int c = flc_compare(a->left, b->left);
        if (c != 0) return c;
    }
    if (!a->right != !b->right) return !a->right ? -1 : 1;
    if (a->right) return flc_compare(a->right, b->right);
    return 0;
}

bool flc_equal(const FlcFormula& a, const FlcFormula& b) { return flc_compare(a, b) == 0; }

namespace {
void free_vars_rec(const FlcFormula& f, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (f->kind) {
        case FlcKind::Var:
            if (!bound.count(f->name)) out.insert(f->name);
            return;
        case FlcKind::Mu:
        case FlcKind::Nu: {
            bool fresh = bound.insert(f->name).second;
            free_vars_rec(f->left, bound, out);
            if (fresh) bound.erase(f->name);
            return;
        }
        default:
            if (f->left) free_vars_rec(f->left, bound, out);
            if (f->right) free_vars_rec(f->right, bound, out);
    }
}
} // namespace

std::set<std::string> flc_free_vars(const FlcFormula& f) {
    std::set<std::string> bound, out;
    free_vars_rec(f, bound, out);
    return out;
}

bool flc_closed(const FlcFormula& f) { return flc_free_vars(f).empty(); }

std::set<Letter> flc_letters(const FlcFormula& f) {
    std::set<Letter> out;
    if (f->kind == FlcKind::Dia || f->kind == FlcKind::Box) out.insert(f->name);
    if (f->left) {
        auto l = flc_letters(f->left);
        out.insert(l.begin(), l.end());
    }
    if (f->right) {
        auto r = flc_letters(f->right);
        out.insert(r.begin(), r.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Transformers
// ---------------------------------------------------------------------------

StateBits lts_universe(const Lts& lts) {
    if (lts.state_count() > 64)
        throw ResourceError("FLC evaluation supports at most 64 states (LTS has " +
                            std::to_string(lts.state_count()) + ")");
    if (lts.state_count() == 64) return ~StateBits{0};
    return (StateBits{1} << lts.state_count()) - 1;
}

std::uint64_t lts_fingerprint(const Lts& lts) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(lts.state_count());
    for (StateId s = 0; s < lts.state_count(); ++s)
        for (char c : lts.state_name(s)) mix(static_cast<unsigned char>(c));
    return h;
}

PredicateTransformer::PredicateTransformer(std::size_t n_states, std::uint64_t universe_fp,
                                           std::vector<StateBits> table)
    : n_states_(n_states), universe_fp_(universe_fp), table_(std::move(table)) {
    assert(table_.size() == (std::size_t{1} << n_states_));
}

StateBits PredicateTransformer::apply(StateBits subset) const {
    if (subset >= table_.size())
        throw InputError("transformer applied to a subset outside its universe");
    return table_[subset];
}

bool PredicateTransformer::leq(const PredicateTransformer& o) const {
    if (universe_fp_ != o.universe_fp_)
        throw InputError("transformers over different universes");
    for (std::size_t t = 0; t < table_.size(); ++t)
        if (table_[t] & ~o.table_[t]) return false;
    return true;
}

bool PredicateTransformer::is_monotone() const {
    // Subset-of-superset enumeration; 3^n pairs.
    for (std::size_t big = 0; big < table_.size(); ++big) {
        StateBits fb = table_[big];
        StateBits sub = big;
        while (true) {
            if (table_[sub] & ~fb) return false;
            if (sub == 0) break;
            sub = (sub - 1) & big;
        }
    }
    return true;
}

bool PredicateTransformer::monotone_on_sample(std::size_t samples, std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        StateBits big = rng() & (table_.size() - 1);
        StateBits small = rng() & big;
        if (table_[small] & ~table_[big]) return false;
    }
    return true;
}

PredicateTransformer PredicateTransformer::constant(std::size_t n, std::uint64_t fp,
                                                    StateBits value) {
    return PredicateTransformer(n, fp, std::vector<StateBits>(std::size_t{1} << n, value));
}

PredicateTransformer PredicateTransformer::identity(std::size_t n, std::uint64_t fp) {
    std::vector<StateBits> table(std::size_t{1} << n);
    for (std::size_t t = 0; t < table.size(); ++t) table[t] = t;
    return PredicateTransformer(n, fp, std::move(table));
}

std::size_t flc_state_cap() {
    if (const char* env = std::getenv("SEPLAB_FLC_STATE_CAP")) {
        long v = std::atol(env);
        if (v >= 1 && v <= 24) return static_cast<std::size_t>(v);
    }
    return 14;
}

// ---------------------------------------------------------------------------
// Shared modal machinery
// ---------------------------------------------------------------------------

namespace {

struct ModalOps {
    const Lts& lts;
    std::size_t n;
    StateBits full;
    std::map<Letter, std::vector<StateBits>> succ_masks;
    mutable std::map<std::string, StateBits> prop_masks;

    explicit ModalOps(const Lts& l) : lts(l), n(l.state_count()), full(lts_universe(l)) {
        for (const Letter& a : l.alphabet()) {
            auto& v = succ_masks[a];
            v.assign(n, 0);
            for (StateId s = 0; s < n; ++s)
                for (StateId t : l.successors(s, a)) v[s] |= StateBits{1} << t;
        }
    }

    StateBits prop_mask(const std::string& q) const {
        auto it = prop_masks.find(q);
        if (it != prop_masks.end()) return it->second;
        StateBits m = 0;
        for (StateId s = 0; s < n; ++s)
            if (lts.has_prop(s, q)) m |= StateBits{1} << s;
        prop_masks[q] = m;
        return m;
    }

    const std::vector<StateBits>* succ(const Letter& a) const {
        auto it = succ_masks.find(a);
        return it == succ_masks.end() ? nullptr : &it->second;
    }

    StateBits dia(const Letter& a, StateBits T) const {
        const auto* masks = succ(a);
        if (!masks) return 0;
        StateBits out = 0;
        for (StateId s = 0; s < n; ++s)
            if ((*masks)[s] & T) out |= StateBits{1} << s;
        return out;
    }

    // The box requires at least one successor: a state with no a-edge does
    // not satisfy [a]T. Keeping the universal reading vacuously true would
    // make the a^n/b^n separating properties hold in both witness structures
    // through branchless chain states, collapsing the intended verdicts.
    StateBits box(const Letter& a, StateBits T) const {
        const auto* masks = succ(a);
        if (!masks) return 0;
        StateBits out = 0;
        for (StateId s = 0; s < n; ++s) {
            StateBits m = (*masks)[s];
            if (m && !(m & ~T)) out |= StateBits{1} << s;
        }
        return out;
    }
};

// Static scopes: binder node -> enclosing variable bindings, for re-running
// binder bodies outside their original traversal.
using Scope = std::map<std::string, const FlcNode*>;

void collect_scopes(const FlcFormula& f, Scope scope, std::map<const FlcNode*, Scope>& out) {
    switch (f->kind) {
        case FlcKind::Mu:
        case FlcKind::Nu: {
            auto it = out.find(f.get());
            if (it != out.end()) {
                if (it->second != scope)
                    throw InputError("fixpoint subterm shared between different binding scopes");
                return;
            }
            out[f.get()] = scope;
            scope[f->name] = f.get();
            collect_scopes(f->left, scope, out);
            return;
        }
        default:
            if (f->left) collect_scopes(f->left, scope, out);
            if (f->right) collect_scopes(f->right, scope, out);
    }
}

bool node_closed(const FlcFormula& f, const Scope& scope) {
    for (const std::string& v : flc_free_vars(f))
        if (scope.count(v)) return false;
    return true;
}

// Demand-driven solver: fixpoint approximations are kept per (binder, argument)
// cell, and only for arguments actually queried. Closed fixpoint subformulas
// are solved independently and memoised; open ones join their enclosing
// binder's equation system, which must be of a single fixpoint kind.
class DemandSolver {
public:
    explicit DemandSolver(const Lts& lts, const FlcFormula& root) : ops_(lts) {
        collect_scopes(root, {}, scopes_);
    }

    StateBits query(const FlcFormula& root, StateBits arg) {
        if (!flc_closed(root)) throw InputError("flc_sem requires a closed formula");
        return ev(root, arg, {});
    }

private:
    StateBits ev(const FlcFormula& f, StateBits T, const Scope& scope) {
        switch (f->kind) {
            case FlcKind::Atom: return ops_.prop_mask(f->name);
            case FlcKind::NegAtom: return ops_.full & ~ops_.prop_mask(f->name);
            case FlcKind::Tau: return T;
            case FlcKind::Dia: return ops_.dia(f->name, T);
            case FlcKind::Box: return ops_.box(f->name, T);
            case FlcKind::Or: return ev(f->left, T, scope) | ev(f->right, T, scope);
            case FlcKind::And: return ev(f->left, T, scope) & ev(f->right, T, scope);
            case FlcKind::Chop: return ev(f->left, ev(f->right, T, scope), scope);
            case FlcKind::Var: {
                auto it = scope.find(f->name);
                if (it == scope.end()) throw InputError("unbound variable '" + f->name + "'");
                return cell(it->second, T);
            }
            case FlcKind::Mu:
            case FlcKind::Nu: {
                if (node_closed(f, scope)) return solve_closed(f, T);
                return cell(f.get(), T); // part of the enclosing system
            }
        }
        return 0;
    }

    StateBits cell(const FlcNode* binder, StateBits arg) {
        auto& m = cells_[binder];
        auto it = m.find(arg);
        if (it != m.end()) return it->second;
        new_cell_ = true;
        StateBits init = binder->kind == FlcKind::Mu ? 0 : ops_.full;
        m[arg] = init;
        return init;
    }

    // All non-closed binder descendants, cutting below closed binders (those
    // solve independently).
    void system_members(const FlcFormula& f, const Scope& scope,
                        std::vector<const FlcNode*>& out) {
        if (f->kind == FlcKind::Mu || f->kind == FlcKind::Nu) {
            if (node_closed(f, scope)) return;
            out.push_back(f.get());
            Scope inner = scope;
            inner[f->name] = f.get();
            system_members(f->left, inner, out);
            return;
        }
        if (f->left) system_members(f->left, scope, out);
        if (f->right) system_members(f->right, scope, out);
    }

    StateBits solve_closed(const FlcFormula& binder, StateBits arg) {
        auto key = std::make_pair(binder.get(), arg);
        auto hit = memo_.find(key);
        if (hit != memo_.end()) return hit->second;

        std::vector<const FlcNode*> members{binder.get()};
        {
            Scope inner = scopes_.at(binder.get());
            inner[binder->name] = binder.get();
            system_members(binder->left, inner, members);
        }
        for (const FlcNode* m : members)
            if (m->kind != binder->kind)
                throw ResourceError(
                    "alternating fixpoints are not supported in demand-driven mode; "
                    "use tabulated evaluation (state cap)");

        cell(binder.get(), arg);
        // Chaotic iteration over the demanded cells; single-kind systems
        // converge monotonically from their initial element.
        while (true) {
            new_cell_ = false;
            bool changed = false;
            std::vector<std::pair<const FlcNode*, StateBits>> snapshot;
            for (const FlcNode* m : members) {
                auto it = cells_.find(m);
                if (it == cells_.end()) continue;
                for (const auto& [a, v] : it->second) snapshot.emplace_back(m, a);
            }
            for (const auto& [m, a] : snapshot) {
                Scope sc = scopes_.at(m);
                sc[m->name] = m;
                FlcFormula body = body_of(m);
                StateBits v2 = ev(body, a, sc);
                StateBits& stored = cells_[m][a];
                if (v2 != stored) {
                    stored = v2;
                    changed = true;
                }
            }
            if (!changed && !new_cell_) break;
        }
        StateBits result = cells_[binder.get()][arg];
        for (const auto& [a, v] : cells_[binder.get()]) memo_[{binder.get(), a}] = v;
        // Member cells are context-dependent approximations; drop them so a
        // later solve of the same binder starts clean.
        for (const FlcNode* m : members) cells_.erase(m);
        return result;
    }

    FlcFormula body_of(const FlcNode* binder) {
        // Binders own their bodies via shared_ptr; rewrap without ownership
        // transfer for recursion convenience.
        return binder->left;
    }

    ModalOps ops_;
    std::map<const FlcNode*, Scope> scopes_;
    std::map<const FlcNode*, std::map<StateBits, StateBits>> cells_;
    std::map<std::pair<const FlcNode*, StateBits>, StateBits> memo_;
    bool new_cell_ = false;
};

} // namespace

// ---------------------------------------------------------------------------
// Tabulated evaluation
// ---------------------------------------------------------------------------

namespace {

using Table = std::vector<StateBits>;

Table eval_table(const ModalOps& ops, const FlcFormula& f,
                 std::map<std::string, const Table*>& env) {
    const std::size_t size = std::size_t{1} << ops.n;
    Table out(size);
    switch (f->kind) {
        case FlcKind::Atom: {
            StateBits m = ops.prop_mask(f->name);
            std::fill(out.begin(), out.end(), m);
            return out;
        }
        case FlcKind::NegAtom: {
            StateBits m = ops.full & ~ops.prop_mask(f->name);
            std::fill(out.begin(), out.end(), m);
            return out;
        }
        case FlcKind::Tau: {
            for (std::size_t t = 0; t < size; ++t) out[t] = t;
            return out;
        }
        case FlcKind::Dia: {
            for (std::size_t t = 0; t < size; ++t) out[t] = ops.dia(f->name, t);
            return out;
        }
        case FlcKind::Box: {
            for (std::size_t t = 0; t < size; ++t) out[t] = ops.box(f->name, t);
            return out;
        }
        case FlcKind::Or: {
            Table l = eval_table(ops, f->left, env);
            Table r = eval_table(ops, f->right, env);
            for (std::size_t t = 0; t < size; ++t) out[t] = l[t] | r[t];
            return out;
        }
        case FlcKind::And: {
            Table l = eval_table(ops, f->left, env);
            Table r = eval_table(ops, f->right, env);
            for (std::size_t t = 0; t < size; ++t) out[t] = l[t] & r[t];
            return out;
        }
        case FlcKind::Chop: {
            Table l = eval_table(ops, f->left, env);
            Table r = eval_table(ops, f->right, env);
            for (std::size_t t = 0; t < size; ++t) out[t] = l[r[t]];
            return out;
        }
        case FlcKind::Var: {
            auto it = env.find(f->name);
            if (it == env.end()) throw InputError("unbound variable '" + f->name + "'");
            return *it->second;
        }
        case FlcKind::Mu:
        case FlcKind::Nu: {
            Table approx(size, f->kind == FlcKind::Mu ? 0 : ops.full);
            const Table* prev = env.count(f->name) ? env[f->name] : nullptr;
            env[f->name] = &approx;
            // Strictly monotone chains in the tabulated lattice have length
            // at most n * 2^n, so iteration must settle within that bound.
            const std::size_t max_iter = ops.n * size + 1;
            std::size_t iter = 0;
            while (true) {
                Table next = eval_table(ops, f->left, env);
                if (next == approx) break;
                approx = std::move(next);
                if (++iter > max_iter)
                    throw ResourceError("fixpoint iteration exceeded its lattice bound");
            }
            if (prev)
                env[f->name] = prev;
            else
                env.erase(f->name);
            return approx;
        }
    }
    return out;
}

} // namespace

PredicateTransformer eval_flc(const Lts& lts, const FlcFormula& f, const FlcEnvironment& env) {
    if (lts.state_count() > flc_state_cap())
        throw ResourceError("LTS has " + std::to_string(lts.state_count()) +
                            " states, above the tabulation cap of " +
                            std::to_string(flc_state_cap()) +
                            " (set SEPLAB_FLC_STATE_CAP to raise it)");
    const std::uint64_t fp = lts_fingerprint(lts);
    for (const auto& [name, tr] : env.vars)
        if (tr.universe_fingerprint() != fp)
            throw InputError("environment transformer for '" + name +
                             "' belongs to a different state universe");
    for (const std::string& v : flc_free_vars(f))
        if (!env.vars.count(v)) throw InputError("unbound variable '" + v + "'");

    ModalOps ops(lts);
    std::map<std::string, const Table*> tables;
    for (const auto& [name, tr] : env.vars) tables[name] = &tr.table();
    Table t = eval_table(ops, f, tables);
    return PredicateTransformer(lts.state_count(), fp, std::move(t));
}

StateBits flc_sem(const Lts& lts, const FlcFormula& f) {
    if (!flc_closed(f)) throw InputError("flc_sem requires a closed formula");
    DemandSolver solver(lts, f);
    return solver.query(f, lts_universe(lts));
}

bool flc_holds(const Lts& lts, StateId s, const FlcFormula& f) {
    if (s >= lts.state_count()) throw InputError("flc_holds: unknown state id");
    return (flc_sem(lts, f) >> s) & 1;
}

// ---------------------------------------------------------------------------
// vpFLC recognition
// ---------------------------------------------------------------------------

namespace {

enum class LetterClass { Call, Return, Internal };

LetterClass classify(const AlphabetPartition& p, const Letter& a) {
    int n = (p.calls.count(a) ? 1 : 0) + (p.returns.count(a) ? 1 : 0) +
            (p.internals.count(a) ? 1 : 0);
    if (n != 1)
        throw InputError("letter '" + a + "' is not classified by the alphabet partition");
    if (p.calls.count(a)) return LetterClass::Call;
    if (p.returns.count(a)) return LetterClass::Return;
    return LetterClass::Internal;
}

void flatten_chops(const FlcFormula& f, std::vector<FlcFormula>& out) {
    if (f->kind == FlcKind::Chop) {
        flatten_chops(f->left, out);
        flatten_chops(f->right, out);
    } else {
        out.push_back(f);
    }
}

class VpRecognizer {
public:
    explicit VpRecognizer(const AlphabetPartition& p) : part_(p) {}

    bool formula(const FlcFormula& f) {
        std::vector<FlcFormula> items;
        flatten_chops(f, items);
        return seq(items, 0, items.size());
    }

private:
    bool seq(const std::vector<FlcFormula>& items, std::size_t from, std::size_t to) {
        if (from >= to) return false;
        const FlcFormula& head = items[from];
        switch (head->kind) {
            case FlcKind::Atom:
            case FlcKind::NegAtom:
            case FlcKind::Var:
                return from + 1 == to;
            case FlcKind::Tau:
                return false; // not a vpFLC production
            case FlcKind::Or:
            case FlcKind::And:
                return from + 1 == to && formula(head->left) && formula(head->right);
            case FlcKind::Mu:
            case FlcKind::Nu:
                // Fixpoint binders may head a composition (the separating
                // properties are all written (mu Z . ...) ; p).
                if (!formula(head->left)) return false;
                return from + 1 == to || seq(items, from + 1, to);
            case FlcKind::Dia:
            case FlcKind::Box: {
                LetterClass cls = classify(part_, head->name);
                if (cls == LetterClass::Return) return false;
                if (cls == LetterClass::Internal)
                    return from + 1 == to || seq(items, from + 1, to);
                // Call: locate the matching return on the chop spine.
                std::size_t depth = 1;
                for (std::size_t i = from + 1; i < to; ++i) {
                    const FlcFormula& e = items[i];
                    if (e->kind != FlcKind::Dia && e->kind != FlcKind::Box) continue;
                    LetterClass c = classify(part_, e->name);
                    if (c == LetterClass::Call) ++depth;
                    if (c == LetterClass::Return && --depth == 0) {
                        bool mid_ok = (i == from + 1) || seq(items, from + 1, i);
                        bool tail_ok = (i + 1 == to) || seq(items, i + 1, to);
                        return mid_ok && tail_ok;
                    }
                }
                return false;
            }
            case FlcKind::Chop: return false; // flattened away
        }
        return false;
    }

    const AlphabetPartition& part_;
};

} // namespace

bool is_vpflc(const FlcFormula& f, const AlphabetPartition& partition) {
    for (const Letter& a : flc_letters(f)) classify(partition, a); // errors on unclassified
    VpRecognizer rec(partition);
    return rec.formula(f);
}

// ---------------------------------------------------------------------------
// Stock properties and acceptors
// ---------------------------------------------------------------------------

Pda stock_anbn_pda() {
    Pda p;
    p.add_letter("a");
    p.add_letter("b");
    AutState q0 = p.add_state("q0");
    AutState q1 = p.add_state("q1");
    AutState q2 = p.add_state("q2");
    p.set_start(q0);
    p.add_accepting(q2);
    // Z marks the lowest counter so the final pop is visible to the control.
    p.add_transition({q0, "a", std::nullopt, {"Z"}, q0});
    p.add_transition({q0, "a", "Z", {"Z", "A"}, q0});
    p.add_transition({q0, "a", "A", {"A", "A"}, q0});
    p.add_transition({q0, "b", "A", {}, q1});
    p.add_transition({q0, "b", "Z", {}, q2});
    p.add_transition({q1, "b", "A", {}, q1});
    p.add_transition({q1, "b", "Z", {}, q2});
    return p;
}

Vpa stock_anbn_vpa() {
    Vpa v;
    v.pda.add_letter("a");
    v.pda.add_letter("b");
    AutState q0 = v.pda.add_state("q0");
    AutState q1 = v.pda.add_state("q1");
    v.pda.set_start(q0);
    v.pda.add_accepting(q1);
    v.pda.add_transition({q0, "a", std::nullopt, {"A"}, q0});
    v.pda.add_transition({q0, "a", "A", {"A", "A"}, q0});
    v.pda.add_transition({q0, "b", "A", {}, q1});
    v.pda.add_transition({q1, "b", "A", {}, q1});
    v.calls = {"a"};
    v.returns = {"b"};
    return v;
}

Pda stock_anban_pda() {
    Pda p;
    p.add_letter("a");
    p.add_letter("b");
    AutState q0 = p.add_state("q0");
    AutState q1 = p.add_state("q1");
    AutState q2 = p.add_state("q2");
    p.set_start(q0);
    p.add_accepting(q2);
    p.add_transition({q0, "a", std::nullopt, {"Z"}, q0});
    p.add_transition({q0, "a", "Z", {"Z", "A"}, q0});
    p.add_transition({q0, "a", "A", {"A", "A"}, q0});
    p.add_transition({q0, "b", "Z", {"Z"}, q1});
    p.add_transition({q0, "b", "A", {"A"}, q1});
    p.add_transition({q1, "a", "A", {}, q1});
    p.add_transition({q1, "a", "Z", {}, q2});
    return p;
}

namespace {
Nfa unary_loop_nfa(const Letter& looped, std::size_t period) {
    Nfa n;
    n.add_letter("a");
    n.add_letter("b");
    std::vector<AutState> ids(period);
    for (std::size_t i = 0; i < period; ++i) ids[i] = n.add_state("q" + std::to_string(i));
    for (std::size_t i = 0; i < period; ++i) n.add_edge(ids[i], looped, ids[(i + 1) % period]);
    n.set_start(ids[0]);
    n.add_accepting(ids[0]);
    return n;
}
} // namespace

Nfa stock_bstar_nfa() { return unary_loop_nfa("b", 1); }
Nfa stock_astar_nfa() { return unary_loop_nfa("a", 1); }
Nfa stock_evenb_nfa() { return unary_loop_nfa("b", 2); }
Nfa stock_b3star_nfa() { return unary_loop_nfa("b", 3); }

std::vector<std::string> property_names() {
    return {"dia_anbn", "dia_anban", "game_iter", "dia_an_box_bn", "dia_an_box_b_dia_an"};
}

BuiltProperty build_property(const std::string& name) {
    BuiltProperty out;
    out.name = name;
    auto dia_a = [] { return flc_dia("a"); };
    auto dia_b = [] { return flc_dia("b"); };
    auto box_b = [] { return flc_box("b"); };
    auto p = [] { return flc_atom("p"); };

    if (name == "dia_anbn") {
        out.flc = flc_chop(flc_mu("Z", flc_or(flc_chop(dia_a(), dia_b()),
                                              flc_chop(dia_a(), flc_chop(flc_var("Z"), dia_b())))),
                           p());
        out.pdl = pdl_dia("ANBN", pdl_prop("p"));
        out.langs.emplace("ANBN", make_language("ANBN", stock_anbn_vpa()));
    } else if (name == "dia_anban") {
        out.flc = flc_chop(
            flc_mu("Z", flc_or(flc_chop(dia_a(), flc_chop(dia_b(), dia_a())),
                               flc_chop(dia_a(), flc_chop(flc_var("Z"), dia_a())))),
            p());
        out.pdl = pdl_dia("ANBAN", pdl_prop("p"));
        out.langs.emplace("ANBAN", make_language("ANBAN", stock_anban_pda()));
    } else if (name == "game_iter") {
        out.flc = flc_chop(
            flc_mu("X", flc_chop(dia_a(), flc_chop(box_b(), flc_or(p(), flc_var("X"))))),
            flc_tt());
    } else if (name == "dia_an_box_bn") {
        out.flc = flc_chop(flc_mu("Z", flc_or(flc_chop(dia_a(), box_b()),
                                              flc_chop(dia_a(), flc_chop(flc_var("Z"), box_b())))),
                           p());
    } else if (name == "dia_an_box_b_dia_an") {
        out.flc = flc_chop(
            flc_mu("Z", flc_or(flc_chop(dia_a(), flc_chop(box_b(), dia_a())),
                               flc_chop(dia_a(), flc_chop(flc_var("Z"), dia_a())))),
            p());
    } else {
        throw InputError("unknown property '" + name + "'");
    }
    return out;
}

} // namespace seplab
