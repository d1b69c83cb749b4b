// formats.cpp -- parsing and serialization of the text formats
#include "seplab/formats.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "seplab/errors.hpp"

namespace seplab {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] void fail(const Line& line, const std::string& msg) {
    throw ParseError(msg, line.number, 1);
}

} // namespace

// ---------------------------------------------------------------------------
// LTS
// ---------------------------------------------------------------------------

Lts parse_lts(const std::string& text) {
    Lts lts;
    std::vector<Line> lines = tokenize_lines(text);
    // Two passes so transitions may mention states declared later.
    for (const Line& line : lines) {
        const auto& t = line.tokens;
        if (t[0] == "state") {
            if (t.size() < 2) fail(line, "state needs an id");
            StateId s = lts.ensure_state(t[1]);
            for (std::size_t i = 2; i < t.size(); ++i) lts.add_prop(s, t[i]);
        } else if (t[0] == "alphabet") {
            // Optional; letters are otherwise inferred from transitions.
            for (std::size_t i = 1; i < t.size(); ++i) lts.add_letter(t[i]);
        } else if (t[0] != "init" && t[0] != "trans") {
            fail(line, "unknown directive '" + t[0] + "'");
        }
    }
    for (const Line& line : lines) {
        const auto& t = line.tokens;
        if (t[0] == "init") {
            if (t.size() != 2) fail(line, "init takes exactly one state");
            auto s = lts.find_state(t[1]);
            if (!s) fail(line, "init references unknown state '" + t[1] + "'");
            lts.set_initial(*s);
        } else if (t[0] == "trans") {
            if (t.size() != 4) fail(line, "trans takes source, letter, target");
            auto src = lts.find_state(t[1]);
            auto dst = lts.find_state(t[3]);
            if (!src) fail(line, "trans references unknown state '" + t[1] + "'");
            if (!dst) fail(line, "trans references unknown state '" + t[3] + "'");
            lts.add_transition(*src, t[2], *dst);
        }
    }
    return lts;
}

std::string serialize_lts(const Lts& lts) {
    std::ostringstream out;
    if (!lts.alphabet().empty()) {
        out << "alphabet";
        for (const Letter& a : lts.alphabet()) out << ' ' << a;
        out << '\n';
    }
    for (StateId s = 0; s < lts.state_count(); ++s) {
        out << "state " << lts.state_name(s);
        for (const std::string& p : lts.props_of(s)) out << ' ' << p;
        out << '\n';
    }
    if (lts.initial()) out << "init " << lts.state_name(*lts.initial()) << '\n';
    for (StateId s = 0; s < lts.state_count(); ++s)
        for (const auto& [a, t] : lts.out_edges(s))
            out << "trans " << lts.state_name(s) << ' ' << a << ' ' << lts.state_name(t) << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Automata
// ---------------------------------------------------------------------------

namespace {

std::vector<StackSymbol> parse_push(const Line& line, const std::string& value) {
    std::vector<StackSymbol> out;
    if (value == "-") return out;
    std::string cur;
    for (char c : value) {
        if (c == ',') {
            if (cur.empty()) fail(line, "empty stack symbol in push list");
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (cur.empty()) fail(line, "empty stack symbol in push list");
    out.push_back(cur);
    return out;
}

std::string push_to_string(const std::vector<StackSymbol>& push) {
    if (push.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < push.size(); ++i) {
        if (i > 0) out += ',';
        out += push[i];
    }
    return out;
}

} // namespace

ParsedAutomaton parse_automaton(const std::string& text) {
    std::vector<Line> lines = tokenize_lines(text);
    if (lines.empty()) throw ParseError("empty automaton description", 1, 1);
    const std::string& kind = lines[0].tokens[0];
    if (kind != "nfa" && kind != "pda" && kind != "vpa")
        fail(lines[0], "expected header 'nfa', 'pda' or 'vpa'");

    ParsedAutomaton out;
    if (kind == "nfa") {
        out.kind = ParsedAutomaton::Kind::NfaKind;
        Nfa nfa;
        // States come into existence on first mention, so scan edges first
        // for declarations is unnecessary: collect names in order of mention.
        auto state = [&](const std::string& name) { return nfa.ensure_state(name); };
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const Line& line = lines[i];
            const auto& t = line.tokens;
            if (t[0] == "alphabet") {
                for (std::size_t j = 1; j < t.size(); ++j) nfa.add_letter(t[j]);
            } else if (t[0] == "start") {
                if (t.size() != 2) fail(line, "start takes one state");
                nfa.set_start(state(t[1]));
            } else if (t[0] == "accept") {
                for (std::size_t j = 1; j < t.size(); ++j) nfa.add_accepting(state(t[j]));
            } else if (t[0] == "edge") {
                if (t.size() != 4) fail(line, "nfa edge takes source, letter, target");
                nfa.add_edge(state(t[1]), t[2], state(t[3]));
            } else {
                fail(line, "unknown directive '" + t[0] + "'");
            }
        }
        out.nfa = std::move(nfa);
        return out;
    }

    Pda pda;
    std::set<Letter> calls, returns, internals;
    auto state = [&](const std::string& name) { return pda.ensure_state(name); };
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const auto& t = line.tokens;
        if (t[0] == "alphabet") {
            for (std::size_t j = 1; j < t.size(); ++j) pda.add_letter(t[j]);
        } else if (t[0] == "calls" && kind == "vpa") {
            for (std::size_t j = 1; j < t.size(); ++j) calls.insert(t[j]);
        } else if (t[0] == "returns" && kind == "vpa") {
            for (std::size_t j = 1; j < t.size(); ++j) returns.insert(t[j]);
        } else if (t[0] == "internals" && kind == "vpa") {
            for (std::size_t j = 1; j < t.size(); ++j) internals.insert(t[j]);
        } else if (t[0] == "start") {
            if (t.size() != 2) fail(line, "start takes one state");
            pda.set_start(state(t[1]));
        } else if (t[0] == "accept") {
            for (std::size_t j = 1; j < t.size(); ++j) pda.add_accepting(state(t[j]));
        } else if (t[0] == "edge") {
            if (t.size() != 6) fail(line, "pda edge takes q a pop:<g|_> push:<g,...|-> q'");
            if (t[3].rfind("pop:", 0) != 0) fail(line, "expected pop:<symbol> or pop:_");
            if (t[4].rfind("push:", 0) != 0) fail(line, "expected push:<list> or push:-");
            std::string popv = t[3].substr(4);
            std::optional<StackSymbol> pop;
            if (popv != "_") pop = popv;
            std::vector<StackSymbol> push = parse_push(line, t[4].substr(5));
            pda.add_transition({state(t[1]), t[2], pop, push, state(t[5])});
        } else {
            fail(line, "unknown directive '" + t[0] + "'");
        }
    }
    if (kind == "pda") {
        out.kind = ParsedAutomaton::Kind::PdaKind;
        out.pda = std::move(pda);
    } else {
        out.kind = ParsedAutomaton::Kind::VpaKind;
        out.vpa = Vpa{std::move(pda), std::move(calls), std::move(returns), std::move(internals)};
    }
    return out;
}

namespace {
void serialize_pda_body(std::ostringstream& out, const Pda& pda) {
    out << "alphabet";
    for (const Letter& a : pda.alphabet()) out << ' ' << a;
    out << '\n';
    out << "start " << pda.state_name(pda.start()) << '\n';
    if (!pda.accepting_states().empty()) {
        out << "accept";
        for (AutState q : pda.accepting_states()) out << ' ' << pda.state_name(q);
        out << '\n';
    }
    for (const auto& t : pda.transitions()) {
        out << "edge " << pda.state_name(t.src) << ' ' << t.letter << " pop:"
            << (t.pop ? *t.pop : "_") << " push:" << push_to_string(t.push) << ' '
            << pda.state_name(t.dst) << '\n';
    }
}
} // namespace

std::string serialize_automaton(const Nfa& nfa) {
    std::ostringstream out;
    out << "nfa\nalphabet";
    for (const Letter& a : nfa.alphabet()) out << ' ' << a;
    out << '\n';
    out << "start " << nfa.state_name(nfa.start()) << '\n';
    if (!nfa.accepting_states().empty()) {
        out << "accept";
        for (AutState q : nfa.accepting_states()) out << ' ' << nfa.state_name(q);
        out << '\n';
    }
    for (const auto& [src, a, dst] : nfa.edges())
        out << "edge " << nfa.state_name(src) << ' ' << a << ' ' << nfa.state_name(dst) << '\n';
    return out.str();
}

std::string serialize_automaton(const Pda& pda) {
    std::ostringstream out;
    out << "pda\n";
    serialize_pda_body(out, pda);
    return out.str();
}

std::string serialize_automaton(const Vpa& vpa) {
    std::ostringstream out;
    out << "vpa\n";
    auto section = [&](const char* name, const std::set<Letter>& set) {
        if (set.empty()) return;
        out << name;
        for (const Letter& a : set) out << ' ' << a;
        out << '\n';
    };
    section("calls", vpa.calls);
    section("returns", vpa.returns);
    section("internals", vpa.internals);
    serialize_pda_body(out, vpa.pda);
    return out.str();
}

LanguageRef ParsedAutomaton::as_language(std::string name, std::optional<LangClass> cls) const {
    LanguageRef ref;
    switch (kind) {
        case Kind::NfaKind: ref = make_language(std::move(name), *nfa); break;
        case Kind::PdaKind: ref = make_language(std::move(name), *pda); break;
        case Kind::VpaKind: ref = make_language(std::move(name), *vpa); break;
    }
    if (cls) {
        // Requested class must be consistent with the acceptor kind.
        bool ok = (*cls == LangClass::Reg && kind == Kind::NfaKind) ||
                  (*cls == LangClass::Vpl && kind == Kind::VpaKind) ||
                  (*cls == LangClass::Cfl && kind != Kind::NfaKind);
        if (!ok)
            throw InputError("language '" + ref.name + "': class tag " + lang_class_name(*cls) +
                             " does not match the acceptor kind");
        ref.cls = *cls;
    }
    return ref;
}

// ---------------------------------------------------------------------------
// Formula text: a small cursor-based recursive-descent parser
// ---------------------------------------------------------------------------

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect(char c, const std::string& what) {
        if (!eat(c)) error("expected '" + std::string(1, c) + "' " + what);
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                text_[pos_] == '\''))
            advance();
        if (start == pos_) error("expected an identifier");
        return text_.substr(start, pos_ - start);
    }

    [[noreturn]] void error(const std::string& msg) { throw ParseError(msg, line_, col_); }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

PdlFormula parse_pdl_formula(Cursor& c) {
    char ch = c.peek();
    if (ch == '~') {
        c.eat('~');
        return pdl_not(parse_pdl_formula(c));
    }
    if (ch == '<') {
        c.eat('<');
        std::string name = c.ident();
        c.expect('>', "after language name");
        return pdl_dia(name, parse_pdl_formula(c));
    }
    if (ch == '[') {
        c.eat('[');
        std::string name = c.ident();
        c.expect(']', "after language name");
        return pdl_box(name, parse_pdl_formula(c));
    }
    if (ch == '(') {
        c.eat('(');
        PdlFormula lhs = parse_pdl_formula(c);
        char op = c.peek();
        if (op == ')') {
            c.eat(')');
            return lhs;
        }
        if (op != '&' && op != '|') c.error("expected '&', '|' or ')'");
        c.eat(op);
        PdlFormula rhs = parse_pdl_formula(c);
        c.expect(')', "to close the binary connective");
        return op == '&' ? pdl_and(lhs, rhs) : pdl_or(lhs, rhs);
    }
    std::string name = c.ident();
    if (name == "tt") return pdl_tt();
    if (name == "ff") return pdl_ff();
    return pdl_prop(name);
}

void check_pdl_languages(const PdlFormula& f, const LanguageTable& langs) {
    for (const std::string& name : pdl_language_names(f))
        if (!langs.count(name))
            throw InputError("formula references undeclared language '" + name + "'");
    // All referenced languages must agree on one alphabet.
    const std::set<Letter>* first = nullptr;
    std::string first_name;
    for (const std::string& name : pdl_language_names(f)) {
        const auto& alpha = langs.at(name).alphabet();
        if (!first) {
            first = &alpha;
            first_name = name;
        } else if (alpha != *first) {
            throw InputError("languages '" + first_name + "' and '" + name +
                             "' have different alphabets");
        }
    }
}

// FLC grammar: formula := unit (';' formula)?  with binder bodies restricted
// to single units, so "(mu Z . (...)) ; p" and "mu Z . (...) ; p" agree.
// Bare identifiers are variables when bound by an enclosing binder, atoms
// otherwise.
FlcFormula parse_flc_unit(Cursor& c, std::set<std::string>& scope);

FlcFormula parse_flc_formula(Cursor& c, std::set<std::string>& scope) {
    FlcFormula lhs = parse_flc_unit(c, scope);
    if (c.peek() == ';') {
        c.eat(';');
        return flc_chop(lhs, parse_flc_formula(c, scope));
    }
    return lhs;
}

FlcFormula parse_flc_unit(Cursor& c, std::set<std::string>& scope) {
    char ch = c.peek();
    if (ch == '!') {
        c.eat('!');
        return flc_neg_atom(c.ident());
    }
    if (ch == '<') {
        c.eat('<');
        std::string a = c.ident();
        c.expect('>', "after modality letter");
        return flc_dia(a);
    }
    if (ch == '[') {
        c.eat('[');
        std::string a = c.ident();
        c.expect(']', "after modality letter");
        return flc_box(a);
    }
    if (ch == '(') {
        c.eat('(');
        FlcFormula lhs = parse_flc_formula(c, scope);
        char op = c.peek();
        if (op == ')') {
            c.eat(')');
            return lhs;
        }
        if (op != '&' && op != '|') c.error("expected '&', '|' or ')'");
        c.eat(op);
        FlcFormula rhs = parse_flc_formula(c, scope);
        c.expect(')', "to close the binary connective");
        return op == '&' ? flc_and(lhs, rhs) : flc_or(lhs, rhs);
    }
    std::string name = c.ident();
    if (name == "tau") return flc_tau();
    if (name == "mu" || name == "nu") {
        std::string var = c.ident();
        c.expect('.', "after the bound variable");
        bool fresh = scope.insert(var).second;
        FlcFormula body = parse_flc_unit(c, scope);
        if (fresh) scope.erase(var);
        return name == "mu" ? flc_mu(var, body) : flc_nu(var, body);
    }
    if (name == "tt") return flc_tt();
    if (scope.count(name)) return flc_var(name);
    return flc_atom(name);
}

} // namespace

PdlFormula parse_pdl(const std::string& text, const LanguageTable* langs) {
    Cursor c(text);
    PdlFormula f = parse_pdl_formula(c);
    if (!c.done()) c.error("trailing input after formula");
    if (langs) check_pdl_languages(f, *langs);
    return f;
}

std::string serialize_pdl(const PdlFormula& f) { return pdl_to_string(f); }

FlcFormula parse_flc(const std::string& text) {
    Cursor c(text);
    std::set<std::string> scope;
    FlcFormula f = parse_flc_formula(c, scope);
    if (!c.done()) c.error("trailing input after formula");
    return f;
}

std::string serialize_flc(const FlcFormula& f) { return flc_to_string(f); }

// ---------------------------------------------------------------------------
// Manifest
// ---------------------------------------------------------------------------

namespace {
std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
} // namespace

Manifest load_manifest(const std::filesystem::path& path) {
    Manifest m;
    const std::filesystem::path dir = path.parent_path();
    std::vector<Line> lines = tokenize_lines(read_file(path));
    std::vector<std::tuple<std::string, std::string, std::string>> formula_entries;
    for (const Line& line : lines) {
        const auto& t = line.tokens;
        if (t[0] == "lang") {
            if (t.size() != 4) fail(line, "lang takes name, class, file");
            if (m.languages.count(t[1])) fail(line, "duplicate language name '" + t[1] + "'");
            ParsedAutomaton parsed = parse_automaton(read_file(dir / t[3]));
            LanguageRef ref = parsed.as_language(t[1], lang_class_from_name(t[2]));
            if (ref.cls == LangClass::Vpl && !vpa_validate(*ref.vpa))
                fail(line, "vpa '" + t[1] + "' violates the visibly-pushdown shape rules");
            m.languages.emplace(t[1], std::move(ref));
        } else if (t[0] == "lts") {
            if (t.size() != 3) fail(line, "lts takes name and file");
            if (m.ltss.count(t[1])) fail(line, "duplicate lts name '" + t[1] + "'");
            m.ltss.emplace(t[1], parse_lts(read_file(dir / t[2])));
        } else if (t[0] == "formula") {
            if (t.size() != 4) fail(line, "formula takes name, logic, file");
            formula_entries.emplace_back(t[1], t[2], (dir / t[3]).string());
        } else {
            fail(line, "unknown directive '" + t[0] + "'");
        }
    }
    // Formulas parse after all languages exist so references resolve.
    for (const auto& [name, logic, file] : formula_entries) {
        if (m.pdl_formulas.count(name) || m.flc_formulas.count(name))
            throw InputError("duplicate formula name '" + name + "'");
        std::string text = read_file(file);
        if (logic == "pdl")
            m.pdl_formulas.emplace(name, parse_pdl(text, &m.languages));
        else if (logic == "flc")
            m.flc_formulas.emplace(name, parse_flc(text));
        else
            throw InputError("formula '" + name + "': logic must be pdl or flc");
    }
    return m;
}

} // namespace seplab
