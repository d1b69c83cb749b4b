// formats.hpp -- text formats for LTS, automata and formulas, plus manifests
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "seplab/automata.hpp"
#include "seplab/flc.hpp"
#include "seplab/lts.hpp"
#include "seplab/pdl.hpp"

namespace seplab {

// LTS format, one directive per line:
//   state <id> [<prop> ...]
//   init <id>
//   trans <src> <letter> <dst>
// '#' starts a comment. Tokens are whitespace-delimited.
Lts parse_lts(const std::string& text);
std::string serialize_lts(const Lts& lts);

// Automata format:
//   nfa | pda | vpa            (header line)
//   alphabet a b ...
//   calls / returns / internals ...   (vpa only)
//   start <q>
//   accept <q> ...
//   edge <q> <a> <q'>                         (nfa)
//   edge <q> <a> pop:<g|_> push:<g,...|-> <q'> (pda/vpa; push lists bottom..top)
struct ParsedAutomaton {
    enum class Kind { NfaKind, PdaKind, VpaKind } kind;
    std::optional<Nfa> nfa;
    std::optional<Pda> pda;
    std::optional<Vpa> vpa;

    LanguageRef as_language(std::string name, std::optional<LangClass> cls = std::nullopt) const;
};
ParsedAutomaton parse_automaton(const std::string& text);
std::string serialize_automaton(const Nfa& nfa);
std::string serialize_automaton(const Pda& pda);
std::string serialize_automaton(const Vpa& vpa);

// PDL formula syntax: p, ~F, (F & F), (F | F), <NAME>F, [NAME]F, tt, ff.
// NAME refers to a manifest language; resolution is checked when a manifest
// is supplied and deferred otherwise.
PdlFormula parse_pdl(const std::string& text, const LanguageTable* langs = nullptr);
std::string serialize_pdl(const PdlFormula& f);

// FLC formula syntax: q, !q, X, tau, <a>, [a], (F | F), (F & F),
// mu X . U, nu X . U, F ; F (right-associative). A binder body is a single
// unit; parenthesise compound bodies.
FlcFormula parse_flc(const std::string& text);
std::string serialize_flc(const FlcFormula& f);

// Manifest format, one entry per line:
//   lang <NAME> <reg|vpl|cfl> <file>
//   lts <NAME> <file>
//   formula <NAME> <pdl|flc> <file>
// Paths are relative to the manifest's directory. vpl entries must validate.
struct Manifest {
    LanguageTable languages;
    std::map<std::string, Lts> ltss;
    std::map<std::string, PdlFormula> pdl_formulas;
    std::map<std::string, FlcFormula> flc_formulas;
};
Manifest load_manifest(const std::filesystem::path& path);

} // namespace seplab
