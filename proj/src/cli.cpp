// cli.cpp -- the seplab command-line surface
#include "seplab/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "seplab/errors.hpp"
#include "seplab/experiments.hpp"
#include "seplab/formats.hpp"

namespace seplab {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitSemantic = 3;
constexpr int kExitResource = 4;
constexpr int kExitDisagreement = 5;

std::string read_file_or_inline(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::exists(arg, ec)) {
        std::ifstream in(arg);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string stem_of(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

LanguageRef language_from_file(const std::string& path) {
    return parse_automaton(read_file(path)).as_language(stem_of(path));
}

struct CheckOptions {
    std::string lts_file;
    std::string formula;
    std::string property;
    std::string logic = "pdl";
    std::string state;
    std::string manifest;
};

int run_check(const CheckOptions& opt, std::ostream& out) {
    Lts lts = parse_lts(read_file(opt.lts_file));
    LanguageTable langs;
    if (!opt.manifest.empty()) langs = load_manifest(opt.manifest).languages;

    std::set<std::string> satisfying;
    if (opt.logic == "pdl") {
        PdlFormula f;
        if (!opt.property.empty()) {
            BuiltProperty prop = build_property(opt.property);
            if (!prop.pdl)
                throw InputError("property '" + opt.property + "' has no PDL form");
            f = *prop.pdl;
            langs.insert(prop.langs.begin(), prop.langs.end());
        } else {
            f = parse_pdl(read_file_or_inline(opt.formula), langs.empty() ? nullptr : &langs);
        }
        for (StateId s : eval_pdl(lts, langs, f)) satisfying.insert(lts.state_name(s));
    } else if (opt.logic == "flc") {
        FlcFormula f = opt.property.empty() ? parse_flc(read_file_or_inline(opt.formula))
                                            : build_property(opt.property).flc;
        StateBits sem = flc_sem(lts, f);
        for (StateId s = 0; s < lts.state_count(); ++s)
            if ((sem >> s) & 1) satisfying.insert(lts.state_name(s));
    } else {
        throw InputError("logic must be pdl or flc");
    }

    if (!opt.state.empty()) {
        lts.state(opt.state); // validates the name
        out << "holds at " << opt.state << ": "
            << (satisfying.count(opt.state) ? "true" : "false") << '\n';
    } else if (lts.initial() && opt.state.empty()) {
        out << "holds at initial state: "
            << (satisfying.count(lts.state_name(*lts.initial())) ? "true" : "false") << '\n';
        out << "satisfying states:";
        for (const auto& s : satisfying) out << ' ' << s;
        out << '\n';
    } else {
        out << "satisfying states:";
        for (const auto& s : satisfying) out << ' ' << s;
        out << '\n';
    }
    return kExitOk;
}

int run_separate(const std::string& family, const std::vector<std::string>& lang_files,
                 std::size_t depth, const ExperimentBounds& bounds, bool cross_edge, bool json,
                 std::ostream& out) {
    std::vector<LanguageRef> langs;
    for (const std::string& file : lang_files) langs.push_back(language_from_file(file));

    ExperimentReport report;
    if (family == "chain")
        report = run_chain_experiment(langs, depth, bounds);
    else if (family == "diabox")
        report = run_diabox_experiment(langs, depth, bounds, cross_edge);
    else if (family == "anban")
        report = run_an_b_an_experiment(langs, depth, bounds, cross_edge);
    else
        throw InputError("family must be chain, diabox or anban");

    out << (json ? report.to_json() + "\n" : report.to_text());
    return report.indistinguishable() ? kExitOk : kExitDisagreement;
}

int run_witness(const std::string& family, std::size_t m, std::size_t k, std::size_t d,
                bool cross_edge, const std::string& out_dir, std::ostream& out) {
    auto write = [&](const std::string& name, const Lts& lts) {
        std::filesystem::path path = std::filesystem::path(out_dir) / name;
        std::ofstream file(path);
        if (!file) throw InputError("cannot write '" + path.string() + "'");
        file << serialize_lts(lts);
        out << "wrote " << path.string() << " (" << lts.state_count() << " states)\n";
    };
    if (family == "chain") {
        std::size_t l = (m + k) * d;
        write("chain_T1.lts", make_chain_b(l));
        write("chain_T2.lts", make_chain_b(l + k));
    } else if (family == "diabox") {
        WitnessPair pair = make_witness_diabox(m, k, d, cross_edge);
        write("diabox_T1.lts", pair.t1);
        write("diabox_T2.lts", pair.t2);
    } else if (family == "anban") {
        WitnessPair pair = make_witness_an_b_an(m, k, d, cross_edge);
        write("anban_T1.lts", pair.t1);
        write("anban_T2.lts", pair.t2);
    } else {
        throw InputError("family must be chain, diabox or anban");
    }
    return kExitOk;
}

} // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"seplab: PDL/FLC model checking over formal-language modalities "
                 "and pumping-based separation experiments"};
    app.require_subcommand(1);

    // check
    CheckOptions check;
    auto* cmd_check = app.add_subcommand("check", "evaluate a formula on an LTS");
    cmd_check->add_option("--lts", check.lts_file, "LTS file")->required();
    auto* f_opt = cmd_check->add_option("--formula", check.formula, "formula file or inline text");
    cmd_check->add_option("--property", check.property,
                          "built-in property name (dia_anbn, dia_anban, game_iter, "
                          "dia_an_box_bn, dia_an_box_b_dia_an)")
        ->excludes(f_opt);
    cmd_check->add_option("--logic", check.logic, "pdl or flc")->required();
    cmd_check->add_option("--state", check.state, "report the verdict at this state only");
    cmd_check->add_option("--manifest", check.manifest, "manifest resolving language names");

    // depth
    std::string depth_formula, depth_manifest;
    auto* cmd_depth = app.add_subcommand("depth", "modal depth of a PDL formula");
    cmd_depth->add_option("--formula", depth_formula, "formula file or inline text")->required();
    cmd_depth->add_option("--manifest", depth_manifest, "manifest resolving language names");

    // derive
    std::string derive_automaton, derive_letter, derive_out;
    auto* cmd_derive = app.add_subcommand("derive", "letter derivative of a pushdown language");
    cmd_derive->add_option("--automaton", derive_automaton, "automaton file")->required();
    cmd_derive->add_option("--letter", derive_letter, "letter")->required();
    cmd_derive->add_option("--out", derive_out, "output file (default stdout)");

    // pump
    std::vector<std::string> pump_files;
    std::string pump_letter;
    std::vector<std::size_t> pump_verify;
    auto* cmd_pump = app.add_subcommand("pump", "joint pumping constants of unary NFAs");
    cmd_pump->add_option("--automata", pump_files, "NFA files")->required()->expected(-1);
    cmd_pump->add_option("--letter", pump_letter, "letter")->required();
    cmd_pump->add_option("--verify", pump_verify, "check the constants up to l_max, j_max")
        ->expected(2);

    // witness
    std::string wit_family, wit_dir = ".";
    std::size_t wit_m = 1, wit_k = 1, wit_d = 1;
    bool wit_cross = false;
    auto* cmd_witness = app.add_subcommand("witness", "generate witness structures");
    cmd_witness->add_option("--family", wit_family, "chain, diabox or anban")->required();
    cmd_witness->add_option("--m", wit_m, "pumping threshold")->required();
    cmd_witness->add_option("--k", wit_k, "pumping period")->required();
    cmd_witness->add_option("--d", wit_d, "modal depth parameter")->required();
    cmd_witness->add_flag("--cross-edge", wit_cross, "add the junction copy below T1");
    cmd_witness->add_option("--out-dir", wit_dir, "output directory");

    // separate
    std::string sep_family;
    std::vector<std::string> sep_langs;
    std::size_t sep_depth = 1;
    ExperimentBounds sep_bounds;
    bool sep_json = false, sep_no_cross = false;
    auto* cmd_sep = app.add_subcommand("separate", "run a separation experiment");
    cmd_sep->add_option("--family", sep_family, "chain, diabox or anban")->required();
    cmd_sep->add_option("--langs", sep_langs, "automaton files")->expected(-1);
    cmd_sep->add_option("--depth", sep_depth, "modal depth bound");
    cmd_sep->add_option("--size-cap", sep_bounds.size_cap, "formula node-count cap");
    cmd_sep->add_option("--slice-bound", sep_bounds.slice_bound, "unary slice budget");
    cmd_sep->add_flag("--no-cross-edge", sep_no_cross,
                      "drop the junction copy below T1 (the proof-text variant)");
    cmd_sep->add_flag("--json", sep_json, "machine-readable report");

    // vpcheck
    std::string vp_formula;
    std::vector<std::string> vp_calls, vp_returns, vp_internals;
    auto* cmd_vp = app.add_subcommand("vpcheck", "vpFLC membership of an FLC formula");
    cmd_vp->add_option("--formula", vp_formula, "formula file or inline text")->required();
    cmd_vp->add_option("--calls", vp_calls, "call letters");
    cmd_vp->add_option("--returns", vp_returns, "return letters");
    cmd_vp->add_option("--internals", vp_internals, "internal letters");

    // reach
    std::string reach_lts, reach_lang;
    auto* cmd_reach = app.add_subcommand("reach", "language reachability relation on an LTS");
    cmd_reach->add_option("--lts", reach_lts, "LTS file")->required();
    cmd_reach->add_option("--lang", reach_lang, "automaton file")->required();

    std::vector<std::string> argv_owned = args;
    argv_owned.insert(argv_owned.begin(), "seplab");
    std::vector<char*> argv;
    for (auto& s : argv_owned) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitParse;
    }

    try {
        if (cmd_check->parsed()) {
            if (check.formula.empty() && check.property.empty())
                throw InputError("check needs --formula or --property");
            return run_check(check, out);
        }
        if (cmd_depth->parsed()) {
            LanguageTable langs;
            if (!depth_manifest.empty()) langs = load_manifest(depth_manifest).languages;
            PdlFormula f = parse_pdl(read_file_or_inline(depth_formula),
                                     depth_manifest.empty() ? nullptr : &langs);
            out << "modal_depth: " << modal_depth(f) << '\n';
            out << "modal_only_depth: " << modal_only_depth(f) << '\n';
            return kExitOk;
        }
        if (cmd_derive->parsed()) {
            ParsedAutomaton parsed = parse_automaton(read_file(derive_automaton));
            LanguageRef lang = parsed.as_language(stem_of(derive_automaton));
            Pda result = derivative(*lang.as_pda(), derive_letter);
            std::string text = serialize_automaton(result);
            if (derive_out.empty()) {
                out << text;
            } else {
                std::ofstream file(derive_out);
                if (!file) throw InputError("cannot write '" + derive_out + "'");
                file << text;
                out << "wrote " << derive_out << '\n';
            }
            return kExitOk;
        }
        if (cmd_pump->parsed()) {
            std::vector<Nfa> nfas;
            for (const std::string& file : pump_files) {
                ParsedAutomaton parsed = parse_automaton(read_file(file));
                if (parsed.kind != ParsedAutomaton::Kind::NfaKind)
                    throw InputError("pump expects NFAs; slice pushdown languages first");
                nfas.push_back(*parsed.nfa);
            }
            PumpingConstants c = pumping_constants(nfas, pump_letter);
            out << "m=" << c.m << " k=" << c.k << '\n';
            if (!pump_verify.empty()) {
                bool ok = verify_pumping(nfas, pump_letter, c, pump_verify[0], pump_verify[1]);
                out << "verified: " << (ok ? "true" : "false") << '\n';
            }
            return kExitOk;
        }
        if (cmd_witness->parsed())
            return run_witness(wit_family, wit_m, wit_k, wit_d, wit_cross, wit_dir, out);
        if (cmd_sep->parsed())
            return run_separate(sep_family, sep_langs, sep_depth, sep_bounds, !sep_no_cross,
                                sep_json, out);
        if (cmd_vp->parsed()) {
            FlcFormula f = parse_flc(read_file_or_inline(vp_formula));
            AlphabetPartition part;
            part.calls.insert(vp_calls.begin(), vp_calls.end());
            part.returns.insert(vp_returns.begin(), vp_returns.end());
            part.internals.insert(vp_internals.begin(), vp_internals.end());
            out << "vpflc: " << (is_vpflc(f, part) ? "yes" : "no") << '\n';
            return kExitOk;
        }
        if (cmd_reach->parsed()) {
            Lts lts = parse_lts(read_file(reach_lts));
            LanguageRef lang = language_from_file(reach_lang);
            for (const auto& [s, t] : reach_relation(lts, lang))
                out << lts.state_name(s) << " -> " << lts.state_name(t) << '\n';
            return kExitOk;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << '\n';
        return kExitResource;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitSemantic;
    }
    err << "no subcommand\n";
    return kExitParse;
}

} // namespace seplab
