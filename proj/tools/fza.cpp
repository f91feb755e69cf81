// fza: evaluate, convert, and compare fuzzy automata stored as .fza.json
// documents. Exit codes: 0 success/equivalent, 1 non-equivalent, 2 error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fza/fza.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file '" + path + "'");
    out << text;
}

fza::Machine load_machine(const std::string& path) {
    return fza::parse_automaton(read_file(path));
}

std::vector<std::string> split_tokens(const std::string& text) {
    std::istringstream stream(text);
    std::vector<std::string> tokens;
    std::string token;
    while (stream >> token) tokens.push_back(token);
    return tokens;
}

std::string display_string(const std::vector<std::string>& tokens, bool ascii) {
    if (tokens.empty()) return ascii ? "<eps>" : "ε";
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) out += ' ';
        out += tokens[i];
    }
    return out;
}

struct EvalOptions {
    std::string file;
    std::string input;
    bool empty = false;
    bool oracle = false;
    std::string format = "text";
};

std::vector<std::string> eval_tokens(const EvalOptions& opt, bool input_given) {
    if (input_given == opt.empty)
        throw std::runtime_error("give exactly one of --input or --empty");
    if (opt.empty) return {};
    auto tokens = split_tokens(opt.input);
    if (tokens.empty())
        throw std::runtime_error("--input is empty; use --empty for the empty string");
    return tokens;
}

fza::Value oracle_degree(const fza::Machine& m, const std::vector<std::string>& tokens) {
    if (const auto* dfa = std::get_if<fza::Dfa>(&m))
        return fza::nfa_run_degree_oracle(fza::embed_dfa_as_nfa(*dfa), tokens);
    if (const auto* nfa = std::get_if<fza::Nfa>(&m))
        return fza::nfa_run_degree_oracle(*nfa, tokens);
    return fza::enfa_run_degree_oracle(std::get<fza::Enfa>(m), tokens);
}

int run_eval(const EvalOptions& opt, bool input_given) {
    const auto machine = load_machine(opt.file);
    const auto tokens = eval_tokens(opt, input_given);
    const fza::Value degree = fza::language_degree(machine, tokens);
    nlohmann::ordered_json out;
    out["input"] = tokens;
    out["degree"] = degree.str();
    if (opt.oracle) {
        const fza::Value checked = oracle_degree(machine, tokens);
        if (!(checked == degree))
            throw std::runtime_error("oracle degree " + checked.str() +
                                     " disagrees with recursive degree " + degree.str());
        out["oracle_degree"] = checked.str();
    }
    if (opt.format == "json")
        std::cout << out.dump() << "\n";
    else
        std::cout << degree.str() << "\n";
    return 0;
}

int run_validate(const std::string& path) {
    const auto machine = load_machine(path);
    std::cout << "ok: " << fza::kind_name(machine)
              << ", |Q|=" << fza::states_of(machine).size()
              << ", |Σ|=" << fza::alphabet_of(machine).size() << "\n";
    return 0;
}

int run_determinize(const std::string& in_path, const std::string& out_path) {
    const auto machine = load_machine(in_path);
    const auto* nfa = std::get_if<fza::Nfa>(&machine);
    if (!nfa)
        throw std::runtime_error("kind mismatch: determinize expects an nfa document, got " +
                                 std::string(fza::kind_name(machine)));
    write_file(out_path, fza::serialize_automaton(fza::determinize(*nfa)));
    return 0;
}

int run_rm_epsilon(const std::string& in_path, const std::string& out_path, bool prune) {
    const auto machine = load_machine(in_path);
    const auto* enfa = std::get_if<fza::Enfa>(&machine);
    if (!enfa)
        throw std::runtime_error("kind mismatch: rm-epsilon expects an enfa document, got " +
                                 std::string(fza::kind_name(machine)));
    fza::Nfa result = fza::eliminate_epsilon(*enfa);
    if (prune) result = fza::prune_dominated(result);
    write_file(out_path, fza::serialize_automaton(result));
    return 0;
}

int run_compile(const std::string& in_path, const std::string& out_path) {
    const auto machine = load_machine(in_path);
    const auto* enfa = std::get_if<fza::Enfa>(&machine);
    if (!enfa)
        throw std::runtime_error("kind mismatch: compile expects an enfa document, got " +
                                 std::string(fza::kind_name(machine)));
    write_file(out_path, fza::serialize_automaton(fza::compile(*enfa)));
    return 0;
}

int run_equiv(const std::string& path_a, const std::string& path_b, int max_len,
              const std::string& format) {
    const auto a = load_machine(path_a);
    const auto b = load_machine(path_b);
    const fza::Verdict verdict = fza::equiv_up_to(a, b, max_len);
    if (format == "json") {
        nlohmann::ordered_json out;
        out["max_len"] = verdict.max_len;
        out["equivalent"] = verdict.equivalent();
        if (verdict.counterexample) {
            out["counterexample"] = {
                {"string", verdict.counterexample->tokens},
                {"left", verdict.counterexample->left.str()},
                {"right", verdict.counterexample->right.str()},
            };
        }
        std::cout << out.dump() << "\n";
    } else if (verdict.equivalent()) {
        std::cout << "equivalent up to " << verdict.max_len << "\n";
    } else {
        const auto& ce = *verdict.counterexample;
        std::cout << "counterexample: " << display_string(ce.tokens, false)
                  << " left=" << ce.left.str() << " right=" << ce.right.str() << "\n";
    }
    return verdict.equivalent() ? 0 : 1;
}

int run_language(const std::string& path, int max_len, bool nonzero, bool ascii,
                 const std::string& format) {
    const auto machine = load_machine(path);
    const auto rows = fza::enumerate_language(machine, max_len);
    if (format == "json") {
        nlohmann::ordered_json out;
        out["max_len"] = max_len;
        out["rows"] = nlohmann::ordered_json::array();
        for (const auto& [tokens, degree] : rows) {
            if (nonzero && degree.is_zero()) continue;
            out["rows"].push_back({{"string", tokens}, {"degree", degree.str()}});
        }
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& [tokens, degree] : rows) {
            if (nonzero && degree.is_zero()) continue;
            std::cout << display_string(tokens, ascii) << "\t" << degree.str() << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fuzzy automata toolkit"};
    app.require_subcommand(1);

    std::string file, file_b, out_path, format = "text";
    EvalOptions eval_opt;
    int max_len = 0;
    bool prune = false, nonzero = false, ascii = false;

    auto* validate = app.add_subcommand("validate", "parse and validate a machine file");
    validate->add_option("file", file, "machine file")->required();

    auto* eval = app.add_subcommand("eval", "degree to which a string is accepted");
    eval->add_option("file", eval_opt.file, "machine file")->required();
    auto* input_opt = eval->add_option("--input", eval_opt.input,
                                       "whitespace-separated symbol tokens");
    eval->add_flag("--empty", eval_opt.empty, "evaluate the empty string");
    eval->add_flag("--oracle", eval_opt.oracle,
                   "cross-check with the run-enumeration oracle");
    eval->add_option("--format", eval_opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* determinize = app.add_subcommand("determinize", "nfa -> dfa");
    determinize->add_option("file", file, "nfa file")->required();
    determinize->add_option("-o,--output", out_path, "output file")->required();

    auto* rm_epsilon = app.add_subcommand("rm-epsilon", "enfa -> nfa");
    rm_epsilon->add_option("file", file, "enfa file")->required();
    rm_epsilon->add_option("-o,--output", out_path, "output file")->required();
    rm_epsilon->add_flag("--prune", prune, "drop dominated distributions");

    auto* compile = app.add_subcommand("compile", "enfa -> dfa");
    compile->add_option("file", file, "enfa file")->required();
    compile->add_option("-o,--output", out_path, "output file")->required();

    auto* equiv = app.add_subcommand("equiv", "compare languages up to a length bound");
    equiv->add_option("fileA", file, "first machine")->required();
    equiv->add_option("fileB", file_b, "second machine")->required();
    equiv->add_option("--max-len", max_len, "string length bound")
        ->required()->check(CLI::NonNegativeNumber);
    equiv->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* language = app.add_subcommand("language", "tabulate accepted degrees");
    language->add_option("file", file, "machine file")->required();
    language->add_option("--max-len", max_len, "string length bound")
        ->required()->check(CLI::NonNegativeNumber);
    language->add_flag("--nonzero", nonzero, "omit zero-degree rows");
    language->add_flag("--ascii", ascii, "print <eps> instead of ε");
    language->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return run_validate(file);
        if (eval->parsed()) return run_eval(eval_opt, input_opt->count() > 0);
        if (determinize->parsed()) return run_determinize(file, out_path);
        if (rm_epsilon->parsed()) return run_rm_epsilon(file, out_path, prune);
        if (compile->parsed()) return run_compile(file, out_path);
        if (equiv->parsed()) return run_equiv(file, file_b, max_len, format);
        if (language->parsed()) return run_language(file, max_len, nonzero, ascii, format);
    } catch (const std::exception& e) {
        std::cerr << "fza: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
