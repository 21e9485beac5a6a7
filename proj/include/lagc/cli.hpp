#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lagc/parser.hpp"
#include "lagc/render.hpp"

namespace lagc {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int parse = 1;
inline constexpr int semantic = 2;
inline constexpr int divergence = 3;
inline constexpr int fresh_bound = 4;
}  // namespace exit_code

// "k=v,k=v" with v an arithmetic expression or "*".
inline State parse_state(const std::string& text) {
    State s;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError(1, 1, "k=v in state '" + item + "'");
        auto trim = [](std::string x) {
            auto b = x.find_first_not_of(" \t");
            auto e = x.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
        };
        std::string key = trim(item.substr(0, eq));
        std::string val = trim(item.substr(eq + 1));
        if (key.empty()) throw ParseError(1, 1, "a variable name in state '" + item + "'");
        s = s.update(Variable(key), val == "*" ? Star : E(parse_aexp(val)));
    }
    return s;
}

namespace detail {

struct CliOptions {
    std::string lang = "ext";
    std::string format = "text";
    std::size_t bound = 0;
    std::size_t increment = 100;
    std::size_t max_rounds = 100;
    std::size_t fresh_bound = default_fresh_bound;
    std::string state;
    std::string expr;
    std::vector<std::string> files;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Program load(const std::string& path, Mode mode) {
    try {
        return parse_program(read_file(path), mode);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.column(), e.expected() + " (in " + path + ")");
    }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    detail::CliOptions o;
    CLI::App app{"Executable LAGC trace semantics for WL and WL_EXT", "lagc"};
    app.require_subcommand(1);

    auto common = [&o](CLI::App* sub) {
        sub->add_option("--lang", o.lang, "Language mode")->check(CLI::IsMember({"wl", "ext"}));
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--increment", o.increment, "Fixpoint step increment")->check(CLI::PositiveNumber);
        sub->add_option("--max-rounds", o.max_rounds, "Fixpoint checks before giving up")->check(CLI::PositiveNumber);
        sub->add_option("--fresh-bound", o.fresh_bound, "Bound for fresh variable generation");
        sub->add_option("--state", o.state, "Initial state, k=v,...");
        sub->add_option("--bound", o.bound, "Step bound");
    };

    auto* traces = app.add_subcommand("traces", "Global traces of a program");
    traces->add_option("file", o.files, "Program file")->required()->expected(1);
    common(traces);

    auto* bounded = app.add_subcommand("traces-bounded", "Traces reachable within --bound steps");
    bounded->add_option("file", o.files, "Program file")->required()->expected(1);
    common(bounded);
    bounded->get_option("--bound")->required();

    auto* equiv = app.add_subcommand("equiv", "Trace equivalence of two programs");
    equiv->add_option("files", o.files, "Program files")->required()->expected(2);
    common(equiv);

    auto* eval = app.add_subcommand("eval", "Evaluate an expression under a state");
    eval->add_option("file", o.files, "Program file supplying the default state")->expected(0, 1);
    eval->add_option("--expr", o.expr, "Expression")->required();
    common(eval);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_code::parse;
    }

    const Mode mode = o.lang == "wl" ? Mode::wl : Mode::ext;
    const OutputFormat fmt = o.format == "json" ? OutputFormat::json : OutputFormat::text;
    ComposePolicy policy;
    policy.increment = o.increment;
    policy.max_rounds = o.max_rounds;
    policy.fresh_bound = o.fresh_bound;
    const bool has_state = app.get_subcommands().front()->count("--state") > 0;

    try {
        auto initial = [&](const VarList& occ) { return has_state ? parse_state(o.state) : initial_state(occ); };

        if (traces->parsed() || bounded->parsed()) {
            Program p = detail::load(o.files.at(0), mode);
            State sigma = initial(mode == Mode::wl ? occurrences(p.main) : occurrences(p));
            TraceSet ts;
            if (traces->parsed())
                ts = mode == Mode::wl ? traces_wl(p.main, sigma, policy) : traces_ext(p, sigma, policy);
            else
                ts = mode == Mode::wl ? traces_bounded_wl(o.bound, p.main, sigma)
                                      : traces_bounded_ext(o.bound, p, sigma, policy);
            out << render_traces(ts, fmt);
        } else if (equiv->parsed()) {
            Program a = detail::load(o.files.at(0), mode);
            Program b = detail::load(o.files.at(1), mode);
            VarList occ = mode == Mode::wl ? occurrences(a.main) : occurrences(a);
            VarList occ_b = mode == Mode::wl ? occurrences(b.main) : occurrences(b);
            occ.insert(occ.end(), occ_b.begin(), occ_b.end());
            State sigma = initial(occ);
            bool same = mode == Mode::wl ? trace_equivalent(a.main, b.main, sigma, policy)
                                         : trace_equivalent(a, b, sigma, policy);
            if (fmt == OutputFormat::json)
                out << nlohmann::json{{"equivalent", same}}.dump() << "\n";
            else
                out << (same ? "equivalent\n" : "not equivalent\n");
        } else {
            State sigma;
            if (has_state) {
                sigma = parse_state(o.state);
            } else if (!o.files.empty()) {
                Program p = detail::load(o.files.at(0), mode);
                sigma = initial_state(mode == Mode::wl ? occurrences(p.main) : occurrences(p));
            }
            std::string result = pretty(eval_exp(parse_exp(o.expr), sigma));
            if (fmt == OutputFormat::json)
                out << nlohmann::json{{"result", result}}.dump() << "\n";
            else
                out << result << "\n";
        }
    } catch (const ParseError& e) {
        err << "lagc: parse error: " << e.what() << "\n";
        return exit_code::parse;
    } catch (const ModeError& e) {
        err << "lagc: mode error: " << e.what() << "\n";
        return exit_code::parse;
    } catch (const DivergenceLimit& e) {
        err << "lagc: divergence limit: " << e.what() << "\n";
        return exit_code::divergence;
    } catch (const FreshBoundExceeded& e) {
        err << "lagc: fresh bound exceeded: " << e.what() << "\n";
        return exit_code::fresh_bound;
    } catch (const Error& e) {
        err << "lagc: semantic error: " << e.what() << "\n";
        return exit_code::semantic;
    } catch (const std::exception& e) {
        err << "lagc: error: " << e.what() << "\n";
        return exit_code::parse;
    }
    return exit_code::ok;
}

}  // namespace lagc
