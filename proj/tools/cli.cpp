#include "cli.hpp"

#include "cbias/bias_finder.hpp"
#include "cbias/extremal.hpp"
#include "cbias/graph_io.hpp"
#include "cbias/oracle.hpp"
#include "cbias/random_instances.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <climits>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace cbias::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char * exit_code_help = R"(Exit codes:
  0  success
  1  verification failed (verify)
  2  usage, parse or input error
  3  degree hypothesis not met (solve --mode strict)
  4  best-effort failure (solve --mode permissive)
  5  theorem violation or internal invariant failure
  6  enumeration size guard exceeded)";

std::string read_file(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string fnv1a(const std::string & bytes)
{
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char byte : bytes) {
        hash ^= byte;
        hash *= 0x100000001b3ULL;
    }
    char text[17];
    std::snprintf(text, sizeof text, "%016llx", static_cast<unsigned long long>(hash));
    return text;
}

ColouredGraph load_graph(const std::string & path)
{
    std::istringstream in(read_file(path));
    return read_coloured_graph(in);
}

// Writes to `path`, or to `out` when path is empty or "-".
void emit(const std::string & path, std::ostream & out, const std::string & text)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (! file)
        throw InputError("cannot write '" + path + "'");
    file << text;
}

struct GenOptions
{
    std::string kind;
    int r = 2;
    int n = 0;
    std::optional<std::uint64_t> seed;
    std::optional<int> min_degree;
    std::string output;
};

int cmd_gen(const GenOptions & o, std::ostream & out)
{
    ColouredGraph cg;
    if (o.kind == "layered")
        cg = build_layered(o.r, o.n);
    else if (o.kind == "turan3")
        cg = build_turan3(o.n);
    else {
        if (! o.seed)
            throw InputError(o.kind + " needs --seed");
        if (o.kind == "random-complete")
            cg = random_complete(o.n, o.r, *o.seed);
        else
            cg = random_dirac(o.n, o.r, o.min_degree.value_or((o.n + 1) / 2), *o.seed);
    }

    std::ostringstream text;
    write_coloured_graph(text, cg);
    emit(o.output, out, text.str());
    return exit_ok;
}

struct SolveOptions
{
    std::string input;
    int d = 1;
    std::string mode = "strict";
    std::uint64_t seed = 0;
    std::string format = "text";
    std::string cycle_out;
    bool timing = false;
};

void print_record(const ordered_json & record, const std::string & format, std::ostream & out)
{
    if (format == "json") {
        out << record.dump(2) << '\n';
        return;
    }
    for (const auto & [key, value] : record.items()) {
        out << key << ": ";
        if (value.is_array()) {
            bool first = true;
            for (const auto & item : value) {
                out << (first ? "" : " ") << item.dump();
                first = false;
            }
        }
        else if (value.is_string())
            out << value.get<std::string>();
        else
            out << value.dump();
        out << '\n';
    }
}

int cmd_solve(const SolveOptions & o, std::ostream & out, std::ostream & err)
{
    auto bytes = read_file(o.input);
    std::istringstream in(bytes);
    auto cg = read_coloured_graph(in);
    auto mode = o.mode == "strict" ? SolveMode::strict : SolveMode::permissive;

    ordered_json record;
    record["input_hash"] = "fnv1a64:" + fnv1a(bytes);
    record["mode"] = o.mode;
    record["d"] = o.d;
    record["r"] = cg.colouring.colours();
    record["n"] = cg.graph.order();
    record["seed"] = o.seed;

    auto started = std::chrono::steady_clock::now();
    try {
        auto result = find_unbalanced_hamilton(cg.graph, cg.colouring, o.d, mode);
        int n = cg.graph.order(), r = cg.colouring.colours();

        record["status"] = "ok";
        record["cycle"] = std::vector<Vertex>(result.cycle.order().begin(), result.cycle.order().end());
        record["counts"] = result.counts.counts;
        record["witness_colour"] = result.counts.witness();
        record["bias"] = result.counts.max_count() - (n + r - 1) / r;
        record["switched"] = result.switching.has_value();
        if (result.switching) {
            record["star_colour"] = result.switching->star_colour;
            record["first_star_count"] = result.switching->first_star_count;
            record["second_star_count"] = result.switching->second_star_count;
            record["candidates"] = result.switching->candidates;
        }
        record["steps_dirac"] = result.dirac_steps;
        record["steps_scan"] = result.scan_steps;
        record["steps_posa"] = result.posa_steps;
        record["steps_total"] = result.total_steps();
        if (o.timing)
            record["wall_time_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();

        if (! o.cycle_out.empty()) {
            std::ostringstream cycle;
            write_cycle(cycle, result.cycle.order());
            emit(o.cycle_out, out, cycle.str());
        }
        print_record(record, o.format, out);
        return exit_ok;
    }
    catch (const BestEffortFailure & e) {
        record["status"] = "best-effort-failed";
        record["message"] = e.what();
        record["best_cycle"] = e.best_cycle();
        record["best_count"] = e.best_count();
        print_record(record, o.format, out);
        err << "error: " << e.what() << '\n';
        return exit_best_effort;
    }
}

struct VerifyOptions
{
    std::string input;
    std::string cycle;
    int d = 1;
};

int cmd_verify(const VerifyOptions & o, std::ostream & out)
{
    auto cg = load_graph(o.input);
    std::istringstream in(read_file(o.cycle));
    auto cycle = read_cycle(in);
    auto verdict = verify_solution(cg.graph, cg.colouring, cycle, o.d);
    if (verdict) {
        out << "ok\n";
        return exit_ok;
    }
    out << "fail: " << reason_name(verdict.reason) << " (" << verdict.detail << ")\n";
    return exit_verify_failed;
}

struct EnumerateOptions
{
    std::string input;
    int limit = default_enumeration_limit;
    std::string format = "text";
};

int cmd_enumerate(const EnumerateOptions & o, std::ostream & out)
{
    auto cg = load_graph(o.input);
    auto landscape = bias_landscape(cg.graph, cg.colouring, o.limit);
    if (o.format == "json") {
        ordered_json record;
        record["n"] = landscape.n;
        record["r"] = landscape.colours;
        record["cycles"] = landscape.cycle_count;
        record["hamiltonian"] = landscape.hamiltonian();
        record["max_count"] = landscape.max_count;
        record["vectors"] = std::vector<std::vector<int>>(landscape.vectors.begin(), landscape.vectors.end());
        out << record.dump(2) << '\n';
    }
    else
        out << format_landscape(landscape);
    return exit_ok;
}

} // namespace

int run(int argc, const char * const * argv, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Colour-bias Hamilton cycles in dense edge-coloured graphs", "cbias"};
    app.footer(exit_code_help);
    app.require_subcommand(1);

    GenOptions gen;
    auto * gen_cmd = app.add_subcommand("gen", "Write a coloured graph in the text format");
    gen_cmd->add_option("kind", gen.kind, "Construction")
        ->required()
        ->check(CLI::IsMember({"layered", "turan3", "random-complete", "random-dirac"}));
    gen_cmd->add_option("--r", gen.r, "Number of colours")->check(CLI::Range(2, 127));
    gen_cmd->add_option("--n", gen.n, "Number of vertices")->required()->check(CLI::Range(1, 100000));
    gen_cmd->add_option("--seed", gen.seed, "Seed (required for random kinds)");
    gen_cmd->add_option("--min-degree", gen.min_degree, "random-dirac: minimum degree kept (default ceil(n/2))");
    gen_cmd->add_option("--output", gen.output, "Output path (default stdout)");

    SolveOptions solve;
    auto * solve_cmd = app.add_subcommand("solve", "Find a d-unbalanced Hamilton cycle");
    solve_cmd->add_option("--input", solve.input, "Coloured graph file")->required();
    solve_cmd->add_option("--d", solve.d, "Required bias over n/r")->required()->check(CLI::Range(1, INT_MAX));
    solve_cmd->add_option("--mode", solve.mode, "strict|permissive")->check(CLI::IsMember({"strict", "permissive"}));
    solve_cmd->add_option("--seed", solve.seed, "Recorded in the result; the solver is deterministic");
    solve_cmd->add_option("--format", solve.format, "json|text")->check(CLI::IsMember({"json", "text"}));
    solve_cmd->add_option("--cycle-out", solve.cycle_out, "Also write the cycle to this path");
    solve_cmd->add_flag("--timing", solve.timing, "Include wall time in the record");

    VerifyOptions verify;
    auto * verify_cmd = app.add_subcommand("verify", "Check a cycle file against a coloured graph");
    verify_cmd->add_option("--input", verify.input, "Coloured graph file")->required();
    verify_cmd->add_option("--cycle", verify.cycle, "Cycle file")->required();
    verify_cmd->add_option("--d", verify.d, "Required bias over n/r")->check(CLI::NonNegativeNumber);

    EnumerateOptions enumerate;
    auto * enumerate_cmd = app.add_subcommand("enumerate", "Exact colour-count census over all Hamilton cycles");
    enumerate_cmd->add_option("--input", enumerate.input, "Coloured graph file")->required();
    enumerate_cmd->add_option("--limit", enumerate.limit, "Refuse graphs with more vertices")->check(CLI::Range(1, 63));
    enumerate_cmd->add_option("--format", enumerate.format, "json|text")->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        app.exit(e, out, err);
        return exit_ok;
    }
    catch (const CLI::ParseError & e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (*gen_cmd)
            return cmd_gen(gen, out);
        if (*solve_cmd)
            return cmd_solve(solve, out, err);
        if (*verify_cmd)
            return cmd_verify(verify, out);
        return cmd_enumerate(enumerate, out);
    }
    catch (const HypothesisError & e) {
        err << "hypothesis error: " << e.what() << '\n';
        return exit_hypothesis;
    }
    catch (const SizeError & e) {
        err << "size error: " << e.what() << '\n';
        return exit_size_guard;
    }
    catch (const InputError & e) {
        err << "input error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const Error & e) {
        err << "internal error: " << e.what() << '\n';
        return exit_theorem_violation;
    }
}

} // namespace cbias::cli
