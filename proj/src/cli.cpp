#include "mhuff/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include "mhuff/huffman.hpp"
#include "mhuff/minimizing.hpp"
#include "mhuff/oracle.hpp"
#include "mhuff/polynomial.hpp"
#include "mhuff/verify.hpp"

#ifndef MHUFF_GOLDEN_DIR
#define MHUFF_GOLDEN_DIR "data"
#endif

namespace mhuff::cli {

namespace {

using json = nlohmann::ordered_json;

std::string join(const std::vector<Integer>& values, const char* sep = " ") {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) out += sep;
        out += values[k].str();
    }
    return out;
}

// Exact integers travel through JSON as decimal strings.
json to_json(const std::vector<Integer>& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(v.str());
    return arr;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

// -- polys ----------------------------------------------------------------

int cmd_polys(std::size_t count, const std::string& format, std::ostream& out) {
    const auto polys = fibonacci_like_polys(count);
    if (format == "json") {
        json arr = json::array();
        for (std::size_t i = 0; i < polys.size(); ++i) {
            arr.push_back({{"index", i}, {"text", polys[i].to_string()}, {"coefficients", to_json(polys[i].coeffs())}});
        }
        out << arr.dump(2) << '\n';
    } else if (format == "csv") {
        for (std::size_t i = 0; i < polys.size(); ++i) out << i << ',' << join(polys[i].coeffs(), ",") << '\n';
    } else {
        for (std::size_t i = 0; i < polys.size(); ++i) out << "G_" << i << "(x) = " << polys[i].to_string() << '\n';
    }
    return exit_ok;
}

// -- pmin -----------------------------------------------------------------

int cmd_pmin(std::size_t N, unsigned m, const std::string& format, std::ostream& out) {
    const auto r = cost_report(MinimizingSpec(N, m));
    if (format == "json") {
        json j;
        j["N"] = N;
        j["m"] = m;
        j["n"] = r.spec.leaf_count();
        j["sequence"] = to_json(r.sequence.weights());
        j["formula_cost"] = r.formula_cost.str();
        j["constructed_cost"] = r.constructed_cost.str();
        j["agreement"] = r.agreement;
        j["absolutely_ordered"] = r.absolutely_ordered;
        j["elongated"] = r.elongated;
        j["left_sided"] = r.left_sided;
        j["height"] = r.height;
        out << j.dump(2) << '\n';
    } else {
        out << "N: " << N << '\n'
            << "m: " << m << '\n'
            << "n: " << r.spec.leaf_count() << '\n'
            << "sequence: " << join(r.sequence.weights()) << '\n'
            << "formula_cost: " << r.formula_cost << '\n'
            << "constructed_cost: " << r.constructed_cost << '\n'
            << "agreement: " << yes_no(r.agreement) << '\n'
            << "absolutely_ordered: " << yes_no(r.absolutely_ordered) << '\n'
            << "elongated: " << yes_no(r.elongated) << '\n'
            << "left_sided: " << yes_no(r.left_sided) << '\n'
            << "height: " << r.height << '\n';
    }
    return r.consistent() ? exit_ok : exit_mismatch;
}

// -- huffman --------------------------------------------------------------

struct HuffmanArgs {
    std::vector<std::string> weights;
    std::string file;
    unsigned arity = 2;
    bool trace = false;
    bool codes = false;
    bool pad = false;
    std::string format = "text";
};

std::vector<Integer> collect_weights(const HuffmanArgs& args) {
    std::vector<std::string> tokens = args.weights;
    if (!args.file.empty()) {
        std::ifstream in(args.file);
        if (!in) throw InvalidInput("cannot open weight file " + args.file);
        std::string tok;
        while (in >> tok) tokens.push_back(tok);
    }
    if (tokens.empty()) throw InvalidInput("no weights given");
    std::vector<Integer> weights;
    weights.reserve(tokens.size());
    for (const auto& t : tokens) {
        try {
            weights.push_back(parse_integer(t));
        } catch (const std::invalid_argument& e) {
            throw InvalidInput(e.what());
        }
    }
    return weights;
}

int cmd_huffman(const HuffmanArgs& args, std::ostream& out) {
    std::vector<Integer> raw = collect_weights(args);
    std::size_t original = raw.size();
    std::size_t dummies = 0;
    std::optional<WeightSequence> seq;
    if (args.pad) {
        auto padded = pad_to_arity(std::move(raw), args.arity);
        dummies = padded.dummy_count;
        seq.emplace(std::move(padded.sequence));
    } else {
        check_size_congruence(raw.size(), args.arity);
        seq.emplace(WeightSequence::sorted_from(std::move(raw), args.arity));
    }

    const auto built = build_huffman(*seq);
    const Integer cost = tree_cost(built.tree);
    const std::size_t height = tree_height(built.tree);
    const bool elongated = is_elongated(built.tree);
    const bool left_sided = elongated && is_left_sided(built.tree);
    const auto ordering = is_absolutely_ordered(built.trace, args.arity);
    const auto words = codewords(built.tree);
    std::map<std::size_t, Integer> weight_of;
    for (std::size_t k = 0; k < seq->size(); ++k) weight_of[seq->labels()[k]] = seq->weights()[k];

    if (args.format == "json") {
        json j;
        j["n"] = seq->size();
        j["m"] = args.arity;
        j["N"] = seq->internal_count();
        j["padding"] = dummies;
        j["cost"] = cost.str();
        j["height"] = height;
        j["elongated"] = elongated;
        j["left_sided"] = elongated ? json(left_sided) : json(nullptr);
        j["absolutely_ordered"] = ordering.ordered;
        j["first_violation"] = ordering.first_violation ? json(*ordering.first_violation) : json(nullptr);
        if (args.trace) {
            json steps = json::array();
            for (std::size_t i = 0; i <= built.trace.step_count(); ++i) {
                json s{{"step", i}, {"sequence", to_json(built.trace.sequence(i))}};
                if (i > 0) s["merged_sum"] = built.trace.steps[i - 1].merged_sum.str();
                steps.push_back(std::move(s));
            }
            j["trace"] = std::move(steps);
        }
        if (args.codes) {
            json codes = json::array();
            for (const auto& [label, word] : words) {
                codes.push_back({{"index", label},
                                 {"weight", weight_of[label].str()},
                                 {"codeword", render_codeword(word, args.arity)},
                                 {"padding", label >= original}});
            }
            j["codes"] = std::move(codes);
        }
        out << j.dump(2) << '\n';
        return exit_ok;
    }

    out << "n: " << seq->size() << '\n' << "m: " << args.arity << '\n' << "N: " << seq->internal_count() << '\n';
    if (dummies) out << "padding: " << dummies << " unit weight(s) appended\n";
    out << "cost: " << cost << '\n'
        << "height: " << height << '\n'
        << "elongated: " << yes_no(elongated) << '\n'
        << "left_sided: " << (elongated ? yes_no(left_sided) : "n/a") << '\n'
        << "absolutely_ordered: " << yes_no(ordering.ordered);
    if (ordering.first_violation) out << " (first violation at step " << *ordering.first_violation << ")";
    out << '\n';
    if (args.trace) {
        out << "trace:\n";
        for (std::size_t i = 0; i <= built.trace.step_count(); ++i) {
            out << "P^(" << i << "): " << join(built.trace.sequence(i));
            if (i > 0) out << "  [merged " << built.trace.steps[i - 1].merged_sum << "]";
            out << '\n';
        }
    }
    if (args.codes) {
        out << "codes:\n";
        for (const auto& [label, word] : words) {
            out << "  " << label << ' ' << weight_of[label] << ' ' << render_codeword(word, args.arity);
            if (label >= original) out << " (padding)";
            out << '\n';
        }
    }
    return exit_ok;
}

// -- tables ---------------------------------------------------------------

struct TableArgs {
    int which = 1;
    std::optional<unsigned> max_m;
    std::optional<std::size_t> max_i;
    std::optional<unsigned> max_arity;
    std::optional<std::size_t> max_N;
    std::string format = "csv";
};

int cmd_tables(const TableArgs& args, std::ostream& out) {
    const std::string& format = args.format;
    Table t;
    if (args.which == 1) {
        if (args.max_arity || args.max_N) throw InvalidInput("--max-arity/--max-N apply to table 2");
        t = emit_table1(args.max_m.value_or(15), args.max_i.value_or(13));
    } else {
        if (args.max_m || args.max_i) throw InvalidInput("--max-m/--max-i apply to table 1");
        t = emit_table2(args.max_arity.value_or(21), args.max_N.value_or(10));
    }
    if (format == "markdown") {
        out << render_markdown(t);
    } else if (format == "json") {
        json j;
        j["table"] = args.which;
        j["row_title"] = t.row_title;
        j["column_title"] = t.column_title;
        j["row_keys"] = to_json(t.row_keys);
        j["column_keys"] = to_json(t.column_keys);
        json cells = json::array();
        for (const auto& row : t.cells) cells.push_back(to_json(row));
        j["cells"] = std::move(cells);
        out << j.dump(2) << '\n';
    } else {
        out << render_csv(t);
    }
    return exit_ok;
}

// -- verify ---------------------------------------------------------------

int cmd_verify(const std::string& suite, const VerifyOptions& options, const std::string& format, std::ostream& out) {
    std::vector<CheckResult> results;
    auto append = [&](std::vector<CheckResult> r) { results.insert(results.end(), r.begin(), r.end()); };
    if (suite == "tables" || suite == "all") append(verify_tables(options));
    if (suite == "formulas" || suite == "all") append(verify_formulas(options));
    if (suite == "oracle" || suite == "all") append(verify_oracle(options));

    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const auto& r : results) {
        passed += r.status == CheckStatus::pass;
        failed += r.status == CheckStatus::fail;
        skipped += r.status == CheckStatus::skip;
    }
    if (format == "json") {
        json checks = json::array();
        for (const auto& r : results) {
            checks.push_back({{"suite", r.suite}, {"name", r.name}, {"status", status_name(r.status)}, {"detail", r.detail}});
        }
        json j{{"checks", checks}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}};
        out << j.dump(2) << '\n';
    } else {
        for (const auto& r : results) {
            out << '[' << status_name(r.status) << "] " << r.suite << ": " << r.name << " -- " << r.detail << '\n';
        }
        out << "summary: " << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
    }
    return failed == 0 ? exit_ok : exit_mismatch;
}

}  // namespace

std::string default_golden_dir() { return MHUFF_GOLDEN_DIR; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"m-ary Huffman trees, Fibonacci-like polynomials and minimizing weight sequences", "mhuff"};
    app.require_subcommand(1);

    auto* polys = app.add_subcommand("polys", "Print the Fibonacci-like polynomials G_0 .. G_{count-1}");
    std::size_t poly_count = 21;
    std::string poly_format = "text";
    polys->add_option("-c,--count", poly_count, "Number of polynomials")->capture_default_str();
    polys->add_option("-f,--format", poly_format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();

    auto* pmin = app.add_subcommand("pmin", "Minimizing absolutely ordered sequence and its cost report");
    std::size_t pmin_N = 0;
    unsigned pmin_m = 0;
    std::string pmin_format = "text";
    pmin->add_option("-N,--internal", pmin_N, "Number of internal nodes (>= 1)")->required();
    pmin->add_option("-m,--arity", pmin_m, "Arity (>= 2)")->required();
    pmin->add_option("-f,--format", pmin_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* huff = app.add_subcommand("huffman", "Build the m-ary Huffman tree of a weight list");
    HuffmanArgs hargs;
    huff->add_option("weights", hargs.weights, "Positive integer weights");
    huff->add_option("--file", hargs.file, "Whitespace-separated weight file");
    huff->add_option("-m,--arity", hargs.arity, "Arity (>= 2)")->required();
    huff->add_flag("--trace", hargs.trace, "Print every intermediate sequence P^(i)");
    huff->add_flag("--codes", hargs.codes, "Print codewords");
    huff->add_flag("--pad", hargs.pad, "Append unit dummy weights to satisfy n = N(m-1)+1");
    huff->add_option("-f,--format", hargs.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* tables = app.add_subcommand("tables", "Emit the representative-sequence table (1) or the cost table (2)");
    TableArgs targs;
    tables->add_option("which", targs.which, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
    tables->add_option("--max-m", targs.max_m, "Table 1: rows m = 1..max-m (default 15)");
    tables->add_option("--max-i", targs.max_i, "Table 1: columns i = 0..max-i (default 13)");
    tables->add_option("--max-arity", targs.max_arity, "Table 2: rows arity 2..max-arity (default 21)");
    tables->add_option("--max-N", targs.max_N, "Table 2: columns N = 1..max-N (default 10)");
    tables->add_option("-f,--format", targs.format, "Output format")
        ->check(CLI::IsMember({"csv", "markdown", "json"}))
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite = "all";
    double budget = 1e7;
    VerifyOptions vopts;
    vopts.golden_dir = default_golden_dir();
    std::string verify_format = "text";
    verify->add_option("suite", suite, "tables | formulas | oracle | all")
        ->check(CLI::IsMember({"tables", "formulas", "oracle", "all"}))
        ->capture_default_str();
    verify->add_option("--budget", budget, "Largest candidate count the minimality search may enumerate")
        ->check(CLI::Range(0.0, 1e18))
        ->capture_default_str();
    verify->add_option("--max-leaves", vopts.limits.max_leaves, "Largest leaf count for shape enumeration")
        ->capture_default_str();
    verify->add_option("--golden-dir", vopts.golden_dir, "Directory with table1.csv, table2.csv, polynomials.txt")
        ->capture_default_str();
    verify->add_option("--seed", vopts.seed, "Seed for the randomized corpora")->capture_default_str();
    verify->add_option("--cases", vopts.random_cases, "Randomized instances per property")->capture_default_str();
    verify->add_option("-f,--format", verify_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        err << "run with --help for usage\n";
        return exit_usage;
    }

    try {
        if (polys->parsed()) return cmd_polys(poly_count, poly_format, out);
        if (pmin->parsed()) return cmd_pmin(pmin_N, pmin_m, pmin_format, out);
        if (huff->parsed()) return cmd_huffman(hargs, out);
        if (tables->parsed()) return cmd_tables(targs, out);
        if (verify->parsed()) {
            vopts.limits.candidate_budget = static_cast<std::uint64_t>(budget);
            return cmd_verify(suite, vopts, verify_format, out);
        }
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace mhuff::cli
