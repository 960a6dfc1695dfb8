#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kcx/connectivity.hpp"
#include "kcx/dimacs.hpp"
#include "kcx/generators.hpp"
#include "kcx/suites.hpp"
#include "kcx/template_io.hpp"

using namespace kcx;

namespace {

// Exit codes.
constexpr int ok = 0;
constexpr int rejected = 1;
constexpr int usage = 2;
constexpr int not_inextensible = 3;
constexpr int resource_limit = 4;
constexpr int verification_failed = 5;
constexpr int contradiction = 6;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join_params(const std::vector<std::string>& params, std::size_t from = 0) {
    std::string out;
    for (std::size_t i = from; i < params.size(); ++i)
        out += (i > from ? "," : "") + params[i];
    return out;
}

void need_params(const std::vector<std::string>& params, std::size_t lo, std::size_t hi, const std::string& family) {
    if (params.size() < lo || params.size() > hi)
        throw UsageError("wrong number of parameters for " + family);
}

// `gen complete 8`, `gen glued 15 15 --shared 1`, `gen join cycle:5 complete:5`,
// or a compact spec such as `gen glued:15,15/1`.
FamilySpec family_from_args(const std::string& family, const std::vector<std::string>& params, int shared,
                            std::optional<double> p, std::uint64_t seed) {
    if (family.find_first_of(":(") != std::string::npos) {
        if (!params.empty())
            throw UsageError("a compact family spec takes no further parameters");
        return parse_family(family);
    }
    std::string text;
    if (family == "complete" || family == "cycle") {
        need_params(params, 1, 1, family);
        text = family + ":" + params[0];
    } else if (family == "glued") {
        need_params(params, 1, SIZE_MAX, family);
        text = "glued:" + join_params(params) + "/" + std::to_string(shared);
    } else if (family == "kneser") {
        need_params(params, 2, 2, family);
        text = "kneser:" + params[0] + "," + params[1];
    } else if (family == "mycielski") {
        need_params(params, 1, 2, family);
        text = "mycielski:" + params[0] + (params.size() == 2 ? "(" + params[1] + ")" : "");
    } else if (family == "join") {
        need_params(params, 1, SIZE_MAX, family);
        text = "join(" + join_params(params) + ")";
    } else if (family == "random") {
        need_params(params, 1, 2, family);
        std::string prob = params.size() == 2 ? params[1] : "";
        if (p) {
            std::ostringstream s;
            s << *p;
            prob = s.str();
        }
        if (prob.empty())
            throw UsageError("random needs an edge probability");
        text = "random:" + params[0] + "," + prob + "@" + std::to_string(seed);
    } else {
        throw UsageError("unknown family '" + family + "'");
    }
    return parse_family(text);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

std::string show(const VertexSet& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i)
        out += (i ? "," : "") + std::to_string(vs[i]);
    return out + "}";
}

void print_trace(std::ostream& out, const Graph& g, const Certificate& cert, const ExtractConfig& cfg) {
    out << "input: " << g.order() << " vertices, " << g.size() << " edges, sha256 " << cert.input_sha256 << '\n';
    out << "mode: " << to_string(cert.mode) << ", k = " << cert.k;
    if (cert.mode == PaletteMode::plain)
        out << ", palette " << cert.palette_size;
    out << '\n';
    out << "precondition: " << (cfg.policy == PreconditionPolicy::verify ? "checked by the solver" : "trusted") << '\n';
    for (std::size_t i = 0; i < cert.trace.size(); ++i) {
        const auto& s = cert.trace[i];
        out << "step " << i + 1 << ": cut " << show(s.cut) << ", |Y| = " << s.y.size() << " (degree " << s.y_degree
            << "), |Z| = " << s.z.size() << " (degree " << s.z_degree << ") -> " << to_string(s.branch) << " branch, "
            << s.child_order << " vertices, template degree " << s.derived_degree << '\n';
    }
    out << "H: " << cert.subgraph.size() << " vertices " << show(cert.subgraph) << '\n';
    out << "connectivity: " << cert.min_cut_size << (cert.subgraph_complete ? " (complete)" : "") << '\n';
    if (cert.mode == PaletteMode::plain)
        out << "chromatic: no " << cert.k - 1 << "-colouring\n";
    else if (cert.list_witness)
        out << "chromatic: " << cert.k - 1 << "-list assignment with no colouring\n";
    else
        out << "chromatic: by construction (beyond the brute-force cap)\n";
    out << "solver: " << cert.decisions << " decisions, " << cert.backtracks << " backtracks\n";
}

struct ExtractArgs {
    std::string graph;
    int k = 0;
    std::string mode = "plain";
    int palette_size = 0;
    std::string lists;
    std::uint64_t budget_decisions = 0;
    std::uint64_t budget_ms = 0;
    bool verify_precondition = false;
    bool trust_precondition = false;
    bool check_invariants = false;
    std::string out;
};

int cmd_extract(const ExtractArgs& a) {
    Graph g;
    ExtractConfig cfg;
    try {
        g = read_dimacs_file(a.graph);
        if (a.mode == "plain") {
            if (!a.lists.empty())
                throw UsageError("--lists needs --mode list");
            cfg = ExtractConfig::plain(a.k);
            if (a.palette_size != 0)
                cfg.palette = Palette::plain(a.palette_size);
        } else {
            ListAssignment lists;
            if (!a.lists.empty()) {
                auto doc = read_template_file(a.lists);
                if (doc.palette.mode != PaletteMode::list)
                    throw UsageError("--lists file must declare `palette list`");
                lists = doc.palette.lists;
            } else {
                lists = uniform_lists(g, a.palette_size != 0 ? a.palette_size : required_palette_size(a.k, PaletteMode::list));
            }
            cfg = ExtractConfig::list(a.k, std::move(lists));
        }
        cfg.budget.max_decisions = a.budget_decisions;
        cfg.budget.wall_clock = std::chrono::milliseconds(a.budget_ms);
        cfg.policy = a.trust_precondition ? PreconditionPolicy::trust : PreconditionPolicy::verify;
        cfg.check_invariants = a.check_invariants;
        validate_config(g, cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }

    std::ostream& log = a.out.empty() ? std::cerr : std::cout;
    Certificate cert;
    try {
        cert = extract(g, cfg);
    } catch (const NotInextensible& e) {
        log << "not inextensible: the graph has a colouring from the palette\n";
        return not_inextensible;
    } catch (const ResourceLimitReached& e) {
        log << "resource limit: " << e.what() << '\n';
        return resource_limit;
    } catch (const InternalContradiction& e) {
        log << "internal contradiction at " << e.stage << " on " << e.graph.order() << " vertices\n";
        return contradiction;
    }
    print_trace(log, g, cert, cfg);

    Verdict verdict = verify_certificate(g, cert, cfg.budget);
    const std::string text = to_text(cert);
    if (a.out.empty())
        std::cout << text;
    else
        write_file(a.out, text);
    if (!verdict) {
        for (const auto& why : verdict.failures)
            log << "verification failed: " << why << '\n';
        return verification_failed;
    }
    log << "verified: certificate accepted\n";
    return ok;
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path) {
    Graph g;
    Certificate cert;
    try {
        g = read_dimacs_file(graph_path);
        cert = read_certificate_file(cert_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    Verdict verdict = verify_certificate(g, cert);
    if (!verdict) {
        for (const auto& why : verdict.failures)
            std::cout << "rejected: " << why << '\n';
        return rejected;
    }
    std::cout << "accepted: H has " << cert.subgraph.size() << " vertices, connectivity " << cert.min_cut_size << '\n';
    return ok;
}

int cmd_witness(const std::string& graph_path, const std::string& template_path, std::uint64_t budget_decisions) {
    Graph g;
    TemplateDocument doc;
    try {
        g = read_dimacs_file(graph_path);
        doc = read_template_file(template_path);
        validate_template(g, doc.tmpl, doc.palette);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    SolverBudget budget;
    budget.max_decisions = budget_decisions;
    auto check = is_valid_witness(g, doc.tmpl, doc.k, doc.palette, budget);
    std::cout << "degree " << degree(doc.tmpl, doc.k) << " (bound " << 2L * doc.k * doc.k << "), largest forbidden list "
              << doc.tmpl.max_forbidden() << '\n';
    switch (check.status) {
    case WitnessStatus::valid:
        std::cout << "valid witness: no respecting colouring\n";
        return ok;
    case WitnessStatus::invalid:
        std::cout << "not a witness: " << check.reason << '\n';
        return rejected;
    case WitnessStatus::resource_limit:
        std::cout << "undecided: " << check.reason << '\n';
        return resource_limit;
    }
    return rejected;
}

int cmd_reproduce(const std::string& suite, const std::string& out, std::uint64_t seed) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "error: unknown suite '" << suite << "' (expected theorem1, theorem2, oracles or properties)\n";
        return usage;
    }
    RunReport report = run_suite(suite, seed);
    std::cout << summary(report);
    if (!out.empty())
        write_file(out, to_text(report));
    return report.passed() ? ok : rejected;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Extract k-connected subgraphs with certificates"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "Write a generated graph in DIMACS format");
    std::string family;
    std::vector<std::string> params;
    int shared = 1;
    std::optional<double> probability;
    std::uint64_t seed = 0;
    std::string gen_out;
    gen->add_option("family", family, "complete, cycle, glued, join, mycielski, kneser, random, or a compact spec")
        ->required();
    gen->add_option("params", params, "Family parameters");
    gen->add_option("--shared", shared, "Shared vertices for glued cliques")->check(CLI::NonNegativeNumber);
    gen->add_option("--p", probability, "Edge probability for random graphs");
    gen->add_option("--seed", seed, "Seed for random graphs");
    gen->add_option("--out", gen_out, "Output path (default stdout)");

    auto* ext = app.add_subcommand("extract", "Extract H and write a certificate");
    ExtractArgs ea;
    ext->add_option("graph", ea.graph, "DIMACS graph")->required();
    ext->add_option("--k", ea.k, "Connectivity target")->required()->check(CLI::PositiveNumber);
    ext->add_option("--mode", ea.mode, "plain or list")->check(CLI::IsMember({"plain", "list"}));
    ext->add_option("--palette-size", ea.palette_size, "Palette size (plain, at least 7k) or uniform list size (list)")
        ->check(CLI::PositiveNumber);
    ext->add_option("--lists", ea.lists, "Template file with `palette list` and `list` lines");
    ext->add_option("--budget-decisions", ea.budget_decisions, "Solver decision budget (0 = unlimited)");
    ext->add_option("--budget-ms", ea.budget_ms, "Wall-clock budget per solver call in ms (0 = unlimited)");
    auto* verify_flag = ext->add_flag("--verify-precondition", ea.verify_precondition, "Check the input is not colourable (default)");
    ext->add_flag("--trust-precondition", ea.trust_precondition, "Skip the precondition check")->excludes(verify_flag);
    ext->add_flag("--check-invariants", ea.check_invariants, "Re-solve every strengthened witness");
    ext->add_option("--out", ea.out, "Certificate path (default stdout, trace on stderr)");

    auto* ver = app.add_subcommand("verify", "Check a certificate against a graph");
    std::string ver_graph, ver_cert;
    ver->add_option("graph", ver_graph, "DIMACS graph")->required();
    ver->add_option("certificate", ver_cert, "Certificate JSON")->required();

    auto* wit = app.add_subcommand("witness", "Check whether a template is a witness on a graph");
    std::string wit_graph, wit_template;
    std::uint64_t wit_budget = 0;
    wit->add_option("graph", wit_graph, "DIMACS graph")->required();
    wit->add_option("template", wit_template, "Template file")->required();
    wit->add_option("--budget-decisions", wit_budget, "Solver decision budget (0 = unlimited)");

    auto* rep = app.add_subcommand("reproduce", "Run a reproduction suite");
    std::string suite, rep_out;
    std::uint64_t rep_seed = default_seed;
    rep->add_option("suite", suite, "theorem1, theorem2, oracles or properties")->required();
    rep->add_option("--out", rep_out, "Write the JSON report here");
    rep->add_option("--seed", rep_seed, "Seed for the randomized suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : usage;
    }

    try {
        if (*gen) {
            FamilySpec spec = family_from_args(family, params, shared, probability, seed);
            Graph g = generate(spec);
            std::string text = to_dimacs(g, "kcx gen " + to_string(spec));
            if (gen_out.empty())
                std::cout << text;
            else
                write_file(gen_out, text);
            return ok;
        }
        if (*ext)
            return cmd_extract(ea);
        if (*ver)
            return cmd_verify(ver_graph, ver_cert);
        if (*wit)
            return cmd_witness(wit_graph, wit_template, wit_budget);
        if (*rep)
            return cmd_reproduce(suite, rep_out, rep_seed);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return rejected;
    }
    return usage;
}
