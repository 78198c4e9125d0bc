#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>

#include <vgr/bounds.hpp>
#include <vgr/classify.hpp>
#include <vgr/constructions.hpp>
#include <vgr/generator.hpp>
#include <vgr/graph6.hpp>
#include <vgr/report.hpp>

namespace {

constexpr int kExitMalformed = 2;
constexpr int kExitImpossible = 3;

std::optional<int> parse_int(std::string_view s) {
    int x = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
    return x;
}

// Named graphs: C<n>, K<n>, K<a>,<b>, D<k> (two K_k joined by a matching), @file (first
// graph6 record in the file), or a literal graph6 string.
vgr::Graph parse_graph(const std::string& spec) {
    if (spec.size() > 1 && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw vgr::MalformedLine(0, "cannot open " + spec.substr(1));
        vgr::Graph6Reader reader(in);
        auto g = reader.next();
        if (!g) throw vgr::MalformedLine(0, spec.substr(1) + " contains no graph");
        return *g;
    }
    const std::string_view rest = std::string_view(spec).substr(1);
    if (spec.size() > 1 && spec[0] == 'C') {
        if (auto n = parse_int(rest)) return vgr::cycle_graph(*n);
    }
    if (spec.size() > 1 && spec[0] == 'D') {
        if (auto n = parse_int(rest)) return vgr::double_complete(*n);
    }
    if (spec.size() > 1 && spec[0] == 'K') {
        if (auto n = parse_int(rest)) return vgr::complete_graph(*n);
        const auto comma = rest.find(',');
        if (comma != std::string_view::npos) {
            auto a = parse_int(rest.substr(0, comma));
            auto b = parse_int(rest.substr(comma + 1));
            if (a && b) {
                vgr::Graph g(*a + *b);
                for (int i = 0; i < *a; ++i)
                    for (int j = 0; j < *b; ++j) g.add_edge(i, *a + j);
                return g;
            }
        }
    }
    return vgr::from_graph6(spec);
}

void print_stats(const vgr::GenerateStats& s) {
    std::cerr << "nodes " << s.nodes << ", pruned: degree-deficit " << s.pruned_degree_deficit
              << ", cycle-balance " << s.pruned_cycle_balance << ", isomorphic " << s.pruned_isomorphic
              << ", no-candidate " << s.no_candidate << "; complete " << s.complete_graphs << ", emitted "
              << s.emitted << '\n';
}

void print_bounds_text(const vgr::BoundReport& r) {
    std::cout << "k=" << r.k << " g=" << r.g << " lambda=" << r.lambda << '\n';
    std::cout << "moore " << r.moore << ", lambda_max " << r.lambda_cap << '\n';
    for (const auto& v : r.verdicts)
        std::cout << "  " << v.rule << ": " << (v.impossible ? "impossible" : "no-info") << '\n';
    for (const auto& b : r.lbs) std::cout << "  " << b.rule << ": " << b.value << '\n';
    if (r.impossible)
        std::cout << "status impossible\n";
    else
        std::cout << "best lower bound " << *r.best_lb << (r.requires_moore_graph ? " (Moore graph required)" : "")
                  << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vertex-girth-regular graph toolkit"};
    app.require_subcommand(1);
    int threads = 1;
    std::optional<std::uint64_t> seed;
    app.add_option("--threads", threads, "Worker threads for generation")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Seed for randomised constructions");

    int v = 0, k = 0, g = 0;
    std::int64_t lambda = 0;

    auto* gen = app.add_subcommand("generate", "Generate all vgr(v,k,g,lambda)-graphs as graph6");
    bool count_only = false, stats = false;
    std::optional<int> up_to;
    gen->add_option("-v", v, "Order");
    gen->add_option("-k", k, "Degree")->required();
    gen->add_option("-g", g, "Girth")->required();
    gen->add_option("-l,--lambda", lambda, "Girth-cycles per vertex")->required();
    gen->add_flag("--count-only", count_only, "Print counts instead of graphs");
    gen->add_option("--all-orders-up-to", up_to, "Run every order from the Moore bound up to N");
    gen->add_flag("--stats", stats, "Print search statistics to stderr");

    auto* bounds = app.add_subcommand("bounds", "Lower bounds and non-existence verdicts");
    bool json = false;
    bounds->add_option("-k", k)->required();
    bounds->add_option("-g", g)->required();
    bounds->add_option("-l,--lambda", lambda)->required();
    bounds->add_flag("--json", json, "Emit JSON");

    auto* filter = app.add_subcommand("filter", "Keep the vgr graphs of graph6 input");
    std::optional<int> fk, fg;
    std::optional<std::int64_t> fl;
    std::vector<std::string> files;
    filter->add_option("-k", fk);
    filter->add_option("-g", fg);
    filter->add_option("-l,--lambda", fl);
    filter->add_option("files", files, "graph6 files (stdin when omitted)");

    auto* construct = app.add_subcommand("construct", "Build a graph and print it as graph6");
    std::string kind;
    std::vector<std::string> args;
    construct->add_option("kind", kind)->required()->check(
        CLI::IsMember({"truncation", "double-complete", "product", "cycle"}));
    construct->add_option("args", args,
                          "cycle N | double-complete K | truncation INNER OUTER | product G H; graphs as "
                          "C<n>, K<n>, K<a>,<b>, D<k>, @file or graph6");

    auto* check = app.add_subcommand("check", "Classify every graph of a graph6 file");
    std::string check_file;
    check->add_option("file", check_file)->required();

    auto* table = app.add_subcommand("table", "CSV of bounds on n(k,g,lambda)");
    int gmin = 3, gmax = 3;
    double budget = 10;
    table->add_option("-k", k)->required();
    table->add_option("--gmin", gmin)->required();
    table->add_option("--gmax", gmax)->required();
    table->add_option("--budget", budget, "Search seconds per row (0 disables the search)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitMalformed;
    }

    try {
        if (*gen) {
            vgr::GenerateOptions opt;
            opt.threads = threads;
            const int first = up_to ? static_cast<int>(vgr::moore_bound(k, g)) : v;
            const int last = up_to ? *up_to : v;
            if (!up_to && v == 0) throw CLI::RequiredError("-v");
            for (int order = first; order <= last; ++order) {
                const auto r = vgr::generate_all(order, k, g, lambda, opt);
                if (count_only)
                    std::cout << (up_to ? std::to_string(order) + " " : "") << r.graphs.size() << '\n';
                else
                    for (const auto& graph : r.graphs) std::cout << vgr::to_graph6(graph) << '\n';
                if (stats) print_stats(r.stats);
            }
        } else if (*bounds) {
            const auto r = vgr::best_lower_bound(k, g, lambda);
            if (json)
                std::cout << vgr::to_json(r, 2) << '\n';
            else
                print_bounds_text(r);
        } else if (*filter) {
            const vgr::VgrConstraints c{fk, fg, fl};
            auto run = [&](std::istream& in) {
                vgr::Graph6Reader reader(in);
                while (auto graph = reader.next())
                    if (vgr::match_vgr(*graph, c)) std::cout << vgr::to_graph6(*graph) << '\n';
            };
            if (files.empty()) run(std::cin);
            for (const auto& f : files) {
                std::ifstream in(f);
                if (!in) throw vgr::MalformedLine(0, "cannot open " + f);
                run(in);
            }
        } else if (*construct) {
            auto need = [&](std::size_t n) {
                if (args.size() != n) throw vgr::PreconditionViolated(kind + " takes " + std::to_string(n) + " argument(s)");
            };
            auto number = [&](const std::string& s) {
                auto x = parse_int(s);
                if (!x) throw vgr::PreconditionViolated("expected an integer, got " + s);
                return *x;
            };
            vgr::Graph out;
            if (kind == "cycle") {
                need(1);
                out = vgr::cycle_graph(number(args[0]));
            } else if (kind == "double-complete") {
                need(1);
                out = vgr::double_complete(number(args[0]));
            } else if (kind == "truncation") {
                need(2);
                out = vgr::generalized_truncation(parse_graph(args[0]), parse_graph(args[1]), seed);
            } else {
                need(2);
                out = vgr::cartesian_product(parse_graph(args[0]), parse_graph(args[1]));
            }
            std::cout << vgr::to_graph6(out) << '\n';
        } else if (*check) {
            std::ifstream in(check_file);
            if (!in) throw vgr::MalformedLine(0, "cannot open " + check_file);
            vgr::Graph6Reader reader(in);
            while (auto graph = reader.next()) {
                std::cout << reader.line() << ": ";
                if (!vgr::is_connected(*graph) || graph->order() == 0) {
                    std::cout << "disconnected\n";
                    continue;
                }
                const auto c = vgr::classify(*graph);
                if (const auto* p = std::get_if<vgr::VgrProfile>(&c))
                    std::cout << vgr::to_string(*p) << '\n';
                else
                    std::cout << "not vgr: " << std::get<vgr::NotVgr>(c).describe() << '\n';
            }
        } else if (*table) {
            vgr::TableOptions opt;
            opt.threads = threads;
            opt.budget = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(budget));
            vgr::write_table_header(std::cout);
            vgr::build_table(k, gmin, gmax, opt, [](const vgr::TableRow& row) {
                vgr::write_table_row(std::cout, row);
                std::cout.flush();
            });
        }
    } catch (const vgr::ParameterImpossible& e) {
        std::cerr << "impossible: " << e.rule() << '\n';
        return kExitImpossible;
    } catch (const vgr::MalformedLine& e) {
        std::cerr << "malformed input: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return kExitMalformed;
    } catch (const vgr::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
