// modhom: command-line surface for the mod-p homomorphism dichotomy toolkit.
//
// Exit codes: 0 ok, 1 input/parse error, 2 unsupported input (outside the
// classified class) or failed verification, 3 search budget exceeded.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "modhom/aut_reduce.hpp"
#include "modhom/bis_reduction.hpp"
#include "modhom/errors.hpp"
#include "modhom/gadget.hpp"
#include "modhom/graph.hpp"
#include "modhom/hom_count.hpp"
#include "modhom/pipeline.hpp"

namespace {

using namespace modhom;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitBudget = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

BipartiteInstance load_bipartite(const std::string& path) {
    return parse_bipartite(read_file(path));
}

// Pin file: lines "g h", blank lines and '#' comments ignored.
std::map<int, int> load_pins(const std::string& path) {
    std::map<int, int> pins;
    std::istringstream in(read_file(path));
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        int g, h;
        if (!(row >> g)) continue;  // blank
        std::string trailing;
        if (!(row >> h) || (row >> trailing))
            throw ParseError("expected 'g h' pin pair", lineno);
        if (!pins.emplace(g, h).second)
            throw ParseError("duplicate pin for vertex " + std::to_string(g), lineno);
    }
    return pins;
}

// MODHOM_BUDGET overrides the default search budgets; an explicit --budget
// flag overrides both.
std::uint64_t effective_budget(std::uint64_t flag_value, bool flag_set,
                               std::uint64_t fallback) {
    if (flag_set) return flag_value;
    if (const char* env = std::getenv("MODHOM_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InputError("MODHOM_BUDGET is not a valid integer");
        }
    }
    return fallback;
}

struct Options {
    std::string graph_path;
    std::string from_path;
    std::string to_path;
    std::string bipartite_path;
    std::string pins_path;
    std::string output_prefix;
    std::uint64_t prime = 0;
    std::uint64_t mod = 0;
    std::uint64_t l1 = 0;
    std::uint64_t l2 = 0;
    std::uint64_t budget = 0;
    bool budget_set = false;
    std::uint64_t seed = 0;
    int check_samples = 0;
    int check_size = 5;
    int aut_bound = kDefaultAutBound;
    bool trace = false;
    bool json = false;
};

void add_aut_bound_flag(CLI::App* cmd, Options& o) {
    cmd->add_option("--aut-bound", o.aut_bound,
                    "Vertex bound for automorphism enumeration");
}

void add_format_flag(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", [&o](const std::vector<std::string>& vals) {
           if (vals[0] == "json") { o.json = true; return true; }
           if (vals[0] == "text") { o.json = false; return true; }
           return false;
       },
       "Output format: text (default) or json");
}

int cmd_classify(const Options& o) {
    Classification c = classify(load_graph(o.graph_path), o.prime, o.aut_bound);
    if (o.json) {
        std::cout << classification_to_json(c);
    } else {
        switch (c.verdict) {
            case Classification::Verdict::Tractable:
                std::cout << "Tractable\n"
                          << "derived graph: star K_{1," << c.star_leaves << "}\n";
                break;
            case Classification::Verdict::Hard:
                std::cout << "Hard\n"
                          << "lambda1=" << c.lambda1 << " lambda2=" << c.lambda2 << "\n"
                          << gadget_to_json(*c.gadget, c.p);
                break;
            case Classification::Verdict::Unsupported:
                std::cout << "Unsupported: " << c.reason << "\n";
                break;
        }
        if (!c.trace.steps.empty()) std::cout << serialize_trace(c.trace);
    }
    return c.verdict == Classification::Verdict::Unsupported ? kExitUnsupported
                                                             : kExitOk;
}

int cmd_count(const Options& o) {
    Graph g = load_graph(o.from_path);
    Graph h = load_graph(o.to_path);
    std::map<int, int> pins;
    if (!o.pins_path.empty()) pins = load_pins(o.pins_path);
    std::uint64_t budget = effective_budget(o.budget, o.budget_set, kDefaultNodeBudget);

    if (o.mod != 0) {
        PinConstraint c;
        for (auto [gv, hv] : pins) c.pairs.emplace_back(gv, hv);
        Residue r = count_homs_pinned(g, h, c, o.mod, budget);
        if (o.json) {
            nlohmann::ordered_json j{{"residue", r.value()}, {"mod", r.modulus()}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << r.value() << "\n";
        }
    } else {
        BigInt n = count_homs_pinned_exact(g, h, pins, budget);
        if (o.json) {
            nlohmann::ordered_json j{{"count", n.str()}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << n << "\n";
        }
    }
    return kExitOk;
}

int cmd_derive(const Options& o) {
    Graph h = load_graph(o.graph_path);
    auto [hstar, trace] = reduce_to_hstar(h, o.prime, o.aut_bound);

    std::optional<CongruenceReport> check;
    if (o.check_samples > 0)
        check = verify_hstar_congruence(h, o.prime, o.check_samples, o.check_size,
                                        o.seed, o.aut_bound);

    if (o.json) {
        nlohmann::ordered_json j;
        j["derived"] = serialize_graph(hstar);
        if (o.trace) j["trace"] = serialize_trace(trace);
        if (check) {
            j["congruence"] = {{"ok", check->ok}, {"checked", check->checked}};
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << serialize_graph(hstar);
        if (o.trace) std::cout << serialize_trace(trace);
        if (check)
            std::cout << "congruence check: " << (check->ok ? "ok" : "FAILED") << " ("
                      << check->checked << " samples)\n";
    }
    return (check && !check->ok) ? kExitUnsupported : kExitOk;
}

int cmd_gadget(const Options& o) {
    Graph h = load_graph(o.graph_path);
    HardnessGadget g = build_hardness_gadget(h, o.prime, o.aut_bound);
    std::cout << gadget_to_json(g, o.prime);
    return kExitOk;
}

int cmd_reduce(const Options& o) {
    Graph h = load_graph(o.graph_path);
    BipartiteInstance b = load_bipartite(o.bipartite_path);
    HardnessGadget g = build_hardness_gadget(h, o.prime, o.aut_bound);
    ReductionOutput r = build_reduction_graph(b, g);

    std::string graph_doc = serialize_graph(r.gprime.graph);
    std::string pins_doc = serialize_pins(r);
    std::string prov_doc = reduction_provenance_json(r);

    if (!o.output_prefix.empty()) {
        write_file(o.output_prefix + ".g", graph_doc);
        write_file(o.output_prefix + ".pins", pins_doc);
        write_file(o.output_prefix + ".json", prov_doc);
        std::cout << o.output_prefix << ".g " << o.output_prefix << ".pins "
                  << o.output_prefix << ".json\n";
    } else if (o.json) {
        nlohmann::ordered_json j;
        j["graph"] = graph_doc;
        j["pins"] = pins_doc;
        j["provenance"] = nlohmann::ordered_json::parse(prov_doc);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "# graph\n" << graph_doc << "# pins\n" << pins_doc
                  << "# provenance\n" << prov_doc;
    }
    return kExitOk;
}

int cmd_verify(const Options& o) {
    Graph h = load_graph(o.graph_path);
    BipartiteInstance b = load_bipartite(o.bipartite_path);
    HardnessGadget g = build_hardness_gadget(h, o.prime, o.aut_bound);
    GadgetReport gadget_report = verify_hardness_gadget(h, g, o.prime);
    std::uint64_t max_homs = effective_budget(o.budget, o.budget_set, kDefaultHomBudget);
    ReductionReport reduction = verify_reduction(b, h, g, o.prime, max_homs);

    if (o.json) {
        nlohmann::ordered_json j;
        nlohmann::ordered_json conds = nlohmann::ordered_json::array();
        for (const auto& c : gadget_report.conditions)
            conds.push_back({{"condition", c.condition}, {"pass", c.pass}});
        j["gadget"] = {{"all_pass", gadget_report.all_pass}, {"conditions", conds}};
        j["reduction"] = {{"conclusive", reduction.conclusive},
                          {"congruence", reduction.congruence},
                          {"chi_independent", reduction.chi_independent},
                          {"chi_surjective", reduction.chi_surjective},
                          {"class_cardinalities", reduction.class_cardinalities},
                          {"homs_mod_p", reduction.homs_mod_p},
                          {"z_mod_p", reduction.z_mod_p},
                          {"all_pass", reduction.all_pass()}};
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : gadget_report.conditions)
            std::cout << "gadget condition (" << c.condition << "): "
                      << (c.pass ? "pass" : "FAIL") << "\n";
        std::cout << "reduction congruence: |Hom(G',H)| = " << reduction.homs_mod_p
                  << ", Z = " << reduction.z_mod_p << " (mod " << o.prime << "): "
                  << (reduction.congruence ? "pass" : "FAIL") << "\n"
                  << "chi classes independent: "
                  << (reduction.chi_independent ? "pass" : "FAIL") << "\n"
                  << "chi classes surjective: "
                  << (reduction.chi_surjective ? "pass" : "FAIL") << "\n"
                  << "class cardinalities: "
                  << (reduction.class_cardinalities ? "pass" : "FAIL") << "\n";
        if (!reduction.conclusive)
            std::cout << "inconclusive: homomorphism budget exceeded\n";
        for (const auto& f : reduction.failures) std::cout << "  " << f << "\n";
    }
    if (!reduction.conclusive) return kExitBudget;
    return (gadget_report.all_pass && reduction.all_pass()) ? kExitOk
                                                            : kExitUnsupported;
}

int cmd_zbis(const Options& o) {
    BipartiteInstance b = load_bipartite(o.bipartite_path);
    Residue z = count_z_bis(b, Residue(o.l1, o.prime), Residue(o.l2, o.prime));
    if (o.json) {
        nlohmann::ordered_json j{{"z", z.value()}, {"mod", z.modulus()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << z.value() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mod-p homomorphism dichotomy toolkit"};
    app.require_subcommand(1);
    Options o;

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "Classify counting mod p into a target graph");
    classify_cmd->add_option("--graph", o.graph_path, "Target graph file")->required();
    classify_cmd->add_option("--prime", o.prime, "Prime modulus")->required();
    add_aut_bound_flag(classify_cmd, o);
    add_format_flag(classify_cmd, o);

    CLI::App* count_cmd = app.add_subcommand("count", "Count homomorphisms");
    count_cmd->add_option("--from", o.from_path, "Source graph file")->required();
    count_cmd->add_option("--to", o.to_path, "Target graph file")->required();
    count_cmd->add_option("--mod", o.mod, "Report the count modulo this prime");
    count_cmd->add_option("--pins", o.pins_path, "Pin file of 'g h' lines");
    count_cmd->add_option("--budget", o.budget, "Search node budget");
    add_format_flag(count_cmd, o);

    CLI::App* derive_cmd =
        app.add_subcommand("derive", "Compute the derived graph H^{*p}");
    derive_cmd->add_option("--graph", o.graph_path, "Graph file")->required();
    derive_cmd->add_option("--prime", o.prime, "Prime modulus")->required();
    derive_cmd->add_flag("--trace", o.trace, "Print the reduction trace");
    CLI::Option* samples_opt = derive_cmd->add_option(
        "--check-samples", o.check_samples, "Sampled congruence checks to run");
    derive_cmd->add_option("--check-size", o.check_size,
                           "Max vertices of sampled source graphs");
    CLI::Option* seed_opt = derive_cmd->add_option("--seed", o.seed, "RNG seed");
    samples_opt->needs(seed_opt);
    add_aut_bound_flag(derive_cmd, o);
    add_format_flag(derive_cmd, o);

    CLI::App* gadget_cmd =
        app.add_subcommand("gadget", "Construct and verify the hardness gadget");
    gadget_cmd->add_option("--graph", o.graph_path, "Target graph file")->required();
    gadget_cmd->add_option("--prime", o.prime, "Prime modulus")->required();
    add_aut_bound_flag(gadget_cmd, o);
    add_format_flag(gadget_cmd, o);

    CLI::App* reduce_cmd = app.add_subcommand(
        "reduce", "Build the reduction instance G' for a bipartite graph");
    reduce_cmd->add_option("--graph", o.graph_path, "Target graph file")->required();
    reduce_cmd->add_option("--prime", o.prime, "Prime modulus")->required();
    reduce_cmd->add_option("--bipartite", o.bipartite_path, "Bipartite graph file")
        ->required();
    reduce_cmd->add_option("--output", o.output_prefix,
                           "Write <prefix>.g, <prefix>.pins, <prefix>.json");
    add_aut_bound_flag(reduce_cmd, o);
    add_format_flag(reduce_cmd, o);

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Verify the hardness gadget and the reduction end to end");
    verify_cmd->add_option("--graph", o.graph_path, "Target graph file")->required();
    verify_cmd->add_option("--prime", o.prime, "Prime modulus")->required();
    verify_cmd->add_option("--bipartite", o.bipartite_path, "Bipartite graph file")
        ->required();
    verify_cmd->add_option("--budget", o.budget, "Homomorphism enumeration budget");
    add_aut_bound_flag(verify_cmd, o);
    add_format_flag(verify_cmd, o);

    CLI::App* zbis_cmd =
        app.add_subcommand("zbis", "Weighted bipartite independent-set sum mod p");
    zbis_cmd->add_option("--bipartite", o.bipartite_path, "Bipartite graph file")
        ->required();
    zbis_cmd->add_option("--l1", o.l1, "Left weight")->required();
    zbis_cmd->add_option("--l2", o.l2, "Right weight")->required();
    zbis_cmd->add_option("--prime", o.prime, "Prime modulus")->required();
    add_format_flag(zbis_cmd, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    o.budget_set = (count_cmd->count("--budget") > 0) ||
                   (verify_cmd->count("--budget") > 0);

    try {
        if (classify_cmd->parsed()) return cmd_classify(o);
        if (count_cmd->parsed()) return cmd_count(o);
        if (derive_cmd->parsed()) return cmd_derive(o);
        if (gadget_cmd->parsed()) return cmd_gadget(o);
        if (reduce_cmd->parsed()) return cmd_reduce(o);
        if (verify_cmd->parsed()) return cmd_verify(o);
        if (zbis_cmd->parsed()) return cmd_zbis(o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const BudgetExceededError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const TooLargeError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    }
    return kExitOk;
}
