#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "park/errors.hpp"
#include "park/kernels.hpp"
#include "park/serialize.hpp"

namespace {

using park::json;

// Big counts are emitted as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that.
json count_json(const park::bigint& value) {
    if (value.fits_ulong_p()) return value.get_ui();
    return value.get_str();
}

json prefs_json(const park::Prefs& prefs) { return json(prefs); }

// Chain arguments are inline JSON when they look like JSON, file paths
// otherwise.
json load_json_argument(const std::string& arg) {
    std::string text = arg;
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || (text[first] != '{' && text[first] != '[')) {
        std::ifstream in(arg);
        if (!in) throw std::invalid_argument("cannot read JSON file '" + arg + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
}

struct Output {
    std::optional<json> payload;  // wrapped in the status envelope
    std::optional<std::string> raw;  // dot/csv bypass the envelope
};

CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
}

} // namespace

int main(int argc, char** argv) {
    const auto started = std::chrono::steady_clock::now();

    CLI::App app{"parking-function engine: simulation, bijections, posets, polytopes"};
    app.require_subcommand(1);
    app.fallthrough();

    bool stable = false;
    app.add_flag("--stable", stable, "suppress timing for byte-stable output");

    Output output;
    std::string prefs_arg, word_arg, labels_arg, json_arg, format = "json";
    int n = 0, ground = 0;
    bool primitive = false, count_only = false, header = false;

    // --- flat commands ------------------------------------------------
    auto* simulate = leaf(&app, "simulate", "park cars by the forward-only rule");
    simulate->add_option("prefs", prefs_arg, "comma-separated preferences")->required();
    simulate->callback([&] {
        auto outcome = park::simulate_parking(park::parse_prefs_csv(prefs_arg));
        if (outcome.success())
            output.payload = json{{"assignment", outcome.assignment}};
        else
            output.payload =
                json{{"empty_spots", outcome.empty_spots}, {"failed_car", *outcome.failed_car}};
    });

    auto* check = leaf(&app, "check", "sorted-criterion membership test");
    check->add_option("prefs", prefs_arg)->required();
    check->callback([&] {
        output.payload =
            json{{"is_parking_function", park::is_parking_function(park::parse_prefs_csv(prefs_arg))}};
    });

    auto* unwrap = leaf(&app, "unwrap", "circular list -> parking function");
    unwrap->add_option("prefs", prefs_arg)->required();
    unwrap->callback([&] {
        auto prefs = park::parse_prefs_csv(prefs_arg);
        auto circular = park::simulate_circular(prefs);
        output.payload = json{{"alpha", park::unwrap_circular(prefs)},
                              {"assignment", circular.assignment},
                              {"empty_spot", circular.empty_spot}};
    });

    auto* enumerate = leaf(&app, "enumerate", "list parking functions of length n");
    enumerate->add_option("--n", n)->required();
    enumerate->add_flag("--primitive", primitive, "weakly increasing members only");
    enumerate->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    enumerate->add_flag("--header", header, "column header row for csv");
    enumerate->callback([&] {
        auto items = primitive ? park::enumerate_primitive(n)
                               : park::kernels::enumerate_parking_functions_parallel(n);
        if (format == "csv") {
            output.raw = park::points_to_csv(items, header);
            return;
        }
        output.payload = json{{"count", items.size()},
                              {"n", n},
                              {"parking_functions", items},
                              {"primitive", primitive}};
    });

    // --- dyck ----------------------------------------------------------
    auto* dyck = leaf(&app, "dyck", "Dyck paths and their bijections");
    dyck->require_subcommand(1);

    auto* dyck_enum = leaf(dyck, "enumerate", "Dyck paths of order n");
    dyck_enum->add_option("--n", n)->required();
    dyck_enum->callback([&] {
        auto paths = park::enumerate_dyck_paths(n);
        std::vector<std::string> words;
        words.reserve(paths.size());
        for (const auto& p : paths) words.push_back(park::to_word(p));
        output.payload = json{{"count", words.size()}, {"n", n}, {"words", words}};
    });

    auto* dyck_catalan = leaf(dyck, "catalan", "the n-th Catalan number");
    dyck_catalan->add_option("--n", n)->required();
    dyck_catalan->callback(
        [&] { output.payload = json{{"catalan", count_json(park::catalan(n))}, {"n", n}}; });

    auto* dyck_to_pf = leaf(dyck, "to-pf", "labeled Dyck path -> parking function");
    dyck_to_pf->add_option("word", word_arg, "path word over N/E")->required();
    dyck_to_pf->add_option("--labels", labels_arg, "north-step labels, path order")->required();
    dyck_to_pf->callback([&] {
        park::LabeledDyckPath ld{park::path_from_word(word_arg),
                                 park::parse_prefs_csv(labels_arg)};
        output.payload = json{{"prefs", prefs_json(park::labeled_dyck_to_pf(ld))}};
    });

    auto* dyck_from_pf = leaf(dyck, "from-pf", "parking function -> labeled Dyck path");
    dyck_from_pf->add_option("prefs", prefs_arg)->required();
    dyck_from_pf->callback([&] {
        output.payload = park::labeled_path_to_json(
            park::pf_to_labeled_dyck(park::parse_prefs_csv(prefs_arg)));
    });

    auto* dyck_reflect = leaf(dyck, "reflect", "reflect a bad path past its first crossing");
    dyck_reflect->add_option("word", word_arg)->required();
    dyck_reflect->callback([&] {
        auto path = park::path_from_word(word_arg);
        auto crossing = park::first_crossing(path);
        output.payload = json{{"crossing", json::array({crossing.first, crossing.second})},
                              {"word", park::to_word(park::reflect_bad_path(path))}};
    });

    // --- nc --------------------------------------------------------------
    auto* nc = leaf(&app, "nc", "noncrossing partitions and their lattice");
    nc->require_subcommand(1);

    auto* nc_enum = leaf(nc, "enumerate", "noncrossing partitions of [n]");
    nc_enum->add_option("--n", n)->required();
    nc_enum->callback([&] {
        auto partitions = park::enumerate_noncrossing(n);
        json items = json::array();
        for (const auto& p : partitions) items.push_back(park::partition_to_json(p));
        output.payload = json{{"count", partitions.size()}, {"n", n}, {"partitions", items}};
    });

    auto* nc_hasse = leaf(nc, "hasse", "Hasse diagram of the refinement order");
    nc_hasse->add_option("--n", n)->required();
    nc_hasse->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    nc_hasse->callback([&] {
        auto h = park::hasse_diagram(n);
        if (format == "dot")
            output.raw = park::hasse_to_dot(h);
        else
            output.payload = park::hasse_to_json(h);
    });

    auto* nc_check = leaf(nc, "check", "noncrossing test for a partition");
    nc_check->add_option("partition", json_arg, "partition JSON (inline or file)")->required();
    nc_check->callback([&] {
        output.payload = json{
            {"noncrossing",
             park::is_noncrossing(park::partition_from_json(load_json_argument(json_arg)))}};
    });

    std::string second_json;
    auto* nc_refines = leaf(nc, "refines", "does the first partition refine the second");
    nc_refines->add_option("p", json_arg)->required();
    nc_refines->add_option("q", second_json)->required();
    nc_refines->callback([&] {
        output.payload =
            json{{"refines", park::refines(park::partition_from_json(load_json_argument(json_arg)),
                                           park::partition_from_json(load_json_argument(second_json)))}};
    });

    auto* nc_covers = leaf(nc, "covers", "is the second partition a single-merge cover");
    nc_covers->add_option("p", json_arg)->required();
    nc_covers->add_option("q", second_json)->required();
    nc_covers->callback([&] {
        output.payload =
            json{{"covers", park::covers(park::partition_from_json(load_json_argument(json_arg)),
                                         park::partition_from_json(load_json_argument(second_json)))}};
    });

    auto* nc_label = leaf(nc, "label", "merge label of a cover pair");
    nc_label->add_option("p", json_arg)->required();
    nc_label->add_option("q", second_json)->required();
    nc_label->callback([&] {
        output.payload = json{
            {"label", park::chain_label(park::partition_from_json(load_json_argument(json_arg)),
                                        park::partition_from_json(load_json_argument(second_json)))}};
    });

    // --- chains ----------------------------------------------------------
    auto* chains = leaf(&app, "chains", "maximal chains of NC_ground");
    chains->add_option("--ground", ground)->required();
    chains->add_flag("--count-only", count_only);
    chains->callback([&] {
        if (count_only) {
            output.payload = json{{"count", park::kernels::count_maximal_chains_parallel(ground)}};
            return;
        }
        auto all = park::enumerate_maximal_chains(ground);
        json items = json::array();
        for (const auto& chain : all) items.push_back(park::chain_to_json(chain));
        output.payload = json{{"chains", items}, {"count", all.size()}, {"ground", ground}};
    });

    auto* chain = leaf(&app, "chain", "single-chain bijections");
    chain->require_subcommand(1);

    auto* chain_to_pf = leaf(chain, "to-pf", "chain labels as a parking function");
    chain_to_pf->add_option("chain", json_arg, "chain JSON (inline or file)")->required();
    chain_to_pf->callback([&] {
        output.payload = json{
            {"prefs", prefs_json(park::chain_to_pf(park::chain_from_json(load_json_argument(json_arg))))}};
    });

    auto* chain_from_pf = leaf(chain, "from-pf", "the unique chain with these labels");
    chain_from_pf->add_option("prefs", prefs_arg)->required();
    chain_from_pf->callback([&] {
        output.payload =
            park::chain_to_json(park::pf_to_chain(park::parse_prefs_csv(prefs_arg)));
    });

    // --- polytope ----------------------------------------------------------
    auto* polytope = leaf(&app, "polytope", "vertex theory of the parking-function polytope");
    polytope->require_subcommand(1);

    auto* poly_vertices = leaf(polytope, "vertices", "polytope vertices in dimension n");
    poly_vertices->add_option("--n", n)->required();
    poly_vertices->add_flag("--count-only", count_only);
    poly_vertices->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    poly_vertices->add_flag("--header", header);
    poly_vertices->callback([&] {
        if (count_only) {
            output.payload = json{{"count", count_json(park::vertex_count(n))}};
            return;
        }
        auto vertices = park::enumerate_vertices(n);
        if (format == "csv") {
            output.raw = park::points_to_csv(vertices, header);
            return;
        }
        output.payload = json{{"count", vertices.size()}, {"n", n}, {"vertices", vertices}};
    });

    auto* poly_check = leaf(polytope, "check", "vertex test for a parking function");
    poly_check->add_option("prefs", prefs_arg)->required();
    poly_check->callback([&] {
        output.payload =
            json{{"is_vertex", park::is_vertex(park::parse_prefs_csv(prefs_arg))}};
    });

    auto* poly_witness = leaf(polytope, "witness", "midpoint witness of a non-vertex");
    poly_witness->add_option("prefs", prefs_arg)->required();
    poly_witness->callback([&] {
        auto point = park::parse_prefs_csv(prefs_arg);
        auto [up, down] = park::midpoint_witness(point);
        int index = 0;
        while (up[index] == point[index]) ++index;
        output.payload =
            json{{"decremented", down}, {"incremented", up}, {"index", index + 1}};
    });

    auto* poly_perm = leaf(polytope, "permutahedron", "permutahedron vertices and edges");
    poly_perm->add_option("--n", n)->required();
    poly_perm->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    poly_perm->callback([&] {
        auto g = park::permutahedron_graph(n);
        if (format == "dot")
            output.raw = park::permutahedron_to_dot(g);
        else
            output.payload = park::permutahedron_to_json(g);
    });

    // --- dispatch ----------------------------------------------------------
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const park::domain_error& e) {
        json err{{"error", {{"code", e.code()}, {"message", e.what()}}}, {"status", "error"}};
        json args = json::array();
        for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
        err["error"]["argv"] = args;
        std::cout << err.dump() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (output.raw) {
        std::cout << *output.raw;
        return 0;
    }
    json envelope{{"payload", output.payload ? *output.payload : json(nullptr)},
                  {"status", "success"}};
    if (!stable) {
        const auto elapsed = std::chrono::steady_clock::now() - started;
        envelope["elapsed_ms"] =
            std::chrono::duration<double, std::milli>(elapsed).count();
    }
    std::cout << envelope.dump() << "\n";
    return 0;
}
