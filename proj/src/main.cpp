#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tropgal/error.hpp"
#include "tropgal/excision.hpp"
#include "tropgal/galaxy.hpp"
#include "tropgal/intersect.hpp"
#include "tropgal/io.hpp"
#include "tropgal/multigraph.hpp"
#include "tropgal/rng.hpp"

namespace {

using namespace tropgal;

struct RunConfig {
    std::uint64_t seed = 0;
    int shift_bound = 1 << 16;
    int max_retries = 32;
    std::optional<int> depth;
    bool cache = true;
    std::string format = "json";
    int threads = 0;
};

// "-" reads standard input to the end.
std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) fail(errc::not_found, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json parse_json(const std::string& text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        fail(errc::parse, std::string(what) + ": " + e.what());
    }
}

Json file_json(const std::string& path, const char* what) {
    return parse_json(read_input(path), what);
}

// One comma-separated multiedge argument, e.g. "1" or "2,3".
LabelSet parse_labels(const std::string& arg) {
    std::vector<int> labels;
    std::istringstream in(arg);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t used = 0;
            int l = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            labels.push_back(l);
        } catch (const std::exception&) {
            fail(errc::parse, "label list " + arg + " is not comma-separated integers");
        }
    }
    if (labels.empty()) fail(errc::parse, "empty label list");
    return LabelSet::from_labels(labels);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_laman_check(const std::string& file) {
    SimpleGraph g = simple_graph_from_json(file_json(file, "graph"));
    std::cout << (is_laman(g) ? "true" : "false") << "\n";
    return 0;
}

int cmd_laman_db(int n, int index) {
    emit(to_json(laman_db(n, index)));
    return 0;
}

int cmd_laman_build(const std::string& file) {
    HennebergSequence seq = parse_henneberg(read_input(file));
    emit(to_json(from_henneberg_sequence(seq)));
    return 0;
}

int cmd_excise(const std::string& file, const std::vector<std::string>& classes) {
    Multigraph g = any_graph_from_json(file_json(file, "graph"));
    for (const std::string& arg : classes) g = excise(g, parse_labels(arg));
    emit(to_json(g));
    return 0;
}

// Cache file name: the input path plus a digest of everything that shapes
// the table, so distinct bases, seeds, or depths never collide.
std::string table_cache_path(const std::string& input, const std::string& base,
                             const RunConfig& cfg) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0xff;
        h *= 1099511628211ull;
    };
    mix(base);
    mix(std::to_string(cfg.seed));
    mix(cfg.depth ? std::to_string(*cfg.depth) : "full");
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    return input + ".table-" + std::string(hex, 12) + ".csv";
}

int cmd_galaxy(const std::string& file, const std::string& base_arg, const RunConfig& cfg) {
    SimpleGraph g = simple_graph_from_json(file_json(file, "graph"));
    Galaxy gal = build_galaxy(g, cfg.depth);
    if (cfg.format == "json") {
        emit(to_json(gal));
        return 0;
    }
    if (cfg.format == "dot") {
        std::cout << to_dot(gal);
        return 0;
    }
    std::string base = base_arg.empty() ? gal.root_key : base_arg;
    bool can_cache = cfg.cache && file != "-";
    std::string cache = can_cache ? table_cache_path(file, base, cfg) : "";
    if (can_cache) {
        std::ifstream in(cache);
        if (in) {
            std::cout << in.rdbuf();
            return 0;
        }
    }
    std::string csv = to_csv(pairing_table(gal, base, true, cfg.seed));
    if (can_cache) {
        std::ofstream out(cache);
        out << csv;
    }
    std::cout << csv;
    return 0;
}

int cmd_pairing(const std::string& file, const std::string& ha, const std::string& hb,
                const RunConfig& cfg) {
    SimpleGraph g = simple_graph_from_json(file_json(file, "graph"));
    ExcisionHistory h1 = history_from_json(g, parse_json(ha, "history"));
    ExcisionHistory h2 = history_from_json(g, parse_json(hb, "history"));
    PairingResult r =
        stable_pairing(apply(h1), apply(h2), cfg.seed, cfg.shift_bound, cfg.max_retries);
    emit(to_json(r));
    return 0;
}

int cmd_c2(const std::string& file, const RunConfig& cfg) {
    SimpleGraph g = simple_graph_from_json(file_json(file, "graph"));
    Int c2 = realization_number(g, cfg.seed, cfg.shift_bound, cfg.max_retries);
    emit(Json{{"c2", to_json(c2)}, {"pairing", to_json(Int(2 * c2))}});
    return 0;
}

int cmd_arboreal(const std::string& file, const std::string& ca, const std::string& cb,
                 const RunConfig& cfg) {
    SimpleGraph g = simple_graph_from_json(file_json(file, "graph"));
    Multigraph mg = Multigraph::from_simple(g);
    ChainOfFlats c1 = chain_from_json(mg, parse_json(ca, "chain"));
    ChainOfFlats c2 = chain_from_json(mg, parse_json(cb, "chain"));
    emit(to_json(arboreal_matches_pairing(g, c1, c2, cfg.seed)));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tropical galaxies of minimally rigid graphs"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string file, base, hist_a, hist_b, chain_a, chain_b;
    std::vector<std::string> classes;
    int db_n = 0, db_i = 0;

    auto add_seed = [&cfg](CLI::App* c) {
        c->add_option("--seed", cfg.seed, "random seed for the shift draw");
    };
    auto add_engine = [&cfg, &add_seed](CLI::App* c) {
        add_seed(c);
        c->add_option("--shift-bound", cfg.shift_bound, "coordinate bound for drawn shifts")
            ->check(CLI::PositiveNumber);
        c->add_option("--max-retries", cfg.max_retries, "shifts drawn before giving up")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* laman = app.add_subcommand("laman", "minimally rigid graph utilities");
    laman->require_subcommand(1);
    CLI::App* check = laman->add_subcommand("check", "print whether a graph is minimally rigid");
    check->add_option("file", file, "graph json, - for stdin")->required();
    CLI::App* db = laman->add_subcommand("db", "emit a bundled minimally rigid graph");
    db->add_option("n", db_n, "vertex count")->required();
    db->add_option("index", db_i, "1-based class index")->required();
    CLI::App* build = laman->add_subcommand("build", "run a Henneberg construction sequence");
    build->add_option("file", file, "sequence text, - for stdin")->required();

    CLI::App* excise_cmd = app.add_subcommand("excise", "excise multiedges left to right");
    excise_cmd->add_option("file", file, "graph json, - for stdin")->required();
    excise_cmd->add_option("classes", classes, "multiedges, e.g. 1 or 2,3")->required();

    CLI::App* galaxy_cmd = app.add_subcommand("galaxy", "excision galaxy of a graph");
    galaxy_cmd->add_option("file", file, "graph json, - for stdin")->required();
    galaxy_cmd->add_option("--depth", cfg.depth, "truncate below this depth");
    galaxy_cmd->add_option("--format", cfg.format, "json, dot, or csv pairing table")
        ->check(CLI::IsMember({"json", "dot", "csv"}));
    galaxy_cmd->add_option("--base", base, "table base node key (default: the root)");
    galaxy_cmd->add_flag("!--no-cache", cfg.cache, "skip the table csv cache beside the input");
    galaxy_cmd->add_option("--threads", cfg.threads, "cap table fill worker threads");
    add_seed(galaxy_cmd);

    CLI::App* pairing_cmd = app.add_subcommand("pairing", "pair two excisions of one graph");
    pairing_cmd->add_option("file", file, "root graph json, - for stdin")->required();
    pairing_cmd->add_option("history_a", hist_a, "first excision history json")->required();
    pairing_cmd->add_option("history_b", hist_b, "second excision history json")->required();
    add_engine(pairing_cmd);

    CLI::App* c2_cmd = app.add_subcommand("c2", "realization number via the self-pairing");
    c2_cmd->add_option("file", file, "graph json, - for stdin")->required();
    add_engine(c2_cmd);

    CLI::App* arboreal_cmd =
        app.add_subcommand("arboreal", "tree test of two maximal chains with certificates");
    arboreal_cmd->add_option("file", file, "graph json, - for stdin")->required();
    arboreal_cmd->add_option("chain_a", chain_a, "first chain json")->required();
    arboreal_cmd->add_option("chain_b", chain_b, "second chain json")->required();
    add_seed(arboreal_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << Json{{"code", errc::parse}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }

    try {
        if (cfg.threads > 0) set_table_threads(cfg.threads);
        if (check->parsed()) return cmd_laman_check(file);
        if (db->parsed()) return cmd_laman_db(db_n, db_i);
        if (build->parsed()) return cmd_laman_build(file);
        if (excise_cmd->parsed()) return cmd_excise(file, classes);
        if (galaxy_cmd->parsed()) return cmd_galaxy(file, base, cfg);
        if (pairing_cmd->parsed()) return cmd_pairing(file, hist_a, hist_b, cfg);
        if (c2_cmd->parsed()) return cmd_c2(file, cfg);
        if (arboreal_cmd->parsed()) return cmd_arboreal(file, chain_a, chain_b, cfg);
    } catch (const Error& e) {
        std::cerr << Json{{"code", e.code()}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << Json{{"code", errc::internal}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
