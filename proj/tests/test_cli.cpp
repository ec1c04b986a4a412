#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "tropgal/excision.hpp"
#include "tropgal/galaxy.hpp"
#include "tropgal/io.hpp"

#include "fixtures.hpp"

using namespace tropgal;
using namespace fixtures;

namespace {

struct Cmd {
    int status = -1;
    std::string out;
};

std::string bin() { return std::string("'") + TROPGAL_BIN + "'"; }

Cmd run(const std::string& shell, bool capture_stderr = false) {
    std::string full = "{ " + shell + " ; }";
    full += capture_stderr ? " 2>&1 1>/dev/null" : " 2>/dev/null";
    FILE* p = popen(full.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    std::size_t k;
    while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
    int rc = pclose(p);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

const std::filesystem::path& workdir() {
    static std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("tropgal_cli_" + std::to_string(getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
    std::filesystem::path p = workdir() / name;
    std::ofstream(p) << text;
    return p.string();
}

std::string graph_file(const std::string& name, const SimpleGraph& g) {
    return write_file(name, to_json(g).dump());
}

LabelSet ls(std::initializer_list<int> labels) { return LabelSet::from_labels(labels); }

} // namespace

TEST_CASE("laman subcommands") {
    Cmd piped = run(bin() + " laman db 4 1 | " + bin() + " laman check -");
    CHECK(piped.status == 0);
    CHECK(piped.out == "true\n");

    std::string k4 = graph_file("k4.json", k4_s());
    Cmd check = run(bin() + " laman check " + k4);
    CHECK(check.status == 0);
    CHECK(check.out == "false\n");

    Cmd db = run(bin() + " laman db 4 1");
    CHECK(simple_graph_from_json(Json::parse(db.out)) == laman_db(4, 1));

    Cmd missing = run(bin() + " laman db 99 1", true);
    CHECK(missing.status == 1);
    CHECK(Json::parse(missing.out).at("code") == errc::not_found);

    std::string seq = write_file("k3.seq", "H0 1 2\n");
    Cmd built = run(bin() + " laman build " + seq);
    CHECK(built.status == 0);
    CHECK(simple_graph_from_json(Json::parse(built.out)) == k3_s());
    Cmd chained = run(bin() + " laman build " + seq + " | " + bin() + " laman check -");
    CHECK(chained.out == "true\n");
}

TEST_CASE("excise emits multigraph json and chains through stdin") {
    std::string k3 = graph_file("k3.json", k3_s());
    Cmd one = run(bin() + " excise " + k3 + " 1");
    CHECK(one.status == 0);
    CHECK(multigraph_from_json(Json::parse(one.out)) == excise(fixtures::k3(), ls({1})));

    Cmd chained =
        run("cat " + k3 + " | " + bin() + " excise - 1 | " + bin() + " excise - 2,3", true);
    CHECK(chained.status == 1);
    CHECK(Json::parse(chained.out).at("code") == errc::isolated_multiedge);

    std::string dia = graph_file("diamond.json", diamond_s());
    Cmd two = run(bin() + " excise " + dia + " 3 1,2");
    CHECK(multigraph_from_json(Json::parse(two.out)) ==
          excise(excise(diamond(), ls({3})), ls({1, 2})));
}

TEST_CASE("pairing reproduces the worked eleven-edge value") {
    std::string strip = graph_file("strip7.json", strip7_s());
    Cmd r = run(bin() + " pairing " + strip + " '[[2],[4],[6]]' '[[1],[2,3],[4,5],[10]]'");
    CHECK(r.status == 0);
    CHECK(Json::parse(r.out).at("value") == 2);

    Cmd seeded = run(bin() + " pairing " + strip +
                     " '[[2],[4],[6]]' '[[1],[2,3],[4,5],[10]]' --seed 11");
    CHECK(Json::parse(seeded.out).at("value") == 2);

    Cmd bad = run(bin() + " pairing " + strip + " '[[2]]' 'not json'", true);
    CHECK(bad.status == 1);
    CHECK(Json::parse(bad.out).at("code") == errc::parse);
}

TEST_CASE("galaxy formats and the table cache") {
    std::string dia = graph_file("dia.json", diamond_s());
    Galaxy gal = build_galaxy(diamond_s());

    Cmd js = run(bin() + " galaxy " + dia);
    CHECK(js.status == 0);
    Galaxy parsed = galaxy_from_json(Json::parse(js.out));
    CHECK(parsed.nodes.size() == gal.nodes.size());
    CHECK(parsed.edges == gal.edges);

    Cmd dot = run(bin() + " galaxy " + dia + " --format dot");
    CHECK(dot.out == to_dot(gal));

    Cmd depth = run(bin() + " galaxy " + dia + " --depth 0");
    CHECK(galaxy_from_json(Json::parse(depth.out)).nodes.size() == 1);

    Cmd csv = run(bin() + " galaxy " + dia + " --format csv --threads 2");
    CHECK(csv.out == to_csv(pairing_table(gal, gal.root_key)));
    bool cache_written = false;
    for (const auto& e : std::filesystem::directory_iterator(workdir()))
        if (e.path().filename().string().rfind("dia.json.table-", 0) == 0) cache_written = true;
    CHECK(cache_written);
    Cmd cached = run(bin() + " galaxy " + dia + " --format csv --threads 2");
    CHECK(cached.out == csv.out);

    Cmd based = run(bin() + " galaxy " + dia + " --format csv --base '1;2.3|4|5' --no-cache");
    CHECK(based.out == to_csv(pairing_table(gal, "1;2.3|4|5")));

    Cmd unknown = run(bin() + " galaxy " + dia + " --format csv --base nope --no-cache", true);
    CHECK(unknown.status == 1);
    CHECK(Json::parse(unknown.out).at("code") == errc::unknown_node);

    std::string k4 = graph_file("k4b.json", k4_s());
    Cmd notlaman = run(bin() + " galaxy " + k4, true);
    CHECK(notlaman.status == 1);
    CHECK(Json::parse(notlaman.out).at("code") == errc::precondition);
}

TEST_CASE("c2 and arboreal reports") {
    std::string dia = graph_file("dia2.json", diamond_s());
    Cmd c = run(bin() + " c2 " + dia);
    CHECK(c.status == 0);
    Json cj = Json::parse(c.out);
    CHECK(cj.at("c2") == 2);
    CHECK(cj.at("pairing") == 4);

    std::string fan = graph_file("fan5.json", fan5_s());
    Cmd good = run(bin() + " arboreal " + fan + " '[[[1],[1,4],[1,2,3,4,5]]]'" +
                   " '[[[2],[2,6],[1,2,3,6]]]'");
    CHECK(good.status == 0);
    Json gj = Json::parse(good.out);
    CHECK(gj.at("arboreal") == true);
    CHECK(gj.at("pairing") == 1);
    CHECK(gj.at("rank") == 7);
    CHECK(gj.at("m") == 7);

    Cmd bad = run(bin() + " arboreal " + fan + " '[[[2],[2,6],[1,2,3,6]]]'" +
                  " '[[[1],[1,2,3],[1,2,3,4,5]]]'");
    CHECK(Json::parse(bad.out).at("arboreal") == false);
    CHECK(Json::parse(bad.out).at("pairing") == 0);
}

TEST_CASE("identical invocations are byte-identical") {
    std::string dia = graph_file("dia3.json", diamond_s());
    for (std::string args : {std::string(" galaxy ") + dia + " --format csv --no-cache --seed 9",
                             std::string(" c2 ") + dia + " --seed 4",
                             std::string(" galaxy ") + dia + " --format dot"}) {
        Cmd a = run(bin() + args);
        Cmd b = run(bin() + args);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
    }
}
