#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "pq/fixtures.hpp"
#include "pq/io.hpp"

namespace fs = std::filesystem;
using namespace pq;

namespace {

struct Result {
    int code;
    std::string out;
};

Result run(const std::string& args) {
    std::string cmd = std::string(PQ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    char buf[4096];
    size_t k;
    while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string data(const std::string& f) { return std::string(PQ_DATA_DIR) + "/" + f; }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch() {
    fs::path d = fs::temp_directory_path() / ("pq_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("exit codes") {
    fs::path d = scratch();
    CHECK(run("shadows --n 3").code == 0);
    CHECK(run("").code == 2);
    CHECK(run("shadows").code == 2);
    CHECK(run("shadows --n 3 --mode weird").code == 2);
    CHECK(run("classify --n 6").code == 2);
    CHECK(run("canon --quiver " + (d / "missing.json").string()).code == 3);
    std::ofstream(d / "bad.json") << "{\"n\": 2, \"arrows\": [";
    CHECK(run("canon --quiver " + (d / "bad.json").string()).code == 3);
    CHECK(run("mutate --quiver " + data("markov.json") + " --vertex 1").code == 4);
    CHECK(run("mutate --quiver " + data("q17.json") + " --vertex 9").code == 4);
    fs::remove_all(d);
}

TEST_CASE("shadows counts") {
    CHECK(run("shadows --n 4 --mode essential").out == "7\n");
    CHECK(run("shadows --n 1 --mode basic").out == "1\n");
    CHECK(run("shadows --n 5").out == "26\n");
    CHECK(run("shadows --n 4 --mode basic").out == "12\n");
}

TEST_CASE("classify verify") {
    auto r = run("classify --n 5 --mode tsp4 --verify");
    CHECK(r.code == 0);
    CHECK(r.out == "19 quivers, verified\n");
    CHECK(run("classify --n 4 --verify").code == 0);
    CHECK(run("classify --n 3 --verify").code == 0);

    fs::path d = scratch();
    for (int t : {1, 2, 8}) {
        std::string f = (d / ("c" + std::to_string(t) + ".json")).string();
        CHECK(run("classify --n 5 --threads " + std::to_string(t) + " --out " + f).code == 0);
    }
    std::string one = slurp(d / "c1.json");
    CHECK(!one.empty());
    CHECK(slurp(d / "c2.json") == one);
    CHECK(slurp(d / "c8.json") == one);
    json j = json::parse(one);
    CHECK(j["survivor_quivers"].size() == 19);
    CHECK(j["shadow_count"] == 26);

    std::string m = (d / "m.json").string();
    CHECK(run("classify --n 4 --out " + (d / "c4.json").string() + " --manifest " + m).code == 0);
    json mj = json::parse(slurp(m));
    CHECK(mj["command"] == "classify");
    CHECK(mj["output_hash"].get<std::string>().size() == 40);
    fs::remove_all(d);
}

TEST_CASE("mutate, recognize, canon") {
    auto r = run("mutate --quiver " + data("q17.json") + " --vertex 3");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["rewrite"] == "V->V3");
    CHECK(oracle::isomorphic(quiver_from_json(j["quiver"]), named_fixture("Q13")));
    CHECK(run("mutate --quiver " + data("q17.json") + " --vertex 3 --format dot").out.rfind("digraph", 0) == 0);

    auto g = run("recognize --quiver " + data("q17.json"));
    REQUIRE(g.code == 0);
    json gj = json::parse(g.out);
    CHECK(gj["recognized"] == true);
    CHECK(gj["decomposition"]["blocks"].size() == 2);
    CHECK(json::parse(run("recognize --quiver " + data("tri3.json")).out)["recognized"] == true);

    auto c1 = run("canon --quiver " + data("q13.json"));
    auto c2 = run("canon --quiver " + data("q13.json"));
    CHECK(c1.code == 0);
    CHECK(c1.out == c2.out);
    fs::path d = scratch();
    std::ofstream(d / "c.json") << json::parse(c1.out)["quiver"].dump();
    CHECK(run("canon --quiver " + (d / "c.json").string()).out == c1.out.substr(0, c1.out.find(",\"perm\"")) +
                                                                   ",\"perm\":[1,2,3,4,5]}\n");
    fs::remove_all(d);
}

TEST_CASE("reconstruct report") {
    fs::path d = scratch();
    json sh = json::parse(slurp(data("shadows_n5.json")));
    json q26;
    for (const auto& s : sh["essential"])
        if (s["name"] == "Q26") q26 = s;
    REQUIRE(!q26.is_null());
    q26.erase("name");
    std::ofstream(d / "q26.json") << q26.dump();
    auto r = run("reconstruct --shadow " + (d / "q26.json").string() + " --report");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["reports"].size() >= j["survivors"].size());
    for (const auto& rep : j["reports"]) {
        if (rep["verdict"] == "excluded") CHECK(!rep["rule"].get<std::string>().empty());
    }
    fs::remove_all(d);
}

TEST_CASE("data files round trip byte-exactly") {
    for (const char* f : {"markov.json", "tri3.json", "q17.json", "q13.json"}) {
        std::string text = slurp(data(f));
        while (!text.empty() && text.back() == '\n') text.pop_back();
        CHECK_MESSAGE(quiver_to_json(quiver_from_json(json::parse(text))).dump() == text, f);
    }
    for (const char* f : {"golden_n3.json", "golden_n4.json", "golden_n5.json"}) {
        json j = json::parse(slurp(data(f)));
        for (auto& q : j["quivers"]) {
            json plain = {{"n", q["n"]}, {"arrows", q["arrows"]}};
            CHECK(quiver_to_json(quiver_from_json(plain)) == plain);
        }
    }
}
