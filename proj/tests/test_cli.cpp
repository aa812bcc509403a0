#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef NORMEXT_CLI_PATH
#error "NORMEXT_CLI_PATH must point at the command line binary"
#endif

namespace {

namespace fs = std::filesystem;

/// Scratch directory for fixtures and outputs, cleaned per test file run.
const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "normext_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string fixture(const std::string& name, const std::string& text) {
    const fs::path path = work_dir() / name;
    std::ofstream out(path);
    out << text;
    out.flush();
    REQUIRE(out.good());
    return path.string();
}

std::string out_path(const std::string& name) { return (work_dir() / name).string(); }

int run_cli(const std::string& args) {
    const std::string cmd =
        std::string(NORMEXT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const char* kGroupZ4 = R"({"orders": [4], "subgroup_generators": [[2]]})";
const char* kNormZ4 = R"({
    "group": {"orders": [4], "subgroup_generators": [[2]]},
    "values": {"[0]": "0", "[2]": "1"}
})";

} // namespace

TEST_CASE("cli: no or unknown subcommands and bad flags exit 2") {
    CHECK(run_cli("") == 2);
    CHECK(run_cli("frobnicate") == 2);
    CHECK(run_cli("extend --group g.json --norm n.json") == 2); // --prime missing
    CHECK(run_cli("extend --p 2") == 2);                        // unknown flag
    CHECK(run_cli("--help") == 0);
}

TEST_CASE("cli: validate distinguishes valid, invalid and malformed") {
    const std::string good = fixture("valid_norm.json", kNormZ4);
    CHECK(run_cli("validate --norm \"" + good + "\"") == 0);

    // |2| = 5 > |1| + |1| breaks the triangle inequality.
    const std::string broken = fixture("broken_norm.json", R"({
        "group": {"orders": [4]},
        "values": {"[0]": "0", "[1]": "1", "[2]": "5", "[3]": "1"}
    })");
    CHECK(run_cli("validate --norm \"" + broken + "\"") == 1);

    const std::string garbled = fixture("garbled.json", "{not json");
    CHECK(run_cli("validate --norm \"" + garbled + "\"") == 2);
    CHECK(run_cli("validate --norm \"" + out_path("absent.json") + "\"") == 2);
}

TEST_CASE("cli: extend writes deterministic json plus csv and round-trips") {
    const std::string group = fixture("z4_group.json", kGroupZ4);
    const std::string norm = fixture("z4_norm.json", kNormZ4);

    const std::string out1 = out_path("ext1.json");
    CHECK(run_cli("extend --group \"" + group + "\" --norm \"" + norm +
                  "\" --prime 2 --out \"" + out1 + "\"") == 0);
    const std::string json1 = slurp(out1);
    CHECK(json1.find("\"[1]\": \"1\"") != std::string::npos); // |1| = 1 in the extension
    const std::string csv1 = slurp(out_path("ext1.csv"));
    CHECK(csv1.rfind("element,value,certificate", 0) == 0);
    CHECK(csv1.find("ux=") != std::string::npos);

    // Byte-identical on a second run.
    const std::string out2 = out_path("ext2.json");
    CHECK(run_cli("extend --group \"" + group + "\" --norm \"" + norm +
                  "\" --prime 2 --out \"" + out2 + "\"") == 0);
    CHECK(slurp(out2) == json1);
    CHECK(slurp(out_path("ext2.csv")) == csv1);

    // The emitted file is itself a valid norm file.
    CHECK(run_cli("validate --norm \"" + out1 + "\"") == 0);

    // 3 * Z_4 is not inside {0, 2}; 4 is not prime. Both are validation
    // failures, not input errors.
    CHECK(run_cli("extend --group \"" + group + "\" --norm \"" + norm +
                  "\" --prime 3 --out \"" + out_path("ext3.json") + "\"") == 1);
    CHECK(run_cli("extend --group \"" + group + "\" --norm \"" + norm +
                  "\" --prime 4 --out \"" + out_path("ext4.json") + "\"") == 1);

    // Mismatched group and norm files are an input error.
    const std::string other = fixture("z6_group.json", R"({"orders": [6],
                                                           "subgroup_generators": [[3]]})");
    CHECK(run_cli("extend --group \"" + other + "\" --norm \"" + norm +
                  "\" --prime 2 --out \"" + out_path("ext5.json") + "\"") == 2);
}

TEST_CASE("cli: chain-extend reaches the whole group") {
    const std::string group = fixture("z12_group.json",
                                      R"({"orders": [12], "subgroup_generators": [[6]]})");
    const std::string norm = fixture("z12_norm.json", R"({
        "group": {"orders": [12], "subgroup_generators": [[6]]},
        "values": {"[0]": "0", "[6]": "5"}
    })");
    const std::string out = out_path("chain.json");
    CHECK(run_cli("chain-extend --group \"" + group + "\" --norm \"" + norm + "\" --out \"" +
                  out + "\"") == 0);
    CHECK(run_cli("validate --norm \"" + out + "\"") == 0);
    const std::string text = slurp(out);
    CHECK(text.find("\"[11]\"") != std::string::npos); // covers all of Z_12
    CHECK(slurp(out_path("chain.csv")).rfind("element,value,certificate", 0) == 0);
}

TEST_CASE("cli: lattice-extend handles named bases, tables and window errors") {
    const std::string out = out_path("lattice.json");
    CHECK(run_cli("lattice-extend --denominator 2 --window 2 --out \"" + out + "\"") == 0);
    const std::string text = slurp(out);
    CHECK(text.find("\"[1/2]\": \"1\"") != std::string::npos);
    CHECK(slurp(out_path("lattice.csv")).rfind("element,value,certificate", 0) == 0);

    // Cheap boundary values park the optimal residues outside any small
    // window: certification must fail with exit 1, not emit wrong values.
    const std::string trap = fixture("trap_table.json", R"({
        "values": {"[0]": "0", "[1]": "10", "[-1]": "10", "[2]": "1", "[-2]": "1"}
    })");
    CHECK(run_cli("lattice-extend --denominator 2 --base table --table \"" + trap +
                  "\" --window 2 --out \"" + out_path("trap.json") + "\"") == 1);

    // A table that does not cover the window is an input error.
    const std::string sparse = fixture("sparse_table.json", R"({"values": {"[0]": "0"}})");
    CHECK(run_cli("lattice-extend --denominator 2 --base table --table \"" + sparse +
                  "\" --window 1 --out \"" + out_path("sparse.json") + "\"") == 2);
    CHECK(run_cli("lattice-extend --denominator 2 --base frobenius --out \"" +
                  out_path("fro.json") + "\"") == 2);
}

TEST_CASE("cli: transversal picks representatives in both modes") {
    const std::string coll = fixture("collections.json", R"({
        "k": 2,
        "A": [[1, 2], [3, 4]],
        "B": [[1, 3], [2, 4]]
    })");
    const std::string out = out_path("transversal.json");
    CHECK(run_cli("transversal --collections \"" + coll + "\" --out \"" + out + "\"") == 0);
    CHECK(slurp(out).find("\"mode\": \"uniform\"") != std::string::npos);

    const std::string pout = out_path("pfrac.json");
    CHECK(run_cli("transversal --collections \"" + coll + "\" --p 2 --out \"" + pout + "\"") ==
          0);
    CHECK(slurp(pout).find("\"mode\": \"p-fractional\"") != std::string::npos);

    const std::string shapeless = fixture("shapeless.json", R"({"k": 2, "A": [1], "B": []})");
    CHECK(run_cli("transversal --collections \"" + shapeless + "\" --out \"" +
                  out_path("bad_t.json") + "\"") == 2);
}

TEST_CASE("cli: birkhoff decomposes exactly or rejects the matrix") {
    const std::string good = fixture("ds_matrix.json",
                                     R"({"matrix": [["1/2", "1/2"], ["1/2", "1/2"]]})");
    const std::string out = out_path("birkhoff.json");
    CHECK(run_cli("birkhoff --matrix \"" + good + "\" --out \"" + out + "\"") == 0);
    const std::string text = slurp(out);
    CHECK(text.find("\"terms\"") != std::string::npos);
    CHECK(text.find("\"weight\": \"1/2\"") != std::string::npos);

    const std::string bad = fixture("bad_matrix.json",
                                    R"({"matrix": [["1/3", "1/3"], ["1/3", "1/3"]]})");
    CHECK(run_cli("birkhoff --matrix \"" + bad + "\" --out \"" + out_path("nope.json") +
                  "\"") == 2);
}

TEST_CASE("cli: winding-demo tabulates the discontinuity") {
    const std::string out = out_path("winding.csv");
    CHECK(run_cli("winding-demo --kmax 3 --out \"" + out + "\"") == 0);
    const std::string text = slurp(out);
    CHECK(std::count(text.begin(), text.end(), '\n') == 4); // header + 3 rows
    CHECK(text.rfind("k,norm_e_k,norm_2e_k,ratio", 0) == 0);
    CHECK(run_cli("winding-demo --kmax 0 --out \"" + out_path("w0.csv") + "\"") == 2);
}

TEST_CASE("cli: the quick property suite passes end to end") {
    CHECK(run_cli("check --quick --seed 20260814") == 0);
}
