#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(MT_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

int count_lines_starting(const std::string& text, const std::string& prefix) {
    int count = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        if (text.compare(pos, prefix.size(), prefix) == 0) ++count;
        pos = end + 1;
    }
    return count;
}

}  // namespace

TEST_CASE("family subcommand emits dot and json", "[cli]") {
    auto dot = run_cli("family grid2 --n 5 --dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("graph g {") == 0);
    CHECK(count_lines_starting(dot.out, "  v") >= 10);  // 10 vertices

    auto js = run_cli("family even-tiling --n 3 --k 2 --json");
    CHECK(js.exit_code == 0);
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["vertices"].size() == 10);
    CHECK(j["family"] == "even-tiling");

    SECTION("bad parameters produce a usage error") {
        CHECK(run_cli("family grid2 --n 0").exit_code == 2);
        CHECK(run_cli("family warp --n 3").exit_code == 2);
        CHECK(run_cli("family grid2").exit_code == 2);  // missing --n
        CHECK(run_cli("nonsense").exit_code == 2);
    }
}

TEST_CASE("badmatchings subcommand", "[cli]") {
    auto r = run_cli("badmatchings grid2 --n 4");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["count"] == 4);
    CHECK(j["matchings"].size() == 4);
}

TEST_CASE("complex subcommand reports faces and respects caps", "[cli]") {
    auto r = run_cli("complex grid2 --n 4");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["face_count"] == 61);
    CHECK(j["f_vector"] == nlohmann::json::array({10, 25, 20, 5}));
    CHECK(j["facets"].size() == 5);
    CHECK(j["void"] == false);

    auto v = run_cli("complex gridmn --m 3 --n 3");
    REQUIRE(v.exit_code == 0);
    CHECK(nlohmann::json::parse(v.out)["void"] == true);

    CHECK(run_cli("complex grid2 --n 8 --cap-faces 100").exit_code == 3);

    SECTION("aux-xn builds the independence complex") {
        auto x = run_cli("complex aux-xn --n 4");
        REQUIRE(x.exit_code == 0);
        CHECK(nlohmann::json::parse(x.out)["face_count"] == 61);
    }
}

TEST_CASE("morse subcommand executes schedules", "[cli]") {
    auto odd = run_cli("morse grid2 --n 7 --schedule a_1,a_3,a_5,a_7");
    REQUIRE(odd.exit_code == 0);
    auto jo = nlohmann::json::parse(odd.out);
    CHECK(jo["critical"].empty());
    CHECK(jo["acyclic"] == true);
    CHECK(jo["empty_paired"] == true);
    CHECK(jo["homotopy"]["kind"] == "contractible");

    auto even = run_cli("morse grid2 --n 6 --schedule a_1,b_1,a_3,b_3,a_5,b_5");
    REQUIRE(even.exit_code == 0);
    auto je = nlohmann::json::parse(even.out);
    REQUIRE(je["critical"].size() == 1);
    CHECK(je["critical"][0]["dim"] == 2);
    CHECK(je["critical"][0]["faces"][0] == nlohmann::json::array({"b_1", "b_3", "b_5"}));

    SECTION("braces guard commas inside subscripts") {
        auto r = run_cli("morse odd-simple --n 2 --k 2 --schedule 'a_1,b_{1,1},c_{4,1}'");
        REQUIRE(r.exit_code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["schedule"] == nlohmann::json::array({"a_1", "b_{1,1}", "c_{4,1}"}));
        CHECK(j["critical"].empty());
    }
    SECTION("unknown labels are a usage error") {
        CHECK(run_cli("morse grid2 --n 4 --schedule q_7").exit_code == 2);
    }
}

TEST_CASE("homology subcommand", "[cli]") {
    auto r = run_cli("homology triangles --k 3");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["reduced_betti"] == nlohmann::json::array({0, 1, 0, 0}));
    CHECK(j["void"] == false);
}

TEST_CASE("verify subcommand emits PASS lines and exit codes", "[cli][verify]") {
    auto grid = run_cli("verify thm-grid --n-max 8");
    CHECK(grid.exit_code == 0);
    CHECK(count_lines_starting(grid.out, "PASS thm-grid") == 7);
    CHECK(grid.out.find("FAIL") == std::string::npos);

    auto bad = run_cli("verify lemma-bad --n-max 8");
    CHECK(bad.exit_code == 0);
    CHECK(count_lines_starting(bad.out, "PASS lemma-bad") == 7);

    auto js = run_cli("verify lemma-bc --n-max 4 --json");
    CHECK(js.exit_code == 0);
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["all_pass"] == true);

    SECTION("verify all --json emits a bare JSON array") {
        auto ja = run_cli("verify all --json --n-max 3 --k-max 2 --tri-k-max 2");
        CHECK(ja.exit_code == 0);
        auto arr = nlohmann::json::parse(ja.out);  // throws on text preamble
        REQUIRE(arr.is_array());
        CHECK(arr.size() == 11);
        for (const auto& rep : arr) CHECK(rep["all_pass"] == true);
    }

    SECTION("resource caps surface as SKIP with exit 3") {
        auto r = run_cli("verify thm-grid --n-max 6 --cap-faces 100");
        CHECK(r.exit_code == 3);
        CHECK(count_lines_starting(r.out, "SKIP thm-grid") >= 1);
        CHECK(r.out.find("FAIL") == std::string::npos);
    }
}

TEST_CASE("conjecture sweep prints the csv table", "[cli][verify]") {
    auto r = run_cli("conjecture --m-max 4 --n-max 4");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("m,n,betti,torsion_free\n") == 0);
    CHECK(count_lines_starting(r.out, "") >= 17);
    CHECK(r.out.find("4,4,0 0 2 1 0 0 0 0,true") != std::string::npos);
    CHECK(r.out.find("1,1,void,true") != std::string::npos);

    auto via_verify = run_cli("verify conjecture --m-max 2 --n-max 2");
    CHECK(via_verify.exit_code == 0);
    CHECK(via_verify.out.find("m,n,betti,torsion_free\n") == 0);
}

TEST_CASE("output redirection and config precedence", "[cli][config]") {
    std::string out_path = "cli_test_out.json";
    auto r = run_cli("homology grid2 --n 4 --out " + out_path);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream f(out_path);
    REQUIRE(f.good());
    nlohmann::json j;
    f >> j;
    CHECK(j["reduced_betti"] == nlohmann::json::array({0, 1, 0, 0}));
    f.close();
    std::remove(out_path.c_str());

    SECTION("config file sets caps, flags win over it") {
        std::string cfg_path = "cli_test_cfg.tmp";
        {
            std::ofstream cfg(cfg_path);
            cfg << "grid_n_max = 3\n";
        }
        auto limited = run_cli("verify thm-grid --config " + cfg_path);
        CHECK(count_lines_starting(limited.out, "PASS thm-grid") == 2);

        auto override_flag =
            run_cli("verify thm-grid --n-max 5 --config " + cfg_path);
        CHECK(count_lines_starting(override_flag.out, "PASS thm-grid") == 4);

        auto via_env = run_cli("verify thm-grid", "MORSETILINGS_CONFIG=" + cfg_path);
        CHECK(count_lines_starting(via_env.out, "PASS thm-grid") == 2);
        std::remove(cfg_path.c_str());
    }
    SECTION("unknown config keys are a usage error") {
        std::string cfg_path = "cli_test_bad_cfg.tmp";
        {
            std::ofstream cfg(cfg_path);
            cfg << "mystery = 1\n";
        }
        CHECK(run_cli("verify thm-grid --config " + cfg_path).exit_code == 2);
        std::remove(cfg_path.c_str());
    }
}

TEST_CASE("cli output is byte-stable", "[cli]") {
    auto a = run_cli("complex grid2 --n 4 --full-faces");
    auto b = run_cli("complex grid2 --n 4 --full-faces");
    CHECK(a.out == b.out);
    auto c = run_cli("family odd-alternate --n 2 --k 2 --json");
    auto d = run_cli("family odd-alternate --n 2 --k 2 --json");
    CHECK(c.out == d.out);
}
