#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

// Drives the installed binary end to end. LANGFIB_CLI_PATH is injected by the
// build so the test always runs the executable it was built with.

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + LANGFIB_CLI_PATH " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
    const int rc = pclose(f);
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

json run_json(const std::string& args, int expect_exit = 0) {
    auto r = run(args + " --format json");
    REQUIRE(r.exit_code == expect_exit);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("rank one table verifies against its reference") {
    auto j = run_json("sl2-table --q 3 --level 8 --verify");
    CHECK(j.at("matches_reference") == true);
    CHECK(j.at("rows").size() == 7);
    for (const auto& row : j.at("rows")) {
        CHECK(row.size() == 7);
        CHECK(row.at(6) == "yes");
        // headline identity per row: deg_phi / cok = deg_over_cok
        CHECK(row.at(4).get<long long>() ==
              row.at(3).get<long long>() * row.at(5).get<long long>());
    }
    // the ramified preset cannot realize the unramified-type rows, so a
    // strict verify reports the gap through exit code 1
    auto jr = run_json("sl2-table --q 3 --level 8 --ramified --verify", 1);
    CHECK(jr.at("matches_reference") == false);
    CHECK(jr.at("mismatch").get<std::string>().find("not realizable") != std::string::npos);
    for (const auto& row : jr.at("rows"))
        if (row.at(0) == "IV(a)") CHECK(row.at(1) == 4);
}

TEST_CASE("output formats") {
    auto md = run("sl2-table --q 3 --level 2 --format md");
    auto csv = run("sl2-table --q 3 --level 2 --format csv");
    auto js = run("sl2-table --q 3 --level 2 --format json");
    CHECK(md.exit_code == 0);
    CHECK(csv.exit_code == 0);
    CHECK(js.exit_code == 0);
    CHECK(md.out.find('|') != std::string::npos);
    CHECK(csv.out.find(',') != std::string::npos);
    CHECK(json::parse(js.out).contains("rows"));
    CHECK(md.out != csv.out);

    // environment default, overridable by the flag
    auto env_js = run("sl2-table --q 3 --level 2", "LANGFIB_FORMAT=json");
    CHECK(env_js.out == js.out);
    auto env_override = run("sl2-table --q 3 --level 2 --format csv", "LANGFIB_FORMAT=json");
    CHECK(env_override.out == csv.out);
    CHECK(run("sl2-table --q 3 --level 2", "LANGFIB_FORMAT=banana").exit_code == 2);
}

TEST_CASE("repeated runs are byte identical") {
    auto a = run("ff-verify --q 3 --group sl2 --format json");
    auto b = run("ff-verify --q 3 --group sl2 --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    REQUIRE(!a.out.empty());

    auto j = json::parse(a.out);
    CHECK(j.at("aggregate_ok") == true);
    CHECK(j.at("unknown") == 4);
    CHECK(j.at("orthogonality_error").get<double>() < 1e-9);
}

TEST_CASE("character class and base change degree of catalog forms") {
    CHECK(run_json("omega --form GL_2").at("trivial") == false);
    CHECK(run_json("omega --form GL_3").at("trivial") == true);
    auto u3 = run_json("omega --form U_3");
    CHECK(u3.at("trivial") == true);
    CHECK(u3.at("galois_trivialized") == true);
    CHECK(run_json("omega --form PGL_2").at("trivial") == false);

    CHECK(run_json("bc-degree --form U_2").at("degree") == 1);
    CHECK(run_json("bc-degree --form U_3").at("degree") == 2);
    CHECK(run_json("bc-degree --form U_4").at("degree") == 1);
    // split forms have no quadratic twist to measure
    CHECK(run("bc-degree --form GL_2 --format json").exit_code == 2);
}

TEST_CASE("local degrees") {
    CHECK(run_json("local-degree --map z+1/z --at=-1").at("degree") == 2);
    CHECK(run_json("local-degree --map z+1/z --at=zeta8").at("degree") == 1);
    CHECK(run_json("local-degree --map w^2-2 --at=2").at("degree") == 1);
    CHECK(run_json("local-degree --map z^2 --at=1").at("degree") == 1);
    CHECK(run("local-degree --map 5 --at=1").exit_code == 2);
}

TEST_CASE("signature multiplicities and orbit tables") {
    auto um = run_json("unitary-mult --chars '[[1,1],[3,0],[2,2],[0,3]]'");
    CHECK(um.at("n") == 4);
    CHECK(um.at("pairs") == 1);
    CHECK(um.at("fixed") == 2);
    CHECK(um.at("total") == 4);
    long long dim_sum = 0;
    for (const auto& row : um.at("rows")) dim_sum += row.at(2).get<long long>();
    CHECK(dim_sum == um.at("total").get<long long>());

    auto orb = run_json("orbits --type B_2");
    CHECK(orb.at("weyl_order") == 8);
    CHECK(orb.at("total") == 4);
    CHECK(orb.at("rows").size() == 3);
    for (const auto& row : orb.at("rows"))
        CHECK(row.at(1).get<long long>() * row.at(2).get<long long>() == 8);

    auto ps = run_json("padic-split --n 5");
    CHECK(ps.at("plus") == 16);
    CHECK(ps.at("minus") == 16);
    CHECK(ps.at("total") == 32);
    CHECK(run("padic-split --n 0").exit_code == 2);
}

TEST_CASE("tate accepts flag and stdin input equally") {
    const std::string module = R"({"kind":"lattice","action":[[-1]],"order":2})";
    auto flag = run("tate --n 1 --chars '" + module + "' --format json");
    REQUIRE(flag.exit_code == 0);
    auto j = json::parse(flag.out);
    CHECK(j.at("order") == 2);
    CHECK(j.at("group") == "Z/2");
    auto even = run_json("tate --n 0 --chars '" + module + "'");
    CHECK(even.at("order") == 1);

    const std::string path = "/tmp/langfib_tate_module.json";
    std::ofstream(path) << module;
    auto piped = run("tate --n 1 --format json < " + path);
    CHECK(piped.exit_code == 0);
    CHECK(piped.out == flag.out);
    std::remove(path.c_str());

    auto fin = run_json(
        R"(tate --n 1 --chars '{"kind":"finite","factors":[2,2],"action":[[1,1],[0,1]],"order":2}')");
    CHECK(fin.at("order") == 1);
}

TEST_CASE("lift counts from parameter descriptions") {
    auto gl = run_json(R"(lift-count --chars '{"setting":"GL","n":3,"tags":[{},{},{}]}')");
    CHECK(gl.at("lift_count") == 8);
    CHECK(gl.at("rows").size() == 3);

    auto mult = run_json(R"(lift-count --chars '{"setting":"GL","n":3,"tags":[{"mult":3}]}')");
    CHECK(mult.at("lift_count") == 4);

    auto u = run_json(
        R"(lift-count --chars '{"setting":"U","n":2,"tags":[{"dim":2,"duality":"orth"}]}')");
    CHECK(u.at("lift_count") == 1);

    auto pair = run_json(
        R"(lift-count --chars '{"setting":"GL","n":2,"tags":[{"id":"a","galois":"pair:b"},{"id":"b","galois":"pair:a"}]}')");
    CHECK(pair.at("lift_count") == 1);
    CHECK(pair.at("rows").size() == 1);
    CHECK(pair.at("rows")[0].at(2) == "swap_pair");

    CHECK(run(R"(lift-count --chars '{"setting":"GL","n":5,"tags":[{}]}')").exit_code == 2);
}

TEST_CASE("weyl facts") {
    auto d4 = run_json("weyl --form D_4");
    CHECK(d4.at("order") == 192);
    CHECK(d4.at("minus_one_in_weyl") == true);
    CHECK(d4.at("w0_is_minus_identity") == true);
    auto a2 = run_json("weyl --form A_2");
    CHECK(a2.at("order") == 6);
    CHECK(a2.at("minus_one_in_weyl") == false);
    CHECK(a2.at("duality_trivial") == false);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("").exit_code == 2);
    CHECK(run("sl2-table --q 4 --level 8").exit_code == 2);
    CHECK(run("sl2-table --q 3 --level 3").exit_code == 2);
    CHECK(run("ff-verify --q 5 --group gl2").exit_code == 2);
    CHECK(run("omega --form E_8").exit_code == 2);
    CHECK(run("tate --n 0 --chars not-json").exit_code == 2);
    CHECK(run("weyl --form A_2 --format yaml").exit_code == 2);
}
