#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

using Json = nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(LLC_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& f) { return std::string(LLC_TEST_DATA) + "/" + f; }

}  // namespace

TEST_CASE("tables") {
    auto r = run("tables --group Sp4 --weyl");
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["rows"].size() == 5);
    auto all = run("tables --group GSp4");
    REQUIRE(all.code == 0);
    auto j = Json::parse(all.out);
    for (auto k : {"root_datum", "weyl", "orbits", "parahoric"}) CHECK(j.contains(k));
    auto t = run("tables --group Sp4 --weyl --format table");
    CHECK(t.code == 0);
    CHECK(t.out.find("A1xA1  (1bar)(1bar)") != std::string::npos);
}

TEST_CASE("classify and packet") {
    auto r = run("packet --preset sp4-case-7biii-eta");
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["packet"]["size"] == 4);
    auto d = run("classify --descriptor " + data("mixed_sp4.json"));
    REQUIRE(d.code == 0);
    CHECK(Json::parse(d.out)["centralizer"]["case"] == "Sp4:7b");
    auto s = run("packet --preset sp4-case-7biii-eta --support '(-,+)'");
    REQUIRE(s.code == 0);
    CHECK(Json::parse(s.out)["cuspidal_support"]["levi"]["name"] == "SO5");
    auto res = run("packet --preset gsp4-case-4b-iv-eta2 --restrict --infinitesimal");
    REQUIRE(res.code == 0);
    auto rj = Json::parse(res.out);
    CHECK(rj["restriction"]["size"] == 4);
    CHECK(rj["infinitesimal"].size() == 4);
}

TEST_CASE("reduce") {
    auto r = run("reduce --group GSp4 --chi1 nu^2 --chi2 nu --theta 1");
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["case"] == "GSp4:1aiii");
    CHECK(j["length"] == 4);
    auto l = run("reduce --group GSp4 --labels x:0 --chi1 'nu*x' --chi2 x --theta 1");
    REQUIRE(l.code == 0);
    CHECK(Json::parse(l.out)["case"] == "GSp4:1ai");
    auto k = run("reduce --group GSp4 --levi Klingen --chi 1 --sigma-group GSp2 --sigma-id rho --sigma-central 1");
    REQUIRE(k.code == 0);
    CHECK(Json::parse(k.out)["length"] == 2);
}

TEST_CASE("fdeg") {
    auto r = run("fdeg --group GSp4 --rep pi_alpha_eta2 --q0 3");
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["value"] == "3/64*sqrt(3)");
    auto t = run("fdeg --group Sp4 --rep pi_alpha_theta --format table");
    CHECK(t.code == 0);
    CHECK(t.out.find("formal_degree: q/(q+1)^2") != std::string::npos);
}

TEST_CASE("stability") {
    auto r = run("stability --candidates " + data("candidates.json"));
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["minimal_stable_subsets"].size() == 2);
    auto n = run("stability --candidates " + data("candidates.json") + " --context nbhd-1");
    REQUIRE(n.code == 0);
    CHECK(Json::parse(n.out)["minimal_stable_subsets"].size() == 4);
}

TEST_CASE("selfcheck") {
    auto r = run("selfcheck --samples 100 --format table");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run("frobnicate").code == 64);
    CHECK(run("").code == 2);
    CHECK(run("fdeg --group Sp4").code == 2);
    CHECK(run("packet --descriptor " + data("broken.json")).code == 2);
    CHECK(run("packet --descriptor /nonexistent/file.json").code == 2);
    CHECK(run("classify --preset sp4-case-1 --group GSp4").code == 2);
    CHECK(run("reduce --group GSp4 --chi1 zz --chi2 1 --theta 1").code == 2);
    CHECK(run("tables --format xml").code == 2);
    CHECK(run("fdeg --group Sp4 --rep delta_eta2").code == 1);
    CHECK(run("packet --preset sp4-case-7biii-eta --support '+'").code == 1);
    auto v = run("--version");
    CHECK(v.code == 0);
    CHECK(!v.out.empty());
}
