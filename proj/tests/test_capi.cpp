#include <doctest.h>
#include <json.hpp>

#include <cstring>
#include <string>

#include "llc/llc.h"

using Json = nlohmann::json;

namespace {

struct Ctx {
    llc_context* c = nullptr;
    Ctx() { REQUIRE(llc_context_new(&c) == LLC_OK); }
    ~Ctx() { llc_context_free(c); }
};

struct Desc {
    llc_descriptor* d = nullptr;
    ~Desc() { llc_descriptor_free(d); }
};

struct QH {
    llc_qhalf* x = nullptr;
    ~QH() { llc_qhalf_free(x); }
};

}  // namespace

TEST_CASE("version and status names") {
    CHECK(std::strlen(llc_version()) > 0);
    CHECK(std::string(llc_status_name(LLC_OK)) == "Ok");
    CHECK(std::string(llc_status_name(LLC_MALFORMED_DESCRIPTOR)) == "MalformedDescriptor");
    CHECK(std::string(llc_status_name(LLC_NULL_ARGUMENT)) == "NullArgument");
}

TEST_CASE("null arguments") {
    Ctx c;
    const char* out = nullptr;
    CHECK(llc_context_new(nullptr) == LLC_NULL_ARGUMENT);
    CHECK(llc_tables(c.c, "Sp4", "weyl", nullptr) == LLC_NULL_ARGUMENT);
    CHECK(llc_tables(nullptr, "Sp4", "weyl", &out) == LLC_NULL_ARGUMENT);
    CHECK(llc_packet(c.c, nullptr, &out) == LLC_NULL_ARGUMENT);
    CHECK(llc_reduce(c.c, nullptr, &out) == LLC_NULL_ARGUMENT);
    llc_descriptor_free(nullptr);
    llc_qhalf_free(nullptr);
    llc_context_free(nullptr);
}

TEST_CASE("tables") {
    Ctx c;
    const char* out = nullptr;
    REQUIRE(llc_tables(c.c, "Sp4", "weyl", &out) == LLC_OK);
    auto j = Json::parse(out);
    CHECK(j["rows"].size() == 5);
    REQUIRE(llc_tables(c.c, "GSp4", "presets", &out) == LLC_OK);
    CHECK(Json::parse(out)["rows"].size() == 25);
    CHECK(llc_tables(c.c, "Sp4", "nonsense", &out) == LLC_INVALID_OPERAND);
    CHECK(std::strlen(llc_last_error(c.c)) > 0);
    CHECK(llc_tables(c.c, "GL7", "weyl", &out) != LLC_OK);
}

TEST_CASE("descriptors and packets") {
    Ctx c;
    Desc d;
    const char* out = nullptr;
    REQUIRE(llc_descriptor_preset(c.c, "sp4-case-7biii-eta", &d.d) == LLC_OK);
    REQUIRE(llc_packet(c.c, d.d, &out) == LLC_OK);
    auto j = Json::parse(out);
    CHECK(j["packet"]["members"].size() == 4);
    CHECK(j["centralizer"]["S_phi_rank"] == 2);
    REQUIRE(llc_cuspidal_support(c.c, d.d, "(-,+)", &out) == LLC_OK);
    CHECK(Json::parse(out)["levi"]["name"] == "SO5");
    CHECK(llc_cuspidal_support(c.c, d.d, "+", &out) == LLC_INVALID_ENHANCEMENT);
    CHECK(llc_restrict_to_sp4(c.c, d.d, &out) == LLC_NOT_APPLICABLE);

    REQUIRE(llc_descriptor_json(c.c, d.d, &out) == LLC_OK);
    Desc d2;
    REQUIRE(llc_descriptor_parse(c.c, out, &d2.d) == LLC_OK);
    REQUIRE(llc_centralizer(c.c, d2.d, &out) == LLC_OK);
    CHECK(Json::parse(out)["case"] == "Sp4:7b");

    Desc bad;
    CHECK(llc_descriptor_parse(c.c, "{\"group\":\"Sp4\"}", &bad.d) == LLC_MALFORMED_DESCRIPTOR);
    CHECK(bad.d == nullptr);
    CHECK(llc_descriptor_preset(c.c, "no-such-preset", &bad.d) != LLC_OK);
}

TEST_CASE("infinitesimal parameter and restriction") {
    Ctx c;
    Desc d;
    const char* out = nullptr;
    REQUIRE(llc_descriptor_preset(c.c, "gsp4-case-4b-iv-eta2", &d.d) == LLC_OK);
    REQUIRE(llc_infinitesimal(c.c, d.d, &out) == LLC_OK);
    CHECK(Json::parse(out).size() == 4);
    REQUIRE(llc_restrict_to_sp4(c.c, d.d, &out) == LLC_OK);
    CHECK(Json::parse(out)["members"].size() == 4);
}

TEST_CASE("reduce") {
    Ctx c;
    const char* out = nullptr;
    REQUIRE(llc_reduce(c.c, R"({"group":"GSp4","chi1":"nu^2","chi2":"nu","theta":"1"})", &out) == LLC_OK);
    auto j = Json::parse(out);
    CHECK(j["case"] == "GSp4:1aiii");
    CHECK(j["length"] == 4);
    CHECK(llc_reduce(c.c, R"({"group":"GSp4","chi1":"zz","chi2":"1","theta":"1"})", &out) ==
          LLC_MALFORMED_DESCRIPTOR);
    CHECK(llc_reduce(c.c, "not json", &out) == LLC_MALFORMED_DESCRIPTOR);
}

TEST_CASE("formal degrees") {
    Ctx c;
    const char* out = nullptr;
    REQUIRE(llc_fdeg(c.c, "GSp4", "pi_alpha_eta2", 3, &out) == LLC_OK);
    auto j = Json::parse(out);
    CHECK(j["value"] == "3/64*sqrt(3)");
    CHECK(j["formal_degree"] == "q^{3/2}/(2*(q-1)*(q+1)^2)");
    REQUIRE(llc_fdeg(c.c, "GSp4", "delta_eta2", 0, &out) == LLC_OK);
    CHECK(Json::parse(out)["formal_degree"] == "q^{3/2}/(2*(q-1)*(q+1)^2)");
    CHECK(llc_fdeg(c.c, "Sp4", "delta_eta2", 0, &out) == LLC_NOT_APPLICABLE);
    CHECK(llc_fdeg(c.c, "Sp4", "pi_S_theta", 0, &out) == LLC_INCOMPLETE_DATA);
    CHECK(llc_fdeg(c.c, "Sp4", "nope", 0, &out) == LLC_INVALID_OPERAND);
}

TEST_CASE("stability") {
    Ctx c;
    const char* out = nullptr;
    const char* in = R"({"q_mod4":3,"context":"nbhd-s","candidates":[
        {"label":"delta","eta":"eta2"},{"label":"pi_alpha","eta":"eta2"},
        {"label":"delta","eta":"eta2'"},{"label":"pi_alpha","eta":"eta2'"}]})";
    REQUIRE(llc_stability(c.c, in, &out) == LLC_OK);
    auto j = Json::parse(out);
    CHECK(j["minimal_stable_subsets"].size() == 2);
    CHECK(llc_stability(c.c, R"({"q_mod4":2,"candidates":[]})", &out) == LLC_INVALID_OPERAND);
}

TEST_CASE("qhalf handles") {
    Ctx c;
    QH a, b, s;
    const char* out = nullptr;
    REQUIRE(llc_qhalf_parse(c.c, "q^2-1", &a.x) == LLC_OK);
    REQUIRE(llc_qhalf_parse(c.c, "q+1", &b.x) == LLC_OK);
    REQUIRE(llc_qhalf_arith(c.c, a.x, b.x, LLC_QDIV, &s.x) == LLC_OK);
    REQUIRE(llc_qhalf_str(c.c, s.x, &out) == LLC_OK);
    CHECK(std::string(out) == "q-1");
    REQUIRE(llc_qhalf_factored(c.c, a.x, &out) == LLC_OK);
    CHECK(std::string(out) == "(q-1)*(q+1)");
    REQUIRE(llc_qhalf_eval(c.c, a.x, 3, &out) == LLC_OK);
    CHECK(std::string(out) == "8");
    QH one, z;
    REQUIRE(llc_qhalf_parse(c.c, "1/(q-1)", &one.x) == LLC_OK);
    CHECK(llc_qhalf_eval(c.c, one.x, 1, &out) == LLC_EVALUATION_POLE);
    REQUIRE(llc_qhalf_parse(c.c, "0", &z.x) == LLC_OK);
    QH r;
    CHECK(llc_qhalf_arith(c.c, a.x, z.x, LLC_QDIV, &r.x) == LLC_INVALID_OPERAND);
    CHECK(llc_qhalf_parse(c.c, "q^(", &r.x) == LLC_INVALID_OPERAND);
    QH t;
    REQUIRE(llc_qhalf_parse(c.c, "q-1", &t.x) == LLC_OK);
    CHECK(llc_qhalf_equal(s.x, t.x) == 1);
    CHECK(llc_qhalf_equal(a.x, t.x) == 0);
}

TEST_CASE("selfcheck through the C API") {
    Ctx c;
    const char* out = nullptr;
    int failures = -1;
    REQUIRE(llc_selfcheck(c.c, 200, &out, &failures) == LLC_OK);
    CHECK(failures == 0);
    CHECK(Json::parse(out)["checks"].size() > 20);
}
