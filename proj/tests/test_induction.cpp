#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "induction.hpp"
#include "serialize.hpp"

using namespace llc;

namespace {

ReducibilityReport reduce(const std::string& json) { return decide_reducibility(induced_from_json(Json::parse(json))); }

std::vector<std::string> labels(const ReducibilityReport& r) {
    std::vector<std::string> v;
    for (auto& c : r.constituents) v.push_back(c.instantiated);
    return v;
}

std::multiset<std::string> label_set(const ReducibilityReport& r) {
    auto v = labels(r);
    return {v.begin(), v.end()};
}

int count_if(const ReducibilityReport& r, bool Constituent::*flag) {
    int n = 0;
    for (auto& c : r.constituents) n += c.*flag;
    return n;
}

const Constituent& role(const ReducibilityReport& r, const std::string& name) {
    for (auto& c : r.constituents)
        if (c.role == name) return c;
    FAIL("no constituent with role " << name);
    return r.constituents.front();
}

}  // namespace

// Golden cases, transcribed from the classification of reducible induced representations.

TEST_CASE("golden 01: GSp4 1ai generic chi2") {
    auto r = reduce(R"({"group":"GSp4","labels":[{"name":"x"}],"chi1":"nu*x","chi2":"x","theta":"1"})");
    CHECK(r.case_tag == "GSp4:1ai");
    CHECK(r.length == 2);
    CHECK(labels(r) == std::vector<std::string>{"nu^{1/2}*x 1_GL2 x| 1", "nu^{1/2}*x St_GL2 x| 1"});
    CHECK(count_if(r, &Constituent::generic) == 1);
    CHECK(role(r, "st_gl2").generic);
}

TEST_CASE("golden 02: GSp4 1ai, e(chi2) > 0 gives J(nu chi2, chi2; theta)") {
    auto r = reduce(R"({"group":"GSp4","labels":[{"name":"x"}],"chi1":"nu^{5/4}*x","chi2":"nu^{1/4}*x","theta":"1"})");
    CHECK(r.case_tag == "GSp4:1ai");
    CHECK(role(r, "one_gl2").langlands_instantiated == "J(nu^{5/4}*x, nu^{1/4}*x; 1)");
}

TEST_CASE("golden 03: GSp4 1ai, e(chi2) = -3/4") {
    auto r = reduce(R"({"group":"GSp4","labels":[{"name":"x"}],"chi1":"nu^{1/4}*x","chi2":"nu^{-3/4}*x","theta":"1"})");
    CHECK(r.case_tag == "GSp4:1ai");
    // e < -1/2: J(nu^{-1/2} chi2^{-1} St; nu chi2^2 theta)
    CHECK(role(r, "st_gl2").langlands_instantiated == "J(nu^{1/4}*x^-1 St_GL2; nu^{-1/2}*x^2)");
    // -1/2 > e > -1: J(chi2^{-1}, nu chi2; nu chi2 theta)
    CHECK(role(r, "one_gl2").langlands_instantiated == "J(nu^{3/4}*x^-1, nu^{1/4}*x; nu^{1/4}*x)");
}

TEST_CASE("golden 04: GSp4 1aii") {
    auto r = reduce(R"({"group":"GSp4","labels":[{"name":"x"}],"chi1":"x","chi2":"nu","theta":"1"})");
    CHECK(r.case_tag == "GSp4:1aii");
    CHECK(r.length == 2);
    // e(chi1) = 0: chi1 x| nu^{1/2} theta 1_GSp2 = J(nu; chi1 x| theta)
    CHECK(role(r, "one_gsp2").langlands_instantiated->rfind("J(nu; ", 0) == 0);
    CHECK(role(r, "st_gsp2").ess_tempered);
}

TEST_CASE("golden 05: GSp4 1aiii") {
    auto r = reduce(R"({"group":"GSp4","chi1":"nu^2","chi2":"nu","theta":"1"})");
    CHECK(r.case_tag == "GSp4:1aiii");
    CHECK(r.length == 4);
    CHECK(label_set(r) == std::multiset<std::string>{"nu^{3/2} St_GSp4", "nu^{3/2} 1_GSp4",
                                                      "J(nu^2; nu^{1/2} St_GSp2)", "J(nu^{3/2} St_GL2; 1)"});
    CHECK(role(r, "st_gsp4").square_integrable);
    CHECK(count_if(r, &Constituent::square_integrable) == 1);
}

TEST_CASE("golden 06: GSp4 1aiv") {
    auto r = reduce(R"({"group":"GSp4","chi1":"nu*eta2","chi2":"eta2","theta":"1"})");
    CHECK(r.case_tag == "GSp4:1aiv");
    CHECK(r.length == 4);
    CHECK(label_set(r) == std::multiset<std::string>{"delta([eta2, nu*eta2], 1)", "J(nu^{1/2}*eta2 St_GL2; 1)",
                                                      "J(nu^{1/2}*eta2 St_GL2; eta2)", "J(nu*eta2; eta2 x| 1)"});
    CHECK(count_if(r, &Constituent::square_integrable) == 1);
    CHECK(role(r, "delta").square_integrable);
}

TEST_CASE("golden 07: GSp4 1bi") {
    auto r = reduce(R"({"group":"GSp4","chi1":"nu","chi2":"1","theta":"1"})");
    CHECK(r.case_tag == "GSp4:1bi");
    CHECK(r.length == 4);
    CHECK(label_set(r) ==
          std::multiset<std::string>{"tau(S, 1)", "tau(T, 1)", "J(nu; 1_F x| 1)", "J(nu^{1/2} St_GL2; 1)"});
    CHECK(count_if(r, &Constituent::ess_tempered) == 2);
    CHECK(role(r, "tau_S").ess_tempered);
    CHECK(role(r, "tau_T").ess_tempered);
}

TEST_CASE("golden 08: GSp4 1bii") {
    auto r = reduce(R"({"group":"GSp4","chi1":"nu","chi2":"nu","theta":"1"})");
    CHECK(r.case_tag == "GSp4:1bii");
    CHECK(r.length == 2);
    CHECK(role(r, "one_gsp2").langlands_instantiated == "J(nu; nu^{1/2} St_GSp2)");
    CHECK(role(r, "st_gsp2").langlands_instantiated == "J(nu, nu; 1)");
}

TEST_CASE("golden 09: GSp4 1biii") {
    auto r = reduce(R"({"group":"GSp4","chi1":"nu^{1/2}*eta","chi2":"nu^{-1/2}*eta","theta":"1"})");
    CHECK(r.case_tag == "GSp4:1biii");
    CHECK(r.length == 2);
    CHECK(role(r, "st_gl2").ess_tempered);
    CHECK_FALSE(role(r, "one_gl2").ess_tempered);
    // nu^{1/2} chi2 1_GL2 x| theta = J(nu chi2, nu chi2; chi2 theta)
    CHECK(role(r, "one_gl2").langlands_instantiated == "J(nu^{1/2}*eta, nu^{1/2}*eta; nu^{-1/2}*eta)");
}

TEST_CASE("golden 10: GSp4 torus, no nu-relation") {
    auto r = reduce(R"({"group":"GSp4","labels":[{"name":"x"},{"name":"y"}],"chi1":"x","chi2":"y","theta":"1"})");
    CHECK(r.case_tag == "irreducible");
    CHECK(r.length == 1);
}

TEST_CASE("golden 11: GSp4 Siegel at beta = 1/2") {
    auto r = reduce(
        R"({"group":"GSp4","levi":"Siegel","beta":"1/2","chi":"1","sigma":{"group":"GL2","id":"rho","central":"1","self_dual":true}})");
    CHECK(r.case_tag == "GSp4:2");
    CHECK(r.length == 2);
    auto& d = role(r, "delta");
    CHECK(d.generic);
    CHECK(d.square_integrable);
    CHECK(count_if(r, &Constituent::generic) == 1);
    CHECK_FALSE(role(r, "quotient").ess_tempered);
}

TEST_CASE("golden 12: GSp4 Siegel away from +-1/2 is irreducible") {
    auto r = reduce(
        R"({"group":"GSp4","levi":"Siegel","beta":"0","chi":"1","sigma":{"group":"GL2","id":"rho","central":"1","self_dual":true}})");
    CHECK(r.length == 1);
    auto r2 = reduce(
        R"({"group":"GSp4","levi":"Siegel","beta":"1/2","chi":"1","sigma":{"group":"GL2","id":"rho","central":"eta","self_dual":true}})");
    CHECK(r2.length == 1);
}

TEST_CASE("golden 13: GSp4 Klingen with chi = 1") {
    auto r = reduce(R"({"group":"GSp4","levi":"Klingen","chi":"1","sigma":{"group":"GSp2","id":"rho","central":"1"}})");
    CHECK(r.case_tag == "GSp4:3a");
    CHECK(r.length == 2);
    CHECK(count_if(r, &Constituent::ess_tempered) == 2);
    CHECK(r.constituents[0].instantiated != r.constituents[1].instantiated);
}

TEST_CASE("golden 14: GSp4 Klingen nu xi_o with xi_o rho = rho") {
    auto r = reduce(
        R"({"group":"GSp4","levi":"Klingen","chi":"nu*eta2","sigma":{"group":"GSp2","id":"rho","central":"1","twist_stable":["eta2"]}})");
    CHECK(r.case_tag == "GSp4:3b");
    CHECK(r.length == 2);
    CHECK(count_if(r, &Constituent::square_integrable) == 1);
    auto r2 = reduce(R"({"group":"GSp4","levi":"Klingen","chi":"nu*eta2","sigma":{"group":"GSp2","id":"rho","central":"1"}})");
    CHECK(r2.length == 1);
}

TEST_CASE("golden 15: Sp4 1a(i)") {
    auto r = reduce(R"({"group":"Sp4","labels":[{"name":"x"}],"chi1":"x","chi2":"eta2"})");
    CHECK(r.case_tag == "Sp4:1ai");
    CHECK(r.length == 2);
    CHECK(labels(r) == std::vector<std::string>{"x^-1 x| T^1_eta2", "x^-1 x| T^2_eta2"});
    CHECK_FALSE(r.notes.empty());
}

TEST_CASE("golden 16: Sp4 1a(ii)") {
    auto r = reduce(R"({"group":"Sp4","chi1":"eta2","chi2":"eta2"})");
    CHECK(r.case_tag == "Sp4:1aii");
    CHECK(r.length == 4);
    std::set<std::string> halves;
    for (auto& c : r.constituents) halves.insert(c.summand);
    CHECK(halves.size() == 2);
}

TEST_CASE("golden 17: Sp4 1biii") {
    auto r = reduce(R"({"group":"Sp4","chi1":"nu^2","chi2":"nu"})");
    CHECK(r.case_tag == "Sp4:1biii");
    CHECK(label_set(r) == std::multiset<std::string>{"nu^{3/2} St_Sp4", "nu^{3/2} 1_Sp4",
                                                      "J(nu^2; nu^{1/2} St_Sp2)", "J(nu^{3/2} St_GL2; 1)"});
}

TEST_CASE("golden 18: Sp4 1biv, both halves of length three") {
    auto r = reduce(R"({"group":"Sp4","chi1":"nu*eta2","chi2":"eta2"})");
    CHECK(r.case_tag == "Sp4:1biv");
    CHECK(r.length == 6);
    std::map<std::string, int> per_half;
    for (auto& c : r.constituents) per_half[c.summand]++;
    CHECK(per_half.size() == 2);
    for (auto& [k, n] : per_half) CHECK(n == 3);
    CHECK(count_if(r, &Constituent::square_integrable) == 2);
}

TEST_CASE("golden 19: Sp4 1ci") {
    auto r = reduce(R"({"group":"Sp4","chi1":"nu","chi2":"1"})");
    CHECK(r.case_tag == "Sp4:1ci");
    CHECK(r.length == 4);
    CHECK(label_set(r) ==
          std::multiset<std::string>{"tau", "tau'", "J(nu; 1_F x| 1_Sp2)", "J(nu^{1/2} St_GL2; 1)"});
    CHECK(count_if(r, &Constituent::ess_tempered) == 2);
}

TEST_CASE("golden 20: Sp4 Klingen and Siegel reducibility") {
    // chi of order 2, nontrivial on F_sigma, beta = 0
    auto r = reduce(
        R"({"group":"Sp4","levi":"Klingen","chi":"eta2","sigma":{"group":"Sp2","id":"sigma","central":"1","f_sigma":["1","eps"]}})");
    CHECK(r.case_tag == "Sp4:3b");
    CHECK(r.length == 2);
    // chi of order 2, trivial on F_sigma, beta = 1
    auto r2 = reduce(
        R"({"group":"Sp4","levi":"Klingen","chi":"nu*eta","sigma":{"group":"Sp2","id":"sigma","central":"1","f_sigma":["1","eps"]}})");
    CHECK(r2.case_tag == "Sp4:3c");
    CHECK(r2.length == 2);
    // self-dual rho with nontrivial central character at beta = 0
    auto r3 = reduce(
        R"({"group":"Sp4","levi":"Siegel","beta":"0","sigma":{"group":"GL2","id":"rho","central":"eta2","self_dual":true}})");
    CHECK(r3.case_tag == "Sp4:2b");
    CHECK(r3.length == 2);
    auto r4 = reduce(R"({"group":"Sp4","chi1":"nu","chi2":"nu"})");
    CHECK(r4.case_tag == "Sp4:1cii");
    CHECK(r4.length == 2);
}

TEST_CASE("Langlands quotient table, e(chi1) > 0 on the Klingen side") {
    auto r = reduce(R"({"group":"GSp4","labels":[{"name":"x"}],"chi1":"nu^{1/3}*x","chi2":"nu","theta":"1"})");
    CHECK(r.case_tag == "GSp4:1aii");
    CHECK(role(r, "one_gsp2").langlands_instantiated == "J(nu^{1/3}*x, nu; 1)");
}

TEST_CASE("Bernstein blocks") {
    auto one = SmoothChar(), e2 = SmoothChar::named("eta2");
    auto b1 = bernstein_block_J(one, SmoothChar::named("eta"));
    CHECK(b1.tag == "J1");
    CHECK(b1.j_group == "G^vee = GSp4");
    auto b3 = bernstein_block_J(e2, e2);
    CHECK(b3.tag == "J3");
    CHECK(b3.j_group == "GL2 x GL2/GL1");
    auto g = declare_label_group({{"z", 6, false}});
    auto z = SmoothChar::named("z", g);
    auto b4 = bernstein_block_J(z, z.inv());
    CHECK(b4.tag == "J4");
    CHECK(b4.j_group == "GL2 x GSp0");
    CHECK(bernstein_block_J(e2, SmoothChar::named("eta")).tag == "J2");
}

TEST_CASE("unipotent classes of constituents") {
    auto st = reduce(R"({"group":"GSp4","chi1":"nu^2","chi2":"nu","theta":"1"})");
    auto blk = bernstein_block_J(SmoothChar::nu(2), SmoothChar::nu(1));
    CHECK(unipotent_class_of_constituent(blk, role(st, "st_gsp4")).partition == std::vector<int>{4});

    auto bi = reduce(R"({"group":"GSp4","chi1":"nu","chi2":"1","theta":"1"})");
    auto b1 = bernstein_block_J(SmoothChar::nu(1), SmoothChar());
    auto tau = unipotent_class_of_constituent(b1, role(bi, "tau_T"));
    CHECK(tau.partition == std::vector<int>{2, 1, 1});
    CHECK(tau.enhancement == -1);
    CHECK(unipotent_class_of_constituent(b1, role(bi, "j_nu")).partition == std::vector<int>{1, 1, 1, 1});
}

namespace {

struct Sampler {
    LabelGroupPtr g = declare_label_group({{"x", 0, false}, {"z", 3, false}});
    std::mt19937 rng{20240601};

    SmoothChar one() {
        std::uniform_int_distribution<int> e(-4, 4), k(0, 5);
        SmoothChar c = SmoothChar::nu(mpq_class(e(rng), 2), g);
        switch (k(rng)) {
            case 0: break;
            case 1: c = c * SmoothChar::named("eta2", g); break;
            case 2: c = c * SmoothChar::named("eta2'", g); break;
            case 3: c = c * SmoothChar::named("eta", g); break;
            case 4: c = c * SmoothChar::named("x", g).pow(rng() % 2 ? 1 : -1); break;
            case 5: c = c * SmoothChar::named("z", g).pow(1 + rng() % 2); break;
        }
        return c;
    }
};

bool is_nu(const SmoothChar& c, int e) { return c == SmoothChar::nu(e, c.group()); }

// chi1 x chi2 x| theta is reducible iff chi_i = nu^{+-1} or chi1 = nu^{+-1} chi2^{+-1}
bool gsp4_oracle(const SmoothChar& a, const SmoothChar& b) {
    if (is_nu(a, 1) || is_nu(a, -1) || is_nu(b, 1) || is_nu(b, -1)) return true;
    for (int s : {1, -1})
        for (int t : {1, -1})
            if (a == SmoothChar::nu(s, a.group()) * b.pow(t)) return true;
    return false;
}

// on Sp4 a character of order two adds reducibility
bool sp4_oracle(const SmoothChar& a, const SmoothChar& b) { return gsp4_oracle(a, b) || a.order() == 2 || b.order() == 2; }

}  // namespace

TEST_CASE("10000 random torus inductions: exhaustive, Weyl-invariant, matching the criterion") {
    Sampler s;
    int reducible = 0, unsupported = 0;
    for (int i = 0; i < 10000; ++i) {
        InducedRep rep;
        rep.group = i % 2 ? Group::Sp4 : Group::GSp4;
        rep.levi = LeviKind::Torus;
        rep.chi1 = s.one();
        rep.chi2 = s.one();
        rep.theta = rep.group == Group::GSp4 ? s.one() : SmoothChar(s.g);
        ReducibilityReport r;
        try {
            r = decide_reducibility(rep);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::Unsupported);
            ++unsupported;
            continue;
        }
        bool oracle = rep.group == Group::GSp4 ? gsp4_oracle(rep.chi1, rep.chi2) : sp4_oracle(rep.chi1, rep.chi2);
        INFO(group_name(rep.group) << " " << rep.chi1.str() << " x " << rep.chi2.str() << " -> " << r.case_tag);
        CHECK((r.length > 1) == oracle);
        CHECK((r.case_tag != "irreducible") == oracle);
        reducible += oracle;

        auto matched = matched_cases(rep);
        CHECK(matched.size() <= 1);
        if (!matched.empty()) CHECK(matched.front() == r.case_tag);

        for (auto& w : weyl_conjugates(rep)) {
            auto rw = decide_reducibility(w);
            CHECK(rw.case_tag == r.case_tag);
            CHECK(rw.length == r.length);
            CHECK(label_set(rw) == label_set(r));
        }
        if (rep.group == Group::GSp4) CHECK(gsp4_torus_reducible_criterion(rep.chi1, rep.chi2) == oracle);
    }
    CHECK(reducible > 500);
    CHECK(unsupported == 0);
}
