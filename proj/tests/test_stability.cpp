#include <doctest.h>

#include <set>

#include "stability.hpp"

using namespace llc;

namespace {

bool stable_oracle(const DistVector& v, StabilityContext ctx) {
    for (auto& [sym, c] : v.terms) {
        bool zero = true;
        for (auto& [k, x] : c) zero = zero && x == 0;
        if (zero) continue;
        if (sym.find("unst") != std::string::npos) return false;
        if (ctx == StabilityContext::NearS && sym == "D_(F_A1xA1,G_sgn)") return false;
    }
    return true;
}

std::vector<unsigned> brute_force(const std::vector<Candidate>& cs, StabilityContext ctx) {
    unsigned n = cs.size();
    std::vector<unsigned> stable;
    for (unsigned m = 1; m < (1u << n); ++m) {
        DistVector s;
        for (unsigned i = 0; i < n; ++i)
            if (m >> i & 1) s += cs[i].vector;
        if (stable_oracle(s, ctx)) stable.push_back(m);
    }
    std::vector<unsigned> minimal;
    for (unsigned m : stable) {
        bool ok = true;
        for (unsigned f : stable)
            if (f != m && (f & m) == f) ok = false;
        if (ok) minimal.push_back(m);
    }
    return minimal;
}

std::set<unsigned> masks(const std::vector<std::vector<int>>& v) {
    std::set<unsigned> out;
    for (auto& s : v) {
        unsigned m = 0;
        for (int i : s) m |= 1u << i;
        out.insert(m);
    }
    return out;
}

std::set<std::set<std::string>> by_label(const std::vector<Candidate>& cs, const std::vector<std::vector<int>>& v) {
    std::set<std::set<std::string>> out;
    for (auto& s : v) {
        std::set<std::string> l;
        for (int i : s) l.insert(cs[i].label);
        out.insert(l);
    }
    return out;
}

}  // namespace

TEST_CASE("basis change matrices are inverse") {
    auto f = st_unst_forward(), g = st_unst_inverse();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpq_class s = 0;
            for (int k = 0; k < 2; ++k) s += f[i][k] * g[k][j];
            CHECK(s == (i == j ? 1 : 0));
        }
    auto b = dist_basis();
    CHECK(b.stable.size() == 6);
    CHECK(b.unstable == std::vector<std::string>{"D_A1xA1^unst"});
}

TEST_CASE("minimal stable subsets agree with exhaustive search") {
    for (int qm : {1, 3})
        for (auto cv : {SignConvention::Eta2Plus, SignConvention::Eta2Minus})
            for (auto ctx : {StabilityContext::NearOne, StabilityContext::NearS}) {
                CharacterOptions o{cv, qm};
                for (auto cs : {gsp4_mixed_candidates(o), sp4_mixed_candidates(o)}) {
                    auto got = minimal_stable_subsets(cs, ctx);
                    auto want = brute_force(cs, ctx);
                    CHECK(masks(got) == std::set<unsigned>(want.begin(), want.end()));
                }
            }
}

TEST_CASE("the mixed packet is the stable combination near s") {
    auto cs = gsp4_mixed_candidates();
    auto got = by_label(cs, minimal_stable_subsets(cs, StabilityContext::NearS));
    CHECK(got == std::set<std::set<std::string>>{{"delta(eta2)", "pi_alpha(eta2)"}, {"delta(eta2')", "pi_alpha(eta2')"}});
    auto sp = sp4_mixed_candidates();
    auto got_sp = by_label(sp, minimal_stable_subsets(sp, StabilityContext::NearS));
    CHECK(got_sp.size() == 2);
    for (auto& s : got_sp) CHECK(s.size() == 4);
    CHECK(got_sp.count({"pi_1(eta2)", "pi_2(eta2)", "pi_alpha_plus(eta2)", "pi_alpha_minus(eta2)"}));
}

TEST_CASE("single members are never stable") {
    for (auto ctx : {StabilityContext::NearOne, StabilityContext::NearS}) {
        for (auto& c : gsp4_mixed_candidates()) CHECK_FALSE(is_stable(c.vector, ctx));
        for (auto& c : sp4_mixed_candidates()) CHECK_FALSE(is_stable(c.vector, ctx));
    }
}

TEST_CASE("sign convention and q mod 4 do not change the stable subsets") {
    for (auto ctx : {StabilityContext::NearOne, StabilityContext::NearS}) {
        auto ref_g = gsp4_mixed_candidates();
        auto ref_s = sp4_mixed_candidates();
        auto rg = by_label(ref_g, minimal_stable_subsets(ref_g, ctx));
        auto rs = by_label(ref_s, minimal_stable_subsets(ref_s, ctx));
        for (int qm : {1, 3})
            for (auto cv : {SignConvention::Eta2Plus, SignConvention::Eta2Minus}) {
                CharacterOptions o{cv, qm};
                auto g = gsp4_mixed_candidates(o);
                auto s = sp4_mixed_candidates(o);
                CHECK(by_label(g, minimal_stable_subsets(g, ctx)) == rg);
                CHECK(by_label(s, minimal_stable_subsets(s, ctx)) == rs);
            }
    }
}

TEST_CASE("eta2 and eta2' carry opposite signs") {
    for (int qm : {1, 3})
        for (auto cv : {SignConvention::Eta2Plus, SignConvention::Eta2Minus}) {
            CharacterOptions o{cv, qm};
            CHECK(sign_of("eta2", o) == -sign_of("eta2'", o));
        }
    CHECK_THROWS_AS(sign_of("eta", {}), Error);
}

TEST_CASE("contexts and limits") {
    CHECK(parse_context("nbhd-1") == StabilityContext::NearOne);
    CHECK(parse_context("s") == StabilityContext::NearS);
    CHECK_THROWS_AS(parse_context("near"), Error);
    std::vector<Candidate> many(21, gsp4_mixed_candidates().front());
    CHECK_THROWS_AS(minimal_stable_subsets(many, StabilityContext::NearS), Error);
    DistVector z;
    z.add("D_e^st", "c", 1);
    z += z.scaled(-1);
    CHECK(z.is_zero());
}
