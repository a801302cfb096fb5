#include <doctest.h>

#include <set>

#include "selfcheck.hpp"

using namespace llc;

TEST_CASE("self-check suite passes") {
    auto results = run_selfcheck(500);
    CHECK(results.size() > 20);
    std::set<std::string> modules;
    for (auto& r : results) {
        INFO(r.module << " / " << r.name << ": " << r.detail);
        CHECK(r.ok);
        modules.insert(r.module);
    }
    for (auto m : {"qfield", "rootdata", "characters", "finite_reductive", "supercuspidal", "induction", "galois",
                   "stability"})
        CHECK(modules.count(m));
}

TEST_CASE("self-check is reproducible for a fixed seed") {
    auto a = run_selfcheck(100, 7), b = run_selfcheck(100, 7);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].ok == b[i].ok);
    }
}
