#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "rootdata.hpp"

using namespace llc;

namespace {

std::set<Vec> as_set(const std::vector<Vec>& v) { return {v.begin(), v.end()}; }

// 2x2 signed permutation matrices
std::vector<Mat> signed_perms() {
    std::vector<Mat> out;
    for (int swap = 0; swap < 2; ++swap)
        for (int s0 : {1, -1})
            for (int s1 : {1, -1}) {
                Mat m(2, Vec(2, 0));
                m[swap ? 1 : 0][0] = s0;
                m[swap ? 0 : 1][1] = s1;
                out.push_back(m);
            }
    return out;
}

std::string signed_cycle_type(const Mat& m) {
    if (m[0][0] != 0) {
        int neg = (m[0][0] < 0) + (m[1][1] < 0);
        return neg == 0 ? "(1)(1)" : neg == 1 ? "(1)(1bar)" : "(1bar)(1bar)";
    }
    return m[1][0] * m[0][1] > 0 ? "(2)" : "(2bar)";
}

long det(const Mat& m) {
    int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    long d = 0;
    for (int j = 0; j < n; ++j) {
        Mat minor;
        for (int i = 1; i < n; ++i) {
            Vec row;
            for (int k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        d += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
    }
    return d;
}

// gcd of all k x k minors of a square matrix
long minor_gcd(const Mat& m, int k) {
    int n = static_cast<int>(m.size());
    long g = 0;
    std::vector<int> rows(n), cols(n);
    for (int rmask = 0; rmask < (1 << n); ++rmask) {
        if (__builtin_popcount(rmask) != k) continue;
        for (int cmask = 0; cmask < (1 << n); ++cmask) {
            if (__builtin_popcount(cmask) != k) continue;
            Mat s;
            for (int i = 0; i < n; ++i) {
                if (!(rmask >> i & 1)) continue;
                Vec row;
                for (int j = 0; j < n; ++j)
                    if (cmask >> j & 1) row.push_back(m[i][j]);
                s.push_back(row);
            }
            g = std::gcd(g, std::abs(det(s)));
        }
    }
    return g;
}

// nontrivial invariant factors through determinantal divisors
std::vector<int> torsion_oracle(const Mat& m) {
    std::vector<int> out;
    long prev = 1;
    for (int k = 1; k <= static_cast<int>(m.size()); ++k) {
        long d = minor_gcd(m, k);
        if (d == 0) break;
        long f = d / prev;
        if (f > 1) out.push_back(static_cast<int>(f));
        prev = d;
    }
    return out;
}

// dual partition
std::vector<int> transpose(const std::vector<int>& p) {
    std::vector<int> t;
    for (int i = 1; i <= (p.empty() ? 0 : p[0]); ++i) {
        int c = 0;
        for (int x : p) c += x >= i;
        t.push_back(c);
    }
    return t;
}

// orbit dimensions from the centralizer formulas for so(2n+1) and sp(2n)
int orbit_dim(const std::vector<int>& p, bool orthogonal) {
    int n = std::accumulate(p.begin(), p.end(), 0);
    int sq = 0, odd = 0;
    for (int x : transpose(p)) sq += x * x;
    for (int x : p) odd += x % 2;
    int dim_g = orthogonal ? n * (n - 1) / 2 : n * (n + 1) / 2;
    int cent = orthogonal ? (sq - odd) / 2 : (sq + odd) / 2;
    return dim_g - cent;
}

}  // namespace

TEST_CASE("Sp4 roots and simple roots") {
    auto rd = build_root_datum(Group::Sp4);
    std::vector<Vec> expect = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {2, 0}, {-2, 0}, {0, 2}, {0, -2}};
    CHECK(as_set(rd.roots) == as_set(expect));
    CHECK(rd.roots[rd.alpha] == Vec{1, -1});
    CHECK(rd.roots[rd.beta] == Vec{0, 2});
    CHECK(rd.root_name(rd.alpha) == "e1-e2");
    CHECK(rd.root_name(rd.beta) == "2e2");
}

TEST_CASE("GSp4 simple roots") {
    auto rd = build_root_datum(Group::GSp4);
    CHECK(rd.roots.size() == 8);
    CHECK(rd.roots[rd.alpha] == Vec{0, 1, -1});
    CHECK(rd.roots[rd.beta] == Vec{-1, 0, 2});
    CHECK(rd.root_name(rd.beta) == "-e0+2e2");
}

TEST_CASE("pairing of every root with its coroot is 2") {
    for (auto g : {Group::Sp4, Group::GSp4}) {
        auto rd = build_root_datum(g);
        REQUIRE(rd.roots.size() == rd.coroots.size());
        for (size_t i = 0; i < rd.roots.size(); ++i) CHECK(dot(rd.roots[i], rd.coroots[i]) == 2);
        // the reflections preserve the root system
        for (size_t i = 0; i < rd.roots.size(); ++i)
            for (auto& r : rd.roots) CHECK(rd.find_root(rd.reflect(static_cast<int>(i), r)) >= 0);
    }
}

TEST_CASE("GSp4 self-duality") {
    auto rd = build_root_datum(Group::GSp4);
    CHECK(self_duality_map(Group::GSp4, {0, 1, 0}) == Vec{-1, 0, 0});
    CHECK(self_duality_map(Group::GSp4, rd.roots[rd.alpha]) == rd.coroots[rd.beta]);
    CHECK(self_duality_map(Group::GSp4, rd.roots[rd.beta]) == rd.coroots[rd.alpha]);
    for (int i = 0; i < 3; ++i) {
        Vec e(3, 0);
        e[i] = 1;
        CHECK(self_duality_inverse(Group::GSp4, self_duality_map(Group::GSp4, e)) == e);
        CHECK(self_duality_map(Group::GSp4, self_duality_inverse(Group::GSp4, e)) == e);
    }
    CHECK_THROWS_AS(self_duality_map(Group::Sp4, {1, 0}), Error);
}

TEST_CASE("Weyl classes against brute-force conjugacy") {
    auto perms = signed_perms();
    std::map<std::string, int> oracle;
    std::set<Mat> seen;
    for (auto& m : perms) {
        if (seen.count(m)) continue;
        std::set<Mat> cls;
        for (auto& g : perms) {
            Mat gt = mat_transpose(g);  // inverse of a signed permutation
            cls.insert(mat_mul(mat_mul(g, m), gt));
        }
        seen.insert(cls.begin(), cls.end());
        oracle[signed_cycle_type(m)] = static_cast<int>(cls.size());
    }
    CHECK(oracle.size() == 5);
    for (auto g : {Group::Sp4, Group::GSp4}) {
        auto classes = weyl_classes(g);
        CHECK(classes.size() == 5);
        int total = 0;
        for (auto& c : classes) {
            total += c.size;
            REQUIRE(oracle.count(c.cycle_type));
            CHECK(oracle[c.cycle_type] == c.size);
        }
        CHECK(total == 8);
        CHECK(weyl_group(build_root_datum(g)).size() == 8);
    }
    std::map<std::string, std::string> names;
    for (auto& c : weyl_classes(Group::GSp4)) names[c.name] = c.cycle_type;
    CHECK(names["e"] == "(1)(1)");
    CHECK(names["A1"] == "(1)(1bar)");
    CHECK(names["A1~"] == "(2)");
    CHECK(names["A1xA1"] == "(1bar)(1bar)");
    CHECK(names["C2"] == "(2bar)");
}

TEST_CASE("torsion of the cocharacter coinvariants") {
    auto rd = build_root_datum(Group::GSp4);
    auto elements = weyl_group(rd);
    for (auto& c : weyl_classes(Group::GSp4)) {
        const WeylElement* w = nullptr;
        for (auto& e : elements)
            if (e.word == c.representative_word) w = &e;
        REQUIRE(w != nullptr);
        Mat m = mat_transpose(w->x);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = (i == j) - m[i][j];
        CHECK(torsion_oracle(m) == c.torsion);
        CHECK(c.torsion_rank() == (c.name == "A1xA1" ? 1 : 0));
    }
}

TEST_CASE("parahoric reductive quotients") {
    std::map<std::string, std::string> gsp, sp;
    for (auto& p : parahoric_quotients(Group::GSp4)) gsp[p.deleted_node] = p.quotient;
    for (auto& p : parahoric_quotients(Group::Sp4)) sp[p.deleted_node] = p.quotient;
    CHECK(gsp["alpha"] == "GSp_{2,2}(F_q)");
    CHECK(sp["beta"] == "Sp4(F_q)");
    CHECK(sp["alpha"] == "Sp2xSp2(F_q)");
    CHECK(sp["delta"] == "Sp4(F_q)");
    CHECK(canonical_vertex(Group::Sp4, "vertex:gamma") == "beta");
    CHECK(canonical_vertex(Group::Sp4, "vertex:beta") == "delta");
}

TEST_CASE("nilpotent orbits pair B2 and C2 partitions of equal dimension") {
    auto orbits = nilpotent_orbits();
    CHECK(orbits.size() == 4);
    std::set<std::vector<int>> b2, c2;
    for (auto& o : orbits) {
        CHECK(std::accumulate(o.b2_partition.begin(), o.b2_partition.end(), 0) == 5);
        CHECK(std::accumulate(o.c2_partition.begin(), o.c2_partition.end(), 0) == 4);
        CHECK(orbit_dim(o.b2_partition, true) == orbit_dim(o.c2_partition, false));
        b2.insert(o.b2_partition);
        c2.insert(o.c2_partition);
    }
    CHECK(b2.size() == 4);
    CHECK(c2.size() == 4);
    CHECK(orbits[0].levi.kind == LeviKind::Full);
    CHECK(orbits[3].levi.kind == LeviKind::Torus);
}

TEST_CASE("Levi labels and duality") {
    LeviLabel siegel{Group::GSp4, false, LeviKind::Siegel};
    CHECK(siegel.name() == "GL2xGSp0");
    CHECK(siegel.dual().kind == LeviKind::Klingen);
    CHECK(siegel.dual().dual() == siegel);
    LeviLabel sp_klingen{Group::Sp4, false, LeviKind::Klingen};
    CHECK(sp_klingen.name() == "GL1xSp2");
    CHECK(sp_klingen.dual().name() == "GL1xSO3");
    CHECK(levi_labels(Group::GSp4, false).size() == 4);
}

TEST_CASE("apartment facets") {
    auto f = apartment_facets();
    CHECK(f.size() == 7);
    int vertices = 0;
    for (auto& x : f) vertices += x.kind == "vertex";
    CHECK(vertices == 3);
}
