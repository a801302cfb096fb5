#include "rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace llc {

Group parse_group(const std::string& s) {
    if (s == "Sp4" || s == "sp4") return Group::Sp4;
    if (s == "GSp4" || s == "gsp4") return Group::GSp4;
    fail(Errc::InvalidOperand, "unknown group '" + s + "'");
}

const char* group_name(Group g) { return g == Group::Sp4 ? "Sp4" : "GSp4"; }

int dot(const Vec& a, const Vec& b) {
    int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec mat_apply(const Mat& m, const Vec& v) {
    Vec r(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    size_t n = a.size();
    Mat r(n, Vec(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) r[i][j] += a[i][k] * b[k][j];
    return r;
}

Mat mat_identity(int n) {
    Mat r(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

Mat mat_transpose(const Mat& m) {
    size_t n = m.size();
    Mat r(n, Vec(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r[j][i] = m[i][j];
    return r;
}

int RootDatum::find_root(const Vec& v) const {
    for (size_t i = 0; i < roots.size(); ++i)
        if (roots[i] == v) return static_cast<int>(i);
    return -1;
}

int RootDatum::find_coroot(const Vec& v) const {
    for (size_t i = 0; i < coroots.size(); ++i)
        if (coroots[i] == v) return static_cast<int>(i);
    return -1;
}

Vec RootDatum::reflect(int r, const Vec& x) const {
    int c = dot(x, coroots[r]);
    Vec out(x);
    for (size_t i = 0; i < out.size(); ++i) out[i] -= c * roots[r][i];
    return out;
}

Vec RootDatum::coreflect(int r, const Vec& y) const {
    int c = dot(roots[r], y);
    Vec out(y);
    for (size_t i = 0; i < out.size(); ++i) out[i] -= c * coroots[r][i];
    return out;
}

bool RootDatum::is_long(int r) const {
    // squared length of the image in the e1, e2 plane
    size_t off = group == Group::GSp4 ? 1 : 0;
    int a = roots[r][off], b = roots[r][off + 1];
    return a * a + b * b == 4;
}

std::string RootDatum::root_name(int r) const {
    std::string s;
    for (size_t i = 0; i < basis.size(); ++i) {
        int c = roots[r][i];
        if (c == 0) continue;
        if (c < 0)
            s += "-";
        else if (!s.empty())
            s += "+";
        if (std::abs(c) != 1) s += std::to_string(std::abs(c));
        s += basis[i];
    }
    return s;
}

Mat RootDatum::reflection_matrix(int r) const {
    int n = rank();
    Mat m(n, Vec(n, 0));
    for (int j = 0; j < n; ++j) {
        Vec e(n, 0);
        e[j] = 1;
        Vec img = reflect(r, e);
        for (int i = 0; i < n; ++i) m[i][j] = img[i];
    }
    return m;
}

RootDatum build_root_datum(Group g) {
    RootDatum rd;
    rd.group = g;
    Vec a, ac, b, bc;
    if (g == Group::Sp4) {
        rd.basis = {"e1", "e2"};
        rd.cobasis = {"e1v", "e2v"};
        a = {1, -1};
        ac = {1, -1};
        b = {0, 2};
        bc = {0, 1};
    } else {
        rd.basis = {"e0", "e1", "e2"};
        rd.cobasis = {"e0v", "e1v", "e2v"};
        a = {0, 1, -1};
        ac = {0, 1, -1};
        b = {-1, 0, 2};
        bc = {0, 0, 1};
    }
    rd.roots = {a, b};
    rd.coroots = {ac, bc};
    rd.alpha = 0;
    rd.beta = 1;
    // close under the simple reflections
    for (size_t i = 0; i < rd.roots.size(); ++i) {
        for (int s : {0, 1}) {
            Vec r = rd.reflect(s, rd.roots[i]);
            Vec c = rd.coreflect(s, rd.coroots[i]);
            if (rd.find_root(r) < 0) {
                rd.roots.push_back(r);
                rd.coroots.push_back(c);
            }
        }
    }
    return rd;
}

namespace {

const Mat kForward = {{-2, -1, -1}, {-1, 0, 0}, {-1, 0, -1}};  // row i = image of e_i
const Mat kInverse = {{0, -1, 0}, {-1, 1, 1}, {0, 1, -1}};    // row i = image of e_i^v

Vec apply_rows(const Mat& images, const Vec& v) {
    Vec out(3, 0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[j] += v[i] * images[i][j];
    return out;
}

}  // namespace

Vec self_duality_map(Group g, const Vec& x) {
    if (g != Group::GSp4) fail(Errc::InvalidOperand, "the self-duality isomorphism exists only for GSp4");
    if (x.size() != 3) fail(Errc::InvalidOperand, "GSp4 lattice vectors have rank 3");
    return apply_rows(kForward, x);
}

Vec self_duality_inverse(Group g, const Vec& y) {
    if (g != Group::GSp4) fail(Errc::InvalidOperand, "the self-duality isomorphism exists only for GSp4");
    if (y.size() != 3) fail(Errc::InvalidOperand, "GSp4 lattice vectors have rank 3");
    return apply_rows(kInverse, y);
}

bool SignedPerm::operator==(const SignedPerm& o) const {
    return image[0] == o.image[0] && image[1] == o.image[1] && sign[0] == o.sign[0] && sign[1] == o.sign[1];
}

std::string SignedPerm::cycle_type() const {
    if (image[0] == 0) {
        int neg = (sign[0] < 0) + (sign[1] < 0);
        if (neg == 0) return "(1)(1)";
        if (neg == 1) return "(1)(1bar)";
        return "(1bar)(1bar)";
    }
    return sign[0] * sign[1] > 0 ? "(2)" : "(2bar)";
}

std::vector<WeylElement> weyl_group(const RootDatum& rd) {
    int n = rd.rank();
    std::vector<Mat> gens = {rd.reflection_matrix(rd.alpha), rd.reflection_matrix(rd.beta)};
    std::vector<WeylElement> out;
    std::deque<WeylElement> queue;
    queue.push_back({mat_identity(n), {}, {}});
    while (!queue.empty()) {
        WeylElement w = queue.front();
        queue.pop_front();
        bool seen = std::any_of(out.begin(), out.end(), [&](const WeylElement& e) { return e.x == w.x; });
        if (seen) continue;
        size_t off = n == 3 ? 1 : 0;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                int c = w.x[off + j][off + i];
                if (c != 0) {
                    w.perm.image[i] = j;
                    w.perm.sign[i] = c;
                }
            }
        }
        out.push_back(w);
        for (int s = 0; s < 2; ++s) {
            WeylElement nx{mat_mul(w.x, gens[s]), w.word, {}};
            nx.word.push_back(s + 1);
            queue.push_back(nx);
        }
    }
    return out;
}

namespace {

long long det(const std::vector<std::vector<long long>>& m) {
    size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    long long s = 0;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<long long>> sub;
        for (size_t i = 1; i < n; ++i) {
            std::vector<long long> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(row);
        }
        s += (j % 2 ? -1 : 1) * m[0][j] * det(sub);
    }
    return s;
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<int> torsion_invariants(const Mat& m) {
    int n = static_cast<int>(m.size());
    std::vector<long long> d{1};
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<int>> rows, cols;
        std::vector<int> cur;
        subsets(n, k, 0, cur, rows);
        subsets(n, k, 0, cur, cols);
        long long g = 0;
        for (auto& r : rows) {
            for (auto& c : cols) {
                std::vector<std::vector<long long>> sub;
                for (int i : r) {
                    std::vector<long long> row;
                    for (int j : c) row.push_back(m[i][j]);
                    sub.push_back(row);
                }
                g = std::gcd(g, std::llabs(det(sub)));
            }
        }
        if (g == 0) break;
        d.push_back(g);
    }
    std::vector<int> out;
    for (size_t k = 1; k < d.size(); ++k) {
        long long e = d[k] / d[k - 1];
        if (e > 1) out.push_back(static_cast<int>(e));
    }
    return out;
}

namespace {

std::string class_name(const std::string& cycle) {
    if (cycle == "(1)(1)") return "e";
    if (cycle == "(1)(1bar)") return "A1";
    if (cycle == "(2)") return "A1~";
    if (cycle == "(1bar)(1bar)") return "A1xA1";
    return "C2";
}

int class_order(const std::string& name) {
    static const std::vector<std::string> order = {"e", "A1", "A1~", "A1xA1", "C2"};
    return static_cast<int>(std::find(order.begin(), order.end(), name) - order.begin());
}

bool word_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

std::vector<WeylClass> weyl_classes(Group g) {
    RootDatum rd = build_root_datum(g);
    auto W = weyl_group(rd);
    int n = rd.rank();
    auto index_of = [&](const Mat& x) {
        for (size_t i = 0; i < W.size(); ++i)
            if (W[i].x == x) return static_cast<int>(i);
        return -1;
    };
    auto inverse = [&](int i) {
        for (size_t j = 0; j < W.size(); ++j)
            if (mat_mul(W[i].x, W[j].x) == mat_identity(n)) return static_cast<int>(j);
        return -1;
    };
    std::vector<int> cls(W.size(), -1);
    std::vector<WeylClass> out;
    for (size_t i = 0; i < W.size(); ++i) {
        if (cls[i] >= 0) continue;
        int id = static_cast<int>(out.size());
        WeylClass c;
        c.cycle_type = W[i].perm.cycle_type();
        c.name = class_name(c.cycle_type);
        c.representative_word = W[i].word;
        for (size_t h = 0; h < W.size(); ++h) {
            int hi = inverse(static_cast<int>(h));
            int k = index_of(mat_mul(mat_mul(W[h].x, W[i].x), W[hi].x));
            if (cls[k] < 0) {
                cls[k] = id;
                ++c.size;
                if (word_less(W[k].word, c.representative_word)) c.representative_word = W[k].word;
            }
        }
        // w acts on cocharacters by the inverse transpose
        Mat wy = mat_transpose(W[inverse(static_cast<int>(i))].x);
        Mat one_minus = mat_identity(n);
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s) one_minus[r][s] -= wy[r][s];
        c.torsion = torsion_invariants(one_minus);
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(),
              [](const WeylClass& a, const WeylClass& b) { return class_order(a.name) < class_order(b.name); });
    return out;
}

std::string LeviLabel::name() const {
    static const char* gsp4[] = {"GSp4", "GL2xGSp0", "GL1xGSp2", "T"};
    static const char* sp4[] = {"Sp4", "GL2xSp0", "GL1xSp2", "T"};
    static const char* so5[] = {"SO5", "GL2xSO1", "GL1xSO3", "T"};
    int k = static_cast<int>(kind);
    if (group == Group::GSp4) return gsp4[k];
    return dual_side ? so5[k] : sp4[k];
}

LeviLabel LeviLabel::dual() const {
    LeviLabel d = *this;
    d.dual_side = !dual_side;
    if (group == Group::GSp4) {
        if (kind == LeviKind::Siegel)
            d.kind = LeviKind::Klingen;
        else if (kind == LeviKind::Klingen)
            d.kind = LeviKind::Siegel;
    }
    return d;
}

std::vector<LeviLabel> levi_labels(Group g, bool dual_side) {
    std::vector<LeviLabel> out;
    for (auto k : {LeviKind::Full, LeviKind::Siegel, LeviKind::Klingen, LeviKind::Torus})
        out.push_back({g, dual_side, k});
    return out;
}

LeviLabel levi_from_name(Group g, const std::string& name) {
    for (bool side : {false, true})
        for (auto& l : levi_labels(g, side))
            if (l.name() == name) return l;
    fail(Errc::InvalidOperand, "unknown Levi label '" + name + "' for " + group_name(g));
}

LeviLabel levi_of_roots(const RootDatum& rd, const std::vector<int>& roots) {
    bool has_long = false, has_short = false;
    for (int r : roots) (rd.is_long(r) ? has_long : has_short) = true;
    LeviLabel l{rd.group, false, LeviKind::Torus};
    if (has_long && has_short)
        l.kind = LeviKind::Full;
    else if (has_short)
        l.kind = LeviKind::Siegel;
    else if (has_long)
        l.kind = LeviKind::Klingen;
    return l;
}

std::vector<NilpotentOrbit> nilpotent_orbits() {
    RootDatum rd = build_root_datum(Group::GSp4);
    std::vector<NilpotentOrbit> out = {
        {"regular", {5}, {4}, {"alpha", "beta"}, {}},
        {"subregular", {3, 1, 1}, {2, 2}, {"beta"}, {}},
        {"minimal", {2, 2, 1}, {2, 1, 1}, {"alpha"}, {}},
        {"zero", {1, 1, 1, 1, 1}, {1, 1, 1, 1}, {}, {}},
    };
    for (auto& o : out) {
        // a root of the dual group is a coroot of G via the self-duality isomorphism
        std::vector<int> group_roots;
        for (auto& r : o.representative) {
            Vec dual_root = rd.roots[r == "alpha" ? rd.alpha : rd.beta];
            int idx = rd.find_coroot(self_duality_map(Group::GSp4, dual_root));
            if (idx < 0) fail(Errc::InvalidDatum, "self-duality does not map roots to coroots");
            group_roots.push_back(idx);
        }
        o.levi = levi_of_roots(rd, group_roots);
    }
    return out;
}

std::vector<ParahoricQuotient> parahoric_quotients(Group g) {
    if (g == Group::GSp4)
        return {
            {"delta", {"beta", "vertex:beta", "vertex:delta"}, "delta", "C2", "GSp4(F_q)"},
            {"alpha", {"vertex:alpha"}, "alpha", "A1+A1", "GSp_{2,2}(F_q)"},
        };
    return {
        {"delta", {"vertex:beta"}, "delta", "C2", "Sp4(F_q)"},
        {"beta", {"vertex:gamma"}, "beta", "C2", "Sp4(F_q)"},
        {"alpha", {"vertex:alpha"}, "alpha", "A1+A1", "Sp2xSp2(F_q)"},
    };
}

std::string canonical_vertex(Group g, const std::string& label) {
    for (auto& p : parahoric_quotients(g)) {
        if (p.vertex == label) return p.vertex;
        for (auto& a : p.aliases)
            if (a == label) return p.vertex;
    }
    fail(Errc::InvalidOperand, "unknown vertex label '" + label + "'");
}

std::vector<Facet> apartment_facets() {
    return {
        {"v0", "vertex", "C2", {0}},
        {"v1", "vertex", "A1xA1", {1}},
        {"v2", "vertex", "C2", {2}},
        {"e01", "edge", "A1", {0, 1}},
        {"e12", "edge", "A1", {1, 2}},
        {"e02", "edge", "A1~", {0, 2}},
        {"c", "chamber", "e", {0, 1, 2}},
    };
}

}  // namespace llc
