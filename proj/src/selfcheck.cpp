#include "selfcheck.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "finite_reductive.hpp"
#include "galois.hpp"
#include "induction.hpp"
#include "qfield.hpp"
#include "rootdata.hpp"
#include "serialize.hpp"
#include "stability.hpp"
#include "supercuspidal.hpp"

namespace llc {

const std::vector<std::string>& infinitesimal_exclusions() {
    static const std::vector<std::string> v = {"sp4-case-7c-ii", "sp4-case-7d-ii"};
    return v;
}

namespace {

struct Suite {
    std::vector<CheckResult> out;
    std::string module;

    void run(const std::string& name, const std::function<std::string()>& body) {
        CheckResult r{module, name, false, ""};
        try {
            r.detail = body();
            r.ok = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        out.push_back(r);
    }
};

QHalf random_qhalf(std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-4, 4), k(-3, 3), d(0, 2);
    auto poly = [&](bool nonzero) {
        std::vector<long> co(d(rng) + 1);
        for (auto& x : co) x = c(rng);
        if (nonzero && std::all_of(co.begin(), co.end(), [](long x) { return x == 0; })) co[0] = 1;
        return QHalf::from_q_poly(co);
    };
    QHalf den = poly(true);
    if (den.is_zero()) den = QHalf(1);
    return poly(false) * QHalf::t_pow(k(rng)) / den;
}

std::string check_qfield(int samples, std::mt19937& rng) {
    for (int i = 0; i < samples / 10; ++i) {
        QHalf a = random_qhalf(rng), b = random_qhalf(rng), c = random_qhalf(rng);
        if ((a + b) + c != a + (b + c)) return "addition is not associative";
        if ((a * b) * c != a * (b * c)) return "multiplication is not associative";
        if (a * (b + c) != a * b + a * c) return "distributivity fails";
        if (!a.is_zero() && a * (QHalf(1) / a) != QHalf(1)) return "inverse fails for " + a.str();
        if (QHalf::parse(a.str()) != a) return "str/parse round trip fails for " + a.str();
    }
    return "";
}

std::string check_factor_roundtrip(int samples, std::mt19937& rng) {
    std::uniform_int_distribution<int> which(1, 8), e(0, 2), k(-4, 4);
    for (int i = 0; i < samples / 10; ++i) {
        mpq_class u(which(rng), which(rng));
        u.canonicalize();
        QHalf x = QHalf::t_pow(k(rng)) * QHalf(u);
        for (int j = 0; j < 3; ++j) {
            auto cyc = cyclotomic(which(rng));
            std::vector<long> co;
            for (auto& z : cyc) co.push_back(z.get_si());
            QHalf f = QHalf::from_q_poly(co).pow(e(rng));
            x = j == 2 ? x / f : x * f;
        }
        if (qh_factor(x).expand() != x) return "factor/expand differs for " + x.str();
    }
    return "";
}

std::string check_eval_hom(int samples, std::mt19937& rng) {
    for (int i = 0; i < samples / 10; ++i) {
        QHalf a = random_qhalf(rng), b = random_qhalf(rng);
        for (long q0 : {3L, 5L, 9L}) {
            QValue x, y, z;
            try {
                x = qh_eval(a, q0);
                y = qh_eval(b, q0);
            } catch (const Error&) {
                continue;
            }
            z = qh_eval(a * b, q0);
            if (!(z == x * y)) return "eval(a*b) != eval(a)*eval(b) at q0 = " + std::to_string(q0);
        }
    }
    return "";
}

std::string check_rootdata() {
    for (Group g : {Group::Sp4, Group::GSp4}) {
        RootDatum rd = build_root_datum(g);
        for (int s : {rd.alpha, rd.beta}) {
            std::set<Vec> imgs;
            for (auto& r : rd.roots) imgs.insert(rd.reflect(s, r));
            if (imgs != std::set<Vec>(rd.roots.begin(), rd.roots.end())) return "reflection does not permute the roots";
        }
        auto W = weyl_group(rd);
        if (W.size() != 8) return "|W| = " + std::to_string(W.size());
        if (weyl_classes(g).size() != 5) return "number of Weyl classes differs from 5";
        for (auto& l : levi_labels(g, false))
            if (l.dual().dual() != l) return "dual(dual(L)) != L for " + l.name();
    }
    static const std::map<std::string, LeviKind> expect = {
        {"regular", LeviKind::Full}, {"subregular", LeviKind::Siegel}, {"minimal", LeviKind::Klingen}, {"zero", LeviKind::Torus}};
    for (auto& o : nilpotent_orbits()) {
        auto it = expect.find(o.name);
        if (it == expect.end() || o.levi.kind != it->second) return "Levi column wrong for orbit " + o.name;
    }
    RootDatum rd = build_root_datum(Group::GSp4);
    for (int i = 0; i < 3; ++i) {
        Vec e(3, 0);
        e[i] = 1;
        if (self_duality_inverse(Group::GSp4, self_duality_map(Group::GSp4, e)) != e) return "self-duality inverse fails";
    }
    return "";
}

std::string check_characters() {
    auto g = standard_label_group();
    std::set<std::string> seen;
    for (auto n : {"1", "eta", "eta2", "eta2'"}) {
        SmoothChar c = SmoothChar::parse(n, g);
        if (!(c * c).is_trivial()) return std::string(n) + " does not square to 1";
        seen.insert(c.str());
    }
    if (seen.size() != 4) return "square classes are not four distinct characters";
    if (SmoothChar::named("eta2", g) * SmoothChar::named("eta2'", g) != SmoothChar::named("eta", g))
        return "eta2 * eta2' != eta";
    return "";
}

std::string check_finite() {
    std::vector<FiniteGroupLabel> gs = {{FiniteFamily::GSp4, 2}, {FiniteFamily::Sp4, 2},      {FiniteFamily::GSp22, 2},
                                        {FiniteFamily::Sp2xSp2, 2}, {FiniteFamily::SL2, 1}, {FiniteFamily::SOodd, 3},
                                        {FiniteFamily::GL, 3}};
    for (auto& g : gs)
        for (long q0 : {3L, 5L, 7L, 9L}) {
            QValue v = qh_eval(g.order(), q0);
            if (v.s != 0 || v.r <= 0 || v.r.get_den() != 1) return g.name() + " order is not a positive integer";
            mpz_class pw = 1;
            for (int i = 0; i < g.positive_roots(); ++i) pw *= q0;
            if (mpz_class(v.r.get_num() % pw) != 0) return g.name() + " order not divisible by q^N";
        }
    auto th = has_unipotent_cuspidal({FiniteFamily::Sp4, 2});
    QHalf q = QHalf::q();
    if (!th.dimension || *th.dimension * 2 != q * (q - 1).pow(2)) return "2 dim(theta10) != q(q-1)^2";
    return "";
}

std::string check_supercuspidal() {
    for (Group g : {Group::Sp4, Group::GSp4})
        for (auto& r : enumerate_depth_zero(g)) {
            if (!r.inducing_dimension || !r.quotient) continue;
            QHalf f = formal_degree_depth_zero(r);
            for (long q0 : {3L, 5L, 7L, 9L, 25L}) {
                QValue v = qh_eval(f, q0);
                if (v.r < 0 || v.s < 0 || (v.r == 0 && v.s == 0)) return "formal degree of " + r.key + " not positive";
            }
        }
    if (formal_degree_delta_eta2() != formal_degree_depth_zero(find_depth_zero(Group::GSp4, "pi_alpha_eta2")))
        return "fdeg(delta) != fdeg(pi_alpha(eta2))";
    for (auto& r : enumerate_depth_zero(Group::Sp4)) {
        std::string ptr = packet_of_depth_zero(r.key);
        bool mixed = !ptr.empty();
        bool singular = r.singularity.find("singular") != std::string::npos && r.singularity != "nonsingular";
        if (mixed != singular) return r.key + " packet pointer inconsistent with " + r.singularity;
    }
    return "";
}

InducedRep random_torus(std::mt19937& rng, const LabelGroupPtr& g, Group grp) {
    std::uniform_int_distribution<int> ex(-4, 4), t0(0, 1), t1(0, 5);
    auto pick = [&] {
        SmoothChar c = SmoothChar::named("x", g).pow(t1(rng)) * SmoothChar::named("eta2", g).pow(t0(rng)) *
                       SmoothChar::named("eta2'", g).pow(t0(rng));
        return c.shift(mpq_class(ex(rng), 2));
    };
    InducedRep r;
    r.group = grp;
    r.levi = LeviKind::Torus;
    r.chi1 = pick();
    r.chi2 = pick();
    r.theta = grp == Group::GSp4 ? pick() : SmoothChar(g);
    return r;
}

std::multiset<std::string> labels_of(const ReducibilityReport& r) {
    std::multiset<std::string> s;
    for (auto& c : r.constituents) s.insert(c.instantiated);
    return s;
}

std::string check_induction(int samples, std::mt19937& rng) {
    auto g = declare_label_group({UserLabel{"x", 6, false}});
    for (int i = 0; i < samples; ++i) {
        Group grp = i % 2 ? Group::Sp4 : Group::GSp4;
        InducedRep r = random_torus(rng, g, grp);
        auto rep = decide_reducibility(r);
        if (rep.length != static_cast<int>(rep.constituents.size()) && rep.case_tag != "Sp4:1biv")
            return "length mismatch in " + rep.case_tag;
        auto cases = matched_cases(r);
        if (rep.case_tag == "irreducible" ? !cases.empty() : cases.empty() || cases[0] != rep.case_tag)
            return "dispatch disagrees with the guards for " + rep.canonical_data;
        for (auto& w : weyl_conjugates(r)) {
            auto o = decide_reducibility(w);
            if (o.length != rep.length || o.case_tag != rep.case_tag || labels_of(o) != labels_of(rep))
                return "Weyl conjugate changes the report for " + rep.canonical_data;
        }
    }
    return "";
}

std::string check_blocks() {
    auto g = standard_label_group();
    std::vector<SmoothChar> cs = {SmoothChar(g), SmoothChar::named("eta2", g), SmoothChar::named("eta2'", g),
                                  SmoothChar::named("eta", g)};
    for (auto& a : cs)
        for (auto& b : cs) {
            std::string base;
            try {
                base = bernstein_block_J(a, b).tag;
            } catch (const Error&) {
                continue;
            }
            for (mpq_class t : {mpq_class(1, 2), mpq_class(-1), mpq_class(7, 3)})
                if (bernstein_block_J(a.shift(t), b).tag != base || bernstein_block_J(a, b.shift(t)).tag != base)
                    return "J block depends on the unramified twist";
        }
    return "";
}

std::string check_springer() {
    std::map<std::string, int> cusp = {{"SL2", 1}, {"SO3", 0}, {"SO5", 0}, {"O4", 2}, {"GSp4", 0}, {"GSp_{2,2}", 1}};
    for (auto& t : springer_tables()) {
        std::set<std::string> pairs, images;
        for (auto& r : t.rows) {
            pairs.insert(r.pair);
            if (r.image != "cusp") images.insert(r.image);
        }
        if (pairs.size() != t.rows.size()) return t.group + ": repeated unipotent pair";
        if (static_cast<int>(images.size()) != t.weyl_irreps) return t.group + ": not a bijection onto Irr(W)";
        if (static_cast<int>(t.rows.size()) != t.weyl_irreps + t.cuspidal_count()) return t.group + ": row count";
        if (t.cuspidal_count() != cusp[t.group]) return t.group + ": cuspidal count";
    }
    auto& g22 = springer_table("GSp_{2,2}");
    for (auto& r : g22.rows)
        if (r.image == "cusp" && r.pair != "(ee,-1)") return "GSp_{2,2} cuspidal row is not (ee,-1)";
    return "";
}

template <class F>
std::string over_presets(F f) {
    for (auto& p : presets()) {
        auto d = parse_descriptor(p.json);
        std::string r = f(p, d);
        if (!r.empty()) return p.name + ": " + r;
    }
    return "";
}

std::multiset<std::string> strs(const std::vector<SmoothChar>& v) {
    std::multiset<std::string> s;
    for (auto& c : v) s.insert(c.str());
    return s;
}

}  // namespace

std::vector<CheckResult> run_selfcheck(int samples, unsigned seed) {
    Suite s;
    std::mt19937 rng(seed);
    s.module = "qfield";
    s.run("field axioms", [&] { return check_qfield(samples, rng); });
    s.run("factor/expand round trip", [&] { return check_factor_roundtrip(samples, rng); });
    s.run("evaluation is multiplicative", [&] { return check_eval_hom(samples, rng); });
    s.module = "rootdata";
    s.run("reflections, Weyl group, Levi duality, orbits", check_rootdata);
    s.module = "characters";
    s.run("square classes form (Z/2)^2", check_characters);
    s.module = "finite_reductive";
    s.run("orders and theta10", check_finite);
    s.module = "supercuspidal";
    s.run("formal degrees and packet pointers", check_supercuspidal);
    s.module = "induction";
    s.run("exhaustiveness and Weyl invariance", [&] { return check_induction(samples, rng); });
    s.run("J blocks ignore unramified twists", check_blocks);
    s.module = "galois";
    s.run("Springer tables", check_springer);
    s.run("packet size is 2^rank", [] {
        return over_presets([](const Preset&, const ParamDescriptor& d) -> std::string {
            auto c = centralizer(d);
            auto p = assemble_packet(d);
            if (p.members.size() != (1u << c.s_rank)) return "size " + std::to_string(p.members.size());
            return "";
        });
    });
    s.run("discrete iff finite modulo center", [] {
        return over_presets([](const Preset&, const ParamDescriptor& d) -> std::string {
            auto c = centralizer(d);
            auto p = assemble_packet(d);
            if (p.discrete != c.finite_mod_center) return "discrete flag";
            for (auto& m : p.members)
                if (p.discrete && !m.discrete) return m.label + " is not square-integrable";
            if (p.discrete && !p.tempered) return "discrete but not tempered";
            return "";
        });
    });
    s.run("one generic member per tempered packet", [] {
        return over_presets([](const Preset&, const ParamDescriptor& d) -> std::string {
            auto p = assemble_packet(d);
            long n = std::count_if(p.members.begin(), p.members.end(), [](const PacketMember& m) { return m.generic; });
            if (p.tempered && n != 1) return std::to_string(n) + " generic members";
            return "";
        });
    });
    s.run("cuspidal support commutes", [] {
        return over_presets([](const Preset&, const ParamDescriptor& d) -> std::string {
            for (auto& m : assemble_packet(d).members)
                if (m.kind != "supercuspidal" && m.support_dual != m.support_group.dual())
                    return m.label + ": " + m.support_dual.name() + " vs " + m.support_group.name();
            return "";
        });
    });
    s.run("infinitesimal parameters match", [] {
        return over_presets([](const Preset& pr, const ParamDescriptor& d) -> std::string {
            auto& ex = infinitesimal_exclusions();
            if (std::find(ex.begin(), ex.end(), pr.name) != ex.end()) return "";
            auto inf = infinitesimal(d);
            if (!std::all_of(inf.begin(), inf.end(), [](const InfinitesimalEntry& e) { return e.is_char; })) return "";
            std::vector<SmoothChar> lam;
            for (auto& e : inf) lam.push_back(e.chr);
            for (auto& m : assemble_packet(d).members) {
                if (!m.induced || m.induced->levi != LeviKind::Torus) continue;
                if (strs(torus_eigencharacters(*m.induced)) != strs(lam)) return m.label;
            }
            return "";
        });
    });
    s.run("descriptor JSON round trip", [] {
        return over_presets([](const Preset&, const ParamDescriptor& d) -> std::string {
            Json j = descriptor_to_json(d);
            if (descriptor_to_json(descriptor_from_json(j)) != j) return "serialize(parse(x)) != x";
            return "";
        });
    });
    s.run("GSp4 twist is carried by the central character", [] {
        for (auto name : {"gsp4-case-4b-iv-eta2"}) {
            auto d = preset_descriptor(name);
            auto p0 = assemble_packet(d);
            for (auto& x : d.summands) x.chr = x.chr * SmoothChar::named("chi", d.labels);
            d.xi = d.xi * SmoothChar::named("chi", d.labels).pow(2);
            auto p1 = assemble_packet(d);
            if (p0.members.size() != p1.members.size()) return std::string("size changes under twist");
            for (size_t i = 0; i < p0.members.size(); ++i)
                if (p0.members[i].kind != p1.members[i].kind || p0.members[i].role != p1.members[i].role)
                    return std::string("members differ beyond the twist");
        }
        return std::string();
    });
    s.module = "stability";
    s.run("GSp4 pairs are the minimal stable sets", [] {
        auto c = gsp4_mixed_candidates();
        auto m = minimal_stable_subsets(c, StabilityContext::NearS);
        std::vector<std::vector<int>> want = {{0, 2}, {1, 3}};
        return m == want ? "" : std::string("unexpected minimal sets");
    });
    s.run("Sp4 quadruples are the minimal stable sets", [] {
        auto m = minimal_stable_subsets(sp4_mixed_candidates(), StabilityContext::NearS);
        std::vector<std::vector<int>> want = {{0, 1, 2, 3}, {4, 5, 6, 7}};
        return m == want ? "" : std::string("unexpected minimal sets");
    });
    s.run("signs cancel within a matched pair", [] {
        for (auto conv : {SignConvention::Eta2Plus, SignConvention::Eta2Minus})
            for (int q : {1, 3})
                for (auto e : {"eta2", "eta2'"}) {
                    CharacterOptions o{conv, q};
                    auto v = character_vector("delta", e, o) + character_vector("pi_alpha", e, o);
                    if (v.terms.count(dist::Gsgn)) return std::string("G_sgn survives for ") + e;
                    if (!is_stable(v, StabilityContext::NearS)) return std::string("pair unstable for ") + e;
                }
        return std::string();
    });
    s.run("restrictions of a stable pair are stable", [] {
        for (auto e : {"eta2", "eta2'"}) {
            DistVector v;
            for (auto l : {"pi_1", "pi_2", "pi_alpha_plus", "pi_alpha_minus"}) v += character_vector(l, e);
            auto w = character_vector("delta", e) + character_vector("pi_alpha", e);
            if (!is_stable(v, StabilityContext::NearS)) return std::string("Sp4 sum unstable");
            if ((v + w.scaled(-1)).terms.size() != 0) return std::string("restriction does not add up");
        }
        return std::string();
    });
    return s.out;
}

}  // namespace llc
