#include "induction.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace llc {

namespace {

struct Env {
    LabelGroupPtr group;
    std::map<std::string, SmoothChar> chars;
    std::map<std::string, std::string> names;
};

SmoothChar eval_factor(const std::string& f, const Env& env) {
    auto caret = f.find('^');
    std::string name = f.substr(0, caret);
    mpq_class e = 1;
    if (caret != std::string::npos) {
        std::string ex = f.substr(caret + 1);
        if (!ex.empty() && ex.front() == '{') ex = ex.substr(1, ex.size() - 2);
        e = mpq_class(ex);
        e.canonicalize();
    }
    if (name == "nu") return SmoothChar::nu(e, env.group);
    if (name == "1") return SmoothChar(env.group);
    auto it = env.chars.find(name);
    if (it == env.chars.end()) fail(Errc::InvalidOperand, "template refers to unknown symbol " + name);
    return it->second.pow(e.get_num().get_si());
}

std::string eval_expr(const std::string& expr, const Env& env) {
    auto n = env.names.find(expr);
    if (n != env.names.end()) return n->second;
    SmoothChar acc(env.group);
    size_t start = 0;
    for (;;) {
        size_t star = expr.find('*', start);
        acc = acc * eval_factor(expr.substr(start, star - start), env);
        if (star == std::string::npos) break;
        start = star + 1;
    }
    return acc.str();
}

// "<expr>" segments are character expressions; the label keeps them verbatim, the
// instantiated form evaluates them.
std::pair<std::string, std::string> render(const std::string& tmpl, const Env& env) {
    std::string label, inst;
    for (size_t i = 0; i < tmpl.size(); ++i) {
        if (tmpl[i] != '<') {
            label += tmpl[i];
            inst += tmpl[i];
            continue;
        }
        size_t close = tmpl.find('>', i);
        std::string expr = tmpl.substr(i + 1, close - i - 1);
        label += expr;
        inst += eval_expr(expr, env);
        i = close;
    }
    return {label, inst};
}

struct Flags {
    bool ess_tempered = false;
    bool square_integrable = false;
    bool generic = false;
};

struct Builder {
    ReducibilityReport& report;
    const Env& env;
    LeviLabel support;

    Constituent& add(const std::string& role, const std::string& tmpl, Flags f, const std::string& summand = "") {
        Constituent c;
        std::tie(c.label, c.instantiated) = render(tmpl, env);
        c.role = role;
        c.case_tag = report.case_tag;
        if (!summand.empty()) c.summand = render(summand, env).first;
        c.ess_tempered = f.ess_tempered || f.square_integrable;
        c.square_integrable = f.square_integrable;
        c.generic = f.generic;
        c.support = support;
        report.constituents.push_back(c);
        report.length = static_cast<int>(report.constituents.size());
        return report.constituents.back();
    }

    void langlands(Constituent& c, const std::string& tmpl) {
        auto [l, i] = render(tmpl, env);
        c.langlands = l;
        c.langlands_instantiated = i;
    }
};

const Flags kNone{}, kGeneric{false, false, true}, kTempered{true, false, false},
    kTemperedGeneric{true, false, true}, kDiscrete{true, true, false}, kDiscreteGeneric{true, true, true};

Flags tempered_if(bool t, bool generic = false) { return {t, false, generic}; }

// ---- torus data ----

struct Triple {
    SmoothChar a, b, t;
    std::string key() const { return a.str() + "|" + b.str() + "|" + t.str(); }
};

std::vector<Triple> conjugates(const Triple& x, bool similitude) {
    std::vector<Triple> out{x};
    for (size_t i = 0; i < out.size(); ++i) {
        Triple cur = out[i];
        Triple s1{cur.b, cur.a, cur.t};
        Triple s2{cur.a, cur.b.inv(), similitude ? cur.b * cur.t : cur.t};
        for (auto& n : {s1, s2})
            if (std::none_of(out.begin(), out.end(), [&](const Triple& o) { return o.key() == n.key(); }))
                out.push_back(n);
    }
    return out;
}

struct TorusCase {
    std::string tag;
    std::function<bool(const SmoothChar&, const SmoothChar&)> guard;
    std::function<void(Builder&, const Triple&)> build;
};

bool is_nu(const SmoothChar& x, const mpq_class& e) { return x == SmoothChar::nu(e, x.group()); }
bool is_nu_pm(const SmoothChar& x, long k) { return is_nu(x, k) || is_nu(x, -k); }
bool order2(const SmoothChar& x) { return x.order() == 2; }

bool regular(const SmoothChar& a, const SmoothChar& b) {
    return !a.is_trivial() && !b.is_trivial() && a != b && a != b.inv();
}

bool nu_related(const SmoothChar& a, const SmoothChar& b) {
    auto nu = SmoothChar::nu(1, a.group());
    for (auto& c : {nu * b, nu.inv() * b, nu * b.inv(), nu.inv() * b.inv()})
        if (a == c) return true;
    return false;
}

bool g1ai(const SmoothChar& a, const SmoothChar& b) {
    if (!regular(a, b) || a != SmoothChar::nu(1, a.group()) * b) return false;
    SmoothChar b2 = b * b;
    return !is_nu(b2, -2) && !is_nu(b2, -1) && !b2.is_trivial() && !is_nu(b, -2) && !is_nu(b, 1);
}

bool g1aii(const SmoothChar& a, const SmoothChar& b) {
    return regular(a, b) && is_nu(b, 1) && !a.is_trivial() && !is_nu_pm(a, 1) && !is_nu_pm(a, 2);
}

bool g1aiii(const SmoothChar& a, const SmoothChar& b) { return regular(a, b) && is_nu(a, 2) && is_nu(b, 1); }

bool g1aiv(const SmoothChar& a, const SmoothChar& b) {
    return regular(a, b) && a == SmoothChar::nu(1, a.group()) * b && order2(b);
}

bool g1bi(const SmoothChar& a, const SmoothChar& b) { return !regular(a, b) && is_nu(a, 1) && b.is_trivial(); }
bool g1bii(const SmoothChar& a, const SmoothChar& b) { return !regular(a, b) && is_nu(a, 1) && is_nu(b, 1); }
bool g1biii(const SmoothChar& a, const SmoothChar& b) {
    return !regular(a, b) && a == SmoothChar::nu(1, a.group()) * b && is_nu(a * a, 1);
}

std::string st_gl2_branch(const mpq_class& e) {
    if (e > mpq_class(-1, 2)) return "J(<nu^{1/2}*chi2> St_GL2; <theta>)";
    if (e == mpq_class(-1, 2)) return "J(<nu^{1/2}*chi2> St_GL2 x| <theta>)";
    return "J(<nu^{-1/2}*chi2^{-1}> St_GL2; <nu*chi2^2*theta>)";
}

std::string one_gl2_branch(const mpq_class& e) {
    if (e > 0) return "J(<nu*chi2>, <chi2>; <theta>)";
    if (e == 0) return "J(<nu*chi2>, <chi2> x| <theta>)";
    if (e >= mpq_class(-1, 2)) return "J(<nu*chi2>, <chi2^{-1}>; <chi2*theta>)";
    if (e > -1) return "J(<chi2^{-1}>, <nu*chi2>; <nu*chi2*theta>)";
    if (e == -1) return "J(<chi2^{-1}>; <nu^{-1}*chi2^{-1}> x| <nu*chi2^2*theta>)";
    return "J(<chi2^{-1}>, <nu^{-1}*chi2^{-1}>; <nu*chi2^2*theta>)";
}

std::string st_gsp2_branch(const mpq_class& e) {
    if (e > 0) return "J(<chi1>; <nu^{1/2}*theta> St_GSp2)";
    if (e == 0) return "J(<chi1> x| <nu^{1/2}*theta> St_GSp2)";
    return "J(<chi1^{-1}>; <nu^{1/2}*chi1*theta> St_GSp2)";
}

std::string one_gsp2_branch(const mpq_class& e) {
    if (e > 0) return "J(<chi1>, nu; <theta>)";
    if (e == 0) return "J(nu; <chi1> x| <theta>)";
    return "J(<chi1^{-1}>, nu; <chi1*theta>)";
}

std::vector<TorusCase> gsp4_cases() {
    return {
        {"GSp4:1ai", g1ai,
         [](Builder& b, const Triple& x) {
             const char* one = "<nu^{1/2}*chi2> 1_GL2 x| <theta>";
             const char* st = "<nu^{1/2}*chi2> St_GL2 x| <theta>";
             mpq_class e = x.b.nu_exp();
             auto& c1 = b.add("one_gl2", one, kNone);
             b.langlands(c1, one_gl2_branch(e));
             auto& c2 = b.add("st_gl2", st, tempered_if(e == mpq_class(-1, 2), true));
             b.langlands(c2, st_gl2_branch(e));
         }},
        {"GSp4:1aii", g1aii,
         [](Builder& b, const Triple& x) {
             mpq_class e = x.a.nu_exp();
             auto& c1 = b.add("st_gsp2", "<chi1> x| <nu^{1/2}*theta> St_GSp2", tempered_if(e == 0, true));
             b.langlands(c1, st_gsp2_branch(e));
             auto& c2 = b.add("one_gsp2", "<chi1> x| <nu^{1/2}*theta> 1_GSp2", kNone);
             b.langlands(c2, one_gsp2_branch(e));
         }},
        {"GSp4:1aiii", g1aiii,
         [](Builder& b, const Triple&) {
             b.add("st_gsp4", "<nu^{3/2}*theta> St_GSp4", kDiscreteGeneric);
             b.add("one_gsp4", "<nu^{3/2}*theta> 1_GSp4", kNone);
             b.add("j_nu2", "J(nu^2; <nu^{1/2}*theta> St_GSp2)", kNone);
             b.add("j_st", "J(nu^{3/2} St_GL2; <theta>)", kNone);
         }},
        {"GSp4:1aiv", g1aiv,
         [](Builder& b, const Triple&) {
             b.add("delta", "delta([<chi2>, <nu*chi2>], <theta>)", kDiscreteGeneric);
             b.add("st_theta", "J(<nu^{1/2}*chi2> St_GL2; <theta>)", kNone);
             b.add("st_chi2theta", "J(<nu^{1/2}*chi2> St_GL2; <chi2*theta>)", kNone);
             b.add("j_nu", "J(<nu*chi2>; <chi2> x| <theta>)", kNone);
         }},
        {"GSp4:1bi", g1bi,
         [](Builder& b, const Triple&) {
             const char* st = "1 x| <nu^{1/2}*theta> St_GSp2";
             const char* one = "1 x| <theta> 1_GSp2";
             b.add("tau_S", "tau(S, <theta>)", kTemperedGeneric, st);
             b.add("tau_T", "tau(T, <theta>)", kTempered, st);
             b.add("j_nu", "J(nu; 1_F x| <theta>)", kNone, one);
             b.add("j_st", "J(nu^{1/2} St_GL2; <theta>)", kNone, one);
         }},
        {"GSp4:1bii", g1bii,
         [](Builder& b, const Triple&) {
             auto& c1 = b.add("one_gsp2", "nu x| <nu^{1/2}*theta> 1_GSp2", kNone);
             b.langlands(c1, "J(nu; <nu^{1/2}*theta> St_GSp2)");
             auto& c2 = b.add("st_gsp2", "nu x| <nu^{1/2}*theta> St_GSp2", kGeneric);
             b.langlands(c2, "J(nu, nu; <theta>)");
         }},
        {"GSp4:1biii", g1biii,
         [](Builder& b, const Triple&) {
             auto& c1 = b.add("one_gl2", "<nu^{1/2}*chi2> 1_GL2 x| <theta>", kNone);
             b.langlands(c1, "J(<nu*chi2>, <nu*chi2>; <chi2*theta>)");
             b.add("st_gl2", "<nu^{1/2}*chi2> St_GL2 x| <theta>", kTemperedGeneric);
         }},
    };
}

bool s1a(const SmoothChar& a, const SmoothChar& b) {
    return !is_nu_pm(a, 1) && !is_nu_pm(b, 1) && !nu_related(a, b) && order2(b);
}

std::vector<TorusCase> sp4_cases() {
    return {
        {"Sp4:1aii", [](const SmoothChar& a, const SmoothChar& b) { return s1a(a, b) && order2(a); },
         [](Builder& b, const Triple& x) {
             bool t = x.a.nu_exp() == 0;
             for (int i = 1; i <= 2; ++i) {
                 std::string half = "<chi1> x| T^" + std::to_string(i) + "_<chi2>";
                 for (int j = 1; j <= 2; ++j)
                     b.add("piece" + std::to_string(i) + std::to_string(j),
                           "(" + half + ")^(" + std::to_string(j) + ")", tempered_if(t, i == 1 && j == 1), half);
             }
         }},
        {"Sp4:1ai", [](const SmoothChar& a, const SmoothChar& b) { return s1a(a, b) && !order2(a); },
         [](Builder& b, const Triple& x) {
             bool t = x.a.nu_exp() == 0;
             b.add("t1", "<chi1> x| T^1_<chi2>", tempered_if(t, true));
             b.add("t2", "<chi1> x| T^2_<chi2>", tempered_if(t));
         }},
        {"Sp4:1bi", g1ai,
         [](Builder& b, const Triple& x) {
             b.add("one_gl2", "<nu^{1/2}*chi2> 1_GL2 x| 1", kNone);
             b.add("st_gl2", "<nu^{1/2}*chi2> St_GL2 x| 1", tempered_if(x.b.nu_exp() == mpq_class(-1, 2), true));
         }},
        {"Sp4:1bii", g1aii,
         [](Builder& b, const Triple& x) {
             b.add("st_sp2", "<chi1> x| nu^{1/2} St_Sp2", tempered_if(x.a.nu_exp() == 0, true));
             b.add("one_sp2", "<chi1> x| nu^{1/2} 1_Sp2", kNone);
         }},
        {"Sp4:1biii", g1aiii,
         [](Builder& b, const Triple&) {
             b.add("st_sp4", "nu^{3/2} St_Sp4", kDiscreteGeneric);
             b.add("one_sp4", "nu^{3/2} 1_Sp4", kNone);
             b.add("j_nu2", "J(nu^2; nu^{1/2} St_Sp2)", kNone);
             b.add("j_st", "J(nu^{3/2} St_GL2; 1)", kNone);
         }},
        {"Sp4:1biv", g1aiv,
         [](Builder& b, const Triple&) {
             const char* st = "<nu^{1/2}*chi2> St_GL2 x| 1";
             const char* one = "<nu^{1/2}*chi2> 1_GL2 x| 1";
             b.add("pi1", "pi_1(<chi2>)", kDiscreteGeneric, st);
             b.add("pi2", "pi_2(<chi2>)", kDiscrete, st);
             b.add("j_st", "J(<nu^{1/2}*chi2> St_GL2; 1)", kNone, st);
             b.add("j_st", "J(<nu^{1/2}*chi2> St_GL2; 1)", kNone, one);
             b.add("j_nu_t1", "J(<nu*chi2>; T^1_<chi2>)", kNone, one);
             b.add("j_nu_t2", "J(<nu*chi2>; T^2_<chi2>)", kNone, one);
         }},
        {"Sp4:1ci", g1bi,
         [](Builder& b, const Triple&) {
             b.add("tau", "tau", kTemperedGeneric);
             b.add("tau_prime", "tau'", kTempered);
             b.add("j_nu", "J(nu; 1_F x| 1_Sp2)", kNone);
             b.add("j_st", "J(nu^{1/2} St_GL2; 1)", kNone);
         }},
        {"Sp4:1cii", g1bii,
         [](Builder& b, const Triple&) {
             b.add("one_sp2", "nu x| nu^{1/2} 1_Sp2", kNone);
             b.add("st_sp2", "nu x| nu^{1/2} St_Sp2", kGeneric);
         }},
        {"Sp4:1ciii", g1biii,
         [](Builder& b, const Triple&) {
             b.add("one_gl2", "<nu^{1/2}*chi2> 1_GL2 x| 1", kNone);
             b.add("st_gl2", "<nu^{1/2}*chi2> St_GL2 x| 1", kTemperedGeneric);
         }},
    };
}

Env torus_env(const Triple& x) {
    Env env;
    env.group = x.a.group();
    env.chars = {{"chi1", x.a}, {"chi2", x.b}, {"theta", x.t}};
    return env;
}

Triple torus_triple(const InducedRep& rep) {
    SmoothChar t = rep.group == Group::Sp4 ? SmoothChar(rep.chi1.group()) : rep.theta;
    return {rep.chi1, rep.chi2, t};
}

ReducibilityReport decide_torus(const InducedRep& rep) {
    ReducibilityReport r;
    r.group = rep.group;
    r.levi = LeviKind::Torus;
    Triple x = torus_triple(rep);
    // touch every pair once so label-group mismatches surface early
    (void)(x.a == x.b);
    (void)(x.a == x.t);
    auto conj = conjugates(x, rep.group == Group::GSp4);
    auto cases = rep.group == Group::GSp4 ? gsp4_cases() : sp4_cases();
    LeviLabel support{rep.group, false, LeviKind::Torus};
    for (auto& c : cases) {
        std::optional<Triple> best;
        for (auto& y : conj)
            if (c.guard(y.a, y.b) && (!best || y.key() < best->key())) best = y;
        if (!best) continue;
        r.case_tag = c.tag;
        r.canonical_data = best->a.str() + " x " + best->b.str() + " x| " + best->t.str();
        Env env = torus_env(*best);
        Builder b{r, env, support};
        c.build(b, *best);
        if (c.tag.rfind("Sp4:1a", 0) == 0)
            r.notes.push_back(
                "the two subcases of this family overlap as printed; chi1 of order 2 is read as the length-two "
                "subcase and any other chi1 as the irreducible subcase");
        return r;
    }
    r.case_tag = "irreducible";
    for (auto& y : conj)
        if (y.key() < x.key()) x = y;
    r.canonical_data = x.a.str() + " x " + x.b.str() + " x| " + x.t.str();
    Env env = torus_env(x);
    Builder b{r, env, support};
    bool unitary = x.a.is_unitary() && x.b.is_unitary();
    b.add("full", rep.group == Group::Sp4 ? "<chi1> x <chi2> x| 1" : "<chi1> x <chi2> x| <theta>",
          tempered_if(unitary, true));
    return r;
}

// ---- maximal Levis ----

Env sc_env(const InducedRep& rep) {
    Env env;
    env.group = rep.chi.group();
    env.chars = {{"chi", rep.chi}, {"chi0", rep.chi.unitary_part()}};
    env.names = {{"rho", rep.sigma.id.empty() ? "rho" : rep.sigma.id}};
    return env;
}

ReducibilityReport decide_siegel(const InducedRep& rep) {
    ReducibilityReport r;
    r.group = rep.group;
    r.levi = LeviKind::Siegel;
    const auto& s = rep.sigma;
    s.validate();
    Env env = sc_env(rep);
    env.chars["nub"] = SmoothChar::nu(rep.beta, env.group);
    LeviLabel support{rep.group, false, LeviKind::Siegel};
    Builder b{r, env, support};
    bool half = rep.beta == mpq_class(1, 2) || rep.beta == mpq_class(-1, 2);
    bool omega1 = s.central.is_trivial();
    const std::string tail = rep.group == Group::GSp4 ? " x| <chi>" : " x| 1";
    r.canonical_data = render("<nub> <rho>" + tail, env).second;
    if (half && s.self_dual && omega1) {
        r.case_tag = rep.group == Group::GSp4 ? "GSp4:2" : "Sp4:2a";
        b.add("delta", "delta(nu^{1/2} <rho>" + tail + ")", kDiscreteGeneric);
        auto& c = b.add("quotient", "L(nu^{1/2} <rho>" + tail + ")", kNone);
        b.langlands(c, rep.group == Group::GSp4 ? "J(nu^{1/2} <rho>; <chi>)" : "J(nu^{1/2} <rho>; 1)");
        if (rep.beta < 0) r.notes.push_back("beta = -1/2 is conjugate to beta = 1/2 since rho is self-dual");
        return r;
    }
    if (rep.group == Group::Sp4 && rep.beta == 0 && s.self_dual && !omega1) {
        r.case_tag = "Sp4:2b";
        b.add("piece1", "(<rho> x| 1)^(1)", kTemperedGeneric);
        b.add("piece2", "(<rho> x| 1)^(2)", kTempered);
        return r;
    }
    r.case_tag = "irreducible";
    b.add("full", "<nub> <rho>" + tail, tempered_if(rep.beta == 0, true));
    return r;
}

bool trivial_on(const SmoothChar& chi, const std::vector<std::string>& classes) {
    for (auto& c : classes)
        if (chi.value_on_square_class(c) != 1) return false;
    return true;
}

ReducibilityReport decide_klingen(const InducedRep& rep) {
    ReducibilityReport r;
    r.group = rep.group;
    r.levi = LeviKind::Klingen;
    const auto& s = rep.sigma;
    s.validate();
    Env env = sc_env(rep);
    LeviLabel support{rep.group, false, LeviKind::Klingen};
    Builder b{r, env, support};
    r.canonical_data = render("<chi> x| <rho>", env).second;
    mpq_class e = rep.chi.nu_exp();
    SmoothChar chi0 = rep.chi.unitary_part();
    if (rep.group == Group::GSp4) {
        if (rep.chi.is_trivial()) {
            r.case_tag = "GSp4:3a";
            b.add("piece1", "(1 x| <rho>)^(1)", kTemperedGeneric);
            b.add("piece2", "(1 x| <rho>)^(2)", kTempered);
            return r;
        }
        if ((e == 1 || e == -1) && order2(chi0)) {
            bool stable = std::any_of(s.twist_stable.begin(), s.twist_stable.end(),
                                      [&](const SmoothChar& x) { return x == chi0; });
            if (stable) {
                r.case_tag = "GSp4:3b";
                b.add("delta", "delta(<nu*chi0> x| <rho>)", kDiscreteGeneric);
                auto& c = b.add("quotient", "L(<nu*chi0>, <rho>)", kNone);
                b.langlands(c, "J(<nu*chi0>; <rho>)");
                if (e < 0) r.notes.push_back("nu^{-1} xi_o x| rho is conjugate to nu xi_o x| rho");
                return r;
            }
        }
    } else {
        std::vector<std::string> fs = s.f_sigma.empty() ? std::vector<std::string>{"1"} : s.f_sigma;
        if (chi0.is_trivial() && e == 0) {
            r.case_tag = "Sp4:3a";
            b.add("piece1", "(1 x| <rho>)^(1)", kTemperedGeneric);
            b.add("piece2", "(1 x| <rho>)^(2)", kTempered);
            return r;
        }
        if (order2(chi0)) {
            bool triv = trivial_on(chi0, fs);
            if (!triv && e == 0) {
                r.case_tag = "Sp4:3b";
                b.add("piece1", "(<chi0> x| <rho>)^(1)", kTemperedGeneric);
                b.add("piece2", "(<chi0> x| <rho>)^(2)", kTempered);
                return r;
            }
            if (triv && (e == 1 || e == -1)) {
                r.case_tag = "Sp4:3c";
                b.add("delta", "delta(<nu*chi0> x| <rho>)", kDiscreteGeneric);
                auto& c = b.add("quotient", "L(<nu*chi0> x| <rho>)", kNone);
                b.langlands(c, "J(<nu*chi0>; <rho>)");
                return r;
            }
        }
    }
    r.case_tag = "irreducible";
    b.add("full", "<chi> x| <rho>", tempered_if(e == 0, true));
    return r;
}

}  // namespace

ReducibilityReport decide_reducibility(const InducedRep& rep) {
    switch (rep.levi) {
        case LeviKind::Torus: return decide_torus(rep);
        case LeviKind::Siegel: return decide_siegel(rep);
        case LeviKind::Klingen: return decide_klingen(rep);
        case LeviKind::Full: break;
    }
    fail(Errc::InvalidOperand, "induction from G itself is not a parabolic induction");
}

std::vector<std::string> matched_cases(const InducedRep& rep) {
    if (rep.levi != LeviKind::Torus) return {decide_reducibility(rep).case_tag};
    Triple x = torus_triple(rep);
    auto conj = conjugates(x, rep.group == Group::GSp4);
    std::vector<std::string> out;
    for (auto& c : rep.group == Group::GSp4 ? gsp4_cases() : sp4_cases())
        for (auto& y : conj)
            if (c.guard(y.a, y.b)) {
                out.push_back(c.tag);
                break;
            }
    return out;
}

std::vector<InducedRep> weyl_conjugates(const InducedRep& rep) {
    if (rep.levi != LeviKind::Torus) return {rep};
    std::vector<InducedRep> out;
    for (auto& y : conjugates(torus_triple(rep), rep.group == Group::GSp4)) {
        InducedRep r = rep;
        r.chi1 = y.a;
        r.chi2 = y.b;
        r.theta = y.t;
        out.push_back(r);
    }
    return out;
}

std::string langlands_quotient_label(const InducedRep& rep, const Constituent& c) {
    (void)rep;
    if (c.ess_tempered) fail(Errc::NotApplicable, c.label + " is essentially tempered");
    if (c.langlands) return *c.langlands;
    if (c.label.rfind("J(", 0) == 0) return c.label;
    fail(Errc::Unsupported, "no Langlands data recorded for " + c.label);
}

bool gsp4_torus_reducible_criterion(const SmoothChar& a, const SmoothChar& b) {
    return is_nu_pm(a, 1) || is_nu_pm(b, 1) || nu_related(a, b);
}

BernsteinBlockJ bernstein_block_J(const SmoothChar& chi1, const SmoothChar& chi2) {
    bool r1 = !chi1.is_unramified(), r2 = !chi2.is_unramified();
    if (!r1 && !r2) return {"J1", "G^vee", "G^vee = GSp4", "C2"};
    if (r1 != r2) return {"J2", "GL2 x GSp0", "GL1 x GSp2", "A1"};
    bool inverse = chi1.same_on_units(chi2.inv()) || chi1.same_on_units(chi2);
    if (inverse) {
        if ((chi1 * chi1).is_unramified()) return {"J3", "{(g,h) in GL2 x GL2 : det g = det h}", "GL2 x GL2/GL1", "A1xA1"};
        return {"J4", "GL1 x GSp2", "GL2 x GSp0", "A1"};
    }
    fail(Errc::Unsupported, "both characters ramified with unrelated restrictions to units: J^s is the torus");
}

UnipotentAssignment unipotent_class_of_constituent(const BernsteinBlockJ& block, const Constituent& c) {
    const std::vector<int> p14{1, 1, 1, 1}, p22{2, 2}, p211{2, 1, 1}, p4{4};
    const std::string& t = c.case_tag;
    const std::string& j = block.tag;
    auto uncovered = [&]() -> UnipotentAssignment {
        fail(Errc::Unsupported, "no unipotent assignment recorded for " + c.label + " in " + t + " / " + j);
    };
    if (t == "GSp4:1ai") {
        std::string idx = j == "J1" ? "t_e" : j == "J3" ? "t_a x t_o" : j == "J4" ? "t_a" : "";
        if (idx.empty()) return uncovered();
        if (c.role == "one_gl2") return {p14, 1, idx};
        if (c.role == "st_gl2") return {p22, 1, idx};
    }
    if (t == "GSp4:1aii") {
        std::string idx = j == "J1" ? "t_e" : j == "J2" ? "t_a" : "";
        if (idx.empty()) return uncovered();
        if (c.role == "one_gsp2") return {p14, 1, idx};
        if (c.role == "st_gsp2") return {p22, 1, idx};
    }
    if (t == "GSp4:1aiii" && c.role == "st_gsp4") return {p4, 1, ""};
    if (t == "GSp4:1aiv") {
        if (j == "J1" && c.role == "delta") return {p14, 1, "t_a"};
        if (j == "J3") {
            if (c.role == "delta") return {p22, 1, "t_a x t_a"};
            if (c.role == "st_theta" || c.role == "st_chi2theta") return {p211, 1, "t_a x t_a"};
            if (c.role == "j_nu") return {p14, 1, "t_a x t_a"};
        }
    }
    if (t == "GSp4:1bi" && j == "J1") {
        if (c.role == "j_nu") return {p14, 1, "t_b"};
        if (c.role == "j_st") return {p22, 1, "t_b"};
        if (c.role == "tau_T") return {p211, -1, "t_b"};
        if (c.role == "tau_S") return {p211, 1, "t_b"};
    }
    if (t == "GSp4:1biii") {
        std::string idx = j == "J1" ? "t_e" : j == "J3" ? "t_a x t_o" : "";
        if (idx.empty()) return uncovered();
        if (c.role == "one_gl2") return {p14, 1, idx};
        if (c.role == "st_gl2") return {p22, 1, idx};
    }
    return uncovered();
}

std::string partition_str(const std::vector<int>& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.size();) {
        size_t k = i;
        while (k < p.size() && p[k] == p[i]) ++k;
        if (i) s += ",";
        s += std::to_string(p[i]);
        if (k - i > 1) s += "^" + std::to_string(k - i);
        i = k;
    }
    return s + "]";
}

}  // namespace llc
