#include "supercuspidal.hpp"

namespace llc {

namespace {

QHalf half() { return QHalf(mpq_class(1, 2)); }
QHalf q1sq() { return (QHalf::q() - 1).pow(2); }

DepthZeroSC make(Group g, std::string key, std::string name, std::string family, std::string vertex,
                 std::optional<FiniteGroupLabel> quotient, std::string inducing, std::optional<QHalf> dim,
                 std::string singularity) {
    DepthZeroSC r;
    r.group = g;
    r.key = std::move(key);
    r.name = std::move(name);
    r.family = std::move(family);
    r.vertex = vertex == "any" ? vertex : canonical_vertex(g, vertex);
    if (r.vertex != "any")
        for (auto& p : parahoric_quotients(g))
            if (p.vertex == r.vertex) r.vertex_aliases = p.aliases;
    r.quotient = quotient;
    r.inducing = std::move(inducing);
    r.inducing_dimension = dim;
    r.singularity = std::move(singularity);
    return r;
}

std::vector<DepthZeroSC> build(Group g) {
    FiniteGroupLabel gsp4{FiniteFamily::GSp4, 2}, gsp22{FiniteFamily::GSp22, 2};
    FiniteGroupLabel sp4{FiniteFamily::Sp4, 2}, sp2sp2{FiniteFamily::Sp2xSp2, 2};
    QHalf theta10 = *has_unipotent_cuspidal(sp4).dimension;
    std::vector<DepthZeroSC> v;
    if (g == Group::GSp4) {
        v.push_back(make(g, "pi_S_theta", "pi_(S,theta)", "1", "any", std::nullopt, "theta x R_S'^theta", std::nullopt,
                         "regular"));
        v.push_back(make(g, "pi_beta_theta10_chi", "pi_beta(theta10 x chi)", "2", "vertex:beta", gsp4,
                         "theta10 x chi", theta10, "F-singular"));
        v.push_back(make(g, "pi_alpha_eta2", "pi_alpha(eta2;chi)", "3", "vertex:alpha", gsp22,
                         "omega_cusp^eta2 x chi", half() * q1sq(), "k_F-singular"));
        v.push_back(make(g, "pi_S_theta_theta_chi", "pi_(S,theta x theta x chi)", "4", "vertex:alpha", gsp22,
                         "R_T^theta x R_T^theta", q1sq(), "F-singular, k_F-nonsingular"));
        return v;
    }
    v.push_back(make(g, "pi_S_theta", "pi_(S,theta)", "1", "any", std::nullopt, "theta x R_S'^theta", std::nullopt,
                     "regular"));
    v.push_back(make(g, "pi_beta_theta10", "pi_beta(theta10)", "2a", "vertex:beta", sp4, "theta10", theta10,
                     "k_F-singular"));
    v.push_back(make(g, "pi_gamma_theta10", "pi_gamma(theta10)", "2a", "vertex:gamma", sp4, "theta10", theta10,
                     "k_F-singular"));
    auto ns = make(g, "pi_nonsingular_O2U1", "cInd E(O2 x U1, 1)", "2b", "vertex:beta", sp4, "1, sgn of O2 x U1",
                   std::nullopt, "nonsingular");
    ns.count = QHalf::q() - 1;
    v.push_back(ns);
    v.push_back(make(g, "pi_alpha_plus_eta2", "pi_alpha^+(eta2)", "3", "vertex:alpha", sp2sp2,
                     "R'_+(theta0) x R'_+(theta0)^diag(varpi,1)", QHalf(mpq_class(1, 4)) * q1sq(), "k_F-singular"));
    v.push_back(make(g, "pi_alpha_minus_eta2", "pi_alpha^-(eta2)", "3", "vertex:alpha", sp2sp2,
                     "R'_-(theta0) x R'_-(theta0)^diag(varpi,1)", QHalf(mpq_class(1, 4)) * q1sq(), "k_F-singular"));
    v.push_back(make(g, "pi_alpha_theta", "pi_alpha(theta)", "4", "vertex:alpha", sp2sp2,
                     "R_T^theta x (R_T^theta)^diag(varpi,1)", q1sq(), "F-singular, k_F-nonsingular"));
    return v;
}

}  // namespace

std::vector<DepthZeroSC> enumerate_depth_zero(Group g) { return build(g); }

const DepthZeroSC& find_depth_zero(Group g, const std::string& key) {
    static const std::vector<DepthZeroSC> sp = build(Group::Sp4), gsp = build(Group::GSp4);
    for (auto& r : g == Group::Sp4 ? sp : gsp)
        if (r.key == key) return r;
    fail(Errc::InvalidOperand, std::string("unknown depth-zero representation '") + key + "' for " + group_name(g));
}

QHalf formal_degree_depth_zero(const DepthZeroSC& rep) {
    if (!rep.inducing_dimension || !rep.quotient)
        fail(Errc::IncompleteData, "no inducing dimension recorded for " + rep.name);
    const auto& gx = *rep.quotient;
    return *rep.inducing_dimension / (gx.order() * QHalf::t_pow(-gx.dimension()));
}

QHalf formal_degree_delta_eta2() {
    QHalf q = QHalf::q();
    return half() * (1 / (q.pow(2) - 1)) * ((q - 1) / (q.pow(2) - 1)) * QHalf::t_pow(3);
}

QHalf PositiveDepthDegree::value() const {
    if (!is_qhalf()) fail(Errc::InvalidOperand, "exponent " + exponent.get_str() + " is not a half-integer");
    mpz_class twice = mpq_class(2 * exponent).get_num();
    return coefficient * QHalf::t_pow(static_cast<int>(twice.get_si()));
}

std::string PositiveDepthDegree::str() const {
    if (is_qhalf()) return value().pretty();
    return "(" + coefficient.pretty() + ")*q^{" + exponent.get_str() + "}";
}

PositiveDepthDegree formal_degree_positive_depth(const PositiveDepthDatum& d) {
    size_t n = d.depths.size();
    if (n == 0) fail(Errc::InvalidDatum, "empty depth sequence");
    if (d.root_counts.size() != n) fail(Errc::InvalidDatum, "need one root count per twisted Levi");
    if (n == 1) {
        if (d.depths[0] < 0) fail(Errc::InvalidDatum, "r_0 must be nonnegative");
    } else {
        if (d.depths[0] <= 0) fail(Errc::InvalidDatum, "r_0 must be positive");
        for (size_t i = 1; i + 1 < n; ++i)
            if (d.depths[i] <= d.depths[i - 1]) fail(Errc::InvalidDatum, "depths must increase strictly");
        if (d.depths[n - 1] < d.depths[n - 2]) fail(Errc::InvalidDatum, "r_d must be at least r_{d-1}");
    }
    for (size_t i = 0; i < n; ++i) {
        if (d.root_counts[i] < 0) fail(Errc::InvalidDatum, "negative root count");
        if (i && d.root_counts[i] < d.root_counts[i - 1]) fail(Errc::InvalidDatum, "root counts must not decrease");
    }
    if (d.index.is_zero()) fail(Errc::InvalidDatum, "zero index");
    mpq_class e = mpq_class(d.dim_g, 2) + mpq_class(d.dim_g0, 2);
    for (size_t i = 0; i + 1 < n; ++i) e += d.depths[i] * (d.root_counts[i + 1] - d.root_counts[i]) / 2;
    e.canonicalize();
    return {d.dim_rho / d.index, e};
}

namespace {

TypeDatumTemplate tmpl(Group g, int i, std::vector<std::string> seq, bool abelian, bool singular = false,
                       std::string cond = "") {
    TypeDatumTemplate t;
    t.group = g;
    t.index = i;
    if (seq.back() != "G") seq.push_back("G");
    t.sequence = std::move(seq);
    t.abelian_g0 = abelian;
    if (abelian) t.dim_rho0 = 1;
    t.can_be_singular = singular;
    t.singular_condition = std::move(cond);
    t.anisotropy = "Z_{G^0}/Z_G anisotropic";
    return t;
}

}  // namespace

std::vector<TypeDatumTemplate> enumerate_type_templates(Group g) {
    const std::string disc = "-c1*c2 in Nm_{F1/F}(F1^x)";
    if (g == Group::Sp4)
        return {
            tmpl(g, 1, {"T^(1)_{F1/F1#}"}, true),
            tmpl(g, 2, {"T^(1)_{F1#+F1#/F1#}"}, true),
            tmpl(g, 3, {"T^(1)_{F1/F,F2/F}"}, true),
            tmpl(g, 4, {"R^(1)_{F1/F}Gm x SL2"}, false),
            tmpl(g, 5, {"U_{F1/F}(c1,c2)"}, false, true, disc),
            tmpl(g, 6, {"T^(1)_{F1/F,F2/F}", "R^(1)_{F1/F}Gm x SL2"}, true),
            tmpl(g, 7, {"T^(1)_{F1/F,F1/F}", "U_{F1/F}(c1,c2)"}, true),
            tmpl(g, 8, {"T^(1)_{F1#+F1#/F1#}", "GL2 x Sp0"}, true),
        };
    return {
        tmpl(g, 1, {"T_{F1/F1#}"}, true),
        tmpl(g, 2, {"T_{F1#+F1#/F1#}"}, true),
        tmpl(g, 3, {"T_{F1/F,F2/F}"}, true),
        tmpl(g, 4, {"{(x,y) in R_{F1/F}Gm x GL2 : Nm x = det y}"}, false),
        tmpl(g, 5, {"GU_{F1/F}(c1,c2)"}, false, true, disc),
        tmpl(g, 6, {"T_{F1/F,F2/F}", "{(x,y) in R_{F1/F}Gm x GL2 : Nm x = det y}"}, true),
        tmpl(g, 7, {"T_{F1/F,F1/F}", "GU_{F1/F}(2)"}, true),
        tmpl(g, 8, {"T^(1)_{F1#+F1#/F1#}", "GL2 x GSp0"}, true),
    };
}

int ToriClassTemplate::n() const {
    int s = 0;
    for (auto& f : factors) s += f.subfield_degree;
    return s;
}

int ToriClassTemplate::lattice_degree() const { return 2 * n(); }

std::vector<ToriClassTemplate> anisotropic_tori(Group g) {
    EtaleFactor quad1{"F1", "F", 1, false}, quad2{"F2", "F", 1, false};
    EtaleFactor tower{"F1", "F1#", 2, false}, split{"F1#+F1#", "F1#", 2, true};
    if (g == Group::Sp4)
        return {
            {g, "T^(1)_{F1/F,F2/F}(c1,c2)", {quad1, quad2}, {"c1 mod N(F1)", "c2 mod N(F2)"},
             "R^(1)_{F1/F}Gm x 1 -> R^(1)Gm x SL2; 1 x R^(1)_{F2/F}Gm -> SL2 x R^(1)Gm; diagonal when F1 = F2 -> U(c1,c2)"},
            {g, "T^(1)_{F1#+F1#/F1#}", {split}, {}, "{xy = 1} -> GL2 x Sp0"},
            {g, "T^(1)_{F1/F1#}(c)", {tower}, {"c mod N(F1)"}, "none"},
        };
    return {
        {g, "T_{F1/F,F2/F}(c1,c2)", {quad1, quad2}, {"c1 mod N(F1)", "c2 mod N(F2)"},
         "{Nm x = y^2} -> {Nm x = det y}; diagonal when F1 = F2 -> GU(2)"},
        {g, "T_{F1#+F1#/F1#}", {split}, {}, "none"},
        {g, "T_{F1/F1#}(c)", {tower}, {"c mod N(F1)"}, "none"},
    };
}

}  // namespace llc
