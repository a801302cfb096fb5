#include "finite_reductive.hpp"

#include <regex>

namespace llc {

namespace {

QHalf qp(int k) { return QHalf::q_pow(k); }
QHalf qm1(int k) { return qp(k) - 1; }  // q^k - 1
QHalf qp1(int k) { return qp(k) + 1; }  // q^k + 1

bool is_square_plus(int n) {  // n = s^2 + s with s >= 1
    for (int s = 1; s * s + s <= n; ++s)
        if (s * s + s == n) return true;
    return false;
}

}  // namespace

std::string FiniteGroupLabel::name() const {
    switch (family) {
        case FiniteFamily::GSp4: return "GSp4";
        case FiniteFamily::Sp4: return "Sp4";
        case FiniteFamily::GSp22: return "GSp_{2,2}";
        case FiniteFamily::Sp2xSp2: return "Sp2xSp2";
        case FiniteFamily::SL2: return "SL2";
        case FiniteFamily::SOodd: return "SO" + std::to_string(2 * n + 1);
        case FiniteFamily::SOplus: return "SO" + std::to_string(2 * n) + "+";
        case FiniteFamily::SOminus: return "SO" + std::to_string(2 * n) + "-";
        case FiniteFamily::GL: return "GL" + std::to_string(n);
        case FiniteFamily::U: return "U" + std::to_string(n);
        case FiniteFamily::O2plus: return "O2+";
        case FiniteFamily::O2minus: return "O2-";
    }
    return "?";
}

FiniteGroupLabel parse_finite_label(const std::string& s) {
    if (s == "GSp4") return {FiniteFamily::GSp4, 2};
    if (s == "Sp4") return {FiniteFamily::Sp4, 2};
    if (s == "GSp_{2,2}" || s == "GSp22") return {FiniteFamily::GSp22, 2};
    if (s == "Sp2xSp2" || s == "SL2xSL2") return {FiniteFamily::Sp2xSp2, 2};
    if (s == "SL2" || s == "Sp2") return {FiniteFamily::SL2, 1};
    if (s == "O2+") return {FiniteFamily::O2plus, 1};
    if (s == "O2-") return {FiniteFamily::O2minus, 1};
    std::smatch m;
    static const std::regex so(R"(SO_?\{?(\d+)\}?([+-]?))"), gl(R"(GL_?\{?(\d+)\}?)"), un(R"(U_?\{?(\d+)\}?)");
    if (std::regex_match(s, m, so)) {
        int d = std::stoi(m[1]);
        std::string sign = m[2];
        if (d % 2 == 1 && sign.empty() && d >= 3) return {FiniteFamily::SOodd, (d - 1) / 2};
        if (d % 2 == 0 && d >= 2) return {sign == "-" ? FiniteFamily::SOminus : FiniteFamily::SOplus, d / 2};
    }
    if (std::regex_match(s, m, gl) && std::stoi(m[1]) >= 1) return {FiniteFamily::GL, std::stoi(m[1])};
    if (std::regex_match(s, m, un) && std::stoi(m[1]) >= 1) return {FiniteFamily::U, std::stoi(m[1])};
    fail(Errc::Unsupported, "unsupported finite group label '" + s + "'");
}

QHalf FiniteGroupLabel::order() const {
    switch (family) {
        case FiniteFamily::GSp4: return qm1(1) * qp(4) * qm1(2) * qm1(4);
        case FiniteFamily::Sp4: return qp(4) * qm1(2) * qm1(4);
        case FiniteFamily::GSp22: return qm1(1) * qp(2) * qm1(2).pow(2);
        case FiniteFamily::Sp2xSp2: return qp(2) * qm1(2).pow(2);
        case FiniteFamily::SL2: return qp(1) * qm1(2);
        case FiniteFamily::SOodd: {
            QHalf r = qp(n * n);
            for (int i = 1; i <= n; ++i) r *= qm1(2 * i);
            return r;
        }
        case FiniteFamily::SOplus:
        case FiniteFamily::SOminus: {
            QHalf r = qp(n * (n - 1)) * (family == FiniteFamily::SOplus ? qm1(n) : qp1(n));
            for (int i = 1; i < n; ++i) r *= qm1(2 * i);
            return r;
        }
        case FiniteFamily::GL: {
            QHalf r = qp(n * (n - 1) / 2);
            for (int i = 1; i <= n; ++i) r *= qm1(i);
            return r;
        }
        case FiniteFamily::U: {
            QHalf r = qp(n * (n - 1) / 2);
            for (int i = 1; i <= n; ++i) r *= (i % 2 ? qp1(i) : qm1(i));
            return r;
        }
        case FiniteFamily::O2plus: return QHalf(2) * qm1(1);
        case FiniteFamily::O2minus: return QHalf(2) * qp1(1);
    }
    fail(Errc::Unsupported, "no order for " + name());
}

int FiniteGroupLabel::dimension() const {
    switch (family) {
        case FiniteFamily::GSp4: return 11;
        case FiniteFamily::Sp4: return 10;
        case FiniteFamily::GSp22: return 7;
        case FiniteFamily::Sp2xSp2: return 6;
        case FiniteFamily::SL2: return 3;
        case FiniteFamily::SOodd: return n * (2 * n + 1);
        case FiniteFamily::SOplus:
        case FiniteFamily::SOminus: return n * (2 * n - 1);
        case FiniteFamily::GL:
        case FiniteFamily::U: return n * n;
        case FiniteFamily::O2plus:
        case FiniteFamily::O2minus: return 1;
    }
    return 0;
}

int FiniteGroupLabel::positive_roots() const {
    switch (family) {
        case FiniteFamily::GSp4:
        case FiniteFamily::Sp4: return 4;
        case FiniteFamily::GSp22:
        case FiniteFamily::Sp2xSp2: return 2;
        case FiniteFamily::SL2: return 1;
        case FiniteFamily::SOodd: return n * n;
        case FiniteFamily::SOplus:
        case FiniteFamily::SOminus: return n * (n - 1);
        case FiniteFamily::GL:
        case FiniteFamily::U: return n * (n - 1) / 2;
        case FiniteFamily::O2plus:
        case FiniteFamily::O2minus: return 0;
    }
    return 0;
}

QHalf group_order(const FiniteGroupLabel& g) { return g.order(); }

namespace {
QHalf theta10_dimension() { return QHalf(mpq_class(1, 2)) * qp(1) * qm1(1).pow(2); }
}  // namespace

UnipotentCuspidal has_unipotent_cuspidal(const FiniteGroupLabel& g) {
    UnipotentCuspidal r;
    switch (g.family) {
        case FiniteFamily::SOodd: r.exists = is_square_plus(g.n); break;
        case FiniteFamily::SOplus:
            for (int s = 1; 4 * s * s <= g.n; ++s) r.exists |= (4 * s * s == g.n);
            break;
        case FiniteFamily::SOminus:
            for (int s = 1; (2 * s + 1) * (2 * s + 1) <= g.n; ++s) r.exists |= ((2 * s + 1) * (2 * s + 1) == g.n);
            break;
        case FiniteFamily::GL: r.exists = false; break;
        case FiniteFamily::GSp4:
        case FiniteFamily::Sp4: r.exists = true; break;
        case FiniteFamily::GSp22:
        case FiniteFamily::Sp2xSp2:
        case FiniteFamily::SL2: r.exists = false; break;
        default: fail(Errc::Unsupported, "unipotent cuspidal predicate not available for " + g.name());
    }
    bool rank_two = g.family == FiniteFamily::GSp4 || g.family == FiniteFamily::Sp4 ||
                    (g.family == FiniteFamily::SOodd && g.n == 2);
    if (r.exists && rank_two) r.dimension = theta10_dimension();
    return r;
}

std::vector<CuspidalClass> cuspidal_classes(const FiniteGroupLabel& g) {
    QHalf q1 = qm1(1);
    std::vector<CuspidalClass> out;
    switch (g.family) {
        case FiniteFamily::GSp22: {
            CuspidalClass a;
            a.ambient = g.name();
            a.name = "rho_(lambda1,lambda2)";
            a.series = "(lambda1,lambda1^q),(lambda2,lambda2^q)";
            a.condition = "lambda1,lambda2 in F_{q^2}\\F_q; lambda1^{q-1} != -1 or lambda2^{q-1} != -1";
            a.enhancements = {"1"};
            a.member_dimension = q1.pow(2);
            out.push_back(a);
            CuspidalClass b = a;
            b.name = "rho^pm_(lambda1,lambda2)";
            b.condition = "lambda1^{q-1} = lambda2^{q-1} = -1";
            b.members_per_class = 2;
            b.enhancements = {"1", "sgn"};
            b.member_dimension = QHalf(mpq_class(1, 2)) * q1.pow(2);
            b.singular = true;
            out.push_back(b);
            break;
        }
        case FiniteFamily::GSp4: {
            CuspidalClass a;
            a.ambient = g.name();
            a.name = "theta10 twists";
            a.series = "s central in GSpin5";
            a.condition = "s in Z(GSpin5)(F_q)";
            a.class_count = q1;
            a.enhancements = {"theta10"};
            a.member_dimension = theta10_dimension();
            a.unipotent = true;
            a.singular = true;
            out.push_back(a);
            CuspidalClass b;
            b.ambient = g.name();
            b.name = "R_T^theta";
            b.series = "s regular in an anisotropic maximal torus";
            b.condition = "T anisotropic, theta regular";
            b.enhancements = {"1"};
            out.push_back(b);
            break;
        }
        case FiniteFamily::Sp4: {
            CuspidalClass a;
            a.ambient = g.name();
            a.name = "theta10";
            a.series = "1,1,1,1,1";
            a.condition = "s = 1";
            a.class_count = QHalf(1);
            a.enhancements = {"theta10"};
            a.member_dimension = theta10_dimension();
            a.unipotent = true;
            a.singular = true;
            out.push_back(a);
            CuspidalClass b;
            b.ambient = g.name();
            b.name = "E(O2 x U1, 1)";
            b.series = "1,-1,-1,alpha^{+-1}";
            b.condition = "alpha in mu_{q+1}\\{+-1}";
            b.class_count = QHalf(mpq_class(1, 2)) * q1;
            b.members_per_class = 2;
            b.enhancements = {"1", "sgn"};
            out.push_back(b);
            CuspidalClass c;
            c.ambient = g.name();
            c.name = "E(T, 1) isotropic";
            c.series = "1,alpha^{+-1},beta^{+-1}";
            c.condition = "alpha != beta^{+-1} in mu_{q+1}\\{+-1}";
            c.enhancements = {"1"};
            out.push_back(c);
            CuspidalClass d;
            d.ambient = g.name();
            d.name = "E(T, 1) anisotropic";
            d.series = "1,alpha,alpha^q,alpha^{q^2},alpha^{q^3}";
            d.condition = "alpha in mu_{q^2+1}\\{+-1}";
            d.enhancements = {"1"};
            out.push_back(d);
            break;
        }
        case FiniteFamily::Sp2xSp2: {
            CuspidalClass a;
            a.ambient = g.name();
            a.name = "R_T^theta x R_T^theta'";
            a.series = "(theta, theta') regular on the anisotropic torus";
            a.condition = "theta, theta' in mu_{q+1}\\{+-1}";
            a.enhancements = {"1"};
            a.member_dimension = q1.pow(2);
            out.push_back(a);
            CuspidalClass b = a;
            b.name = "R'_pm(theta0) x R'_pm(theta0)";
            b.series = "theta0 of order 2";
            b.condition = "theta0 = -1 on both factors";
            b.members_per_class = 2;
            b.enhancements = {"+", "-"};
            b.member_dimension = QHalf(mpq_class(1, 4)) * q1.pow(2);
            b.singular = true;
            out.push_back(b);
            break;
        }
        default: fail(Errc::Unsupported, "cuspidal classes are tabulated only for GSp_{2,2}, GSp4, Sp4 and Sp2xSp2");
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> cuspidal_notation_aliases() {
    return {{"lambda1", "alpha"}, {"lambda2", "beta"}};
}

}  // namespace llc
