#include "qfield.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace llc {

namespace poly {

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

bool is_zero(const Poly& p) { return p.empty(); }

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly scale(const Poly& a, const mpq_class& c) {
    if (c == 0) return {};
    Poly r(a);
    for (auto& x : r) x *= c;
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.empty()) fail(Errc::InvalidOperand, "polynomial division by zero");
    Poly r(a);
    trim(r);
    if (r.size() < b.size()) return {{}, r};
    Poly quo(r.size() - b.size() + 1);
    const mpq_class& lead = b.back();
    for (int i = degree(r); i >= degree(b); --i) {
        mpq_class c = r[i] / lead;
        if (c == 0) continue;
        int s = i - degree(b);
        quo[s] = c;
        for (size_t j = 0; j < b.size(); ++j) r[s + j] -= c * b[j];
    }
    trim(r);
    trim(quo);
    return {quo, r};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x(a), y(b);
    trim(x);
    trim(y);
    while (!y.empty()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty()) return x;
    mpq_class lead = x.back();
    for (auto& c : x) c /= lead;
    return x;
}

Poly deriv(const Poly& a) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
    trim(r);
    return r;
}

Poly shift(const Poly& a, int k) {
    if (a.empty()) return {};
    Poly r(k, mpq_class(0));
    r.insert(r.end(), a.begin(), a.end());
    return r;
}

mpq_class eval(const Poly& a, const mpq_class& x) {
    mpq_class r = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
    return r;
}

Poly monomial(const mpq_class& c, int k) {
    if (c == 0) return {};
    Poly r(k + 1, mpq_class(0));
    r[k] = c;
    return r;
}

}  // namespace poly

QHalf::QHalf() = default;

QHalf::QHalf(long c) : QHalf(mpq_class(c)) {}

QHalf::QHalf(const mpq_class& c) {
    mpq_class x = c;
    x.canonicalize();
    if (x != 0) num_ = {x};
}

QHalf QHalf::t_pow(int k) {
    QHalf r;
    r.k_ = k;
    r.num_ = {mpq_class(1)};
    return r;
}

QHalf QHalf::from_q_poly(const std::vector<long>& coeffs) {
    Poly n;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        n.resize(2 * i + 1);
        n[2 * i] = coeffs[i];
    }
    poly::trim(n);
    return from_parts(0, n, {mpq_class(1)});
}

QHalf QHalf::from_parts(int k, Poly num, Poly den) {
    QHalf r;
    r.k_ = k;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.canonicalize();
    return r;
}

void QHalf::canonicalize() {
    poly::trim(num_);
    poly::trim(den_);
    if (den_.empty()) fail(Errc::InvalidOperand, "zero denominator");
    if (num_.empty()) {
        k_ = 0;
        den_ = {mpq_class(1)};
        return;
    }
    auto strip = [](Poly& p) {
        size_t z = 0;
        while (z < p.size() && p[z] == 0) ++z;
        p.erase(p.begin(), p.begin() + z);
        return static_cast<int>(z);
    };
    k_ += strip(num_);
    k_ -= strip(den_);
    Poly g = poly::gcd(num_, den_);
    if (g.size() > 1) {
        num_ = poly::divmod(num_, g).first;
        den_ = poly::divmod(den_, g).first;
    }
    mpq_class lead = den_.back();
    if (lead != 1) {
        for (auto& c : num_) c /= lead;
        for (auto& c : den_) c /= lead;
    }
}

bool QHalf::q_polynomial_parts() const {
    for (size_t i = 0; i < num_.size(); ++i)
        if (num_[i] != 0 && i % 2 != 0) return false;
    for (size_t i = 0; i < den_.size(); ++i)
        if (den_[i] != 0 && i % 2 != 0) return false;
    return true;
}

QHalf QHalf::operator-() const {
    QHalf r(*this);
    for (auto& c : r.num_) c = -c;
    return r;
}

QHalf operator+(const QHalf& a, const QHalf& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int m = std::min(a.k_, b.k_);
    Poly n = poly::add(poly::shift(poly::mul(a.num_, b.den_), a.k_ - m),
                       poly::shift(poly::mul(b.num_, a.den_), b.k_ - m));
    return QHalf::from_parts(m, n, poly::mul(a.den_, b.den_));
}

QHalf operator-(const QHalf& a, const QHalf& b) { return a + (-b); }

QHalf operator*(const QHalf& a, const QHalf& b) {
    if (a.is_zero() || b.is_zero()) return QHalf();
    return QHalf::from_parts(a.k_ + b.k_, poly::mul(a.num_, b.num_), poly::mul(a.den_, b.den_));
}

QHalf operator/(const QHalf& a, const QHalf& b) {
    if (b.is_zero()) fail(Errc::InvalidOperand, "division by zero");
    if (a.is_zero()) return QHalf();
    return QHalf::from_parts(a.k_ - b.k_, poly::mul(a.num_, b.den_), poly::mul(a.den_, b.num_));
}

bool operator==(const QHalf& a, const QHalf& b) {
    return a.k_ == b.k_ && a.num_ == b.num_ && a.den_ == b.den_;
}

QHalf QHalf::pow(int n) const {
    if (n < 0) return QHalf(1) / pow(-n);
    QHalf r(1), base(*this);
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

QHalf qh_arith(const QHalf& a, const QHalf& b, QOp op) {
    switch (op) {
        case QOp::Add: return a + b;
        case QOp::Sub: return a - b;
        case QOp::Mul: return a * b;
        case QOp::Div: return a / b;
    }
    fail(Errc::InvalidOperand, "unknown operation");
}

namespace {

std::string term_str(const mpq_class& c, int e, bool first) {
    std::string out;
    mpq_class a = abs(c);
    if (c < 0)
        out += "-";
    else if (!first)
        out += "+";
    if (e == 0) return out + a.get_str();
    if (a != 1) out += a.get_str() + "*";
    if (e == 2) return out + "q";
    if (e % 2 == 0) return out + "q^{" + std::to_string(e / 2) + "}";
    return out + "q^{" + std::to_string(e) + "/2}";
}

std::string poly_str(const Poly& p, int k) {
    std::string out;
    bool first = true;
    for (int i = poly::degree(p); i >= 0; --i) {
        if (p[i] == 0) continue;
        out += term_str(p[i], k + i, first);
        first = false;
    }
    return first ? "0" : out;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    QHalf run() {
        QHalf v = expr();
        skip();
        if (pos_ != s_.size()) error("trailing input");
        return v;
    }

private:
    [[noreturn]] void error(const std::string& msg) {
        fail(Errc::InvalidOperand, "cannot parse '" + s_ + "': " + msg + " at offset " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) error(std::string("expected '") + c + "'");
    }
    mpz_class integer() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) error("expected integer");
        return mpz_class(s_.substr(start, pos_ - start));
    }
    QHalf expr() {
        QHalf v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }
    QHalf term() {
        QHalf v = unary();
        for (;;) {
            if (eat('*'))
                v *= unary();
            else if (eat('/'))
                v /= unary();
            else
                return v;
        }
    }
    QHalf unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    // Exponent as a rational with denominator 1 or 2.
    mpq_class exponent() {
        if (eat('{')) {
            bool neg = eat('-');
            mpq_class e(integer());
            if (eat('/')) e /= mpq_class(integer());
            expect('}');
            e.canonicalize();
            return neg ? mpq_class(-e) : e;
        }
        bool neg = eat('-');
        mpq_class e(integer());
        return neg ? mpq_class(-e) : e;
    }
    QHalf power() {
        skip();
        bool is_q = pos_ < s_.size() && s_[pos_] == 'q';
        QHalf base = primary();
        if (!eat('^')) return base;
        mpq_class e = exponent();
        mpq_class twice = e * 2;
        if (twice.get_den() != 1) error("exponent must be a half-integer");
        if (is_q) return QHalf::t_pow(static_cast<int>(twice.get_num().get_si()));
        if (e.get_den() != 1) error("fractional exponent on a non-q base");
        return base.pow(static_cast<int>(e.get_num().get_si()));
    }
    QHalf primary() {
        skip();
        if (pos_ >= s_.size()) error("unexpected end");
        char c = s_[pos_];
        if (c == 'q') {
            ++pos_;
            return QHalf::q();
        }
        if (c == '(') {
            ++pos_;
            QHalf v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return QHalf(mpq_class(integer()));
        error(std::string("unexpected '") + c + "'");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

QHalf QHalf::parse(const std::string& text) { return Parser(text).run(); }

std::string QHalf::str() const {
    if (is_zero()) return "0";
    std::string n = poly_str(num_, k_);
    if (den_.size() == 1) return n;
    return "(" + n + ")/(" + poly_str(den_, 0) + ")";
}

std::string QHalf::pretty() const {
    if (is_zero()) return "0";
    if (!q_polynomial_parts()) return str();
    return qh_factor(*this).str();
}

std::string QValue::str() const {
    std::string root = "sqrt(" + std::to_string(q0) + ")";
    if (s == 0) return r.get_str();
    std::string sp;
    mpq_class as = abs(s);
    sp = (as == 1) ? root : as.get_str() + "*" + root;
    if (r == 0) return (s < 0 ? "-" : "") + sp;
    return r.get_str() + (s < 0 ? "-" : "+") + sp;
}

QValue operator*(const QValue& a, const QValue& b) {
    if (a.q0 != b.q0) fail(Errc::InvalidOperand, "evaluation points differ");
    QValue r;
    r.q0 = a.q0;
    r.r = a.r * b.r + a.s * b.s * a.q0;
    r.s = a.r * b.s + a.s * b.r;
    return r;
}

namespace {

mpq_class int_pow(long base, int e) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), mpz_class(base).get_mpz_t(), static_cast<unsigned long>(std::abs(e)));
    return e >= 0 ? mpq_class(p) : mpq_class(1, 1) / mpq_class(p);
}

// Splits sum_i c_i t^{k+i} at t^2 = q0 into A + B*sqrt(q0).
std::pair<mpq_class, mpq_class> split_eval(const Poly& p, int k, long q0) {
    mpq_class a = 0, b = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        int e = k + static_cast<int>(i);
        int h = (e >= 0) ? e / 2 : -((-e + 1) / 2);
        if (e - 2 * h == 0)
            a += p[i] * int_pow(q0, h);
        else
            b += p[i] * int_pow(q0, h);
    }
    return {a, b};
}

}  // namespace

QValue qh_eval(const QHalf& x, long q0) {
    if (q0 <= 0) fail(Errc::InvalidOperand, "evaluation point must be positive");
    auto [a, b] = split_eval(x.num(), x.t_shift(), q0);
    auto [c, d] = split_eval(x.den(), 0, q0);
    QValue v;
    v.q0 = q0;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), mpz_class(q0).get_mpz_t());
    if (root * root == q0) {
        mpq_class den = c + d * mpq_class(root);
        if (den == 0) fail(Errc::EvaluationPole, "pole at q = " + std::to_string(q0));
        v.r = (a + b * mpq_class(root)) / den;
        return v;
    }
    if (c == 0 && d == 0) fail(Errc::EvaluationPole, "pole at q = " + std::to_string(q0));
    mpq_class n2 = c * c - d * d * q0;
    v.r = (a * c - b * d * q0) / n2;
    v.s = (b * c - a * d) / n2;
    return v;
}

PrimeToP prime_to_p_part(const QHalf& order) {
    if (order.is_zero() || !order.is_polynomial())
        fail(Errc::InvalidOperand, "prime-to-p part needs a nonzero polynomial, got " + order.str());
    PrimeToP out;
    out.m = QHalf::from_parts(0, order.num(), {mpq_class(1)});
    out.q_power = mpq_class(order.t_shift(), 2);
    out.q_power.canonicalize();
    return out;
}

// ---- integer factorization ----

namespace {

using ZPoly = std::vector<mpz_class>;

Poly to_q(const ZPoly& p) {
    Poly r(p.begin(), p.end());
    poly::trim(r);
    return r;
}

// Scales a rational polynomial to a primitive integer one with positive lead; returns the factor removed.
mpq_class primitive_part(const Poly& p, ZPoly& out) {
    mpz_class l = 1;
    for (auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    ZPoly z;
    mpz_class g = 0;
    for (auto& c : p) {
        mpz_class v = c.get_num() * (l / c.get_den());
        z.push_back(v);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (g == 0) {
        out.clear();
        return 0;
    }
    if (z.back() < 0) g = -g;
    for (auto& c : z) c /= g;
    out = z;
    return mpq_class(g, l);
}

ZPoly to_z(const Poly& p) {
    ZPoly z;
    primitive_part(p, z);
    return z;
}

bool divides(const Poly& d, const Poly& f, Poly& quo) {
    auto [q, r] = poly::divmod(f, d);
    if (!r.empty()) return false;
    quo = q;
    return true;
}

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

mpz_class zeval(const ZPoly& p, const mpz_class& x) {
    mpz_class r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

const mpz_class kDivisorCap("1000000000000");

// Factor of degree d by interpolation through divisors of values; empty when none.
Poly kronecker_factor(const ZPoly& g, int d) {
    std::vector<mpz_class> xs;
    std::vector<std::vector<mpz_class>> choices;
    size_t combos = 1;
    for (long x = 0; static_cast<int>(xs.size()) <= d && x < 64; ++x) {
        for (long sx : {x, -x}) {
            if (static_cast<int>(xs.size()) > d) break;
            if (x == 0 && sx != 0) continue;
            if (std::find(xs.begin(), xs.end(), mpz_class(sx)) != xs.end()) continue;
            mpz_class v = zeval(g, sx);
            if (v == 0 || abs(v) > kDivisorCap) continue;
            auto ds = divisors(v);
            std::vector<mpz_class> signed_ds;
            for (auto& e : ds) {
                signed_ds.push_back(e);
                if (!xs.empty()) signed_ds.push_back(-e);
            }
            xs.push_back(sx);
            combos *= signed_ds.size();
            choices.push_back(signed_ds);
        }
    }
    if (static_cast<int>(xs.size()) <= d || combos > 2000000) return {};
    std::vector<size_t> idx(xs.size(), 0);
    Poly f = to_q(g);
    for (;;) {
        Poly cand;
        for (size_t j = 0; j < xs.size(); ++j) {
            Poly basis{mpq_class(1)};
            mpq_class denom = 1;
            for (size_t m = 0; m < xs.size(); ++m) {
                if (m == j) continue;
                basis = poly::mul(basis, Poly{mpq_class(-xs[m]), mpq_class(1)});
                denom *= mpq_class(xs[j] - xs[m]);
            }
            cand = poly::add(cand, poly::scale(basis, mpq_class(choices[j][idx[j]]) / denom));
        }
        if (poly::degree(cand) == d) {
            bool integral = std::all_of(cand.begin(), cand.end(), [](const mpq_class& c) { return c.get_den() == 1; });
            Poly quo;
            if (integral && divides(cand, f, quo)) return cand;
        }
        size_t j = 0;
        while (j < idx.size() && ++idx[j] == choices[j].size()) idx[j++] = 0;
        if (j == idx.size()) return {};
    }
}

void factor_squarefree(ZPoly g, std::vector<ZPoly>& out) {
    Poly f = to_q(g);
    if (poly::degree(f) <= 0) return;
    if (g[0] == 0) {
        out.push_back({0, 1});
        Poly quo = poly::divmod(f, Poly{0, 1}).first;
        factor_squarefree(to_z(quo), out);
        return;
    }
    for (int n = 1; poly::degree(f) > 0 && n <= 6 * poly::degree(f) + 6; ++n) {
        Poly phi = to_q(cyclotomic(n));
        if (poly::degree(phi) > poly::degree(f)) continue;
        Poly quo;
        if (divides(phi, f, quo)) {
            out.push_back(cyclotomic(n));
            f = quo;
        }
    }
    // rational roots
    bool again = true;
    while (again && poly::degree(f) >= 1) {
        again = false;
        ZPoly z = to_z(f);
        if (abs(z.front()) > kDivisorCap || abs(z.back()) > kDivisorCap) break;
        for (auto& p : divisors(z.front())) {
            for (auto& r : divisors(z.back())) {
                for (int sgn : {1, -1}) {
                    mpq_class root(sgn * p, r);
                    root.canonicalize();
                    if (poly::eval(f, root) != 0) continue;
                    ZPoly lin = to_z(Poly{-root, mpq_class(1)});
                    out.push_back(lin);
                    f = poly::divmod(f, to_q(lin)).first;
                    again = true;
                    break;
                }
                if (again) break;
            }
            if (again) break;
        }
    }
    if (poly::degree(f) <= 0) return;
    if (poly::degree(f) <= 3) {
        out.push_back(to_z(f));
        return;
    }
    for (int d = 2; d <= poly::degree(f) / 2; ++d) {
        Poly h = kronecker_factor(to_z(f), d);
        if (!h.empty()) {
            out.push_back(to_z(h));
            factor_squarefree(to_z(poly::divmod(f, h).first), out);
            return;
        }
    }
    out.push_back(to_z(f));
}

bool zpoly_less(const ZPoly& a, const ZPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

}  // namespace

std::vector<mpz_class> cyclotomic(int n) {
    Poly num(n + 1, mpq_class(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = poly::divmod(num, to_q(cyclotomic(d))).first;
    ZPoly z;
    for (auto& c : num) z.push_back(c.get_num());
    return z;
}

std::vector<QFactor> factor_integer_poly(const std::vector<mpz_class>& f) {
    Poly p = to_q(f);
    std::vector<QFactor> result;
    if (poly::degree(p) <= 0) return result;
    // Yun square-free decomposition
    Poly a0 = poly::gcd(p, poly::deriv(p));
    Poly b = poly::divmod(p, a0).first;
    Poly c = poly::divmod(poly::deriv(p), a0).first;
    Poly d = poly::sub(c, poly::deriv(b));
    int i = 1;
    std::map<ZPoly, int, decltype(&zpoly_less)> acc(&zpoly_less);
    while (poly::degree(b) > 0) {
        Poly a = poly::gcd(b, d);
        std::vector<ZPoly> irr;
        if (poly::degree(a) > 0) factor_squarefree(to_z(a), irr);
        for (auto& z : irr) acc[z] += i;
        b = poly::divmod(b, a).first;
        c = poly::divmod(d, a).first;
        d = poly::sub(c, poly::deriv(b));
        ++i;
    }
    for (auto& [z, m] : acc) result.push_back({z, m});
    return result;
}

std::string q_poly_str(const std::vector<mpz_class>& p) {
    std::string out;
    bool first = true;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
        if (p[i] == 0) continue;
        mpz_class a = abs(p[i]);
        if (p[i] < 0)
            out += "-";
        else if (!first)
            out += "+";
        if (i == 0) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str() + "*";
            out += (i == 1) ? "q" : "q^" + std::to_string(i);
        }
        first = false;
    }
    return first ? "0" : out;
}

QFactored qh_factor(const QHalf& a) {
    if (a.is_zero()) fail(Errc::InvalidOperand, "cannot factor zero");
    if (!a.q_polynomial_parts())
        fail(Errc::InvalidOperand, "not a polynomial expression in q times a power of q^{1/2}: " + a.str());
    auto halve = [](const Poly& p) {
        Poly r;
        for (size_t i = 0; i < p.size(); i += 2) r.push_back(p[i]);
        poly::trim(r);
        return r;
    };
    QFactored out;
    out.t_power = a.t_shift();
    ZPoly nz, dz;
    mpq_class cn = primitive_part(halve(a.num()), nz);
    mpq_class cd = primitive_part(halve(a.den()), dz);
    out.unit = cn / cd;
    for (auto& f : factor_integer_poly(nz)) out.factors.push_back(f);
    for (auto& f : factor_integer_poly(dz)) out.factors.push_back({f.poly, -f.mult});
    std::sort(out.factors.begin(), out.factors.end(), [](const QFactor& x, const QFactor& y) {
        if (zpoly_less(x.poly, y.poly)) return true;
        if (zpoly_less(y.poly, x.poly)) return false;
        return x.mult < y.mult;
    });
    return out;
}

QHalf QFactored::expand() const {
    QHalf r = QHalf(unit) * QHalf::t_pow(t_power);
    for (auto& f : factors) {
        Poly t;
        for (size_t i = 0; i < f.poly.size(); ++i) {
            t.resize(2 * i + 1);
            t[2 * i] = f.poly[i];
        }
        r *= QHalf::from_parts(0, t, {mpq_class(1)}).pow(f.mult);
    }
    return r;
}

std::string QFactored::str() const {
    std::vector<std::string> top, bottom;
    mpz_class un = abs(unit.get_num()), ud = unit.get_den();
    if (un != 1) top.push_back(un.get_str());
    if (ud != 1) bottom.push_back(ud.get_str());
    auto qp = [](int t) {
        if (t % 2 != 0) return "q^{" + std::to_string(t) + "/2}";
        return t == 2 ? std::string("q") : "q^" + std::to_string(t / 2);
    };
    if (t_power > 0) top.push_back(qp(t_power));
    if (t_power < 0) bottom.push_back(qp(-t_power));
    for (auto& f : factors) {
        std::string s = "(" + q_poly_str(f.poly) + ")";
        int m = std::abs(f.mult);
        if (m > 1) s += "^" + std::to_string(m);
        (f.mult > 0 ? top : bottom).push_back(s);
    }
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "*" : "") + v[i];
        return s;
    };
    std::string out = unit < 0 ? "-" : "";
    out += top.empty() ? "1" : join(top);
    if (bottom.size() == 1) out += "/" + bottom[0];
    if (bottom.size() > 1) out += "/(" + join(bottom) + ")";
    return out;
}

const char* errc_name(Errc e) {
    switch (e) {
        case Errc::Ok: return "Ok";
        case Errc::InvalidOperand: return "InvalidOperand";
        case Errc::EvaluationPole: return "EvaluationPole";
        case Errc::LabelGroupMismatch: return "LabelGroupMismatch";
        case Errc::Unsupported: return "Unsupported";
        case Errc::IncompleteData: return "IncompleteData";
        case Errc::InvalidDatum: return "InvalidDatum";
        case Errc::NeedsDeclaration: return "NeedsDeclaration";
        case Errc::NotApplicable: return "NotApplicable";
        case Errc::MalformedDescriptor: return "MalformedDescriptor";
        case Errc::InvalidEnhancement: return "InvalidEnhancement";
    }
    return "Unknown";
}

}  // namespace llc
