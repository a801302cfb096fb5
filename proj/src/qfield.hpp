#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace llc {

// Dense univariate polynomial, coefficient i belongs to x^i.
using Poly = std::vector<mpq_class>;

namespace poly {
void trim(Poly& p);
int degree(const Poly& p);  // -1 for the zero polynomial
bool is_zero(const Poly& p);
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const mpq_class& c);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);  // monic, or zero
Poly deriv(const Poly& a);
Poly shift(const Poly& a, int k);  // multiply by x^k, k >= 0
mpq_class eval(const Poly& a, const mpq_class& x);
Poly monomial(const mpq_class& c, int k);
}  // namespace poly

// t^k * N(t) / D(t) where t = q^{1/2}.
class QHalf {
public:
    QHalf();
    QHalf(long c);
    QHalf(const mpq_class& c);

    static QHalf t_pow(int k);  // q^{k/2}
    static QHalf q_pow(int k) { return t_pow(2 * k); }
    static QHalf q() { return t_pow(2); }
    // Polynomial in q, coefficient i belongs to q^i.
    static QHalf from_q_poly(const std::vector<long>& coeffs);
    static QHalf from_parts(int k, Poly num, Poly den);
    static QHalf parse(const std::string& text);

    int t_shift() const { return k_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.empty(); }
    bool is_polynomial() const { return den_.size() == 1 && k_ >= 0; }
    // numerator and denominator are polynomials in q once the q^{1/2} power is split off
    bool q_polynomial_parts() const;

    QHalf operator-() const;
    friend QHalf operator+(const QHalf& a, const QHalf& b);
    friend QHalf operator-(const QHalf& a, const QHalf& b);
    friend QHalf operator*(const QHalf& a, const QHalf& b);
    friend QHalf operator/(const QHalf& a, const QHalf& b);
    QHalf& operator+=(const QHalf& b) { return *this = *this + b; }
    QHalf& operator-=(const QHalf& b) { return *this = *this - b; }
    QHalf& operator*=(const QHalf& b) { return *this = *this * b; }
    QHalf& operator/=(const QHalf& b) { return *this = *this / b; }
    friend bool operator==(const QHalf& a, const QHalf& b);
    friend bool operator!=(const QHalf& a, const QHalf& b) { return !(a == b); }

    QHalf pow(int n) const;

    // Canonical text, accepted back by parse().
    std::string str() const;
    // Factored display when possible, canonical text otherwise.
    std::string pretty() const;

private:
    void canonicalize();
    int k_ = 0;
    Poly num_;
    Poly den_{mpq_class(1)};
};

enum class QOp { Add, Sub, Mul, Div };
QHalf qh_arith(const QHalf& a, const QHalf& b, QOp op);

// r + s*sqrt(q0); s is zero whenever q0 is a perfect square.
struct QValue {
    mpq_class r;
    mpq_class s;
    long q0 = 0;
    bool operator==(const QValue& o) const { return r == o.r && s == o.s && q0 == o.q0; }
    std::string str() const;
};

QValue qh_eval(const QHalf& a, long q0);
QValue operator*(const QValue& a, const QValue& b);

struct PrimeToP {
    QHalf m;
    mpq_class q_power;
};
PrimeToP prime_to_p_part(const QHalf& order);

struct QFactor {
    std::vector<mpz_class> poly;  // integer coefficients in q, primitive, positive lead
    int mult = 0;
};

struct QFactored {
    mpq_class unit{1};
    int t_power = 0;  // q_power = t_power / 2
    std::vector<QFactor> factors;

    mpq_class q_power() const { return mpq_class(t_power, 2); }
    QHalf expand() const;
    std::string str() const;
};

QFactored qh_factor(const QHalf& a);

// Irreducible factors over Z of a primitive integer polynomial, with multiplicity.
std::vector<QFactor> factor_integer_poly(const std::vector<mpz_class>& f);
std::vector<mpz_class> cyclotomic(int n);
std::string q_poly_str(const std::vector<mpz_class>& p);

}  // namespace llc
