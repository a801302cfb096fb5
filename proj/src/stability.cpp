#include "stability.hpp"

namespace llc {

Coef coef_add(const Coef& a, const Coef& b) {
    Coef r = a;
    for (auto& [k, v] : b) {
        r[k] += v;
        if (r[k] == 0) r.erase(k);
    }
    return r;
}

Coef coef_scale(const Coef& a, const mpq_class& s) {
    Coef r;
    if (s == 0) return r;
    for (auto& [k, v] : a) r[k] = v * s;
    return r;
}

bool coef_zero(const Coef& a) {
    for (auto& [k, v] : a)
        if (v != 0) return false;
    return true;
}

std::string coef_str(const Coef& a) {
    if (coef_zero(a)) return "0";
    std::string s;
    for (auto& [k, v] : a) {
        if (v == 0) continue;
        std::string num = abs(v) == 1 && !k.empty() ? "" : mpq_class(abs(v)).get_str();
        std::string term = num + (num.empty() || k.empty() ? "" : "*") + k;
        if (s.empty())
            s = (v < 0 ? "-" : "") + term;
        else
            s += (v < 0 ? " - " : " + ") + term;
    }
    return s;
}

DistVector& DistVector::operator+=(const DistVector& o) {
    for (auto& [sym, c] : o.terms) {
        terms[sym] = coef_add(terms[sym], c);
        if (coef_zero(terms[sym])) terms.erase(sym);
    }
    return *this;
}

DistVector DistVector::operator+(const DistVector& o) const {
    DistVector r = *this;
    r += o;
    return r;
}

DistVector DistVector::scaled(const mpq_class& s) const {
    DistVector r;
    if (s == 0) return r;
    for (auto& [sym, c] : terms) r.terms[sym] = coef_scale(c, s);
    return r;
}

void DistVector::add(const std::string& symbol, const std::string& constant, const mpq_class& x) {
    DistVector d;
    d.terms[symbol][constant] = x;
    if (x != 0) *this += d;
}

bool DistVector::is_zero() const {
    for (auto& [s, c] : terms)
        if (!coef_zero(c)) return false;
    return true;
}

std::string DistVector::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (auto& [sym, c] : terms) {
        if (coef_zero(c)) continue;
        if (!s.empty()) s += " + ";
        s += "(" + coef_str(c) + ")*" + sym;
    }
    return s;
}

DistBasis dist_basis() {
    return {{dist::C2, dist::A1, dist::A1t, dist::E, dist::A1xA1, dist::Gsgn}, {dist::A1xA1_unst}};
}

std::vector<std::vector<mpq_class>> st_unst_forward() { return {{1, 1}, {1, -1}}; }

std::vector<std::vector<mpq_class>> st_unst_inverse() {
    mpq_class h(1, 2);
    return {{h, h}, {h, -h}};
}

StabilityContext parse_context(const std::string& s) {
    if (s == "nbhd-1" || s == "1") return StabilityContext::NearOne;
    if (s == "nbhd-s" || s == "s") return StabilityContext::NearS;
    fail(Errc::InvalidOperand, "stability context must be nbhd-1 or nbhd-s, not '" + s + "'");
}

int sign_of(const std::string& eta, const CharacterOptions& opt) {
    int base;
    if (eta == "eta2")
        base = 1;
    else if (eta == "eta2'")
        base = -1;
    else
        fail(Errc::InvalidOperand, "expected a ramified quadratic character eta2 or eta2', not '" + eta + "'");
    return opt.convention == SignConvention::Eta2Plus ? base : -base;
}

namespace {

int prefactor_minus(int q_mod4) {  // (-1)^{(q-1)/2}
    if (q_mod4 == 1) return 1;
    if (q_mod4 == 3) return -1;
    fail(Errc::InvalidOperand, "q must be odd: q mod 4 is 1 or 3");
}

// Sp4 only: the two halves of a restriction differ by an unstable term which is odd under
// GSp4-conjugation; one symbol per eta and per GSp4 member.
std::string odd_symbol(const std::string& which, const std::string& eta) {
    return "D^unst_Sp4(" + which + "," + eta + ")";
}

bool is_odd_symbol(const std::string& s) { return s.rfind("D^unst_Sp4(", 0) == 0; }

}  // namespace

DistVector character_vector(const std::string& label, const std::string& eta, const CharacterOptions& opt) {
    int e = prefactor_minus(opt.q_mod4);
    int sg = sign_of(eta, opt);
    mpq_class h(1, 2);
    DistVector v;
    if (label == "delta") {
        v.add(dist::A1xA1, "c1", h);
        v.add(dist::A1xA1_unst, "c1", -h);
        v.add(dist::Gsgn, "c2", e * sg);
        v.add(dist::E, "c", 1);
        return v;
    }
    if (label == "pi_alpha") {
        v.add(dist::A1xA1, "c1", h);
        v.add(dist::A1xA1_unst, "c1", h);
        v.add(dist::Gsgn, "c2", -e * sg);  // the prefactor (-1)^{(q+1)/2}
        return v;
    }
    if (label == "pi_1" || label == "pi_2") {
        v = character_vector("delta", eta, opt).scaled(h);
        v.add(odd_symbol("delta", eta), "c3", label == "pi_1" ? 1 : -1);
        return v;
    }
    if (label == "pi_alpha_plus" || label == "pi_alpha_minus") {
        v = character_vector("pi_alpha", eta, opt).scaled(h);
        v.add(odd_symbol("pi_alpha", eta), "c4", label == "pi_alpha_plus" ? 1 : -1);
        return v;
    }
    fail(Errc::Unsupported, "no character expansion recorded for '" + label + "'");
}

DistVector facet_character(const std::string& label, const std::string& eta, const std::string& facet,
                           const CharacterOptions& opt) {
    int sg = sign_of(eta, opt);
    mpq_class h(1, 2), qr(1, 4);
    DistVector v;
    if (label == "pi_alpha") {
        if (facet == "C2" || facet == "A1" || facet == "A1~" || facet == "e") return v;
        if (facet == "A1xA1") {
            v.add("Q^{F_A1xA1}_{A1xA1}", "", h);
            v.add("q*G_sgn", "", h * sg);
            return v;
        }
    } else if (label == "delta") {
        if (facet == "C2") {
            v.add("Q^{F_C2}_{A1xA1}", "", qr);
            v.add("Q^{F_C2}_{A1}", "", -2 * qr);
            v.add("Q^{F_C2}_{1}", "", qr);
            return v;
        }
        if (facet == "A1xA1") {
            v.add("Q^{F_A1xA1~}_{1}", "", h);
            v.add("q*G_sgn", "", h * sg);
            return v;
        }
        if (facet == "A1") {
            v.add("Q^{F_A1}_{1}", "", 1);
            return v;
        }
        if (facet == "A1~") {
            v.add("Q^{F_A1~}_{1}", "", 1);
            return v;
        }
        if (facet == "e") {
            v.add("1", "", 2);
            return v;
        }
    } else {
        fail(Errc::Unsupported, "no parahoric profile recorded for '" + label + "'");
    }
    fail(Errc::InvalidOperand, "unknown facet '" + facet + "' (C2, A1xA1, A1, A1~, e)");
}

bool is_stable(const DistVector& v, StabilityContext ctx) {
    for (auto& [sym, c] : v.terms) {
        if (coef_zero(c)) continue;
        if (sym == dist::A1xA1_unst || is_odd_symbol(sym)) return false;
        if (ctx == StabilityContext::NearS && sym == dist::Gsgn) return false;
    }
    return true;
}

std::vector<std::vector<int>> minimal_stable_subsets(const std::vector<Candidate>& cs, StabilityContext ctx) {
    int n = static_cast<int>(cs.size());
    if (n > 20) fail(Errc::InvalidOperand, "at most 20 candidates");
    std::vector<unsigned> found;
    std::vector<std::vector<int>> out;
    for (int size = 1; size <= n; ++size)
        for (unsigned m = 1; m < (1u << n); ++m) {
            if (__builtin_popcount(m) != size) continue;
            bool has_smaller = false;
            for (unsigned f : found)
                if ((f & m) == f) has_smaller = true;
            if (has_smaller) continue;
            DistVector sum;
            for (int i = 0; i < n; ++i)
                if (m >> i & 1) sum += cs[i].vector;
            if (!is_stable(sum, ctx)) continue;
            found.push_back(m);
            std::vector<int> idx;
            for (int i = 0; i < n; ++i)
                if (m >> i & 1) idx.push_back(i);
            out.push_back(idx);
        }
    return out;
}

std::vector<Candidate> gsp4_mixed_candidates(const CharacterOptions& opt) {
    std::vector<Candidate> v;
    for (auto l : {"delta", "pi_alpha"})
        for (auto e : {"eta2", "eta2'"}) v.push_back({std::string(l) + "(" + e + ")", character_vector(l, e, opt)});
    return v;
}

std::vector<Candidate> sp4_mixed_candidates(const CharacterOptions& opt) {
    std::vector<Candidate> v;
    for (auto e : {"eta2", "eta2'"})
        for (auto l : {"pi_1", "pi_2", "pi_alpha_plus", "pi_alpha_minus"})
            v.push_back({std::string(l) + "(" + e + ")", character_vector(l, e, opt)});
    return v;
}

}  // namespace llc
