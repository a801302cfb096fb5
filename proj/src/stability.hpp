#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "error.hpp"

namespace llc {

// A linear form in the formal positive constants c, c1, c2, ... ("" is the pure number part).
using Coef = std::map<std::string, mpq_class>;

Coef coef_add(const Coef& a, const Coef& b);
Coef coef_scale(const Coef& a, const mpq_class& s);
bool coef_zero(const Coef& a);
std::string coef_str(const Coef& a);

struct DistVector {
    std::map<std::string, Coef> terms;  // basis symbol -> coefficient

    DistVector& operator+=(const DistVector& o);
    DistVector operator+(const DistVector& o) const;
    DistVector scaled(const mpq_class& s) const;
    void add(const std::string& symbol, const std::string& constant, const mpq_class& x);
    bool is_zero() const;
    std::string str() const;
};

namespace dist {
inline const char* C2 = "D_C2^st";
inline const char* A1 = "D_A1^st";
inline const char* A1t = "D_A1~^st";
inline const char* E = "D_e^st";
inline const char* A1xA1 = "D_A1xA1^st";
inline const char* A1xA1_unst = "D_A1xA1^unst";
inline const char* Gsgn = "D_(F_A1xA1,G_sgn)";
}  // namespace dist

struct DistBasis {
    std::vector<std::string> stable;
    std::vector<std::string> unstable;
};
DistBasis dist_basis();

// Change of basis between {D_(F_C2,Q), D_(F_A1xA1,Q)} and {st, unst}: rows of the forward and
// inverse matrices; their product is the identity.
std::vector<std::vector<mpq_class>> st_unst_forward();
std::vector<std::vector<mpq_class>> st_unst_inverse();

enum class StabilityContext { NearOne, NearS };
StabilityContext parse_context(const std::string& s);

// Which absolute sign eta2 carries in 1/2(Q +- q* G_sgn); eta2' carries the other one.
enum class SignConvention { Eta2Plus, Eta2Minus };

struct CharacterOptions {
    SignConvention convention = SignConvention::Eta2Plus;
    int q_mod4 = 1;  // fixes the prefactors (-1)^{(q-1)/2}, (-1)^{(q+1)/2}
};

// Labels: delta, pi_alpha (GSp4 mixed packet) and pi_1, pi_2, pi_alpha_plus, pi_alpha_minus
// (their restrictions to Sp4).  eta is eta2 or eta2'.
DistVector character_vector(const std::string& label, const std::string& eta, const CharacterOptions& opt = {});

// Restriction of the parahoric invariants to one facet, in Green-function symbols.
DistVector facet_character(const std::string& label, const std::string& eta, const std::string& facet,
                           const CharacterOptions& opt = {});

int sign_of(const std::string& eta, const CharacterOptions& opt);

bool is_stable(const DistVector& v, StabilityContext ctx);

struct Candidate {
    std::string label;
    DistVector vector;
};

std::vector<std::vector<int>> minimal_stable_subsets(const std::vector<Candidate>& candidates, StabilityContext ctx);

// The four GSp4 candidates and the eight Sp4 restrictions used for the packet checks.
std::vector<Candidate> gsp4_mixed_candidates(const CharacterOptions& opt = {});
std::vector<Candidate> sp4_mixed_candidates(const CharacterOptions& opt = {});

}  // namespace llc
