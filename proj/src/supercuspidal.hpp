#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finite_reductive.hpp"
#include "rootdata.hpp"

namespace llc {

struct DepthZeroSC {
    Group group;
    std::string key;     // stable identifier used by the CLI
    std::string name;
    std::string family;  // item of the classification list, e.g. "2a"
    std::string vertex;  // canonical vertex, "any" for the regular family
    std::vector<std::string> vertex_aliases;
    std::optional<FiniteGroupLabel> quotient;
    std::string inducing;
    std::optional<QHalf> inducing_dimension;
    std::optional<QHalf> count;
    std::string singularity;
};

std::vector<DepthZeroSC> enumerate_depth_zero(Group g);
const DepthZeroSC& find_depth_zero(Group g, const std::string& key);

// dim(tau) / (|G_x(F_q)| * q^{-dim G_x / 2})
QHalf formal_degree_depth_zero(const DepthZeroSC& rep);

// delta([eta2, nu eta2], rho) on GSp4 through the Steinberg module of the Hecke algebra of
// GL2 x GL2 / Gm: 1/2 * 1/(q^2-1) * (q-1)/(q^2-1) * q^{3/2}.
QHalf formal_degree_delta_eta2();

struct PositiveDepthDatum {
    QHalf dim_rho{1};
    QHalf index{1};        // [G0_[y] : G0_{y,0+}]
    int dim_g = 0;
    int dim_g0 = 0;        // dim of the reductive quotient of G0 at y
    std::vector<mpq_class> depths;  // r_0, ..., r_d
    std::vector<int> root_counts;   // |R_0|, ..., |R_d|
};

// coefficient * q^exponent
struct PositiveDepthDegree {
    QHalf coefficient;
    mpq_class exponent;
    bool is_qhalf() const { return mpq_class(2 * exponent).get_den() == 1; }
    QHalf value() const;
    std::string str() const;
};

PositiveDepthDegree formal_degree_positive_depth(const PositiveDepthDatum& d);

struct TypeDatumTemplate {
    Group group;
    int index = 0;
    std::vector<std::string> sequence;  // G^0 subset ... subset G^d = G
    bool abelian_g0 = false;
    std::optional<int> dim_rho0;
    bool can_be_singular = false;
    std::string singular_condition;
    std::string anisotropy;  // condition on Z_{G^0}/Z_G
};

std::vector<TypeDatumTemplate> enumerate_type_templates(Group g);

struct EtaleFactor {
    std::string field;      // F_i
    std::string subfield;   // F_i^#
    int subfield_degree = 1;  // [F_i^# : F]
    bool split = false;       // F_i = F_i^# + F_i^#
};

struct ToriClassTemplate {
    Group group;
    std::string torus;
    std::vector<EtaleFactor> factors;
    std::vector<std::string> parameters;  // c_i modulo norms
    std::string subtori;
    int n() const;             // sum of [F_i^# : F]
    int lattice_degree() const;  // sum of [F_i : F]
};

std::vector<ToriClassTemplate> anisotropic_tori(Group g);

}  // namespace llc
