#pragma once

#include <optional>
#include <string>
#include <vector>

#include "characters.hpp"
#include "rootdata.hpp"

namespace llc {

struct InducedRep {
    Group group = Group::GSp4;
    LeviKind levi = LeviKind::Torus;
    // Torus: chi1 x chi2 x| theta (theta is ignored on Sp4)
    SmoothChar chi1, chi2, theta;
    // Siegel: nu^beta sigma x| chi.  Klingen: chi x| sigma, with nu^{e(chi)} the real part.
    SupercuspidalLabel sigma;
    mpq_class beta = 0;
    SmoothChar chi;
};

struct Constituent {
    std::string label;         // symbolic form in chi1, chi2, theta, ...
    std::string instantiated;  // same with the actual characters substituted
    std::string role;
    std::string case_tag;
    std::string summand;  // Grothendieck summand the constituent belongs to, if the case splits in two
    bool ess_tempered = false;
    bool square_integrable = false;
    bool generic = false;
    LeviLabel support;  // group-side Levi of the cuspidal support
    std::optional<std::string> langlands;
    std::optional<std::string> langlands_instantiated;
};

struct ReducibilityReport {
    Group group;
    LeviKind levi;
    std::string case_tag;  // "irreducible" when no case applies
    int length = 1;
    std::vector<Constituent> constituents;
    std::string canonical_data;  // the Weyl conjugate used for the labels
    std::vector<std::string> notes;
};

ReducibilityReport decide_reducibility(const InducedRep& rep);

// Every case whose guard is met by some Weyl conjugate of the inducing data (torus only).
std::vector<std::string> matched_cases(const InducedRep& rep);
std::vector<InducedRep> weyl_conjugates(const InducedRep& rep);

std::string langlands_quotient_label(const InducedRep& rep, const Constituent& c);

struct BernsteinBlockJ {
    std::string tag;                // J1 .. J4
    std::string dual_centralizer;   // Z_{G^vee}(image of c^s)
    std::string j_group;            // J^s
    std::string hecke_type;
};

BernsteinBlockJ bernstein_block_J(const SmoothChar& chi1, const SmoothChar& chi2);

struct UnipotentAssignment {
    std::vector<int> partition;
    int enhancement = 1;
    std::string indexing;
};

UnipotentAssignment unipotent_class_of_constituent(const BernsteinBlockJ& block, const Constituent& c);

// Reducibility criterion for chi1 x chi2 x| theta on GSp4 (ν-relations only).
bool gsp4_torus_reducible_criterion(const SmoothChar& chi1, const SmoothChar& chi2);

std::string partition_str(const std::vector<int>& p);

}  // namespace llc
