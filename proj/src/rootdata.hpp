#pragma once

#include <string>
#include <vector>

#include "error.hpp"

namespace llc {

enum class Group { Sp4, GSp4 };

Group parse_group(const std::string& s);
const char* group_name(Group g);

using Vec = std::vector<int>;
using Mat = std::vector<Vec>;  // row-major, square

int dot(const Vec& a, const Vec& b);
Vec mat_apply(const Mat& m, const Vec& v);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_identity(int n);
Mat mat_transpose(const Mat& m);

struct RootDatum {
    Group group;
    std::vector<std::string> basis;    // character lattice
    std::vector<std::string> cobasis;  // cocharacter lattice
    std::vector<Vec> roots;
    std::vector<Vec> coroots;  // coroots[i] belongs to roots[i]
    int alpha = 0;             // index of the short simple root
    int beta = 0;              // index of the long simple root

    int rank() const { return static_cast<int>(basis.size()); }
    int find_root(const Vec& v) const;
    int find_coroot(const Vec& v) const;
    Vec reflect(int root, const Vec& x) const;
    Vec coreflect(int root, const Vec& y) const;
    bool is_long(int root) const;
    std::string root_name(int root) const;
    Mat reflection_matrix(int root) const;  // acts on X by column vectors
};

RootDatum build_root_datum(Group g);

// GSp4 only: X -> Y and its inverse.
Vec self_duality_map(Group g, const Vec& x);
Vec self_duality_inverse(Group g, const Vec& y);

struct SignedPerm {
    int image[2];  // w(e_i) = sign[i] * e_{image[i]}
    int sign[2];
    bool operator==(const SignedPerm& o) const;
    std::string cycle_type() const;
};

struct WeylElement {
    Mat x;                 // action on X
    std::vector<int> word; // shortest word, 1 = s_alpha, 2 = s_beta
    SignedPerm perm;
};

struct WeylClass {
    std::string name;  // e, A1, A1~, A1xA1, C2
    std::string cycle_type;
    std::vector<int> representative_word;
    int size = 0;
    std::vector<int> torsion;  // nontrivial invariant factors of X_*/(1-w)X_*
    int torsion_rank() const { return static_cast<int>(torsion.size()); }
};

std::vector<WeylElement> weyl_group(const RootDatum& rd);
std::vector<WeylClass> weyl_classes(Group g);
std::vector<int> torsion_invariants(const Mat& m);  // of Z^n / image(m)

enum class LeviKind { Full, Siegel, Klingen, Torus };  // Siegel: GL2 block, Klingen: GL1 x (rank-one)

struct LeviLabel {
    Group group = Group::GSp4;
    bool dual_side = false;
    LeviKind kind = LeviKind::Full;

    std::string name() const;
    LeviLabel dual() const;
    bool operator==(const LeviLabel& o) const {
        return group == o.group && dual_side == o.dual_side && kind == o.kind;
    }
    bool operator!=(const LeviLabel& o) const { return !(*this == o); }
};

LeviLabel levi_from_name(Group g, const std::string& name);
std::vector<LeviLabel> levi_labels(Group g, bool dual_side);
// Group-side Levi generated by a set of roots, up to conjugacy.
LeviLabel levi_of_roots(const RootDatum& rd, const std::vector<int>& roots);

struct NilpotentOrbit {
    std::string name;
    std::vector<int> b2_partition;
    std::vector<int> c2_partition;
    std::vector<std::string> representative;  // simple roots of the dual group
    LeviLabel levi;                           // derived from the representative
};

std::vector<NilpotentOrbit> nilpotent_orbits();

struct ParahoricQuotient {
    std::string vertex;
    std::vector<std::string> aliases;
    std::string deleted_node;
    std::string diagram;
    std::string quotient;
};

std::vector<ParahoricQuotient> parahoric_quotients(Group g);
// Canonical vertex for any alias, e.g. "gamma" on Sp4.
std::string canonical_vertex(Group g, const std::string& label);

struct Facet {
    std::string name;
    std::string kind;  // vertex, edge, chamber
    std::string type;  // C2, A1xA1, A1, A1~, e
    std::vector<int> vertices;
};

std::vector<Facet> apartment_facets();

}  // namespace llc
