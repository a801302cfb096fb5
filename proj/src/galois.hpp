#pragma once

#include <optional>
#include <string>
#include <vector>

#include "characters.hpp"
#include "induction.hpp"
#include "rootdata.hpp"

namespace llc {

// One summand of phi|W_F.  dim-1 summands carry a character; larger ones are opaque tags.
struct Summand {
    int dim = 1;
    std::string type = "none";  // orthogonal | symplectic | none
    std::string tag;            // name of an irreducible summand (dim > 1)
    SmoothChar chr;             // dim == 1
    int mult = 1;
    std::optional<SmoothChar> det;  // declared determinant (dim > 1)
    std::string dual_of;            // this summand is the (xi-twisted) dual of another tag
    std::optional<mpq_class> depth; // depth of the matching supercuspidal, dim == 2
};

struct Sl2Spec {
    std::vector<int> partition;  // Jordan blocks on the standard representation of G^vee
    std::string embedding;       // trivial | first | second | diagonal | regular, only where ambiguous
};

struct ParamDescriptor {
    Group group = Group::Sp4;
    LabelGroupPtr labels;
    std::vector<UserLabel> declared;
    std::vector<Summand> summands;
    SmoothChar xi;  // similitude character, GSp4 only
    Sl2Spec sl2;
};

struct CentralizerReport {
    std::string case_tag;
    std::string g_phi;       // Z_{G^vee}(phi(W_F))
    std::string z_phi;       // centralizer of the whole image phi(W_F x SL2)
    std::string a_phi;
    int s_rank = 0;          // S_phi = mu2^rank
    bool g_phi_identity_abelian = false;
    bool finite_mod_center = false;
    std::string springer_group;  // table used for the unipotent pair, empty if none
    std::string sl2_orbit;       // unipotent class of phi|SL2 in G_phi
};

struct PacketMember {
    std::string kind;  // supercuspidal | principal series | intermediate series
    std::string label;
    std::string enhancement;   // character of S_phi, e.g. "+", "(+,-)"
    std::string springer_row;  // unipotent pair and its Springer image, if recorded
    LeviLabel support_dual;    // computed Galois side
    LeviLabel support_group;   // recorded by the induction engine (or G for supercuspidals)
    bool tempered = false;
    bool discrete = false;
    bool generic = false;
    bool constituent_generic = false;
    std::string sc_key;  // DepthZeroSC key when the member is a known depth-zero supercuspidal
    std::optional<InducedRep> induced;
    std::string role;
    std::vector<std::string> restriction;  // declared constituents of the restriction to Sp4 (GSp4 only)
};

struct PacketDescriptor {
    Group group = Group::Sp4;
    std::string case_tag;
    std::vector<PacketMember> members;
    bool tempered = false;
    bool discrete = false;
    std::vector<std::string> notes;
};

struct InfinitesimalEntry {
    std::string base;      // character string or summand tag
    bool is_char = false;
    SmoothChar chr;        // shifted character when is_char
    mpq_class shift = 0;   // nu exponent added by the SL2 part
    std::string str() const;
};

struct SpringerRow {
    std::string pair;  // (orbit, local system)
    std::string image; // Weyl group representation or "cusp"
};

struct SpringerTable {
    std::string group;
    std::vector<SpringerRow> rows;
    int weyl_irreps = 0;
    int cuspidal_count() const;
};

std::vector<SpringerTable> springer_tables();
const SpringerTable& springer_table(const std::string& group);

CentralizerReport centralizer(const ParamDescriptor& p);
PacketDescriptor assemble_packet(const ParamDescriptor& p);
std::vector<InfinitesimalEntry> infinitesimal(const ParamDescriptor& p);

struct CuspidalSupport {
    LeviLabel levi;        // dual side
    std::string sketch;    // the supporting parameter, in words
};
CuspidalSupport cuspidal_support(const ParamDescriptor& p, const std::string& rho);

PacketDescriptor sp4_from_gsp4(const PacketDescriptor& gsp4_packet);

// Named descriptors, one per case of the classification (several per case where the
// SL2 part or the character data branch).
struct Preset {
    std::string name;
    std::string description;
    std::string json;
};
const std::vector<Preset>& presets();
ParamDescriptor preset_descriptor(const std::string& name);

// Packet pointer for a depth-zero supercuspidal of Sp4: the preset whose packet contains it,
// or empty when it lies in a purely supercuspidal packet not pinned by a preset.
std::string packet_of_depth_zero(const std::string& key);

// Characters of S_phi = mu2^rank, trivial first.
std::vector<std::string> enhancement_labels(int rank);

// Eigencharacters of the standard representation of G^vee attached to chi1 x chi2 x| theta.
std::vector<SmoothChar> torus_eigencharacters(const InducedRep& rep);

}  // namespace llc
