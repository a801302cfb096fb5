#include "galois.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "serialize.hpp"

namespace llc {

std::string InfinitesimalEntry::str() const {
    if (is_char) return chr.str();
    if (shift == 0) return base;
    return "nu^{" + shift.get_str() + "} " + base;
}

int SpringerTable::cuspidal_count() const {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const SpringerRow& r) { return r.image == "cusp"; }));
}

std::vector<SpringerTable> springer_tables() {
    return {
        {"SL2", {{"([1^2],1)", "1"}, {"([2],1)", "sgn"}, {"([2],-1)", "cusp"}}, 2},
        {"SO3", {{"([1^2],1)", "1"}, {"([2],1)", "sgn"}}, 2},  // SO3 = PGL2, orbits named by PGL2 partitions
        {"SO5",
         {{"([5],1)", "(0,[1^2])"},
          {"([3,1^2],1)", "([1],[1])"},
          {"([3,1^2],-1)", "(0,[2])"},
          {"([2^2,1],1)", "([1^2],0)"},
          {"([1^5],1)", "([2],0)"}},
         5},
        {"O4",
         {{"(00,1)", "(1x1,1)"},
          {"(00,-1)", "(1x1,sgn)"},
          {"(0e,1)", "(1xsgn,1)"},
          {"(ee,(1,1))", "(sgnxsgn,1)"},
          {"(ee,(1,-1))", "(sgnxsgn,sgn)"},
          {"(ee,(-1,1))", "cusp"},
          {"(ee,(-1,-1))", "cusp"}},
         5},
        {"GSp4",
         {{"([4],1)", "(0,[1^2])"},
          {"([2^2],1)", "([1],[1])"},
          {"([2^2],-1)", "(0,[2])"},
          {"([2,1^2],1)", "([1^2],0)"},
          {"([1^4],1)", "([2],0)"}},
         5},
        {"GSp_{2,2}",
         {{"(00,1)", "1x1"}, {"(0e,1)", "1xsgn"}, {"(e0,1)", "sgnx1"}, {"(ee,1)", "sgnxsgn"}, {"(ee,-1)", "cusp"}},
         4},
    };
}

const SpringerTable& springer_table(const std::string& group) {
    static const std::vector<SpringerTable> tables = springer_tables();
    for (auto& t : tables)
        if (t.group == group) return t;
    fail(Errc::Unsupported, "no Springer table recorded for " + group);
}

std::vector<std::string> enhancement_labels(int rank) {
    if (rank == 0) return {"1"};
    if (rank == 1) return {"+", "-"};
    std::vector<std::string> out;
    for (int m = 0; m < (1 << rank); ++m) {
        std::string s = "(";
        for (int i = rank - 1; i >= 0; --i) s += std::string((m >> i) & 1 ? "-" : "+") + (i ? "," : "");
        out.push_back(s + ")");
    }
    return out;
}

std::vector<SmoothChar> torus_eigencharacters(const InducedRep& rep) {
    const SmoothChar &a = rep.chi1, &b = rep.chi2;
    if (rep.group == Group::Sp4) return {SmoothChar(a.group()), a, a.inv(), b, b.inv()};
    SmoothChar t = rep.theta.inv();
    return {t, t * a.inv(), t * b.inv(), t * a.inv() * b.inv()};
}

namespace {

// ---- descriptor analysis ----

struct Component {
    std::string base;
    bool is_char = false;
    SmoothChar chr;
    int dim = 1;
    int mult = 0;
    int partner = -1;
};

std::vector<Component> components(const ParamDescriptor& p) {
    std::vector<Component> out;
    for (auto& s : p.summands) {
        if (s.dim == 1) {
            auto it = std::find_if(out.begin(), out.end(), [&](const Component& c) { return c.is_char && c.chr == s.chr; });
            if (it != out.end()) {
                it->mult += s.mult;
                continue;
            }
            out.push_back({s.chr.str(), true, s.chr, 1, s.mult, -1});
        } else {
            out.push_back({s.tag, false, SmoothChar(p.labels), s.dim, s.mult, -1});
        }
    }
    for (size_t i = 0; i < out.size(); ++i) {
        if (out[i].is_char) {
            SmoothChar partner = p.group == Group::Sp4 ? out[i].chr.inv() : p.xi * out[i].chr.inv();
            for (size_t j = 0; j < out.size(); ++j)
                if (out[j].is_char && out[j].chr == partner) out[i].partner = static_cast<int>(j);
        } else {
            out[i].partner = static_cast<int>(i);
            for (auto& s : p.summands) {
                if (s.tag == out[i].base && !s.dual_of.empty())
                    for (size_t j = 0; j < out.size(); ++j)
                        if (out[j].base == s.dual_of) out[i].partner = static_cast<int>(j);
                if (s.dual_of == out[i].base)
                    for (size_t j = 0; j < out.size(); ++j)
                        if (out[j].base == s.tag) out[i].partner = static_cast<int>(j);
            }
        }
    }
    return out;
}

std::vector<std::vector<int>> partitions_of(int m, int maxpart) {
    if (m == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int k = std::min(m, maxpart); k >= 1; --k)
        for (auto rest : partitions_of(m - k, k)) {
            rest.insert(rest.begin(), k);
            out.push_back(rest);
        }
    return out;
}

using Assignment = std::vector<std::vector<int>>;

void assign(const std::vector<Component>& comps, size_t i, std::map<int, int>& avail, Assignment& cur,
            std::vector<Assignment>& out) {
    if (i == comps.size()) {
        for (auto& [k, n] : avail)
            if (n) return;
        for (size_t a = 0; a < comps.size(); ++a)
            if (comps[a].partner >= 0 && cur[a] != cur[comps[a].partner]) return;
        out.push_back(cur);
        return;
    }
    for (auto& lam : partitions_of(comps[i].mult, comps[i].mult)) {
        bool ok = true;
        std::map<int, int> need;
        for (int k : lam) need[k] += comps[i].dim;
        for (auto& [k, n] : need)
            if (avail[k] < n) ok = false;
        if (!ok) continue;
        for (auto& [k, n] : need) avail[k] -= n;
        cur[i] = lam;
        assign(comps, i + 1, avail, cur, out);
        for (auto& [k, n] : need) avail[k] += n;
    }
}

std::vector<int> normalized_partition(const ParamDescriptor& p) {
    int total = p.group == Group::Sp4 ? 5 : 4;
    std::vector<int> part = p.sl2.partition;
    std::sort(part.rbegin(), part.rend());
    int sum = 0;
    for (int k : part) {
        if (k <= 0) fail(Errc::MalformedDescriptor, "SL2 partition has a nonpositive part");
        sum += k;
    }
    if (part.empty()) part.assign(total, 1), sum = total;
    if (p.group == Group::Sp4 && sum == 4) {
        // the symplectic labels of the same orbit
        static const std::map<std::vector<int>, std::vector<int>> c2_to_b2 = {
            {{4}, {5}}, {{2, 2}, {3, 1, 1}}, {{2, 1, 1}, {2, 2, 1}}, {{1, 1, 1, 1}, {1, 1, 1, 1, 1}}};
        auto it = c2_to_b2.find(part);
        if (it == c2_to_b2.end()) fail(Errc::MalformedDescriptor, "not a unipotent class of Sp4");
        part = it->second;
        sum = 5;
    }
    if (sum != total) fail(Errc::MalformedDescriptor, "SL2 partition does not match the dimension of G^vee");
    return part;
}

std::string part_str(const std::vector<int>& p) { return partition_str(p); }

bool trivial_sl2(const std::vector<int>& part) {
    return std::all_of(part.begin(), part.end(), [](int k) { return k == 1; });
}

// ---- classification context ----

struct Ctx {
    const ParamDescriptor& p;
    LabelGroupPtr g;
    std::vector<int> part;
    bool sl2_trivial = true;
    CentralizerReport cr;
    PacketDescriptor pk;
    std::vector<std::string> rows;  // Springer rows in member order

    explicit Ctx(const ParamDescriptor& d) : p(d), g(d.labels) {
        part = normalized_partition(d);
        sl2_trivial = trivial_sl2(part);
        pk.group = d.group;
        cr.sl2_orbit = part_str(part);
    }

    SmoothChar nu(const mpq_class& e) const { return SmoothChar::nu(e, g); }
    SmoothChar one() const { return SmoothChar(g); }

    LeviLabel dual(LeviKind k) const { return {p.group, true, k}; }

    void set(const std::string& tag, const std::string& gphi, const std::string& zphi, int rank, bool abelian,
             bool finite) {
        cr.case_tag = tag;
        pk.case_tag = tag;
        cr.g_phi = gphi;
        cr.z_phi = zphi;
        cr.s_rank = rank;
        cr.a_phi = rank == 0 ? "1" : rank == 1 ? "mu2" : "mu2^" + std::to_string(rank);
        cr.g_phi_identity_abelian = abelian;
        cr.finite_mod_center = finite;
        pk.discrete = finite;
    }

    void require_trivial_sl2() const {
        if (!sl2_trivial)
            fail(Errc::MalformedDescriptor, "SL2 must act trivially in case " + cr.case_tag + " (" + cr.g_phi + ")");
    }

    void require_partition(const std::vector<std::vector<int>>& allowed) const {
        if (std::find(allowed.begin(), allowed.end(), part) == allowed.end())
            fail(Errc::MalformedDescriptor, "SL2 partition " + part_str(part) + " is not a unipotent class of " +
                                                cr.g_phi + " in case " + cr.case_tag);
    }

    PacketMember& sc(const std::string& label, const std::string& key = "", const std::string& row = "") {
        PacketMember m;
        m.kind = "supercuspidal";
        m.label = label;
        m.sc_key = key;
        m.support_dual = {p.group, true, LeviKind::Full};
        m.support_group = {p.group, false, LeviKind::Full};
        m.tempered = m.discrete = true;
        m.springer_row = row;
        pk.members.push_back(m);
        return pk.members.back();
    }

    PacketMember& induced(InducedRep rep, const std::string& role, LeviKind dual_kind, const std::string& row = "",
                          const std::string& label = "") {
        rep.group = p.group;
        ReducibilityReport r = decide_reducibility(rep);
        const Constituent* con = nullptr;
        if (role.empty()) {
            if (r.length != 1)
                fail(Errc::Unsupported, "expected an irreducible induced representation in case " + cr.case_tag +
                                            ", the induction engine reports " + r.case_tag);
            con = &r.constituents[0];
        } else {
            for (auto& c : r.constituents)
                if (c.role == role) {
                    con = &c;
                    break;
                }
            if (!con)
                fail(Errc::Unsupported, "case " + cr.case_tag + " expects constituent '" + role +
                                            "' but the induction engine reports " + r.case_tag);
        }
        PacketMember m;
        m.kind = con->support.kind == LeviKind::Torus ? "principal series" : "intermediate series";
        m.label = label.empty() ? con->instantiated : label;
        m.support_dual = dual(dual_kind);
        m.support_group = con->support;
        m.tempered = con->ess_tempered;
        m.discrete = con->square_integrable;
        m.constituent_generic = con->generic;
        m.induced = rep;
        m.role = con->role;
        m.springer_row = row;
        pk.members.push_back(m);
        return pk.members.back();
    }

    // the constituent a non-discrete induced family contributes: the whole thing when
    // irreducible, otherwise the piece named by `role`
    PacketMember& induced_or(InducedRep rep, const std::string& role, LeviKind dual_kind) {
        rep.group = p.group;
        return induced(rep, decide_reducibility(rep).length == 1 ? "" : role, dual_kind);
    }

    void finish(bool tempered) {
        pk.tempered = tempered;
        auto labels = enhancement_labels(cr.s_rank);
        for (size_t i = 0; i < pk.members.size(); ++i) {
            pk.members[i].enhancement = i < labels.size() ? labels[i] : "?";
            pk.members[i].generic = tempered && i == 0;
        }
    }
};

SupercuspidalLabel levi_sc(const std::string& group, const std::string& id, const SmoothChar& central, bool self_dual,
                           std::vector<std::string> fs = {}, std::vector<SmoothChar> ts = {}, mpq_class depth = 0) {
    SupercuspidalLabel s;
    s.group = group;
    s.id = id;
    s.central = central;
    s.self_dual = self_dual;
    s.f_sigma = std::move(fs);
    s.twist_stable = std::move(ts);
    s.depth = depth;
    return s;
}

const std::vector<std::string> kAllClasses = {"1", "eps", "varpi", "eps*varpi"};

std::vector<std::string> kernel_classes(const SmoothChar& det) {
    std::vector<std::string> out;
    for (auto& c : kAllClasses)
        if (det.value_on_square_class(c) == 1) out.push_back(c);
    return out;
}

InducedRep torus(const SmoothChar& a, const SmoothChar& b, const SmoothChar& t) {
    InducedRep r;
    r.levi = LeviKind::Torus;
    r.chi1 = a;
    r.chi2 = b;
    r.theta = t;
    return r;
}

InducedRep klingen(const SmoothChar& chi, const SupercuspidalLabel& s) {
    InducedRep r;
    r.levi = LeviKind::Klingen;
    r.chi = chi;
    r.sigma = s;
    r.chi1 = r.chi2 = r.theta = SmoothChar(chi.group());
    return r;
}

InducedRep siegel(const mpq_class& beta, const SupercuspidalLabel& s, const SmoothChar& chi) {
    InducedRep r;
    r.levi = LeviKind::Siegel;
    r.beta = beta;
    r.sigma = s;
    r.chi = chi;
    r.chi1 = r.chi2 = r.theta = SmoothChar(chi.group());
    return r;
}

bool order2(const SmoothChar& c) { return c.order() == 2; }
bool sq_trivial(const SmoothChar& c) { return (c * c).is_trivial(); }

struct Shape {
    std::vector<const Summand*> big;
    std::vector<SmoothChar> chars;
    std::vector<int> dims;
    std::string key;
};

Shape shape_of(const ParamDescriptor& p) {
    Shape s;
    for (auto& x : p.summands) {
        if (x.mult < 1) fail(Errc::MalformedDescriptor, "summand multiplicity must be positive");
        if (x.dim < 1) fail(Errc::MalformedDescriptor, "summand dimension must be positive");
        if (x.dim == 1) {
            for (int i = 0; i < x.mult; ++i) s.chars.push_back(x.chr);
        } else {
            if (x.tag.empty()) fail(Errc::MalformedDescriptor, "irreducible summands of dimension > 1 need a tag");
            s.big.push_back(&x);
        }
        for (int i = 0; i < x.mult; ++i) s.dims.push_back(x.dim);
    }
    std::sort(s.dims.rbegin(), s.dims.rend());
    for (size_t i = 0; i < s.dims.size(); ++i) s.key += (i ? "," : "") + std::to_string(s.dims[i]);
    return s;
}

// ---------------- Sp4 ----------------

void sp4_purely_sc(Ctx& c, int count) {
    auto enh = enhancement_labels(c.cr.s_rank);
    for (int i = 0; i < count; ++i) c.sc("pi(phi; " + enh[i] + ")");
}

void sp4_311(Ctx& c, const Shape& s) {
    const Summand* V = s.big[0];
    if (V->type != "orthogonal") fail(Errc::MalformedDescriptor, "the 3-dimensional summand must be orthogonal");
    SmoothChar a = s.chars[0], b = s.chars[1];
    auto piV = levi_sc("Sp2", "pi_" + V->tag, c.one(), true, kAllClasses);
    if (a == b) {
        if (!sq_trivial(a)) fail(Errc::MalformedDescriptor, "chi1 = chi2 forces chi1^2 = 1");
        c.set("Sp4:4a", "S(mu2 x O2) = O2", "O2", 1, true, false);
        c.require_trivial_sl2();
        c.induced(klingen(a, piV), "piece1", LeviKind::Klingen);
        c.induced(klingen(a, piV), "piece2", LeviKind::Klingen);
        c.finish(true);
    } else if (sq_trivial(a) && sq_trivial(b)) {
        c.set("Sp4:4b", "mu2^2", "mu2^2", 2, true, true);
        c.require_trivial_sl2();
        sp4_purely_sc(c, 4);
        c.finish(true);
    } else if (a == b.inv()) {
        c.set("Sp4:4c", "C^x", "C^x", 0, true, false);
        c.require_trivial_sl2();
        c.induced(klingen(a, piV), "", LeviKind::Klingen);
        c.finish(a.is_unitary());
    } else {
        fail(Errc::MalformedDescriptor, "V + chi1 + chi2 needs chi1 = chi2 of order 2, distinct order-2 characters, "
                                        "or chi1 = chi2^{-1}");
    }
}

void sp4_221(Ctx& c, const Shape& s) {
    SmoothChar chi = s.chars[0];
    if (!sq_trivial(chi)) fail(Errc::MalformedDescriptor, "the one-dimensional summand must have order dividing 2");
    if (s.big.size() == 1) {
        const Summand* V = s.big[0];
        if (V->type == "orthogonal") {
            c.set("Sp4:5a", "C^x", "C^x", 0, true, false);
            c.require_trivial_sl2();
            c.sc("pi(phi)");
            c.pk.notes.push_back(
                "an abelian centralizer would place this member in GL2xSO1; the case list calls it supercuspidal");
            c.finish(true);
            return;
        }
        if (V->type != "symplectic") fail(Errc::MalformedDescriptor, "V + V + chi needs a self-dual V");
        if (!chi.is_trivial()) fail(Errc::MalformedDescriptor, "symplectic V + V forces chi = 1");
        auto sigma = levi_sc("GL2", "pi_" + V->tag, c.one(), true, {}, {}, V->depth.value_or(0));
        c.cr.springer_group = "SL2";
        if (c.sl2_trivial) {
            c.set("Sp4:5b", "Sp2", "Sp2", 0, false, false);
            c.induced(siegel(0, sigma, c.one()), "", LeviKind::Siegel, "([1^2],1) -> 1");
            c.finish(true);
            return;
        }
        c.set("Sp4:5b", "Sp2", "mu2", 1, false, true);
        c.require_partition({{2, 2, 1}});
        c.induced(siegel(mpq_class(1, 2), sigma, c.one()), "delta", LeviKind::Siegel, "([2],1) -> sgn");
        if (!V->depth) fail(Errc::MalformedDescriptor, "the mixed packet needs the depth of " + V->tag);
        if (*V->depth == 0)
            c.sc("pi_alpha(theta) [" + V->tag + "]", "pi_alpha_theta", "([2],-1) -> cusp");
        else
            c.sc("pi_chi(sigma) [" + V->tag + "]", "", "([2],-1) -> cusp");
        c.finish(true);
        return;
    }
    const Summand *V1 = s.big[0], *V2 = s.big[1];
    bool dual = V1->dual_of == V2->tag || V2->dual_of == V1->tag;
    if (dual) {
        c.set("Sp4:5d", "C^x", "C^x", 0, true, false);
        c.require_trivial_sl2();
        SmoothChar w = V1->det.value_or(c.one());
        auto sigma = levi_sc("GL2", "pi_" + V1->tag, w, false);
        c.induced(siegel(0, sigma, c.one()), "", LeviKind::Siegel);
        c.finish(true);
        return;
    }
    if (V1->type == "orthogonal" && V2->type == "orthogonal") {
        if (V1->det && V2->det && chi != *V1->det * *V2->det)
            fail(Errc::MalformedDescriptor, "chi must equal det(V1) det(V2)");
        c.set("Sp4:5c", "mu2^2", "mu2^2", 2, true, true);
        c.require_trivial_sl2();
        sp4_purely_sc(c, 4);
        c.finish(true);
        return;
    }
    fail(Errc::MalformedDescriptor, "V1 + V2 + chi with V1 not isomorphic to V2 needs both orthogonal or V1 = V2^vee");
}

void sp4_2111(Ctx& c, const Shape& s) {
    const Summand* V = s.big[0];
    if (V->type != "orthogonal") fail(Errc::MalformedDescriptor, "the 2-dimensional summand must be orthogonal");
    if (!V->det) fail(Errc::MalformedDescriptor, "declare det(" + V->tag + ")");
    SmoothChar d = *V->det;
    std::vector<SmoothChar> ch = s.chars;
    auto count = [&](const SmoothChar& x) { return std::count(ch.begin(), ch.end(), x); };
    auto packet = [&](const SmoothChar& chi3) {
        auto fs = kernel_classes(d);
        return std::vector<SupercuspidalLabel>{
            levi_sc("Sp2", "pi_1(" + V->tag + "+" + chi3.str() + ")", c.one(), true, fs),
            levi_sc("Sp2", "pi_2(" + V->tag + "+" + chi3.str() + ")", c.one(), true, fs)};
    };
    c.cr.springer_group = "SO3";
    if (count(ch[0]) == 3) {
        SmoothChar a = ch[0];
        if (a != d) fail(Errc::MalformedDescriptor, "chi1 = chi2 = chi3 forces chi1 = det(V)");
        auto pis = packet(a);
        if (c.sl2_trivial) {
            c.set("Sp4:6a", "SO3 x mu2", "SO3 x mu2", 1, false, false);
            for (auto& pi : pis) c.induced_or(klingen(a, pi), "piece1", LeviKind::Klingen).springer_row = "([1^2],1) -> 1";
            c.finish(true);
        } else {
            c.set("Sp4:6a", "SO3 x mu2", "mu2", 1, false, true);
            c.require_partition({{3, 1, 1}});
            for (auto& pi : pis) {
                InducedRep r = klingen(c.nu(1) * a, pi);
                r.group = Group::Sp4;
                bool red = decide_reducibility(r).length > 1;
                c.induced(r, red ? "delta" : "", LeviKind::Klingen).springer_row = "([2],1) -> sgn";
            }
            c.pk.notes.push_back("nu chi1 x| pi_i is reducible by the Klingen criterion (chi1 = det V is trivial on "
                                 "F_sigma); the packet takes its square-integrable subrepresentation");
            c.finish(true);
        }
        return;
    }
    c.require_trivial_sl2();
    // pick out a repeated character, if any
    for (auto& x : ch)
        if (count(x) == 2) {
            SmoothChar a = x, b;
            for (auto& y : ch)
                if (y != a) b = y;
            if (!sq_trivial(a) || b != d) fail(Errc::MalformedDescriptor, "chi1 = chi2 != chi3 needs order-2 characters with chi3 = det(V)");
            c.set("Sp4:6b", "mu2 x S(O2 x mu2)", "mu2 x S(O2 x mu2)", 2, false, false);
            for (auto& pi : packet(b)) {
                c.induced(klingen(a, pi), "piece1", LeviKind::Klingen);
                c.induced(klingen(a, pi), "piece2", LeviKind::Klingen);
            }
            c.finish(true);
            return;
        }
    if (std::all_of(ch.begin(), ch.end(), sq_trivial)) {
        c.set("Sp4:6c", "mu2 x S(mu2^3)", "mu2 x S(mu2^3)", 3, true, true);
        sp4_purely_sc(c, 8);
        c.finish(true);
        return;
    }
    for (size_t i = 0; i < 3; ++i) {
        SmoothChar a = ch[i], b = ch[(i + 1) % 3], e = ch[(i + 2) % 3];
        if (sq_trivial(a) && b == e.inv() && !sq_trivial(b)) {
            if (a != d) fail(Errc::MalformedDescriptor, "the order-2 character must equal det(V)");
            c.set("Sp4:6d", "mu2 x C^x", "mu2 x C^x", 1, true, false);
            for (auto& pi : packet(a)) c.induced_or(klingen(b, pi), "piece1", LeviKind::Klingen);
            c.finish(b.is_unitary());
            return;
        }
    }
    fail(Errc::MalformedDescriptor, "V + chi1 + chi2 + chi3 matches no case");
}

void sp4_11111(Ctx& c, const Shape& s) {
    std::vector<SmoothChar> rest = s.chars;
    auto it = std::find_if(rest.begin(), rest.end(), [](const SmoothChar& x) { return x.is_trivial(); });
    if (it == rest.end()) fail(Errc::MalformedDescriptor, "a sum of characters into SO5 contains the trivial character");
    rest.erase(it);
    SmoothChar x1 = rest[0];
    auto jt = std::find(rest.begin() + 1, rest.end(), x1.inv());
    if (jt == rest.end()) fail(Errc::MalformedDescriptor, "characters must come in inverse pairs");
    rest.erase(jt);
    rest.erase(rest.begin());
    SmoothChar x2 = rest[0];
    if (rest[1] != x2.inv()) fail(Errc::MalformedDescriptor, "characters must come in inverse pairs");
    const auto& P = c.part;
    auto one = c.one();
    bool same = x1 == x2 || x1 == x2.inv();
    if (x1.is_trivial() && x2.is_trivial()) {
        c.cr.springer_group = "SO5";
        if (P == std::vector<int>{5}) {
            c.set("Sp4:7a", "SO5", "1", 0, false, true);
            c.induced(torus(c.nu(2), c.nu(1), one), "st_sp4", LeviKind::Torus, "([5],1) -> (0,[1^2])");
            c.finish(true);
        } else if (P == std::vector<int>{3, 1, 1}) {
            c.set("Sp4:7a", "SO5", "O2", 1, false, false);
            c.induced(torus(c.nu(1), one, one), "tau", LeviKind::Torus, "([3,1^2],1) -> ([1],[1])");
            c.induced(torus(c.nu(1), one, one), "tau_prime", LeviKind::Torus, "([3,1^2],-1) -> (0,[2])");
            c.finish(true);
        } else if (P == std::vector<int>{2, 2, 1}) {
            c.set("Sp4:7a", "SO5", "Sp2 x O1", 0, false, false);
            c.induced(torus(c.nu(mpq_class(1, 2)), c.nu(mpq_class(-1, 2)), one), "st_gl2", LeviKind::Torus,
                      "([2^2,1],1) -> ([1^2],0)");
            c.finish(true);
        } else {
            c.set("Sp4:7a", "SO5", "SO5", 0, false, false);
            c.require_trivial_sl2();
            c.induced(torus(one, one, one), "", LeviKind::Torus, "([1^5],1) -> ([2],0)");
            c.finish(true);
        }
        return;
    }
    if (same && order2(x1)) {
        SmoothChar chi = x1;
        c.cr.springer_group = "O4";
        std::string emb = c.p.sl2.embedding;
        if (c.sl2_trivial) {
            c.set("Sp4:7b", "S(O4 x mu2) = O4", "O4", 1, false, false);
            InducedRep r = torus(chi, chi, one);
            c.induced(r, "piece11", LeviKind::Torus, "(00,1) -> (1x1,1)", chi.str() + " x| T^1_" + chi.str());
            c.induced(r, "piece21", LeviKind::Torus, "(00,-1) -> (1x1,sgn)", chi.str() + " x| T^2_" + chi.str());
            c.pk.notes.push_back("members are the two halves chi x| T^i_chi; the induction table splits each further");
            c.finish(true);
            return;
        }
        if (P == std::vector<int>{2, 2, 1}) {
            if (!emb.empty() && emb != "first") fail(Errc::MalformedDescriptor, "[2^2,1] is the embedding into one SL2 factor");
            c.set("Sp4:7b", "S(O4 x mu2) = O4", "SL2 x mu2", 0, false, false);
            c.induced(torus(c.nu(mpq_class(1, 2)) * chi, c.nu(mpq_class(-1, 2)) * chi, one), "st_gl2", LeviKind::Torus,
                      "(e0,1) -> (1xsgn,1)");
            c.finish(true);
            return;
        }
        if (P == std::vector<int>{3, 1, 1}) {
            if (!emb.empty() && emb != "diagonal") fail(Errc::MalformedDescriptor, "[3,1^2] is the diagonal embedding");
            c.set("Sp4:7b", "S(O4 x mu2) = O4", "mu2^2", 2, false, true);
            InducedRep r = torus(c.nu(1) * chi, chi, one);
            c.induced(r, "pi1", LeviKind::Torus, "(ee,(1,1)) -> (sgnxsgn,1)");
            c.induced(r, "pi2", LeviKind::Torus, "(ee,(1,-1)) -> (sgnxsgn,sgn)");
            std::string t = chi.str();
            if (chi == SmoothChar::named("eta", c.g)) {
                c.sc("pi_beta(theta10)", "pi_beta_theta10", "(ee,(-1,1)) -> cusp");
                c.sc("pi_gamma(theta10)", "pi_gamma_theta10", "(ee,(-1,-1)) -> cusp");
            } else {
                bool ramified = !chi.is_unramified();
                c.sc("pi_alpha^+(" + t + ")", ramified ? "pi_alpha_plus_eta2" : "", "(ee,(-1,1)) -> cusp");
                c.sc("pi_alpha^-(" + t + ")", ramified ? "pi_alpha_minus_eta2" : "", "(ee,(-1,-1)) -> cusp");
            }
            c.pk.notes.push_back("principal-series members carry the non-cuspidal rows (ee,(1,+-1)) of the O4 table");
            c.finish(true);
            return;
        }
        fail(Errc::MalformedDescriptor, "SL2 partition " + part_str(P) + " is not a unipotent class of O4");
    }
    // from here on one of the pairs may be trivial
    SmoothChar a = x1, b = x2;
    if (a.is_trivial()) std::swap(a, b);
    if (b.is_trivial()) {
        if (order2(a)) {
            c.cr.springer_group = "SO3";
            if (c.sl2_trivial) {
                c.set("Sp4:7c", "S(O3 x O2) = SO3 x O2", "SO3 x O2", 1, false, false);
                c.induced(torus(one, a, one), "t1", LeviKind::Torus);
                c.induced(torus(one, a, one), "t2", LeviKind::Torus);
            } else {
                c.set("Sp4:7c", "S(O3 x O2) = SO3 x O2", "O2", 1, false, false);
                c.require_partition({{3, 1, 1}});
                c.induced(torus(c.nu(mpq_class(1, 2)), a, one), "t1", LeviKind::Torus);
                c.induced(torus(c.nu(mpq_class(1, 2)), a, one), "t2", LeviKind::Torus);
            }
            c.finish(true);
            return;
        }
        c.cr.springer_group = "SO3";
        if (c.sl2_trivial) {
            c.set("Sp4:7d", "SO3 x SO2", "SO3 x SO2", 0, false, false);
            c.induced(torus(a, one, one), "", LeviKind::Torus);
        } else {
            c.set("Sp4:7d", "SO3 x SO2", "SO2", 0, true, false);
            c.require_partition({{3, 1, 1}});
            c.induced(torus(a, c.nu(mpq_class(1, 2)), one), "", LeviKind::Torus);
        }
        c.finish(a.is_unitary());
        return;
    }
    if (order2(a) && order2(b)) {
        c.set("Sp4:7e", "S(O2 x O2 x mu2) = O2^2", "O2^2", 2, false, false);
        c.require_trivial_sl2();
        InducedRep r = torus(a, b, one);
        for (auto role : {"piece11", "piece12", "piece21", "piece22"}) c.induced(r, role, LeviKind::Torus);
        c.finish(true);
        return;
    }
    if (same) {
        SmoothChar chi = x1;
        if (c.sl2_trivial) {
            c.set("Sp4:7f", "GL2", "GL2", 0, false, false);
            c.induced(torus(chi, chi, one), "", LeviKind::Torus);
            c.finish(chi.is_unitary());
            return;
        }
        c.set("Sp4:7f", "GL2", "C^x", 0, true, false);
        c.require_partition({{2, 2, 1}});
        InducedRep r = torus(c.nu(mpq_class(1, 2)) * chi, c.nu(mpq_class(-1, 2)) * chi, one);
        r.group = Group::Sp4;
        std::string tag = decide_reducibility(r).case_tag;
        c.induced(r, tag == "Sp4:1bi" ? "st_gl2" : "j_st", LeviKind::Torus);
        c.finish(chi.is_unitary());
        return;
    }
    bool distinct = !order2(a) && !order2(b) && !same;
    if (distinct) {
        c.set("Sp4:7j", "C^x x C^x", "C^x x C^x", 0, true, false);
        c.require_trivial_sl2();
        c.induced(torus(a, b, one), "", LeviKind::Torus);
        c.finish(a.is_unitary() && b.is_unitary());
        return;
    }
    fail(Errc::MalformedDescriptor, "1 + chi1^{+-1} + chi2^{+-1} matches no case of the classification");
}

void classify_sp4(Ctx& c) {
    Shape s = shape_of(c.p);
    SmoothChar det = c.one();
    bool det_known = true;
    for (auto& x : c.p.summands) {
        if (x.dim == 1)
            det = det * x.chr.pow(x.mult);
        else if (x.det)
            det = det * x.det->pow(x.mult);
        else
            det_known = false;
    }
    if (det_known && !det.is_trivial()) fail(Errc::MalformedDescriptor, "the total determinant must be trivial");
    if (s.key == "5") {
        c.set("Sp4:1", "1", "1", 0, true, true);
        c.require_trivial_sl2();
        c.sc("pi(phi)");
        c.finish(true);
    } else if (s.key == "4,1") {
        if (!sq_trivial(s.chars[0])) fail(Errc::MalformedDescriptor, "chi^2 must be trivial");
        c.set("Sp4:2", "mu2", "mu2", 1, true, true);
        c.require_trivial_sl2();
        sp4_purely_sc(c, 2);
        c.finish(true);
    } else if (s.key == "3,2") {
        c.set("Sp4:3", "mu2", "mu2", 1, true, true);
        c.require_trivial_sl2();
        sp4_purely_sc(c, 2);
        c.finish(true);
    } else if (s.key == "3,1,1") {
        sp4_311(c, s);
    } else if (s.key == "2,2,1") {
        sp4_221(c, s);
    } else if (s.key == "2,1,1,1") {
        sp4_2111(c, s);
    } else if (s.key == "1,1,1,1,1") {
        sp4_11111(c, s);
    } else {
        fail(Errc::MalformedDescriptor, "dimensions " + s.key + " do not describe a parameter into SO5");
    }
}

// ---------------- GSp4 ----------------

bool gsp4_tempered(const ParamDescriptor& p, const std::vector<SmoothChar>& chars) {
    mpq_class half = p.xi.nu_exp() / 2;
    return std::all_of(chars.begin(), chars.end(), [&](const SmoothChar& x) { return x.nu_exp() == half; });
}

void gsp4_22(Ctx& c, const Shape& s) {
    SmoothChar one = c.one();
    if (s.big.size() == 1) {
        const Summand* V = s.big[0];
        SmoothChar d = V->det.value_or(c.p.xi);
        if (d != c.p.xi) fail(Errc::MalformedDescriptor, "V + V needs xi = det(V)");
        if (V->type == "symplectic") {
            c.set("GSp4:2a", "GO2 = (C^x)^2 x| mu2", "GO2", 1, false, false);
            c.require_trivial_sl2();
            auto pi = levi_sc("GSp2", "pi_" + V->tag + "^vee", one, true);
            c.induced(klingen(one, pi), "piece1", LeviKind::Siegel);
            c.induced(klingen(one, pi), "piece2", LeviKind::Siegel);
            c.finish(true);
            return;
        }
        if (V->type != "orthogonal") fail(Errc::MalformedDescriptor, "V + V needs a self-dual V");
        mpq_class b = c.p.xi.nu_exp() / 2;
        auto sigma = levi_sc("GL2", "pi_" + V->tag, c.p.xi.unitary_part(), true);
        SmoothChar xinv = c.p.xi.inv();
        if (c.sl2_trivial) {
            c.set("GSp4:2b", "GL2", "GL2", 0, false, false);
            c.induced_or(siegel(b, sigma, xinv), "delta", LeviKind::Klingen);
            c.finish(true);
        } else {
            c.set("GSp4:2b", "GL2", "C^x", 0, true, true);
            c.require_partition({{2, 2}});
            c.induced_or(siegel(b + mpq_class(1, 2), sigma, c.nu(-1) * xinv), "delta", LeviKind::Klingen);
            c.finish(true);
        }
        return;
    }
    const Summand *V1 = s.big[0], *V2 = s.big[1];
    if (V1->dual_of != V2->tag && V2->dual_of != V1->tag)
        fail(Errc::MalformedDescriptor, "V1 + V2 needs V2 = xi V1^vee");
    if (V2->dual_of == V1->tag) std::swap(V1, V2);
    const Summand* base = V1->dual_of.empty() ? V1 : V2;
    c.set("GSp4:2c", "C^x x C^x", "C^x x C^x", 0, true, false);
    c.require_trivial_sl2();
    SmoothChar d = base->det.value_or(c.p.xi);
    SmoothChar mu = c.p.xi * d.inv();
    auto pi = levi_sc("GSp2", "pi_" + base->tag + "^vee", one, false);
    c.induced(klingen(mu, pi), "", LeviKind::Siegel);
    c.pk.notes.push_back("the GL1 character of the inducing datum is xi det(V1)^{-1}, trivial only when V1 = V2");
    c.finish(true);
}

void gsp4_211(Ctx& c, const Shape& s) {
    const Summand* V = s.big[0];
    SmoothChar a = s.chars[0], b = s.chars[1];
    if (a * b != c.p.xi) fail(Errc::MalformedDescriptor, "chi1 chi2 must equal xi");
    if (V->det && *V->det != c.p.xi) fail(Errc::MalformedDescriptor, "det(V) must equal xi");
    SmoothChar one = c.one();
    if (a == b) {
        c.cr.springer_group = "SL2";
        auto sigma = levi_sc("GL2", a.str() + " x pi_" + V->tag + "^vee", one, true, {}, {}, V->depth.value_or(0));
        if (c.sl2_trivial) {
            c.set("GSp4:3a", "C^x x SL2", "C^x x SL2", 0, false, false);
            c.induced(siegel(0, sigma, a.inv()), "", LeviKind::Klingen, "([1^2],1) -> 1");
            c.finish(gsp4_tempered(c.p, s.chars));
            return;
        }
        c.set("GSp4:3a", "C^x x SL2", "C^x x mu2", 1, false, true);
        c.require_partition({{2, 1, 1}});
        auto pu = levi_sc("GL2", "pi_u", one, true, {}, {}, V->depth.value_or(0));
        c.induced(siegel(mpq_class(1, 2), pu, c.nu(mpq_class(-1, 2)) * a.inv()), "delta", LeviKind::Klingen,
                  "([2],1) -> sgn");
        if (!V->depth) fail(Errc::MalformedDescriptor, "the mixed packet needs the depth of " + V->tag);
        std::string tw = a.inv().str();
        if (*V->depth == 0)
            c.sc("pi_(S, theta x theta x " + tw + ")", "pi_S_theta_theta_chi", "([2],-1) -> cusp");
        else
            c.sc("pi(pi_u) x " + tw, "", "([2],-1) -> cusp");
        c.finish(true);
        return;
    }
    c.set("GSp4:3b", "C^x x C^x", "C^x x C^x", 0, true, false);
    c.require_trivial_sl2();
    SmoothChar r = a * b.inv();
    mpq_class beta = r.nu_exp() / 2;
    auto sigma = levi_sc("GL2", a.unitary_part().str() + " x pi_" + V->tag + "^vee", one, true);
    InducedRep rep = siegel(beta, sigma, a.inv());
    c.induced_or(rep, "quotient", LeviKind::Klingen);
    c.finish(gsp4_tempered(c.p, s.chars));
}

void gsp4_1111(Ctx& c, const Shape& s) {
    const SmoothChar& xi = c.p.xi;
    std::vector<SmoothChar> ch = s.chars;
    auto count = [&](const SmoothChar& x) { return std::count(ch.begin(), ch.end(), x); };
    SmoothChar one = c.one();
    const auto& P = c.part;
    bool tempered = gsp4_tempered(c.p, ch);
    if (count(ch[0]) == 4) {
        SmoothChar x1 = ch[0];
        if (x1 * x1 != xi) fail(Errc::MalformedDescriptor, "chi1^2 must equal xi");
        c.cr.springer_group = "GSp4";
        SmoothChar t = x1.inv();
        if (P == std::vector<int>{4}) {
            c.set("GSp4:4a", "GSp4", "C^x", 0, false, true);
            c.induced(torus(c.nu(2), c.nu(1), c.nu(mpq_class(-3, 2)) * t), "st_gsp4", LeviKind::Torus, "([4],1) -> (0,[1^2])");
        } else if (P == std::vector<int>{2, 2}) {
            c.set("GSp4:4a", "GSp4", "C^x x O2", 1, false, false);
            InducedRep r = torus(c.nu(1), one, c.nu(mpq_class(-1, 2)) * t);
            c.induced(r, "tau_S", LeviKind::Torus, "([2^2],1) -> ([1],[1])");
            c.induced(r, "tau_T", LeviKind::Torus, "([2^2],-1) -> (0,[2])");
        } else if (P == std::vector<int>{2, 1, 1}) {
            c.set("GSp4:4a", "GSp4", "C^x x SL2", 0, false, false);
            c.induced(torus(c.nu(mpq_class(1, 2)), c.nu(mpq_class(-1, 2)), t), "st_gl2", LeviKind::Torus,
                      "([2,1^2],1) -> ([1^2],0)");
            c.pk.notes.push_back("nu^{1/2} x nu^{-1/2} x| theta falls under the non-regular subcase a = nu b, a^2 = nu");
        } else {
            c.set("GSp4:4a", "GSp4", "GSp4", 0, false, false);
            c.induced(torus(one, one, t), "", LeviKind::Torus, "([1^4],1) -> ([2],0)");
        }
        c.finish(tempered);
        return;
    }
    std::vector<SmoothChar> distinct;
    for (auto& x : ch)
        if (std::find(distinct.begin(), distinct.end(), x) == distinct.end()) distinct.push_back(x);
    if (distinct.size() == 2 && count(distinct[0]) == 2) {
        SmoothChar x1 = distinct[0], x3 = distinct[1];
        if (x1 * x1 == xi && x3 * x3 == xi) {
            c.cr.springer_group = "GSp_{2,2}";
            SmoothChar th = x1 * x3.inv();
            std::string emb = c.p.sl2.embedding;
            if (c.sl2_trivial) {
                c.set("GSp4:4b", "GSp_{2,2}", "GSp_{2,2}", 0, false, false);
                c.induced(torus(th, th, x1.inv()), "", LeviKind::Torus, "(00,1) -> 1x1");
            } else if (P == std::vector<int>{2, 1, 1}) {
                if (emb != "first" && emb != "second")
                    fail(Errc::MalformedDescriptor, "declare which GSp2 factor carries SL2 (first or second)");
                c.set("GSp4:4b", "GSp_{2,2}", "GSp2", 0, false, false);
                // SL2 in the factor on the chi1 eigenspaces shifts that pair, which needs the chi3 twist
                SmoothChar lead = emb == "first" ? x3 : x1;
                c.induced(torus(c.nu(mpq_class(1, 2)) * th, c.nu(mpq_class(-1, 2)) * th, lead.inv()), "st_gl2",
                          LeviKind::Torus, emb == "first" ? "(e0,1) -> sgnx1" : "(0e,1) -> 1xsgn");
            } else if (P == std::vector<int>{2, 2}) {
                if (!emb.empty() && emb != "regular") fail(Errc::MalformedDescriptor, "[2^2] is the regular embedding");
                c.set("GSp4:4b", "GSp_{2,2}", "C^x x mu2", 1, false, true);
                SmoothChar tw = x1.inv();
                c.induced(torus(c.nu(1) * th, th, c.nu(mpq_class(-1, 2)) * tw), "delta", LeviKind::Torus,
                          "(ee,1) -> sgnxsgn");
                std::string t = tw.str();
                PacketMember* m;
                if (th == SmoothChar::named("eta", c.g)) {
                    m = &c.sc("pi_beta(theta10 x " + t + ")", "pi_beta_theta10_chi", "(ee,-1) -> cusp");
                    c.pk.members[0].restriction = {"pi_1(eta)", "pi_2(eta)"};
                    m->restriction = {"pi_beta(theta10)", "pi_gamma(theta10)"};
                } else {
                    std::string e = th.str();
                    m = &c.sc("pi_alpha(" + e + "; " + t + ")", th.is_unramified() ? "" : "pi_alpha_eta2",
                              "(ee,-1) -> cusp");
                    c.pk.members[0].restriction = {"pi_1(" + e + ")", "pi_2(" + e + ")"};
                    m->restriction = {"pi_alpha^+(" + e + ")", "pi_alpha^-(" + e + ")"};
                }
                c.pk.notes.push_back("the twist " + t + " is the central character of both members");
            } else {
                fail(Errc::MalformedDescriptor, "SL2 partition " + part_str(P) + " is not a unipotent class of GSp_{2,2}");
            }
            c.finish(tempered);
            return;
        }
        if (x1 * x3 == xi) {
            c.set("GSp4:4c", "GL2 x GSp0", "GL2 x GSp0", 0, false, false);
            SmoothChar a = x3.inv() * x1;
            if (c.sl2_trivial) {
                c.induced(torus(a, one, x1.inv()), "", LeviKind::Torus);
            } else {
                c.cr.z_phi = "C^x";
                c.require_partition({{2, 2}});
                InducedRep r = torus(a, c.nu(1), c.nu(mpq_class(-1, 2)) * x1.inv());
                r.group = Group::GSp4;
                std::string tag = decide_reducibility(r).case_tag;
                std::string role = tag == "GSp4:1aiii" ? "j_nu2" : "st_gsp2";
                c.induced(r, role, LeviKind::Torus);
            }
            c.finish(tempered);
            return;
        }
        fail(Errc::MalformedDescriptor, "chi1 = chi2 != chi3 = chi4 needs chi1^2 = chi3^2 = xi or chi1 chi3 = xi");
    }
    if (distinct.size() == 3) {
        SmoothChar x1;
        std::vector<SmoothChar> singles;
        for (auto& x : distinct) {
            if (count(x) == 2)
                x1 = x;
            else
                singles.push_back(x);
        }
        if (singles.size() != 2) fail(Errc::MalformedDescriptor, "characters do not match any case for GSp4");
        if (x1 * x1 != xi || singles[0] * singles[1] != xi)
            fail(Errc::MalformedDescriptor, "chi1 = chi2 needs chi1^2 = chi3 chi4 = xi");
        c.set("GSp4:4d", "GL1 x GSp2", "GL1 x GSp2", 0, false, false);
        if (!c.sl2_trivial) fail(Errc::Unsupported, "nontrivial SL2 in the GL1 x GSp2 centralizer is not covered");
        SmoothChar a = x1.inv() * singles[0];
        InducedRep r = torus(a, a.inv(), x1.inv());
        r.group = Group::GSp4;
        std::string tag = decide_reducibility(r).case_tag;
        std::string role = tag == "GSp4:1bii" ? "one_gsp2" : "one_gl2";
        c.induced_or(r, role, LeviKind::Torus);
        c.finish(tempered);
        return;
    }
    if (distinct.size() == 4) {
        SmoothChar x1 = ch[0];
        SmoothChar x4 = xi * x1.inv();
        std::vector<SmoothChar> rest;
        for (auto& x : ch)
            if (x != x1 && x != x4) rest.push_back(x);
        if (count(x4) != 1 || rest.size() != 2 || rest[0] * rest[1] != xi)
            fail(Errc::MalformedDescriptor, "four distinct characters must pair as chi1 chi4 = chi2 chi3 = xi");
        SmoothChar x2 = rest[0], x3 = rest[1];
        c.set("GSp4:4e", "T^vee", "T^vee", 0, true, false);
        c.require_trivial_sl2();
        SmoothChar a = x1 * x3.inv(), b = x1 * x2.inv();
        InducedRep r = torus(a, b, x1.inv());
        r.group = Group::GSp4;
        auto rep = decide_reducibility(r);
        if (rep.length == 1) {
            c.induced(r, "", LeviKind::Torus);
        } else if (rep.case_tag == "GSp4:1aii" && b == c.nu(1)) {
            c.induced(r, "one_gsp2", LeviKind::Torus);
        } else if (rep.case_tag == "GSp4:1aiii" && b == c.nu(1) && a == c.nu(2)) {
            c.induced(r, "one_gsp4", LeviKind::Torus);
        } else {
            fail(Errc::Unsupported, "the case list names no member for " + r.chi1.str() + " x " + r.chi2.str() +
                                        " x| " + r.theta.str() + " (" + rep.case_tag + ")");
        }
        c.finish(tempered);
        return;
    }
    fail(Errc::MalformedDescriptor, "characters do not match any case for GSp4");
}

void classify_gsp4(Ctx& c) {
    Shape s = shape_of(c.p);
    if (std::find(s.dims.begin(), s.dims.end(), 3) != s.dims.end())
        fail(Errc::MalformedDescriptor, "the partition [3,1] is impossible: the form on a 3-dimensional summand is symmetric");
    if (s.key == "4") {
        if (s.big[0]->type != "symplectic") fail(Errc::MalformedDescriptor, "an irreducible U must be symplectic");
        c.set("GSp4:1", "C^x", "C^x", 0, true, true);
        c.require_trivial_sl2();
        c.sc("pi(phi)").restriction = {"pi(phi)|Sp4"};
        c.finish(true);
    } else if (s.key == "2,2") {
        gsp4_22(c, s);
    } else if (s.key == "2,1,1") {
        gsp4_211(c, s);
    } else if (s.key == "1,1,1,1") {
        gsp4_1111(c, s);
    } else {
        fail(Errc::MalformedDescriptor, "dimensions " + s.key + " do not describe a parameter into GSp4");
    }
}

struct Classified {
    CentralizerReport cr;
    PacketDescriptor pk;
};

Classified classify(const ParamDescriptor& p) {
    if (p.group == Group::GSp4 && p.xi.group() != p.labels && p.labels)
        fail(Errc::LabelGroupMismatch, "xi is not in the descriptor's label group");
    Ctx c(p);
    c.cr.case_tag = "";
    if (p.group == Group::Sp4)
        classify_sp4(c);
    else
        classify_gsp4(c);
    return {c.cr, c.pk};
}

}  // namespace

CentralizerReport centralizer(const ParamDescriptor& p) { return classify(p).cr; }

PacketDescriptor assemble_packet(const ParamDescriptor& p) { return classify(p).pk; }

std::vector<InfinitesimalEntry> infinitesimal(const ParamDescriptor& p) {
    auto comps = components(p);
    std::vector<int> part = normalized_partition(p);
    std::map<int, int> avail;
    for (int k : part) avail[k]++;
    Assignment cur(comps.size());
    std::vector<Assignment> sols;
    assign(comps, 0, avail, cur, sols);
    if (sols.empty()) fail(Errc::MalformedDescriptor, "SL2 partition " + part_str(part) + " does not fit the summands");
    const Assignment* pick = &sols[0];
    if (sols.size() > 1) {
        const std::string& emb = p.sl2.embedding;
        std::vector<size_t> moving;
        for (size_t i = 0; i < comps.size(); ++i)
            for (auto& s : sols)
                if (s[i] != sols[0][i] && std::find(moving.begin(), moving.end(), i) == moving.end()) moving.push_back(i);
        size_t want = emb == "second" && moving.size() > 1 ? moving[1] : moving[0];
        if (emb != "first" && emb != "second")
            fail(Errc::MalformedDescriptor, "the SL2 embedding is ambiguous; declare first or second");
        for (auto& s : sols)
            if (s[want][0] > 1) pick = &s;
    }
    std::vector<InfinitesimalEntry> out;
    for (size_t i = 0; i < comps.size(); ++i)
        for (int k : (*pick)[i])
            for (int j = 0; j < k; ++j) {
                InfinitesimalEntry e;
                e.base = comps[i].base;
                e.is_char = comps[i].is_char;
                e.shift = mpq_class(k - 1, 2) - j;
                e.shift.canonicalize();
                if (e.is_char) e.chr = comps[i].chr.shift(e.shift);
                out.push_back(e);
            }
    return out;
}

CuspidalSupport cuspidal_support(const ParamDescriptor& p, const std::string& rho) {
    auto c = classify(p);
    for (auto& m : c.pk.members) {
        bool hit = m.enhancement == rho;
        if (!hit && !m.springer_row.empty()) {
            auto arrow = m.springer_row.find(" -> ");
            std::string pair = m.springer_row.substr(0, arrow), image = m.springer_row.substr(arrow + 4);
            hit = rho == pair || rho == image || rho == m.springer_row;
        }
        if (!hit) continue;
        CuspidalSupport s;
        s.levi = m.support_dual;
        if (m.kind == "supercuspidal")
            s.sketch = "phi itself is cuspidal for this enhancement";
        else if (m.induced && m.induced->levi == LeviKind::Torus)
            s.sketch = "the torus-valued infinitesimal parameter of phi";
        else
            s.sketch = "the summands of phi viewed as a cuspidal parameter of " + s.levi.name();
        return s;
    }
    std::string known;
    for (auto& m : c.pk.members) known += " " + m.enhancement;
    fail(Errc::InvalidEnhancement, "'" + rho + "' is not a character of S_phi here (have:" + known + ")");
}

namespace {

std::string restricted_key(const std::string& label) {
    if (label == "pi_beta(theta10)") return "pi_beta_theta10";
    if (label == "pi_gamma(theta10)") return "pi_gamma_theta10";
    if (label.rfind("pi_alpha^+(eta2", 0) == 0) return "pi_alpha_plus_eta2";
    if (label.rfind("pi_alpha^-(eta2", 0) == 0) return "pi_alpha_minus_eta2";
    return "";
}

}  // namespace

PacketDescriptor sp4_from_gsp4(const PacketDescriptor& in) {
    if (in.group != Group::GSp4) fail(Errc::NotApplicable, "restriction to Sp4 needs a GSp4 packet");
    PacketDescriptor out;
    out.group = Group::Sp4;
    out.case_tag = in.case_tag + "|Sp4";
    out.tempered = in.tempered;
    out.discrete = in.discrete;
    for (auto& m : in.members) {
        if (m.restriction.empty())
            fail(Errc::IncompleteData, "no restriction to Sp4 declared for " + m.label + " in " + in.case_tag);
        for (auto& r : m.restriction) {
            PacketMember x;
            x.kind = m.kind;
            x.label = r;
            x.sc_key = m.kind == "supercuspidal" ? restricted_key(r) : "";
            LeviLabel grp{Group::Sp4, false, m.support_group.kind};
            x.support_group = grp;
            x.support_dual = grp.dual();
            x.tempered = m.tempered;
            x.discrete = m.discrete;
            out.members.push_back(x);
        }
    }
    int rank = 0;
    while ((1u << rank) < out.members.size()) ++rank;
    auto labels = enhancement_labels(rank);
    for (size_t i = 0; i < out.members.size(); ++i) {
        out.members[i].enhancement = labels[i];
        out.members[i].generic = out.tempered && i == 0;
    }
    return out;
}

// ---------------- presets ----------------

namespace {

std::string sp4(const std::string& summands, const std::string& sl2 = "[1,1,1,1,1]", const std::string& extra = "") {
    return R"({"schema":"v1","group":"Sp4","labels":[{"name":"chi","order":0},{"name":"chi1","order":0},{"name":"chi2","order":0}],"summands":[)" +
           summands + R"(],"sl2":{"partition":)" + sl2 + extra + "}}";
}

std::string gsp4(const std::string& summands, const std::string& xi = "1", const std::string& sl2 = "[1,1,1,1]",
                 const std::string& extra = "") {
    return R"({"schema":"v1","group":"GSp4","labels":[{"name":"chi","order":0},{"name":"chi1","order":0},{"name":"chi2","order":0},{"name":"mu","order":0}],"summands":[)" +
           summands + R"(],"xi":")" + xi + R"(","sl2":{"partition":)" + sl2 + extra + "}}";
}

std::string ch(const std::string& c, int mult = 1) {
    return R"({"dim":1,"char":")" + c + R"(","mult":)" + std::to_string(mult) + "}";
}

std::string big(int dim, const std::string& type, const std::string& tag, const std::string& det, int mult = 1,
                const std::string& extra = "") {
    return R"({"dim":)" + std::to_string(dim) + R"(,"type":")" + type + R"(","tag":")" + tag + R"(","det":")" + det +
           R"(","mult":)" + std::to_string(mult) + extra + "}";
}

std::vector<Preset> build_presets() {
    const std::string d0 = R"(,"depth":"0")", d1 = R"(,"depth":"1")";
    std::vector<Preset> v = {
        {"sp4-case-1", "irreducible U", sp4(big(5, "orthogonal", "U", "1"))},
        {"sp4-case-2", "V + chi, dim V = 4", sp4(big(4, "orthogonal", "V", "eta2") + "," + ch("eta2"))},
        {"sp4-case-3", "V1 + V2 of dimensions 3 and 2",
         sp4(big(3, "orthogonal", "V1", "eta2") + "," + big(2, "orthogonal", "V2", "eta2"))},
        {"sp4-case-4a", "V + chi + chi", sp4(big(3, "orthogonal", "V", "1") + "," + ch("eta2", 2))},
        {"sp4-case-4b", "V + chi1 + chi2, distinct of order 2",
         sp4(big(3, "orthogonal", "V", "eta") + "," + ch("eta2") + "," + ch("eta2'"))},
        {"sp4-case-4c", "V + chi + chi^{-1}", sp4(big(3, "orthogonal", "V", "1") + "," + ch("chi") + "," + ch("chi^{-1}"))},
        {"sp4-case-5a", "V + V + chi, V orthogonal", sp4(big(2, "orthogonal", "V", "eta2", 2) + "," + ch("1"))},
        {"sp4-case-5b-i", "V + V + 1, V symplectic, SL2 trivial",
         sp4(big(2, "symplectic", "V", "1", 2, d0) + "," + ch("1"))},
        {"sp4-case-5b-ii", "V + V + 1, V symplectic of depth zero, SL2 nontrivial",
         sp4(big(2, "symplectic", "V", "1", 2, d0) + "," + ch("1"), "[2,2,1]")},
        {"sp4-case-5b-ii-positive-depth", "V + V + 1, V symplectic of positive depth, SL2 nontrivial",
         sp4(big(2, "symplectic", "V", "1", 2, d1) + "," + ch("1"), "[2,2,1]")},
        {"sp4-case-5c", "V1 + V2 + chi, both orthogonal",
         sp4(big(2, "orthogonal", "V1", "eta2") + "," + big(2, "orthogonal", "V2", "eta2'") + "," + ch("eta"))},
        {"sp4-case-5d", "V + V^vee + 1, V not self-dual",
         sp4(big(2, "none", "V1", "chi") + "," + big(2, "none", "V2", "chi^{-1}", 1, R"(,"dual_of":"V1")") + "," +
             ch("1"))},
        {"sp4-case-6a-i", "V + 3 chi, chi = det V, SL2 trivial", sp4(big(2, "orthogonal", "V", "eta2") + "," + ch("eta2", 3))},
        {"sp4-case-6a-ii", "V + 3 chi, chi = det V, SL2 nontrivial",
         sp4(big(2, "orthogonal", "V", "eta2") + "," + ch("eta2", 3), "[3,1,1]")},
        {"sp4-case-6b", "V + chi1 + chi1 + chi3", sp4(big(2, "orthogonal", "V", "eta2'") + "," + ch("eta2", 2) + "," + ch("eta2'"))},
        {"sp4-case-6c", "V + three distinct order-2 characters",
         sp4(big(2, "orthogonal", "V", "eta") + "," + ch("1") + "," + ch("eta2") + "," + ch("eta2'"))},
        {"sp4-case-6d", "V + chi1 + chi2 + chi2^{-1}",
         sp4(big(2, "orthogonal", "V", "eta2") + "," + ch("eta2") + "," + ch("chi") + "," + ch("chi^{-1}"))},
        {"sp4-case-7a-i", "five trivial characters, SL2 regular", sp4(ch("1", 5), "[5]")},
        {"sp4-case-7a-ii", "five trivial characters, SL2 subregular", sp4(ch("1", 5), "[3,1,1]")},
        {"sp4-case-7a-iii", "five trivial characters, SL2 minimal", sp4(ch("1", 5), "[2,2,1]")},
        {"sp4-case-7a-iv", "five trivial characters, SL2 trivial", sp4(ch("1", 5))},
        {"sp4-case-7bi", "1 + 4 eta, SL2 trivial", sp4(ch("1") + "," + ch("eta", 4))},
        {"sp4-case-7bii", "1 + 4 eta, SL2 in one factor", sp4(ch("1") + "," + ch("eta", 4), "[2,2,1]", R"(,"embedding":"first")")},
        {"sp4-case-7biii-eta", "1 + 4 eta, SL2 diagonal", sp4(ch("1") + "," + ch("eta", 4), "[3,1,1]", R"(,"embedding":"diagonal")")},
        {"sp4-case-7biii-eta2", "1 + 4 eta2, SL2 diagonal",
         sp4(ch("1") + "," + ch("eta2", 4), "[3,1,1]", R"(,"embedding":"diagonal")")},
        {"sp4-case-7biii-eta2p", "1 + 4 eta2', SL2 diagonal",
         sp4(ch("1") + "," + ch("eta2'", 4), "[3,1,1]", R"(,"embedding":"diagonal")")},
        {"sp4-case-7c-i", "3 x 1 + 2 eta2, SL2 trivial", sp4(ch("1", 3) + "," + ch("eta2", 2))},
        {"sp4-case-7c-ii", "3 x 1 + 2 eta2, SL2 nontrivial", sp4(ch("1", 3) + "," + ch("eta2", 2), "[3,1,1]")},
        {"sp4-case-7d-i", "3 x 1 + chi + chi^{-1}, SL2 trivial", sp4(ch("1", 3) + "," + ch("chi") + "," + ch("chi^{-1}"))},
        {"sp4-case-7d-ii", "3 x 1 + chi + chi^{-1}, SL2 nontrivial",
         sp4(ch("1", 3) + "," + ch("chi") + "," + ch("chi^{-1}"), "[3,1,1]")},
        {"sp4-case-7e", "1 + 2 eta2 + 2 eta2'", sp4(ch("1") + "," + ch("eta2", 2) + "," + ch("eta2'", 2))},
        {"sp4-case-7f-i", "1 + 2 chi + 2 chi^{-1}, SL2 trivial", sp4(ch("1") + "," + ch("chi", 2) + "," + ch("chi^{-1}", 2))},
        {"sp4-case-7f-ii", "1 + 2 chi + 2 chi^{-1}, SL2 nontrivial",
         sp4(ch("1") + "," + ch("chi", 2) + "," + ch("chi^{-1}", 2), "[2,2,1]")},
        {"sp4-case-7f-ii-nu32", "1 + 2 nu^{3/2} + 2 nu^{-3/2}, SL2 nontrivial",
         sp4(ch("1") + "," + ch("nu^{3/2}", 2) + "," + ch("nu^{-3/2}", 2), "[2,2,1]")},
        {"sp4-case-7j", "1 + chi1^{+-1} + chi2^{+-1}, all distinct",
         sp4(ch("1") + "," + ch("chi1") + "," + ch("chi1^{-1}") + "," + ch("chi2") + "," + ch("chi2^{-1}"))},

        {"gsp4-case-1", "irreducible symplectic U", gsp4(big(4, "symplectic", "U", "1"))},
        {"gsp4-case-2a", "V + V, V symplectic", gsp4(big(2, "symplectic", "V1", "1", 2))},
        {"gsp4-case-2b-i", "V + V, V orthogonal, SL2 trivial", gsp4(big(2, "orthogonal", "V1", "1", 2))},
        {"gsp4-case-2b-ii", "V + V, V orthogonal, SL2 nontrivial", gsp4(big(2, "orthogonal", "V1", "1", 2), "1", "[2,2]")},
        {"gsp4-case-2c", "V1 + xi V1^vee, not isomorphic",
         gsp4(big(2, "symplectic", "V1", "1") + "," + big(2, "none", "V2", "mu^2", 1, R"(,"dual_of":"V1")"), "mu")},
        {"gsp4-case-3a-i", "V + chi + chi, SL2 trivial", gsp4(big(2, "symplectic", "V", "1", 1, d0) + "," + ch("1", 2))},
        {"gsp4-case-3a-ii", "V + chi + chi, V of depth zero, SL2 regular",
         gsp4(big(2, "symplectic", "V", "1", 1, d0) + "," + ch("1", 2), "1", "[2,1,1]")},
        {"gsp4-case-3a-ii-positive-depth", "V + chi + chi, V of positive depth, SL2 regular",
         gsp4(big(2, "symplectic", "V", "1", 1, d1) + "," + ch("1", 2), "1", "[2,1,1]")},
        {"gsp4-case-3b", "V + chi1 + chi2, chi1 != chi2", gsp4(big(2, "symplectic", "V", "1") + "," + ch("chi") + "," + ch("chi^{-1}"))},
        {"gsp4-case-4a-i", "4 chi, SL2 regular", gsp4(ch("1", 4), "1", "[4]")},
        {"gsp4-case-4a-ii", "4 chi, SL2 [2^2]", gsp4(ch("1", 4), "1", "[2,2]")},
        {"gsp4-case-4a-iii", "4 chi, SL2 [2,1^2]", gsp4(ch("1", 4), "1", "[2,1,1]")},
        {"gsp4-case-4a-iv", "4 chi, SL2 trivial", gsp4(ch("1", 4))},
        {"gsp4-case-4b-i", "2 chi1 + 2 chi3, chi1^2 = chi3^2 = xi, SL2 trivial", gsp4(ch("1", 2) + "," + ch("eta2", 2))},
        {"gsp4-case-4b-ii", "2 chi1 + 2 chi3, SL2 in the first factor",
         gsp4(ch("1", 2) + "," + ch("eta2", 2), "1", "[2,1,1]", R"(,"embedding":"first")")},
        {"gsp4-case-4b-iii", "2 chi1 + 2 chi3, SL2 in the second factor",
         gsp4(ch("1", 2) + "," + ch("eta2", 2), "1", "[2,1,1]", R"(,"embedding":"second")")},
        {"gsp4-case-4b-iv-eta", "2 chi1 + 2 chi3, theta = eta, SL2 regular",
         gsp4(ch("1", 2) + "," + ch("eta", 2), "1", "[2,2]", R"(,"embedding":"regular")")},
        {"gsp4-case-4b-iv-eta2", "2 chi1 + 2 chi3, theta = eta2, SL2 regular",
         gsp4(ch("1", 2) + "," + ch("eta2", 2), "1", "[2,2]", R"(,"embedding":"regular")")},
        {"gsp4-case-4b-iv-eta2p", "2 chi1 + 2 chi3, theta = eta2', SL2 regular",
         gsp4(ch("1", 2) + "," + ch("eta2'", 2), "1", "[2,2]", R"(,"embedding":"regular")")},
        {"gsp4-case-4c-i", "2 chi1 + 2 chi3, chi1 chi3 = xi, SL2 trivial", gsp4(ch("chi", 2) + "," + ch("chi^{-1}", 2))},
        {"gsp4-case-4c-ii", "2 chi1 + 2 chi3, chi1 chi3 = xi, SL2 nontrivial",
         gsp4(ch("chi", 2) + "," + ch("chi^{-1}", 2), "1", "[2,2]")},
        {"gsp4-case-4c-ii-nu2", "2 nu + 2 nu^{-1}, SL2 nontrivial", gsp4(ch("nu", 2) + "," + ch("nu^{-1}", 2), "1", "[2,2]")},
        {"gsp4-case-4d", "2 chi1 + chi3 + chi4", gsp4(ch("1", 2) + "," + ch("chi") + "," + ch("chi^{-1}"))},
        {"gsp4-case-4e", "four distinct characters",
         gsp4(ch("chi1") + "," + ch("chi2") + "," + ch("chi2^{-1}") + "," + ch("chi1^{-1}"))},
        {"gsp4-case-4e-nu", "chi1 chi2^{-1} = chi2 chi3^{-1} = nu",
         gsp4(ch("nu^{3/2}") + "," + ch("nu^{1/2}") + "," + ch("nu^{-1/2}") + "," + ch("nu^{-3/2}"))},
    };
    return v;
}

}  // namespace

const std::vector<Preset>& presets() {
    static const std::vector<Preset> v = build_presets();
    return v;
}

ParamDescriptor preset_descriptor(const std::string& name) {
    for (auto& p : presets())
        if (p.name == name) return parse_descriptor(p.json);
    fail(Errc::InvalidOperand, "unknown preset '" + name + "'");
}

std::string packet_of_depth_zero(const std::string& key) {
    for (auto& p : presets()) {
        auto d = parse_descriptor(p.json);
        if (d.group != Group::Sp4) continue;
        auto pk = assemble_packet(d);
        for (auto& m : pk.members)
            if (m.sc_key == key) return p.name;
    }
    return "";
}

}  // namespace llc
