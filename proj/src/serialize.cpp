#include "serialize.hpp"

namespace llc {

namespace {

[[noreturn]] void bad(const std::string& msg) { fail(Errc::MalformedDescriptor, msg); }

mpq_class rational(const Json& j, const std::string& what) {
    try {
        if (j.is_number_integer()) return mpq_class(j.get<long>());
        if (j.is_string()) {
            mpq_class q(j.get<std::string>());
            q.canonicalize();
            return q;
        }
    } catch (const std::invalid_argument&) {
    }
    bad(what + " must be an integer or a fraction string");
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

void check_schema(const Json& j) {
    if (!j.is_object()) bad("expected a JSON object");
    if (j.contains("schema") && j["schema"] != kSchema) bad("unsupported schema version " + j["schema"].dump());
}

LabelGroupPtr labels_from(const Json& j, std::vector<UserLabel>* out = nullptr) {
    std::vector<UserLabel> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array()) bad("labels must be an array");
        for (auto& l : j["labels"]) {
            if (!l.contains("name") || !l["name"].is_string()) bad("every label needs a name");
            UserLabel u;
            u.name = l["name"];
            u.order = l.value("order", 0L);
            u.unramified = l.value("unramified", false);
            if (u.order < 0) bad("label order must be nonnegative");
            labels.push_back(u);
        }
    }
    if (out) *out = labels;
    return labels.empty() ? standard_label_group() : declare_label_group(labels);
}

Json labels_to_json(const std::vector<UserLabel>& v) {
    Json a = Json::array();
    for (auto& u : v) {
        Json l = {{"name", u.name}, {"order", u.order}};
        if (u.unramified) l["unramified"] = true;
        a.push_back(l);
    }
    return a;
}

SmoothChar chr(const Json& j, const LabelGroupPtr& g, const std::string& what) {
    if (!j.is_string()) bad(what + " must be a character string");
    try {
        return SmoothChar::parse(j.get<std::string>(), g);
    } catch (const Error& e) {
        bad(what + ": " + e.what());
    }
}

Json sigma_to_json(const SupercuspidalLabel& s) {
    Json j = {{"group", s.group}, {"id", s.id}, {"central", s.central.str()}, {"self_dual", s.self_dual},
              {"depth", rational_str(s.depth)}};
    if (!s.f_sigma.empty()) j["f_sigma"] = s.f_sigma;
    if (!s.twist_stable.empty()) {
        Json t = Json::array();
        for (auto& c : s.twist_stable) t.push_back(c.str());
        j["twist_stable"] = t;
    }
    return j;
}

SupercuspidalLabel sigma_from_json(const Json& j, const LabelGroupPtr& g) {
    if (!j.is_object()) bad("sigma must be an object");
    SupercuspidalLabel s;
    s.group = j.value("group", "");
    s.id = j.value("id", "");
    s.central = j.contains("central") ? chr(j["central"], g, "sigma.central") : SmoothChar(g);
    s.self_dual = j.value("self_dual", false);
    if (j.contains("depth")) s.depth = rational(j["depth"], "sigma.depth");
    if (j.contains("f_sigma")) s.f_sigma = j["f_sigma"].get<std::vector<std::string>>();
    if (j.contains("twist_stable"))
        for (auto& t : j["twist_stable"]) s.twist_stable.push_back(chr(t, g, "sigma.twist_stable"));
    return s;
}

std::vector<UserLabel> labels_of(const LabelGroupPtr& g) { return g ? g->labels() : std::vector<UserLabel>{}; }

const char* levi_kind_name(LeviKind k) {
    switch (k) {
        case LeviKind::Full: return "Full";
        case LeviKind::Siegel: return "Siegel";
        case LeviKind::Klingen: return "Klingen";
        case LeviKind::Torus: return "Torus";
    }
    return "?";
}

LeviKind levi_kind(const std::string& s) {
    for (auto k : {LeviKind::Full, LeviKind::Siegel, LeviKind::Klingen, LeviKind::Torus})
        if (s == levi_kind_name(k)) return k;
    if (s == "T") return LeviKind::Torus;
    bad("unknown Levi kind '" + s + "'");
}

}  // namespace

ParamDescriptor descriptor_from_json(const Json& j) {
    check_schema(j);
    ParamDescriptor p;
    if (!j.contains("group") || !j["group"].is_string()) bad("descriptor needs a group");
    try {
        p.group = parse_group(j["group"]);
    } catch (const Error& e) {
        bad(e.what());
    }
    p.labels = labels_from(j, &p.declared);
    if (!j.contains("summands") || !j["summands"].is_array() || j["summands"].empty()) bad("descriptor needs summands");
    for (auto& s : j["summands"]) {
        if (!s.is_object()) bad("summands must be objects");
        Summand x;
        x.dim = s.value("dim", 0);
        x.type = s.value("type", "none");
        if (x.type != "orthogonal" && x.type != "symplectic" && x.type != "none") bad("unknown self-duality type " + x.type);
        x.tag = s.value("tag", "");
        x.mult = s.value("mult", 1);
        if (x.dim == 1) {
            if (!s.contains("char")) bad("one-dimensional summands need a char");
            x.chr = chr(s["char"], p.labels, "summand char");
        } else {
            x.chr = SmoothChar(p.labels);
        }
        if (s.contains("det")) x.det = chr(s["det"], p.labels, "summand det");
        x.dual_of = s.value("dual_of", "");
        if (s.contains("depth")) x.depth = rational(s["depth"], "summand depth");
        p.summands.push_back(x);
    }
    p.xi = j.contains("xi") ? chr(j["xi"], p.labels, "xi") : SmoothChar(p.labels);
    if (j.contains("sl2")) {
        auto& s = j["sl2"];
        if (s.contains("partition")) {
            if (!s["partition"].is_array()) bad("sl2.partition must be an array");
            p.sl2.partition = s["partition"].get<std::vector<int>>();
        }
        p.sl2.embedding = s.value("embedding", "");
    }
    return p;
}

ParamDescriptor parse_descriptor(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
    try {
        return descriptor_from_json(j);
    } catch (const Json::exception& e) {
        bad(std::string("descriptor field has the wrong type: ") + e.what());
    }
}

Json descriptor_to_json(const ParamDescriptor& p) {
    Json j = {{"schema", kSchema}, {"group", group_name(p.group)}, {"labels", labels_to_json(p.declared)}};
    Json ss = Json::array();
    for (auto& s : p.summands) {
        Json x = {{"dim", s.dim}};
        if (s.type != "none" || s.dim > 1) x["type"] = s.type;
        if (!s.tag.empty()) x["tag"] = s.tag;
        if (s.dim == 1) x["char"] = s.chr.str();
        x["mult"] = s.mult;
        if (s.det) x["det"] = s.det->str();
        if (!s.dual_of.empty()) x["dual_of"] = s.dual_of;
        if (s.depth) x["depth"] = rational_str(*s.depth);
        ss.push_back(x);
    }
    j["summands"] = ss;
    if (p.group == Group::GSp4) j["xi"] = p.xi.str();
    Json sl2 = {{"partition", p.sl2.partition}};
    if (!p.sl2.embedding.empty()) sl2["embedding"] = p.sl2.embedding;
    j["sl2"] = sl2;
    return j;
}

Json levi_to_json(const LeviLabel& l) {
    return {{"name", l.name()}, {"side", l.dual_side ? "dual" : "group"}, {"kind", levi_kind_name(l.kind)}};
}

Json centralizer_to_json(const CentralizerReport& c) {
    Json j = {{"schema", kSchema},
              {"case", c.case_tag},
              {"G_phi", c.g_phi},
              {"Z_phi", c.z_phi},
              {"A_phi", c.a_phi},
              {"S_phi_rank", c.s_rank},
              {"S_phi_order", 1 << c.s_rank},
              {"G_phi_identity_abelian", c.g_phi_identity_abelian},
              {"finite_mod_center", c.finite_mod_center},
              {"sl2_orbit", c.sl2_orbit}};
    if (!c.springer_group.empty()) j["springer_table"] = c.springer_group;
    return j;
}

Json packet_to_json(const PacketDescriptor& p) {
    Json ms = Json::array();
    for (auto& m : p.members) {
        Json x = {{"kind", m.kind},
                  {"label", m.label},
                  {"enhancement", m.enhancement},
                  {"support_dual", levi_to_json(m.support_dual)},
                  {"support_group", levi_to_json(m.support_group)},
                  {"tempered", m.tempered},
                  {"discrete", m.discrete},
                  {"generic", m.generic}};
        if (!m.springer_row.empty()) x["springer_row"] = m.springer_row;
        if (!m.sc_key.empty()) x["depth_zero_key"] = m.sc_key;
        if (!m.role.empty()) x["role"] = m.role;
        if (m.induced) x["induced"] = induced_to_json(*m.induced);
        if (!m.restriction.empty()) x["restriction"] = m.restriction;
        ms.push_back(x);
    }
    Json j = {{"schema", kSchema}, {"group", group_name(p.group)}, {"case", p.case_tag}, {"size", p.members.size()},
              {"tempered", p.tempered},       {"discrete", p.discrete}, {"members", ms}};
    if (!p.notes.empty()) j["notes"] = p.notes;
    return j;
}

Json reducibility_to_json(const ReducibilityReport& r) {
    Json cs = Json::array();
    for (auto& c : r.constituents) {
        Json x = {{"role", c.role},
                  {"label", c.label},
                  {"instantiated", c.instantiated},
                  {"ess_tempered", c.ess_tempered},
                  {"square_integrable", c.square_integrable},
                  {"generic", c.generic},
                  {"support", levi_to_json(c.support)}};
        if (!c.summand.empty()) x["summand"] = c.summand;
        if (c.langlands) x["langlands"] = *c.langlands;
        if (c.langlands_instantiated) x["langlands_instantiated"] = *c.langlands_instantiated;
        cs.push_back(x);
    }
    Json j = {{"schema", kSchema},
              {"group", group_name(r.group)},
              {"levi", levi_kind_name(r.levi)},
              {"case", r.case_tag},
              {"length", r.length},
              {"canonical_data", r.canonical_data},
              {"constituents", cs}};
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

Json infinitesimal_to_json(const std::vector<InfinitesimalEntry>& v) {
    Json a = Json::array();
    for (auto& e : v) a.push_back({{"base", e.base}, {"shift", rational_str(e.shift)}, {"value", e.str()}});
    return a;
}

InducedRep induced_from_json(const Json& j) {
    check_schema(j);
    InducedRep r;
    try {
        r.group = parse_group(j.value("group", "GSp4"));
        LabelGroupPtr g = labels_from(j);
        r.levi = levi_kind(j.value("levi", "Torus"));
        auto get = [&](const char* k) { return j.contains(k) ? chr(j[k], g, k) : SmoothChar(g); };
        r.chi1 = get("chi1");
        r.chi2 = get("chi2");
        r.theta = get("theta");
        r.chi = get("chi");
        if (j.contains("beta")) r.beta = rational(j["beta"], "beta");
        if (j.contains("sigma")) r.sigma = sigma_from_json(j["sigma"], g);
        if (r.levi == LeviKind::Full) bad("induction from G itself is not a parabolic induction");
        if (r.levi != LeviKind::Torus && !j.contains("sigma")) bad("a supercuspidal sigma of the Levi is required");
    } catch (const Json::exception& e) {
        bad(std::string("induced-representation field has the wrong type: ") + e.what());
    }
    return r;
}

Json induced_to_json(const InducedRep& r) {
    LabelGroupPtr g = r.chi1.group();
    Json j = {{"schema", kSchema}, {"group", group_name(r.group)}, {"labels", labels_to_json(labels_of(g))},
              {"levi", levi_kind_name(r.levi)}};
    if (r.levi == LeviKind::Torus) {
        j["chi1"] = r.chi1.str();
        j["chi2"] = r.chi2.str();
        if (r.group == Group::GSp4) j["theta"] = r.theta.str();
    } else {
        j["sigma"] = sigma_to_json(r.sigma);
        j["chi"] = r.chi.str();
        if (r.levi == LeviKind::Siegel) j["beta"] = rational_str(r.beta);
    }
    return j;
}

}  // namespace llc
