#include <llc/llc.h>

#include <new>
#include <string>

#include "finite_reductive.hpp"
#include "galois.hpp"
#include "induction.hpp"
#include "qfield.hpp"
#include "rootdata.hpp"
#include "selfcheck.hpp"
#include "serialize.hpp"
#include "stability.hpp"
#include "supercuspidal.hpp"

struct llc_context {
    std::string result;
    std::string error;
};

struct llc_descriptor {
    llc::ParamDescriptor p;
};

struct llc_qhalf {
    llc::QHalf v;
};

namespace {

using llc::Json;

llc_status to_status(llc::Errc e) { return static_cast<llc_status>(static_cast<int>(e)); }

// Runs f, stores its text in ctx->result and maps exceptions to status codes.
template <class F>
llc_status guarded(llc_context* ctx, F&& f) {
    if (!ctx) return LLC_NULL_ARGUMENT;
    ctx->error.clear();
    try {
        f();
        return LLC_OK;
    } catch (const llc::Error& e) {
        ctx->error = e.what();
        return to_status(e.code());
    } catch (const nlohmann::json::exception& e) {
        ctx->error = e.what();
        return LLC_MALFORMED_DESCRIPTOR;
    } catch (const std::bad_alloc&) {
        ctx->error = "out of memory";
        return LLC_INTERNAL;
    } catch (const std::exception& e) {
        ctx->error = e.what();
        return LLC_INTERNAL;
    }
}

llc_status emit(llc_context* ctx, const char** out) {
    if (!out) return LLC_NULL_ARGUMENT;
    *out = ctx->result.c_str();
    return LLC_OK;
}

std::string qtext(const std::optional<llc::QHalf>& q) { return q ? q->str() : ""; }

Json weyl_json(llc::Group g) {
    Json a = Json::array();
    for (auto& c : llc::weyl_classes(g))
        a.push_back({{"name", c.name},
                     {"cycle_type", c.cycle_type},
                     {"representative", c.representative_word},
                     {"size", c.size},
                     {"torsion", c.torsion}});
    return a;
}

Json root_datum_json(llc::Group g) {
    auto rd = llc::build_root_datum(g);
    Json roots = Json::array();
    for (int i = 0; i < static_cast<int>(rd.roots.size()); ++i)
        roots.push_back({{"name", rd.root_name(i)},
                         {"root", rd.roots[i]},
                         {"coroot", rd.coroots[i]},
                         {"long", rd.is_long(i)}});
    return {{"group", llc::group_name(g)},
            {"basis", rd.basis},
            {"cobasis", rd.cobasis},
            {"simple", {{"alpha", rd.root_name(rd.alpha)}, {"beta", rd.root_name(rd.beta)}}},
            {"roots", roots}};
}

Json orbits_json() {
    Json a = Json::array();
    for (auto& o : llc::nilpotent_orbits())
        a.push_back({{"name", o.name},
                     {"b2_partition", o.b2_partition},
                     {"c2_partition", o.c2_partition},
                     {"representative", o.representative},
                     {"levi", llc::levi_to_json(o.levi)}});
    return a;
}

Json levis_json(llc::Group g) {
    Json a = Json::array();
    for (bool dual : {false, true})
        for (auto& l : llc::levi_labels(g, dual)) {
            Json j = llc::levi_to_json(l);
            j["dual"] = l.dual().name();
            a.push_back(j);
        }
    return a;
}

Json parahoric_json(llc::Group g) {
    Json a = Json::array();
    for (auto& p : llc::parahoric_quotients(g))
        a.push_back({{"vertex", p.vertex},
                     {"aliases", p.aliases},
                     {"deleted_node", p.deleted_node},
                     {"diagram", p.diagram},
                     {"quotient", p.quotient}});
    return a;
}

Json facets_json() {
    Json a = Json::array();
    for (auto& f : llc::apartment_facets())
        a.push_back({{"name", f.name}, {"kind", f.kind}, {"type", f.type}, {"vertices", f.vertices}});
    return a;
}

Json finite_json(llc::Group g) {
    using llc::FiniteFamily;
    std::vector<llc::FiniteGroupLabel> groups;
    if (g == llc::Group::GSp4)
        groups = {{FiniteFamily::GSp4, 2}, {FiniteFamily::GSp22, 2}};
    else
        groups = {{FiniteFamily::Sp4, 2}, {FiniteFamily::Sp2xSp2, 2}};
    Json a = Json::array();
    for (auto& fg : groups) {
        Json classes = Json::array();
        for (auto& c : llc::cuspidal_classes(fg))
            classes.push_back({{"name", c.name},
                               {"series", c.series},
                               {"condition", c.condition},
                               {"class_count", qtext(c.class_count)},
                               {"members_per_class", c.members_per_class},
                               {"enhancements", c.enhancements},
                               {"member_dimension", qtext(c.member_dimension)},
                               {"unipotent", c.unipotent},
                               {"singular", c.singular}});
        a.push_back({{"group", fg.name()},
                     {"order", fg.order().pretty()},
                     {"positive_roots", fg.positive_roots()},
                     {"cuspidal_classes", classes}});
    }
    return a;
}

Json depth_zero_json(llc::Group g) {
    Json a = Json::array();
    for (auto& r : llc::enumerate_depth_zero(g)) {
        Json j = {{"key", r.key},
                  {"name", r.name},
                  {"family", r.family},
                  {"vertex", r.vertex},
                  {"vertex_aliases", r.vertex_aliases},
                  {"quotient", r.quotient ? r.quotient->name() : ""},
                  {"inducing", r.inducing},
                  {"inducing_dimension", qtext(r.inducing_dimension)},
                  {"count", qtext(r.count)},
                  {"singularity", r.singularity}};
        if (r.inducing_dimension) j["formal_degree"] = llc::formal_degree_depth_zero(r).pretty();
        if (g == llc::Group::Sp4) j["packet"] = llc::packet_of_depth_zero(r.key);
        a.push_back(j);
    }
    return a;
}

Json types_json(llc::Group g) {
    Json a = Json::array();
    for (auto& t : llc::enumerate_type_templates(g)) {
        Json j = {{"index", t.index},
                  {"sequence", t.sequence},
                  {"abelian_g0", t.abelian_g0},
                  {"can_be_singular", t.can_be_singular},
                  {"singular_condition", t.singular_condition},
                  {"anisotropy", t.anisotropy}};
        j["dim_rho0"] = t.dim_rho0 ? Json(*t.dim_rho0) : Json();
        a.push_back(j);
    }
    return a;
}

Json tori_json(llc::Group g) {
    Json a = Json::array();
    for (auto& t : llc::anisotropic_tori(g)) {
        Json fs = Json::array();
        for (auto& f : t.factors)
            fs.push_back({{"field", f.field},
                          {"subfield", f.subfield},
                          {"subfield_degree", f.subfield_degree},
                          {"split", f.split}});
        a.push_back({{"torus", t.torus},
                     {"factors", fs},
                     {"parameters", t.parameters},
                     {"subtori", t.subtori},
                     {"n", t.n()},
                     {"lattice_degree", t.lattice_degree()}});
    }
    return a;
}

Json springer_json() {
    Json a = Json::array();
    for (auto& t : llc::springer_tables()) {
        Json rows = Json::array();
        for (auto& r : t.rows) rows.push_back({{"pair", r.pair}, {"image", r.image}});
        a.push_back({{"group", t.group},
                     {"weyl_irreps", t.weyl_irreps},
                     {"cuspidal", t.cuspidal_count()},
                     {"rows", rows}});
    }
    return a;
}

Json presets_json(llc::Group g) {
    Json a = Json::array();
    for (auto& p : llc::presets()) {
        Json d = Json::parse(p.json);
        if (llc::parse_group(d.at("group").get<std::string>()) != g) continue;
        a.push_back({{"name", p.name}, {"description", p.description}});
    }
    return a;
}

Json table(llc::Group g, const std::string& name) {
    if (name == "root_datum") return root_datum_json(g);
    if (name == "weyl") return weyl_json(g);
    if (name == "orbits") return orbits_json();
    if (name == "levis") return levis_json(g);
    if (name == "parahoric") return parahoric_json(g);
    if (name == "facets") return facets_json();
    if (name == "finite") return finite_json(g);
    if (name == "depth_zero") return depth_zero_json(g);
    if (name == "types") return types_json(g);
    if (name == "tori") return tori_json(g);
    if (name == "springer") return springer_json();
    if (name == "presets") return presets_json(g);
    llc::fail(llc::Errc::InvalidOperand, "unknown table: " + name);
}

Json fdeg_json(llc::Group g, const std::string& rep, long q0) {
    llc::QHalf d;
    std::string name;
    if (rep == "delta_eta2") {
        if (g != llc::Group::GSp4) llc::fail(llc::Errc::NotApplicable, "delta_eta2 lives on GSp4");
        d = llc::formal_degree_delta_eta2();
        name = "delta([eta2, nu eta2], rho)";
    } else {
        auto& r = llc::find_depth_zero(g, rep);
        d = llc::formal_degree_depth_zero(r);
        name = r.name;
    }
    Json j = {{"schema", llc::kSchema},
              {"group", llc::group_name(g)},
              {"rep", rep},
              {"name", name},
              {"formal_degree", d.pretty()},
              {"canonical", d.str()}};
    if (q0 > 0) {
        j["q0"] = q0;
        j["value"] = llc::qh_eval(d, q0).str();
    }
    return j;
}

Json stability_json(const Json& in) {
    llc::CharacterOptions opt;
    if (in.contains("q_mod4")) opt.q_mod4 = in.at("q_mod4").get<int>();
    if (opt.q_mod4 != 1 && opt.q_mod4 != 3) llc::fail(llc::Errc::InvalidOperand, "q_mod4 must be 1 or 3");
    std::string conv = in.value("convention", std::string("eta2_plus"));
    if (conv == "eta2_plus")
        opt.convention = llc::SignConvention::Eta2Plus;
    else if (conv == "eta2_minus")
        opt.convention = llc::SignConvention::Eta2Minus;
    else
        llc::fail(llc::Errc::InvalidOperand, "unknown convention: " + conv);
    auto ctxname = in.value("context", std::string("nbhd-s"));
    auto sctx = llc::parse_context(ctxname);

    std::vector<llc::Candidate> cands;
    Json rows = Json::array();
    for (auto& c : in.at("candidates")) {
        std::string label = c.at("label").get<std::string>(), eta = c.at("eta").get<std::string>();
        auto v = llc::character_vector(label, eta, opt);
        cands.push_back({label + "(" + eta + ")", v});
        rows.push_back({{"label", cands.back().label}, {"vector", v.str()}, {"stable", llc::is_stable(v, sctx)}});
    }
    Json subsets = Json::array();
    for (auto& s : llc::minimal_stable_subsets(cands, sctx)) {
        Json names = Json::array();
        llc::DistVector sum;
        for (int i : s) {
            names.push_back(cands[i].label);
            sum += cands[i].vector;
        }
        subsets.push_back({{"indices", s}, {"members", names}, {"sum", sum.str()}});
    }
    return {{"schema", llc::kSchema},
            {"context", ctxname},
            {"q_mod4", opt.q_mod4},
            {"convention", conv},
            {"candidates", rows},
            {"minimal_stable_subsets", subsets}};
}

}  // namespace

extern "C" {

const char* llc_version(void) { return "1.0.0"; }

const char* llc_status_name(llc_status s) {
    if (s == LLC_NULL_ARGUMENT) return "NullArgument";
    if (s == LLC_INTERNAL) return "Internal";
    if (s < LLC_OK || s > LLC_INVALID_ENHANCEMENT) return "Unknown";
    return llc::errc_name(static_cast<llc::Errc>(static_cast<int>(s)));
}

llc_status llc_context_new(llc_context** out) {
    if (!out) return LLC_NULL_ARGUMENT;
    *out = new (std::nothrow) llc_context();
    return *out ? LLC_OK : LLC_INTERNAL;
}

void llc_context_free(llc_context* ctx) { delete ctx; }

const char* llc_last_error(const llc_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }

llc_status llc_tables(llc_context* ctx, const char* group, const char* name, const char** out) {
    if (!group || !name) return LLC_NULL_ARGUMENT;
    auto s = guarded(ctx, [&] {
        auto g = llc::parse_group(group);
        Json j = {{"schema", llc::kSchema}, {"group", llc::group_name(g)}, {"table", name}, {"rows", table(g, name)}};
        ctx->result = j.dump(2);
    });
    return s == LLC_OK ? emit(ctx, out) : s;
}

llc_status llc_descriptor_parse(llc_context* ctx, const char* json, llc_descriptor** out) {
    if (!json || !out) return LLC_NULL_ARGUMENT;
    return guarded(ctx, [&] { *out = new llc_descriptor{llc::parse_descriptor(json)}; });
}

llc_status llc_descriptor_preset(llc_context* ctx, const char* name, llc_descriptor** out) {
    if (!name || !out) return LLC_NULL_ARGUMENT;
    return guarded(ctx, [&] { *out = new llc_descriptor{llc::preset_descriptor(name)}; });
}

void llc_descriptor_free(llc_descriptor* d) { delete d; }

llc_status llc_descriptor_json(llc_context* ctx, const llc_descriptor* d, const char** out) {
    if (!d) return LLC_NULL_ARGUMENT;
    auto s = guarded(ctx, [&] { ctx->result = llc::descriptor_to_json(d->p).dump(2); });
    return s == LLC_OK ? emit(ctx, out) : s;
}

llc_status llc_centralizer(llc_context* ctx, const llc_descriptor* d, const char** out) {
    if (!d) return LLC_NULL_ARGUMENT;
    auto s = guarded(ctx, [&] { ctx->result = llc::centralizer_to_json(llc::centralizer(d->p)).dump(2); });
    return s == LLC_OK ? emit(ctx, out) : s;
}

llc_status llc_packet(llc_context* ctx, const llc_descriptor* d, const char** out) {
    if (!d) return LLC_NULL_ARGUMENT;
    auto s = guarded(ctx, [&] {
        Json j = {{"schema", llc::kSchema},
                  {"centralizer", llc::centralizer_to_json(llc::centralizer(d->p))},
                  {"packet", llc::packet_to_json(llc::assemble_packet(d->p))}};
        ctx->result = j.dump(2);
    });
    return s == LLC_OK ? emit(ctx, out) : s;
}

llc_status llc_infinitesimal(llc_context* ctx, const llc_descriptor* d, const char** out) {
    if (!d) return LLC_NULL_ARGUMENT;
    auto s = guarded(ctx, [&] { ctx->result = llc::infinitesimal_to_json(llc::infinitesimal(d->p)).dump(2); });
    return s == LLC_OK ? emit(ctx, out) : s;
}

llc_status llc_cuspidal_support(llc_context* ctx, const llc_descriptor* d, const char* rho, const char** out) {
    if (!d || !rho) return LLC_NULL_ARGUMENT;
    auto s = guarded(ctx, [&] {
        auto cs = llc::cuspidal_support(d->p, rho);
        Json j = {{"schema", llc::kSchema}, {"rho", rho}, {"levi", llc::levi_to_json(cs.levi)}, {"sketch", cs.sketch}};
        ctx->result = j.dump(2);
    });
    return s == LLC_OK ? emit(ctx, out) : s;
}

llc_status llc_restrict_to_sp4(llc_context* ctx, const llc_descriptor* d, const char** out) {
    if (!d) return LLC_NULL_ARGUMENT;
    auto s = guarded(ctx, [&] {
        auto pk = llc::assemble_packet(d->p);
        ctx->result = llc::packet_to_json(llc::sp4_from_gsp4(pk)).dump(2);
    });
    return s == LLC_OK ? emit(ctx, out) : s;
}

llc_status llc_reduce(llc_context* ctx, const char* induced_json, const char** out) {
    if (!induced_json) return LLC_NULL_ARGUMENT;
    auto s = guarded(ctx, [&] {
        Json in;
        try {
            in = Json::parse(induced_json);
        } catch (const nlohmann::json::parse_error& e) {
            llc::fail(llc::Errc::MalformedDescriptor, std::string("induced representation: ") + e.what());
        }
        auto rep = llc::induced_from_json(in);
        Json j = llc::reducibility_to_json(llc::decide_reducibility(rep));
        j["induced"] = llc::induced_to_json(rep);
        ctx->result = j.dump(2);
    });
    return s == LLC_OK ? emit(ctx, out) : s;
}

llc_status llc_fdeg(llc_context* ctx, const char* group, const char* rep, long q0, const char** out) {
    if (!group || !rep) return LLC_NULL_ARGUMENT;
    auto s = guarded(ctx, [&] { ctx->result = fdeg_json(llc::parse_group(group), rep, q0).dump(2); });
    return s == LLC_OK ? emit(ctx, out) : s;
}

llc_status llc_stability(llc_context* ctx, const char* candidates_json, const char** out) {
    if (!candidates_json) return LLC_NULL_ARGUMENT;
    auto s = guarded(ctx, [&] {
        Json in;
        try {
            in = Json::parse(candidates_json);
        } catch (const nlohmann::json::parse_error& e) {
            llc::fail(llc::Errc::MalformedDescriptor, std::string("candidates: ") + e.what());
        }
        ctx->result = stability_json(in).dump(2);
    });
    return s == LLC_OK ? emit(ctx, out) : s;
}

llc_status llc_selfcheck(llc_context* ctx, int samples, const char** out, int* failures) {
    auto s = guarded(ctx, [&] {
        auto res = llc::run_selfcheck(samples > 0 ? samples : 2000);
        Json a = Json::array();
        int bad = 0;
        for (auto& r : res) {
            if (!r.ok) ++bad;
            a.push_back({{"module", r.module}, {"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
        }
        if (failures) *failures = bad;
        ctx->result = Json{{"schema", llc::kSchema}, {"failures", bad}, {"checks", a}}.dump(2);
    });
    return s == LLC_OK ? emit(ctx, out) : s;
}

llc_status llc_qhalf_parse(llc_context* ctx, const char* text, llc_qhalf** out) {
    if (!text || !out) return LLC_NULL_ARGUMENT;
    return guarded(ctx, [&] { *out = new llc_qhalf{llc::QHalf::parse(text)}; });
}

void llc_qhalf_free(llc_qhalf* x) { delete x; }

llc_status llc_qhalf_arith(llc_context* ctx, const llc_qhalf* a, const llc_qhalf* b, llc_qop op, llc_qhalf** out) {
    if (!a || !b || !out) return LLC_NULL_ARGUMENT;
    return guarded(ctx, [&] {
        if (op < LLC_QADD || op > LLC_QDIV) llc::fail(llc::Errc::InvalidOperand, "unknown operation");
        *out = new llc_qhalf{llc::qh_arith(a->v, b->v, static_cast<llc::QOp>(static_cast<int>(op)))};
    });
}

llc_status llc_qhalf_str(llc_context* ctx, const llc_qhalf* x, const char** out) {
    if (!x) return LLC_NULL_ARGUMENT;
    auto s = guarded(ctx, [&] { ctx->result = x->v.str(); });
    return s == LLC_OK ? emit(ctx, out) : s;
}

llc_status llc_qhalf_factored(llc_context* ctx, const llc_qhalf* x, const char** out) {
    if (!x) return LLC_NULL_ARGUMENT;
    auto s = guarded(ctx, [&] { ctx->result = x->v.pretty(); });
    return s == LLC_OK ? emit(ctx, out) : s;
}

llc_status llc_qhalf_eval(llc_context* ctx, const llc_qhalf* x, long q0, const char** out) {
    if (!x) return LLC_NULL_ARGUMENT;
    auto s = guarded(ctx, [&] { ctx->result = llc::qh_eval(x->v, q0).str(); });
    return s == LLC_OK ? emit(ctx, out) : s;
}

int llc_qhalf_equal(const llc_qhalf* a, const llc_qhalf* b) { return a && b && a->v == b->v ? 1 : 0; }

}  // extern "C"
