// Command-line front end.  Talks to the library only through the C API.
#include <llc/llc.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitUnknownCommand = 64;

struct CliError {
    int code;
    std::string msg;
};

int exit_for(llc_status s) {
    if (s == LLC_OK) return 0;
    if (s == LLC_MALFORMED_DESCRIPTOR || s == LLC_INVALID_OPERAND || s == LLC_NULL_ARGUMENT) return kExitUsage;
    return 1;
}

class Session {
public:
    Session() {
        if (llc_context_new(&ctx_) != LLC_OK) throw CliError{1, "cannot allocate context"};
    }
    ~Session() { llc_context_free(ctx_); }
    Session(const Session&) = delete;
    Session& operator=(const Session&) = delete;

    llc_context* ctx() { return ctx_; }

    void check(llc_status s) {
        if (s != LLC_OK)
            throw CliError{exit_for(s), std::string(llc_status_name(s)) + ": " + llc_last_error(ctx_)};
    }

private:
    llc_context* ctx_ = nullptr;
};

struct Descriptor {
    llc_descriptor* d = nullptr;
    ~Descriptor() { llc_descriptor_free(d); }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError{kExitUsage, "cannot read " + path};
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "x:0,y:3:unr" -> [{"name":"x","order":0}, {"name":"y","order":3,"unramified":true}]
Json parse_labels(const std::string& text) {
    Json a = Json::array();
    if (text.empty()) return a;
    if (text.front() == '[') {
        try {
            return Json::parse(text);
        } catch (const Json::exception& e) {
            throw CliError{kExitUsage, std::string("MalformedDescriptor: --labels: ") + e.what()};
        }
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::vector<std::string> parts;
        std::stringstream is(item);
        std::string p;
        while (std::getline(is, p, ':')) parts.push_back(p);
        if (parts.empty() || parts[0].empty() || parts.size() > 3)
            throw CliError{kExitUsage, "MalformedDescriptor: bad label declaration '" + item + "'"};
        Json l = {{"name", parts[0]}, {"order", 0}};
        try {
            if (parts.size() > 1) l["order"] = std::stol(parts[1]);
        } catch (const std::exception&) {
            throw CliError{kExitUsage, "MalformedDescriptor: bad label order in '" + item + "'"};
        }
        if (parts.size() > 2) {
            if (parts[2] != "unr") throw CliError{kExitUsage, "MalformedDescriptor: expected ':unr' in '" + item + "'"};
            l["unramified"] = true;
        }
        a.push_back(l);
    }
    return a;
}

// Aligned-table rendering of a report: scalars as "key: value", arrays of objects as tables.
std::string cell(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    if (v.is_object() && v.contains("name") && v["name"].is_string()) return v["name"].get<std::string>();
    return v.dump();
}

void render_table(std::ostream& os, const std::string& title, const Json& rows) {
    std::vector<std::string> cols;
    for (auto& r : rows)
        for (auto& [k, v] : r.items())
            if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    std::vector<std::vector<std::string>> cells;
    std::vector<size_t> width;
    for (auto& c : cols) width.push_back(c.size());
    for (auto& r : rows) {
        std::vector<std::string> line;
        for (size_t i = 0; i < cols.size(); ++i) {
            line.push_back(r.contains(cols[i]) ? cell(r[cols[i]]) : "");
            width[i] = std::max(width[i], line.back().size());
        }
        cells.push_back(line);
    }
    os << "[" << title << "]\n";
    auto put = [&](const std::vector<std::string>& line) {
        std::string s;
        for (size_t i = 0; i < line.size(); ++i) {
            s += line[i];
            if (i + 1 < line.size()) s += std::string(width[i] - line[i].size() + 2, ' ');
        }
        os << s << "\n";
    };
    put(cols);
    std::vector<std::string> rule;
    for (auto w : width) rule.push_back(std::string(w, '-'));
    put(rule);
    for (auto& l : cells) put(l);
    os << "\n";
}

void render(std::ostream& os, const Json& j, const std::string& prefix = "") {
    std::vector<std::pair<std::string, const Json*>> nested;
    for (auto& [k, v] : j.items()) {
        std::string key = prefix.empty() ? k : prefix + "." + k;
        bool table = v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_object(); });
        if (table || (v.is_object() && !v.empty()))
            nested.push_back({key, &v});
        else
            os << key << ": " << cell(v) << "\n";
    }
    os << "\n";
    for (auto& [k, v] : nested) {
        if (v->is_array())
            render_table(os, k, *v);
        else
            render(os, *v, k);
    }
}

void print(const std::string& text, const std::string& format) {
    if (format == "json") {
        std::cout << text << "\n";
        return;
    }
    render(std::cout, Json::parse(text));
}

}  // namespace

int main(int argc, char** argv) {
    const std::set<std::string> commands = {"tables", "classify", "packet", "reduce", "fdeg", "stability", "selfcheck"};
    if (argc > 1 && argv[1][0] != '-' && !commands.count(argv[1])) {
        std::cerr << "unknown subcommand: " << argv[1] << "\n";
        return kExitUnknownCommand;
    }
    if (argc == 2 && std::string(argv[1]) == "--version") {
        std::cout << llc_version() << "\n";
        return 0;
    }

    CLI::App app{"Local Langlands tables and checks for GSp4 and Sp4"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

    // tables
    auto* tables = app.add_subcommand("tables", "Root datum, Weyl classes, orbits, parahoric quotients and other tables");
    std::string t_group = "GSp4";
    tables->add_option("--group", t_group, "GSp4 or Sp4");
    std::vector<std::pair<std::string, bool>> table_flags = {
        {"root_datum", false}, {"weyl", false}, {"orbits", false}, {"levis", false},
        {"parahoric", false}, {"facets", false}, {"finite", false}, {"depth_zero", false},
        {"types", false}, {"tori", false}, {"springer", false}, {"presets", false}};
    for (auto& [name, on] : table_flags) {
        std::string flag = name;
        std::replace(flag.begin(), flag.end(), '_', '-');
        tables->add_flag("--" + flag, on, "Dump the " + name + " table");
    }

    // classify / packet
    std::string c_group, c_preset, c_descriptor, c_support;
    bool c_restrict = false, c_infinitesimal = false;
    auto* classify = app.add_subcommand("classify", "Centralizer report and L-packet of a parameter");
    auto* packet = app.add_subcommand("packet", "L-packet with optional restriction, support and infinitesimal data");
    for (auto* sc : {classify, packet}) {
        sc->add_option("--group", c_group, "Expected group of the descriptor");
        auto* pre = sc->add_option("--preset", c_preset, "Named descriptor");
        auto* des = sc->add_option("--descriptor", c_descriptor, "Descriptor JSON file");
        pre->excludes(des);
    }
    packet->add_flag("--restrict", c_restrict, "Restrict a GSp4 packet to Sp4");
    packet->add_option("--support", c_support, "Cuspidal support of an enhancement, pair or Springer image");
    packet->add_flag("--infinitesimal", c_infinitesimal, "Infinitesimal parameter");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "Reducibility of a parabolically induced representation");
    std::string r_group = "GSp4", r_levi = "T", r_chi1 = "1", r_chi2 = "1", r_theta = "1", r_labels, r_induced;
    std::string r_chi = "1", r_beta = "0", r_sigma_group, r_sigma_id, r_sigma_central = "1", r_sigma_depth = "0";
    bool r_self_dual = false;
    reduce->add_option("--group", r_group, "GSp4 or Sp4");
    reduce->add_option("--levi", r_levi, "T, Siegel or Klingen");
    reduce->add_option("--chi1", r_chi1);
    reduce->add_option("--chi2", r_chi2);
    reduce->add_option("--theta", r_theta);
    reduce->add_option("--chi", r_chi, "Character of the GL1 or GL2 part");
    reduce->add_option("--beta", r_beta, "Real exponent on the Siegel Levi");
    reduce->add_option("--sigma-group", r_sigma_group);
    reduce->add_option("--sigma-id", r_sigma_id);
    reduce->add_option("--sigma-central", r_sigma_central);
    reduce->add_option("--sigma-depth", r_sigma_depth);
    reduce->add_flag("--self-dual", r_self_dual);
    reduce->add_option("--labels", r_labels, "Label declarations, e.g. x:0,y:3:unr");
    reduce->add_option("--induced", r_induced, "Induced-representation JSON file");

    // fdeg
    auto* fdeg = app.add_subcommand("fdeg", "Formal degree of a depth-zero supercuspidal");
    std::string f_group = "GSp4", f_rep;
    long f_q0 = 0;
    fdeg->add_option("--group", f_group);
    fdeg->add_option("--rep", f_rep)->required();
    fdeg->add_option("--q0", f_q0, "Evaluation point");

    // stability
    auto* stability = app.add_subcommand("stability", "Minimal stable subsets of candidate characters");
    std::string s_candidates, s_context;
    stability->add_option("--candidates", s_candidates, "Candidates JSON file")->required();
    stability->add_option("--context", s_context, "nbhd-1 or nbhd-s, overrides the file");

    auto* selfcheck = app.add_subcommand("selfcheck", "Run the invariant suite");
    int k_samples = 2000;
    selfcheck->add_option("--samples", k_samples);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        Session s;
        const char* out = nullptr;

        if (tables->parsed()) {
            std::vector<std::string> which;
            for (auto& [name, on] : table_flags)
                if (on) which.push_back(name);
            if (which.empty()) which = {"root_datum", "weyl", "orbits", "parahoric"};
            if (which.size() == 1) {
                s.check(llc_tables(s.ctx(), t_group.c_str(), which[0].c_str(), &out));
                print(out, format);
            } else {
                Json all = {{"schema", "v1"}, {"group", t_group}};
                for (auto& w : which) {
                    s.check(llc_tables(s.ctx(), t_group.c_str(), w.c_str(), &out));
                    all[w] = Json::parse(out)["rows"];
                }
                print(all.dump(2), format);
            }
        } else if (classify->parsed() || packet->parsed()) {
            Descriptor d;
            if (!c_preset.empty())
                s.check(llc_descriptor_preset(s.ctx(), c_preset.c_str(), &d.d));
            else if (!c_descriptor.empty())
                s.check(llc_descriptor_parse(s.ctx(), read_file(c_descriptor).c_str(), &d.d));
            else
                throw CliError{kExitUsage, "one of --preset or --descriptor is required"};
            s.check(llc_descriptor_json(s.ctx(), d.d, &out));
            Json desc = Json::parse(out);
            if (!c_group.empty() && desc["group"] != c_group)
                throw CliError{kExitUsage, "InvalidOperand: descriptor is for " + desc["group"].get<std::string>() +
                                               ", not " + c_group};
            s.check(llc_packet(s.ctx(), d.d, &out));
            Json rep = Json::parse(out);
            if (!c_preset.empty()) rep["preset"] = c_preset;
            if (packet->parsed()) {
                if (c_restrict) {
                    s.check(llc_restrict_to_sp4(s.ctx(), d.d, &out));
                    rep["restriction"] = Json::parse(out);
                }
                if (!c_support.empty()) {
                    s.check(llc_cuspidal_support(s.ctx(), d.d, c_support.c_str(), &out));
                    rep["cuspidal_support"] = Json::parse(out);
                }
                if (c_infinitesimal) {
                    s.check(llc_infinitesimal(s.ctx(), d.d, &out));
                    rep["infinitesimal"] = Json::parse(out);
                }
            }
            print(rep.dump(2), format);
        } else if (reduce->parsed()) {
            std::string text;
            if (!r_induced.empty()) {
                text = read_file(r_induced);
            } else {
                Json j = {{"schema", "v1"}, {"group", r_group}, {"labels", parse_labels(r_labels)}, {"levi", r_levi}};
                if (r_levi == "T" || r_levi == "Torus") {
                    j["chi1"] = r_chi1;
                    j["chi2"] = r_chi2;
                    j["theta"] = r_theta;
                } else {
                    j["chi"] = r_chi;
                    j["beta"] = r_beta;
                    j["sigma"] = {{"group", r_sigma_group},
                                  {"id", r_sigma_id},
                                  {"central", r_sigma_central},
                                  {"self_dual", r_self_dual},
                                  {"depth", r_sigma_depth}};
                }
                text = j.dump();
            }
            s.check(llc_reduce(s.ctx(), text.c_str(), &out));
            print(out, format);
        } else if (fdeg->parsed()) {
            s.check(llc_fdeg(s.ctx(), f_group.c_str(), f_rep.c_str(), f_q0, &out));
            print(out, format);
        } else if (stability->parsed()) {
            std::string text = read_file(s_candidates);
            if (!s_context.empty()) {
                Json j;
                try {
                    j = Json::parse(text);
                } catch (const Json::exception& e) {
                    throw CliError{kExitUsage, std::string("MalformedDescriptor: ") + e.what()};
                }
                j["context"] = s_context;
                text = j.dump();
            }
            s.check(llc_stability(s.ctx(), text.c_str(), &out));
            print(out, format);
        } else if (selfcheck->parsed()) {
            int failures = 0;
            s.check(llc_selfcheck(s.ctx(), k_samples, &out, &failures));
            Json j = Json::parse(out);
            int total = static_cast<int>(j["checks"].size());
            if (format == "json") {
                std::cout << out << "\n";
            } else {
                for (auto& c : j["checks"])
                    std::cout << (c["ok"].get<bool>() ? "PASS " : "FAIL ") << c["module"].get<std::string>() << ": "
                              << c["name"].get<std::string>() << "\n";
            }
            std::cerr << total - failures << " passed, " << failures << " failed\n";
            return failures == 0 ? 0 : 1;
        }
    } catch (const CliError& e) {
        std::cerr << e.msg << "\n";
        return e.code;
    }
    return 0;
}
