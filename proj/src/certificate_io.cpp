#include "kcx/certificate_io.hpp"

#include <fstream>
#include <sstream>

#include "kcx/dimacs.hpp"

namespace kcx {

namespace {

constexpr const char* certificate_format = "kcx-certificate/1";

Json summary_json(const SolveSummary& s) {
    Json out;
    out["outcome"] = to_string(s.outcome);
    out["decisions"] = s.decisions;
    out["backtracks"] = s.backtracks;
    return out;
}

SolveSummary summary_from_json(const Json& doc) {
    SolveSummary s;
    const auto outcome = doc.at("outcome").get<std::string>();
    if (outcome == "sat")
        s.outcome = Outcome::sat;
    else if (outcome == "unsat")
        s.outcome = Outcome::unsat;
    else if (outcome == "resource_limit")
        s.outcome = Outcome::resource_limit;
    else
        throw ParseError("certificate: unknown solve outcome '" + outcome + "'");
    s.decisions = doc.at("decisions").get<std::uint64_t>();
    s.backtracks = doc.at("backtracks").get<std::uint64_t>();
    return s;
}

}  // namespace

Json to_json(const ListAssignment& lists) {
    Json out = Json::array();
    for (const auto& [v, list] : lists)
        out.push_back(Json::array({v, Json(std::vector<Colour>(list.begin(), list.end()))}));
    return out;
}

ListAssignment lists_from_json(const Json& doc) {
    ListAssignment lists;
    for (const auto& entry : doc) {
        auto colours = entry.at(1).get<std::vector<Colour>>();
        lists[entry.at(0).get<Vertex>()] = ColourSet(colours.begin(), colours.end());
    }
    return lists;
}

Json to_json(const Certificate& cert) {
    Json doc;
    doc["format"] = certificate_format;
    doc["input_sha256"] = cert.input_sha256;
    doc["k"] = cert.k;
    doc["mode"] = to_string(cert.mode);
    if (cert.mode == PaletteMode::plain)
        doc["palette_size"] = cert.palette_size;
    else
        doc["lists"] = to_json(cert.lists);

    Json h;
    h["order"] = cert.subgraph.size();
    h["vertices"] = cert.subgraph;
    doc["subgraph"] = h;

    Json witness;
    witness["degree"] = degree(cert.witness, cert.k);
    Json precolour = Json::array();
    for (auto [v, c] : cert.witness.precolour())
        precolour.push_back(Json::array({v, c}));
    witness["precolour"] = precolour;
    Json forbid = Json::array();
    for (const auto& [v, list] : cert.witness.forbidden())
        forbid.push_back(Json::array({v, Json(std::vector<Colour>(list.begin(), list.end()))}));
    witness["forbid"] = forbid;
    doc["witness"] = witness;

    Json trace = Json::array();
    for (const auto& step : cert.trace) {
        Json s;
        s["cut"] = step.cut;
        s["y"] = step.y;
        s["z"] = step.z;
        s["y_degree"] = step.y_degree;
        s["z_degree"] = step.z_degree;
        s["branch"] = to_string(step.branch);
        s["derived_degree"] = step.derived_degree;
        s["child_order"] = step.child_order;
        s["separation_solve"] = summary_json(step.separation_solve);
        s["completion_solve"] = step.completion_solve ? summary_json(*step.completion_solve) : Json(nullptr);
        trace.push_back(s);
    }
    doc["trace"] = trace;

    Json connectivity;
    connectivity["min_cut_size"] = cert.min_cut_size;
    connectivity["complete"] = cert.subgraph_complete;
    doc["connectivity"] = connectivity;

    Json chromatic;
    if (cert.mode == PaletteMode::plain) {
        chromatic["evidence"] = "no proper (k-1)-colouring of H";
        chromatic["colourable_below_k"] = cert.colourable_below_k;
    } else {
        chromatic["evidence"] = cert.list_witness ? "uncolourable (k-1)-list assignment on H"
                                                  : "construction guarantee (beyond brute-force cap)";
        chromatic["list_witness"] = cert.list_witness ? to_json(*cert.list_witness) : Json(nullptr);
    }
    doc["chromatic"] = chromatic;

    Json solver;
    solver["decisions"] = cert.decisions;
    solver["backtracks"] = cert.backtracks;
    doc["solver"] = solver;
    return doc;
}

Certificate certificate_from_json(const Json& doc) {
    try {
        if (doc.at("format").get<std::string>() != certificate_format)
            throw ParseError("certificate: unsupported format");
        Certificate cert;
        cert.input_sha256 = doc.at("input_sha256").get<std::string>();
        cert.k = doc.at("k").get<int>();
        const auto mode = doc.at("mode").get<std::string>();
        if (mode == "plain") {
            cert.mode = PaletteMode::plain;
            cert.palette_size = doc.at("palette_size").get<int>();
        } else if (mode == "list") {
            cert.mode = PaletteMode::list;
            cert.lists = lists_from_json(doc.at("lists"));
        } else {
            throw ParseError("certificate: unknown mode '" + mode + "'");
        }
        cert.subgraph = doc.at("subgraph").at("vertices").get<VertexSet>();

        std::map<Vertex, Colour> precolour;
        for (const auto& entry : doc.at("witness").at("precolour"))
            precolour[entry.at(0).get<Vertex>()] = entry.at(1).get<Colour>();
        std::map<Vertex, ColourSet> forbidden;
        for (const auto& entry : doc.at("witness").at("forbid")) {
            auto colours = entry.at(1).get<std::vector<Colour>>();
            forbidden[entry.at(0).get<Vertex>()] = ColourSet(colours.begin(), colours.end());
        }
        cert.witness = Template(std::move(precolour), std::move(forbidden));

        for (const auto& s : doc.at("trace")) {
            DescentStep step;
            step.cut = s.at("cut").get<VertexSet>();
            step.y = s.at("y").get<VertexSet>();
            step.z = s.at("z").get<VertexSet>();
            step.y_degree = s.at("y_degree").get<long>();
            step.z_degree = s.at("z_degree").get<long>();
            const auto branch = s.at("branch").get<std::string>();
            if (branch != "separation" && branch != "completion")
                throw ParseError("certificate: unknown branch '" + branch + "'");
            step.branch = branch == "separation" ? Branch::separation : Branch::completion;
            step.derived_degree = s.at("derived_degree").get<long>();
            step.child_order = s.at("child_order").get<std::size_t>();
            step.separation_solve = summary_from_json(s.at("separation_solve"));
            if (!s.at("completion_solve").is_null())
                step.completion_solve = summary_from_json(s.at("completion_solve"));
            cert.trace.push_back(std::move(step));
        }

        cert.min_cut_size = doc.at("connectivity").at("min_cut_size").get<int>();
        cert.subgraph_complete = doc.at("connectivity").at("complete").get<bool>();
        const auto& chromatic = doc.at("chromatic");
        if (cert.mode == PaletteMode::plain) {
            cert.colourable_below_k = chromatic.at("colourable_below_k").get<bool>();
        } else if (!chromatic.at("list_witness").is_null()) {
            cert.list_witness = lists_from_json(chromatic.at("list_witness"));
        }
        cert.decisions = doc.at("solver").at("decisions").get<std::uint64_t>();
        cert.backtracks = doc.at("solver").at("backtracks").get<std::uint64_t>();
        return cert;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("certificate: ") + e.what());
    } catch (const MalformedTemplate& e) {
        throw ParseError(std::string("certificate: ") + e.what());
    }
}

std::string to_text(const Certificate& cert) {
    return to_json(cert).dump(2) + "\n";
}

Certificate parse_certificate(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("certificate: ") + e.what());
    }
    return certificate_from_json(doc);
}

Certificate read_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_certificate(buffer.str());
}

void write_certificate_file(const std::string& path, const Certificate& cert) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << to_text(cert);
}

}  // namespace kcx
