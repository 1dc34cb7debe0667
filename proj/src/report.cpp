#include "preriesz/report.hpp"

#include <cstdio>
#include <fstream>

#include "preriesz/errors.hpp"

namespace preriesz {

Json rational_vector_to_json(const QVector& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(rat_str(x));
    return arr;
}

QVector rational_vector_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals");
    QVector v;
    for (const auto& e : j) {
        if (!e.is_string()) throw ParseError("rationals must be strings like \"p/q\"");
        v.push_back(parse_rat(e.get<std::string>()));
    }
    return v;
}

namespace {

Json vector_list_to_json(const std::vector<QVector>& vs) {
    Json arr = Json::array();
    for (const auto& v : vs) arr.push_back(rational_vector_to_json(v));
    return arr;
}

std::vector<QVector> vector_list_from_json(const Json& j, const std::string& field) {
    if (!j.is_array()) throw ParseError("field '" + field + "' must be an array");
    std::vector<QVector> vs;
    for (const auto& e : j) vs.push_back(rational_vector_from_json(e));
    return vs;
}

Json index_set_to_json(const std::vector<std::size_t>& s) {
    Json arr = Json::array();
    for (auto i : s) arr.push_back(i);
    return arr;
}

void reject_unknown(const Json& j, std::initializer_list<const char*> known,
                    const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k) ok = true;
        if (!ok) throw ParseError("unknown field '" + it.key() + "' in " + where);
    }
}

} // namespace

Json model_spec_to_json(const ModelSpec& spec) {
    Json j;
    j["dimension"] = spec.dimension;
    if (!spec.name.empty()) j["name"] = spec.name;
    if (spec.cone_rays) j["cone_rays"] = vector_list_to_json(*spec.cone_rays);
    if (spec.cone_inequalities)
        j["cone_inequalities"] = vector_list_to_json(*spec.cone_inequalities);
    if (spec.subspace) {
        Json sub;
        sub["ambient"] = spec.subspace->ambient;
        sub["basis"] = vector_list_to_json(spec.subspace->basis);
        j["subspace"] = sub;
    }
    return j;
}

ModelSpec model_spec_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("model file must be a JSON object");
    reject_unknown(j, {"dimension", "name", "cone_rays", "cone_inequalities", "subspace"},
                   "model file");
    ModelSpec spec;
    if (!j.contains("dimension") || !j["dimension"].is_number_unsigned())
        throw ParseError("field 'dimension' must be a nonnegative integer");
    spec.dimension = j["dimension"].get<std::size_t>();
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("field 'name' must be a string");
        spec.name = j["name"].get<std::string>();
    }
    if (j.contains("cone_rays")) spec.cone_rays = vector_list_from_json(j["cone_rays"], "cone_rays");
    if (j.contains("cone_inequalities"))
        spec.cone_inequalities = vector_list_from_json(j["cone_inequalities"], "cone_inequalities");
    if (j.contains("subspace")) {
        const Json& sub = j["subspace"];
        if (!sub.is_object()) throw ParseError("field 'subspace' must be an object");
        reject_unknown(sub, {"ambient", "basis"}, "subspace");
        if (!sub.contains("ambient") || !sub["ambient"].is_number_unsigned())
            throw ParseError("field 'subspace.ambient' must be a nonnegative integer");
        if (!sub.contains("basis")) throw ParseError("field 'subspace.basis' is required");
        SubspaceSpec s;
        s.ambient = sub["ambient"].get<std::size_t>();
        s.basis = vector_list_from_json(sub["basis"], "subspace.basis");
        spec.subspace = s;
    }
    const int described = int(spec.cone_rays.has_value()) +
                          int(spec.cone_inequalities.has_value()) + int(spec.subspace.has_value());
    if (described != 1)
        throw ParseError("model file needs exactly one of cone_rays, cone_inequalities, subspace");
    return spec;
}

Json model_to_json(const PreRieszModel& model) {
    Json j;
    j["name"] = model.name;
    j["dimension"] = model.dim;
    j["cone_rays"] = vector_list_to_json(model.cone.rays());
    j["cone_normals"] = vector_list_to_json(model.cone.normals());
    j["pointed"] = model.cone.pointed();
    j["generating"] = model.cone.generating();
    if (model.provenance) {
        Json prov;
        prov["ambient"] = model.provenance->ambient;
        std::vector<QVector> basis;
        for (std::size_t c = 0; c < model.provenance->evaluation.cols(); ++c)
            basis.push_back(model.provenance->evaluation.col(c));
        prov["basis"] = vector_list_to_json(basis);
        if (!model.provenance->coordinate_labels.empty())
            prov["coordinate_labels"] = model.provenance->coordinate_labels;
        j["subspace"] = prov;
    }
    return j;
}

Json system_to_json(const LinSystem& sys) {
    Json j;
    j["vars"] = sys.vars;
    Json rows = Json::array();
    for (const auto& row : sys.rows) {
        Json r;
        r["a"] = rational_vector_to_json(row.a);
        r["rel"] = row.rel == Rel::GE ? "ge" : "eq";
        r["b"] = rat_str(row.b);
        rows.push_back(r);
    }
    j["rows"] = rows;
    return j;
}

LinSystem system_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("rows"))
        throw ParseError("system needs 'vars' and 'rows'");
    LinSystem sys;
    sys.vars = j["vars"].get<std::size_t>();
    for (const auto& r : j["rows"]) {
        LinearConstraint row;
        row.a = rational_vector_from_json(r.at("a"));
        const std::string rel = r.at("rel").get<std::string>();
        if (rel == "ge") row.rel = Rel::GE;
        else if (rel == "eq") row.rel = Rel::EQ;
        else throw ParseError("unknown relation '" + rel + "'");
        row.b = parse_rat(r.at("b").get<std::string>());
        sys.rows.push_back(std::move(row));
    }
    return sys;
}

namespace {

Json farkas_to_json(const FarkasCertificate& c) {
    Json j;
    j["kind"] = "farkas";
    j["system"] = system_to_json(c.system);
    j["multipliers"] = rational_vector_to_json(c.multipliers);
    return j;
}

Json solution_to_json(const SolutionCertificate& c) {
    Json j;
    j["kind"] = "solution";
    j["system"] = system_to_json(c.system);
    j["point"] = rational_vector_to_json(c.point);
    return j;
}

struct WitnessJson {
    Json witness = Json();
    Json certificates = Json::array();
};

WitnessJson witness_to_json(const Witness& w) {
    WitnessJson out;
    if (std::holds_alternative<std::monostate>(w)) return out;
    if (const auto* r = std::get_if<RdpWitness>(&w)) {
        out.witness["ray_count"] = r->ray_count;
        out.witness["dim"] = r->dim;
        out.witness["quadruple_found"] = r->quadruple_found;
        if (r->quadruple) {
            Json q = Json::array();
            for (const auto& x : *r->quadruple) q.push_back(rational_vector_to_json(x));
            out.witness["quadruple"] = q;
        }
        if (r->interpolation_infeasible)
            out.certificates.push_back(farkas_to_json(*r->interpolation_infeasible));
        return out;
    }
    if (const auto* p = std::get_if<PervasivenessWitness>(&w)) {
        out.witness["b"] = rational_vector_to_json(p->b);
        out.witness["positive_support"] = index_set_to_json(p->positive_support);
        out.certificates.push_back(solution_to_json(p->sign_system));
        out.certificates.push_back(farkas_to_json(p->infeasibility));
        return out;
    }
    if (const auto* p = std::get_if<WeakPervasivenessWitness>(&w)) {
        out.witness["b1"] = rational_vector_to_json(p->b1);
        out.witness["b2"] = rational_vector_to_json(p->b2);
        out.witness["support1"] = index_set_to_json(p->support1);
        out.witness["support2"] = index_set_to_json(p->support2);
        out.witness["intersection"] = index_set_to_json(p->intersection);
        out.certificates.push_back(farkas_to_json(p->infeasibility));
        return out;
    }
    if (const auto* p = std::get_if<MeetTupleWitness>(&w)) {
        out.witness["realizers"] = vector_list_to_json(p->realizers);
        Json supports = Json::array();
        for (const auto& s : p->supports) supports.push_back(index_set_to_json(s));
        out.witness["supports"] = supports;
        out.witness["intersection"] = index_set_to_json(p->intersection);
        out.certificates.push_back(farkas_to_json(p->infeasibility));
        return out;
    }
    if (const auto* p = std::get_if<FordabilityWitness>(&w)) {
        out.witness["coordinate"] = p->coordinate;
        out.witness["failing_coordinates"] = index_set_to_json(p->failing_coordinates);
        if (p->ambient_row) out.witness["ambient_row"] = *p->ambient_row;
        out.certificates.push_back(farkas_to_json(p->infeasibility));
        return out;
    }
    if (const auto* p = std::get_if<FordabilityRealizers>(&w)) {
        out.witness["realizers_per_coordinate"] = vector_list_to_json(p->per_coordinate);
        return out;
    }
    if (const auto* p = std::get_if<LineWitness>(&w)) {
        out.witness["line"] = rational_vector_to_json(p->line);
        return out;
    }
    if (const auto* p = std::get_if<HyperplaneWitness>(&w)) {
        out.witness["hyperplane"] = rational_vector_to_json(p->normal);
        return out;
    }
    return out;
}

} // namespace

Json decision_to_json(const DecisionReport& report, bool with_timings) {
    Json j;
    j["property"] = property_name(report.property);
    j["verdict"] = report.verdict;
    WitnessJson w = witness_to_json(report.witness);
    j["witness"] = w.witness;
    j["certificate"] = w.certificates;
    j["lp_count"] = report.stats.lp_count;
    j["time_ms"] = with_timings ? report.stats.time_ms : 0;
    return j;
}

Json analysis_to_json(const AnalysisReport& report, bool with_timings) {
    Json j;
    Json model;
    model["input"] = model_spec_to_json(report.input);
    model["canonical"] = model_to_json(report.model);
    j["model"] = model;

    Json cover;
    cover["m"] = report.rep.m;
    Json f = Json::array();
    for (std::size_t i = 0; i < report.rep.m; ++i)
        f.push_back(rational_vector_to_json(report.rep.f.row(i)));
    cover["F"] = f;
    Json verified;
    verified["bipositive"] = report.cover.bipositive;
    verified["majorizing"] = report.cover.majorizing;
    verified["order_dense"] = report.cover.order_dense;
    if (report.cover.majorant) cover["majorant"] = rational_vector_to_json(*report.cover.majorant);
    cover["verified"] = verified;
    j["cover"] = cover;

    Json results = Json::array();
    for (const auto& r : report.results) results.push_back(decision_to_json(r, with_timings));
    j["results"] = results;
    j["suite_violations"] = report.suite_violations;
    return j;
}

std::string canonical_dump(const Json& j) {
    return j.dump(2) + "\n";
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ArgumentError("cannot open '" + tmp + "' for writing");
        out << contents;
        if (!out.flush()) throw ArgumentError("failed writing '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw ArgumentError("failed to move report into place at '" + path + "'");
}

} // namespace preriesz
