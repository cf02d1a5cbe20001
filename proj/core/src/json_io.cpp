#include "lvmb/json_io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace lvmb {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("not valid JSON: ") + e.what());
    }
}

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("missing field '") + key + "'");
    return j.at(key);
}

long require_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string(what) + " must be an integer");
    return j.get<long>();
}

Rational rational_from_json(const json& j, const char* what) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument(std::string(what) + " must be an integer or a \"p/q\" string");
}

json rational_to_json(const Rational& r) { return to_string(r); }

json rat_vector_to_json(const RatVector& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(rational_to_json(x));
    return arr;
}

GaussianRational gaussian_from_json(const json& j, const char* what) {
    if (j.is_object()) {
        GaussianRational z;
        if (j.contains("re")) z.re = rational_from_json(j.at("re"), "re");
        if (j.contains("im")) z.im = rational_from_json(j.at("im"), "im");
        return z;
    }
    if (j.is_number_integer() || j.is_string())
        return GaussianRational(rational_from_json(j, what), Rational(0));
    throw std::invalid_argument(std::string(what) +
                                " must be {\"re\":..., \"im\":...} or a rational");
}

json gaussian_to_json(const GaussianRational& z) {
    return json{{"re", to_string(z.re)}, {"im", to_string(z.im)}};
}

Fan fan_from_json_value(const json& j) {
    long n = require_int(require(j, "ambient_dim"), "ambient_dim");
    if (n < 0) throw std::invalid_argument("ambient_dim must be nonnegative");
    std::vector<IntVector> rays;
    for (const json& row : require(j, "rays")) {
        IntVector r;
        for (const json& x : row) r.push_back(require_int(x, "ray entry"));
        rays.push_back(std::move(r));
    }
    std::vector<ConeKey> cones;
    for (const json& row : require(j, "cones")) {
        ConeKey c;
        for (const json& x : row) c.push_back(static_cast<int>(require_int(x, "cone index")));
        cones.push_back(std::move(c));
    }
    try {
        return Fan::make(static_cast<int>(n), std::move(rays), std::move(cones));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("invalid fan: ") + e.what());
    }
}

json fan_to_json_value(const Fan& fan) {
    json rays = json::array();
    for (const IntVector& r : fan.rays()) rays.push_back(r);
    json cones = json::array();
    for (const ConeKey& c : fan.cones()) cones.push_back(c);
    return json{{"ambient_dim", fan.ambient_dim()}, {"rays", rays}, {"cones", cones}};
}

std::vector<GaussianVector> h_basis_from_json(const json& j, std::size_t m) {
    std::vector<GaussianVector> basis;
    if (!j.is_array()) throw std::invalid_argument("h_basis must be an array of vectors");
    for (const json& row : j) {
        GaussianVector v;
        for (const json& x : row) v.push_back(gaussian_from_json(x, "h_basis entry"));
        if (v.size() != m)
            throw std::invalid_argument("h_basis vector length differs from m");
        basis.push_back(std::move(v));
    }
    return basis;
}

json certificate_to_json(const LPCertificate& cert) {
    json j;
    switch (cert.status) {
        case LPStatus::Optimal: j["status"] = "optimal"; break;
        case LPStatus::Infeasible: j["status"] = "infeasible"; break;
        case LPStatus::Unbounded: j["status"] = "unbounded"; break;
    }
    j["objective_value"] = to_string(cert.objective_value);
    if (!cert.primal.empty()) j["primal"] = rat_vector_to_json(cert.primal);
    if (!cert.dual.empty()) j["dual"] = rat_vector_to_json(cert.dual);
    if (!cert.ray.empty()) j["ray"] = rat_vector_to_json(cert.ray);
    return j;
}

json matrix_to_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(rat_vector_to_json(m.row(i)));
    return rows;
}

json classification_to_json_value(const ClassificationReport& rep) {
    json j;
    j["verdict"] = to_string(rep.verdict);
    j["conditions"] = {
        {"injectivity", {{"ok", rep.lvmb.injectivity.ok}, {"detail", rep.lvmb.injectivity.detail}}},
        {"quotient_fan",
         {{"ok", rep.lvmb.quotient_fan.ok}, {"detail", rep.lvmb.quotient_fan.detail}}},
    };
    j["quotient"] = {
        {"m", rep.quotient.m()},
        {"n", rep.quotient.n()},
        {"p_h_basis", matrix_to_json(rep.quotient.p_h)},
        {"q", matrix_to_json(rep.quotient.q)},
        {"coordinates", "pivot-complement of the echelon basis of p(h)"},
    };
    j["ambient_nonsingular"] = rep.ambient_nonsingular;
    if (rep.quotient_fan) j["quotient_fan"] = fan_to_json_value(*rep.quotient_fan);
    if (rep.offsets) j["offsets"] = rat_vector_to_json(*rep.offsets);
    if (rep.polytope) {
        json p;
        p["dim"] = rep.polytope->dim;
        json normals = json::array();
        for (const auto& nv : rep.polytope->normals) normals.push_back(rat_vector_to_json(nv));
        p["normals"] = normals;
        p["offsets"] = rat_vector_to_json(rep.polytope->offsets);
        json verts = json::array();
        for (const auto& [cone, v] : vertices(*rep.polytope, *rep.quotient_fan)) {
            verts.push_back(json{{"cone", cone}, {"vertex", rat_vector_to_json(v)}});
        }
        p["vertices"] = verts;
        j["polytope"] = p;
    }
    if (rep.support_certificate) j["support_lp"] = certificate_to_json(*rep.support_certificate);
    if (rep.strict_infeasibility)
        j["strict_infeasibility"] = certificate_to_json(*rep.strict_infeasibility);
    return j;
}

}  // namespace

LVMBData parse_input_json(const std::string& text) {
    json j = parse_text(text);
    LVMBData data;
    if (j.contains("fan")) {
        Fan fan = fan_from_json_value(j.at("fan"));
        data.m = static_cast<std::size_t>(fan.ambient_dim());
        data.ambient_fan = std::move(fan);
    } else {
        long m = require_int(require(j, "m"), "m");
        if (m < 0) throw std::invalid_argument("m must be nonnegative");
        data.m = static_cast<std::size_t>(m);
        std::vector<SimplicialComplex::Face> maximal;
        for (const json& row : require(j, "maximal_faces")) {
            SimplicialComplex::Face f;
            for (const json& x : row) f.push_back(static_cast<int>(require_int(x, "face label")));
            maximal.push_back(std::move(f));
        }
        try {
            data.sigma = SimplicialComplex::from_maximal(static_cast<int>(m), maximal);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(std::string("invalid complex: ") + e.what());
        }
    }
    if (j.contains("h_basis")) data.h_basis = h_basis_from_json(j.at("h_basis"), data.m);
    return data;
}

std::string input_to_json(const LVMBData& data) {
    json j;
    if (data.sigma) {
        j["m"] = data.sigma->m();
        json faces = json::array();
        for (const auto& f : data.sigma->maximal_faces()) faces.push_back(f);
        j["maximal_faces"] = faces;
    } else if (data.ambient_fan) {
        j["fan"] = fan_to_json_value(*data.ambient_fan);
    }
    json basis = json::array();
    for (const auto& v : data.h_basis) {
        json row = json::array();
        for (const auto& z : v) row.push_back(gaussian_to_json(z));
        basis.push_back(row);
    }
    j["h_basis"] = basis;
    return j.dump(2) + "\n";
}

Fan parse_fan_json(const std::string& text) { return fan_from_json_value(parse_text(text)); }

std::string fan_to_json(const Fan& fan) { return fan_to_json_value(fan).dump(2) + "\n"; }

HPolytope parse_polytope_json(const std::string& text) {
    json j = parse_text(text);
    HPolytope p;
    long dim = require_int(require(j, "dim"), "dim");
    if (dim < 0) throw std::invalid_argument("dim must be nonnegative");
    p.dim = static_cast<std::size_t>(dim);
    for (const json& row : require(j, "normals")) {
        RatVector nv;
        for (const json& x : row) nv.push_back(rational_from_json(x, "normal entry"));
        if (nv.size() != p.dim) throw std::invalid_argument("normal has wrong dimension");
        p.normals.push_back(std::move(nv));
    }
    for (const json& x : require(j, "offsets"))
        p.offsets.push_back(rational_from_json(x, "offset"));
    if (p.offsets.size() != p.normals.size())
        throw std::invalid_argument("offsets and normals must have equal length");
    return p;
}

std::string polytope_to_json(const HPolytope& p, const std::map<ConeKey, RatVector>* vertex_map) {
    json j;
    j["dim"] = p.dim;
    json normals = json::array();
    for (const auto& nv : p.normals) normals.push_back(rat_vector_to_json(nv));
    j["normals"] = normals;
    j["offsets"] = rat_vector_to_json(p.offsets);
    if (vertex_map) {
        json verts = json::array();
        for (const auto& [cone, v] : *vertex_map)
            verts.push_back(json{{"cone", cone}, {"vertex", rat_vector_to_json(v)}});
        j["vertices"] = verts;
    }
    return j.dump(2) + "\n";
}

LPProblem parse_lp_json(const std::string& text) {
    json j = parse_text(text);
    LPProblem p;
    long nv = require_int(require(j, "num_vars"), "num_vars");
    if (nv < 0) throw std::invalid_argument("num_vars must be nonnegative");
    p.num_vars = static_cast<std::size_t>(nv);
    std::string sense = require(j, "sense").get<std::string>();
    if (sense == "maximize")
        p.sense = Sense::Maximize;
    else if (sense == "minimize")
        p.sense = Sense::Minimize;
    else
        throw std::invalid_argument("sense must be 'maximize' or 'minimize'");
    for (const json& x : require(j, "objective"))
        p.objective.push_back(rational_from_json(x, "objective entry"));
    if (p.objective.size() != p.num_vars)
        throw std::invalid_argument("objective length differs from num_vars");
    for (const json& row : require(j, "constraints")) {
        LPConstraint c;
        for (const json& x : require(row, "coeffs"))
            c.coeffs.push_back(rational_from_json(x, "constraint coefficient"));
        if (c.coeffs.size() != p.num_vars)
            throw std::invalid_argument("constraint width differs from num_vars");
        std::string rel = require(row, "rel").get<std::string>();
        if (rel == "=")
            c.rel = Relation::Eq;
        else if (rel == ">=")
            c.rel = Relation::Ge;
        else
            throw std::invalid_argument("rel must be '=' or '>='");
        c.rhs = rational_from_json(require(row, "rhs"), "rhs");
        p.constraints.push_back(std::move(c));
    }
    return p;
}

std::string lp_to_json(const LPProblem& p) {
    json j;
    j["num_vars"] = p.num_vars;
    j["sense"] = p.sense == Sense::Maximize ? "maximize" : "minimize";
    j["objective"] = rat_vector_to_json(p.objective);
    json rows = json::array();
    for (const auto& c : p.constraints) {
        rows.push_back(json{{"coeffs", rat_vector_to_json(c.coeffs)},
                            {"rel", c.rel == Relation::Eq ? "=" : ">="},
                            {"rhs", to_string(c.rhs)}});
    }
    j["constraints"] = rows;
    return j.dump(2) + "\n";
}

std::string classification_to_json(const ClassificationReport& rep, const ReportRendering& opts) {
    json j = classification_to_json_value(rep);
    if (opts.include_runtime) j["runtime_ms"] = opts.runtime_ms;
    return j.dump(2) + "\n";
}

std::string convexity_to_json(const ClassificationReport& rep, const ConvexityReport& harness,
                              const ReportRendering& opts) {
    json j;
    j["classification"] = classification_to_json_value(rep);
    json h;
    h["samples"] = harness.samples;
    h["seed"] = harness.seed;
    h["tol"] = harness.tol;
    h["max_membership_violation"] = harness.max_membership_violation;
    h["max_lift_residual"] = harness.max_lift_residual;
    h["membership_ok"] = harness.membership_ok;
    h["vertex_images_exact"] = harness.vertex_images_exact;
    h["normality_ok"] = harness.normality_ok;
    h["tightness_ok"] = harness.tightness_ok;
    if (!harness.failure.empty()) h["failure"] = harness.failure;
    json dirs = json::array();
    for (const auto& d : harness.directions) {
        json dj;
        dj["v"] = rat_vector_to_json(d.v);
        dj["qv"] = rat_vector_to_json(d.qv);
        dj["kernel_direction"] = d.kernel_direction;
        dj["exact_min"] = to_string(d.exact_min);
        dj["sampled_min"] = d.sampled_min;
        dj["sampled_spread"] = d.sampled_spread;
        dj["lp_tight_set"] = d.lp_tight_set;
        dj["predicted_cone"] = d.predicted_cone;
        dj["face_match"] = d.face_match;
        dj["min_ok"] = d.min_ok;
        dj["spread_ok"] = d.spread_ok;
        dirs.push_back(dj);
    }
    h["directions"] = dirs;
    h["pass"] = harness.all_ok();
    j["harness"] = h;
    if (opts.include_runtime) j["runtime_ms"] = opts.runtime_ms;
    return j.dump(2) + "\n";
}

}  // namespace lvmb
