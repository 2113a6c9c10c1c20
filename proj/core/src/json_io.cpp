#include "mink/json_io.hpp"

#include <fstream>

namespace mink {

namespace {

json vector_to_json(const Vector& v) {
    json a = json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
}

Vector vector_from_json(const json& j) {
    if (!j.is_array()) throw InvariantViolation("expected a JSON array of coordinates");
    Vector v(j.size());
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number()) throw InvariantViolation("coordinate is not a number");
        v(i) = j[i].get<double>();
    }
    return v;
}

}  // namespace

json polytope_to_json(const SymmetricPolytope& K) {
    json j;
    j["dim"] = K.dim;
    j["normals"] = json::array();
    for (const auto& a : K.normals) j["normals"].push_back(vector_to_json(a));
    return j;
}

SymmetricPolytope polytope_from_json(const json& j) {
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw InvariantViolation("polytope JSON requires an integer \"dim\"");
    if (!j.contains("normals") || !j["normals"].is_array())
        throw InvariantViolation("polytope JSON requires a \"normals\" array");
    SymmetricPolytope K;
    K.dim = j["dim"].get<int>();
    for (const auto& row : j["normals"]) K.normals.push_back(vector_from_json(row));
    validate_polytope(K);
    return K;
}

json points_to_json(const std::vector<Vector>& pts, int dim) {
    json j;
    j["dim"] = dim;
    j["points"] = json::array();
    for (const auto& p : pts) j["points"].push_back(vector_to_json(p));
    return j;
}

std::vector<Vector> points_from_json(const json& j, int* dim) {
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw InvariantViolation("points JSON requires an integer \"dim\"");
    if (!j.contains("points") || !j["points"].is_array())
        throw InvariantViolation("points JSON requires a \"points\" array");
    int d = j["dim"].get<int>();
    if (dim) *dim = d;
    std::vector<Vector> pts;
    for (const auto& row : j["points"]) {
        Vector p = vector_from_json(row);
        if (static_cast<int>(p.size()) != d)
            throw InvariantViolation("point dimension does not match dim");
        pts.push_back(std::move(p));
    }
    return pts;
}

json lights_to_json(const LightConfiguration& cfg, int dim) {
    json j;
    j["dim"] = dim;
    j["lights"] = json::array();
    for (const auto& p : cfg.lights) j["lights"].push_back(vector_to_json(p));
    j["cost"] = cfg.cost;
    json assign = json::object();
    for (const auto& [v, l] : cfg.perVertexAssignment) assign[std::to_string(v)] = l;
    j["perVertexAssignment"] = assign;
    return j;
}

std::vector<Vector> lights_from_json(const json& j) {
    if (!j.contains("lights") || !j["lights"].is_array())
        throw InvariantViolation("lights JSON requires a \"lights\" array");
    std::vector<Vector> out;
    for (const auto& row : j["lights"]) out.push_back(vector_from_json(row));
    return out;
}

json certificate_to_json(const SymmetricPolytope& K, const CoveringCertificate& cert) {
    json j;
    j["body"] = polytope_to_json(K);
    j["homothets"] = json::array();
    for (const auto& h : cert.homothets)
        j["homothets"].push_back({{"lambda", h.lambda}, {"t", vector_to_json(h.t)}});
    switch (cert.verdict) {
        case CoverVerdict::Covered: j["verdict"] = "covered"; break;
        case CoverVerdict::Undetermined: j["verdict"] = "undetermined"; break;
        default: j["verdict"] = "unverified"; break;
    }
    return j;
}

std::pair<SymmetricPolytope, CoveringCertificate> certificate_from_json(const json& j) {
    if (!j.contains("body"))
        throw InvariantViolation("certificate JSON requires a \"body\" polytope");
    if (!j.contains("homothets") || !j["homothets"].is_array())
        throw InvariantViolation("certificate JSON requires a \"homothets\" array");
    SymmetricPolytope K = polytope_from_json(j["body"]);
    CoveringCertificate cert;
    for (const auto& h : j["homothets"]) {
        if (!h.contains("lambda") || !h.contains("t"))
            throw InvariantViolation("homothet requires \"lambda\" and \"t\"");
        cert.homothets.push_back({h["lambda"].get<double>(), vector_from_json(h["t"])});
    }
    if (j.contains("verdict")) {
        std::string v = j["verdict"].get<std::string>();
        if (v == "covered") cert.verdict = CoverVerdict::Covered;
        else if (v == "undetermined") cert.verdict = CoverVerdict::Undetermined;
    }
    validate_certificate(cert, K.dim);
    return {std::move(K), std::move(cert)};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvariantViolation("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InvariantViolation("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace mink
