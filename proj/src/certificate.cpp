#include "packtotal/certificate.hpp"

#include "packtotal/distance.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <utility>

namespace packtotal {

namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;
constexpr const char* kFormatName = "packing-coloring-certificate";

} // namespace

std::string graph_hash(const Graph& g) {
    const std::string bytes = g.to_edge_list();
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : bytes) {
        h ^= static_cast<std::uint64_t>(ch);
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << std::nouppercase;
    out.width(16);
    out.fill('0');
    out << h;
    return out.str();
}

Certificate make_certificate(const Graph& g, Target target, const PackingColoring& coloring,
                             int k, const std::string& provenance) {
    if (provenance != "construction" && provenance != "search")
        throw std::invalid_argument("certificate provenance must be 'construction' or 'search'");
    if (k < 1) throw std::invalid_argument("certificate k must be positive");
    Certificate cert;
    cert.graph = g;
    cert.graph_hash = graph_hash(g);
    cert.target = target;
    cert.k = k;
    cert.provenance = provenance;
    cert.coloring = coloring;
    cert.coloring.target = target;
    return cert;
}

std::string to_json(const Certificate& cert) {
    json vertices = json::array();
    json edges = json::array();
    // Vertices in index order, edges in canonical (sorted-pair) order; absent
    // kinds stay as empty arrays so the document shape is target-independent.
    std::vector<std::pair<Element, int>> items(cert.coloring.assignment.begin(),
                                               cert.coloring.assignment.end());
    for (const auto& [el, color] : items) {
        if (el.kind == Element::Kind::Vertex)
            vertices.push_back(json::array({el.u, color}));
        else
            edges.push_back(json::array({el.u, el.v, color}));
    }
    json doc = {
        {"format", kFormatName},
        {"version", kFormatVersion},
        {"graph", {{"edge_list", cert.graph.to_edge_list()}, {"hash", cert.graph_hash}}},
        {"target", target_name(cert.target)},
        {"k", cert.k},
        {"provenance", cert.provenance},
        {"colors", {{"vertices", vertices}, {"edges", edges}}},
    };
    return doc.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw CertificateError(std::string("certificate is not valid JSON: ") + err.what());
    }
    try {
        if (doc.at("format").get<std::string>() != kFormatName)
            throw CertificateError("unknown certificate format");
        if (doc.at("version").get<int>() != kFormatVersion)
            throw CertificateError("unsupported certificate version");

        Certificate cert;
        try {
            cert.graph = parse_edge_list(doc.at("graph").at("edge_list").get<std::string>());
        } catch (const ParseError& err) {
            throw CertificateError(std::string("embedded edge list is malformed: ") + err.what());
        }
        cert.graph_hash = doc.at("graph").at("hash").get<std::string>();
        try {
            cert.target = target_from_name(doc.at("target").get<std::string>());
        } catch (const std::invalid_argument& err) {
            throw CertificateError(err.what());
        }
        cert.k = doc.at("k").get<int>();
        cert.provenance = doc.at("provenance").get<std::string>();

        cert.coloring.target = cert.target;
        for (const auto& entry : doc.at("colors").at("vertices")) {
            if (!entry.is_array() || entry.size() != 2)
                throw CertificateError("vertex color entries must be [vertex, color] pairs");
            Element el = Element::vertex(entry.at(0).get<int>());
            if (cert.coloring.assignment.count(el))
                throw CertificateError("duplicate vertex color entry for " + el.to_string());
            cert.coloring.assignment[el] = entry.at(1).get<int>();
        }
        for (const auto& entry : doc.at("colors").at("edges")) {
            if (!entry.is_array() || entry.size() != 3)
                throw CertificateError("edge color entries must be [u, v, color] triples");
            const int u = entry.at(0).get<int>();
            const int v = entry.at(1).get<int>();
            if (u == v) throw CertificateError("edge color entry has equal endpoints");
            Element el = Element::edge(u, v);
            if (cert.coloring.assignment.count(el))
                throw CertificateError("duplicate edge color entry for " + el.to_string());
            cert.coloring.assignment[el] = entry.at(2).get<int>();
        }
        return cert;
    } catch (const json::exception& err) {
        throw CertificateError(std::string("certificate is missing required fields: ") +
                               err.what());
    }
}

VerificationResult verify_certificate(const Certificate& cert) {
    VerificationResult result;
    const std::string recomputed = graph_hash(cert.graph);
    if (recomputed != cert.graph_hash) {
        result.message = "graph hash mismatch: document says " + cert.graph_hash +
                         ", edge list hashes to " + recomputed;
        return result;
    }
    if (cert.k < 1) {
        result.message = "claimed color count must be positive";
        return result;
    }
    for (const auto& [el, color] : cert.coloring.assignment) {
        if (color < 1 || color > cert.k) {
            result.message = "element " + el.to_string() + " has color " +
                             std::to_string(color) + " outside 1.." + std::to_string(cert.k);
            return result;
        }
    }
    const DistanceMatrix d = all_pairs_distances(cert.graph);
    try {
        result.violations = validate_packing(cert.graph, d, cert.coloring);
    } catch (const std::invalid_argument& err) {
        result.message = err.what(); // wrong element set for the target
        return result;
    }
    if (!result.violations.empty()) {
        result.message = std::to_string(result.violations.size()) +
                         " packing violation(s), first: " + result.violations.front().to_string();
        return result;
    }
    result.valid = true;
    result.message = "certificate verifies: " + std::to_string(cert.k) +
                     "-color packing coloring of target '" + target_name(cert.target) + "'";
    return result;
}

} // namespace packtotal
