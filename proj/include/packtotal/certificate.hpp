#pragma once

#include "packtotal/coloring.hpp"
#include "packtotal/graph.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace packtotal {

/// Raised when certificate JSON is structurally unusable (bad JSON, missing
/// fields, unknown target, malformed embedded edge list, ...).
class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A self-contained, machine-checkable witness: the graph (embedded as an
/// edge-list document plus a content hash), the coloring target, a claimed
/// color count, and the full element coloring. `provenance` records whether
/// the coloring came from a closed-form construction or from search.
struct Certificate {
    Graph graph{0, {}};
    std::string graph_hash;
    Target target = Target::Graph;
    int k = 0;
    std::string provenance; // "construction" or "search"
    PackingColoring coloring;
};

/// Outcome of re-checking a certificate from scratch.
struct VerificationResult {
    bool valid = false;
    std::string message;             // human-readable reason when invalid
    std::vector<Violation> violations; // packing violations, if any
};

/// FNV-1a 64-bit hash of the canonical edge-list serialization, as 16 lowercase
/// hex digits.
std::string graph_hash(const Graph& g);

/// Bundles a coloring into a certificate (hash computed here). Throws
/// std::invalid_argument when provenance is neither "construction" nor
/// "search" or when k is not positive.
Certificate make_certificate(const Graph& g, Target target, const PackingColoring& coloring,
                             int k, const std::string& provenance);

/// Serializes to a stable, human-inspectable JSON document.
std::string to_json(const Certificate& cert);

/// Parses certificate JSON. Structural problems throw CertificateError;
/// semantic validity is a separate step (verify_certificate).
Certificate certificate_from_json(const std::string& text);

/// Re-derives everything the certificate claims: the embedded hash must match
/// the edge list, the coloring must cover exactly the target's elements with
/// colors in 1..k, and no packing violation may exist.
VerificationResult verify_certificate(const Certificate& cert);

} // namespace packtotal
