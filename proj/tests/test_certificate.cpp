#include "doctest.h"

#include "packtotal/certificate.hpp"
#include "packtotal/constructions.hpp"
#include "packtotal/graph.hpp"
#include "packtotal/solver.hpp"

#include <string>

using namespace packtotal;

TEST_CASE("graph hash is the frozen FNV-1a of the canonical edge list") {
    // Reference digests computed independently from the serialized bytes.
    CHECK(graph_hash(generate_path(3)) == "e523ade95081968c");
    CHECK(graph_hash(generate_cycle(5)) == "72c315c59198c7d1");
    CHECK(graph_hash(generate_path(1)) == "988703f1476ae152");
    CHECK(graph_hash(generate_star(3)) == "57f4e7e0821ed77a");
    // sixteen lowercase hex digits, stable across calls
    std::string h = graph_hash(generate_cycle(6));
    CHECK(h.size() == 16);
    CHECK(h.find_first_not_of("0123456789abcdef") == std::string::npos);
    CHECK(h == graph_hash(generate_cycle(6)));
}

TEST_CASE("make_certificate validates its inputs") {
    Graph s2 = generate_star(2);
    PackingColoring c = color_star_total(2);
    Certificate cert = make_certificate(s2, Target::Total, c, 4, "construction");
    CHECK(cert.graph_hash == graph_hash(s2));
    CHECK(cert.k == 4);
    CHECK(cert.provenance == "construction");

    CHECK_THROWS_AS(make_certificate(s2, Target::Total, c, 4, "guesswork"),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_certificate(s2, Target::Total, c, 0, "search"),
                    std::invalid_argument);
}

TEST_CASE("certificates round-trip through JSON") {
    Graph c5 = generate_cycle(5);
    SolveReport report = chi_rho_total(c5);
    REQUIRE(report.status == ReportStatus::Solved);
    Certificate cert =
        make_certificate(c5, Target::Total, report.witness, report.value, "search");

    std::string json = to_json(cert);
    CHECK(json.find("\"packing-coloring-certificate\"") != std::string::npos);
    Certificate back = certificate_from_json(json);

    CHECK(back.graph.to_edge_list() == cert.graph.to_edge_list());
    CHECK(back.graph_hash == cert.graph_hash);
    CHECK(back.target == cert.target);
    CHECK(back.k == cert.k);
    CHECK(back.provenance == cert.provenance);
    CHECK(back.coloring.assignment == cert.coloring.assignment);

    // emit(parse(emit(x))) is byte-stable
    CHECK(to_json(back) == json);
}

TEST_CASE("verification accepts a genuine certificate") {
    Graph star = generate_star(4);
    Certificate cert =
        make_certificate(star, Target::Total, color_star_total(4), 6, "construction");
    VerificationResult r = verify_certificate(cert);
    CHECK(r.valid);
    CHECK(r.violations.empty());
    CHECK(r.message.find("6-color") != std::string::npos);
}

TEST_CASE("verification catches a tampered color") {
    Graph star = generate_star(3);
    Certificate cert =
        make_certificate(star, Target::Total, color_star_total(3), 5, "construction");
    cert.coloring.assignment[Element::vertex(1)] = 2; // clashes with the center
    VerificationResult r = verify_certificate(cert);
    CHECK_FALSE(r.valid);
    REQUIRE_FALSE(r.violations.empty());
    CHECK(r.violations[0].color == 2);
}

TEST_CASE("verification catches a color outside 1..k") {
    Graph star = generate_star(3);
    Certificate cert =
        make_certificate(star, Target::Total, color_star_total(3), 4, "construction");
    // the coloring honestly uses 5 colors; claiming k = 4 must fail
    VerificationResult r = verify_certificate(cert);
    CHECK_FALSE(r.valid);
    CHECK(r.message.find("outside 1..4") != std::string::npos);
}

TEST_CASE("verification catches a graph swap") {
    Graph star = generate_star(3);
    Certificate cert =
        make_certificate(star, Target::Total, color_star_total(3), 5, "construction");
    cert.graph_hash = graph_hash(generate_cycle(4));
    VerificationResult r = verify_certificate(cert);
    CHECK_FALSE(r.valid);
    CHECK(r.message.find("hash") != std::string::npos);
}

TEST_CASE("verification catches a missing element") {
    Graph star = generate_star(3);
    PackingColoring c = color_star_total(3);
    c.assignment.erase(Element::edge(0, 2));
    Certificate cert = make_certificate(star, Target::Total, c, 5, "construction");
    VerificationResult r = verify_certificate(cert);
    CHECK_FALSE(r.valid);
}

TEST_CASE("structural problems raise CertificateError") {
    CHECK_THROWS_AS(certificate_from_json("not json"), CertificateError);
    CHECK_THROWS_AS(certificate_from_json("{}"), CertificateError);
    CHECK_THROWS_AS(certificate_from_json("[1, 2, 3]"), CertificateError);

    Graph star = generate_star(2);
    Certificate cert =
        make_certificate(star, Target::Total, color_star_total(2), 4, "construction");
    std::string json = to_json(cert);

    auto broken = [&](const std::string& from, const std::string& to) {
        std::string copy = json;
        auto pos = copy.find(from);
        REQUIRE(pos != std::string::npos);
        copy.replace(pos, from.size(), to);
        return copy;
    };
    // unknown target name
    CHECK_THROWS_AS(certificate_from_json(broken("\"total\"", "\"everything\"")),
                    CertificateError);
    // malformed embedded edge list (star(2) serializes with header "3 2")
    CHECK_THROWS_AS(certificate_from_json(broken("3 2\\n", "3 nonsense\\n")),
                    CertificateError);
    // wrong format marker
    CHECK_THROWS_AS(
        certificate_from_json(broken("packing-coloring-certificate", "something-else")),
        CertificateError);
}

TEST_CASE("duplicate and foreign entries are structural errors") {
    Graph p3 = generate_path(3);
    Certificate cert =
        make_certificate(p3, Target::Total, color_path_total(3), 4, "construction");
    std::string json = to_json(cert);

    // duplicating a vertex row: [[0,c] ...] -> [[0,c],[0,c] ...]
    auto pos = json.find("\"vertices\"");
    REQUIRE(pos != std::string::npos);
    auto open = json.find('[', pos);
    auto close = json.find(']', open + 1);
    std::string row = json.substr(open + 1, close - open); // "[\n 0,\n c\n ]"
    std::string dup = json;
    dup.insert(close + 1, "," + row.substr(0, row.size() - 1) + "]");
    CHECK_THROWS_AS(certificate_from_json(dup), CertificateError);
}
