#include <doctest.h>

#include "sosclique/certificate.hpp"
#include "sosclique/constructions.hpp"

using namespace sosclique;

TEST_CASE("write then read restores the family") {
    CliqueFamily fano = fano_fixture();
    std::string doc = write_certificate(fano, "fano fixture", true);
    CHECK(doc.find("\"ell\": 6") != std::string::npos);
    CHECK(doc.find("\"k\": 2") != std::string::npos);
    CHECK(doc.back() == '\n');

    Certificate cert = read_certificate(doc);
    CHECK(cert.family.members == fano.members);
    CHECK(cert.family.k == 2);
    CHECK(cert.family.ell == 6);
    CHECK(cert.provenance == "fano fixture");
    CHECK(cert.exact);
}

TEST_CASE("serialization is byte-stable") {
    for (const CliqueFamily& f :
         {fano_fixture(), eight_column_fixture(), sunflower_clique(3, 11),
          CliqueFamily::make(2, 5, {})}) {
        std::string doc = write_certificate(f, "fixture", true);
        Certificate cert = read_certificate(doc);
        CHECK(write_certificate(cert) == doc);
    }
}

TEST_CASE("escaped provenance strings survive the round trip") {
    CliqueFamily f = sunflower_clique(2, 5);
    std::string prov = "line1\nwith \"quotes\" and \\slashes\\";
    std::string doc = write_certificate(f, prov, false);
    Certificate cert = read_certificate(doc);
    CHECK(cert.provenance == prov);
    CHECK_FALSE(cert.exact);
    CHECK(write_certificate(cert) == doc);
}

TEST_CASE("malformed documents raise parse errors with a location") {
    try {
        read_certificate("{\n  \"schema_version\": \"1\",\n  broken\n}");
        FAIL("expected a parse error");
    } catch (const CertificateError& e) {
        CHECK(e.kind() == CertificateError::Kind::Parse);
        CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
}

TEST_CASE("invariant violations raise validation errors naming the culprit") {
    std::string doc = write_certificate(fano_fixture(), "x", true);

    // an entry of magnitude 2
    std::string bad = doc;
    auto pos = bad.find("[0, 1, 1, -1, -1, 0, 0]");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 23, "[0, 2, 0, -1, -1, 0, 0]");
    try {
        read_certificate(bad);
        FAIL("expected a validation error");
    } catch (const CertificateError& e) {
        CHECK(e.kind() == CertificateError::Kind::Validation);
        CHECK(std::string(e.what()).find("signature 0") != std::string::npos);
    }

    CHECK_THROWS_AS(read_certificate("{}"), CertificateError);
    CHECK_THROWS_AS(read_certificate("[1,2,3]"), CertificateError);

    // non-integer ell
    std::string fractional = doc;
    auto ell_pos = fractional.find("\"ell\": 6");
    REQUIRE(ell_pos != std::string::npos);
    fractional.replace(ell_pos, 8, "\"ell\": 6.5");
    CHECK_THROWS_AS(read_certificate(fractional), CertificateError);

    // wrong row length
    std::string short_row = doc;
    pos = short_row.find("[0, 1, 1, -1, -1, 0, 0]");
    short_row.replace(pos, 23, "[0, 1, 1, -1, -1, 0]");
    CHECK_THROWS_AS(read_certificate(short_row), CertificateError);

    // duplicate signatures
    std::string dup = write_certificate(
        CliqueFamily::make(
            2, 4, {Signature::make(std::vector<int>{1, 1, -1, -1, 0}, 2)}),
        "x", true);
    auto row_pos = dup.find("[1, 1, -1, -1, 0]");
    REQUIRE(row_pos != std::string::npos);
    dup.replace(row_pos, 17, "[1, 1, -1, -1, 0],\n    [1, 1, -1, -1, 0]");
    CHECK_THROWS_AS(read_certificate(dup), CertificateError);
}

TEST_CASE("unsupported schema or family is rejected") {
    std::string doc = write_certificate(fano_fixture(), "x", true);
    std::string v2 = doc;
    v2.replace(v2.find("\"1\""), 3, "\"2\"");
    CHECK_THROWS_AS(read_certificate(v2), CertificateError);

    std::string fb = doc;
    fb.replace(fb.find("\"A\""), 3, "\"B\"");
    CHECK_THROWS_AS(read_certificate(fb), CertificateError);
}
