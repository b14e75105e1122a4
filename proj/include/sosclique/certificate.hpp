#pragma once

#include <stdexcept>
#include <string>

#include "sosclique/cliquesearch.hpp"

namespace sosclique {

// Canonical JSON certificate for a signature family.  Keys appear in a fixed
// order (schema_version, family_type, ell, k, signatures, provenance,
// exact), all numbers are integers, and the document ends with a newline, so
// serialization is byte-reproducible.
struct Certificate {
    std::string schema_version = "1";
    std::string family_type = "A";
    CliqueFamily family;
    std::string provenance;
    bool exact = true;
};

class CertificateError : public std::runtime_error {
public:
    enum class Kind { Parse, Validation };
    CertificateError(Kind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

std::string write_certificate(const CliqueFamily& family, const std::string& provenance,
                              bool exact);
std::string write_certificate(const Certificate& cert);

// Parses and validates; the returned family satisfies every invariant.
// Syntax problems raise Kind::Parse (with line/column), invariant problems
// Kind::Validation (naming the offending field or signature index).
Certificate read_certificate(const std::string& bytes);

}  // namespace sosclique
