#include "sosclique/certificate.hpp"

#include <sstream>

#include <json.hpp>

namespace sosclique {

namespace {

void append_json_string(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if ((unsigned char)c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

}  // namespace

std::string write_certificate(const CliqueFamily& family, const std::string& provenance,
                              bool exact) {
    Certificate cert;
    cert.family = family;
    cert.provenance = provenance;
    cert.exact = exact;
    return write_certificate(cert);
}

std::string write_certificate(const Certificate& cert) {
    std::string out;
    out += "{\n";
    out += "  \"schema_version\": ";
    append_json_string(out, cert.schema_version);
    out += ",\n  \"family_type\": ";
    append_json_string(out, cert.family_type);
    out += ",\n  \"ell\": " + std::to_string(cert.family.ell);
    out += ",\n  \"k\": " + std::to_string(cert.family.k);
    out += ",\n  \"signatures\": [";
    for (std::size_t i = 0; i < cert.family.members.size(); ++i) {
        out += i ? ",\n    [" : "\n    [";
        const auto& e = cert.family.members[i].entries();
        for (std::size_t c = 0; c < e.size(); ++c) {
            if (c) out += ", ";
            out += std::to_string(int(e[c]));
        }
        out += "]";
    }
    out += cert.family.members.empty() ? "],\n" : "\n  ],\n";
    out += "  \"provenance\": ";
    append_json_string(out, cert.provenance);
    out += ",\n  \"exact\": ";
    out += cert.exact ? "true" : "false";
    out += "\n}\n";
    return out;
}

namespace {

[[noreturn]] void parse_fail(const std::string& bytes, std::size_t byte_pos,
                             const std::string& what) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte_pos && i < bytes.size(); ++i) {
        if (bytes[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    std::ostringstream os;
    os << "parse error at line " << line << ", column " << col << ": " << what;
    throw CertificateError(CertificateError::Kind::Parse, os.str());
}

[[noreturn]] void validation_fail(const std::string& what) {
    throw CertificateError(CertificateError::Kind::Validation, what);
}

}  // namespace

Certificate read_certificate(const std::string& bytes) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        parse_fail(bytes, e.byte > 0 ? e.byte - 1 : 0, e.what());
    }
    if (!doc.is_object()) validation_fail("document is not a JSON object");

    auto need = [&](const char* key) -> const nlohmann::json& {
        auto it = doc.find(key);
        if (it == doc.end()) validation_fail(std::string("missing field '") + key + "'");
        return *it;
    };

    Certificate cert;
    const auto& ver = need("schema_version");
    if (!ver.is_string()) validation_fail("schema_version must be a string");
    cert.schema_version = ver.get<std::string>();
    if (cert.schema_version != "1")
        validation_fail("unsupported schema_version '" + cert.schema_version + "'");

    const auto& fam = need("family_type");
    if (!fam.is_string() || fam.get<std::string>() != "A")
        validation_fail("family_type must be \"A\"");
    cert.family_type = "A";

    const auto& ell_j = need("ell");
    const auto& k_j = need("k");
    if (!ell_j.is_number_integer() || !k_j.is_number_integer())
        validation_fail("ell and k must be integers");
    const int ell = ell_j.get<int>();
    const int k = k_j.get<int>();
    if (k < 1 || ell < 1) validation_fail("ell and k must be positive");

    const auto& sigs = need("signatures");
    if (!sigs.is_array()) validation_fail("signatures must be an array");
    std::vector<Signature> members;
    members.reserve(sigs.size());
    for (std::size_t i = 0; i < sigs.size(); ++i) {
        const auto& row = sigs[i];
        if (!row.is_array() || row.size() != std::size_t(ell + 1))
            validation_fail("signature " + std::to_string(i) + " must be an array of length ell+1 = " +
                            std::to_string(ell + 1));
        std::vector<int> entries;
        entries.reserve(row.size());
        for (const auto& v : row) {
            if (!v.is_number_integer())
                validation_fail("signature " + std::to_string(i) + " holds a non-integer entry");
            entries.push_back(v.get<int>());
        }
        if (!is_valid_signature(entries, k))
            validation_fail("signature " + std::to_string(i) +
                            " is not a valid signature for k = " + std::to_string(k));
        members.push_back(Signature::make(entries, k));
        for (std::size_t j = 0; j + 1 < members.size(); ++j)
            if (members[j] == members.back())
                validation_fail("signatures " + std::to_string(j) + " and " + std::to_string(i) +
                                " coincide");
    }
    cert.family = CliqueFamily::make(k, ell, std::move(members));

    const auto& prov = need("provenance");
    if (!prov.is_string()) validation_fail("provenance must be a string");
    cert.provenance = prov.get<std::string>();

    const auto& exact = need("exact");
    if (!exact.is_boolean()) validation_fail("exact must be a boolean");
    cert.exact = exact.get<bool>();

    return cert;
}

}  // namespace sosclique
