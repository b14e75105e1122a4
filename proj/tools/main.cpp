#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sosclique/certificate.hpp"
#include "sosclique/cliquesearch.hpp"
#include "sosclique/constructions.hpp"
#include "sosclique/sos.hpp"

namespace {

using namespace sosclique;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

void print_family(const CliqueFamily& f) {
    for (const auto& m : f.members) {
        std::string row;
        for (auto e : m.entries()) {
            row += e == 1 ? '+' : e == -1 ? '-' : '0';
            row += ' ';
        }
        std::cout << "  " << row << "\n";
    }
}

void emit_certificate(const CliqueFamily& f, const std::string& provenance, bool exact,
                      const std::string& out_path) {
    std::string doc = write_certificate(f, provenance, exact);
    if (out_path.empty()) return;
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
    out << doc;
}

int run_verify(const std::string& path, bool strict) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return kExitUsage;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    Certificate cert;
    try {
        cert = read_certificate(buf.str());
    } catch (const CertificateError& e) {
        if (e.kind() == CertificateError::Kind::Parse) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
        std::cout << "INVALID certificate: " << e.what() << "\n";
        return kExitVerificationFailed;
    }

    auto mode = strict ? MembershipMode::Strict : MembershipMode::Graph;
    CliqueVerdict verdict = is_sos_clique(cert.family, mode);
    if (!verdict.valid) {
        std::cout << "INVALID SOS-clique, " << verdict.violations.size()
                  << " violating pair(s):\n";
        std::size_t shown = 0;
        for (const auto& v : verdict.violations) {
            if (++shown > 10) {
                std::cout << "  ...\n";
                break;
            }
            std::cout << "  members " << v.i << " and " << v.j << ": " << v.reason << "\n";
        }
        return kExitVerificationFailed;
    }
    bool sunflower = is_sunflower(cert.family);
    std::cout << "VALID SOS-clique, size " << cert.family.size() << ", k=" << cert.family.k
              << ", ell=" << cert.family.ell << ", sunflower=" << (sunflower ? "true" : "false")
              << "\n";
    return kExitOk;
}

int run_search_mu(int k, int ell, std::uint64_t budget, int workers, bool strict,
                  const std::string& out_path) {
    MaxCliqueOptions opt;
    opt.budget = budget;
    opt.workers = workers;
    MuResult res = strict ? mu_exact_strict(k, ell, opt) : mu_exact(k, ell, opt);
    const char* suffix = strict ? ", strict membership)" : ")";
    if (res.exact)
        std::cout << "mu = " << res.value << " (exact" << suffix << "\n";
    else
        std::cout << "mu >= " << res.value << " (budget exhausted" << suffix << "\n";
    if (!res.witness.members.empty()) {
        std::cout << "witness:\n";
        print_family(res.witness);
    }
    std::ostringstream prov;
    prov << "search k=" << k << " ell=" << ell;
    if (strict) prov << " strict";
    emit_certificate(res.witness, prov.str(), res.exact, out_path);
    return kExitOk;
}

int run_table_smalla(int max_ell, std::uint64_t budget, int workers) {
    std::cout << " ell  predicted  computed  exact\n";
    bool all_match = true;
    for (int ell = 1; ell <= max_ell; ++ell) {
        long long predicted = smalla_predicted(ell);
        MaxCliqueOptions opt;
        opt.budget = budget;
        opt.workers = workers;
        MuResult res = mu_exact(2, ell, opt);
        bool match = res.exact && res.value == predicted;
        all_match = all_match && match;
        std::cout << "  " << ell << "  " << predicted << "  " << res.value << "  "
                  << (res.exact ? "yes" : "no") << (match ? "" : "  MISMATCH") << "\n";
    }
    std::cout << (all_match ? "all rows match\n" : "MISMATCH detected\n");
    return all_match ? kExitOk : kExitVerificationFailed;
}

int run_bounds(int k, int ell, std::optional<int> s, std::optional<int> k1,
               std::optional<int> k2) {
    BoundsRecord r = bounds(k, ell, s, k1, k2);
    std::cout << "general_upper                " << r.general_upper << "\n";
    std::cout << "sunflower_value              " << r.sunflower_value << "\n";
    std::cout << "sunflower_lemma_upper        " << r.sunflower_lemma_upper << "\n";
    std::cout << "distinct_intersection_upper  " << r.distinct_intersection_upper << "\n";
    std::cout << "regime_threshold             " << r.regime_threshold << "\n";
    std::cout << "ekr                          " << r.ekr << "\n";
    if (r.rcw) std::cout << "rcw                          " << *r.rcw << "\n";
    if (r.bollobas) std::cout << "bollobas                     " << *r.bollobas << "\n";
    return kExitOk;
}

long long published_max_sos(Family f, int rank) {
    switch (f) {
        case Family::A: return (rank + 1) / 2;
        case Family::B:
        case Family::C: return rank;
        case Family::D: return 2 * (rank / 2);
        case Family::E: return rank == 6 ? 4 : rank == 7 ? 7 : 8;
        case Family::F: return 3;
        case Family::G: return 2;
    }
    return -1;
}

int run_maxsos(const std::string& family_str, int rank) {
    if (family_str.size() != 1) throw std::invalid_argument("family must be a single letter A-G");
    Family fam = family_from_char(family_str[0]);
    auto system = RootSystem::build(fam, rank);
    int value = max_sos_size(*system);
    std::cout << "max_sos_size(" << system->name() << ") = " << value << "\n";
    long long published = published_max_sos(fam, rank);
    std::cout << "published value: " << published << "\n";
    if (value != published)
        std::cout << "NOTE: computed value differs from the published table\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strongly orthogonal root sets, signature cliques, and certificates"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "Build a known clique family");
    construct->require_subcommand(1);
    int c_k = 2, c_ell = 7, c_q = 2;
    std::string c_out;

    auto* c_sun = construct->add_subcommand("sunflower", "Core-and-petals sunflower clique");
    c_sun->add_option("--k", c_k, "signs per side")->required();
    c_sun->add_option("--ell", c_ell, "ell (columns - 1)")->required();
    c_sun->add_option("--out", c_out, "certificate file");

    auto* c_plane = construct->add_subcommand("plane", "Projective-plane clique of order q");
    c_plane->add_option("--q", c_q, "plane order (prime power)")->required();
    c_plane->add_option("--out", c_out, "certificate file");

    auto* c_fano = construct->add_subcommand("fano", "The 6x7 Fano-difference fixture");
    c_fano->add_option("--out", c_out, "certificate file");

    auto* c_eight = construct->add_subcommand("eightcol", "The 6x8 fixture");
    c_eight->add_option("--out", c_out, "certificate file");

    // search mu
    auto* search = app.add_subcommand("search", "Exact clique search");
    search->require_subcommand(1);
    auto* s_mu = search->add_subcommand("mu", "Maximum SOS-clique size for (k, ell)");
    int s_k = 2, s_ell = 6, s_workers = 1;
    std::uint64_t s_budget = 100'000'000;
    bool s_strict = false;
    std::string s_out;
    s_mu->add_option("--k", s_k)->required();
    s_mu->add_option("--ell", s_ell)->required();
    s_mu->add_option("--budget", s_budget, "node-expansion limit");
    s_mu->add_option("--workers", s_workers, "heuristic threads");
    s_mu->add_flag("--strict-membership", s_strict, "require differences inside the family");
    s_mu->add_option("--out", s_out, "witness certificate file");

    // verify
    auto* verify = app.add_subcommand("verify", "Check a certificate file");
    std::string v_path;
    bool v_strict = false;
    verify->add_option("file", v_path, "certificate path")->required();
    verify->add_flag("--strict-membership", v_strict);

    // bounds
    auto* bcmd = app.add_subcommand("bounds", "Closed-form bounds for (k, ell)");
    int b_k = 2, b_ell = 6;
    int b_s = 0, b_k1 = 0, b_k2 = 0;
    bcmd->add_option("--k", b_k)->required();
    bcmd->add_option("--ell", b_ell)->required();
    auto* b_s_opt = bcmd->add_option("--s", b_s, "intersection size for the set-system bound (s < k)");
    auto* b_k1_opt = bcmd->add_option("--k1", b_k1);
    auto* b_k2_opt = bcmd->add_option("--k2", b_k2);

    // maxsos
    auto* mcmd = app.add_subcommand("maxsos", "Largest strongly orthogonal subset");
    std::string m_family = "A";
    int m_rank = 1;
    mcmd->add_option("--family", m_family, "A,B,C,D,E,F,G")->required();
    mcmd->add_option("--rank", m_rank)->required();

    // table smalla
    auto* table = app.add_subcommand("table", "Prediction-versus-search tables");
    table->require_subcommand(1);
    auto* t_smalla = table->add_subcommand("smalla", "mu_2 predicted vs computed");
    int t_max_ell = 9, t_workers = 1;
    std::uint64_t t_budget = 100'000'000;
    t_smalla->add_option("--max-ell", t_max_ell)->required();
    t_smalla->add_option("--budget", t_budget);
    t_smalla->add_option("--workers", t_workers);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (c_sun->parsed()) {
            CliqueFamily f = sunflower_clique(c_k, c_ell);
            std::cout << "sunflower clique: size " << f.size() << ", k=" << f.k
                      << ", ell=" << f.ell << "\n";
            print_family(f);
            emit_certificate(f, "sunflower k=" + std::to_string(c_k) + " ell=" + std::to_string(c_ell),
                             true, c_out);
            return kExitOk;
        }
        if (c_plane->parsed()) {
            CliqueFamily f = plane_clique(c_q);
            std::cout << "plane clique: size " << f.size() << ", k=" << f.k << ", ell=" << f.ell
                      << "\n";
            emit_certificate(f, "plane q=" + std::to_string(c_q), true, c_out);
            return kExitOk;
        }
        if (c_fano->parsed()) {
            CliqueFamily f = fano_fixture();
            std::cout << "fano fixture: size " << f.size() << ", k=" << f.k << ", ell=" << f.ell
                      << "\n";
            print_family(f);
            emit_certificate(f, "fano fixture", true, c_out);
            return kExitOk;
        }
        if (c_eight->parsed()) {
            CliqueFamily f = eight_column_fixture();
            std::cout << "eight-column fixture: size " << f.size() << ", k=" << f.k
                      << ", ell=" << f.ell << "\n";
            print_family(f);
            emit_certificate(f, "eight-column fixture", true, c_out);
            return kExitOk;
        }
        if (s_mu->parsed())
            return run_search_mu(s_k, s_ell, s_budget, s_workers, s_strict, s_out);
        if (verify->parsed()) return run_verify(v_path, v_strict);
        if (bcmd->parsed())
            return run_bounds(b_k, b_ell,
                              b_s_opt->count() ? std::optional<int>(b_s) : std::nullopt,
                              b_k1_opt->count() ? std::optional<int>(b_k1) : std::nullopt,
                              b_k2_opt->count() ? std::optional<int>(b_k2) : std::nullopt);
        if (mcmd->parsed()) return run_maxsos(m_family, m_rank);
        if (t_smalla->parsed()) return run_table_smalla(t_max_ell, t_budget, t_workers);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitUsage;
}
