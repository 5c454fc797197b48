// Command-line front end: coefficient dumps, positivity verification with
// persisted certificates, conjecture scans, and identity checks.
//
// Exit codes: 0 verified / no counterexample, 1 counterexample or failed
// identity, 2 inconclusive (prefix criterion did not certify), 3 usage or
// configuration error, 4 internal integrity failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpos/generating.hpp"
#include "qpos/identities.hpp"
#include "qpos/verify.hpp"

#ifndef QPOS_VERSION
#define QPOS_VERSION "0.0.0"
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;
constexpr int kExitIntegrity = 4;

// Relative output paths land under QPOS_OUT_DIR when it is set.
std::filesystem::path resolve_out(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("QPOS_OUT_DIR")) {
            if (*dir) return std::filesystem::path(dir) / p;
        }
    }
    return p;
}

void write_csv(const qpos::TruncSeries& s, const std::string& path) {
    const std::filesystem::path out = resolve_out(path);
    std::ofstream f(out);
    if (!f)
        throw std::invalid_argument("cannot open CSV output file " +
                                    out.string());
    f << "n,coefficient\n";
    for (std::size_t j = 0; j <= s.order(); ++j)
        f << j << ',' << s[j].get_str() << '\n';
    if (!f.flush())
        throw std::invalid_argument("failed writing CSV output file " +
                                    out.string());
}

void dump(const qpos::TruncSeries& s, const std::string& csv) {
    for (std::size_t j = 0; j <= s.order(); ++j)
        std::cout << s[j].get_str() << '\n';
    if (!csv.empty()) write_csv(s, csv);
}

int report_prefix(const qpos::PrefixReport& r, const std::string& cert_path) {
    std::cout << "k           " << r.k << '\n'
              << "engine      "
              << (r.mode == qpos::ScanMode::streaming ? "stream"
                                                      : "materialize")
              << '\n'
              << "ell         " << r.ell << '\n'
              << "degree      " << r.degree << '\n'
              << "min_prefix  " << r.min_prefix.get_str() << " (first at q^"
              << r.argmin << ")\n"
              << "verified    " << (r.verified ? "yes" : "no") << '\n'
              << "elapsed     " << r.elapsed_seconds << "s\n";
    if (!cert_path.empty()) {
        const std::filesystem::path out = resolve_out(cert_path);
        qpos::write_certificate(qpos::make_certificate(r), out);
        std::cout << "certificate " << out.string() << '\n';
    }
    if (r.verified) return kExitOk;
    std::cout << "note: the prefix criterion is sufficient, not necessary; "
                 "this result is inconclusive, not a refutation\n";
    return kExitInconclusive;
}

int report_scan(const std::vector<qpos::ConjectureReport>& reports) {
    bool found = false;
    for (const auto& r : reports) {
        std::cout << "conjecture  " << r.conjecture << '\n'
                  << "grid        " << r.grid << '\n'
                  << "order       " << r.order << '\n'
                  << "cells       " << r.cells << '\n';
        for (const auto& c : r.counterexamples) {
            std::cout << "counterexample: " << c.where << " coefficient of q^"
                      << c.exponent << " is " << c.coefficient.get_str()
                      << '\n';
            found = true;
        }
        std::cout << (r.status == qpos::ScanStatus::counterexample
                          ? "verdict     COUNTEREXAMPLE\n"
                          : "verdict     NO COUNTEREXAMPLE to this order\n");
    }
    return found ? kExitFinding : kExitOk;
}

int run_identities(std::size_t order) {
    bool all_ok = true;
    auto line = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "PASS " : "FAIL ") << what << '\n';
        all_ok = all_ok && ok;
    };
    for (unsigned k = 3; k <= 8; ++k) {
        const qpos::HeineInstance inst{qpos::q_pow(1), qpos::q_pow(1),
                                       qpos::q_pow(2 * k), qpos::q_pow(2), 2,
                                       order};
        line(qpos::heine_check(inst),
             "heine a=q b=q c=q^" + std::to_string(2 * k) + " t=q^2 base q^2");
    }
    {
        const qpos::RogersFineInstance inst{std::nullopt, qpos::q_pow(3),
                                            qpos::q_pow(1), 2, order};
        line(qpos::rogers_fine_check(inst),
             "rogers-fine alpha=0 beta=q^3 w=q base q^2");
    }
    for (unsigned k = 1; k <= 12; ++k) {
        if (order < 2 * static_cast<std::size_t>(k) + 1) break;
        line(qpos::mock_theta_gap_check(k, order),
             "gap q*omega - F_{" + std::to_string(k) + ",1}");
    }
    return all_ok ? kExitOk : kExitFinding;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series positivity toolkit", "qpos"};
    app.set_version_flag("--version", std::string(QPOS_VERSION));
    app.require_subcommand(1);

    unsigned k = 1, m = 1, n = 0, k_min = 1, k_max = 1, n_max = 0, cap = 0;
    std::size_t order = 500;
    std::string csv, cert, conjecture;
    bool use_stream = false, use_materialize = false;

    auto* coeffs = app.add_subcommand(
        "coeffs", "coefficients of F_{k,m} through q^N");
    coeffs->add_option("--k", k, "family index k >= 1")->required();
    coeffs->add_option("--m", m, "exponent parameter m >= 1")->required();
    coeffs->add_option("--N", order, "truncation order")->required();
    coeffs->add_option("--csv", csv, "also write n,coefficient rows here");

    auto* verify = app.add_subcommand(
        "verify", "prefix-sum positivity certificate for F_{k,1}");
    verify->add_option("--k", k, "family index k >= 3")->required();
    auto* sflag = verify->add_flag("--stream", use_stream,
                                   "streaming engine (default)");
    verify->add_flag("--materialize", use_materialize,
                     "exact in-memory engine")
        ->excludes(sflag);
    verify->add_option("--cert", cert, "write a JSON certificate here");
    verify->add_option("--cap", cap,
                       "materialization cap override (materialize only)");

    auto* scan = app.add_subcommand("scan", "conjecture counterexample scan");
    scan->add_option("--conjecture", conjecture,
                     "one of: strict, G, diff, lemma53")
        ->required()
        ->check(CLI::IsMember({"strict", "G", "diff", "lemma53"}));
    scan->add_option("--k-min", k_min, "lowest k (strict only, default 1)");
    scan->add_option("--k-max", k_max, "highest k");
    scan->add_option("--n-max", n_max, "highest n");
    scan->add_option("--m", m, "exponent parameter (strict only, default 1)");
    scan->add_option("--N", order, "truncation order (default 500)");

    std::size_t id_order = 400;
    auto* identities = app.add_subcommand(
        "identities", "classical-identity checks on pinned instances");
    identities->add_option("--N", id_order, "truncation order (default 400)");

    auto* omega_cmd =
        app.add_subcommand("omega", "coefficients of omega(q) through q^N");
    omega_cmd->add_option("--N", order, "truncation order")->required();
    omega_cmd->add_option("--csv", csv, "also write n,coefficient rows here");

    auto* ek_cmd =
        app.add_subcommand("ek", "coefficients of E_k(q) through q^N");
    ek_cmd->add_option("--k", k, "family index k >= 1")->required();
    ek_cmd->add_option("--N", order, "truncation order")->required();
    ek_cmd->add_option("--csv", csv, "also write n,coefficient rows here");

    auto* g_cmd =
        app.add_subcommand("g", "coefficients of G_{k,n}(q) through q^N");
    g_cmd->add_option("--k", k, "family index k >= 1")->required();
    g_cmd->add_option("--n", n, "partial-sum index n >= 0")->required();
    g_cmd->add_option("--N", order, "truncation order")->required();
    g_cmd->add_option("--csv", csv, "also write n,coefficient rows here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (coeffs->parsed()) {
            dump(qpos::f_def(k, m, order), csv);
            return kExitOk;
        }
        if (verify->parsed()) {
            const qpos::PrefixReport r =
                use_materialize
                    ? qpos::verify_prefix_materialized(
                          k, cap ? cap : qpos::kDefaultMaterializeCap)
                    : qpos::verify_prefix_stream(k);
            return report_prefix(r, cert);
        }
        if (scan->parsed()) {
            std::vector<qpos::ConjectureReport> reports;
            if (conjecture == "strict") {
                if (!scan->count("--k-max"))
                    throw std::invalid_argument("scan strict: --k-max required");
                if (k_min < 1 || k_min > k_max)
                    throw std::invalid_argument(
                        "scan strict: need 1 <= k-min <= k-max");
                for (unsigned kk = k_min; kk <= k_max; ++kk)
                    reports.push_back(qpos::strict_positivity(kk, m, order));
            } else if (conjecture == "G") {
                if (!scan->count("--k-max") || !scan->count("--n-max"))
                    throw std::invalid_argument(
                        "scan G: --k-max and --n-max required");
                reports.push_back(qpos::conj_G(k_max, n_max, order));
            } else if (conjecture == "diff") {
                if (!scan->count("--k-max") || !scan->count("--n-max"))
                    throw std::invalid_argument(
                        "scan diff: --k-max and --n-max required");
                reports.push_back(qpos::conj_diff(k_max, n_max, order));
            } else { // lemma53
                if (!scan->count("--n-max"))
                    throw std::invalid_argument("scan lemma53: --n-max required");
                reports.push_back(qpos::lemma53_check(n_max, order));
            }
            return report_scan(reports);
        }
        if (identities->parsed()) return run_identities(id_order);
        if (omega_cmd->parsed()) {
            dump(qpos::omega(order), csv);
            return kExitOk;
        }
        if (ek_cmd->parsed()) {
            dump(qpos::e_k(k, order), csv);
            return kExitOk;
        }
        if (g_cmd->parsed()) {
            dump(qpos::g_poch(k, n, order), csv);
            return kExitOk;
        }
    } catch (const qpos::internal_error& e) {
        std::cerr << "internal integrity failure: " << e.what() << '\n';
        return kExitIntegrity;
    } catch (const qpos::certificate_error& e) {
        std::cerr << "certificate error: " << e.what() << '\n';
        return kExitIntegrity;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "unexpected failure: " << e.what() << '\n';
        return kExitIntegrity;
    }
    return kExitUsage;
}
