#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpos/verify.hpp"
#include "sha256.hpp"

#ifndef QPOS_VERSION
#define QPOS_VERSION "0.0.0"
#endif

namespace qpos {

namespace {

void put_u64_le(std::vector<std::uint8_t>& buf, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(std::uint8_t(v >> (8 * i)));
}

// RFC 3339 UTC timestamp; SOURCE_DATE_EPOCH (reproducible-builds convention)
// pins it for deterministic output.
std::string rfc3339_now() {
    std::time_t t = std::time(nullptr);
    if (const char* sde = std::getenv("SOURCE_DATE_EPOCH")) {
        char* end = nullptr;
        const long long v = std::strtoll(sde, &end, 10);
        if (end && *end == '\0') t = static_cast<std::time_t>(v);
    }
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string method_name(ScanMode mode) {
    return mode == ScanMode::streaming ? "prefix_stream/v1"
                                       : "prefix_materialized/v1";
}

} // namespace

std::string certificate_digest(unsigned k, std::uint64_t l,
                               std::uint64_t degree, const Int& min_prefix,
                               std::uint64_t argmin) {
    // Canonical bytes: LE64(k) | LE64(ell) | LE64(degree) | sign byte (0 for
    // >= 0, 1 for < 0) | LE64(#magnitude bytes) | magnitude, least
    // significant byte first | LE64(argmin).
    std::vector<std::uint8_t> buf;
    put_u64_le(buf, k);
    put_u64_le(buf, l);
    put_u64_le(buf, degree);
    buf.push_back(min_prefix < 0 ? 1 : 0);
    const std::size_t nbytes =
        min_prefix == 0 ? 0 : (mpz_sizeinbase(min_prefix.get_mpz_t(), 2) + 7) / 8;
    put_u64_le(buf, nbytes);
    if (nbytes > 0) {
        std::vector<std::uint8_t> mag(nbytes);
        std::size_t written = 0;
        mpz_export(mag.data(), &written, -1, 1, -1, 0, min_prefix.get_mpz_t());
        mag.resize(nbytes); // mpz_export never writes more than nbytes here
        buf.insert(buf.end(), mag.begin(), mag.end());
    }
    put_u64_le(buf, argmin);
    return detail::sha256_hex(buf);
}

Certificate make_certificate(const PrefixReport& report) {
    Certificate c;
    c.method = method_name(report.mode);
    c.k = report.k;
    c.ell = report.ell;
    c.degree = report.degree;
    c.min_prefix = report.min_prefix;
    c.argmin = report.argmin;
    c.verified = report.verified;
    c.digest = certificate_digest(c.k, c.ell, c.degree, c.min_prefix, c.argmin);
    c.tool_version = QPOS_VERSION;
    c.timestamp = rfc3339_now();
    return c;
}

void write_certificate(const Certificate& cert,
                       const std::filesystem::path& path) {
    nlohmann::ordered_json j;
    j["method"] = cert.method;
    j["k"] = cert.k;
    j["ell"] = cert.ell;
    j["degree"] = cert.degree;
    j["min_prefix"] = cert.min_prefix.get_str(); // may exceed 2^63; keep exact
    j["argmin"] = cert.argmin;
    j["verified"] = cert.verified;
    j["digest"] = cert.digest;
    j["tool_version"] = cert.tool_version;
    j["timestamp"] = cert.timestamp;

    // Write-then-rename so a concurrent reader sees the old file or the new
    // one, never a torn write.
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw certificate_error("write_certificate: cannot open " +
                                    tmp.string());
        out << j.dump(2) << '\n';
        if (!out.flush())
            throw certificate_error("write_certificate: write failed for " +
                                    tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

Certificate load_certificate(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw certificate_error("load_certificate: cannot open " +
                                path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw certificate_error("load_certificate: malformed JSON in " +
                                path.string() + ": " + e.what());
    }
    Certificate c;
    try {
        c.method = j.at("method").get<std::string>();
        c.k = j.at("k").get<unsigned>();
        c.ell = j.at("ell").get<std::uint64_t>();
        c.degree = j.at("degree").get<std::uint64_t>();
        c.min_prefix = Int(j.at("min_prefix").get<std::string>());
        c.argmin = j.at("argmin").get<std::uint64_t>();
        c.verified = j.at("verified").get<bool>();
        c.digest = j.at("digest").get<std::string>();
        c.tool_version = j.at("tool_version").get<std::string>();
        c.timestamp = j.at("timestamp").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw certificate_error("load_certificate: missing or mistyped field "
                                "in " + path.string() + ": " + e.what());
    } catch (const std::invalid_argument&) {
        throw certificate_error("load_certificate: min_prefix is not a valid "
                                "integer in " + path.string());
    }
    const std::string expect =
        certificate_digest(c.k, c.ell, c.degree, c.min_prefix, c.argmin);
    if (expect != c.digest)
        throw certificate_error(
            "load_certificate: digest mismatch in " + path.string() +
            " (file corrupted or tampered with)");
    if (c.verified != (c.min_prefix >= 0))
        throw certificate_error(
            "load_certificate: verified flag contradicts min_prefix in " +
            path.string());
    return c;
}

} // namespace qpos
