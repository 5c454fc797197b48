#pragma once

// Minimal FIPS 180-4 SHA-256, enough to fingerprint certificates. Internal
// to the core library; not installed.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qpos::detail {

std::string sha256_hex(const std::uint8_t* data, std::size_t len);

inline std::string sha256_hex(const std::vector<std::uint8_t>& data) {
    return sha256_hex(data.data(), data.size());
}

} // namespace qpos::detail
