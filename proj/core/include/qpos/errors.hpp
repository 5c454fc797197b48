#pragma once

#include <stdexcept>

namespace qpos {

// An arithmetic-integrity violation: a condition that is mathematically
// impossible unless the implementation (or the hardware) is wrong, e.g. a
// Gaussian-binomial division leaving a remainder. Deliberately a logic_error:
// callers should not try to recover.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A persisted certificate failed validation (malformed JSON, missing fields,
// or a digest mismatch indicating corruption or tampering).
class certificate_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qpos
