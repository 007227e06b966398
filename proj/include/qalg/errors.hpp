#pragma once

#include <stdexcept>
#include <string>

namespace qalg {

// Input document could not be read or understood. CLI exit code 2.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input was understood but violates a contract (non-admissible relations,
// non-nilpotent arrow ideal, ambiguous rewriting, hypothesis violations).
// CLI exit code 3.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact arithmetic left the representable 64-bit range. Loud failure is the
// contract: no result is ever silently wrong.
struct overflow_error : validation_error {
    using validation_error::validation_error;
};

// A consistency check that construction should make impossible has failed.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace qalg
