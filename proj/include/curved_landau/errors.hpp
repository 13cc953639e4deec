#pragma once

#include <stdexcept>
#include <string>

// Failure modes are distinguished by type so callers can react to (or test
// for) a specific one instead of parsing messages.

namespace curved_landau {

// Coordinate hit a singular locus (sin r = 0 or cos z = 0).
struct singularity_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Radial variant violates one of its admissibility inequalities.
struct admissibility_error : std::domain_error {
    admissibility_error(const std::string& what, std::string violated_constraint)
        : std::domain_error(what), violated(std::move(violated_constraint)) {}
    std::string violated;
};

// lambda = 0: the two-channel reconstruction divides by lambda.
struct degenerate_separation_error : std::domain_error {
    using std::domain_error::domain_error;
};

// |eps| < M: no real momentum parameter.
struct evanescent_error : std::domain_error {
    using std::domain_error::domain_error;
};

// z-variants 1 and 2 quantize lambda instead of p and are excluded from
// spectrum enumeration.
struct rejected_variant_error : std::domain_error {
    using std::domain_error::domain_error;
};

// z-variant 3 with p <= 0: N exceeded the tower.
struct out_of_tower_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Bad CLI / configuration input.
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace curved_landau
