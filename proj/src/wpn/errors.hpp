#pragma once

#include <stdexcept>

namespace wpn {

// Raised when an analytic bound is evaluated outside its validity region
// (e.g. the phase-side bounds require SNR * delta > 2). Kept distinct from
// plain domain_error so callers can tell "not applicable" from "bad input".
struct NotApplicableError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace wpn
