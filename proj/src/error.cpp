#include "windguide/error.hpp"

namespace windguide {

std::string_view to_string(ErrorClass c) noexcept {
    switch (c) {
        case ErrorClass::invalid_argument: return "invalid_argument";
        case ErrorClass::singular_state: return "singular_state";
        case ErrorClass::degenerate_horizon: return "degenerate_horizon";
        case ErrorClass::singular_tracking: return "singular_tracking";
        case ErrorClass::config: return "config";
        case ErrorClass::io: return "io";
    }
    return "unknown";
}

}  // namespace windguide
