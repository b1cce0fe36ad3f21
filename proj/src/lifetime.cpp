#include "transmon/lifetime.hpp"

#include "transmon/error.hpp"

#include <cmath>

namespace transmon {

Lifetime Lifetime::from_seconds(double seconds) {
    if (std::isnan(seconds) || !(seconds > 0.0)) {
        throw ValidationError("lifetime", "must be > 0 seconds or unbounded");
    }
    return Lifetime(seconds);
}

Lifetime Lifetime::from_rate(double rate_per_second) {
    if (std::isnan(rate_per_second) || rate_per_second < 0.0) {
        throw ValidationError("rate", "must be >= 0");
    }
    if (rate_per_second == 0.0) {
        return unbounded();
    }
    return Lifetime(1.0 / rate_per_second);
}

}  // namespace transmon
