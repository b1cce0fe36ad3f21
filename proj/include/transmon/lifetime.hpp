// lifetime.hpp — a coherence time that may be unbounded (zero rate).

#pragma once

#include <limits>

namespace transmon {

class Lifetime {
public:
    static Lifetime unbounded() { return Lifetime(std::numeric_limits<double>::infinity()); }

    /// seconds must be > 0; +inf is accepted as Unbounded.
    static Lifetime from_seconds(double seconds);

    /// rate in 1/s, >= 0; zero maps to Unbounded.
    static Lifetime from_rate(double rate_per_second);

    bool is_bounded() const { return seconds_ != std::numeric_limits<double>::infinity(); }
    double seconds() const { return seconds_; }
    double rate() const { return is_bounded() ? 1.0 / seconds_ : 0.0; }

    friend bool operator==(const Lifetime&, const Lifetime&) = default;

private:
    explicit Lifetime(double seconds) : seconds_(seconds) {}

    double seconds_;
};

}  // namespace transmon
