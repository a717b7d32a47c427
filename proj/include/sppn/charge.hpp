#pragma once

#include <cmath>

namespace sppn {

// Plate step index M = m + mu, split into the integer part m = floor(M) and
// the fractional part mu in [0, 1). The floor split applies to negative M as
// well (M = -0.5 gives m = -1, mu = 0.5).
class FractionalCharge {
public:
    FractionalCharge(double value) : value_(value) {
        double f = std::floor(value);
        double mu = value - f;
        if (mu >= 1.0) {  // rounding at values just below an integer
            f += 1.0;
            mu = 0.0;
        }
        integer_part_ = static_cast<long>(f);
        fractional_part_ = mu;
    }

    double value() const { return value_; }
    long integer_part() const { return integer_part_; }
    double fractional_part() const { return fractional_part_; }

    bool is_integer() const { return fractional_part_ == 0.0; }

private:
    double value_;
    long integer_part_;
    double fractional_part_;
};

}  // namespace sppn
