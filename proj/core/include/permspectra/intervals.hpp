#pragma once

#include "permspectra/rational.hpp"

namespace permspectra {

/// Closed rational interval [lo, hi] enclosing a real value.
struct RatInterval {
    Rat lo;
    Rat hi;

    static RatInterval point(const Rat& x) { return {x, x}; }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RatInterval operator*(const Rat& c) const {
        return c >= 0 ? RatInterval{lo * c, hi * c} : RatInterval{hi * c, lo * c};
    }
};

/// Enclosure of sqrt(x) for x >= 0, to ~2^-bits absolute error.
RatInterval sqrt_enclosure(const Rat& x, unsigned bits = 64);

/// Enclosure of log(x) for x >= 1.
RatInterval log_enclosure(const Rat& x, unsigned bits = 64);

/// Enclosure of exp(-x) for x >= 0.
RatInterval exp_neg_enclosure(const Rat& x, unsigned terms = 30);
RatInterval exp_neg_enclosure(const RatInterval& x, unsigned terms = 30);

}  // namespace permspectra
