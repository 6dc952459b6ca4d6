#include "permspectra/intervals.hpp"

#include <stdexcept>

namespace permspectra {

namespace {

Int pow2(unsigned bits) { return Int(1) << bits; }

// Dyadic enclosure of x with denominator 2^bits.
RatInterval to_dyadic(const Rat& x, unsigned bits) {
    Int scaled = (numerator(x) * pow2(bits)) / denominator(x);  // floor for x >= 0
    if (x < 0) throw std::invalid_argument("to_dyadic: negative input");
    Rat lo(scaled, pow2(bits));
    Rat hi(scaled + 1, pow2(bits));
    if (lo == x) hi = x;
    return {lo, hi};
}

// Lower and upper bounds for atanh(u) = sum u^(2j+1)/(2j+1), 0 <= u <= 1/3.
Rat atanh_lower(const Rat& u, unsigned terms) {
    Rat sum(0), p = u;
    Rat u2 = u * u;
    for (unsigned j = 0; j < terms; ++j) {
        sum += p / Rat(2 * j + 1);
        p *= u2;
    }
    return sum;
}

Rat atanh_upper(const Rat& u, unsigned terms) {
    Rat sum = atanh_lower(u, terms);
    // Tail sum_{j>=terms} u^(2j+1)/(2j+1) <= u^(2*terms+1) / (1 - u^2).
    Rat p(1);
    for (unsigned k = 0; k < 2 * terms + 1; ++k) p *= u;
    return sum + p / (Rat(1) - u * u);
}

// Alternating series for exp(-r), 0 <= r <= 1.  Terms r^k/k! are
// non-increasing for k >= 1, so consecutive partial sums bracket the value.
RatInterval exp_neg_unit(const Rat& r, unsigned terms) {
    if (terms < 4) terms = 4;
    Rat term(1);
    Rat last_even(1), last_odd(0);
    Rat sum(0);
    for (unsigned k = 0; k <= terms; ++k) {
        if (k > 0) term = term * r / Rat(k);
        sum += (k % 2 == 0) ? term : -term;
        if (k % 2 == 0)
            last_even = sum;
        else
            last_odd = sum;
    }
    return {last_odd, last_even};
}

RatInterval mul_pos(const RatInterval& a, const RatInterval& b) {
    return {a.lo * b.lo, a.hi * b.hi};
}

RatInterval pow_pos(const RatInterval& a, const Int& m) {
    RatInterval out{Rat(1), Rat(1)};
    for (Int i = 0; i < m; ++i) out = mul_pos(out, a);
    return out;
}

}  // namespace

RatInterval sqrt_enclosure(const Rat& x, unsigned bits) {
    if (x < 0) throw std::invalid_argument("sqrt_enclosure: negative input");
    Int scaled = (numerator(x) * pow2(2 * bits)) / denominator(x);
    Int s = sqrt(scaled);  // floor square root
    Rat lo(s, pow2(bits));
    Rat hi(s + 1, pow2(bits));
    return {lo, hi};
}

RatInterval log_enclosure(const Rat& x, unsigned bits) {
    if (x < 1) throw std::invalid_argument("log_enclosure: input must be >= 1");
    const unsigned terms = 26;
    Rat m = x;
    long k = 0;
    while (m >= 2) {
        m /= 2;
        ++k;
    }
    // log 2 = 2 atanh(1/3)
    Rat third(1, 3);
    RatInterval log2{Rat(2) * atanh_lower(third, terms), Rat(2) * atanh_upper(third, terms)};
    // log m = 2 atanh((m-1)/(m+1)), m in [1,2)
    RatInterval u = to_dyadic((m - 1) / (m + 1), bits);
    RatInterval logm{Rat(2) * atanh_lower(u.lo, terms), Rat(2) * atanh_upper(u.hi, terms)};
    return log2 * Rat(k) + logm;
}

RatInterval exp_neg_enclosure(const Rat& x, unsigned terms) {
    if (x < 0) throw std::invalid_argument("exp_neg_enclosure: negative input");
    Int m = numerator(x) / denominator(x);  // floor
    Rat r = x - Rat(m);
    RatInterval rr = to_dyadic(r, 64);
    // exp(-r) is decreasing: outer hull from the two endpoints.
    RatInterval at_hi = exp_neg_unit(rr.hi, terms);
    RatInterval at_lo = exp_neg_unit(rr.lo, terms);
    RatInterval er{at_hi.lo, at_lo.hi};
    RatInterval e1 = exp_neg_unit(Rat(1), terms);
    return mul_pos(pow_pos(e1, m), er);
}

RatInterval exp_neg_enclosure(const RatInterval& x, unsigned terms) {
    RatInterval at_hi = exp_neg_enclosure(x.hi, terms);
    RatInterval at_lo = exp_neg_enclosure(x.lo, terms);
    return {at_hi.lo, at_lo.hi};
}

}  // namespace permspectra
