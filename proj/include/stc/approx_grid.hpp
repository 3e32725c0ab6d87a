#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stc {

struct Rational {
    std::int64_t num = 0, den = 1;

    // Accepts "3", "0.25", "1/8".
    static Rational parse(const std::string& text);
    Rational reduced() const;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Rounding targets {0} and (1+delta)^i up to (1+eps)k, as integers scaled by a common denominator.
// delta = eps / (2h). Index 0 is the value 0; index j >= 1 is (1+delta)^(j-1).
class RoundingGrid {
public:
    using Int = boost::multiprecision::cpp_int;

    RoundingGrid(Rational eps, int height, std::int64_t k);

    std::size_t size() const { return values_.size(); }
    const Int& scaled(std::size_t index) const { return values_[index]; }
    const Int& scale() const { return scale_; }
    Rational delta() const { return delta_; }
    Rational eps() const { return eps_; }
    std::int64_t k() const { return k_; }

    // Smallest index whose value is >= x / scale, or -1 when x exceeds the largest grid value.
    long round_up(const Int& x) const;
    // ceil of the value at index.
    std::int64_t ceil_value(std::size_t index) const;
    // value(index) <= (1+delta)^h * c, exactly.
    bool within_factor(std::size_t index, int h, std::int64_t c) const;

private:
    Rational eps_, delta_;
    std::int64_t k_;
    Int scale_;
    std::vector<Int> values_;
};

} // namespace stc
