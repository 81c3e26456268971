#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace orbitrep {

/// A half-integer j stored as 2j. Projections may be negative;
/// magnitudes must not be.
class HalfInt {
public:
    HalfInt() : twice_(0) {}
    constexpr explicit HalfInt(int twice_value) : twice_(twice_value) {}
    static HalfInt from_twice(int twice_value) { return HalfInt(twice_value); }

    int twice() const { return twice_; }
    bool is_integer() const { return twice_ % 2 == 0; }
    double value() const { return twice_ / 2.0; }

    HalfInt operator+(const HalfInt& o) const { return HalfInt(twice_ + o.twice_); }
    HalfInt operator-(const HalfInt& o) const { return HalfInt(twice_ - o.twice_); }
    HalfInt operator-() const { return HalfInt(-twice_); }
    auto operator<=>(const HalfInt& o) const = default;

    std::string str() const;

private:
    int twice_;
};

inline HalfInt operator""_half(unsigned long long twice) { return HalfInt(static_cast<int>(twice)); }

/// |m| <= j with matching parity.
bool projection_valid(const HalfInt& j, const HalfInt& m);

/// Triangle rule |a-b| <= c <= a+b with integer perimeter.
bool triangle_ok(const HalfInt& a, const HalfInt& b, const HalfInt& c);

void require_magnitude(const HalfInt& j, const char* what);

}  // namespace orbitrep
