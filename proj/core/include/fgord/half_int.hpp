#pragma once

#include <cstdint>
#include <string>

namespace fgord {

// Exact half-integer, stored as twice its value. All weight functions in
// this library take values in (1/2)Z, so this is the only numeric type
// needed; there is no floating point anywhere.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr explicit HalfInt(std::int64_t doubled) : doubled_(doubled) {}

    static constexpr HalfInt whole(std::int64_t n) { return HalfInt(2 * n); }
    static constexpr HalfInt half() { return HalfInt(1); }

    constexpr std::int64_t doubled() const { return doubled_; }
    constexpr bool is_whole() const { return doubled_ % 2 == 0; }
    constexpr bool is_zero() const { return doubled_ == 0; }
    constexpr bool is_positive() const { return doubled_ > 0; }
    constexpr bool is_negative() const { return doubled_ < 0; }
    constexpr int sign() const { return doubled_ > 0 ? 1 : doubled_ < 0 ? -1 : 0; }

    constexpr HalfInt operator-() const { return HalfInt(-doubled_); }
    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(doubled_ + o.doubled_); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(doubled_ - o.doubled_); }
    constexpr HalfInt& operator+=(HalfInt o) { doubled_ += o.doubled_; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { doubled_ -= o.doubled_; return *this; }

    constexpr HalfInt abs() const { return doubled_ < 0 ? HalfInt(-doubled_) : *this; }

    constexpr auto operator<=>(const HalfInt&) const = default;

    // "3", "-2", "1/2", "-3/2"
    std::string str() const {
        if (is_whole()) return std::to_string(doubled_ / 2);
        return std::to_string(doubled_) + "/2";
    }

private:
    std::int64_t doubled_ = 0;
};

} // namespace fgord
