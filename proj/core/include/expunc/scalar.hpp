#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace expunc {

// Exact rational number with 64-bit numerator and positive 64-bit denominator,
// always kept in lowest terms. Arithmetic goes through 128-bit intermediates
// and throws std::overflow_error when a result does not fit.
class Scalar {
public:
    constexpr Scalar() = default;
    constexpr Scalar(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    Scalar(std::int64_t n, std::int64_t d);

    // Accepts "7", "-3/4", "2.75" and "-.5"; exponent notation is rejected.
    static Scalar parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    // Largest integer not above the value.
    std::int64_t floor() const;
    std::int64_t ceil() const;

private:
    static Scalar from_wide(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

Scalar midpoint(const Scalar& a, const Scalar& b);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace expunc

template <>
struct std::hash<expunc::Scalar> {
    std::size_t operator()(const expunc::Scalar& s) const noexcept {
        return std::hash<std::int64_t>{}(s.num()) * 1000003u ^ std::hash<std::int64_t>{}(s.den());
    }
};
