#include "expunc/scalar.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace expunc {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(__int128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view digits, std::string_view whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw std::invalid_argument("bad number: '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Scalar::Scalar(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("zero denominator");
    *this = from_wide(n, d);
}

Scalar Scalar::from_wide(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (!fits(n) || !fits(d)) throw std::overflow_error("rational overflow");
    Scalar s;
    s.num_ = static_cast<std::int64_t>(n);
    s.den_ = static_cast<std::int64_t>(d);
    return s;
}

Scalar Scalar::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::int64_t n = parse_int(text.substr(0, slash), text);
        std::int64_t d = parse_int(text.substr(slash + 1), text);
        return Scalar(n, d);
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) return Scalar(parse_int(text, text));

    bool neg = text[0] == '-';
    std::string_view ip = text.substr(neg ? 1 : 0, dot - (neg ? 1 : 0));
    std::string_view fp = text.substr(dot + 1);
    if (fp.empty() && ip.empty()) throw std::invalid_argument("bad number: '" + std::string(text) + "'");
    if (fp.size() > 17) throw std::invalid_argument("too many decimals: '" + std::string(text) + "'");
    __int128 whole = ip.empty() ? 0 : parse_int(ip, text);
    __int128 frac = fp.empty() ? 0 : parse_int(fp, text);
    if (whole < 0 || frac < 0) throw std::invalid_argument("bad number: '" + std::string(text) + "'");
    __int128 scale = 1;
    for (std::size_t k = 0; k < fp.size(); ++k) scale *= 10;
    __int128 n = whole * scale + frac;
    return from_wide(neg ? -n : n, scale);
}

std::string Scalar::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

Scalar& Scalar::operator+=(const Scalar& o) {
    if (den_ == o.den_) return *this = from_wide(static_cast<__int128>(num_) + o.num_, den_);
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return *this = from_wide(n, d);
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    return *this = from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.num_ == 0) throw std::domain_error("division by zero");
    return *this = from_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::int64_t Scalar::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Scalar::ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

Scalar midpoint(const Scalar& a, const Scalar& b) { return (a + b) / Scalar(2); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace expunc
