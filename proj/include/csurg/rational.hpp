#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "csurg/errors.hpp"

namespace csurg {

/// Expression templates off: values behave like plain integers under auto and ?:.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Floor division for arbitrary-precision integers (cpp_int truncates).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Non-negative remainder matching floor_div for b > 0.
inline BigInt floor_mod(const BigInt& a, const BigInt& b) {
    BigInt r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) r += b;
    return r;
}

inline std::int64_t to_i64(const BigInt& v) {
    if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN))
        throw DomainError("integer " + v.str() + " does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

/// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}

    template <std::integral I>
    Rational(I n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)

    Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)

    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw DomainError("rational with zero denominator");
        normalize();
    }

    template <std::integral I, std::integral J>
    Rational(I n, J d) : Rational(BigInt(n), BigInt(d)) {}

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    bool is_zero() const noexcept { return num_ == 0; }
    int sign() const noexcept { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    BigInt floor() const { return floor_div(num_, den_); }
    BigInt ceil() const { return -floor_div(-num_, den_); }

    Rational abs() const { return Rational(num_ < 0 ? BigInt(-num_) : num_, den_, raw_tag{}); }

    Rational reciprocal() const {
        if (num_ == 0) throw DomainError("reciprocal of zero");
        return Rational(den_, num_);
    }

    Rational operator-() const { return Rational(-num_, den_, raw_tag{}); }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) { return *this *= o.reciprocal(); }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const BigInt lhs = a.num_ * b.den_;
        const BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "p/q", or "p" when q = 1.
    std::string str() const { return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str(); }

    /// Accepts "[+-]digits" or "[+-]digits/digits"; rejects a zero denominator.
    static Rational parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    struct raw_tag {};
    Rational(BigInt n, BigInt d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

namespace detail {
inline bool parse_digits(std::string_view s, BigInt& out) {
    if (s.empty()) return false;
    out = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
        out = out * 10 + (c - '0');
    }
    return true;
}
}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    BigInt n;
    BigInt d = 1;
    const bool ok = slash == std::string_view::npos
                        ? detail::parse_digits(s, n)
                        : detail::parse_digits(s.substr(0, slash), n) &&
                              detail::parse_digits(s.substr(slash + 1), d);
    if (!ok) throw DomainError("malformed rational '" + std::string(text) + "'");
    if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    return Rational(negative ? BigInt(-n) : n, d);
}

}  // namespace csurg

template <>
struct std::hash<csurg::Rational> {
    std::size_t operator()(const csurg::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};
