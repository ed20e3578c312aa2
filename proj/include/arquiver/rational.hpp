#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace arq {

/// Library-wide error type. `code` is a stable machine-readable tag
/// ("ShapeMismatch", "InfiniteDimensional", ...), `what()` the human text.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw Error(code, msg);
}

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always in lowest terms, denominator >= 1.
/// Backed by arbitrary-precision integers, so no overflow and no rounding:
/// every zero test downstream is a genuine zero test.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // NOLINT: implicit by design
    Rational(const BigInt& n) : value_(n) {}
    Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
        if (den == 0) fail("DivisionByZero", "rational with zero denominator");
    }

    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_one() const { return value_ == 1; }

    Rational operator-() const {
        Rational r = *this;
        r.value_ = -r.value_;
        return r;
    }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) fail("DivisionByZero", "rational division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    /// Serialized form is "p/q" with q omitted when it equals 1: "3", "-1/2".
    std::string str() const {
        std::string s = numerator().str();
        if (denominator() != 1) s += "/" + denominator().str();
        return s;
    }

    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
            BigInt num{std::string(text.substr(0, slash))};
            BigInt den{std::string(text.substr(slash + 1))};
            if (den <= 0) fail("BadRational", "denominator must be positive in \"" + std::string(text) + "\"");
            return Rational(num, den);
        } catch (const std::exception& e) {
            fail("BadRational", "cannot parse rational \"" + std::string(text) + "\"");
        }
    }

private:
    boost::multiprecision::cpp_rational value_;
};

}  // namespace arq
