#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ratmeyer {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact rational scalar. Always stored in lowest terms with positive
// denominator (cpp_rational canonicalizes on construction).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(int n) : v_(n) {}
    Rational(BigInt n) : v_(std::move(n)) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = den < 0 ? BigRat(-num, -den) : BigRat(num, den);
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
    explicit Rational(BigRat v) : v_(std::move(v)) {}

    // Accepts "num/den", a decimal like "0.125" (parsed exactly), or a bare
    // integer string.
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash != std::string::npos)
            return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            BigInt den = 1;
            for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
            return Rational(parse_int(digits), den);
        }
        return Rational(parse_int(s));
    }

    BigInt num() const { return numerator(v_); }
    BigInt den() const { return denominator(v_); }
    const BigRat& raw() const { return v_; }

    double to_double() const { return static_cast<double>(v_); }

    std::string str() const {
        if (denominator(v_) == 1) return numerator(v_).str();
        return numerator(v_).str() + "/" + denominator(v_).str();
    }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator(v_) == 1; }

    // Largest integer <= value.
    BigInt floor() const {
        BigInt q = numerator(v_) / denominator(v_);
        if (v_ < 0 && q * denominator(v_) != numerator(v_)) --q;
        return q;
    }

    Rational operator-() const { return Rational(BigRat(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    // Decimal only; strips leading zeros so cpp_int does not read them as
    // octal.
    static BigInt parse_int(const std::string& s) {
        size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
        while (i + 1 < s.size() && s[i] == '0') ++i;
        if (i >= s.size()) throw std::invalid_argument("Rational: bad integer literal '" + s + "'");
        BigInt v(s.substr(i));
        return neg ? BigInt(-v) : v;
    }

    BigRat v_;
};

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

// Best rational approximation of x with |r - x| <= eps, by continued
// fractions. Returns the convergent with the smallest denominator that
// meets the tolerance.
Rational rational_approx(double x, double eps);

} // namespace ratmeyer
