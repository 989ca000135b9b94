#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace stakeopt {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational in canonical form: denominator > 0 and
// gcd(|num|, den) == 1. All arithmetic and comparisons are exact; conversion
// to floating point happens only on explicit request.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt numerator, BigInt denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        normalize();
    }

    // Accepts "a", "a/b" and exact decimal strings like "0.37" or "-1.25",
    // with an optional leading sign.
    static Rational parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Floor/ceil toward -inf / +inf.
    BigInt floor() const {
        BigInt q = num_ / den_;
        if (num_ < 0 && q * den_ != num_) --q;
        return q;
    }
    BigInt ceil() const {
        BigInt q = num_ / den_;
        if (num_ > 0 && q * den_ != num_) ++q;
        return q;
    }

    Rational pow(long long e) const {
        if (e < 0) {
            if (num_ == 0) throw std::domain_error("zero to a negative power");
            return Rational(den_, num_).pow(-e);
        }
        Rational r = 1, base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    long double to_long_double() const;
    double to_double() const { return static_cast<double>(to_long_double()); }

    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    // Fixed-point decimal rendering with `digits` fractional digits, rounded
    // half away from zero. Display helper only; never feeds back into
    // computation.
    std::string to_decimal(int digits = 12) const;

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_, den_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

inline long double Rational::to_long_double() const {
    if (num_ == 0) return 0.0L;
    bool neg = num_ < 0;
    BigInt n = neg ? BigInt(-num_) : num_;
    // Scale so the quotient keeps ~112 significant bits before conversion.
    BigInt scaled = (n << 112) / den_;
    long double v = scaled.convert_to<long double>();
    v = std::ldexp(v, -112);
    return neg ? -v : v;
}

inline std::string Rational::to_decimal(int digits) const {
    if (digits < 0) throw std::invalid_argument("negative digit count");
    bool neg = num_ < 0;
    BigInt n = neg ? BigInt(-num_) : num_;
    BigInt ipart = n / den_;
    BigInt rem = n % den_;
    std::string frac;
    if (digits > 0) {
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits));
        BigInt scaled = rem * scale;
        BigInt d = scaled / den_;
        BigInt r2 = scaled % den_;
        if (2 * r2 >= den_) ++d;
        if (d == scale) {
            ++ipart;
            d = 0;
        }
        frac = d.str();
        frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
    } else if (2 * rem >= den_) {
        ++ipart;
    }
    std::string out = ipart.str();
    if (digits > 0) out += "." + frac;
    if (neg && (ipart != 0 || frac.find_first_not_of('0') != std::string::npos))
        out.insert(out.begin(), '-');
    return out;
}

inline Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    std::string_view s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");

    auto all_digits = [](std::string_view v) {
        if (v.empty()) return false;
        for (char c : v)
            if (c < '0' || c > '9') return false;
        return true;
    };

    Rational result;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (!all_digits(ns) || !all_digits(ds))
            throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
        BigInt d{std::string(ds)};
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        result = Rational(BigInt{std::string(ns)}, d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view is = s.substr(0, dot), fs = s.substr(dot + 1);
        if (is.empty() && fs.empty())
            throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
        if ((!is.empty() && !all_digits(is)) || (!fs.empty() && !all_digits(fs)))
            throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
        BigInt ipart = is.empty() ? BigInt(0) : BigInt{std::string(is)};
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(fs.size()));
        BigInt fpart = fs.empty() ? BigInt(0) : BigInt{std::string(fs)};
        result = Rational(ipart * scale + fpart, scale);
    } else {
        if (!all_digits(s))
            throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
        result = Rational(BigInt{std::string(s)});
    }
    return neg ? -result : result;
}

}  // namespace stakeopt
