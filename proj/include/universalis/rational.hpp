#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace universalis {

/// Exact rational scalar backed by GMP. Always canonical: denominator > 0,
/// gcd(|num|, den) = 1. The only numeric type used in the math core.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p", "p/q" or "-p/q". Rejects anything else, including
    /// decimals and zero denominators.
    static Rational parse(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("Rational: empty literal");
        std::string_view num = s, den;
        if (auto slash = s.find('/'); slash != std::string_view::npos) {
            num = s.substr(0, slash);
            den = s.substr(slash + 1);
        }
        auto is_int = [](std::string_view t, bool allow_sign) {
            if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
            if (t.empty()) return false;
            for (char c : t)
                if (c < '0' || c > '9') return false;
            return true;
        };
        if (!is_int(num, true) || (den.data() != nullptr && !is_int(den, false)))
            throw std::invalid_argument("Rational: malformed literal '" + std::string(s) + "'");
        mpq_class q;
        if (q.set_str(std::string(s), 10) != 0 || q.get_den() == 0)
            throw std::invalid_argument("Rational: malformed literal '" + std::string(s) + "'");
        q.canonicalize();
        return Rational(q);
    }

    /// Exact "p/q" rendering ("p" when the denominator is 1).
    std::string str() const { return v_.get_str(); }

    double to_double() const { return v_.get_d(); }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.v_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

}  // namespace universalis
