#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <ostream>
#include <string>
#include <string_view>

#include "error.hpp"

namespace ogdforge {

// Exact rational, always canonical (mpq_class keeps gcd = 1, den > 0).
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(v) {}
    Rational(long num, long den) {
        if (den == 0) throw ArithmeticError("zero denominator");
        q_ = mpq_class(mpz_class(num), mpz_class(den));
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rational(const mpz_class& z) : q_(z) {}

    // "p/q", "-3", " 7 / 14 " (canonicalized). No decimals.
    static Rational parse(std::string_view s) {
        std::string t;
        for (char c : s)
            if (c != ' ' && c != '\t') t.push_back(c);
        if (t.empty()) throw ValidationError("empty rational");
        auto slash = t.find('/');
        auto parse_int = [&](const std::string& part) {
            std::string_view digits = part;
            if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.remove_prefix(1);
            if (digits.empty()) throw ValidationError("bad rational '" + std::string(s) + "'");
            for (char c : digits)
                if (c < '0' || c > '9') throw ValidationError("bad rational '" + std::string(s) + "'");
            return mpz_class(part[0] == '+' ? part.substr(1) : part, 10);
        };
        if (slash == std::string::npos) return Rational(parse_int(t));
        mpz_class num = parse_int(t.substr(0, slash));
        mpz_class den = parse_int(t.substr(slash + 1));
        if (den == 0) throw ArithmeticError("zero denominator in '" + std::string(s) + "'");
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(q);
    }

    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    const mpq_class& raw() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    // numerator bits + denominator bits
    std::size_t bit_length() const {
        return mpz_sizeinbase(q_.get_num_mpz_t(), 2) + mpz_sizeinbase(q_.get_den_mpz_t(), 2);
    }

    Rational abs() const { return Rational(::abs(q_)); }
    Rational inverse() const {
        if (is_zero()) throw ArithmeticError("division by zero");
        mpq_class r;
        mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
        return Rational(r);
    }

    // integer exponent, negative allowed for non-zero base
    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
        Rational r;
        r.q_ = mpq_class(n, d);  // already coprime
        return r;
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ArithmeticError("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.q_ = -a.q_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_;
};

} // namespace ogdforge
