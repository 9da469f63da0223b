#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace hcm {

// Exact rational scalar backed by GMP. Always kept canonical: reduced
// form, positive denominator, zero stored as 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int value) : q_(value) {}
    Rational(long value) : q_(value) {}

    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    Rational(mpz_class num, mpz_class den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(std::move(num), std::move(den));
        q_.canonicalize();
    }

    explicit Rational(mpq_class q) : q_(std::move(q)) {
        if (q_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }

    // Accepts "p" or "p/q" with an optional leading minus sign.
    static Rational parse(const std::string& text);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(mpq_class(1 / q_));
    }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    std::string str() const {
        return is_integer() ? q_.get_num().get_str()
                            : q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_;
};

inline Rational Rational::parse(const std::string& text) {
    const auto bad = [&] { throw std::invalid_argument("Rational: cannot parse \"" + text + "\""); };
    std::size_t pos = 0;
    if (pos < text.size() && text[pos] == '-') ++pos;
    std::size_t digits = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') { ++pos; ++digits; }
    if (digits == 0) bad();
    std::string num = text.substr(0, pos);
    std::string den = "1";
    if (pos < text.size()) {
        if (text[pos] != '/') bad();
        ++pos;
        std::size_t den_start = pos, den_digits = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') { ++pos; ++den_digits; }
        if (den_digits == 0 || pos != text.size()) bad();
        den = text.substr(den_start);
    }
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("Rational: zero denominator in \"" + text + "\"");
    return Rational(mpz_class(num), std::move(d));
}

}  // namespace hcm
