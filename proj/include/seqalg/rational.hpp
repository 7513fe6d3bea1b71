#pragma once

#include <gmpxx.h>

#include <string>

#include "seqalg/errors.hpp"

namespace seqalg {

using Integer = mpz_class;

// Exact rational number.  Always kept canonical (reduced, positive
// denominator); rendering is "p" for integers and "p/q" otherwise.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0)
            throw Error(ErrorKind::DivideByZero, "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_whole() const { return v_.get_den() == 1; }

    // Projection to the integers; errors on non-integer values.
    Integer to_whole() const {
        if (!is_whole())
            throw Error(ErrorKind::NotWhole, "not a whole number: " + str());
        return v_.get_num();
    }

    double to_double() const { return v_.get_d(); }

    std::string str() const { return v_.get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero())
            throw Error(ErrorKind::DivideByZero, "rational division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

private:
    explicit Rational(const mpq_class& v) : v_(v) {}
    mpq_class v_;
};

// Gaussian rational: re + im*i with exact rational parts.
class Gaussian {
public:
    Gaussian() = default;
    Gaussian(long n) : re_(n) {}
    Gaussian(const Rational& re) : re_(re) {}
    Gaussian(const Rational& re, const Rational& im) : re_(re), im_(im) {}

    static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }

    // Projection onto the real line; errors when the imaginary part is nonzero.
    Rational to_real() const {
        if (!im_.is_zero())
            throw Error(ErrorKind::NotReal, "nonzero imaginary part: " + str());
        return re_;
    }

    Integer to_whole() const { return to_real().to_whole(); }

    std::string str() const {
        if (im_.is_zero()) return re_.str();
        std::string s = re_.str();
        if (im_ < Rational(0))
            s += "-" + (-im_).str() + "i";
        else
            s += "+" + im_.str() + "i";
        return s;
    }

    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
        return Gaussian(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
        return Gaussian(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return Gaussian(a.re_ * b.re_ - a.im_ * b.im_,
                        a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
        Rational d = b.re_ * b.re_ + b.im_ * b.im_;
        if (d.is_zero())
            throw Error(ErrorKind::DivideByZero, "gaussian division by zero");
        return Gaussian((a.re_ * b.re_ + a.im_ * b.im_) / d,
                        (a.im_ * b.re_ - a.re_ * b.im_) / d);
    }
    Gaussian operator-() const { return Gaussian(-re_, -im_); }

    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

private:
    Rational re_;
    Rational im_;
};

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace seqalg
