#pragma once

#include <complex>
#include <cstdlib>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "bergman/errors.hpp"

namespace bergman {

/// Exact complex number with rational real and imaginary parts.
///
/// Arithmetic is bit-exact; values are kept canonical (reduced fractions,
/// positive denominators) by the underlying mpq representation.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}          // NOLINT(google-explicit-constructor)
    GaussianRational(mpq_class re) : re_(std::move(re)), im_(0) {}  // NOLINT
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational ratio(long num, long den) {
        if (den == 0) throw SpecError("rational with zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return GaussianRational(std::move(q));
    }

    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    /// Parses a decimal-free rational string "p" or "p/q".
    static mpq_class parse_rational(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0) throw SpecError("bad rational literal: '" + text + "'");
        if (q.get_den() == 0) throw SpecError("zero denominator in rational literal: '" + text + "'");
        q.canonicalize();
        return q;
    }

    static GaussianRational parse(const std::string& re, const std::string& im) {
        return GaussianRational(parse_rational(re), parse_rational(im));
    }

    const mpq_class& real() const { return re_; }
    const mpq_class& imag() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    friend GaussianRational operator-(const GaussianRational& a) {
        return GaussianRational(-a.re_, -a.im_);
    }
    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        mpq_class n = b.re_ * b.re_ + b.im_ * b.im_;
        if (n == 0) throw ZeroConstantTerm("division by zero Gaussian rational");
        return GaussianRational((a.re_ * b.re_ + a.im_ * b.im_) / n,
                                (a.im_ * b.re_ - a.re_ * b.im_) / n);
    }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    double abs() const { return std::abs(to_complex()); }

    /// Canonical text form: "p/q" (or "p"), with "+i*(...)" only when imaginary.
    std::string str() const {
        if (im_ == 0) return re_.get_str();
        return re_.get_str() + "+i*" + im_.get_str();
    }

    friend std::ostream& operator<<(std::ostream& out, const GaussianRational& v) {
        return out << v.str();
    }

private:
    mpq_class re_, im_;
};

inline mpz_class factorial_mpz(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline mpz_class binomial_mpz(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace bergman
