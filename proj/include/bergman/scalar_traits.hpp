#pragma once

#include <complex>
#include <string>

#include "bergman/rational.hpp"

namespace bergman {

/// Coefficient-field glue shared by the exact and float jet instantiations.
/// Exact mode is Gaussian-rational, float mode is complex double; there is no
/// implicit promotion between them, mixing modes is a type error.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<GaussianRational> {
    static constexpr bool exact = true;

    static GaussianRational zero() { return GaussianRational(); }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational from_int(long v) { return GaussianRational(v); }
    static GaussianRational from_rational(const mpq_class& q) { return GaussianRational(q); }

    static GaussianRational conj(const GaussianRational& v) { return v.conj(); }
    static GaussianRational imag_unit() { return GaussianRational::i(); }
    // exact mode purges exact zeros only
    static bool keep(const GaussianRational& v) { return !v.is_zero(); }
    static bool equal(const GaussianRational& a, const GaussianRational& b) { return a == b; }

    static std::complex<double> to_complex(const GaussianRational& v) { return v.to_complex(); }
    static double abs_value(const GaussianRational& v) { return v.abs(); }
    static std::string str(const GaussianRational& v) { return v.str(); }
};

template <>
struct scalar_traits<std::complex<double>> {
    static constexpr bool exact = false;

    /// Support-purging threshold for float jets. The default keeps everything
    /// representable; raising it trades support fidelity for speed.
    inline static double prune_epsilon = 1e-300;

    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static std::complex<double> from_int(long v) { return {static_cast<double>(v), 0.0}; }
    static std::complex<double> from_rational(const mpq_class& q) { return {q.get_d(), 0.0}; }

    static std::complex<double> conj(const std::complex<double>& v) { return std::conj(v); }
    static std::complex<double> imag_unit() { return {0.0, 1.0}; }
    static bool keep(const std::complex<double>& v) { return std::abs(v) > prune_epsilon; }
    static bool equal(const std::complex<double>& a, const std::complex<double>& b) { return a == b; }

    static std::complex<double> to_complex(const std::complex<double>& v) { return v; }
    static double abs_value(const std::complex<double>& v) { return std::abs(v); }
    static std::string str(const std::complex<double>& v) {
        return "(" + std::to_string(v.real()) + "," + std::to_string(v.imag()) + ")";
    }
};

} // namespace bergman
