#pragma once

#include <cmath>

#include "cyclepack/rational.hpp"

namespace cyclepack {

// Exact number of the form (a + b*sqrt(130)) / c with integer a, b and c > 0.
// Comparisons against rationals are done by sign analysis and squaring, so
// the rounding guarantee can be checked without floating point.
struct AlgebraicNumber {
    Int a, b, c;

    AlgebraicNumber(Int a_, Int b_, Int c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
        CYCLEPACK_REQUIRE(c > 0, Internal, "AlgebraicNumber: denominator must be positive");
    }

    static AlgebraicNumber from_rational(const Rational& r) {
        return AlgebraicNumber(numerator(r), 0, denominator(r));
    }

    AlgebraicNumber operator+(const AlgebraicNumber& o) const {
        return AlgebraicNumber(a * o.c + o.a * c, b * o.c + o.b * c, c * o.c);
    }
    AlgebraicNumber operator-(const AlgebraicNumber& o) const {
        return AlgebraicNumber(a * o.c - o.a * c, b * o.c - o.b * c, c * o.c);
    }
    AlgebraicNumber operator*(const AlgebraicNumber& o) const {
        return AlgebraicNumber(a * o.a + Int(130) * b * o.b, a * o.b + b * o.a, c * o.c);
    }

    bool is_zero() const { return sign() == 0; }

    // Sign of a + b*sqrt(130).
    int sign() const {
        int sa = a.sign(), sb = b.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // Opposite signs: compare a^2 vs 130 b^2.
        Int a2 = a * a, b2 = Int(130) * b * b;
        if (a2 == b2) return 0;
        return (a2 > b2) ? sa : sb;
    }

    int compare(const AlgebraicNumber& o) const { return (*this - o).sign(); }
    bool operator<(const AlgebraicNumber& o) const { return compare(o) < 0; }
    bool operator<=(const AlgebraicNumber& o) const { return compare(o) <= 0; }

    double to_double() const {
        return (static_cast<double>(a) + static_cast<double>(b) * std::sqrt(130.0)) /
               static_cast<double>(c);
    }
};

// beta = (20 + sqrt(130)) / 9, the per-iteration bound of the rounding rules.
inline AlgebraicNumber beta() { return AlgebraicNumber(20, 1, 9); }

// n * (20 + sqrt(130)) >= 9 * X, exactly. Requires n >= 0 and X >= 0.
inline bool n_beta_at_least(const Int& n, const Rational& X) {
    CYCLEPACK_REQUIRE(n >= 0 && X >= 0, Internal, "n_beta_at_least: negative input");
    const Int p = numerator(X), q = denominator(X);
    // n*(20 + sqrt130) >= 9p/q  <=>  20nq + nq*sqrt130 >= 9p.
    Int t = Int(9) * p - Int(20) * n * q;
    if (t <= 0) return true;
    Int lhs = Int(130) * n * n * q * q;
    return lhs >= t * t;
}

// r <= beta, exactly (r >= 0).
inline bool ratio_le_beta(const Rational& r) {
    return n_beta_at_least(denominator(r), Rational(numerator(r)));
}

} // namespace cyclepack
