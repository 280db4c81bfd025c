#pragma once

#include <hyperform/polynomial.hpp>
#include <hyperform/rational.hpp>

#include <compare>

namespace hyperform {

/// Affine-linear function f(z) = constant + gradient . z.
class LinearFunctional {
public:
    LinearFunctional() = default;
    LinearFunctional(Rational constant, Vector gradient)
        : constant_(std::move(constant)), gradient_(std::move(gradient)) {}

    static LinearFunctional unit(int num_vars);  // the constant 1

    int num_vars() const { return static_cast<int>(gradient_.size()); }
    const Rational& constant() const { return constant_; }
    const Vector& gradient() const { return gradient_; }
    bool has_zero_gradient() const { return is_zero(gradient_); }

    Rational operator()(const Point& p) const;

    /// Homogeneous coefficient vector (constant, gradient...).
    Vector homogeneous() const;

    /// Positive or negative rescaling making the first nonzero gradient entry
    /// equal to 1. Returns the scale factor s with *this = s * normalized().
    std::pair<LinearFunctional, Rational> normalized() const;

    /// True when the zero loci coincide (proportional functionals).
    bool same_hyperplane(const LinearFunctional& o) const;

    LinearFunctional operator-() const;
    LinearFunctional operator*(const Rational& s) const;

    MultiPoly to_poly() const;

    friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;
    friend std::strong_ordering operator<=>(const LinearFunctional& a, const LinearFunctional& b);

private:
    Rational constant_{0};
    Vector gradient_;
};

}  // namespace hyperform
