#pragma once

#include <hyperform/linear.hpp>
#include <hyperform/polynomial.hpp>

#include <map>
#include <vector>

namespace hyperform {

/// Sorted subset of chart differentials {dz_i}; 0-based.
using DifferentialSet = std::vector<int>;

struct Factor {
    LinearFunctional functional;  // always normalized (see LinearFunctional::normalized)
    int exponent = 1;

    friend bool operator==(const Factor&, const Factor&) = default;
};

/// A k-form  sum_S  (num_S / prod f_j^{e_j}) dz_S  on an n-dimensional chart.
///
/// The denominator is kept factored over affine-linear forms. Two forms are
/// compared by bringing them over a common denominator and comparing
/// numerators; no multivariate gcd is ever taken. Top-degree forms have the
/// single component S = {0,...,n-1}; 0-forms have S = {}.
class RationalForm {
public:
    using Components = std::map<DifferentialSet, MultiPoly>;

    RationalForm(int chart_dim, int degree);

    static RationalForm scalar(int chart_dim, const MultiPoly& value);
    static RationalForm top(int chart_dim, const MultiPoly& numerator, const std::vector<Factor>& denominator);
    /// sum_S num_S dz_S over one shared denominator; factors may be given
    /// unnormalized and in any order.
    static RationalForm from_components(int chart_dim, int degree, const Components& numerators,
                                        const std::vector<Factor>& denominator);
    /// dlog f = (sum_i g_i dz_i) / f.
    static RationalForm dlog(const LinearFunctional& f);

    int chart_dim() const { return chart_dim_; }
    int degree() const { return degree_; }
    const Components& components() const { return components_; }
    const std::vector<Factor>& denominator() const { return denominator_; }
    bool is_zero() const { return components_.empty(); }

    /// Numerator of the top-degree component (zero polynomial when absent).
    MultiPoly top_numerator() const;

    RationalForm operator-() const;
    RationalForm& operator+=(const RationalForm& o);
    RationalForm& operator-=(const RationalForm& o);
    RationalForm& operator*=(const Rational& c);
    friend RationalForm operator+(RationalForm a, const RationalForm& b) { return a += b; }
    friend RationalForm operator-(RationalForm a, const RationalForm& b) { return a -= b; }
    friend RationalForm operator*(RationalForm a, const Rational& c) { return a *= c; }

    /// Divides out every denominator factor that exactly divides all
    /// numerators. Never changes the value.
    RationalForm cancelled() const;

    bool has_factor(const LinearFunctional& f) const;

    /// Mathematical equality (cross-multiplication).
    bool equals(const RationalForm& o) const;

    /// Componentwise value at p; p must avoid every denominator zero.
    std::map<DifferentialSet, Rational> evaluate(const Point& p) const;

    /// Bit-identical representation (same denominator list and numerators).
    friend bool operator==(const RationalForm&, const RationalForm&) = default;

private:
    void set_component(const DifferentialSet& s, MultiPoly p);
    /// Re-expresses the form over the given denominator, which must be a
    /// multiple of the current one.
    void rebase(const std::vector<Factor>& denominator);

    friend RationalForm wedge(const RationalForm& a, const RationalForm& b);

    int chart_dim_;
    int degree_;
    Components components_;
    std::vector<Factor> denominator_;  // sorted by functional, exponents >= 1
};

/// Exterior product; sign from sorting the concatenated differentials.
RationalForm wedge(const RationalForm& a, const RationalForm& b);

/// Sign of the permutation sorting the concatenation s . t; 0 if they share an element.
int shuffle_sign(const std::vector<int>& s, const std::vector<int>& t);

}  // namespace hyperform
