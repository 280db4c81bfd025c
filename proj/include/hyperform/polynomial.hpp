#pragma once

#include <hyperform/rational.hpp>

#include <map>
#include <optional>
#include <vector>

namespace hyperform {

using Exponent = std::vector<int>;

/// Graded lexicographic order, largest monomial first.
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

int total_degree(const Exponent& e);

class LinearFunctional;

/// Sparse multivariate polynomial over the rationals. No zero coefficient is
/// ever stored, so equal polynomials have identical term maps.
class MultiPoly {
public:
    using Terms = std::map<Exponent, Rational, GrlexGreater>;

    explicit MultiPoly(int num_vars = 0) : num_vars_(num_vars) {}

    static MultiPoly constant(int num_vars, const Rational& c);
    static MultiPoly variable(int num_vars, int index);
    static MultiPoly monomial(Exponent e, const Rational& c);

    int num_vars() const { return num_vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    Rational coefficient(const Exponent& e) const;

    void add_term(const Exponent& e, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

    MultiPoly pow(int k) const;
    Rational evaluate(const Point& p) const;

    /// Degree-`target` homogenization with a new variable inserted at
    /// position 0. Requires degree() <= target.
    MultiPoly homogenize(int target) const;

private:
    void check_vars(const MultiPoly& o) const;

    int num_vars_;
    Terms terms_;
};

/// Exact quotient num / lin, or nullopt when lin does not divide num.
/// lin must have a nonzero gradient.
std::optional<MultiPoly> exact_divide(const MultiPoly& num, const LinearFunctional& lin);

}  // namespace hyperform
