#pragma once

#include <hyperform/rational_form.hpp>

#include <map>
#include <string>
#include <utility>

namespace hyperform {

/// dlog(w^power - shift) for a positive power.
struct DlogAtom {
    int power = 1;
    Rational shift{0};

    friend bool operator==(const DlogAtom&, const DlogAtom&) = default;
    friend bool operator<(const DlogAtom& a, const DlogAtom& b) {
        if (a.power != b.power) return a.power < b.power;
        return a.shift < b.shift;
    }
};

/// Univariate combination  sum c * dlog(w^p - a).
class DlogCombination {
public:
    using Terms = std::map<DlogAtom, Rational>;

    DlogCombination() = default;
    static DlogCombination atom(int power, const Rational& shift, const Rational& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const DlogAtom& a) const;
    void add(const DlogAtom& a, const Rational& c);

    DlogCombination& operator+=(const DlogCombination& o);
    friend DlogCombination operator+(DlogCombination a, const DlogCombination& b) { return a += b; }
    friend bool operator==(const DlogCombination&, const DlogCombination&) = default;

    /// Sum of c * power over all atoms; the total residue at the finite poles.
    Rational total_residue() const;

    /// "dlog(w - 1) - 2 dlog(w)" style rendering in the given variable.
    std::string to_string(const std::string& var) const;

private:
    Terms terms_;
};

/// Trace along z = w^N. Only linear atoms and atoms whose power is a multiple
/// of N (or whose shift is zero) have a dlog image; anything else is an
/// unsupported-form error.
DlogCombination pushforward_power(const DlogCombination& x, int n);

/// Substitution z = w^N, re-expanded over linear factors when the roots are
/// rational.
DlogCombination pullback_power(const DlogCombination& x, int n);

/// The 1-form on a 1-dimensional chart; every atom must be linear.
RationalForm to_rational_form(const DlogCombination& x);

/// Partial fractions of a 1-form with simple linear poles and no pole at
/// infinity beyond what a dlog combination allows.
DlogCombination from_rational_form(const RationalForm& form);

}  // namespace hyperform
