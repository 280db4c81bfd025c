#include <hyperform/dlog.hpp>
#include <hyperform/error.hpp>

#include <optional>

namespace hyperform {

namespace {

Rational power_of(const Rational& a, int n) {
    Rational r = 1;
    for (int i = 0; i < n; ++i) r *= a;
    return r;
}

// Rational square root of a positive rational, if it exists.
std::optional<Rational> rational_sqrt(const Rational& a) {
    if (a <= 0) return std::nullopt;
    Integer num = a.get_num(), den = a.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    Integer rn = sqrt(num), rd = sqrt(den);
    return Rational(rn, rd);
}

std::string linear_factor(const std::string& var, int power, const Rational& shift) {
    std::string s = var;
    if (power != 1) s += "^" + std::to_string(power);
    if (shift > 0) s += " - " + to_string(shift);
    if (shift < 0) s += " + " + to_string(Rational(-shift));
    return s;
}

}  // namespace

DlogCombination DlogCombination::atom(int power, const Rational& shift, const Rational& c) {
    DlogCombination x;
    x.add({power, shift}, c);
    return x;
}

Rational DlogCombination::coefficient(const DlogAtom& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Rational(0) : it->second;
}

void DlogCombination::add(const DlogAtom& a, const Rational& c) {
    if (a.power < 1) fail(ErrorKind::validation, "dlog atom needs a positive power");
    if (c == 0) return;
    // dlog(w^p) = p dlog w
    if (a.shift == 0 && a.power != 1) return add({1, Rational(0)}, c * a.power);
    Rational& slot = terms_[a];
    slot += c;
    if (slot == 0) terms_.erase(a);
}

DlogCombination& DlogCombination::operator+=(const DlogCombination& o) {
    for (const auto& [a, c] : o.terms_) add(a, c);
    return *this;
}

Rational DlogCombination::total_residue() const {
    Rational t = 0;
    for (const auto& [a, c] : terms_) t += c * a.power;
    return t;
}

std::string DlogCombination::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1) out += hyperform::to_string(mag) + " ";
        out += "dlog(" + linear_factor(var, a.power, a.shift) + ")";
        first = false;
    }
    return out;
}

DlogCombination pushforward_power(const DlogCombination& x, int n) {
    if (n < 1) fail(ErrorKind::validation, "power map needs N >= 1");
    DlogCombination out;
    for (const auto& [a, c] : x.terms()) {
        if (a.power == 1)
            out.add({1, power_of(a.shift, n)}, c);  // prod over roots of unity of (xi w - a)
        else if (a.power % n == 0)
            out.add({a.power / n, a.shift}, c * n);  // already a pullback
        else
            fail(ErrorKind::unsupported_form, "dlog(w^" + std::to_string(a.power) + " - " + to_string(a.shift) +
                                                  ") has no dlog pushforward under w -> w^" + std::to_string(n));
    }
    return out;
}

DlogCombination pullback_power(const DlogCombination& x, int n) {
    if (n < 1) fail(ErrorKind::validation, "power map needs N >= 1");
    DlogCombination out;
    for (const auto& [a, c] : x.terms()) {
        int m = a.power * n;
        if (m == 2) {
            if (auto r = rational_sqrt(a.shift)) {
                out.add({1, *r}, c);
                out.add({1, -*r}, c);
                continue;
            }
        }
        out.add({m, a.shift}, c);
    }
    return out;
}

RationalForm to_rational_form(const DlogCombination& x) {
    RationalForm out(1, 1);
    for (const auto& [a, c] : x.terms()) {
        if (a.power != 1)
            fail(ErrorKind::unsupported_form, "dlog atom of power " + std::to_string(a.power) + " has non-linear poles");
        out += RationalForm::dlog(LinearFunctional(-a.shift, {Rational(1)})) * c;
    }
    return out.cancelled();
}

DlogCombination from_rational_form(const RationalForm& form) {
    if (form.chart_dim() != 1 || form.degree() != 1) fail(ErrorKind::dimension, "expected a 1-form in one variable");
    RationalForm f = form.cancelled();
    MultiPoly num = f.top_numerator();
    DlogCombination out;
    const auto& den = f.denominator();
    for (std::size_t i = 0; i < den.size(); ++i) {
        if (den[i].exponent != 1) fail(ErrorKind::unsupported_form, "form has a pole of higher order");
        // normalized factors are w + c
        Rational root = -den[i].functional.constant();
        Rational res = num.evaluate({root});
        for (std::size_t j = 0; j < den.size(); ++j)
            if (j != i) res /= den[j].functional({root});
        out.add({1, root}, res);
    }
    if (!to_rational_form(out).equals(f)) fail(ErrorKind::unsupported_form, "form is not a combination of dlog terms");
    return out;
}

}  // namespace hyperform
