#include <hyperform/error.hpp>
#include <hyperform/linear.hpp>

namespace hyperform {

LinearFunctional LinearFunctional::unit(int num_vars) { return {Rational(1), Vector(num_vars, Rational(0))}; }

Rational LinearFunctional::operator()(const Point& p) const { return constant_ + dot(gradient_, p); }

Vector LinearFunctional::homogeneous() const {
    Vector h;
    h.reserve(gradient_.size() + 1);
    h.push_back(constant_);
    h.insert(h.end(), gradient_.begin(), gradient_.end());
    return h;
}

std::pair<LinearFunctional, Rational> LinearFunctional::normalized() const {
    Rational lead = 0;
    for (const auto& g : gradient_)
        if (g != 0) {
            lead = g;
            break;
        }
    if (lead == 0) lead = constant_;
    if (lead == 0) fail(ErrorKind::validation, "the zero functional cannot be normalized");
    Rational inv = 1 / lead;
    return {*this * inv, lead};
}

bool LinearFunctional::same_hyperplane(const LinearFunctional& o) const {
    if (num_vars() != o.num_vars()) return false;
    return normalized().first == o.normalized().first;
}

LinearFunctional LinearFunctional::operator-() const { return *this * Rational(-1); }

LinearFunctional LinearFunctional::operator*(const Rational& s) const {
    LinearFunctional r = *this;
    r.constant_ *= s;
    for (auto& g : r.gradient_) g *= s;
    return r;
}

MultiPoly LinearFunctional::to_poly() const {
    MultiPoly p = MultiPoly::constant(num_vars(), constant_);
    for (int i = 0; i < num_vars(); ++i) p += MultiPoly::variable(num_vars(), i) * gradient_[i];
    return p;
}

std::strong_ordering operator<=>(const LinearFunctional& a, const LinearFunctional& b) {
    if (a.num_vars() != b.num_vars()) return a.num_vars() <=> b.num_vars();
    for (int i = 0; i < a.num_vars(); ++i) {
        int c = cmp(a.gradient_[i], b.gradient_[i]);
        if (c != 0) return c <=> 0;
    }
    return cmp(a.constant_, b.constant_) <=> 0;
}

}  // namespace hyperform
