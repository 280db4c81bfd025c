#include <hyperform/error.hpp>
#include <hyperform/linear.hpp>
#include <hyperform/polynomial.hpp>

#include <numeric>

namespace hyperform {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

MultiPoly MultiPoly::constant(int num_vars, const Rational& c) {
    MultiPoly p(num_vars);
    p.add_term(Exponent(num_vars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int num_vars, int index) {
    Exponent e(num_vars, 0);
    e.at(index) = 1;
    return monomial(std::move(e), 1);
}

MultiPoly MultiPoly::monomial(Exponent e, const Rational& c) {
    MultiPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

int MultiPoly::degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

bool MultiPoly::is_homogeneous() const {
    int d = degree();
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return false;
    return true;
}

Rational MultiPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != num_vars_) fail(ErrorKind::dimension, "monomial has wrong number of variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::check_vars(const MultiPoly& o) const {
    if (o.num_vars_ != num_vars_)
        fail(ErrorKind::dimension, "polynomials in " + std::to_string(num_vars_) + " and " +
                                       std::to_string(o.num_vars_) + " variables");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_vars(b);
    MultiPoly r(a.num_vars_);
    Exponent e(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.num_vars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::pow(int k) const {
    MultiPoly r = constant(num_vars_, 1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

Rational MultiPoly::evaluate(const Point& p) const {
    if (static_cast<int>(p.size()) != num_vars_) fail(ErrorKind::dimension, "evaluation point has wrong dimension");
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < num_vars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= p[i];
        s += t;
    }
    return s;
}

MultiPoly MultiPoly::homogenize(int target) const {
    if (degree() > target)
        fail(ErrorKind::precondition, "cannot homogenize a degree-" + std::to_string(degree()) +
                                          " polynomial to degree " + std::to_string(target));
    MultiPoly r(num_vars_ + 1);
    for (const auto& [e, c] : terms_) {
        Exponent h;
        h.reserve(e.size() + 1);
        h.push_back(target - total_degree(e));
        h.insert(h.end(), e.begin(), e.end());
        r.add_term(h, c);
    }
    return r;
}

std::optional<MultiPoly> exact_divide(const MultiPoly& num, const LinearFunctional& lin) {
    if (lin.num_vars() != num.num_vars()) fail(ErrorKind::dimension, "divisor has wrong number of variables");
    const Vector& g = lin.gradient();
    int pivot = -1;
    for (int i = 0; i < lin.num_vars(); ++i)
        if (g[i] != 0) {
            pivot = i;
            break;
        }
    if (pivot < 0) fail(ErrorKind::precondition, "exact division by a constant functional");

    // Long division in the pivot variable: the remainder is free of it and is
    // zero exactly when lin divides num.
    MultiPoly quotient(num.num_vars());
    MultiPoly rest = num;
    const MultiPoly divisor = lin.to_poly();
    while (!rest.is_zero()) {
        const Exponent* best = nullptr;
        for (const auto& [e, c] : rest.terms())
            if (!best || e[pivot] > (*best)[pivot]) best = &e;
        if ((*best)[pivot] == 0) return std::nullopt;
        Exponent e = *best;
        Rational c = rest.coefficient(e) / g[pivot];
        e[pivot] -= 1;
        MultiPoly step = MultiPoly::monomial(e, c);
        quotient += step;
        rest -= step * divisor;
    }
    return quotient;
}

}  // namespace hyperform
