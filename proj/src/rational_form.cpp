#include <hyperform/error.hpp>
#include <hyperform/rational_form.hpp>

#include <algorithm>

namespace hyperform {

int shuffle_sign(const std::vector<int>& s, const std::vector<int>& t) {
    std::vector<int> all = s;
    all.insert(all.end(), t.begin(), t.end());
    int sign = 1;
    // insertion sort counting transpositions
    for (std::size_t i = 1; i < all.size(); ++i)
        for (std::size_t j = i; j > 0 && all[j - 1] >= all[j]; --j) {
            if (all[j - 1] == all[j]) return 0;
            std::swap(all[j - 1], all[j]);
            sign = -sign;
        }
    return sign;
}

RationalForm::RationalForm(int chart_dim, int degree) : chart_dim_(chart_dim), degree_(degree) {
    if (chart_dim < 0 || degree < 0 || degree > chart_dim) fail(ErrorKind::dimension, "invalid form degree");
}

RationalForm RationalForm::scalar(int chart_dim, const MultiPoly& value) {
    RationalForm r(chart_dim, 0);
    r.set_component({}, value);
    return r;
}

RationalForm RationalForm::from_components(int chart_dim, int degree, const Components& numerators,
                                           const std::vector<Factor>& denominator) {
    if (degree < 0 || degree > chart_dim) fail(ErrorKind::dimension, "form degree out of range");
    RationalForm r(chart_dim, degree);
    Rational scale = 1;
    std::map<LinearFunctional, int> merged;
    for (const auto& f : denominator) {
        if (f.exponent < 1) fail(ErrorKind::validation, "denominator exponents must be positive");
        if (f.functional.num_vars() != chart_dim) fail(ErrorKind::dimension, "denominator factor has wrong dimension");
        auto [fn, lead] = f.functional.normalized();
        if (fn.has_zero_gradient()) fail(ErrorKind::validation, "constant denominator factor");
        // f^e = lead^e fn^e
        for (int i = 0; i < f.exponent; ++i) scale *= lead;
        merged[fn] += f.exponent;
    }
    for (auto& [fn, e] : merged) r.denominator_.push_back({fn, e});
    for (const auto& [s, num] : numerators) {
        if (static_cast<int>(s.size()) != degree || !std::is_sorted(s.begin(), s.end()) ||
            std::adjacent_find(s.begin(), s.end()) != s.end() || (!s.empty() && (s.front() < 0 || s.back() >= chart_dim)))
            fail(ErrorKind::validation, "differential set does not match the form degree");
        if (num.num_vars() != chart_dim) fail(ErrorKind::dimension, "numerator has wrong variable count");
        r.set_component(s, num * Rational(1 / scale));
    }
    return r;
}

RationalForm RationalForm::top(int chart_dim, const MultiPoly& numerator, const std::vector<Factor>& denominator) {
    DifferentialSet all(chart_dim);
    for (int i = 0; i < chart_dim; ++i) all[i] = i;
    return from_components(chart_dim, chart_dim, {{all, numerator}}, denominator);
}

RationalForm RationalForm::dlog(const LinearFunctional& f) {
    int n = f.num_vars();
    if (f.has_zero_gradient()) fail(ErrorKind::validation, "dlog of a constant");
    if (n < 1) fail(ErrorKind::dimension, "dlog needs a positive-dimensional chart");
    auto [fn, lead] = f.normalized();
    RationalForm r(n, 1);
    r.denominator_.push_back({fn, 1});
    for (int i = 0; i < n; ++i) r.set_component({i}, MultiPoly::constant(n, fn.gradient()[i]));
    return r;
}

MultiPoly RationalForm::top_numerator() const {
    DifferentialSet all(chart_dim_);
    for (int i = 0; i < chart_dim_; ++i) all[i] = i;
    auto it = components_.find(all);
    return it == components_.end() ? MultiPoly(chart_dim_) : it->second;
}

void RationalForm::set_component(const DifferentialSet& s, MultiPoly p) {
    if (p.is_zero()) components_.erase(s);
    else components_[s] = std::move(p);
}

void RationalForm::rebase(const std::vector<Factor>& denominator) {
    for (auto& [s, num] : components_) {
        for (const auto& target : denominator) {
            int have = 0;
            for (const auto& f : denominator_)
                if (f.functional == target.functional) have = f.exponent;
            if (have > target.exponent) fail(ErrorKind::internal, "rebase onto a non-multiple denominator");
            MultiPoly lin = target.functional.to_poly();
            for (int i = have; i < target.exponent; ++i) num = num * lin;
        }
    }
    denominator_ = denominator;
}

namespace {

std::vector<Factor> lcm(const std::vector<Factor>& a, const std::vector<Factor>& b) {
    std::map<LinearFunctional, int> m;
    for (const auto& f : a) m[f.functional] = std::max(m[f.functional], f.exponent);
    for (const auto& f : b) m[f.functional] = std::max(m[f.functional], f.exponent);
    std::vector<Factor> out;
    for (auto& [fn, e] : m) out.push_back({fn, e});
    return out;
}

}  // namespace

RationalForm RationalForm::operator-() const {
    RationalForm r = *this;
    for (auto& [s, p] : r.components_) p = -p;
    return r;
}

RationalForm& RationalForm::operator+=(const RationalForm& o) {
    if (o.chart_dim_ != chart_dim_ || o.degree_ != degree_) fail(ErrorKind::dimension, "adding forms of different shape");
    auto common = lcm(denominator_, o.denominator_);
    RationalForm other = o;
    rebase(common);
    other.rebase(common);
    for (auto& [s, p] : other.components_) {
        auto it = components_.find(s);
        set_component(s, it == components_.end() ? p : it->second + p);
    }
    return *this;
}

RationalForm& RationalForm::operator-=(const RationalForm& o) { return *this += -o; }

RationalForm& RationalForm::operator*=(const Rational& c) {
    if (c == 0) components_.clear();
    for (auto& [s, p] : components_) p *= c;
    return *this;
}

RationalForm RationalForm::cancelled() const {
    RationalForm r = *this;
    if (r.components_.empty()) {
        r.denominator_.clear();
        return r;
    }
    std::vector<Factor> kept;
    for (const auto& f : denominator_) {
        int e = f.exponent;
        while (e > 0) {
            std::map<DifferentialSet, MultiPoly> divided;
            bool ok = true;
            for (const auto& [s, p] : r.components_) {
                auto q = exact_divide(p, f.functional);
                if (!q) {
                    ok = false;
                    break;
                }
                divided.emplace(s, std::move(*q));
            }
            if (!ok) break;
            r.components_ = std::move(divided);
            --e;
        }
        if (e > 0) kept.push_back({f.functional, e});
    }
    r.denominator_ = std::move(kept);
    return r;
}

bool RationalForm::has_factor(const LinearFunctional& f) const {
    auto fn = f.normalized().first;
    for (const auto& d : denominator_)
        if (d.functional == fn) return true;
    return false;
}

bool RationalForm::equals(const RationalForm& o) const {
    if (o.chart_dim_ != chart_dim_ || o.degree_ != degree_) return false;
    return (*this - o).is_zero();
}

std::map<DifferentialSet, Rational> RationalForm::evaluate(const Point& p) const {
    if (static_cast<int>(p.size()) != chart_dim_) fail(ErrorKind::dimension, "evaluation point has wrong dimension");
    Rational den = 1;
    for (const auto& f : denominator_) {
        Rational v = f.functional(p);
        if (v == 0) fail(ErrorKind::precondition, "evaluation point lies on a pole");
        for (int i = 0; i < f.exponent; ++i) den *= v;
    }
    std::map<DifferentialSet, Rational> out;
    for (const auto& [s, num] : components_) out[s] = num.evaluate(p) / den;
    return out;
}

RationalForm wedge(const RationalForm& a, const RationalForm& b) {
    if (a.chart_dim_ != b.chart_dim_) fail(ErrorKind::dimension, "wedge of forms on different charts");
    int deg = a.degree_ + b.degree_;
    RationalForm r(a.chart_dim_, std::min(deg, a.chart_dim_));
    if (deg > a.chart_dim_) return r;
    std::map<LinearFunctional, int> m;
    for (const auto& f : a.denominator_) m[f.functional] += f.exponent;
    for (const auto& f : b.denominator_) m[f.functional] += f.exponent;
    for (auto& [fn, e] : m) r.denominator_.push_back({fn, e});
    for (const auto& [s, p] : a.components_)
        for (const auto& [t, q] : b.components_) {
            int sg = shuffle_sign(s, t);
            if (sg == 0) continue;
            DifferentialSet u = s;
            u.insert(u.end(), t.begin(), t.end());
            std::sort(u.begin(), u.end());
            MultiPoly term = p * q * Rational(sg);
            auto it = r.components_.find(u);
            r.set_component(u, it == r.components_.end() ? term : it->second + term);
        }
    return r;
}

}  // namespace hyperform
