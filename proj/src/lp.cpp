#include <hyperform/error.hpp>
#include <hyperform/lp.hpp>

namespace hyperform {

namespace {

// Dense tableau over columns [x+ | x- | slack | artificial] for
// maximize c.x subject to A x <= b, x free.
class Tableau {
public:
    Tableau(const Vector& c, const ExactMatrix& a, const Vector& b) : n_(a.cols()), m_(a.rows()) {
        std::size_t artificials = 0;
        for (const auto& bi : b)
            if (bi < 0) ++artificials;
        first_art_ = 2 * n_ + m_;
        cols_ = first_art_ + artificials;
        t_ = ExactMatrix(m_, cols_);
        rhs_ = b;
        basis_.resize(m_);
        std::size_t next_art = first_art_;
        for (std::size_t i = 0; i < m_; ++i) {
            Rational s = b[i] < 0 ? -1 : 1;
            for (std::size_t j = 0; j < n_; ++j) {
                t_(i, j) = s * a(i, j);
                t_(i, n_ + j) = -s * a(i, j);
            }
            t_(i, 2 * n_ + i) = s;
            rhs_[i] *= s;
            if (s < 0) {
                t_(i, next_art) = 1;
                basis_[i] = next_art++;
            } else {
                basis_[i] = 2 * n_ + i;
            }
        }
        objective_.assign(cols_, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) {
            objective_[j] = c[j];
            objective_[n_ + j] = -c[j];
        }
    }

    LpResult solve() {
        if (first_art_ < cols_) {
            Vector phase1(cols_, Rational(0));
            for (std::size_t j = first_art_; j < cols_; ++j) phase1[j] = -1;
            run(phase1, cols_);
            if (value(phase1) < 0) return {LpStatus::infeasible, 0, {}};
            drive_out_artificials();
        }
        if (!run(objective_, first_art_)) return {LpStatus::unbounded, 0, {}};
        LpResult r{LpStatus::optimal, value(objective_), Point(n_, Rational(0))};
        for (std::size_t i = 0; i < m_; ++i) {
            std::size_t v = basis_[i];
            if (v < n_) r.x[v] += rhs_[i];
            else if (v < 2 * n_) r.x[v - n_] -= rhs_[i];
        }
        return r;
    }

private:
    Rational value(const Vector& obj) const {
        Rational s = 0;
        for (std::size_t i = 0; i < m_; ++i) s += obj[basis_[i]] * rhs_[i];
        return s;
    }

    // Returns false when unbounded. Only columns below `limit` may enter.
    bool run(const Vector& obj, std::size_t limit) {
        std::vector<bool> in_basis(cols_, false);
        for (;;) {
            std::fill(in_basis.begin(), in_basis.end(), false);
            for (auto v : basis_) in_basis[v] = true;
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < limit && enter == cols_; ++j) {
                if (in_basis[j]) continue;
                Rational reduced = obj[j];
                for (std::size_t i = 0; i < m_; ++i)
                    if (t_(i, j) != 0) reduced -= obj[basis_[i]] * t_(i, j);
                if (reduced > 0) enter = j;
            }
            if (enter == cols_) return true;
            std::size_t leave = m_;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (t_(i, enter) <= 0) continue;
                Rational ratio = rhs_[i] / t_(i, enter);
                if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_) return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        Rational inv = 1 / t_(row, col);
        for (std::size_t j = 0; j < cols_; ++j) t_(row, j) *= inv;
        rhs_[row] *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || t_(i, col) == 0) continue;
            Rational f = t_(i, col);
            for (std::size_t j = 0; j < cols_; ++j)
                if (t_(row, j) != 0) t_(i, j) -= f * t_(row, j);
            rhs_[i] -= f * rhs_[row];
        }
        basis_[row] = col;
    }

    // After phase 1 every artificial in the basis sits at level 0; swap it
    // for any structural column with a nonzero entry. Rows with none are
    // redundant and are zeroed.
    void drive_out_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < first_art_) continue;
            std::size_t col = first_art_;
            for (std::size_t j = 0; j < first_art_; ++j)
                if (t_(i, j) != 0) {
                    col = j;
                    break;
                }
            if (col < first_art_) pivot(i, col);
            else {
                for (std::size_t j = 0; j < cols_; ++j) t_(i, j) = 0;
                t_(i, basis_[i]) = 1;
                rhs_[i] = 0;
            }
        }
    }

    std::size_t n_, m_, cols_ = 0, first_art_ = 0;
    ExactMatrix t_;
    Vector rhs_;
    Vector objective_;
    std::vector<std::size_t> basis_;
};

// Rows -f(x) <= f.constant, i.e. f(x) >= 0, for each f.
void append_nonneg(const std::vector<LinearFunctional>& fs, std::size_t extra_cols, std::vector<Vector>& rows, Vector& rhs) {
    for (const auto& f : fs) {
        Vector row;
        for (const auto& g : f.gradient()) row.push_back(-g);
        row.resize(row.size() + extra_cols, Rational(0));
        rows.push_back(std::move(row));
        rhs.push_back(f.constant());
    }
}

}  // namespace

LpResult lp_maximize(const Vector& c, const ExactMatrix& a, const Vector& b) {
    if (c.size() != a.cols() || b.size() != a.rows()) fail(ErrorKind::dimension, "LP shape mismatch");
    return Tableau(c, a, b).solve();
}

std::optional<Point> strict_interior_point(const std::vector<LinearFunctional>& positive, int dim) {
    if (positive.empty()) return Point(dim, Rational(0));
    // maximize t subject to f(x) >= t and t <= 1.
    std::vector<Vector> rows;
    Vector rhs;
    for (const auto& f : positive) {
        if (f.num_vars() != dim) fail(ErrorKind::dimension, "constraint has wrong dimension");
        Vector row;
        for (const auto& g : f.gradient()) row.push_back(-g);
        row.push_back(1);
        rows.push_back(std::move(row));
        rhs.push_back(f.constant());
    }
    Vector cap(dim + 1, Rational(0));
    cap[dim] = 1;
    rows.push_back(cap);
    rhs.push_back(1);
    Vector obj(dim + 1, Rational(0));
    obj[dim] = 1;
    LpResult r = lp_maximize(obj, ExactMatrix::from_rows(rows, dim + 1), rhs);
    if (r.status != LpStatus::optimal || r.value <= 0) return std::nullopt;
    r.x.pop_back();
    return r.x;
}

bool is_bounded(const std::vector<LinearFunctional>& nonneg, int dim) {
    // Bounded iff the recession cone {d : grad f . d >= 0} is {0}.
    std::vector<LinearFunctional> cone;
    for (const auto& f : nonneg) cone.emplace_back(Rational(0), f.gradient());
    std::vector<Vector> rows;
    Vector rhs;
    append_nonneg(cone, 0, rows, rhs);
    for (int j = 0; j < dim; ++j)
        for (int s : {1, -1}) {
            Vector row(dim, Rational(0));
            row[j] = s;
            rows.push_back(row);
            rhs.push_back(1);
        }
    ExactMatrix a = ExactMatrix::from_rows(rows, dim);
    for (int j = 0; j < dim; ++j)
        for (int s : {1, -1}) {
            Vector obj(dim, Rational(0));
            obj[j] = s;
            LpResult r = lp_maximize(obj, a, rhs);
            if (r.status != LpStatus::optimal) fail(ErrorKind::internal, "recession cone LP failed");
            if (r.value > 0) return false;
        }
    return true;
}

std::optional<Rational> lp_max_over(const LinearFunctional& objective, const std::vector<LinearFunctional>& nonneg, int dim) {
    std::vector<Vector> rows;
    Vector rhs;
    append_nonneg(nonneg, 0, rows, rhs);
    if (rows.empty()) {
        if (objective.has_zero_gradient()) return objective.constant();
        return std::nullopt;
    }
    LpResult r = lp_maximize(objective.gradient(), ExactMatrix::from_rows(rows, dim), rhs);
    if (r.status != LpStatus::optimal) return std::nullopt;
    return r.value + objective.constant();
}

std::optional<Rational> lp_min_over(const LinearFunctional& objective, const std::vector<LinearFunctional>& nonneg, int dim) {
    auto r = lp_max_over(-objective, nonneg, dim);
    if (!r) return std::nullopt;
    return Rational(-*r);
}

}  // namespace hyperform
