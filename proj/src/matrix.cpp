#include <hyperform/error.hpp>
#include <hyperform/matrix.hpp>

#include <utility>

namespace hyperform {

ExactMatrix ExactMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    ExactMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) fail(ErrorKind::dimension, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vector ExactMatrix::row(std::size_t r) const { return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vector ExactMatrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) fail(ErrorKind::dimension, "matrix product shape mismatch");
    ExactMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
        }
    return p;
}

RrefResult rref(const ExactMatrix& m) {
    RrefResult out{m, 0, {}};
    ExactMatrix& a = out.matrix;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
        Rational inv = 1 / a(r, c);
        for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (a(r, j) != 0) a(i, j) -= f * a(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank; }

std::size_t rank(const std::vector<Vector>& rows, std::size_t cols) {
    if (rows.empty()) return 0;
    return rank(ExactMatrix::from_rows(rows, cols));
}

std::vector<Vector> kernel_basis(const ExactMatrix& m) {
    RrefResult red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : red.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = -red.matrix(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols()) fail(ErrorKind::dimension, "determinant of a non-square matrix");
    ExactMatrix a = m;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

std::optional<std::vector<Rational>> coordinates_in(const std::vector<Vector>& basis, const Vector& v) {
    const std::size_t k = basis.size(), d = v.size();
    ExactMatrix aug(d, k + 1);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug(i, j) = basis[j].at(i);
        aug(i, k) = v[i];
    }
    RrefResult red = rref(aug);
    if (red.rank != 0 && red.pivots.back() == k) return std::nullopt;
    if (red.rank != k) fail(ErrorKind::internal, "coordinates requested in a dependent basis");
    std::vector<Rational> c(k);
    for (std::size_t i = 0; i < k; ++i) c[red.pivots[i]] = red.matrix(i, k);
    return c;
}

}  // namespace hyperform
