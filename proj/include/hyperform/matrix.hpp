#pragma once

#include <hyperform/rational.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace hyperform {

/// Dense matrix of exact rationals, row-major.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static ExactMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix& o) const;

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    ExactMatrix matrix;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row-echelon form. Pivots are the first nonzero column of each row
/// and are normalized to 1.
RrefResult rref(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);
std::size_t rank(const std::vector<Vector>& rows, std::size_t cols);

/// Basis of {x : m x = 0}, one vector per free column, in free-column order.
/// The vector for free column j has a 1 at j and 0 at every other free column.
std::vector<Vector> kernel_basis(const ExactMatrix& m);

Rational determinant(const ExactMatrix& m);

/// Coordinates c with sum_j c_j basis[j] = v, or nullopt when v is not in the
/// span. The basis vectors must be independent.
std::optional<std::vector<Rational>> coordinates_in(const std::vector<Vector>& basis, const Vector& v);

}  // namespace hyperform
