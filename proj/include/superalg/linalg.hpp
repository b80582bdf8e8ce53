#pragma once

#include "superalg/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace superalg {

// Dense row-major rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<Vec>& columns, std::size_t rows);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec column(std::size_t j) const;
    void set_column(std::size_t j, const Vec& v);

    Matrix transpose() const;
    Vec apply(const Vec& v) const;
    bool is_zero() const;
    Scalar trace() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& a);
std::string to_string(const Matrix& m);

struct Echelon {
    Matrix reduced;                  // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

// Basis of {x : m x = 0}; one vector per free column, that column set to 1.
std::vector<Vec> nullspace(const Matrix& m);

// A solution of m x = b with every free variable set to 0, or nullopt if the
// system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(Matrix m);

// Coefficients from the constant term upward.
using Polynomial = std::vector<Scalar>;

Polynomial charpoly(const Matrix& m);
Polynomial poly_trim(Polynomial p);
Scalar poly_eval(const Polynomial& p, const Scalar& x);
Matrix poly_eval(const Polynomial& p, const Matrix& m);
// Divide by (x - r); the remainder must be zero.
Polynomial deflate(const Polynomial& p, const Scalar& r);

struct RationalRoot {
    Scalar value;
    std::size_t multiplicity;
};

// Every rational root with multiplicity, sorted by canonical_less, together
// with the cofactor that has no rational roots left.
std::pair<std::vector<RationalRoot>, Polynomial> rational_roots(const Polynomial& p);

}  // namespace superalg
