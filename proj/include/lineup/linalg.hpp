#pragma once

#include "lineup/rational.hpp"

#include <cstddef>
#include <vector>

namespace lineup {

/// Dense rational matrix stored by rows. All rows have `cols` entries.
struct Matrix {
    std::size_t cols = 0;
    std::vector<Vector> rows;

    Matrix() = default;
    explicit Matrix(std::size_t columns) : cols(columns) {}
    Matrix(std::size_t columns, std::vector<Vector> r);

    std::size_t num_rows() const { return rows.size(); }
    std::size_t num_cols() const { return cols; }
    bool empty() const { return rows.empty(); }
    void push_back(Vector row);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t r, std::size_t c);
};

std::size_t rank(const Matrix& m);

/// Reduced row echelon form with zero rows removed.
Matrix rref(const Matrix& m);

/// Basis of {x : m x = 0}, one primitive integer vector per free column,
/// each with a leading +1-signed free coordinate.
std::vector<IntVector> null_space(const Matrix& m);

struct AffineHull {
    Vector basepoint;
    /// Spans the differences point - basepoint.
    std::vector<Vector> directions;
    /// Rows y with <y, p - basepoint> = 0 for every point p.
    std::vector<IntVector> equalities;
    /// <y, basepoint> for each equality row.
    Vector equality_rhs;

    std::size_t dimension() const { return directions.size(); }
};

AffineHull affine_hull(const std::vector<Vector>& points);

}  // namespace lineup
