#include "lineup/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace lineup {

Matrix::Matrix(std::size_t columns, std::vector<Vector> r) : cols(columns), rows(std::move(r))
{
    for (const auto& row : rows)
        if (row.size() != cols)
            throw std::invalid_argument("Matrix: ragged rows");
}

void Matrix::push_back(Vector row)
{
    if (row.size() != cols)
        throw std::invalid_argument("Matrix::push_back: row length mismatch");
    rows.push_back(std::move(row));
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector row(n, Rational(0));
        row[i] = 1;
        m.rows.push_back(std::move(row));
    }
    return m;
}

Matrix Matrix::zero(std::size_t r, std::size_t c)
{
    Matrix m(c);
    m.rows.assign(r, Vector(c, Rational(0)));
    return m;
}

namespace {

// Gauss-Jordan in place; returns pivot columns.
std::vector<std::size_t> eliminate(std::vector<Vector>& a, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t p = row;
        while (p < a.size() && a[p][col] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[p], a[row]);
        Rational inv = 1 / a[row][col];
        for (auto& x : a[row])
            x *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][col] == 0)
                continue;
            Rational f = a[i][col];
            for (std::size_t j = col; j < cols; ++j)
                a[i][j] -= f * a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    a.resize(row);
    return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m)
{
    auto a = m.rows;
    return eliminate(a, m.cols).size();
}

Matrix rref(const Matrix& m)
{
    auto a = m.rows;
    eliminate(a, m.cols);
    return Matrix(m.cols, std::move(a));
}

std::vector<IntVector> null_space(const Matrix& m)
{
    auto a = m.rows;
    auto pivots = eliminate(a, m.cols);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<IntVector> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free])
            continue;
        Vector v(m.cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -a[i][free];
        basis.push_back(primitive(v));
    }
    return basis;
}

AffineHull affine_hull(const std::vector<Vector>& points)
{
    if (points.empty())
        throw std::invalid_argument("affine_hull: empty point list");
    const std::size_t d = points.front().size();
    AffineHull hull;
    hull.basepoint = points.front();
    Matrix diffs(d);
    for (const auto& p : points) {
        if (p.size() != d)
            throw std::invalid_argument("affine_hull: dimension mismatch");
        Vector diff(d);
        for (std::size_t i = 0; i < d; ++i)
            diff[i] = p[i] - hull.basepoint[i];
        diffs.rows.push_back(std::move(diff));
    }
    hull.directions = rref(diffs).rows;
    hull.equalities = null_space(diffs);
    for (const auto& y : hull.equalities)
        hull.equality_rhs.push_back(dot(y, hull.basepoint));
    return hull;
}

}  // namespace lineup
