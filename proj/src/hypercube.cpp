#include "lineup/hypercube.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lineup {

TestCone fundamental_chamber(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("fundamental_chamber: N must be positive");
    TestCone t;
    t.dim = n;
    IntVector a(n, 0);
    a[0] = 1;
    t.inequalities.push_back(a);
    for (std::size_t i = 1; i < n; ++i) {
        IntVector b(n, 0);
        b[i] = 1;
        b[i - 1] = -1;
        t.inequalities.push_back(b);
    }
    return t;
}

DownarrowRow to_downarrow(const IntVector& y, const PointConfiguration& cube, std::size_t r)
{
    if (cube.kind() != ConfigKind::hypercube || y.size() != cube.dim())
        throw std::invalid_argument("to_downarrow: expects a functional on a hypercube");
    for (std::size_t i = 0; i < y.size(); ++i)
        if (y[i] < 0 || (i > 0 && y[i] < y[i - 1]))
            throw std::invalid_argument("to_downarrow: functional outside the fundamental chamber");
    DownarrowRow row;
    row.coefficients.assign(y.rbegin(), y.rend());
    row.s = top_r_values(y, cube, r);
    row.n = y.size();
    row.r = r;
    return row;
}

std::vector<DownarrowRow> downarrow_rows(const std::vector<InequalityRow>& rows, const PointConfiguration& cube,
                                         std::size_t r)
{
    std::vector<DownarrowRow> out;
    for (const auto& row : rows)
        if (!row.equality)
            out.push_back(to_downarrow(row.y, cube, r));
    std::sort(out.begin(), out.end(),
              [](const DownarrowRow& a, const DownarrowRow& b) { return a.coefficients < b.coefficients; });
    return out;
}

DownarrowRow lift_inequality(const DownarrowRow& row, std::size_t m)
{
    if (!row.r)
        throw std::invalid_argument("lift_inequality: row has no recorded r");
    const std::size_t n = row.n;
    const std::size_t r = *row.r;
    if (row.coefficients.size() != n || n == 0)
        throw std::invalid_argument("lift_inequality: malformed row");
    if (m <= n)
        throw std::invalid_argument("lift_inequality: target dimension must exceed N");
    if (r < 2 || n + 1 < r)
        throw std::invalid_argument("lift_inequality: requires r >= 2 and N >= r - 1");
    for (std::size_t i = 0; i < n; ++i)
        if (row.coefficients[i] < 0 || (i > 0 && row.coefficients[i] > row.coefficients[i - 1]))
            throw std::invalid_argument("lift_inequality: coefficients must be nonnegative and weakly decreasing");
    DownarrowRow out = row;
    out.n = m;
    bool unit = row.coefficients[0] == 1;
    for (std::size_t i = 1; i < n && unit; ++i)
        unit = row.coefficients[i] == 0;
    if (unit) {
        out.coefficients.resize(m, 0);
        return out;
    }
    const Integer lead = row.coefficients[0];
    out.coefficients.assign(m - n, lead);
    out.coefficients.insert(out.coefficients.end(), row.coefficients.begin(), row.coefficients.end());
    out.constant += Rational(lead) * static_cast<long>(m - n);
    return out;
}

Vector downarrow(const Vector& x)
{
    Vector a;
    for (const auto& v : x)
        a.push_back(abs(v));
    std::sort(a.begin(), a.end(), [](const Rational& p, const Rational& q) { return p > q; });
    return a;
}

Rational row_slack(const DownarrowRow& row, const Vector& x, const WeightVector& w)
{
    if (x.size() != row.n || w.size() != row.s.size())
        throw std::invalid_argument("row_slack: size mismatch");
    Vector d = downarrow(x);
    Rational lhs = 0, rhs = row.constant;
    for (std::size_t i = 0; i < d.size(); ++i)
        lhs += Rational(row.coefficients[i]) * d[i];
    for (std::size_t i = 0; i < w.size(); ++i)
        rhs += w[i] * row.s[i];
    return lhs - rhs;
}

std::string downarrow_csv(const std::vector<DownarrowRow>& rows, std::size_t n, std::size_t r)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < n; ++i)
        out << "y_" << i + 1 << ',';
    for (std::size_t i = 0; i < r; ++i)
        out << "s_" << i + 1 << ',';
    out << "c\n";
    for (const auto& row : rows) {
        for (const auto& x : row.coefficients)
            out << format_integer(x) << ',';
        for (const auto& x : row.s)
            out << format_rational(x) << ',';
        out << format_rational(row.constant) << '\n';
    }
    return out.str();
}

}  // namespace lineup
