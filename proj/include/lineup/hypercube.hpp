#pragma once

#include "lineup/configuration.hpp"
#include "lineup/engine.hpp"
#include "lineup/rational.hpp"

#include <cstddef>
#include <optional>

namespace lineup {

/// 0 <= y_1 <= y_2 <= ... <= y_N.
TestCone fundamental_chamber(std::size_t n);

/// An inequality <coefficients, x_down> <= <s, w> + constant, where x_down
/// lists |x_i| in weakly decreasing order. Rows remember the N and r they
/// were computed for.
struct DownarrowRow {
    IntVector coefficients;
    Vector s;
    Rational constant = 0;
    std::size_t n = 0;
    std::optional<std::size_t> r;
};

/// Reverses a chamber functional. Throws std::invalid_argument when y is not
/// in the fundamental chamber.
DownarrowRow to_downarrow(const IntVector& y, const PointConfiguration& cube, std::size_t r);

/// to_downarrow of every inequality row, ordered by coefficients.
std::vector<DownarrowRow> downarrow_rows(const std::vector<InequalityRow>& rows, const PointConfiguration& cube,
                                         std::size_t r);

/// Lifts a row for [-1,1]^N to [-1,1]^M by repeating the leading
/// coefficient; (1,0,...,0) is padded with zeros instead. Throws
/// std::invalid_argument unless M > N, r >= 2 and N >= r - 1 are known.
DownarrowRow lift_inequality(const DownarrowRow& row, std::size_t m);

/// |x| sorted decreasingly.
Vector downarrow(const Vector& x);

/// Left side minus right side for a point x and weights w; <= 0 means the
/// row holds at x.
Rational row_slack(const DownarrowRow& row, const Vector& x, const WeightVector& w);

std::string downarrow_csv(const std::vector<DownarrowRow>& rows, std::size_t n, std::size_t r);

}  // namespace lineup
