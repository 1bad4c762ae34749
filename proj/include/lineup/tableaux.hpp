#pragma once

#include "lineup/configuration.hpp"
#include "lineup/engine.hpp"
#include "lineup/rational.hpp"

#include <cstddef>
#include <chrono>
#include <cstdint>
#include <string>
#include <functional>
#include <utility>
#include <vector>

namespace lineup {

struct Tableau {
    std::vector<std::vector<std::size_t>> rows;

    std::size_t num_rows() const { return rows.size(); }
    std::size_t num_cols() const { return rows.empty() ? 0 : rows.front().size(); }
    std::size_t operator()(std::size_t i, std::size_t j) const { return rows[i][j]; }
    /// Entries are exactly 1..rows*cols.
    bool standard() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

/// T(i,j) = dense rank of a_i + b_j (smallest value gets 1). Throws unless a
/// and b are weakly increasing and start at 0.
Tableau tableau_from_functional(const Vector& a, const Vector& b);

/// The tableau of a sweep of the product of two simplices of the given
/// sizes: the point placed first gets the largest entry.
Tableau tableau_from_lineup(const Lineup& l, std::size_t rows, std::size_t cols);

/// Weakly increasing rows and columns, entries forming {1..k}, and ties
/// repeated across whole column pairs and row pairs.
bool is_constrained(const Tableau& t);

struct SytOptions {
    std::size_t threads = 1;
    std::uint64_t node_cap = 0;
    std::chrono::seconds time_cap{0};
    std::string checkpoint_path;
    std::string resume_path;
    /// Receives every realizable tableau, in deterministic order.
    std::function<void(const Tableau&)> emit;
};

struct SytCount {
    std::uint64_t count = 0;
    bool complete = true;
};

/// Sweeps of the product of simplices with `rows` and `cols` vertices.
SytCount count_realizable_syt(std::size_t rows, std::size_t cols, const SytOptions& options = {});

/// Hook length formula for the rows x cols rectangle.
Integer total_syt(std::size_t rows, std::size_t cols);

/// Exact (a, b) with tableau_from_functional(a, b) == t for a constrained
/// 2 x m tableau. Throws std::invalid_argument on other input.
std::pair<Vector, Vector> realize_2xm(const Tableau& t);

/// The two ray families for the product of a segment and a simplex with f+1
/// vertices, with the second family indexed by partitions of f+1.
std::vector<IntVector> linear_syt_rays(std::size_t f);

/// Same as linear_syt_rays but with the second family indexed by
/// compositions of f+1 (every way to duplicate columns of S(n)).
std::vector<IntVector> composition_syt_rays(std::size_t f);

/// 4 * sum_{i=1}^{n} phi(i, m) + 2, phi(a, b) = #{k in [b] : gcd(k, a) = 1}.
std::uint64_t grid_sweep_count(std::size_t n, std::size_t m);

std::string tableau_to_json(const Tableau& t);

}  // namespace lineup
