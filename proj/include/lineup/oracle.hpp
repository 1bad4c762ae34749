#pragma once

#include "lineup/configuration.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lineup {

struct OracleOptions {
    /// Largest configuration accepted by brute_force_sweeps.
    std::size_t max_points = 12;
    /// Largest number of ordered r-tuples accepted by the hull route.
    std::uint64_t max_tuples = 50000;
    /// Largest number of distinct occupation vectors handed to the hull.
    std::size_t max_hull_points = 6000;
    std::size_t threads = 1;
};

/// Every r-lineup realized by some functional, found by walking the tree of
/// ordered prefixes and asking the ranking LP at each node. Sorted.
std::vector<Lineup> brute_force_lineups(const PointConfiguration& c, std::size_t r, const OracleOptions& opt = {});

/// brute_force_lineups with r = n.
std::vector<Lineup> brute_force_sweeps(const PointConfiguration& c, const OracleOptions& opt = {});

struct HullResult {
    /// Distinct occupation vectors.
    std::size_t points = 0;
    std::size_t vertices = 0;
    /// Outer facet normals y (max of <y, x> is attained on the facet),
    /// primitive and sorted.
    std::vector<IntVector> facet_normals;
};

/// conv{o_w(l)} over all ordered r-tuples l, by double description on the
/// homogenized point cloud.
HullResult occupation_hull(const PointConfiguration& c, std::size_t r, const WeightVector& w,
                           const OracleOptions& opt = {});

std::size_t hull_vertex_count(const PointConfiguration& c, std::size_t r, const WeightVector& w,
                              const OracleOptions& opt = {});

struct CrossValidation {
    bool pass = false;
    std::uint64_t engine_total = 0;
    std::uint64_t oracle_total = 0;
    /// Absent (-1) when the hull route is over its size cap.
    long long hull_vertices = -1;
    std::vector<Lineup> missing_from_engine;
    std::vector<Lineup> extra_in_engine;
    std::string note;
};

/// Engine expansion against brute_force_lineups and the occupation hull
/// with linear weights.
CrossValidation cross_validate(const PointConfiguration& c, std::size_t r, const OracleOptions& opt = {});

std::string cross_validation_to_json(const CrossValidation& v, const PointConfiguration& c, std::size_t r);

}  // namespace lineup
