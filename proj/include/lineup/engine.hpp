#pragma once

#include "lineup/cone.hpp"
#include "lineup/configuration.hpp"
#include "lineup/poset.hpp"
#include "lineup/rational.hpp"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lineup {

/// Functionals of interest: {y : <a, y> >= 0 for every row a}.
struct TestCone {
    std::size_t dim = 0;
    std::vector<IntVector> inequalities;

    Cone cone() const;
};

/// Products: 0 <= y_{1j} <= ... <= y_{dj} in every factor. Hypercubes: the
/// fundamental chamber 0 <= y_1 <= ... <= y_N. Anything else: all of R^d.
TestCone test_cone(const PointConfiguration& c);

struct LineupNode {
    Lineup lineup;
    /// Points already placed, as an upper ideal of the candidate poset.
    Bitset ideal;
    /// Canonical generators of the node cone.
    VRep rays;
    /// Facet rows a of the node cone, <a, y> >= 0, primitive.
    std::vector<IntVector> ineqs;
};

struct LineupFan {
    std::size_t r = 0;
    std::vector<LineupNode> nodes;
};

struct EnumerateOptions {
    /// 0 = hardware concurrency.
    std::size_t threads = 1;
    /// Stop after this many extend attempts (0 = unlimited).
    std::uint64_t node_cap = 0;
    /// Stop after this wall-clock budget (0 = unlimited).
    std::chrono::seconds time_cap{0};
    /// Only count nodes; fan.nodes stays empty.
    bool count_only = false;
    /// Frontier file written while running and read by resume.
    std::string checkpoint_path;
    std::string resume_path;
    /// Called for every finished node in deterministic order when set
    /// (works together with count_only).
    std::function<void(const LineupNode&)> on_node;
};

struct EnumerateResult {
    LineupFan fan;
    std::uint64_t count = 0;
    bool complete = true;
    std::uint64_t extend_calls = 0;
};

class Engine {
public:
    Engine(std::shared_ptr<const PointConfiguration> c, TestCone t);
    explicit Engine(const PointConfiguration& c);

    const PointConfiguration& config() const { return *config_; }
    const TestCone& test() const { return test_; }

    /// The empty lineup with the test cone.
    LineupNode root() const;
    /// Length-one lineup: the unique top point over the test cone. Throws
    /// std::domain_error when several points tie there.
    LineupNode base_node() const;
    /// Candidates for the next position.
    std::vector<std::size_t> candidates(const LineupNode& node) const;
    std::optional<LineupNode> extend(const LineupNode& node, std::size_t candidate) const;

    EnumerateResult enumerate(std::size_t r, const EnumerateOptions& options = {}) const;

private:
    std::shared_ptr<const PointConfiguration> config_;
    TestCone test_;
};

/// Union of the rays of all node cones, reduced modulo the functionals that
/// are constant on the configuration, without zero vectors, sorted.
std::vector<IntVector> extract_rays(const LineupFan& fan, const PointConfiguration& c);

/// Whether the ranking induced by y is geometrically uncoarsenable.
bool certify_ray(const IntVector& y, const PointConfiguration& c, std::size_t r);

/// <y, x> <= <s, w> + constant. Equality rows come from functionals that are
/// constant on the configuration.
struct InequalityRow {
    IntVector y;
    Vector s;
    Rational constant = 0;
    bool equality = false;
};

std::vector<InequalityRow> assemble_hrep(const PointConfiguration& c, std::size_t r,
                                         const std::vector<IntVector>& certified_rays);

/// Canonical row order: inequalities before equalities, then by y.
void sort_rows(std::vector<InequalityRow>& rows);

/// enumerate, extract_rays, certify_ray and assemble_hrep in one go, rows
/// sorted.
std::vector<InequalityRow> certified_hrep(const PointConfiguration& c, std::size_t r, std::size_t threads = 1);

struct OrbitExpansion {
    std::uint64_t orbit_count = 0;
    std::uint64_t total_count = 0;
    std::vector<Lineup> lineups;
    /// Filled when a weight vector is supplied, aligned with lineups.
    std::vector<Vector> vertices;
};

OrbitExpansion expand_orbits(const LineupFan& fan, const PointConfiguration& c,
                             const std::optional<WeightVector>& w = std::nullopt, std::size_t group_cap = 1000000);

/// Points of the lineup in order, followed by the rest, as an interior
/// functional orders them; used to check nodes.
Lineup induced_lineup(const Vector& y, const PointConfiguration& c, std::size_t r);

std::string fan_to_json(const LineupFan& fan, const PointConfiguration& c);
std::string hrep_to_json(const std::vector<InequalityRow>& rows, std::size_t r);
std::string hrep_to_csv(const std::vector<InequalityRow>& rows, std::size_t dim, std::size_t r);

}  // namespace lineup
