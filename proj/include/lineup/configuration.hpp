#pragma once

#include "lineup/poset.hpp"
#include "lineup/rational.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lineup {

enum class ConfigKind { generic, product_of_simplices, hypercube };

struct Point {
    std::string label;
    Vector coords;
};

/// (g y)[i] = sign[i] * y[perm[i]].
struct SignedPermutation {
    std::vector<std::size_t> perm;
    std::vector<int> sign;

    template <class V>
    V apply(const V& y) const
    {
        V out(y.size());
        for (std::size_t i = 0; i < perm.size(); ++i)
            out[i] = sign[i] < 0 ? typename V::value_type(-y[perm[i]]) : y[perm[i]];
        return out;
    }
};

/// Symmetry group acting on functionals (and, by the same formula, on
/// points).
class Symmetry {
public:
    enum class Kind { none, product_of_simplices, signed_permutations };

    static Symmetry none(std::size_t dim);
    /// Permutations inside each factor, plus swaps of factors of equal size.
    static Symmetry product(std::vector<std::size_t> dims);
    /// The hyperoctahedral group on R^n.
    static Symmetry signed_permutations(std::size_t n);

    Kind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }
    Integer order() const;
    /// All group elements; throws std::length_error if the order exceeds cap.
    std::vector<SignedPermutation> elements(std::size_t cap = 1000000) const;

private:
    Kind kind_ = Kind::none;
    std::size_t dim_ = 0;
    std::vector<std::size_t> dims_;
};

/// A finite labelled point set. Immutable once built.
class PointConfiguration {
public:
    PointConfiguration(std::string name, std::size_t dim, std::vector<Point> points,
                       std::shared_ptr<const Poset> poset = nullptr,
                       std::optional<Symmetry> symmetry = std::nullopt,
                       ConfigKind kind = ConfigKind::generic, std::vector<std::size_t> factor_dims = {});

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<Point>& points() const { return points_; }
    const Point& point(std::size_t i) const { return points_[i]; }
    const std::string& label(std::size_t i) const { return points_[i].label; }
    /// Throws std::invalid_argument for unknown labels.
    std::size_t index_of(const std::string& label) const;

    const std::shared_ptr<const Poset>& poset() const { return poset_; }
    const Symmetry& symmetry() const { return symmetry_; }
    ConfigKind kind() const { return kind_; }
    const std::vector<std::size_t>& factor_dims() const { return factor_dims_; }

    /// Points multiplied by the lcm of all denominators.
    const std::vector<IntVector>& integer_points() const { return int_points_; }

    /// Functionals that are constant on the configuration (primitive basis).
    const std::vector<IntVector>& lineality() const { return lineality_; }

    /// Representative of y modulo the lineality space, as a primitive
    /// integer vector. Products use the section where the first coordinate
    /// of every factor is 0; other configurations project orthogonally.
    IntVector normalize_functional(const Vector& y) const;
    IntVector normalize_functional(const IntVector& y) const;

private:
    std::string name_;
    std::size_t dim_;
    std::vector<Point> points_;
    std::shared_ptr<const Poset> poset_;
    Symmetry symmetry_;
    ConfigKind kind_;
    std::vector<std::size_t> factor_dims_;
    std::vector<IntVector> int_points_;
    std::vector<IntVector> lineality_;
};

PointConfiguration product_of_simplices(const std::vector<std::size_t>& dims);

enum class HypercubeOrder { gale, product };
/// Vertices of [-1,1]^N. Point index = bitmask of the +1 coordinates,
/// label = that subset, e.g. "{1,3}".
PointConfiguration hypercube(std::size_t n, HypercubeOrder order = HypercubeOrder::gale);

/// Image of a product of segments under x -> (x_{2j} - x_{1j})_j. Point
/// order follows the product; labels use the hypercube convention.
PointConfiguration gamma_project(const PointConfiguration& product);

/// For each point of a product of segments, the index of its image in
/// hypercube(N).
std::vector<std::size_t> gamma_point_map(const PointConfiguration& product);

/// Pulls a cube functional back along gamma: y' with <y', v> = <y, gamma(v)>.
Vector gamma_transpose(const Vector& y);

PointConfiguration grid(std::size_t n, std::size_t m);

/// Points (1, a, ..., a^{d-1}) for a in s.
PointConfiguration cyclic(const std::vector<Rational>& s, std::size_t d);

/// Text of {"dim": int, "points": [{"label": str, "coords": ["p/q", ...]}]}.
PointConfiguration configuration_from_json(const std::string& text, std::string name = "file");
std::string configuration_to_json(const PointConfiguration& c);

/// Strictly decreasing entries in (0,1), optionally summing to 1.
class WeightVector {
public:
    explicit WeightVector(Vector values, bool require_unit_sum = true);
    /// (r, r-1, ..., 1) / (r(r+1)/2).
    static WeightVector linear(std::size_t r);

    std::size_t size() const { return values_.size(); }
    const Vector& values() const { return values_; }
    const Rational& operator[](std::size_t i) const { return values_[i]; }

private:
    Vector values_;
};

/// Ordered point indices.
using Lineup = std::vector<std::size_t>;

Vector occupation_vector(const Lineup& l, const WeightVector& w, const PointConfiguration& c);

/// The r largest values <y, v_i>, decreasing, with multiplicity.
Vector top_r_values(const Vector& y, const PointConfiguration& c, std::size_t r);
Vector top_r_values(const IntVector& y, const PointConfiguration& c, std::size_t r);

Rational support_value(const Vector& y, const PointConfiguration& c, std::size_t r, const WeightVector& w);

/// <y, v_i> for every point.
Vector values_of(const Vector& y, const PointConfiguration& c);

}  // namespace lineup
