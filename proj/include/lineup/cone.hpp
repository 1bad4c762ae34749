#pragma once

#include "lineup/linalg.hpp"
#include "lineup/rational.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace lineup {

/// Generators of a polyhedral cone: C = span(lineality) + cone(rays).
///
/// Canonical form: the lineality basis is the reduced row echelon basis
/// scaled to primitive integers (leading entry positive); every ray is
/// projected onto the orthogonal complement of the lineality space and made
/// primitive; rays are sorted lexicographically without duplicates.
struct VRep {
    std::vector<IntVector> rays;
    std::vector<IntVector> lineality;

    friend bool operator==(const VRep&, const VRep&) = default;
};

VRep canonicalize(std::vector<IntVector> rays, std::vector<IntVector> lineality, std::size_t dim);

/// {x : <e, x> = 0 for rows e of equalities, <a, x> >= 0 for rows a of
/// inequalities}. The V-representation is computed on first use and cached;
/// copies share the cache.
class Cone {
public:
    Cone(std::size_t dim, Matrix equalities, Matrix inequalities);

    static Cone whole_space(std::size_t dim);

    std::size_t ambient_dim() const { return dim_; }
    const Matrix& equalities() const { return eq_; }
    const Matrix& inequalities() const { return ineq_; }

    const VRep& vrep() const;

    /// Same H-data with a V-representation supplied by the caller (it must
    /// already be canonical and describe the same cone).
    Cone with_vrep(VRep v) const;

    bool contains(const Vector& y) const;

private:
    struct Cache;
    std::size_t dim_;
    Matrix eq_;
    Matrix ineq_;
    std::shared_ptr<Cache> cache_;
};

VRep dd_convert(const Matrix& equalities, const Matrix& inequalities);
VRep dd_convert(const Cone& c);

/// The H-representation of cone(v.rays) + span(v.lineality), obtained by
/// running double description on the dual cone.
Cone cone_from_vrep(const VRep& v, std::size_t dim);

/// Dimension as a polyhedron; implicit equalities are found by LP.
std::size_t cone_dimension(const Cone& c);

/// Sum of the canonical rays. Throws std::domain_error on the zero cone.
Vector interior_point(const Cone& c);

}  // namespace lineup
