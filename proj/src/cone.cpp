#include "lineup/cone.hpp"

#include "lineup/detail/ray_cone.hpp"
#include "lineup/lp.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace lineup {

struct Cone::Cache {
    std::once_flag once;
    VRep value;
};

Cone::Cone(std::size_t dim, Matrix equalities, Matrix inequalities)
    : dim_(dim), eq_(std::move(equalities)), ineq_(std::move(inequalities)),
      cache_(std::make_shared<Cache>())
{
    if (eq_.cols == 0 && eq_.empty())
        eq_.cols = dim;
    if (ineq_.cols == 0 && ineq_.empty())
        ineq_.cols = dim;
    if (eq_.cols != dim || ineq_.cols != dim)
        throw std::invalid_argument("Cone: row width does not match ambient dimension");
}

Cone Cone::whole_space(std::size_t dim) { return Cone(dim, Matrix(dim), Matrix(dim)); }

const VRep& Cone::vrep() const
{
    std::call_once(cache_->once, [this] { cache_->value = dd_convert(eq_, ineq_); });
    return cache_->value;
}

Cone Cone::with_vrep(VRep v) const
{
    Cone c(dim_, eq_, ineq_);
    std::call_once(c.cache_->once, [&] { c.cache_->value = std::move(v); });
    return c;
}

bool Cone::contains(const Vector& y) const
{
    for (const auto& e : eq_.rows)
        if (dot(e, y) != 0)
            return false;
    for (const auto& a : ineq_.rows)
        if (dot(a, y) < 0)
            return false;
    return true;
}

namespace {

// Orthogonal projection of r onto the complement of span(basis).
Vector project_out(const IntVector& r, const std::vector<IntVector>& basis)
{
    Vector x = to_rational(r);
    if (basis.empty())
        return x;
    const std::size_t k = basis.size();
    // Solve (B^T B) c = B^T r.
    std::vector<Vector> sys(k, Vector(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            sys[i][j] = Rational(dot(basis[i], basis[j]));
        sys[i][k] = Rational(dot(basis[i], r));
    }
    Matrix m(k + 1, std::move(sys));
    Matrix red = rref(m);
    for (std::size_t i = 0; i < k; ++i) {
        const Rational& c = red.rows[i][k];
        for (std::size_t t = 0; t < x.size(); ++t)
            x[t] -= c * Rational(basis[i][t]);
    }
    return x;
}

std::vector<IntVector> integer_rows(const Matrix& m)
{
    std::vector<IntVector> out;
    for (const auto& r : m.rows) {
        auto p = primitive(r);
        if (!is_zero(p))
            out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

VRep canonicalize(std::vector<IntVector> rays, std::vector<IntVector> lineality, std::size_t dim)
{
    VRep out;
    if (!lineality.empty()) {
        Matrix m(dim);
        for (const auto& l : lineality)
            m.push_back(to_rational(l));
        for (const auto& row : rref(m).rows)
            out.lineality.push_back(primitive(row));
    }
    for (const auto& r : rays) {
        auto p = primitive(project_out(r, out.lineality));
        if (!is_zero(p))
            out.rays.push_back(std::move(p));
    }
    std::sort(out.rays.begin(), out.rays.end());
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    return out;
}

VRep dd_convert(const Matrix& equalities, const Matrix& inequalities)
{
    const std::size_t dim = std::max(equalities.cols, inequalities.cols);
    detail::RayCone<Integer> cone(dim);

    auto eqs = integer_rows(equalities);
    std::sort(eqs.begin(), eqs.end());
    for (const auto& e : eqs)
        cone.add_equality(e);

    // Insertion order: most zeros on the current rays first, then
    // lexicographic. Only a window of the pending rows is scanned, long
    // inputs (hull clouds) would otherwise cost quadratic time here.
    auto pending = integer_rows(inequalities);
    std::sort(pending.begin(), pending.end());
    while (!pending.empty()) {
        std::size_t best = 0;
        std::size_t best_zeros = 0;
        const std::size_t window = std::min<std::size_t>(pending.size(), cone.num_rays() > 256 ? 4 : 48);
        for (std::size_t i = 0; i < window; ++i) {
            std::size_t zeros = 0;
            for (std::size_t r = 0; r < cone.num_rays(); ++r) {
                auto ray = cone.ray(r);
                if (detail::dot(pending[i].data(), ray.data(), dim) == 0)
                    ++zeros;
            }
            if (i == 0 || zeros > best_zeros) {
                best = i;
                best_zeros = zeros;
            }
        }
        cone.add_inequality(pending[best]);
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    }

    std::vector<IntVector> rays, lin;
    for (std::size_t r = 0; r < cone.num_rays(); ++r) {
        auto s = cone.ray(r);
        rays.emplace_back(s.begin(), s.end());
    }
    for (std::size_t i = 0; i < cone.lineality_dim(); ++i) {
        auto s = cone.lineality(i);
        lin.emplace_back(s.begin(), s.end());
    }
    return canonicalize(std::move(rays), std::move(lin), dim);
}

VRep dd_convert(const Cone& c) { return c.vrep(); }

Cone cone_from_vrep(const VRep& v, std::size_t dim)
{
    // The dual cone {x : <x, r> >= 0, <x, l> = 0}; its rays are the facet
    // normals of the original and its lineality the equalities.
    Matrix eq(dim), ineq(dim);
    for (const auto& l : v.lineality)
        eq.push_back(to_rational(l));
    for (const auto& r : v.rays)
        ineq.push_back(to_rational(r));
    VRep dual = dd_convert(eq, ineq);
    Matrix out_eq(dim), out_ineq(dim);
    for (const auto& l : dual.lineality)
        out_eq.push_back(to_rational(l));
    for (const auto& r : dual.rays)
        out_ineq.push_back(to_rational(r));
    return Cone(dim, std::move(out_eq), std::move(out_ineq));
}

std::size_t cone_dimension(const Cone& c)
{
    const std::size_t d = c.ambient_dim();
    const std::size_t k = c.inequalities().num_rows();
    const std::size_t e = c.equalities().num_rows();

    // Variables: x (free, d) then slacks s (k, nonnegative).
    // Rows: E x = 0 ; A x - s = 0.
    LpProblem lp;
    lp.equalities = Matrix(d + k);
    for (std::size_t i = 0; i < e; ++i) {
        Vector row(d + k, Rational(0));
        for (std::size_t j = 0; j < d; ++j)
            row[j] = c.equalities().rows[i][j];
        lp.equalities.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < k; ++i) {
        Vector row(d + k, Rational(0));
        for (std::size_t j = 0; j < d; ++j)
            row[j] = c.inequalities().rows[i][j];
        row[d + i] = -1;
        lp.equalities.push_back(std::move(row));
    }
    lp.rhs.assign(e + k, Rational(0));
    lp.nonnegative.assign(d + k, false);
    for (std::size_t i = 0; i < k; ++i)
        lp.nonnegative[d + i] = true;

    Matrix implicit = c.equalities();
    for (std::size_t i = 0; i < k; ++i) {
        lp.objective.assign(d + k, Rational(0));
        for (std::size_t j = 0; j < d; ++j)
            lp.objective[j] = c.inequalities().rows[i][j];
        auto res = lp_solve(lp);
        if (res.status == LpStatus::optimal)
            implicit.push_back(c.inequalities().rows[i]);
    }
    return d - rank(implicit);
}

Vector interior_point(const Cone& c)
{
    const auto& v = c.vrep();
    if (v.rays.empty() && v.lineality.empty())
        throw std::domain_error("interior_point: zero cone has no interior");
    Vector y(c.ambient_dim(), Rational(0));
    for (const auto& r : v.rays)
        for (std::size_t i = 0; i < y.size(); ++i)
            y[i] += r[i];
    return y;
}

}  // namespace lineup
