#include "lineup/configuration.hpp"

#include "lineup/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lineup {

// ---------------------------------------------------------------- symmetry

Symmetry Symmetry::none(std::size_t dim)
{
    Symmetry s;
    s.kind_ = Kind::none;
    s.dim_ = dim;
    return s;
}

Symmetry Symmetry::product(std::vector<std::size_t> dims)
{
    Symmetry s;
    s.kind_ = Kind::product_of_simplices;
    s.dim_ = std::accumulate(dims.begin(), dims.end(), std::size_t(0));
    s.dims_ = std::move(dims);
    return s;
}

Symmetry Symmetry::signed_permutations(std::size_t n)
{
    Symmetry s;
    s.kind_ = Kind::signed_permutations;
    s.dim_ = n;
    return s;
}

namespace {

Integer factorial(std::size_t n)
{
    Integer f = 1;
    for (std::size_t i = 2; i <= n; ++i)
        f *= static_cast<unsigned long>(i);
    return f;
}

}  // namespace

Integer Symmetry::order() const
{
    switch (kind_) {
    case Kind::none: return 1;
    case Kind::signed_permutations: {
        Integer o = factorial(dim_);
        o <<= static_cast<mp_bitcnt_t>(dim_);
        return o;
    }
    case Kind::product_of_simplices: {
        Integer o = 1;
        std::map<std::size_t, std::size_t> mult;
        for (auto d : dims_) {
            o *= factorial(d);
            ++mult[d];
        }
        for (auto& [d, m] : mult)
            o *= factorial(m);
        return o;
    }
    }
    return 1;
}

std::vector<SignedPermutation> Symmetry::elements(std::size_t cap) const
{
    if (order() > Integer(static_cast<unsigned long>(cap)))
        throw std::length_error("symmetry group of order " + order().get_str() + " exceeds cap " +
                                std::to_string(cap));
    std::vector<SignedPermutation> out;
    if (kind_ == Kind::none) {
        SignedPermutation id;
        id.perm.resize(dim_);
        std::iota(id.perm.begin(), id.perm.end(), 0);
        id.sign.assign(dim_, 1);
        out.push_back(std::move(id));
        return out;
    }
    if (kind_ == Kind::signed_permutations) {
        std::vector<std::size_t> p(dim_);
        std::iota(p.begin(), p.end(), 0);
        do {
            for (std::size_t mask = 0; mask < (std::size_t(1) << dim_); ++mask) {
                SignedPermutation g;
                g.perm = p;
                g.sign.resize(dim_);
                for (std::size_t i = 0; i < dim_; ++i)
                    g.sign[i] = (mask >> i) & 1u ? -1 : 1;
                out.push_back(std::move(g));
            }
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
    }
    const std::size_t n = dims_.size();
    std::vector<std::size_t> offset(n, 0);
    for (std::size_t k = 1; k < n; ++k)
        offset[k] = offset[k - 1] + dims_[k - 1];
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k)
            ok = dims_[sigma[k]] == dims_[k];
        if (!ok)
            continue;
        SignedPermutation g;
        g.perm.assign(dim_, 0);
        g.sign.assign(dim_, 1);
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
            if (k == n) {
                out.push_back(g);
                return;
            }
            std::vector<std::size_t> pi(dims_[k]);
            std::iota(pi.begin(), pi.end(), 0);
            do {
                for (std::size_t i = 0; i < dims_[k]; ++i)
                    g.perm[offset[k] + i] = offset[sigma[k]] + pi[i];
                rec(k + 1);
            } while (std::next_permutation(pi.begin(), pi.end()));
        };
        rec(0);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

// ------------------------------------------------------------ configuration

PointConfiguration::PointConfiguration(std::string name, std::size_t dim, std::vector<Point> points,
                                       std::shared_ptr<const Poset> poset, std::optional<Symmetry> symmetry,
                                       ConfigKind kind, std::vector<std::size_t> factor_dims)
    : name_(std::move(name)), dim_(dim), points_(std::move(points)), poset_(std::move(poset)),
      symmetry_(symmetry ? *symmetry : Symmetry::none(dim)), kind_(kind), factor_dims_(std::move(factor_dims))
{
    if (points_.empty())
        throw std::invalid_argument("configuration has no points");
    std::set<std::string> labels;
    std::set<Vector> coords;
    for (const auto& p : points_) {
        if (p.coords.size() != dim_)
            throw std::invalid_argument("point " + p.label + " has wrong dimension");
        if (!labels.insert(p.label).second)
            throw std::invalid_argument("duplicate label " + p.label);
        if (!coords.insert(p.coords).second)
            throw std::invalid_argument("duplicate point " + p.label);
    }
    if (!poset_)
        poset_ = std::make_shared<const Poset>(Poset::antichain(points_.size()));
    if (poset_->size() != points_.size())
        throw std::invalid_argument("poset size does not match the number of points");
    if (symmetry_.dim() != dim_)
        throw std::invalid_argument("symmetry acts on the wrong dimension");
    if (kind_ == ConfigKind::product_of_simplices &&
        std::accumulate(factor_dims_.begin(), factor_dims_.end(), std::size_t(0)) != dim_)
        throw std::invalid_argument("factor dimensions do not add up");

    Integer lcm = 1;
    for (const auto& p : points_)
        for (const auto& x : p.coords)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    for (const auto& p : points_) {
        IntVector v(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            v[i] = p.coords[i].get_num() * (lcm / p.coords[i].get_den());
        int_points_.push_back(std::move(v));
    }

    Matrix diffs(dim_);
    for (std::size_t i = 1; i < points_.size(); ++i) {
        Vector d(dim_);
        for (std::size_t j = 0; j < dim_; ++j)
            d[j] = points_[i].coords[j] - points_[0].coords[j];
        diffs.push_back(std::move(d));
    }
    lineality_ = null_space(diffs);
}

std::size_t PointConfiguration::index_of(const std::string& label) const
{
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i].label == label)
            return i;
    throw std::invalid_argument("unknown label " + label);
}

IntVector PointConfiguration::normalize_functional(const Vector& y) const
{
    if (y.size() != dim_)
        throw std::invalid_argument("functional has wrong dimension");
    Vector z = y;
    if (kind_ == ConfigKind::product_of_simplices) {
        std::size_t off = 0;
        for (auto d : factor_dims_) {
            Rational first = z[off];
            for (std::size_t i = 0; i < d; ++i)
                z[off + i] -= first;
            off += d;
        }
        return primitive(z);
    }
    if (lineality_.empty())
        return primitive(z);
    // Gram-Schmidt over the rationals, then subtract the projection.
    std::vector<Vector> basis;
    for (const auto& l : lineality_) {
        Vector u = to_rational(l);
        for (const auto& b : basis) {
            Rational c = dot(u, b) / dot(b, b);
            for (std::size_t i = 0; i < dim_; ++i)
                u[i] -= c * b[i];
        }
        basis.push_back(std::move(u));
    }
    for (const auto& b : basis) {
        Rational c = dot(z, b) / dot(b, b);
        for (std::size_t i = 0; i < dim_; ++i)
            z[i] -= c * b[i];
    }
    return primitive(z);
}

IntVector PointConfiguration::normalize_functional(const IntVector& y) const
{
    return normalize_functional(to_rational(y));
}

// ---------------------------------------------------------------- generators

PointConfiguration product_of_simplices(const std::vector<std::size_t>& dims)
{
    if (dims.empty())
        throw std::invalid_argument("product_of_simplices: empty factor list");
    std::size_t n = 1, dim = 0;
    for (auto d : dims) {
        if (d == 0)
            throw std::invalid_argument("product_of_simplices: factor of size 0");
        n *= d;
        dim += d;
    }
    auto poset = std::make_shared<const Poset>(Poset::chain_product(dims));
    std::vector<Point> points;
    points.reserve(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        auto t = poset->tuple(idx);
        Point p;
        p.coords.assign(dim, 0);
        p.label = "(";
        std::size_t off = 0;
        for (std::size_t k = 0; k < dims.size(); ++k) {
            p.coords[off + t[k]] = 1;
            off += dims[k];
            p.label += (k ? "," : "") + std::to_string(t[k] + 1);
        }
        p.label += ")";
        points.push_back(std::move(p));
    }
    std::string name = "prod-simplices:";
    for (std::size_t k = 0; k < dims.size(); ++k)
        name += (k ? "," : "") + std::to_string(dims[k]);
    return PointConfiguration(name, dim, std::move(points), poset, Symmetry::product(dims),
                              ConfigKind::product_of_simplices, dims);
}

PointConfiguration hypercube(std::size_t n, HypercubeOrder order)
{
    if (n == 0 || n > 16)
        throw std::invalid_argument("hypercube: N must be in 1..16");
    auto poset = std::make_shared<const Poset>(order == HypercubeOrder::gale ? Poset::gale(n) : Poset::boolean(n));
    std::vector<Point> points;
    for (std::size_t m = 0; m < (std::size_t(1) << n); ++m) {
        Point p;
        p.coords.resize(n);
        for (std::size_t j = 0; j < n; ++j)
            p.coords[j] = (m >> j) & 1u ? 1 : -1;
        p.label = poset->element_name(m);
        points.push_back(std::move(p));
    }
    return PointConfiguration("cube:" + std::to_string(n), n, std::move(points), poset,
                              Symmetry::signed_permutations(n), ConfigKind::hypercube);
}

namespace {

void require_binary_product(const PointConfiguration& c)
{
    if (c.kind() != ConfigKind::product_of_simplices)
        throw std::invalid_argument("gamma_project: not a product of simplices");
    for (auto d : c.factor_dims())
        if (d != 2)
            throw std::invalid_argument("gamma_project: every factor must be a segment");
}

}  // namespace

std::vector<std::size_t> gamma_point_map(const PointConfiguration& c)
{
    require_binary_product(c);
    const std::size_t n = c.factor_dims().size();
    std::vector<std::size_t> map(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::size_t mask = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (c.point(i).coords[2 * j + 1] == 1)
                mask |= std::size_t(1) << j;
        map[i] = mask;
    }
    return map;
}

PointConfiguration gamma_project(const PointConfiguration& c)
{
    require_binary_product(c);
    const std::size_t n = c.factor_dims().size();
    auto cube = hypercube(n);
    auto map = gamma_point_map(c);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational g = c.point(i).coords[2 * j + 1] - c.point(i).coords[2 * j];
            if (g != cube.point(map[i]).coords[j])
                throw std::logic_error("gamma_project: image mismatch");
        }
    return cube;
}

Vector gamma_transpose(const Vector& y)
{
    Vector out(2 * y.size());
    for (std::size_t j = 0; j < y.size(); ++j) {
        out[2 * j] = -y[j];
        out[2 * j + 1] = y[j];
    }
    return out;
}

PointConfiguration grid(std::size_t n, std::size_t m)
{
    if (n == 0 || m == 0)
        throw std::invalid_argument("grid: sizes must be positive");
    std::vector<Point> points;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= m; ++j)
            points.push_back({"(" + std::to_string(i) + "," + std::to_string(j) + ")",
                              {Rational(static_cast<long>(i)), Rational(static_cast<long>(j))}});
    return PointConfiguration("grid:" + std::to_string(n) + "," + std::to_string(m), 2, std::move(points),
                              std::make_shared<const Poset>(Poset::antichain(n * m)));
}

PointConfiguration cyclic(const std::vector<Rational>& s, std::size_t d)
{
    if (s.empty() || d == 0)
        throw std::invalid_argument("cyclic: need at least one value and d >= 1");
    std::vector<Point> points;
    std::string name = "cyclic:" + std::to_string(d) + ":";
    for (std::size_t i = 0; i < s.size(); ++i) {
        Point p;
        p.label = format_rational(s[i]);
        Rational pw = 1;
        for (std::size_t k = 0; k < d; ++k) {
            p.coords.push_back(pw);
            pw *= s[i];
        }
        points.push_back(std::move(p));
        name += (i ? "," : "") + format_rational(s[i]);
    }
    return PointConfiguration(name, d, std::move(points), std::make_shared<const Poset>(Poset::antichain(s.size())));
}

PointConfiguration configuration_from_json(const std::string& text, std::string name)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("configuration JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("points"))
        throw std::invalid_argument("configuration JSON: expected {\"dim\", \"points\"}");
    const auto dim = doc.at("dim").get<std::size_t>();
    std::vector<Point> points;
    for (const auto& jp : doc.at("points")) {
        Point p;
        p.label = jp.at("label").get<std::string>();
        for (const auto& x : jp.at("coords")) {
            if (x.is_string())
                p.coords.push_back(parse_rational(x.get<std::string>()));
            else if (x.is_number_integer())
                p.coords.push_back(Rational(x.get<long>()));
            else
                throw std::invalid_argument("configuration JSON: coordinates must be \"p/q\" strings or integers");
        }
        points.push_back(std::move(p));
    }
    const std::size_t n = points.size();
    return PointConfiguration(std::move(name), dim, std::move(points),
                              std::make_shared<const Poset>(Poset::antichain(n)));
}

std::string configuration_to_json(const PointConfiguration& c)
{
    nlohmann::json doc;
    doc["dim"] = c.dim();
    doc["points"] = nlohmann::json::array();
    for (const auto& p : c.points()) {
        nlohmann::json jp;
        jp["label"] = p.label;
        jp["coords"] = nlohmann::json::array();
        for (const auto& x : p.coords)
            jp["coords"].push_back(format_rational(x));
        doc["points"].push_back(jp);
    }
    return doc.dump();
}

// ------------------------------------------------------------------ weights

WeightVector::WeightVector(Vector values, bool require_unit_sum) : values_(std::move(values))
{
    if (values_.empty())
        throw std::invalid_argument("weight vector is empty");
    Rational sum = 0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] <= 0 || values_[i] > 1)
            throw std::invalid_argument("weights must lie in (0,1]");
        if (i > 0 && values_[i] >= values_[i - 1])
            throw std::invalid_argument("weights must be strictly decreasing");
        sum += values_[i];
    }
    if (require_unit_sum && sum != 1)
        throw std::invalid_argument("weights must sum to 1");
}

WeightVector WeightVector::linear(std::size_t r)
{
    if (r == 0)
        throw std::invalid_argument("weight vector is empty");
    Vector w(r);
    const Rational total(static_cast<long>(r * (r + 1) / 2));
    for (std::size_t i = 0; i < r; ++i)
        w[i] = Rational(static_cast<long>(r - i)) / total;
    return WeightVector(std::move(w));
}

Vector occupation_vector(const Lineup& l, const WeightVector& w, const PointConfiguration& c)
{
    if (l.size() != w.size())
        throw std::invalid_argument("occupation_vector: lineup and weights differ in length");
    Vector out(c.dim(), 0);
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] >= c.size())
            throw std::invalid_argument("occupation_vector: index out of range");
        const auto& v = c.point(l[i]).coords;
        for (std::size_t j = 0; j < c.dim(); ++j)
            out[j] += w[i] * v[j];
    }
    return out;
}

Vector values_of(const Vector& y, const PointConfiguration& c)
{
    if (y.size() != c.dim())
        throw std::invalid_argument("functional has wrong dimension");
    Vector vals;
    vals.reserve(c.size());
    for (const auto& p : c.points())
        vals.push_back(dot(y, p.coords));
    return vals;
}

Vector top_r_values(const Vector& y, const PointConfiguration& c, std::size_t r)
{
    if (r == 0 || r > c.size())
        throw std::invalid_argument("top_r_values: r out of range");
    Vector vals = values_of(y, c);
    std::sort(vals.begin(), vals.end(), [](const Rational& a, const Rational& b) { return a > b; });
    vals.resize(r);
    return vals;
}

Vector top_r_values(const IntVector& y, const PointConfiguration& c, std::size_t r)
{
    return top_r_values(to_rational(y), c, r);
}

Rational support_value(const Vector& y, const PointConfiguration& c, std::size_t r, const WeightVector& w)
{
    if (w.size() != r)
        throw std::invalid_argument("support_value: weight length differs from r");
    Vector s = top_r_values(y, c, r);
    Rational total = 0;
    for (std::size_t i = 0; i < r; ++i)
        total += w[i] * s[i];
    return total;
}

}  // namespace lineup
