#include "lineup/tableaux.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lineup {

bool Tableau::standard() const
{
    std::vector<std::size_t> all;
    for (const auto& r : rows)
        all.insert(all.end(), r.begin(), r.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] != i + 1)
            return false;
    return true;
}

namespace {

void require_start_zero_increasing(const Vector& v, const char* name)
{
    if (v.empty() || v.front() != 0)
        throw std::invalid_argument(std::string("tableau_from_functional: ") + name + " must start at 0");
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] < v[i - 1])
            throw std::invalid_argument(std::string("tableau_from_functional: ") + name + " must be weakly increasing");
}

}  // namespace

Tableau tableau_from_functional(const Vector& a, const Vector& b)
{
    require_start_zero_increasing(a, "a");
    require_start_zero_increasing(b, "b");
    std::set<Rational> values;
    for (const auto& x : a)
        for (const auto& y : b)
            values.insert(x + y);
    std::map<Rational, std::size_t> rank;
    std::size_t k = 0;
    for (const auto& v : values)
        rank[v] = ++k;
    Tableau t;
    for (const auto& x : a) {
        std::vector<std::size_t> row;
        for (const auto& y : b)
            row.push_back(rank.at(x + y));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Tableau tableau_from_lineup(const Lineup& l, std::size_t rows, std::size_t cols)
{
    const std::size_t n = rows * cols;
    if (l.size() != n)
        throw std::invalid_argument("tableau_from_lineup: lineup is not a sweep");
    Tableau t;
    t.rows.assign(rows, std::vector<std::size_t>(cols, 0));
    for (std::size_t pos = 0; pos < n; ++pos)
        t.rows[l[pos] / cols][l[pos] % cols] = n - pos;
    return t;
}

bool is_constrained(const Tableau& t)
{
    const std::size_t m = t.num_rows(), n = t.num_cols();
    if (m == 0 || n == 0)
        return false;
    std::set<std::size_t> entries;
    for (const auto& r : t.rows) {
        if (r.size() != n)
            return false;
        entries.insert(r.begin(), r.end());
    }
    if (*entries.begin() != 1 || *entries.rbegin() != entries.size())
        return false;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (j + 1 < n && t(i, j) > t(i, j + 1))
                return false;
            if (i + 1 < m && t(i, j) > t(i + 1, j))
                return false;
        }
    for (std::size_t j = 0; j + 1 < n; ++j) {
        bool any = false, all = true;
        for (std::size_t i = 0; i < m; ++i) {
            bool eq = t(i, j) == t(i, j + 1);
            any = any || eq;
            all = all && eq;
        }
        if (any && !all)
            return false;
    }
    for (std::size_t i = 0; i + 1 < m; ++i) {
        bool any = false, all = true;
        for (std::size_t j = 0; j < n; ++j) {
            bool eq = t(i, j) == t(i + 1, j);
            any = any || eq;
            all = all && eq;
        }
        if (any && !all)
            return false;
    }
    return true;
}

SytCount count_realizable_syt(std::size_t rows, std::size_t cols, const SytOptions& opt)
{
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("count_realizable_syt: shape must be positive");
    auto c = product_of_simplices({rows, cols});
    Engine engine(c);
    EnumerateOptions eo;
    eo.threads = opt.threads;
    eo.node_cap = opt.node_cap;
    eo.time_cap = opt.time_cap;
    eo.count_only = true;
    eo.checkpoint_path = opt.checkpoint_path;
    eo.resume_path = opt.resume_path;
    if (opt.emit)
        eo.on_node = [&](const LineupNode& n) { opt.emit(tableau_from_lineup(n.lineup, rows, cols)); };
    auto res = engine.enumerate(c.size(), eo);
    return {res.count, res.complete};
}

Integer total_syt(std::size_t rows, std::size_t cols)
{
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("total_syt: shape must be positive");
    Integer num = 1, den = 1;
    for (std::size_t k = 2; k <= rows * cols; ++k)
        num *= static_cast<unsigned long>(k);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            den *= static_cast<unsigned long>((rows - 1 - i) + (cols - 1 - j) + 1);
    return num / den;
}

std::pair<Vector, Vector> realize_2xm(const Tableau& t)
{
    if (t.num_rows() != 2 || !is_constrained(t))
        throw std::invalid_argument("realize_2xm: expects a constrained 2 x m tableau");
    const std::size_t m = t.num_cols();
    Vector b(m, 0);
    Vector a{0, 1};
    if (t(0, 0) == t(1, 0)) {
        // equal rows: one row to realize
        a = {0, 0};
        for (std::size_t k = 1; k < m; ++k)
            b[k] = t(0, k) == t(0, k - 1) ? b[k - 1] : b[k - 1] + 1;
    } else {
        // placed[entry] = value of the cells carrying that entry so far
        std::map<std::size_t, Rational> placed{{t(0, 0), 0}, {t(1, 0), 1}};
        for (std::size_t k = 1; k < m; ++k) {
            const std::size_t e = t(0, k);
            if (e == t(0, k - 1)) {
                b[k] = b[k - 1];
            } else if (auto it = placed.find(e); it != placed.end()) {
                b[k] = it->second;
            } else {
                auto above = placed.upper_bound(e);
                auto below = std::prev(above);
                Rational gap = 0;
                for (auto p = placed.begin(); std::next(p) != placed.end(); ++p) {
                    Rational g = std::next(p)->second - p->second;
                    if (g > 0 && (gap == 0 || g < gap))
                        gap = g;
                }
                if (gap == 0)
                    gap = 1;
                Rational eps = gap / (2 * static_cast<long>(m + 2));
                b[k] = below->second + eps;
            }
            placed[e] = b[k];
            placed[t(1, k)] = b[k] + 1;
        }
    }
    if (tableau_from_functional(a, b) != t)
        throw std::logic_error("realize_2xm: construction failed to reproduce the tableau");
    return {a, b};
}

namespace {

void partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

IntVector staircase(std::size_t f, const std::vector<std::size_t>& parts)
{
    IntVector y{0, 1};
    for (std::size_t k = 0; k < parts.size(); ++k)
        for (std::size_t i = 0; i < parts[k]; ++i)
            y.push_back(static_cast<long>(k));
    (void)f;
    return y;
}

std::vector<IntVector> first_family(std::size_t f)
{
    std::vector<IntVector> out;
    for (std::size_t k = 1; k <= f; ++k) {
        IntVector y{0, 0};
        for (std::size_t i = 0; i <= f; ++i)
            y.push_back(i < k ? 0 : 1);
        out.push_back(std::move(y));
    }
    return out;
}

}  // namespace

std::vector<IntVector> linear_syt_rays(std::size_t f)
{
    if (f == 0)
        throw std::invalid_argument("linear_syt_rays: f must be positive");
    auto out = first_family(f);
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> cur;
    partitions(f + 1, f + 1, cur, parts);
    for (const auto& p : parts)
        out.push_back(staircase(f, p));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVector> composition_syt_rays(std::size_t f)
{
    if (f == 0)
        throw std::invalid_argument("composition_syt_rays: f must be positive");
    auto out = first_family(f);
    // a composition of f+1 is a subset of the f gaps between f+1 cells
    for (std::size_t mask = 0; mask < (std::size_t(1) << f); ++mask) {
        IntVector y{0, 1, 0};
        long level = 0;
        for (std::size_t i = 0; i < f; ++i) {
            if ((mask >> i) & 1u)
                ++level;
            y.push_back(level);
        }
        out.push_back(std::move(y));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t grid_sweep_count(std::size_t n, std::size_t m)
{
    if (n < 2 || m < 2)
        throw std::invalid_argument("grid_sweep_count: n and m must be at least 2");
    std::uint64_t sum = 0;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t k = 1; k <= m; ++k)
            if (std::gcd(k, i) == 1)
                ++sum;
    return 4 * sum + 2;
}

std::string tableau_to_json(const Tableau& t)
{
    return nlohmann::json(t.rows).dump();
}

}  // namespace lineup
