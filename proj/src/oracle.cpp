#include "lineup/oracle.hpp"

#include "lineup/cone.hpp"
#include "lineup/engine.hpp"
#include "lineup/linalg.hpp"
#include "lineup/ranking.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace lineup {

namespace {

void walk(const PointConfiguration& c, std::size_t r, Lineup& prefix, std::vector<bool>& used,
          std::vector<Lineup>& out)
{
    if (prefix.size() == r) {
        out.push_back(prefix);
        return;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (used[i])
            continue;
        prefix.push_back(i);
        if (is_realizable(lineup_ranking(prefix, c), c).realizable) {
            used[i] = true;
            walk(c, r, prefix, used, out);
            used[i] = false;
        }
        prefix.pop_back();
    }
}

std::size_t resolve_threads(std::size_t t)
{
    if (t == 0)
        t = std::max(1u, std::thread::hardware_concurrency());
    return t;
}

}  // namespace

std::vector<Lineup> brute_force_lineups(const PointConfiguration& c, std::size_t r, const OracleOptions& opt)
{
    if (c.size() > opt.max_points)
        throw std::length_error("brute_force_lineups: configuration has too many points");
    if (r == 0 || r > c.size())
        throw std::invalid_argument("brute_force_lineups: r out of range");
    const std::size_t n = c.size();
    std::vector<std::vector<Lineup>> per_first(n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            Lineup prefix{i};
            if (!is_realizable(lineup_ranking(prefix, c), c).realizable)
                continue;
            std::vector<bool> used(n, false);
            used[i] = true;
            walk(c, r, prefix, used, per_first[i]);
        }
    };
    std::size_t threads = std::min(resolve_threads(opt.threads), n);
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t)
        pool.emplace_back(work);
    work();
    for (auto& th : pool)
        th.join();
    std::vector<Lineup> out;
    for (auto& v : per_first)
        out.insert(out.end(), v.begin(), v.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Lineup> brute_force_sweeps(const PointConfiguration& c, const OracleOptions& opt)
{
    return brute_force_lineups(c, c.size(), opt);
}

HullResult occupation_hull(const PointConfiguration& c, std::size_t r, const WeightVector& w,
                           const OracleOptions& opt)
{
    const std::size_t n = c.size(), d = c.dim();
    if (r == 0 || r > n || w.size() != r)
        throw std::invalid_argument("occupation_hull: r and weights do not match the configuration");
    std::uint64_t tuples = 1;
    for (std::size_t k = 0; k < r; ++k) {
        tuples *= n - k;
        if (tuples > opt.max_tuples)
            throw std::length_error("occupation_hull: too many ordered tuples");
    }
    // every ordered r-tuple, in lexicographic order
    std::set<IntVector> cloud;
    Lineup l;
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self) -> void {
        if (l.size() == r) {
            Vector o = occupation_vector(l, w, c);
            Vector h{Rational(1)};
            h.insert(h.end(), o.begin(), o.end());
            cloud.insert(primitive(h));
            return;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i])
                continue;
            used[i] = true;
            l.push_back(i);
            self(self);
            l.pop_back();
            used[i] = false;
        }
    };
    rec(rec);
    if (cloud.size() > opt.max_hull_points)
        throw std::length_error("occupation_hull: too many distinct occupation vectors");

    VRep v;
    v.rays.assign(cloud.begin(), cloud.end());
    Cone hull = cone_from_vrep(v, d + 1);

    HullResult res;
    res.points = cloud.size();
    std::vector<IntVector> facets;
    for (const auto& a : hull.inequalities().rows)
        facets.push_back(primitive(a));
    for (const auto& p : cloud) {
        Matrix tight(d + 1);
        for (const auto& e : hull.equalities().rows)
            tight.push_back(e);
        for (const auto& a : facets)
            if (dot(a, p) == 0)
                tight.push_back(to_rational(a));
        if (rank(tight) == d)
            ++res.vertices;
    }
    std::set<IntVector> normals;
    for (const auto& a : hull.inequalities().rows) {
        // a0 + <a', x> >= 0, so -a' is the outer normal
        Vector y(a.begin() + 1, a.end());
        for (auto& x : y)
            x = -x;
        if (!is_zero(y))
            normals.insert(primitive(y));
    }
    res.facet_normals.assign(normals.begin(), normals.end());
    return res;
}

std::size_t hull_vertex_count(const PointConfiguration& c, std::size_t r, const WeightVector& w,
                              const OracleOptions& opt)
{
    return occupation_hull(c, r, w, opt).vertices;
}

CrossValidation cross_validate(const PointConfiguration& c, std::size_t r, const OracleOptions& opt)
{
    CrossValidation v;
    try {
        Engine engine(c);
        EnumerateOptions eo;
        eo.threads = opt.threads;
        auto fan = engine.enumerate(r, eo).fan;
        auto exp = expand_orbits(fan, c);
        v.engine_total = exp.total_count;
        auto oracle = brute_force_lineups(c, r, opt);
        v.oracle_total = oracle.size();
        auto mine = exp.lineups;
        std::sort(mine.begin(), mine.end());
        std::set_difference(oracle.begin(), oracle.end(), mine.begin(), mine.end(),
                            std::back_inserter(v.missing_from_engine));
        std::set_difference(mine.begin(), mine.end(), oracle.begin(), oracle.end(),
                            std::back_inserter(v.extra_in_engine));
        v.pass = v.missing_from_engine.empty() && v.extra_in_engine.empty() && v.engine_total == v.oracle_total;
        try {
            v.hull_vertices = static_cast<long long>(hull_vertex_count(c, r, WeightVector::linear(r), opt));
            if (static_cast<std::uint64_t>(v.hull_vertices) != v.engine_total) {
                v.pass = false;
                v.note = "hull vertex count differs from the engine";
            }
        } catch (const std::length_error&) {
            v.note = "hull route skipped: point cloud over the size cap";
        }
    } catch (const std::exception& e) {
        v.pass = false;
        v.note = e.what();
    }
    return v;
}

std::string cross_validation_to_json(const CrossValidation& v, const PointConfiguration& c, std::size_t r)
{
    auto labels = [&](const std::vector<Lineup>& ls) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& l : ls) {
            nlohmann::json one = nlohmann::json::array();
            for (auto i : l)
                one.push_back(c.point(i).label);
            arr.push_back(one);
        }
        return arr;
    };
    nlohmann::json j;
    j["config"] = c.name();
    j["r"] = r;
    j["pass"] = v.pass;
    j["engine_total"] = v.engine_total;
    j["oracle_total"] = v.oracle_total;
    j["hull_vertices"] = v.hull_vertices < 0 ? nlohmann::json(nullptr) : nlohmann::json(v.hull_vertices);
    j["missing_from_engine"] = labels(v.missing_from_engine);
    j["extra_in_engine"] = labels(v.extra_in_engine);
    if (!v.note.empty())
        j["note"] = v.note;
    return j.dump();
}

}  // namespace lineup
