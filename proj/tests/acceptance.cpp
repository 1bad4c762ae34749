// Prints one PASS/FAIL line per acceptance criterion. With arguments, runs
// only the named criteria. Exit status is nonzero if any selected one fails.

#include "lineup/cone.hpp"
#include "lineup/configuration.hpp"
#include "lineup/engine.hpp"
#include "lineup/hypercube.hpp"
#include "lineup/linalg.hpp"
#include "lineup/oracle.hpp"
#include "lineup/ranking.hpp"
#include "lineup/tableaux.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

using namespace lineup;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s)
{
    std::ostringstream o;
    o.precision(2);
    o << std::fixed << s << "s";
    return o.str();
}

std::size_t threads() { return 0; }

std::uint64_t syt_count(std::size_t rows, std::size_t cols)
{
    SytOptions o;
    o.threads = threads();
    return count_realizable_syt(rows, cols, o).count;
}

Outcome syt_counts()
{
    Outcome out;
    std::ostringstream d;
    const std::uint64_t catalan[] = {1, 2, 5, 14, 42, 132, 429, 1430};
    for (std::size_t m = 1; m <= 8; ++m) {
        auto got = syt_count(2, m);
        if (got != catalan[m - 1]) {
            out.pass = false;
            d << "(2," << m << ")=" << got << " expected " << catalan[m - 1] << "; ";
        }
    }
    d << "(2,1..8) ok; ";
    // expected count, time budget in seconds
    const std::vector<std::tuple<std::size_t, std::uint64_t, double>> three{
        {3, 36, 60}, {4, 295, 60}, {5, 2583, 60}, {6, 23580, 600}, {7, 221680, 7200}};
    for (auto [m, expected, budget] : three) {
        auto t0 = Clock::now();
        auto got = syt_count(3, m);
        double s = seconds_since(t0);
        bool ok = got == expected && s <= budget;
        out.pass = out.pass && ok;
        d << "(3," << m << ")=" << got << (got == expected ? "" : " expected " + std::to_string(expected)) << " in "
          << fmt_seconds(s) << (s <= budget ? "" : " over budget") << "; ";
    }
    out.detail = d.str();
    return out;
}

Outcome three_simplex_products()
{
    Outcome out;
    std::ostringstream d;
    const std::vector<std::pair<std::vector<std::size_t>, std::uint64_t>> cases{
        {{2, 2, 2}, 12}, {{2, 2, 3}, 110}, {{2, 3, 3}, 3792}};
    for (const auto& [dims, expected] : cases) {
        auto c = product_of_simplices(dims);
        EnumerateOptions eo;
        eo.threads = threads();
        eo.count_only = true;
        auto got = Engine(c).enumerate(c.size(), eo).count;
        out.pass = out.pass && got == expected;
        d << dims[0] << "x" << dims[1] << "x" << dims[2] << "=" << got
          << (got == expected ? "" : " expected " + std::to_string(expected)) << "; ";
    }
    out.detail = d.str();
    return out;
}

struct ExpectedRow {
    std::vector<long> coefficients;
    std::vector<long> s;
};

Outcome hypercube_hreps()
{
    const std::map<std::size_t, std::vector<ExpectedRow>> expected{
        {2, {{{1, 0}, {1, 1, -1, -1}}, {{1, 1}, {2, 0, 0, -2}}}},
        {3,
         {{{1, 0, 0}, {1, 1, 1, 1, -1, -1, -1, -1}},
          {{1, 1, 0}, {2, 2, 0, 0, 0, 0, -2, -2}},
          {{1, 1, 1}, {3, 1, 1, 1, -1, -1, -1, -3}},
          {{2, 1, 1}, {4, 2, 2, 0, 0, -2, -2, -4}}}},
        {4,
         {{{1, 0, 0, 0}, {1, 1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1}},
          {{1, 1, 0, 0}, {2, 2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, -2, -2, -2, -2}},
          {{1, 1, 1, 0}, {3, 3, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -3, -3}},
          {{1, 1, 1, 1}, {4, 2, 2, 2, 2, 0, 0, 0, 0, 0, 0, -2, -2, -2, -2, -4}},
          {{2, 1, 1, 0}, {4, 4, 2, 2, 2, 2, 0, 0, 0, 0, -2, -2, -2, -2, -4, -4}},
          {{2, 1, 1, 1}, {5, 3, 3, 3, 1, 1, 1, 1, -1, -1, -1, -1, -3, -3, -3, -5}},
          {{2, 2, 1, 1}, {6, 4, 4, 2, 2, 2, 0, 0, 0, 0, -2, -2, -2, -4, -4, -6}},
          {{3, 1, 1, 1}, {6, 4, 4, 4, 2, 2, 2, 0, 0, -2, -2, -2, -4, -4, -4, -6}},
          {{3, 2, 1, 1}, {7, 5, 5, 3, 3, 1, 1, 1, -1, -1, -1, -3, -3, -5, -5, -7}},
          {{3, 2, 2, 1}, {8, 6, 4, 4, 2, 2, 2, 0, 0, -2, -2, -2, -4, -4, -6, -8}},
          {{4, 2, 1, 1}, {8, 6, 6, 4, 4, 2, 2, 0, 0, -2, -2, -4, -4, -6, -6, -8}},
          {{4, 3, 2, 1}, {10, 8, 6, 4, 4, 2, 2, 0, 0, -2, -2, -4, -4, -6, -8, -10}}}}};
    const std::map<std::size_t, double> budget{{2, 10}, {3, 10}, {4, 300}};
    Outcome out;
    std::ostringstream d;
    for (const auto& [n, rows] : expected) {
        auto t0 = Clock::now();
        auto cube = hypercube(n);
        const std::size_t r = cube.size();
        auto got = downarrow_rows(certified_hrep(cube, r, threads()), cube, r);
        double s = seconds_since(t0);
        bool ok = got.size() == rows.size();
        for (std::size_t i = 0; ok && i < rows.size(); ++i) {
            IntVector coeff(rows[i].coefficients.begin(), rows[i].coefficients.end());
            Vector rhs(rows[i].s.begin(), rows[i].s.end());
            ok = got[i].coefficients == coeff && got[i].s == rhs && got[i].constant == 0;
        }
        ok = ok && s <= budget.at(n);
        out.pass = out.pass && ok;
        d << "N=" << n << " " << got.size() << " rows " << (ok ? "match" : "MISMATCH") << " in " << fmt_seconds(s)
          << "; ";
    }
    out.detail = d.str();
    return out;
}

Outcome cube_three_routes()
{
    auto c = hypercube(3);
    auto fan = Engine(c).enumerate(c.size()).fan;
    auto engine_total = expand_orbits(fan, c).total_count;
    auto hull = hull_vertex_count(c, 8, WeightVector::linear(8));
    auto lp = brute_force_sweeps(c).size();
    Outcome out;
    out.pass = engine_total == 96 && hull == 96 && lp == 96;
    out.detail = "engine expansion " + std::to_string(engine_total) + ", oracle hull " + std::to_string(hull) +
                 ", oracle permutation LP " + std::to_string(lp) + "; expected 96";
    return out;
}

Outcome grid_three_four()
{
    auto c = grid(3, 4);
    auto formula = grid_sweep_count(3, 4);
    auto engine = Engine(c).enumerate(c.size()).count;
    auto oracle = brute_force_sweeps(c).size();
    Outcome out;
    out.pass = formula == 38 && engine == 38 && oracle == 38;
    out.detail = "formula " + std::to_string(formula) + ", engine " + std::to_string(engine) + ", oracle " +
                 std::to_string(oracle) + "; expected 38";
    return out;
}

Outcome linear_syt()
{
    Outcome out;
    std::ostringstream d;
    // f + p(f+1)
    const std::size_t expected[] = {3, 5, 8, 11};
    for (std::size_t f = 1; f <= 4; ++f) {
        auto c = product_of_simplices({2, f + 1});
        auto fan = Engine(c).enumerate(c.size()).fan;
        std::vector<IntVector> certified;
        for (const auto& y : extract_rays(fan, c))
            if (certify_ray(y, c, c.size()))
                certified.push_back(y);
        std::sort(certified.begin(), certified.end());
        auto family = linear_syt_rays(f);
        bool ok = certified == family && family.size() == expected[f - 1];
        out.pass = out.pass && ok;
        d << "f=" << f << " engine " << certified.size() << " family " << family.size() << " expected "
          << expected[f - 1] << (ok ? "" : " (differ)") << "; ";
    }
    out.detail = d.str();
    return out;
}

Outcome lift_example()
{
    DownarrowRow row;
    for (long x : {2, 2, 1, 1})
        row.coefficients.emplace_back(x);
    for (long x : {6, 0, 0, -2})
        row.s.emplace_back(x);
    row.n = 4;
    row.r = 4;
    auto lifted = lift_inequality(row, 7);
    IntVector want;
    for (long x : {2, 2, 2, 2, 2, 1, 1})
        want.emplace_back(x);
    Outcome out;
    out.pass = lifted.coefficients == want && lifted.constant == 6 && lifted.s == row.s && lifted.n == 7;
    std::ostringstream d;
    d << "coefficients";
    for (const auto& x : lifted.coefficients)
        d << " " << x;
    d << ", constant " << format_rational(lifted.constant);
    out.detail = d.str();
    return out;
}

// ----------------------------------------------------------- property suites

Matrix random_rows(std::mt19937& rng, std::size_t k, std::size_t dim)
{
    std::uniform_int_distribution<long> coef(-3, 3);
    Matrix m(dim);
    for (std::size_t i = 0; i < k; ++i) {
        Vector row;
        for (std::size_t j = 0; j < dim; ++j)
            row.emplace_back(coef(rng));
        m.push_back(row);
    }
    return m;
}

std::size_t dd_round_trips()
{
    std::mt19937 rng(9001);
    std::size_t good = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t dim = 1 + rng() % 6, k = rng() % 9;
        Cone c(dim, Matrix(dim), random_rows(rng, k, dim));
        const VRep& v = c.vrep();
        bool ok = true;
        for (const auto& r : v.rays)
            ok = ok && c.contains(to_rational(r));
        Cone back = cone_from_vrep(v, dim);
        ok = ok && back.vrep().rays == v.rays && back.vrep().lineality.size() == v.lineality.size();
        for (const auto& r : back.vrep().rays)
            ok = ok && c.contains(to_rational(r));
        good += ok;
    }
    return good;
}

PointConfiguration random_config(std::mt19937& rng, int id)
{
    std::uniform_int_distribution<std::size_t> dd(2, 4), nn(4, 8);
    std::uniform_int_distribution<long> coord(-3, 3);
    const std::size_t d = dd(rng);
    const std::size_t n = std::min<std::size_t>(nn(rng), d == 4 ? 7 : 8);
    std::vector<Vector> raw;
    while (raw.size() < n) {
        Vector p;
        for (std::size_t k = 0; k < d; ++k)
            p.emplace_back(coord(rng));
        // collinear triples and shared first coordinates
        if (raw.size() >= 2 && id % 4 == 1) {
            for (std::size_t k = 0; k < d; ++k)
                p[k] = 2 * raw[raw.size() - 1][k] - raw[raw.size() - 2][k];
        } else if (!raw.empty() && id % 4 == 3) {
            p[0] = raw.back()[0];
        }
        if (std::find(raw.begin(), raw.end(), p) == raw.end())
            raw.push_back(p);
        else if (id % 4 == 1 || id % 4 == 3)
            ++id;
    }
    std::vector<Point> pts;
    for (std::size_t i = 0; i < raw.size(); ++i)
        pts.push_back({"p" + std::to_string(i), raw[i]});
    return PointConfiguration("random", d, pts);
}

std::size_t oracle_agreements()
{
    std::mt19937 rng(4242);
    OracleOptions o;
    o.threads = threads();
    std::size_t good = 0;
    for (int id = 0; id < 50; ++id) {
        auto c = random_config(rng, id);
        auto fan = Engine(c).enumerate(c.size()).fan;
        auto mine = expand_orbits(fan, c).lineups;
        std::sort(mine.begin(), mine.end());
        good += mine == brute_force_sweeps(c, o);
    }
    return good;
}

std::vector<PointConfiguration> acceptance_configs()
{
    std::vector<PointConfiguration> out;
    for (std::size_t m = 2; m <= 8; ++m)
        out.push_back(product_of_simplices({2, m}));
    for (std::size_t m = 3; m <= 5; ++m)
        out.push_back(product_of_simplices({3, m}));
    out.push_back(product_of_simplices({2, 2, 2}));
    out.push_back(product_of_simplices({2, 2, 3}));
    out.push_back(product_of_simplices({2, 3, 3}));
    for (std::size_t n = 2; n <= 4; ++n)
        out.push_back(hypercube(n));
    out.push_back(grid(3, 4));
    return out;
}

// Each cone at r+1 sits inside the cone of its prefix at r, and its
// interior induces that prefix, so no other cone at r contains it.
bool refinement_holds(const PointConfiguration& c)
{
    Engine e(c);
    EnumerateOptions eo;
    eo.threads = threads();
    auto coarse = e.enumerate(1, eo).fan;
    for (std::size_t r = 2; r <= c.size(); ++r) {
        auto fine = e.enumerate(r, eo).fan;
        std::map<Lineup, const LineupNode*> parents;
        for (const auto& p : coarse.nodes)
            parents[p.lineup] = &p;
        for (const auto& node : fine.nodes) {
            Lineup prefix(node.lineup.begin(), node.lineup.end() - 1);
            auto it = parents.find(prefix);
            if (it == parents.end())
                return false;
            for (const auto& ray : node.rays.rays)
                for (const auto& a : it->second->ineqs)
                    if (dot(a, ray) < 0)
                        return false;
            Vector y = interior_point(Cone(c.dim(), Matrix(c.dim()), [&] {
                Matrix m(c.dim());
                for (const auto& a : node.ineqs)
                    m.push_back(to_rational(a));
                return m;
            }()));
            if (induced_lineup(y, c, r - 1) != prefix)
                return false;
        }
        coarse = std::move(fine);
    }
    return true;
}

// rows checked, rows failing
std::pair<std::size_t, std::size_t> validity_and_tightness()
{
    std::size_t rows_checked = 0, bad = 0;
    std::vector<std::pair<PointConfiguration, std::size_t>> cases{
        {hypercube(2), 4},  {hypercube(3), 8},  {hypercube(3), 3},   {product_of_simplices({2, 3}), 6},
        {product_of_simplices({3, 3}), 9},      {product_of_simplices({3, 3}), 4},
        {product_of_simplices({2, 2, 2}), 8},   {grid(3, 4), 12}};
    for (const auto& [c, r] : cases) {
        auto fan = Engine(c).enumerate(r).fan;
        auto w = WeightVector::linear(r);
        auto vertices = expand_orbits(fan, c, w).vertices;
        std::vector<IntVector> certified;
        for (const auto& y : extract_rays(fan, c))
            if (certify_ray(y, c, r))
                certified.push_back(y);
        for (const auto& row : assemble_hrep(c, r, certified)) {
            ++rows_checked;
            Rational rhs = row.constant;
            for (std::size_t i = 0; i < r; ++i)
                rhs += w[i] * row.s[i];
            bool valid = true, tight = false;
            for (const auto& x : vertices) {
                Rational lhs = dot(row.y, x);
                valid = valid && (row.equality ? lhs == rhs : lhs <= rhs);
                tight = tight || lhs == rhs;
            }
            bad += !(valid && tight);
        }
    }
    return {rows_checked, bad};
}

Outcome property_suites()
{
    Outcome out;
    std::ostringstream d;
    auto dd = dd_round_trips();
    d << "dd round trip " << dd << "/200; ";
    auto agree = oracle_agreements();
    d << "engine/oracle " << agree << "/50; ";
    std::size_t refined = 0;
    auto configs = acceptance_configs();
    for (const auto& c : configs)
        refined += refinement_holds(c);
    d << "refinement " << refined << "/" << configs.size() << " configs; ";
    auto [rows, bad] = validity_and_tightness();
    d << "valid and tight " << rows - bad << "/" << rows << " rows";
    out.pass = dd == 200 && agree == 50 && refined == configs.size() && bad == 0;
    out.detail = d.str();
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"syt-counts", syt_counts},
        {"three-simplex-products", three_simplex_products},
        {"hypercube-hrep", hypercube_hreps},
        {"cube3-96", cube_three_routes},
        {"grid-3-4", grid_three_four},
        {"linear-syt-rays", linear_syt},
        {"lift-example", lift_example},
        {"property-suites", property_suites},
    };
    std::set<std::string> wanted(argv + 1, argv + argc);
    for (const auto& w : wanted)
        if (std::none_of(criteria.begin(), criteria.end(), [&](const auto& c) { return c.first == w; })) {
            std::cerr << "unknown criterion " << w << '\n';
            return 2;
        }
    bool all = true;
    for (const auto& [name, run] : criteria) {
        if (!wanted.empty() && !wanted.count(name))
            continue;
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << " [" << fmt_seconds(seconds_since(t0)) << "] "
                  << o.detail << std::endl;
    }
    return all ? 0 : 1;
}
