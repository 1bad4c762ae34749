#include "helpers.hpp"

#include "lineup/engine.hpp"
#include "lineup/ranking.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <map>
#include <random>
#include <set>

using namespace lineup;
using test::ivec;
using test::vec;

namespace {

LineupNode walk(const Engine& e, std::initializer_list<const char*> labels)
{
    LineupNode n = e.root();
    for (auto l : labels) {
        auto next = e.extend(n, e.config().index_of(l));
        REQUIRE(next);
        n = *next;
    }
    return n;
}

bool in_cone(const LineupNode& n, const Vector& y)
{
    for (const auto& a : n.ineqs)
        if (dot(a, y) < 0)
            return false;
    return true;
}

bool in_cone_strictly(const LineupNode& n, const Vector& y)
{
    for (const auto& a : n.ineqs)
        if (dot(a, y) <= 0)
            return false;
    return true;
}

Vector random_in_test_cone(std::mt19937& rng, const TestCone& t)
{
    while (true) {
        Vector y = test::random_vector(rng, t.dim, 0, 40);
        bool ok = true;
        for (const auto& a : t.inequalities)
            ok = ok && dot(a, y) >= 0;
        if (ok)
            return y;
    }
}

std::vector<PointConfiguration> small_family()
{
    return {hypercube(2), hypercube(3), product_of_simplices({2, 3}), product_of_simplices({3, 3}),
            product_of_simplices({2, 2, 2}), grid(2, 3), cyclic({0, 1, 2, 4}, 3)};
}

}  // namespace

TEST_CASE("test cones")
{
    auto t = test_cone(product_of_simplices({2, 3}));
    CHECK(t.inequalities.size() == 5);
    auto v = dd_convert(t.cone());
    CHECK(v.lineality.empty());
    CHECK(v.rays.size() == 5);
    CHECK(test_cone(grid(2, 2)).inequalities.empty());
}

TEST_CASE("base_node")
{
    auto p = product_of_simplices({2, 2});
    Engine ep(p);
    auto b = ep.base_node();
    CHECK(p.label(b.lineup.at(0)) == "(2,2)");
    CHECK(b.rays == dd_convert(test_cone(p).cone()));

    Engine ec(hypercube(3));
    CHECK(ec.config().label(ec.base_node().lineup.at(0)) == "{1,2,3}");

    auto s = product_of_simplices({3});
    CHECK(s.label(Engine(s).base_node().lineup.at(0)) == "(3)");

    CHECK_THROWS_AS(Engine(grid(2, 2)).base_node(), std::domain_error);
}

TEST_CASE("extend")
{
    SUBCASE("square under the product order")
    {
        Engine e(hypercube(2, HypercubeOrder::product));
        auto n = walk(e, {"{1,2}"});
        auto cand = e.candidates(n);
        std::vector<std::string> labels;
        for (auto i : cand)
            labels.push_back(e.config().label(i));
        CHECK(labels == std::vector<std::string>{"{1}", "{2}"});
        auto good = e.extend(n, e.config().index_of("{2}"));
        REQUIRE(good);
        CHECK(good->rays.rays == std::vector<IntVector>{ivec({0, 1}), ivec({1, 1})});
        // y1 >= y2 inside y1 <= y2: empty interior
        CHECK_FALSE(e.extend(n, e.config().index_of("{1}")));
    }
    SUBCASE("square under the Gale order offers one candidate")
    {
        Engine e(hypercube(2));
        auto n = walk(e, {"{1,2}"});
        CHECK(e.candidates(n) == std::vector<std::size_t>{0b10});
    }
    SUBCASE("cube at depth four splits along y3 = y1 + y2")
    {
        Engine e(hypercube(3));
        auto n = walk(e, {"{1,2,3}", "{2,3}", "{1,3}"});
        auto cand = e.candidates(n);
        std::set<std::string> labels;
        for (auto i : cand)
            labels.insert(e.config().label(i));
        CHECK(labels == std::set<std::string>{"{3}", "{1,2}"});
        auto a = e.extend(n, e.config().index_of("{3}"));
        auto b = e.extend(n, e.config().index_of("{1,2}"));
        REQUIRE(a);
        REQUIRE(b);
        CHECK(in_cone_strictly(*a, vec({1, 2, 4})));
        CHECK(in_cone_strictly(*b, vec({2, 3, 4})));
    }
}

TEST_CASE("enumerate counts")
{
    CHECK(Engine(product_of_simplices({2, 3})).enumerate(6).count == 5);
    CHECK(Engine(product_of_simplices({3, 3})).enumerate(9).count == 36);
    CHECK(Engine(product_of_simplices({2, 2, 2})).enumerate(8).count == 12);
    CHECK(Engine(product_of_simplices({2, 5})).enumerate(10).count == 42);
    CHECK(Engine(product_of_simplices({4})).enumerate(4).count == 1);
}

TEST_CASE("extract_rays")
{
    auto sq = hypercube(2);
    auto fan = Engine(sq).enumerate(4).fan;
    CHECK(extract_rays(fan, sq) == std::vector<IntVector>{ivec({0, 1}), ivec({1, 1})});

    auto c3 = hypercube(3);
    auto fan1 = Engine(c3).enumerate(1).fan;
    CHECK(extract_rays(fan1, c3) == dd_convert(test_cone(c3).cone()).rays);
}

TEST_CASE("certify_ray")
{
    auto c = hypercube(3);
    CHECK(certify_ray(ivec({1, 1, 1}), c, 8));
    CHECK(certify_ray(ivec({0, 0, 1}), c, 8));
    // walls of the chamber that are not facets of the cube itself
    CHECK(certify_ray(ivec({0, 0, 1}), c, 1));
    CHECK_FALSE(certify_ray(ivec({0, 1, 1}), c, 1));
    CHECK_FALSE(certify_ray(ivec({1, 1, 1}), c, 1));
    CHECK_FALSE(certify_ray(ivec({0, 0, 0}), c, 8));
}

TEST_CASE("assemble_hrep")
{
    auto sq = hypercube(2);
    auto rows = assemble_hrep(sq, 4, {ivec({1, 1}), ivec({0, 1})});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].y == ivec({0, 1}));
    CHECK(rows[0].s == vec({1, 1, -1, -1}));
    CHECK(rows[1].y == ivec({1, 1}));
    CHECK(rows[1].s == vec({2, 0, 0, -2}));

    auto p = product_of_simplices({2, 2});
    auto prow = assemble_hrep(p, 4, {});
    REQUIRE(prow.size() == 2);
    CHECK(prow[0].equality);
    CHECK(prow[0].s == vec({1, 1, 1, 1}));
    CHECK(hrep_to_csv(prow, 4, 4).find("-1,-1,0,0,-1,-1,-1,-1,0\n") != std::string::npos);
}

TEST_CASE("expand_orbits")
{
    auto c3 = hypercube(3);
    auto e3 = expand_orbits(Engine(c3).enumerate(8).fan, c3);
    CHECK(e3.orbit_count == 2);
    CHECK(e3.total_count == 96);

    auto s = product_of_simplices({3});
    auto es = expand_orbits(Engine(s).enumerate(3).fan, s, WeightVector::linear(3));
    CHECK(es.total_count == 6);
    CHECK(es.vertices.size() == 6);

    auto sq = hypercube(2);
    CHECK(expand_orbits(Engine(sq).enumerate(4).fan, sq).total_count == 8);
    CHECK_THROWS_AS(expand_orbits(Engine(c3).enumerate(8).fan, c3, std::nullopt, 10), std::length_error);
}

TEST_CASE("property: interior points induce the node lineup")
{
    for (const auto& c : small_family())
        for (std::size_t r : {std::size_t(1), std::size_t(2), c.size()}) {
            auto fan = Engine(c).enumerate(r).fan;
            for (const auto& node : fan.nodes) {
                auto y = interior_point(Cone(c.dim(), Matrix(c.dim()), [&] {
                    Matrix m(c.dim());
                    for (const auto& a : node.ineqs)
                        m.push_back(to_rational(a));
                    return m;
                }()));
                CHECK(ranking_of(y, c, r) == lineup_ranking(node.lineup, c));
            }
        }
}

TEST_CASE("property: random functionals land in exactly one node cone")
{
    std::mt19937 rng(29);
    for (const auto& c : small_family()) {
        if (c.size() > 9)
            continue;
        Engine e(c);
        for (std::size_t r : {std::size_t(2), c.size()}) {
            auto fan = e.enumerate(r).fan;
            for (int trial = 0; trial < 1000; ++trial) {
                Vector y = random_in_test_cone(rng, e.test());
                Lineup l;
                try {
                    l = induced_lineup(y, c, r);
                } catch (const std::domain_error&) {
                    continue;
                }
                std::size_t hits = 0;
                for (const auto& node : fan.nodes)
                    if (in_cone(node, y)) {
                        ++hits;
                        CHECK(node.lineup == l);
                    }
                CHECK(hits == 1);
            }
        }
    }
}

TEST_CASE("property: refinement chain")
{
    for (const auto& c : small_family()) {
        Engine e(c);
        auto coarse = e.enumerate(1).fan;
        for (std::size_t r = 2; r <= c.size(); ++r) {
            auto fine = e.enumerate(r).fan;
            for (const auto& node : fine.nodes) {
                std::size_t parents = 0;
                for (const auto& p : coarse.nodes) {
                    bool inside = true;
                    for (const auto& ray : node.rays.rays)
                        inside = inside && in_cone(p, to_rational(ray));
                    for (const auto& l : node.rays.lineality) {
                        Vector neg = to_rational(l);
                        for (auto& x : neg)
                            x = -x;
                        inside = inside && in_cone(p, to_rational(l)) && in_cone(p, neg);
                    }
                    if (inside) {
                        ++parents;
                        CHECK(std::equal(p.lineup.begin(), p.lineup.end(), node.lineup.begin()));
                    }
                }
                CHECK(parents == 1);
            }
            coarse = std::move(fine);
        }
    }
}

TEST_CASE("property: rays of partial test fans are rays of the sweep test fan")
{
    for (const auto& c : {hypercube(3), product_of_simplices({2, 3})}) {
        Engine e(c);
        auto full = e.enumerate(c.size()).fan;
        std::set<IntVector> final_rays;
        for (const auto& node : full.nodes)
            final_rays.insert(node.rays.rays.begin(), node.rays.rays.end());
        for (std::size_t r = 1; r < c.size(); ++r)
            for (const auto& node : e.enumerate(r).fan.nodes)
                for (const auto& ray : node.rays.rays)
                    CHECK(final_rays.count(ray) == 1);
    }
}

TEST_CASE("property: emitted inequalities are valid and tight on the expanded vertices")
{
    for (const auto& c : small_family()) {
        for (std::size_t r : {std::size_t(2), c.size()}) {
            auto fan = Engine(c).enumerate(r).fan;
            auto w = WeightVector::linear(r);
            std::vector<Vector> vertices;
            if (c.symmetry().kind() == Symmetry::Kind::none) {
                // no symmetry: the fan already covers every lineup
                for (const auto& node : fan.nodes)
                    vertices.push_back(occupation_vector(node.lineup, w, c));
            } else {
                vertices = expand_orbits(fan, c, w).vertices;
            }
            std::vector<IntVector> certified;
            for (const auto& y : extract_rays(fan, c))
                if (certify_ray(y, c, r))
                    certified.push_back(y);
            for (const auto& row : assemble_hrep(c, r, certified)) {
                Rational rhs = row.constant;
                for (std::size_t i = 0; i < r; ++i)
                    rhs += w[i] * row.s[i];
                bool tight = false;
                for (const auto& x : vertices) {
                    Rational lhs = dot(row.y, x);
                    if (row.equality)
                        CHECK(lhs == rhs);
                    else
                        CHECK(lhs <= rhs);
                    tight = tight || lhs == rhs;
                }
                CHECK(tight);
            }
        }
    }
}

TEST_CASE("enumeration is independent of the thread count")
{
    auto c = product_of_simplices({3, 4});
    Engine e(c);
    EnumerateOptions one, three;
    one.threads = 1;
    three.threads = 3;
    auto a = e.enumerate(12, one);
    auto b = e.enumerate(12, three);
    CHECK(a.count == 295);
    CHECK(fan_to_json(a.fan, c) == fan_to_json(b.fan, c));

    EnumerateOptions counting;
    counting.count_only = true;
    counting.threads = 2;
    std::vector<Lineup> streamed;
    counting.on_node = [&](const LineupNode& n) { streamed.push_back(n.lineup); };
    auto cnt = e.enumerate(12, counting);
    CHECK(cnt.count == 295);
    CHECK(cnt.fan.nodes.empty());
    REQUIRE(streamed.size() == 295);
    for (std::size_t i = 0; i < streamed.size(); ++i)
        CHECK(streamed[i] == a.fan.nodes[i].lineup);
}

TEST_CASE("caps, checkpoint and resume")
{
    auto c = product_of_simplices({3, 4});
    Engine e(c);
    auto dir = std::filesystem::temp_directory_path() / "lineup_checkpoint_test";
    std::filesystem::create_directories(dir);
    auto path = (dir / "frontier.json").string();

    for (bool count_only : {true, false}) {
        EnumerateOptions capped;
        capped.count_only = count_only;
        capped.node_cap = 2000;
        capped.checkpoint_path = path;
        auto partial = e.enumerate(12, capped);
        CHECK_FALSE(partial.complete);
        CHECK(partial.count < 295);

        EnumerateOptions resume;
        resume.count_only = count_only;
        resume.resume_path = path;
        resume.checkpoint_path = path;
        auto rest = e.enumerate(12, resume);
        CHECK(rest.complete);
        CHECK(rest.count == 295);
        if (!count_only)
            CHECK(fan_to_json(rest.fan, c) == fan_to_json(e.enumerate(12).fan, c));
    }

    EnumerateOptions wrong;
    wrong.resume_path = path;
    CHECK_THROWS_AS(e.enumerate(11, wrong), std::invalid_argument);
    CHECK_THROWS_AS(Engine(product_of_simplices({4, 3})).enumerate(12, wrong), std::invalid_argument);
    std::filesystem::remove_all(dir);
}
