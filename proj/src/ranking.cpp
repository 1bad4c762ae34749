#include "lineup/ranking.hpp"

#include "lineup/lp.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lineup {

std::size_t Ranking::level_blocks() const
{
    std::size_t total = 0;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        total += blocks[j].size();
        if (total >= r)
            return j + 1;
    }
    return blocks.size();
}

Ranking validated(Ranking s, const PointConfiguration& c)
{
    if (s.r == 0 || s.r > c.size())
        throw std::invalid_argument("ranking: r out of range");
    if (!s.blocks.empty() && s.blocks.back().empty())
        s.blocks.pop_back();
    std::vector<int> seen(c.size(), 0);
    for (auto& b : s.blocks) {
        if (b.empty())
            throw std::invalid_argument("ranking: empty block");
        std::sort(b.begin(), b.end());
        for (auto i : b) {
            if (i >= c.size())
                throw std::invalid_argument("ranking: index out of range");
            if (seen[i]++)
                throw std::invalid_argument("ranking: point appears twice");
        }
    }
    for (auto x : seen)
        if (!x)
            throw std::invalid_argument("ranking: blocks do not cover every point");
    if (s.blocks.size() > s.level_blocks() + 1)
        throw std::invalid_argument("ranking: more than one block after the first r points");
    return s;
}

Ranking ranking_of(const Vector& y, const PointConfiguration& c, std::size_t r)
{
    if (r == 0 || r > c.size())
        throw std::invalid_argument("ranking_of: r out of range");
    Vector vals = values_of(y, c);
    std::map<Rational, std::vector<std::size_t>, std::greater<>> levels;
    for (std::size_t i = 0; i < vals.size(); ++i)
        levels[vals[i]].push_back(i);
    Ranking s;
    s.r = r;
    std::size_t total = 0;
    std::vector<std::size_t> rest;
    for (auto& [v, idx] : levels) {
        if (total >= r)
            rest.insert(rest.end(), idx.begin(), idx.end());
        else {
            total += idx.size();
            s.blocks.push_back(idx);
        }
    }
    if (!rest.empty()) {
        std::sort(rest.begin(), rest.end());
        s.blocks.push_back(std::move(rest));
    }
    return s;
}

Ranking ranking_of(const IntVector& y, const PointConfiguration& c, std::size_t r)
{
    return ranking_of(to_rational(y), c, r);
}

Ranking lineup_ranking(const Lineup& l, const PointConfiguration& c)
{
    Ranking s;
    s.r = l.size();
    std::vector<bool> used(c.size(), false);
    for (auto i : l) {
        s.blocks.push_back({i});
        used.at(i) = true;
    }
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!used[i])
            rest.push_back(i);
    if (!rest.empty())
        s.blocks.push_back(std::move(rest));
    return validated(std::move(s), c);
}

namespace {

// Variables: y (free, dim), then one nonnegative gap per consecutive pair of
// level representatives, then one per rest element.
struct GapSystem {
    std::size_t dim = 0;
    std::size_t gaps = 0;
    Matrix rows;
    Vector rhs;
};

std::size_t transversal(const std::vector<std::size_t>& block, const PointConfiguration& c)
{
    std::size_t best = block.front();
    for (auto i : block)
        if (c.label(i) < c.label(best))
            best = i;
    return best;
}

GapSystem gap_system(const Ranking& s, const PointConfiguration& c)
{
    GapSystem g;
    g.dim = c.dim();
    const std::size_t m = s.level_blocks();
    std::vector<std::size_t> reps;
    for (std::size_t j = 0; j < m; ++j)
        reps.push_back(transversal(s.blocks[j], c));
    const std::size_t rest = s.has_rest() ? s.blocks.back().size() : 0;
    g.gaps = (m - 1) + rest;
    const std::size_t nv = g.dim + g.gaps;
    g.rows = Matrix(nv);

    auto diff_row = [&](std::size_t a, std::size_t b) {
        Vector row(nv, 0);
        for (std::size_t i = 0; i < g.dim; ++i)
            row[i] = c.point(a).coords[i] - c.point(b).coords[i];
        return row;
    };
    for (std::size_t j = 0; j < m; ++j)
        for (auto a : s.blocks[j])
            if (a != reps[j]) {
                g.rows.push_back(diff_row(a, reps[j]));
                g.rhs.push_back(0);
            }
    std::size_t k = 0;
    for (std::size_t j = 0; j + 1 < m; ++j, ++k) {
        Vector row = diff_row(reps[j], reps[j + 1]);
        row[g.dim + k] = -1;
        g.rows.push_back(std::move(row));
        g.rhs.push_back(0);
    }
    if (rest)
        for (auto b : s.blocks.back()) {
            Vector row = diff_row(reps[m - 1], b);
            row[g.dim + k] = -1;
            g.rows.push_back(std::move(row));
            g.rhs.push_back(0);
            ++k;
        }
    return g;
}

LpProblem base_problem(const GapSystem& g)
{
    LpProblem p;
    const std::size_t nv = g.dim + g.gaps;
    p.objective.assign(nv, 0);
    p.equalities = g.rows;
    p.rhs = g.rhs;
    p.nonnegative.assign(nv, false);
    for (std::size_t k = 0; k < g.gaps; ++k)
        p.nonnegative[g.dim + k] = true;
    return p;
}

// maximize gap t, optionally with gap t <= 1 (via a slack variable).
LpResult gap_lp(const GapSystem& g, std::size_t t, bool capped)
{
    LpProblem p = base_problem(g);
    const std::size_t nv = g.dim + g.gaps;
    p.objective[g.dim + t] = 1;
    if (capped) {
        for (auto& row : p.equalities.rows)
            row.push_back(0);
        p.equalities.cols = nv + 1;
        Vector cap(nv + 1, 0);
        cap[g.dim + t] = 1;
        cap[nv] = 1;
        p.equalities.push_back(std::move(cap));
        p.rhs.push_back(1);
        p.objective.push_back(0);
        p.nonnegative.push_back(true);
    }
    return lp_solve(p);
}

}  // namespace

Realizability is_realizable(const Ranking& input, const PointConfiguration& c)
{
    const Ranking s = validated(input, c);
    const GapSystem g = gap_system(s, c);
    Realizability out;
    Vector y(c.dim(), 0);
    for (std::size_t t = 0; t < g.gaps; ++t) {
        LpResult res = gap_lp(g, t, true);
        if (res.status != LpStatus::optimal || res.value <= 0)
            return out;
        for (std::size_t i = 0; i < c.dim(); ++i)
            y[i] += res.witness[i];
    }
    if (g.gaps == 0) {
        // A single block: every point ties, y = 0 works.
        LpResult res = lp_solve(base_problem(g));
        if (res.status == LpStatus::infeasible)
            return out;
    }
    if (ranking_of(y, c, s.r) != s)
        throw std::logic_error("is_realizable: certificate does not induce the ranking");
    out.realizable = true;
    out.certificate = std::move(y);
    return out;
}

bool is_realizable_uncapped(const Ranking& input, const PointConfiguration& c)
{
    const Ranking s = validated(input, c);
    const GapSystem g = gap_system(s, c);
    for (std::size_t t = 0; t < g.gaps; ++t) {
        LpResult res = gap_lp(g, t, false);
        if (res.status == LpStatus::infeasible)
            return false;
        if (res.status == LpStatus::optimal && res.value <= 0)
            return false;
    }
    return true;
}

bool is_uncoarsenable(const Ranking& input, const PointConfiguration& c)
{
    const Ranking s = validated(input, c);
    if (!is_realizable(s, c).realizable)
        throw std::invalid_argument("is_uncoarsenable: ranking is not realizable");
    const GapSystem g = gap_system(s, c);
    for (std::size_t t = 0; t < g.gaps; ++t) {
        LpProblem p = base_problem(g);
        Vector pin(g.dim + g.gaps, 0);
        pin[g.dim + t] = 1;
        p.equalities.push_back(std::move(pin));
        p.rhs.push_back(0);
        for (std::size_t k = 0; k < g.gaps; ++k)
            p.objective[g.dim + k] = 1;
        LpResult res = lp_solve(p);
        if (res.status != LpStatus::optimal || res.value != 0)
            return false;
    }
    return true;
}

std::string ranking_to_json(const Ranking& s, const PointConfiguration& c)
{
    nlohmann::json doc;
    doc["r"] = s.r;
    doc["blocks"] = nlohmann::json::array();
    for (const auto& b : s.blocks) {
        nlohmann::json jb = nlohmann::json::array();
        for (auto i : b)
            jb.push_back(c.label(i));
        doc["blocks"].push_back(jb);
    }
    return doc.dump();
}

Ranking ranking_from_json(const std::string& text, const PointConfiguration& c)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("ranking JSON: ") + e.what());
    }
    Ranking s;
    s.r = doc.at("r").get<std::size_t>();
    for (const auto& jb : doc.at("blocks")) {
        std::vector<std::size_t> b;
        for (const auto& l : jb)
            b.push_back(c.index_of(l.get<std::string>()));
        s.blocks.push_back(std::move(b));
    }
    return validated(std::move(s), c);
}

}  // namespace lineup
