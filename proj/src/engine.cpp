#include "lineup/engine.hpp"

#include "lineup/detail/ray_cone.hpp"
#include "lineup/hypercube.hpp"
#include "lineup/ranking.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <deque>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace lineup {

using detail::ArithmeticOverflow;
using detail::RayCone;

Cone TestCone::cone() const
{
    Matrix ineq(dim);
    for (const auto& a : inequalities)
        ineq.push_back(to_rational(a));
    return Cone(dim, Matrix(dim), std::move(ineq));
}

TestCone test_cone(const PointConfiguration& c)
{
    switch (c.kind()) {
    case ConfigKind::hypercube: return fundamental_chamber(c.dim());
    case ConfigKind::product_of_simplices: {
        TestCone t;
        t.dim = c.dim();
        std::size_t off = 0;
        for (auto d : c.factor_dims()) {
            IntVector a(t.dim, 0);
            a[off] = 1;
            t.inequalities.push_back(a);
            for (std::size_t i = 1; i < d; ++i) {
                IntVector b(t.dim, 0);
                b[off + i] = 1;
                b[off + i - 1] = -1;
                t.inequalities.push_back(b);
            }
            off += d;
        }
        return t;
    }
    case ConfigKind::generic: break;
    }
    TestCone t;
    t.dim = c.dim();
    return t;
}

Lineup induced_lineup(const Vector& y, const PointConfiguration& c, std::size_t r)
{
    if (r == 0 || r > c.size())
        throw std::invalid_argument("induced_lineup: r out of range");
    Vector vals = values_of(y, c);
    Lineup l(c.size());
    std::iota(l.begin(), l.end(), 0);
    std::stable_sort(l.begin(), l.end(), [&](auto a, auto b) { return vals[a] > vals[b]; });
    for (std::size_t i = 0; i < r && i + 1 < l.size(); ++i)
        if (vals[l[i]] == vals[l[i + 1]])
            throw std::domain_error("induced_lineup: functional is not generic");
    l.resize(r);
    return l;
}

namespace {

template <class Int>
struct State {
    RayCone<Int> cone;
    UpperIdeal ideal;
    Lineup lineup;
};

template <class Int>
std::vector<Int> to_int(const IntVector& v)
{
    std::vector<Int> out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(detail::from_integer<Int>(x));
    return out;
}

template <class Int>
IntVector to_integers(std::span<const Int> v)
{
    IntVector out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(detail::to_integer(x));
    return out;
}

template <class Int>
class Search {
public:
    Search(const PointConfiguration& c, const TestCone& t, std::atomic<std::uint64_t>* calls = nullptr)
        : c_(c), t_(t), calls_(calls)
    {
        for (const auto& p : c.integer_points())
            pts_.push_back(to_int<Int>(p));
    }

    State<Int> root() const
    {
        State<Int> s{RayCone<Int>(t_.dim), UpperIdeal(c_.poset()), {}};
        for (const auto& a : t_.inequalities)
            s.cone.add_inequality(to_int<Int>(a));
        s.cone.drop_nonfacet_rows();
        return s;
    }

    bool extend(const State<Int>& s, std::size_t cand, State<Int>& out) const
    {
        if (calls_)
            calls_->fetch_add(1, std::memory_order_relaxed);
        if (!s.ideal.addable(cand))
            return false;
        const Poset& poset = *c_.poset();
        const std::size_t n = pts_.size();
        const std::size_t d = t_.dim;
        std::vector<std::size_t> others;
        for (std::size_t j = 0; j < n; ++j)
            if (j != cand && !s.ideal.contains(j) && !poset.less(j, cand))
                others.push_back(j);
        // Cheap rejection against the parent before copying anything.
        std::vector<Int> h(d);
        auto fill = [&](std::size_t j) {
            for (std::size_t i = 0; i < d; ++i)
                h[i] = detail::narrow_sub(pts_[cand][i], pts_[j][i]);
        };
        for (auto j : others) {
            fill(j);
            if (!s.cone.meets_open_halfspace(h))
                return false;
        }
        out.cone = s.cone;
        for (auto j : others) {
            fill(j);
            if (!out.cone.meets_open_halfspace(h))
                return false;
            out.cone.add_inequality(h);
        }
        out.cone.drop_nonfacet_rows();
        out.ideal = s.ideal.add(cand);
        out.lineup = s.lineup;
        out.lineup.push_back(cand);
        return true;
    }

    State<Int> replay(const Lineup& l) const
    {
        State<Int> s = root();
        for (auto e : l) {
            State<Int> next;
            next.ideal = s.ideal;
            if (!extend(s, e, next))
                throw std::invalid_argument("lineup is not realizable over the test cone");
            s = std::move(next);
        }
        return s;
    }

    LineupNode node(const State<Int>& s, bool with_geometry) const
    {
        LineupNode n;
        n.lineup = s.lineup;
        n.ideal = s.ideal.members();
        if (!with_geometry)
            return n;
        std::vector<IntVector> rays, lin;
        for (std::size_t i = 0; i < s.cone.num_rays(); ++i)
            rays.push_back(to_integers<Int>(s.cone.ray(i)));
        for (std::size_t i = 0; i < s.cone.lineality_dim(); ++i)
            lin.push_back(to_integers<Int>(s.cone.lineality(i)));
        n.rays = canonicalize(std::move(rays), std::move(lin), t_.dim);
        for (std::size_t i = 0; i < s.cone.num_rows(); ++i)
            n.ineqs.push_back(primitive(to_integers<Int>(s.cone.row(i))));
        std::sort(n.ineqs.begin(), n.ineqs.end());
        n.ineqs.erase(std::unique(n.ineqs.begin(), n.ineqs.end()), n.ineqs.end());
        return n;
    }

private:
    const PointConfiguration& c_;
    const TestCone& t_;
    std::atomic<std::uint64_t>* calls_;
    std::vector<std::vector<Int>> pts_;
};

struct SubtreeResult {
    bool done = false;
    std::uint64_t count = 0;
    std::vector<LineupNode> nodes;
};

struct Frontier {
    Lineup lineup;
    Bitset ideal;
};

struct RunControl {
    std::atomic<std::uint64_t> calls{0};
    std::atomic<bool> stop{false};
    std::uint64_t node_cap = 0;
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;

    bool should_stop()
    {
        if (stop.load(std::memory_order_relaxed))
            return true;
        if ((node_cap && calls.load(std::memory_order_relaxed) >= node_cap) ||
            (has_deadline && std::chrono::steady_clock::now() >= deadline)) {
            stop = true;
            return true;
        }
        return false;
    }
};

template <class Int>
struct SubtreeRunner {
    const Search<Int>& search;
    std::size_t r;
    bool keep_nodes;
    bool with_geometry;
    RunControl& control;
    SubtreeResult& out;
    std::uint64_t ticks = 0;

    // Returns false when interrupted by a cap.
    bool dfs(const State<Int>& s)
    {
        if (s.lineup.size() == r) {
            ++out.count;
            if (keep_nodes)
                out.nodes.push_back(search.node(s, with_geometry));
            return true;
        }
        if ((++ticks & 63u) == 0 && control.should_stop())
            return false;
        State<Int> child;
        for (auto cand : s.ideal.candidates()) {
            child.ideal = s.ideal;
            if (search.extend(s, cand, child) && !dfs(child))
                return false;
        }
        return true;
    }
};

template <class Int>
bool run_subtree(const PointConfiguration& c, const TestCone& t, const Frontier& f, std::size_t r, bool keep_nodes,
                 bool with_geometry, RunControl& control, SubtreeResult& out)
{
    Search<Int> search(c, t, &control.calls);
    State<Int> s = search.replay(f.lineup);
    SubtreeRunner<Int> runner{search, r, keep_nodes, with_geometry, control, out};
    return runner.dfs(s);
}

template <class Int>
std::vector<Frontier> breadth_first(const PointConfiguration& c, const TestCone& t, std::size_t r, std::size_t target,
                                    std::atomic<std::uint64_t>* calls)
{
    Search<Int> search(c, t, calls);
    std::vector<State<Int>> level{search.root()};
    while (!level.empty() && level.front().lineup.size() < r && level.size() < target) {
        std::vector<State<Int>> next;
        for (const auto& s : level)
            for (auto cand : s.ideal.candidates()) {
                State<Int> child;
                child.ideal = s.ideal;
                if (search.extend(s, cand, child))
                    next.push_back(std::move(child));
            }
        level = std::move(next);
    }
    std::vector<Frontier> out;
    for (const auto& s : level)
        out.push_back({s.lineup, s.ideal.members()});
    return out;
}

std::string mask_hex(const Bitset& b)
{
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (std::size_t w = b.words().size(); w-- > 0;)
        for (int k = 15; k >= 0; --k)
            s += digits[(b.words()[w] >> (4 * k)) & 15u];
    return s;
}

nlohmann::json int_array(const IntVector& v)
{
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) {
        if (x.fits_slong_p())
            a.push_back(x.get_si());
        else
            a.push_back(x.get_str());
    }
    return a;
}

nlohmann::json labels_json(const Lineup& l, const PointConfiguration& c)
{
    nlohmann::json a = nlohmann::json::array();
    for (auto i : l)
        a.push_back(c.label(i));
    return a;
}

Lineup labels_from_json(const nlohmann::json& a, const PointConfiguration& c)
{
    Lineup l;
    for (const auto& x : a)
        l.push_back(c.index_of(x.get<std::string>()));
    return l;
}

constexpr const char* frontier_format = "lineup-forge-frontier";
constexpr int frontier_version = 1;

void write_checkpoint(const std::string& path, const PointConfiguration& c, std::size_t r, bool count_only,
                      const std::vector<Frontier>& frontier, const std::vector<SubtreeResult>& results)
{
    nlohmann::json doc;
    doc["format"] = frontier_format;
    doc["version"] = frontier_version;
    doc["config"] = c.name();
    doc["points"] = c.size();
    doc["r"] = r;
    doc["count_only"] = count_only;
    doc["nodes"] = nlohmann::json::array();
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        nlohmann::json n;
        n["lineup"] = labels_json(frontier[i].lineup, c);
        n["ideal"] = mask_hex(frontier[i].ideal);
        n["done"] = results[i].done;
        n["count"] = results[i].count;
        if (results[i].done && !count_only) {
            n["results"] = nlohmann::json::array();
            for (const auto& node : results[i].nodes)
                n["results"].push_back(labels_json(node.lineup, c));
        }
        doc["nodes"].push_back(n);
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            throw std::runtime_error("cannot write checkpoint " + tmp);
        out << doc.dump() << '\n';
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot move checkpoint into place at " + path);
}

struct ResumeData {
    std::vector<Frontier> frontier;
    std::vector<SubtreeResult> results;
    std::vector<std::vector<Lineup>> result_lineups;
};

ResumeData read_checkpoint(const std::string& path, const PointConfiguration& c, std::size_t r, bool count_only)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read checkpoint " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("checkpoint: ") + e.what());
    }
    if (doc.value("format", "") != frontier_format || doc.value("version", 0) != frontier_version)
        throw std::invalid_argument("checkpoint: unknown format or version");
    if (doc.at("config").get<std::string>() != c.name() || doc.at("points").get<std::size_t>() != c.size() ||
        doc.at("r").get<std::size_t>() != r)
        throw std::invalid_argument("checkpoint: written for a different configuration or r");
    if (!count_only && doc.at("count_only").get<bool>())
        throw std::invalid_argument("checkpoint: count-only checkpoint cannot resume a full enumeration");
    ResumeData data;
    for (const auto& n : doc.at("nodes")) {
        Frontier f;
        f.lineup = labels_from_json(n.at("lineup"), c);
        data.frontier.push_back(std::move(f));
        SubtreeResult res;
        res.done = n.at("done").get<bool>();
        res.count = n.at("count").get<std::uint64_t>();
        std::vector<Lineup> ls;
        if (res.done && n.contains("results"))
            for (const auto& l : n.at("results"))
                ls.push_back(labels_from_json(l, c));
        data.results.push_back(std::move(res));
        data.result_lineups.push_back(std::move(ls));
    }
    return data;
}

}  // namespace

// ------------------------------------------------------------------- engine

Engine::Engine(std::shared_ptr<const PointConfiguration> c, TestCone t) : config_(std::move(c)), test_(std::move(t))
{
    if (!config_->poset())
        throw std::invalid_argument("engine: configuration has no candidate poset");
    if (test_.dim != config_->dim())
        throw std::invalid_argument("engine: test cone dimension mismatch");
}

Engine::Engine(const PointConfiguration& c) : Engine(std::make_shared<const PointConfiguration>(c), test_cone(c)) {}

LineupNode Engine::root() const
{
    Search<Integer> s(*config_, test_);
    return s.node(s.root(), true);
}

LineupNode Engine::base_node() const
{
    Search<Integer> s(*config_, test_);
    auto root = s.root();
    std::vector<LineupNode> found;
    for (auto cand : root.ideal.candidates()) {
        State<Integer> child;
        child.ideal = root.ideal;
        if (s.extend(root, cand, child))
            found.push_back(s.node(child, true));
    }
    if (found.size() != 1)
        throw std::domain_error("base_node: no unique top point over the test cone");
    return found.front();
}

std::vector<std::size_t> Engine::candidates(const LineupNode& node) const
{
    return UpperIdeal::from_members(config_->poset(), node.ideal).candidates();
}

std::optional<LineupNode> Engine::extend(const LineupNode& node, std::size_t candidate) const
{
    Search<Integer> s(*config_, test_);
    auto state = s.replay(node.lineup);
    State<Integer> child;
    child.ideal = state.ideal;
    if (!s.extend(state, candidate, child))
        return std::nullopt;
    return s.node(child, true);
}

EnumerateResult Engine::enumerate(std::size_t r, const EnumerateOptions& opt) const
{
    const auto& c = *config_;
    if (r == 0 || r > c.size())
        throw std::invalid_argument("enumerate: r out of range");
    std::size_t threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());

    RunControl control;
    control.node_cap = opt.node_cap;
    if (opt.time_cap.count() > 0) {
        control.has_deadline = true;
        control.deadline = std::chrono::steady_clock::now() + opt.time_cap;
    }

    const bool keep_nodes = !opt.count_only || static_cast<bool>(opt.on_node);
    const bool with_geometry = !opt.count_only;

    std::vector<Frontier> frontier;
    std::vector<SubtreeResult> results;
    std::vector<std::vector<Lineup>> resumed;
    if (!opt.resume_path.empty()) {
        auto data = read_checkpoint(opt.resume_path, c, r, opt.count_only);
        frontier = std::move(data.frontier);
        results = std::move(data.results);
        resumed = std::move(data.result_lineups);
        Search<Integer> s(c, test_);
        for (auto& f : frontier)
            f.ideal = s.replay(f.lineup).ideal.members();
    } else {
        const std::size_t target = std::max<std::size_t>(256, 64 * threads);
        try {
            frontier = breadth_first<std::int64_t>(c, test_, r, target, &control.calls);
        } catch (const ArithmeticOverflow&) {
            frontier = breadth_first<Integer>(c, test_, r, target, &control.calls);
        }
        results.resize(frontier.size());
        resumed.resize(frontier.size());
    }

    // Subtrees finished in an earlier run only carry lineups; rebuild their
    // nodes when the caller wants them.
    for (std::size_t i = 0; i < frontier.size(); ++i)
        if (results[i].done && keep_nodes && results[i].nodes.empty() && !resumed[i].empty()) {
            Search<Integer> s(c, test_);
            for (const auto& l : resumed[i])
                results[i].nodes.push_back(s.node(s.replay(l), with_geometry));
        }

    std::mutex io;
    auto last_write = std::chrono::steady_clock::now();
    auto checkpoint = [&](bool force) {
        if (opt.checkpoint_path.empty())
            return;
        std::lock_guard lock(io);
        auto now = std::chrono::steady_clock::now();
        if (!force && now - last_write < std::chrono::seconds(5))
            return;
        last_write = now;
        write_checkpoint(opt.checkpoint_path, c, r, opt.count_only, frontier, results);
    };
    checkpoint(true);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    auto worker = [&] {
        try {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= frontier.size() || control.should_stop())
                    return;
                if (results[i].done)
                    continue;
                SubtreeResult local;
                bool finished;
                try {
                    finished = run_subtree<std::int64_t>(c, test_, frontier[i], r, keep_nodes, with_geometry,
                                                         control, local);
                } catch (const ArithmeticOverflow&) {
                    local = SubtreeResult{};
                    finished = run_subtree<Integer>(c, test_, frontier[i], r, keep_nodes, with_geometry, control,
                                                    local);
                }
                if (!finished)
                    return;
                local.done = true;
                {
                    std::lock_guard lock(io);
                    results[i] = std::move(local);
                }
                checkpoint(false);
            }
        } catch (...) {
            std::lock_guard lock(io);
            if (!failure)
                failure = std::current_exception();
            control.stop = true;
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t k = 0; k < threads; ++k)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    checkpoint(true);

    EnumerateResult out;
    out.fan.r = r;
    out.extend_calls = control.calls.load();
    for (auto& res : results) {
        if (!res.done) {
            out.complete = false;
            continue;
        }
        out.count += res.count;
        for (auto& node : res.nodes) {
            if (opt.on_node)
                opt.on_node(node);
            if (!opt.count_only)
                out.fan.nodes.push_back(std::move(node));
        }
    }
    return out;
}

// ---------------------------------------------------------- rays and H-rep

std::vector<IntVector> extract_rays(const LineupFan& fan, const PointConfiguration& c)
{
    std::set<IntVector> rays;
    for (const auto& node : fan.nodes)
        for (const auto& ray : node.rays.rays) {
            auto y = c.normalize_functional(ray);
            if (!is_zero(y))
                rays.insert(std::move(y));
        }
    return {rays.begin(), rays.end()};
}

bool certify_ray(const IntVector& y, const PointConfiguration& c, std::size_t r)
{
    auto s = ranking_of(y, c, r);
    if (s.blocks.size() < 2)
        return false;
    return is_uncoarsenable(s, c);
}

std::vector<InequalityRow> assemble_hrep(const PointConfiguration& c, std::size_t r,
                                         const std::vector<IntVector>& certified_rays)
{
    std::vector<InequalityRow> rows;
    for (const auto& y : certified_rays)
        rows.push_back({y, top_r_values(y, c, r), 0, false});
    for (const auto& l : c.lineality()) {
        Rational v = dot(l, c.point(0).coords);
        rows.push_back({l, Vector(r, v), 0, true});
    }
    sort_rows(rows);
    return rows;
}

void sort_rows(std::vector<InequalityRow>& rows)
{
    std::sort(rows.begin(), rows.end(), [](const InequalityRow& a, const InequalityRow& b) {
        if (a.equality != b.equality)
            return !a.equality;
        return a.y < b.y;
    });
}

OrbitExpansion expand_orbits(const LineupFan& fan, const PointConfiguration& c, const std::optional<WeightVector>& w,
                             std::size_t group_cap)
{
    if (w && w->size() != fan.r)
        throw std::invalid_argument("expand_orbits: weight length differs from r");
    auto group = c.symmetry().elements(group_cap);
    std::set<Lineup> seen;
    for (const auto& node : fan.nodes) {
        Vector y(c.dim(), 0);
        for (const auto& ray : node.rays.rays)
            for (std::size_t i = 0; i < c.dim(); ++i)
                y[i] += ray[i];
        for (const auto& g : group)
            seen.insert(induced_lineup(g.apply(y), c, fan.r));
    }
    OrbitExpansion out;
    out.orbit_count = fan.nodes.size();
    out.total_count = seen.size();
    out.lineups.assign(seen.begin(), seen.end());
    if (w)
        for (const auto& l : out.lineups)
            out.vertices.push_back(occupation_vector(l, *w, c));
    return out;
}

// ------------------------------------------------------------------ output

std::vector<InequalityRow> certified_hrep(const PointConfiguration& c, std::size_t r, std::size_t threads)
{
    EnumerateOptions eo;
    eo.threads = threads;
    auto fan = Engine(c).enumerate(r, eo).fan;
    std::vector<IntVector> certified;
    for (const auto& y : extract_rays(fan, c))
        if (certify_ray(y, c, r))
            certified.push_back(y);
    auto rows = assemble_hrep(c, r, certified);
    sort_rows(rows);
    return rows;
}

std::string fan_to_json(const LineupFan& fan, const PointConfiguration& c)
{
    nlohmann::json doc;
    doc["r"] = fan.r;
    doc["nodes"] = nlohmann::json::array();
    for (const auto& node : fan.nodes) {
        nlohmann::json n;
        n["lineup"] = labels_json(node.lineup, c);
        n["rays"] = nlohmann::json::array();
        for (const auto& ray : node.rays.rays)
            n["rays"].push_back(int_array(ray));
        if (!node.rays.lineality.empty()) {
            n["lineality"] = nlohmann::json::array();
            for (const auto& l : node.rays.lineality)
                n["lineality"].push_back(int_array(l));
        }
        n["ineqs"] = nlohmann::json::array();
        for (const auto& a : node.ineqs)
            n["ineqs"].push_back(int_array(a));
        doc["nodes"].push_back(n);
    }
    return doc.dump();
}

std::string hrep_to_json(const std::vector<InequalityRow>& rows, std::size_t r)
{
    nlohmann::json doc;
    doc["r"] = r;
    doc["rows"] = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json j;
        j["y"] = int_array(row.y);
        j["s"] = nlohmann::json::array();
        for (const auto& x : row.s)
            j["s"].push_back(format_rational(x));
        j["c"] = format_rational(row.constant);
        j["equality"] = row.equality;
        doc["rows"].push_back(j);
    }
    return doc.dump();
}

std::string hrep_to_csv(const std::vector<InequalityRow>& rows, std::size_t dim, std::size_t r)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < dim; ++i)
        out << "y_" << i + 1 << ',';
    for (std::size_t i = 0; i < r; ++i)
        out << "s_" << i + 1 << ',';
    out << "c\n";
    auto emit = [&](const IntVector& y, const Vector& s, const Rational& c) {
        for (const auto& x : y)
            out << format_integer(x) << ',';
        for (const auto& x : s)
            out << format_rational(x) << ',';
        out << format_rational(c) << '\n';
    };
    for (const auto& row : rows) {
        emit(row.y, row.s, row.constant);
        if (row.equality) {
            IntVector ny = row.y;
            for (auto& x : ny)
                x = -x;
            Vector ns = row.s;
            for (auto& x : ns)
                x = -x;
            emit(ny, ns, -row.constant);
        }
    }
    return out.str();
}

}  // namespace lineup
