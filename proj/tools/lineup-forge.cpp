#include "lineup/configuration.hpp"
#include "lineup/engine.hpp"
#include "lineup/hypercube.hpp"
#include "lineup/oracle.hpp"
#include "lineup/ranking.hpp"
#include "lineup/tableaux.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace lineup;
using nlohmann::json;

namespace {

// Bad input from the user: exit code 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        out.push_back(cur);
    return out;
}

std::size_t parse_size(const std::string& s)
{
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        throw ValidationError("not a nonnegative integer: '" + s + "'");
    }
    if (pos != s.size() || s.empty() || s[0] == '-')
        throw ValidationError("not a nonnegative integer: '" + s + "'");
    return static_cast<std::size_t>(v);
}

std::vector<std::size_t> parse_sizes(const std::string& s)
{
    std::vector<std::size_t> out;
    for (const auto& t : split(s, ','))
        out.push_back(parse_size(t));
    return out;
}

Vector parse_rationals(const std::string& s)
{
    Vector out;
    for (const auto& t : split(s, ',')) {
        try {
            out.push_back(parse_rational(t));
        } catch (const std::exception&) {
            throw ValidationError("not a rational number: '" + t + "'");
        }
    }
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PointConfiguration parse_config(const std::string& spec)
{
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw ValidationError("config spec needs a kind prefix: '" + spec + "'");
    const std::string kind = spec.substr(0, colon), rest = spec.substr(colon + 1);
    if (kind == "prod-simplices")
        return product_of_simplices(parse_sizes(rest));
    if (kind == "cube")
        return hypercube(parse_size(rest));
    if (kind == "grid") {
        auto nm = parse_sizes(rest);
        if (nm.size() != 2)
            throw ValidationError("grid spec is grid:n,m");
        return grid(nm[0], nm[1]);
    }
    if (kind == "cyclic") {
        auto c2 = rest.find(':');
        if (c2 == std::string::npos)
            throw ValidationError("cyclic spec is cyclic:d:a1,a2,...");
        auto vals = parse_rationals(rest.substr(c2 + 1));
        return cyclic(std::vector<Rational>(vals.begin(), vals.end()), parse_size(rest.substr(0, c2)));
    }
    if (kind == "file")
        return configuration_from_json(read_file(rest), rest);
    throw ValidationError("unknown config kind '" + kind + "'");
}

std::size_t resolve_threads(std::size_t flag)
{
    if (const char* env = std::getenv("LINEUP_FORGE_THREADS"); env && *env)
        return parse_size(env);
    return flag;
}

// "<n>s" is a wall-clock budget, "<n>" or "<n>n" a budget of extend calls.
void apply_cap(const std::string& cap, std::uint64_t& nodes, std::chrono::seconds& seconds)
{
    if (cap.empty())
        return;
    if (cap.back() == 's')
        seconds = std::chrono::seconds(parse_size(cap.substr(0, cap.size() - 1)));
    else if (cap.back() == 'n')
        nodes = parse_size(cap.substr(0, cap.size() - 1));
    else
        nodes = parse_size(cap);
}

class Output {
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_)
                throw std::runtime_error("cannot write " + path);
        }
    }

    std::ostream& stream() { return file_ ? *file_ : std::cout; }

    // Exactly one trailing newline.
    void text(std::string s)
    {
        while (!s.empty() && s.back() == '\n')
            s.pop_back();
        stream() << s << '\n';
    }

    void line(const std::string& s) { stream() << s << '\n'; }

private:
    std::unique_ptr<std::ofstream> file_;
};

json labels_of(const Lineup& l, const PointConfiguration& c)
{
    json arr = json::array();
    for (auto i : l)
        arr.push_back(c.label(i));
    return arr;
}

json rationals_json(const Vector& v)
{
    json arr = json::array();
    for (const auto& x : v)
        arr.push_back(format_rational(x));
    return arr;
}

json integers_json(const IntVector& v)
{
    json arr = json::array();
    for (const auto& x : v)
        arr.push_back(json::parse(format_integer(x)));
    return arr;
}

void report_incomplete(bool complete)
{
    if (!complete)
        std::cerr << "lineup-forge: stopped at the resource cap, counts are partial\n";
}

struct Common {
    std::string config;
    std::size_t r = 0;
    std::size_t threads = 0;
    std::string checkpoint, resume, format = "json", cap, out;
    bool emit = false, count = false;
};

void add_common(CLI::App* cmd, Common& o, bool config_required = true)
{
    auto* c = cmd->add_option("--config", o.config, "prod-simplices:d1,d2,... | cube:N | grid:n,m | cyclic:d:a1,... | file:PATH");
    if (config_required)
        c->required();
    cmd->add_option("--r", o.r, "lineup length (default: all points)");
    cmd->add_option("--threads", o.threads, "worker threads (default: all cores)");
    cmd->add_option("--out", o.out, "write to a file instead of stdout");
}

void add_search(CLI::App* cmd, Common& o)
{
    cmd->add_option("--checkpoint", o.checkpoint, "frontier file written while running");
    cmd->add_option("--resume", o.resume, "resume from a frontier file");
    cmd->add_option("--cap", o.cap, "resource guard: <n>s seconds or <n> extend calls");
    cmd->add_flag("--emit", o.emit, "stream one JSON object per line");
    cmd->add_flag("--count", o.count, "print only the count");
}

std::size_t full_r(const Common& o, const PointConfiguration& c)
{
    std::size_t r = o.r == 0 ? c.size() : o.r;
    if (r > c.size())
        throw ValidationError("--r exceeds the number of points");
    return r;
}

EnumerateOptions search_options(const Common& o)
{
    EnumerateOptions eo;
    eo.threads = resolve_threads(o.threads);
    eo.checkpoint_path = o.checkpoint;
    eo.resume_path = o.resume;
    apply_cap(o.cap, eo.node_cap, eo.time_cap);
    return eo;
}

int run_lineups(const Common& o)
{
    auto c = parse_config(o.config);
    const std::size_t r = full_r(o, c);
    auto eo = search_options(o);
    eo.count_only = o.count || o.emit;
    Output out(o.out);
    if (o.emit)
        eo.on_node = [&](const LineupNode& n) {
            if (o.count)
                out.line(json{{"lineup", labels_of(n.lineup, c)}}.dump());
            else {
                LineupFan one{r, {n}};
                out.line(json::parse(fan_to_json(one, c))["nodes"][0].dump());
            }
        };
    Engine engine(c);
    if (o.emit && !o.count) {
        // nodes need their cones for the full object
        eo.count_only = false;
        auto res = engine.enumerate(r, eo);
        report_incomplete(res.complete);
        return 0;
    }
    auto res = engine.enumerate(r, eo);
    report_incomplete(res.complete);
    if (o.emit)
        return 0;
    if (o.count)
        out.text(std::to_string(res.count));
    else
        out.text(fan_to_json(res.fan, c));
    return 0;
}

int run_hrep(const Common& o)
{
    auto c = parse_config(o.config);
    const std::size_t r = full_r(o, c);
    if (o.format != "json" && o.format != "csv" && o.format != "downarrow")
        throw ValidationError("--format must be json, csv or downarrow");
    if (o.format == "downarrow" && c.kind() != ConfigKind::hypercube)
        throw ValidationError("--format downarrow needs a cube:N configuration");
    auto rows = certified_hrep(c, r, resolve_threads(o.threads));
    Output out(o.out);
    if (o.format == "json") {
        out.text(hrep_to_json(rows, r));
    } else if (o.format == "csv") {
        out.text(hrep_to_csv(rows, c.dim(), r));
    } else {
        auto down = downarrow_rows(rows, c, r);
        out.text(downarrow_csv(down, c.dim(), r));
    }
    return 0;
}

int run_syt(const Common& o, const std::vector<std::size_t>& shape)
{
    if (shape.size() != 2)
        throw ValidationError("--shape takes two sizes");
    SytOptions so;
    so.threads = resolve_threads(o.threads);
    so.checkpoint_path = o.checkpoint;
    so.resume_path = o.resume;
    apply_cap(o.cap, so.node_cap, so.time_cap);
    Output out(o.out);
    if (o.emit)
        so.emit = [&](const Tableau& t) { out.line(tableau_to_json(t)); };
    auto res = count_realizable_syt(shape[0], shape[1], so);
    report_incomplete(res.complete);
    if (o.emit)
        return 0;
    if (o.count) {
        out.text(std::to_string(res.count));
        return 0;
    }
    json j{{"shape", shape},
           {"realizable", res.count},
           {"standard", json::parse(format_integer(total_syt(shape[0], shape[1])))},
           {"complete", res.complete}};
    out.text(j.dump());
    return 0;
}

int run_grid(const Common& o, std::size_t n, std::size_t m, bool with_oracle)
{
    auto c = grid(n, m);
    Engine engine(c);
    EnumerateOptions eo;
    eo.threads = resolve_threads(o.threads);
    eo.count_only = true;
    auto res = engine.enumerate(c.size(), eo);
    json j{{"n", n}, {"m", m}, {"formula", grid_sweep_count(n, m)}, {"engine", res.count}};
    if (with_oracle) {
        OracleOptions oo;
        oo.threads = eo.threads;
        oo.max_points = c.size();
        j["oracle"] = brute_force_sweeps(c, oo).size();
    }
    Output out(o.out);
    if (o.count)
        out.text(std::to_string(res.count));
    else
        out.text(j.dump());
    return 0;
}

int run_certify(const Common& o, const std::string& y_text, const std::string& ranking_text)
{
    auto c = parse_config(o.config);
    const std::size_t r = full_r(o, c);
    Ranking s;
    if (!y_text.empty()) {
        auto y = parse_rationals(y_text);
        if (y.size() != c.dim())
            throw ValidationError("--y has the wrong dimension");
        s = ranking_of(y, c, r);
    } else if (!ranking_text.empty()) {
        const std::string text = ranking_text[0] == '@' ? read_file(ranking_text.substr(1)) : ranking_text;
        s = ranking_from_json(text, c);
    } else {
        throw ValidationError("certify needs --y or --ranking");
    }
    auto real = is_realizable(s, c);
    json j{{"ranking", json::parse(ranking_to_json(s, c))}, {"realizable", real.realizable}};
    if (real.realizable) {
        j["uncoarsenable"] = is_uncoarsenable(s, c);
        j["certificate"] = rationals_json(*real.certificate);
    }
    Output(o.out).text(j.dump());
    return 0;
}

int run_oracle(const Common& o, const std::string& mode)
{
    auto c = parse_config(o.config);
    const std::size_t r = full_r(o, c);
    OracleOptions oo;
    oo.threads = resolve_threads(o.threads);
    Output out(o.out);
    if (mode == "sweeps") {
        auto ls = brute_force_lineups(c, r, oo);
        if (o.emit) {
            for (const auto& l : ls)
                out.line(json{{"lineup", labels_of(l, c)}}.dump());
        } else {
            out.text(std::to_string(ls.size()));
        }
        return 0;
    }
    if (mode == "hull") {
        auto h = occupation_hull(c, r, WeightVector::linear(r), oo);
        if (o.count) {
            out.text(std::to_string(h.vertices));
            return 0;
        }
        json normals = json::array();
        for (const auto& y : h.facet_normals)
            normals.push_back(integers_json(y));
        out.text(json{{"points", h.points}, {"vertices", h.vertices}, {"facet_normals", normals}}.dump());
        return 0;
    }
    auto v = cross_validate(c, r, oo);
    out.text(cross_validation_to_json(v, c, r));
    return v.pass ? 0 : 2;
}

int run_lift(const Common& o, const std::string& coeffs, const std::string& s, const std::string& constant,
             std::size_t m)
{
    DownarrowRow row;
    for (const auto& x : parse_rationals(coeffs)) {
        if (!x.get_den().fits_ulong_p() || x.get_den() != 1)
            throw ValidationError("--coefficients must be integers");
        row.coefficients.push_back(x.get_num());
    }
    row.s = parse_rationals(s);
    row.constant = parse_rational(constant);
    row.n = row.coefficients.size();
    row.r = row.s.size();
    auto lifted = lift_inequality(row, m);
    Output out(o.out);
    if (o.format == "csv" || o.format == "downarrow") {
        out.text(downarrow_csv({lifted}, lifted.n, *lifted.r));
        return 0;
    }
    out.text(json{{"n", lifted.n},
                  {"r", *lifted.r},
                  {"coefficients", integers_json(lifted.coefficients)},
                  {"s", rationals_json(lifted.s)},
                  {"c", format_rational(lifted.constant)}}
                 .dump());
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lineups, sweeps and lineup polytopes of point configurations"};
    app.require_subcommand(1);

    Common lo, ho, so, go, co, oo, fo;

    auto* lineups = app.add_subcommand("lineups", "enumerate r-lineups over the test cone");
    add_common(lineups, lo);
    add_search(lineups, lo);

    auto* hrep = app.add_subcommand("hrep", "H-representation of the lineup polytope");
    add_common(hrep, ho);
    hrep->add_option("--format", ho.format, "json | csv | downarrow");

    std::vector<std::size_t> shape;
    auto* syt = app.add_subcommand("syt", "realizable standard Young tableaux of a rectangle");
    syt->add_option("--shape", shape, "rows and columns")->expected(2)->required();
    syt->add_option("--threads", so.threads, "worker threads (default: all cores)");
    syt->add_option("--out", so.out, "write to a file instead of stdout");
    add_search(syt, so);

    std::size_t gn = 0, gm = 0;
    bool grid_oracle = false;
    auto* gridc = app.add_subcommand("grid", "sweeps of the n x m grid");
    gridc->add_option("--n", gn)->required();
    gridc->add_option("--m", gm)->required();
    gridc->add_flag("--oracle", grid_oracle, "also count by brute force");
    gridc->add_flag("--count", go.count, "print only the engine count");
    gridc->add_option("--threads", go.threads, "worker threads (default: all cores)");
    gridc->add_option("--out", go.out, "write to a file instead of stdout");

    std::string y_text, ranking_text;
    auto* certify = app.add_subcommand("certify", "realizability and uncoarsenability of a ranking");
    add_common(certify, co);
    certify->add_option("--y", y_text, "functional y1,y2,... whose ranking is checked");
    certify->add_option("--ranking", ranking_text, "ranking JSON, or @PATH");

    std::string oracle_mode = "cross-validate";
    auto* oracle = app.add_subcommand("oracle", "brute-force checks");
    oracle->add_option("mode", oracle_mode, "sweeps | hull | cross-validate")
        ->check(CLI::IsMember({"sweeps", "hull", "cross-validate"}));
    add_common(oracle, oo);
    oracle->add_flag("--emit", oo.emit, "sweeps: stream lineups");
    oracle->add_flag("--count", oo.count, "hull: print only the vertex count");

    std::string coeffs, svec, constant = "0";
    std::size_t lift_m = 0;
    auto* lift = app.add_subcommand("lift", "lift a hypercube inequality from [-1,1]^N to [-1,1]^M");
    lift->add_option("--coefficients", coeffs, "downarrow coefficients, comma separated")->required();
    lift->add_option("--s", svec, "right-hand side coefficients, comma separated")->required();
    lift->add_option("--constant", constant, "constant term");
    lift->add_option("--m", lift_m, "target dimension")->required();
    lift->add_option("--format", fo.format, "json | csv");
    lift->add_option("--out", fo.out, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*lineups)
            return run_lineups(lo);
        if (*hrep)
            return run_hrep(ho);
        if (*syt)
            return run_syt(so, shape);
        if (*gridc)
            return run_grid(go, gn, gm, grid_oracle);
        if (*certify)
            return run_certify(co, y_text, ranking_text);
        if (*oracle)
            return run_oracle(oo, oracle_mode);
        if (*lift)
            return run_lift(fo, coeffs, svec, constant, lift_m);
    } catch (const ValidationError& e) {
        std::cerr << "lineup-forge: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "lineup-forge: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "lineup-forge: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
