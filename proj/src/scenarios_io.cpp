#include "convshock/scenarios_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace convshock {

SimulationState build_initial_condition(const DiaphragmSpec& spec, const RadialGrid& grid,
                                        GasModel gas) {
    if (!(spec.r0 > 0.0 && spec.r0 < grid.outer_edge())) {
        throw ConfigError("diaphragm radius r0 = " + std::to_string(spec.r0) +
                          " lies outside (0, r_max)");
    }
    const ConservedState inner = primitive_to_conserved(spec.inner_state(gas), gas);
    const ConservedState outer = primitive_to_conserved(spec.outer_state(gas), gas);

    SimulationState state;
    state.cells.reserve(grid.n_cells);
    for (int i = 0; i < grid.n_cells; ++i) {
        state.cells.push_back(grid.center(i) < spec.r0 ? inner : outer);
    }
    return state;
}

// ---------------------------------------------------------------------------
// number formatting
// ---------------------------------------------------------------------------

std::string format_shortest(double value) {
    std::array<char, 64> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

namespace {

std::string format_sig17(double value) {
    std::array<char, 64> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

double parse_double(std::string_view token, const std::string& context) {
    double v = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw ConfigError(context + ": cannot parse number '" + std::string(token) + "'");
    }
    return v;
}

long parse_long(std::string_view token, const std::string& context) {
    long v = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw ConfigError(context + ": cannot parse integer '" + std::string(token) + "'");
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// snapshot CSV
// ---------------------------------------------------------------------------

void write_snapshot_csv(const Snapshot& snapshot, std::ostream& out) {
    std::string text;
    text.reserve(64 * snapshot.rows.size() + 64);
    text += "# t=";
    text += format_sig17(snapshot.time);
    text += "\nr,rho,u,p,T,mach\n";
    for (const Snapshot::Row& row : snapshot.rows) {
        text += format_shortest(row.r);
        text += ',';
        text += format_shortest(row.rho);
        text += ',';
        text += format_shortest(row.u);
        text += ',';
        text += format_shortest(row.p);
        text += ',';
        text += format_shortest(row.T);
        text += ',';
        text += format_shortest(row.mach);
        text += '\n';
    }
    out << text;
    if (!out) throw IoError("failed to write snapshot CSV");
}

void write_snapshot_csv(const Snapshot& snapshot, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_snapshot_csv(snapshot, out);
}

Snapshot read_snapshot_csv(std::istream& in) {
    Snapshot snap;
    std::string line;
    if (!std::getline(in, line) || line.rfind("# t=", 0) != 0) {
        throw IoError("snapshot CSV: missing '# t=' line");
    }
    snap.time = parse_double(trim(std::string_view(line).substr(4)), "snapshot time");
    if (!std::getline(in, line) || trim(line) != "r,rho,u,p,T,mach") {
        throw IoError("snapshot CSV: missing header line");
    }
    while (std::getline(in, line)) {
        const std::string_view sv = trim(line);
        if (sv.empty()) continue;
        Snapshot::Row row{};
        double* fields[6] = {&row.r, &row.rho, &row.u, &row.p, &row.T, &row.mach};
        std::size_t start = 0;
        for (int f = 0; f < 6; ++f) {
            const std::size_t comma = f < 5 ? sv.find(',', start) : sv.size();
            if (comma == std::string_view::npos) {
                throw IoError("snapshot CSV: short row '" + std::string(sv) + "'");
            }
            *fields[f] = parse_double(sv.substr(start, comma - start), "snapshot row");
            start = comma + 1;
        }
        snap.rows.push_back(row);
    }
    return snap;
}

Snapshot read_snapshot_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return read_snapshot_csv(in);
}

// ---------------------------------------------------------------------------
// config files
// ---------------------------------------------------------------------------

namespace {

const std::array<std::string_view, 11> kConfigKeys = {
    "geometry", "ratio",    "r0",        "r_max",     "cells",     "cfl",
    "t_end",    "limiter",  "splitting", "snapshots", "output_dir"};

std::size_t edit_distance(std::string_view a, std::string_view b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

template <std::size_t N>
std::string suggest(std::string_view got, const std::array<std::string_view, N>& options) {
    std::string_view best = options[0];
    std::size_t best_d = edit_distance(got, options[0]);
    for (std::size_t i = 1; i < N; ++i) {
        const std::size_t d = edit_distance(got, options[i]);
        if (d < best_d) {
            best_d = d;
            best = options[i];
        }
    }
    return best_d <= got.size() ? " (did you mean '" + std::string(best) + "'?)" : "";
}

Geometry parse_geometry(std::string_view v, const std::string& ctx) {
    if (v == "planar") return {0};
    if (v == "cylindrical") return {1};
    if (v == "spherical") return {2};
    static constexpr std::array<std::string_view, 3> opts = {"planar", "cylindrical",
                                                             "spherical"};
    throw ConfigError(ctx + ": unknown geometry '" + std::string(v) + "'" +
                      suggest(v, opts));
}

LimiterKind parse_limiter(std::string_view v, const std::string& ctx) {
    if (v == "superbee") return LimiterKind::superbee;
    if (v == "minmod") return LimiterKind::minmod;
    if (v == "none") return LimiterKind::none;
    static constexpr std::array<std::string_view, 3> opts = {"superbee", "minmod", "none"};
    throw ConfigError(ctx + ": unknown limiter '" + std::string(v) + "'" +
                      suggest(v, opts));
}

Splitting parse_splitting(std::string_view v, const std::string& ctx) {
    if (v == "strang") return Splitting::strang;
    if (v == "godunov") return Splitting::godunov;
    static constexpr std::array<std::string_view, 2> opts = {"strang", "godunov"};
    throw ConfigError(ctx + ": unknown splitting '" + std::string(v) + "'" +
                      suggest(v, opts));
}

std::vector<double> parse_snapshot_list(std::string_view v, const std::string& ctx) {
    std::vector<double> times;
    std::size_t start = 0;
    while (start <= v.size()) {
        std::size_t comma = v.find(',', start);
        if (comma == std::string_view::npos) comma = v.size();
        const std::string_view tok = trim(v.substr(start, comma - start));
        if (!tok.empty()) times.push_back(parse_double(tok, ctx));
        if (comma == v.size()) break;
        start = comma + 1;
    }
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    return times;
}

const char* geometry_name(Geometry g) {
    switch (g.alpha) {
        case 0: return "planar";
        case 1: return "cylindrical";
        default: return "spherical";
    }
}

const char* limiter_name(LimiterKind k) {
    switch (k) {
        case LimiterKind::superbee: return "superbee";
        case LimiterKind::minmod: return "minmod";
        default: return "none";
    }
}

const char* splitting_name(Splitting s) {
    return s == Splitting::strang ? "strang" : "godunov";
}

std::vector<double> default_snapshot_times() {
    return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
}

}  // namespace

LimiterKind limiter_from_name(std::string_view name) {
    return parse_limiter(name, "limiter");
}

Splitting splitting_from_name(std::string_view name) {
    return parse_splitting(name, "splitting");
}

SimulationConfig parse_config(std::string_view text) {
    SimulationConfig config;
    bool have_ratio = false;
    bool have_snapshots = false;

    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::string ctx = "line " + std::to_string(line_no);
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(ctx + ": expected 'key = value', got '" + std::string(line) +
                              "'");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (value.empty()) throw ConfigError(ctx + ": empty value for '" + std::string(key) + "'");

        if (key == "geometry") {
            config.geometry = parse_geometry(value, ctx);
        } else if (key == "ratio") {
            config.initial.ratio = parse_double(value, ctx);
            have_ratio = true;
        } else if (key == "r0") {
            config.initial.r0 = parse_double(value, ctx);
        } else if (key == "r_max") {
            config.r_max = parse_double(value, ctx);
        } else if (key == "cells") {
            config.n_cells = static_cast<int>(parse_long(value, ctx));
        } else if (key == "cfl") {
            config.cfl = parse_double(value, ctx);
        } else if (key == "t_end") {
            config.t_end = parse_double(value, ctx);
        } else if (key == "limiter") {
            config.limiter = parse_limiter(value, ctx);
        } else if (key == "splitting") {
            config.splitting = parse_splitting(value, ctx);
        } else if (key == "snapshots") {
            config.snapshot_times = parse_snapshot_list(value, ctx);
            have_snapshots = true;
        } else if (key == "output_dir") {
            config.output_dir = std::string(value);
        } else {
            throw ConfigError(ctx + ": unknown key '" + std::string(key) + "'" +
                              suggest(key, kConfigKeys));
        }
    }

    if (!have_ratio) throw ConfigError("missing required key 'ratio'");
    if (!have_snapshots) {
        config.snapshot_times = default_snapshot_times();
        std::erase_if(config.snapshot_times,
                      [&](double t) { return t > config.t_end; });
    }
    config.boundaries = config.geometry.alpha == 0 ? BoundarySet::transmissive
                                                   : BoundarySet::converging;
    config.validate();
    return config;
}

SimulationConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const SimulationConfig& config) {
    std::string out;
    out += "geometry = ";
    out += geometry_name(config.geometry);
    out += "\nratio = " + format_shortest(config.initial.ratio);
    out += "\nr0 = " + format_shortest(config.initial.r0);
    out += "\nr_max = " + format_shortest(config.r_max);
    out += "\ncells = " + std::to_string(config.n_cells);
    out += "\ncfl = " + format_shortest(config.cfl);
    out += "\nt_end = " + format_shortest(config.t_end);
    out += "\nlimiter = ";
    out += limiter_name(config.limiter);
    out += "\nsplitting = ";
    out += splitting_name(config.splitting);
    out += "\nsnapshots = ";
    for (std::size_t i = 0; i < config.snapshot_times.size(); ++i) {
        if (i > 0) out += ',';
        out += format_shortest(config.snapshot_times[i]);
    }
    out += "\noutput_dir = " + config.output_dir + "\n";
    return out;
}

std::optional<SimulationConfig> canned_scenario(std::string_view name) {
    double ratio = 0.0;
    if (name == "ratio4") {
        ratio = 4.0;
    } else if (name == "ratio10") {
        ratio = 10.0;
    } else if (name == "ratio20") {
        ratio = 20.0;
    } else {
        return std::nullopt;
    }
    SimulationConfig config = make_config(Geometry{1}, ratio);
    config.snapshot_times = default_snapshot_times();
    return config;
}

}  // namespace convshock
