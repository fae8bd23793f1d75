#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "nevan/blaschke.hpp"
#include "nevan/dyadic_tree.hpp"
#include "nevan/harmonic.hpp"
#include "nevan/majorant.hpp"
#include "nevan/maximal.hpp"
#include "nevan/seqio.hpp"

namespace nevan::cli {

namespace {

Json num(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

std::string cell_text(const Json& v) {
    if (v.is_null()) return "-";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
    if (v.is_number_float()) return fmt::format("{:.10g}", v.get<double>());
    return v.dump();
}

std::string csv_cell(const Json& v) {
    if (v.is_null()) return "";
    if (v.is_number_float()) return fmt::format("{:.17g}", v.get<double>());
    std::string s = cell_text(v);
    if (s.find_first_of(",\"") != std::string::npos) {
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }
    return s;
}

}  // namespace

Json to_json(const Report& r) {
    Json j = Json::object();
    j["command"] = r.command;
    j["summary"] = r.summary;
    Json tables = Json::array();
    for (const auto& t : r.tables) {
        Json tj = Json::object();
        tj["name"] = t.name;
        tj["columns"] = t.columns;
        Json rows = Json::array();
        for (const auto& row : t.rows) rows.push_back(Json(row));
        tj["rows"] = std::move(rows);
        tables.push_back(std::move(tj));
    }
    j["tables"] = std::move(tables);
    return j;
}

void emit(const Report& r, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << to_json(r).dump(2) << '\n';
        return;
    }
    if (format == "csv") {
        out << "# command: " << r.command << '\n';
        for (const auto& [k, v] : r.summary.items()) out << "# " << k << ": " << cell_text(v) << '\n';
        for (const auto& t : r.tables) {
            out << "# table: " << t.name << '\n';
            for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << t.columns[c];
            out << '\n';
            for (const auto& row : t.rows) {
                for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_cell(row[c]);
                out << '\n';
            }
        }
        return;
    }
    out << "command: " << r.command << '\n';
    for (const auto& [k, v] : r.summary.items()) out << k << ": " << cell_text(v) << '\n';
    for (const auto& t : r.tables) {
        out << '\n' << "[" << t.name << "]\n";
        std::vector<std::size_t> w(t.columns.size());
        std::vector<std::vector<std::string>> cells;
        for (std::size_t c = 0; c < t.columns.size(); ++c) w[c] = t.columns[c].size();
        for (const auto& row : t.rows) {
            std::vector<std::string> line;
            for (std::size_t c = 0; c < row.size(); ++c) {
                line.push_back(cell_text(row[c]));
                if (c < w.size()) w[c] = std::max(w[c], line.back().size());
            }
            cells.push_back(std::move(line));
        }
        for (std::size_t c = 0; c < t.columns.size(); ++c)
            out << (c ? "  " : "") << fmt::format("{:>{}}", t.columns[c], w[c]);
        out << '\n';
        for (const auto& line : cells) {
            for (std::size_t c = 0; c < line.size(); ++c) out << (c ? "  " : "") << fmt::format("{:>{}}", line[c], w[c]);
            out << '\n';
        }
    }
}

namespace {

class SpecArgs {
public:
    SpecArgs(std::string name, const std::string& body) : name_(std::move(name)) {
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            auto eq = item.find('=');
            if (eq == std::string::npos) throw std::invalid_argument(fmt::format("{}: expected key=value, got '{}'", name_, item));
            kv_[item.substr(0, eq)] = item.substr(eq + 1);
        }
    }

    std::string str(const std::string& k, const std::string& def) {
        used_.push_back(k);
        auto it = kv_.find(k);
        return it == kv_.end() ? def : it->second;
    }
    double real(const std::string& k, double def) {
        std::string s = str(k, "");
        if (s.empty()) return def;
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != s.size() || !std::isfinite(v)) throw std::invalid_argument(fmt::format("{}: '{}' is not a number", name_, s));
        return v;
    }
    long integer(const std::string& k, long def) {
        double v = real(k, static_cast<double>(def));
        if (v != std::floor(v)) throw std::invalid_argument(fmt::format("{}: {} must be an integer", name_, k));
        return static_cast<long>(v);
    }
    void finish() const {
        for (const auto& [k, v] : kv_)
            if (std::find(used_.begin(), used_.end(), k) == used_.end())
                throw std::invalid_argument(fmt::format("{}: unknown parameter '{}'", name_, k));
    }

private:
    std::string name_;
    std::map<std::string, std::string> kv_;
    std::vector<std::string> used_;
};

EpsRule parse_eps_rule(const std::string& s) {
    if (s == "one") return EpsRule::One;
    if (s == "invlog" || s == "inverse-log") return EpsRule::InverseLog;
    throw std::invalid_argument(fmt::format("family: unknown eps rule '{}'", s));
}

}  // namespace

GeneratedConfig generate(const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    SpecArgs a(name, colon == std::string::npos ? std::string() : spec.substr(colon + 1));
    GeneratedConfig g;
    if (name == "radial") {
        g = radial_dyadic(static_cast<int>(a.integer("N", 10)));
    } else if (name == "stolz") {
        int N = static_cast<int>(a.integer("N", 14));
        double vertex = a.real("vertex", 0.0);
        std::string gap = a.str("gap", "exp");
        if (gap == "exp") {
            g = stolz_pairs(vertex, N, exponential_gap(), "exp");
        } else {
            double rho = a.real("gap", 0.5);
            g = stolz_pairs(vertex, N, constant_gap(rho), gap);
        }
    } else if (name == "superseparated") {
        g = superseparated(static_cast<std::size_t>(a.integer("K", 100)));
    } else if (name == "gsep") {
        g = g_separated(static_cast<int>(a.integer("J", 10)), a.real("eps", 0.5));
    } else if (name == "circles") {
        std::string alpha = a.str("alpha", "geom");
        int N = static_cast<int>(a.integer("N", 12));
        int bits = static_cast<int>(a.integer("bits", 4));
        if (alpha == "geom")
            g = measure_circles_geometric(N, bits);
        else if (alpha.rfind("pow:", 0) == 0)
            g = measure_circles_power(std::stod(alpha.substr(4)), N, bits);
        else
            throw std::invalid_argument(fmt::format("circles: unknown alpha rule '{}'", alpha));
    } else if (name == "ray") {
        std::string m = a.str("m", "one");
        int cells = static_cast<int>(a.integer("cells", 8));
        double R = a.real("R", 0.99);
        if (m == "one")
            g = measure_ray([](double) { return 1.0; }, m, cells, R);
        else if (m == "linear")
            g = measure_ray([](double x) { return 1.0 - x; }, m, cells, R);
        else
            throw std::invalid_argument(fmt::format("ray: unknown density '{}'", m));
    } else if (name == "orlicz") {
        g = orlicz_example(a.real("p", 2.0), static_cast<int>(a.integer("N", 40)), a.real("c", 0.5));
    } else if (name == "chain") {
        g = kernel_chain(static_cast<int>(a.integer("N", 20)));
    } else if (name == "family") {
        g = family_config(a.real("alpha", 1.0), a.real("beta", 4.0), parse_eps_rule(a.str("eps", "one")),
                          static_cast<std::size_t>(a.integer("K", 1000)));
    } else {
        throw std::invalid_argument(fmt::format("unknown generator '{}'", name));
    }
    a.finish();
    return g;
}

std::vector<int> parse_levels(const std::string& s) {
    std::vector<int> out;
    auto to_int = [&](const std::string& t) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(t, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (t.empty() || pos != t.size()) throw std::invalid_argument(fmt::format("bad level list '{}'", s));
        return v;
    };
    auto dots = s.find("..");
    if (dots != std::string::npos) {
        int lo = to_int(s.substr(0, dots)), hi = to_int(s.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument(fmt::format("empty level range '{}'", s));
        for (int m = lo; m <= hi; ++m) out.push_back(m);
    } else {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(to_int(item));
    }
    if (out.empty()) throw std::invalid_argument("empty level list");
    return out;
}

namespace {

struct Options {
    std::string input;
    std::string gen;
    std::string output;
    std::string format = "text";
    std::string levels;
    std::string mode = "both";
    std::string window = "-1,2";
    int depth = -1;
    double aperture = 1.0;
    double tol_feas = 1e-7;
    double tol_gap = 1e-6;
};

struct Loaded {
    SequenceFile file;
    std::string source;
};

Loaded load(const Options& o) {
    if (o.input.empty() == o.gen.empty()) throw std::invalid_argument("give exactly one of an input file or --gen");
    if (!o.input.empty()) return {read_sequence_file(o.input), o.input};
    return {to_file(generate(o.gen)), o.gen};
}

void halfplane_xy(const SequenceFile& f, std::vector<double>& x, std::vector<double>& y) {
    for (const auto& p : f.halfplane) {
        double s = std::exp(p.log_scale);
        double xx = p.xs * s, yy = p.ys * s;
        if (!(yy > 0.0)) throw std::invalid_argument("half-plane point scale underflows double precision");
        x.push_back(xx);
        y.push_back(yy);
    }
}

PointSequence disk_sequence(const SequenceFile& f) {
    if (f.mode == FileMode::Disk) return f.disk;
    std::vector<double> x, y;
    halfplane_xy(f, x, y);
    PointSequence seq;
    for (std::size_t i = 0; i < x.size(); ++i) seq.add(cayley_to_disk({x[i], y[i]}));
    return seq;
}

std::vector<double> values_or_phi(const SequenceFile& f, const PointSequence& seq) {
    if (f.has_values) return f.values;
    if (seq.empty()) return {};
    return phi_lambda(seq).values;
}

Report cmd_analyze(const Options& o) {
    auto [f, source] = load(o);
    PointSequence seq = disk_sequence(f);
    Report r;
    r.command = "analyze";
    r.summary["input"] = source;
    r.summary["points"] = seq.size();
    PhiLambda phi = seq.empty() ? PhiLambda{} : phi_lambda(seq);
    auto sep = separation_constant(seq);
    auto lsep = log_separation_constant(seq);
    r.summary["separation"] = sep ? num(*sep) : Json(nullptr);
    r.summary["log_separation"] = lsep ? num(*lsep) : Json(nullptr);
    r.summary["blaschke_sum"] = num(blaschke_sum(seq));
    r.summary["phi_overflow"] = phi.any_overflow();

    Table t{"phi", {"index", "re", "im", "depth", "phi"}, {}};
    for (std::size_t i = 0; i < seq.size(); ++i)
        t.rows.push_back({i, num(seq[i].re()), num(seq[i].im()), num(seq[i].depth()), num(phi.values[i])});
    r.tables.push_back(std::move(t));

    const std::pair<ConditionKind, const char*> kinds[] = {
        {ConditionKind::CN, "cn"}, {ConditionKind::CNN, "cnn"}, {ConditionKind::CS, "cs"}};
    ConditionReport first;
    for (const auto& [kind, label] : kinds) {
        ConditionReport c = condition_report(seq, phi, kind);
        std::string p(label);
        r.summary[p + "_holds"] = c.pass;
        r.summary[p + "_sup"] = num(c.sup);
        r.summary[p + "_tail_max"] = num(c.tail_max);
        r.summary[p + "_tail_slope"] = num(c.tail_slope);
        r.summary[p + "_tail_sum_fraction"] = num(c.tail_sum_fraction);
        if (kind == ConditionKind::CN) first = std::move(c);
    }
    Table ct{"conditions", {"index", "modulus", "stat", "running_sup", "partial_sum"}, {}};
    for (const auto& e : first.entries)
        ct.rows.push_back({e.index, num(e.modulus), num(e.stat), num(e.running_sup), num(e.partial_sum)});
    r.tables.push_back(std::move(ct));
    return r;
}

Report cmd_majorant(const Options& o) {
    auto [f, source] = load(o);
    PointSequence seq = disk_sequence(f);
    auto levels = parse_levels(o.levels.empty() ? "6..10" : o.levels);
    MajorantConfig cfg;
    cfg.tol.feasibility = o.tol_feas;
    cfg.tol.gap = o.tol_gap;
    std::vector<Target> targets;
    std::vector<double> v = values_or_phi(f, seq);
    for (std::size_t i = 0; i < seq.size(); ++i) targets.push_back({seq[i], v[i]});
    MajorantVerdict verdict = majorant_test(targets, levels, cfg);

    Report r;
    r.command = "majorant";
    r.summary["input"] = source;
    r.summary["targets"] = f.has_values ? "values" : "phi";
    r.summary["trend"] = to_string(verdict.trend);
    r.summary["verdict"] = verdict.label();
    r.summary["singular_like"] = verdict.singular_like;
    r.summary["quasi_bounded"] = verdict.quasi_bounded;
    r.summary["ill_conditioned_level"] =
        verdict.ill_conditioned_level ? Json(*verdict.ill_conditioned_level) : Json(nullptr);
    Table t{"levels",
            {"m", "primal_mass", "dual_objective", "gap", "duality_ok", "cs_residual", "concentration",
             "concentration_theta", "primal_status", "dual_status"},
            {}};
    for (const auto& lv : verdict.levels)
        t.rows.push_back({lv.m, num(lv.primal.mass), num(lv.dual.objective), num(lv.gap), lv.duality_ok,
                          num(lv.cs_residual), num(lv.concentration), num(lv.concentration_theta),
                          to_string(lv.primal.status), to_string(lv.dual.status)});
    r.tables.push_back(std::move(t));
    if (!verdict.levels.empty()) {
        const auto& last = verdict.levels.back();
        Table c{"primal_certificate", {"j", "theta", "alpha"}, {}};
        double h = kTwoPi / static_cast<double>(last.primal.alpha.size());
        for (std::size_t j = 0; j < last.primal.alpha.size(); ++j)
            if (last.primal.alpha[j] != 0.0) c.rows.push_back({j, num(h * static_cast<double>(j)), num(last.primal.alpha[j])});
        r.tables.push_back(std::move(c));
    }
    r.exit_code = verdict.trend == Trend::Growing ? 2 : 0;
    return r;
}

Report cmd_balayage(const Options& o) {
    auto [f, source] = load(o);
    DiskMeasure mu = file_measure(f);
    int depth = o.depth < 0 ? 10 : o.depth;
    Report r;
    r.command = "balayage";
    r.summary["input"] = source;
    r.summary["atoms"] = mu.size();
    r.summary["total_mass"] = num(mu.total_mass());
    BalayageSup bs = balayage_sup(mu, depth);
    r.summary["balayage_sup"] = num(bs.value);
    r.summary["balayage_sup_theta"] = num(bs.theta);
    r.summary["balayage_at_1"] = num(balayage(mu, 0.0));

    Table w{"carleson_windows", {"n", "r", "window_mass", "ratio", "theta"}, {}};
    double K = 0.0;
    for (int n = 0; n <= depth; ++n) {
        double rr = std::ldexp(1.0, -n);
        WindowSup ws = window_sup(mu, rr);
        K = std::max(K, ws.mass / rr);
        w.rows.push_back({n, num(rr), num(ws.mass), num(ws.mass / rr), num(ws.theta)});
    }
    r.summary["carleson_constant"] = num(K);
    SufcondReport sc = sufcond_check(mu, nullptr, depth);
    r.summary["sufcond_sum"] = num(sc.discrete_sum);
    r.summary["sufcond_tail_fraction"] = num(sc.tail_fraction);
    r.summary["sufcond_log_slope"] = num(sc.log_slope);
    r.summary["sufcond"] = sc.pass ? "PASS" : "FAIL";
    r.tables.push_back(std::move(w));
    Table s{"sufcond", {"n", "increment", "partial_sum"}, {}};
    for (const auto& lv : sc.levels) s.rows.push_back({lv.n, num(lv.increment), num(lv.partial_sum)});
    r.tables.push_back(std::move(s));
    r.exit_code = sc.pass ? 0 : 2;
    return r;
}

void add_weak(Report& r, const std::string& prefix, const WeakL1Report& w) {
    r.summary[prefix + "_weak_l1_sup"] = num(w.sup);
    r.summary[prefix + "_argmax_t"] = num(w.argmax_t);
    r.summary[prefix + "_vanishing"] = w.vanishing;
    Table t{prefix + "_samples", {"t", "t_measure"}, {}};
    for (const auto& [tt, v] : w.samples) t.rows.push_back({num(tt), num(v)});
    r.tables.push_back(std::move(t));
}

Interval parse_window(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("window must be given as lo,hi");
    double lo = std::stod(s.substr(0, comma)), hi = std::stod(s.substr(comma + 1));
    if (!(hi > lo)) throw std::invalid_argument("window must satisfy lo < hi");
    return {lo, hi};
}

Report cmd_maximal(const Options& o) {
    if (o.mode != "m" && o.mode != "sharp" && o.mode != "both") throw std::invalid_argument("mode must be m, sharp or both");
    auto [f, source] = load(o);
    Report r;
    r.command = "maximal";
    r.summary["input"] = source;
    r.summary["mode"] = o.mode;
    BoundaryStepFunction mphi;
    BumpEnvelope env;
    if (f.mode == FileMode::HalfPlane) {
        if (!f.has_values) throw std::invalid_argument("half-plane maximal functions need a value column");
        std::vector<double> x, y;
        halfplane_xy(f, x, y);
        Interval win = parse_window(o.window);
        r.summary["window"] = Json::array({num(win.lo), num(win.hi)});
        mphi = nontangential_max_line(x, y, f.values).restricted(win);
        env = phi_sharp_line(x, y, f.values, win);
    } else {
        std::vector<double> phi = values_or_phi(f, f.disk);
        r.summary["aperture"] = num(o.aperture);
        mphi = nontangential_max(f.disk, phi, o.aperture);
        env = phi_sharp(f.disk, phi, o.aperture);
    }
    if (o.mode != "sharp") {
        Table t{"m_phi", {"lo", "hi", "value"}, {}};
        const auto& b = mphi.breaks();
        for (std::size_t i = 0; i < mphi.values().size(); ++i)
            if (mphi.values()[i] > 0.0) t.rows.push_back({num(b[i]), num(b[i + 1]), num(mphi.values()[i])});
        r.summary["m_integral"] = num(mphi.integral());
        r.tables.push_back(std::move(t));
        add_weak(r, "m", weak_l1(mphi));
    }
    if (o.mode != "m") {
        Table t{"phi_sharp_bumps", {"center", "halfwidth", "height"}, {}};
        for (const auto& b : env.bumps) t.rows.push_back({num(b.center), num(b.halfwidth), num(b.height)});
        r.tables.push_back(std::move(t));
        add_weak(r, "sharp", weak_l1(env));
    }
    return r;
}

Report cmd_borichev(const Options& o) {
    auto [f, source] = load(o);
    PointSequence seq = disk_sequence(f);
    int depth = o.depth < 0 ? 12 : o.depth;
    auto depths = parse_levels(o.levels.empty() ? fmt::format("1..{}", depth) : o.levels);
    std::vector<double> v = values_or_phi(f, seq);
    BorichevReport rep = borichev_verdict(seq, v, depths);
    Report r;
    r.command = "borichev";
    r.summary["input"] = source;
    r.summary["values"] = f.has_values ? "values" : "phi";
    r.summary["trend"] = to_string(rep.trend);
    r.summary["verdict"] = rep.pass() ? "PASS" : "FAIL";
    r.summary["supremum"] = num(rep.witness.value);
    Table t{"levels", {"m", "S", "occupied", "deeper"}, {}};
    for (const auto& lv : rep.levels) t.rows.push_back({lv.m, num(lv.S), lv.occupied, lv.deeper});
    r.tables.push_back(std::move(t));
    Aggregate agg = aggregate_sup(seq, v, depths.back());
    Table w{"witness", {"n", "k", "weight"}, {}};
    for (const auto& idx : rep.witness.witness) {
        auto it = agg.weights.weights.find(idx);
        w.rows.push_back({idx.n, idx.k, it == agg.weights.weights.end() ? Json(nullptr) : num(it->second)});
    }
    r.tables.push_back(std::move(w));
    r.exit_code = rep.pass() ? 0 : 2;
    return r;
}

int cmd_gen(const std::string& spec, const std::string& output, std::ostream& out) {
    GeneratedConfig g = generate(spec);
    std::vector<std::string> header;
    header.push_back("generator: " + g.generator);
    std::string params;
    for (const auto& [k, v] : g.params) params += (params.empty() ? "" : ",") + k + "=" + v;
    header.push_back("params: " + params);
    std::string tags;
    for (const auto& t : g.tags) tags += (tags.empty() ? "" : " ") + t;
    header.push_back("tags: " + tags);
    for (const auto& [k, v] : g.stats) header.push_back(fmt::format("{}: {:.17g}", k, v));
    SequenceFile f = to_file(g);
    if (output.empty()) {
        write_sequence(out, f, header);
    } else {
        std::ofstream file(output);
        if (!file) throw std::runtime_error(fmt::format("cannot write '{}'", output));
        write_sequence(file, f, header);
    }
    return 0;
}

void check_options(const Options& o) {
    if (o.format != "text" && o.format != "csv" && o.format != "json") throw std::invalid_argument("format must be text, csv or json");
    if (o.depth > 24) throw std::invalid_argument("depth must not exceed 24");
    if (!(o.tol_feas >= std::numeric_limits<double>::epsilon()) || !(o.tol_gap >= std::numeric_limits<double>::epsilon()))
        throw std::invalid_argument("tolerances must be at least machine epsilon");
    if (!(o.aperture > 0.0)) throw std::invalid_argument("aperture must be positive");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Free-interpolation diagnostics for the Nevanlinna and Smirnov classes", "nevan"};
    app.require_subcommand(1);
    Options o;
    std::string gen_spec;

    auto add_common = [&](CLI::App* sub, bool measure) {
        sub->add_option("input", o.input, "sequence file");
        sub->add_option(measure ? "--gen,--measure" : "--gen", o.gen, "generator spec instead of a file");
        sub->add_option("--format", o.format, "text, csv or json");
        sub->add_option("--depth", o.depth, "grid or tree depth (at most 24)");
        sub->add_option("--levels", o.levels, "level list, e.g. 6..10 or 6,8,10");
        sub->add_option("--aperture", o.aperture, "Stolz aperture");
        sub->add_option("--tol-feas", o.tol_feas, "relative feasibility tolerance");
        sub->add_option("--tol-gap", o.tol_gap, "relative duality-gap tolerance");
    };
    auto* gen = app.add_subcommand("gen", "write a generated configuration");
    gen->add_option("spec", gen_spec, "generator spec, e.g. radial:N=10")->required();
    gen->add_option("-o,--output", o.output, "output file (default stdout)");
    auto* analyze = app.add_subcommand("analyze", "phi, separation, Blaschke sum and condition tables");
    add_common(analyze, false);
    auto* majorant = app.add_subcommand("majorant", "harmonic-majorant LP verdict with certificates");
    add_common(majorant, false);
    auto* bal = app.add_subcommand("balayage", "balayage sup, Carleson windows and the summability condition");
    add_common(bal, true);
    auto* maximal = app.add_subcommand("maximal", "nontangential and shadow maximal functions");
    add_common(maximal, false);
    maximal->add_option("--mode", o.mode, "m, sharp or both");
    maximal->add_option("--window", o.window, "half-plane window lo,hi");
    auto* borichev = app.add_subcommand("borichev", "dyadic antichain supremum with witness");
    add_common(borichev, false);

    std::vector<std::string> argv_store{"nevan"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_spec, o.output, out);
        check_options(o);
        Report r;
        if (analyze->parsed())
            r = cmd_analyze(o);
        else if (majorant->parsed())
            r = cmd_majorant(o);
        else if (bal->parsed())
            r = cmd_balayage(o);
        else if (maximal->parsed())
            r = cmd_maximal(o);
        else
            r = cmd_borichev(o);
        emit(r, o.format, out);
        return r.exit_code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace nevan::cli
