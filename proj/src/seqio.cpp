#include "nevan/seqio.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace nevan {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(fmt::format("line {}: {}", line, what)), line_(line) {}

namespace {

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

double parse_number(const std::string& tok, std::size_t line) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || !std::isfinite(v))
        throw ParseError(line, fmt::format("expected a finite number, got '{}'", tok));
    return v;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

SequenceFile parse_sequence(std::istream& in) {
    SequenceFile f;
    std::string raw;
    std::size_t lineno = 0;
    bool seen_point = false;
    std::optional<bool> valued;
    std::vector<std::size_t> ordinary;   // file index of ordinary points -> sequence index
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        if (line.rfind("mode:", 0) == 0) {
            if (seen_point) throw ParseError(lineno, "mode header must precede the points");
            std::string m = trim(line.substr(5));
            if (m == "disk")
                f.mode = FileMode::Disk;
            else if (m == "halfplane")
                f.mode = FileMode::HalfPlane;
            else
                throw ParseError(lineno, fmt::format("unknown mode '{}'", m));
            continue;
        }
        auto tok = split(line);
        std::size_t base = 0;
        std::size_t need = 2;
        char kind = ' ';
        if (tok[0] == "@" || tok[0] == "~" || tok[0] == "*") {
            kind = tok[0][0];
            base = 1;
            need = kind == '@' ? 2 : 3;
        }
        std::size_t given = tok.size() - base;
        if (given != need && given != need + 1)
            throw ParseError(lineno, fmt::format("expected {} or {} fields, got {}", need, need + 1, given));
        bool has_value = given == need + 1;
        if (valued && *valued != has_value) throw ParseError(lineno, "values must be given on every line or on none");
        valued = has_value;
        std::vector<double> x;
        for (std::size_t i = base; i < tok.size(); ++i) x.push_back(parse_number(tok[i], lineno));
        seen_point = true;

        try {
            if (f.mode == FileMode::HalfPlane) {
                if (kind == '@' || kind == '~') throw ParseError(lineno, "disk point syntax in a halfplane file");
                ScaledHalfPlanePoint p = kind == '*' ? ScaledHalfPlanePoint{x[0], x[1], x[2]}
                                                     : ScaledHalfPlanePoint{x[0], x[1], 0.0};
                if (!(p.ys > 0.0)) throw ParseError(lineno, "half-plane points need y > 0");
                f.halfplane.push_back(p);
            } else if (kind == '*') {
                throw ParseError(lineno, "half-plane point syntax in a disk file");
            } else if (kind == '~') {
                double a = x[0];
                if (a < 0.0 || a != std::floor(a) || a >= static_cast<double>(f.disk.size()))
                    throw ParseError(lineno, "satellite anchor must index an earlier point");
                f.disk.add_satellite(static_cast<std::size_t>(a), x[1], x[2]);
            } else if (kind == '@') {
                f.disk.add(DiskPoint::polar_depth(x[0], x[1]));
            } else {
                if (!(std::hypot(x[0], x[1]) < 1.0)) throw ParseError(lineno, "point lies outside the open unit disk");
                f.disk.add(DiskPoint(x[0], x[1]));
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
        if (has_value) f.values.push_back(x.back());
    }
    f.has_values = valued.value_or(false);
    if (f.has_values && f.mode == FileMode::Disk) f.disk.set_values(f.values);
    return f;
}

SequenceFile read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(fmt::format("cannot open '{}'", path));
    return parse_sequence(in);
}

void write_sequence(std::ostream& out, const SequenceFile& f, const std::vector<std::string>& header_comments) {
    for (const auto& c : header_comments) out << "# " << c << '\n';
    out << "mode: " << (f.mode == FileMode::Disk ? "disk" : "halfplane") << '\n';
    auto value = [&](std::size_t i) { return f.has_values ? fmt::format(" {:.17g}", f.values[i]) : std::string(); };
    if (f.mode == FileMode::HalfPlane) {
        for (std::size_t i = 0; i < f.halfplane.size(); ++i) {
            const auto& p = f.halfplane[i];
            if (p.log_scale == 0.0)
                out << fmt::format("{:.17g} {:.17g}{}\n", p.xs, p.ys, value(i));
            else
                out << fmt::format("* {:.17g} {:.17g} {:.17g}{}\n", p.xs, p.ys, p.log_scale, value(i));
        }
        return;
    }
    for (std::size_t i = 0; i < f.disk.size(); ++i) {
        const auto& link = f.disk.link(i);
        const auto& z = f.disk[i];
        if (link)
            out << fmt::format("~ {} {:.17g} {:.17g}{}\n", link->anchor, link->log_rho, link->angle, value(i));
        else if (DiskPoint(z.re(), z.im()).depth() == z.depth())
            out << fmt::format("{:.17g} {:.17g}{}\n", z.re(), z.im(), value(i));
        else
            // depth drives dyadic location; keep it exact
            out << fmt::format("@ {:.17g} {:.17g}{}\n", z.depth(), z.arg(), value(i));
    }
}

SequenceFile to_file(const GeneratedConfig& g) {
    SequenceFile f;
    if (!g.halfplane.empty()) {
        f.mode = FileMode::HalfPlane;
        f.halfplane = g.halfplane;
        f.values = g.halfplane_values;
        f.has_values = !f.values.empty();
        return f;
    }
    if (g.measure) {
        std::vector<DiskPoint> pts;
        for (const auto& a : g.measure->atoms()) {
            pts.push_back(a.point);
            f.values.push_back(a.mass);
        }
        f.disk = PointSequence(pts);
        f.has_values = true;
        f.disk.set_values(f.values);
        return f;
    }
    f.disk = g.sequence;
    if (g.sequence.has_values()) {
        f.values = g.sequence.values();
        f.has_values = true;
    }
    return f;
}

DiskMeasure file_measure(const SequenceFile& f) {
    if (f.mode != FileMode::Disk) throw std::invalid_argument("measures are read from disk-mode files");
    if (!f.has_values) return sequence_measure(f.disk);
    DiskMeasure mu;
    for (std::size_t i = 0; i < f.disk.size(); ++i) {
        if (f.values[i] < 0.0) throw std::invalid_argument("measure masses must be nonnegative");
        if (f.values[i] > 0.0) mu.add(f.disk[i], f.values[i]);
    }
    return mu;
}

}  // namespace nevan
