#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nevan/blaschke.hpp"
#include "nevan/measures.hpp"
#include "nevan/sequences.hpp"

namespace nevan {

// Text format, one point per line, '#' starts a comment:
//   mode: disk | halfplane      optional header, default disk
//   re im [value]               ordinary point
//   @ depth theta [value]       disk point given by 1 - |z| and its argument
//   ~ anchor log_rho angle [value]   satellite of the ordinary point at index anchor
//   * xs ys log_scale [value]   half-plane point e^{log_scale}(xs + i ys)
// Values are all-or-nothing.
enum class FileMode { Disk, HalfPlane };

struct SequenceFile {
    FileMode mode = FileMode::Disk;
    PointSequence disk;
    std::vector<ScaledHalfPlanePoint> halfplane;
    std::vector<double> values;
    bool has_values = false;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

SequenceFile parse_sequence(std::istream& in);
SequenceFile read_sequence_file(const std::string& path);

void write_sequence(std::ostream& out, const SequenceFile& f, const std::vector<std::string>& header_comments = {});

// File view of a generated configuration; measures are written with their atom masses as values.
SequenceFile to_file(const GeneratedConfig& g);

// μ = Σ value·δ_z when the file carries values, μ_Λ = Σ (1 - |λ|) δ_λ otherwise.
DiskMeasure file_measure(const SequenceFile& f);

}  // namespace nevan
