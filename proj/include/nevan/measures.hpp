#pragma once

#include <vector>

#include "nevan/geometry.hpp"

namespace nevan {

struct DiskAtom {
    DiskPoint point;
    double mass = 0.0;
};

// Finitely atomic positive measure inside the disk.
class DiskMeasure {
public:
    DiskMeasure() = default;
    explicit DiskMeasure(std::vector<DiskAtom> atoms);

    void add(const DiskPoint& z, double mass);
    const std::vector<DiskAtom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }
    double total_mass() const;

private:
    std::vector<DiskAtom> atoms_;
};

struct DensityPiece {
    Arc arc;
    double value = 0.0;
};

struct BoundaryAtom {
    double theta = 0.0;
    double mass = 0.0;
};

// Piecewise-constant density on pairwise disjoint arcs plus boundary atoms.
// Mass is taken with respect to normalized arc length σ = dθ/2π.
class BoundaryDensity {
public:
    BoundaryDensity() = default;
    BoundaryDensity(std::vector<DensityPiece> pieces, std::vector<BoundaryAtom> atoms);

    // Sums possibly overlapping pieces into a disjoint partition.
    static BoundaryDensity from_overlapping(const std::vector<DensityPiece>& pieces,
                                            std::vector<BoundaryAtom> atoms = {});
    static BoundaryDensity constant(double value);

    const std::vector<DensityPiece>& pieces() const { return pieces_; }
    const std::vector<BoundaryAtom>& atoms() const { return atoms_; }
    double value_at(double theta) const;
    double total_mass() const;
    double absolutely_continuous_mass() const;
    bool quasi_bounded() const { return atoms_.empty(); }

private:
    std::vector<DensityPiece> pieces_;
    std::vector<BoundaryAtom> atoms_;
};

// Q(e^{iθ}, r) = { z : 1 - |z| ≤ r, |Arg z - θ| ≤ r }.
struct CarlesonWindow {
    double theta = 0.0;
    double r = 1.0;

    CarlesonWindow(double theta_, double r_);
    bool contains(const DiskPoint& z) const;
};

}  // namespace nevan
