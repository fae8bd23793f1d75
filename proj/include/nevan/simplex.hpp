#pragma once

#include <string>
#include <vector>

namespace nevan {

enum class LpStatus { Optimal, IllConditioned, Infeasible, Unbounded, IterationLimit };

std::string to_string(LpStatus s);

struct LpResult {
    LpStatus status = LpStatus::Optimal;
    double objective = 0.0;
    std::vector<double> x;       // primal solution
    std::vector<double> duals;   // one per constraint row, ≥ 0
    double condition = 1.0;      // 1-norm condition number of the final basis (row-equilibrated)
    long iterations = 0;
    bool solved() const { return status == LpStatus::Optimal || status == LpStatus::IllConditioned; }
};

struct SimplexOptions {
    double pivot_tol = 1e-10;
    int bland_after = 50;             // consecutive degenerate pivots before switching to Bland's rule
    double ill_conditioned = 1e12;
    long max_iterations = 0;          // 0: 50·(rows + cols) + 1000
};

// Dense two-phase simplex for: maximize c·x subject to A x ≤ b, x ≥ 0.
// A is row-major with rows.size() == b.size() and each row of size c.size().
LpResult simplex_maximize(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                          const std::vector<double>& c, const SimplexOptions& opt = {});

}  // namespace nevan
