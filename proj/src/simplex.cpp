#include "nevan/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nevan {

std::string to_string(LpStatus s) {
    switch (s) {
        case LpStatus::Optimal: return "OPTIMAL";
        case LpStatus::IllConditioned: return "ILL_CONDITIONED";
        case LpStatus::Infeasible: return "INFEASIBLE";
        case LpStatus::Unbounded: return "UNBOUNDED";
        case LpStatus::IterationLimit: return "ITERATION_LIMIT";
    }
    return "UNKNOWN";
}

namespace {

class Tableau {
public:
    Tableau(const std::vector<std::vector<double>>& A, const std::vector<double>& b, const std::vector<double>& c,
            const SimplexOptions& opt)
        : m_(b.size()), n_(c.size()), w_(n_ + 2), opt_(opt), D_((m_ + 2) * (n_ + 2), 0.0), B_(m_), N_(n_ + 1),
          scale_(m_, 1.0) {
        for (std::size_t i = 0; i < m_; ++i) {
            double mx = 0.0;
            for (double v : A[i]) mx = std::max(mx, std::fabs(v));
            if (mx > 0.0) scale_[i] = 1.0 / mx;
            for (std::size_t j = 0; j < n_; ++j) at(i, j) = A[i][j] * scale_[i];
            at(i, n_) = -1.0;
            at(i, n_ + 1) = b[i] * scale_[i];
            B_[i] = static_cast<long>(n_ + i);
        }
        for (std::size_t j = 0; j < n_; ++j) {
            N_[j] = static_cast<long>(j);
            at(m_, j) = -c[j];
        }
        N_[n_] = -1;
        at(m_ + 1, n_) = 1.0;
        max_iter_ = opt.max_iterations > 0 ? opt.max_iterations : 50 * static_cast<long>(m_ + n_) + 1000;
    }

    LpResult solve() {
        LpResult res;
        std::size_t r = 0;
        for (std::size_t i = 1; i < m_; ++i)
            if (at(i, n_ + 1) < at(r, n_ + 1)) r = i;
        if (m_ > 0 && at(r, n_ + 1) < -opt_.pivot_tol) {
            pivot(r, n_);
            Outcome o = run(2);
            if (o == Outcome::Limit) return finish(res, LpStatus::IterationLimit);
            if (o == Outcome::Unbounded || at(m_ + 1, n_ + 1) < -1e-9) return finish(res, LpStatus::Infeasible);
            for (std::size_t i = 0; i < m_; ++i) {
                if (B_[i] != -1) continue;
                std::size_t s = n_ + 1;
                double best = 0.0;
                for (std::size_t j = 0; j <= n_; ++j) {
                    if (N_[j] == -1) continue;
                    if (std::fabs(at(i, j)) > best) {
                        best = std::fabs(at(i, j));
                        s = j;
                    }
                }
                if (s <= n_ && best > 0.0) pivot(i, s);
            }
        }
        Outcome o = run(1);
        if (o == Outcome::Limit) return finish(res, LpStatus::IterationLimit);
        if (o == Outcome::Unbounded) return finish(res, LpStatus::Unbounded);
        return finish(res, LpStatus::Optimal);
    }

private:
    enum class Outcome { Optimal, Unbounded, Limit };

    double& at(std::size_t i, std::size_t j) { return D_[i * w_ + j]; }

    void pivot(std::size_t r, std::size_t s) {
        double* a = &D_[r * w_];
        double inv = 1.0 / a[s];
        for (std::size_t i = 0; i < m_ + 2; ++i) {
            if (i == r) continue;
            double* row = &D_[i * w_];
            double f = row[s];
            if (f == 0.0) continue;
            double k = f * inv;
            for (std::size_t j = 0; j < w_; ++j) row[j] -= a[j] * k;
            row[s] = a[s] * k;
        }
        for (std::size_t j = 0; j < w_; ++j)
            if (j != s) a[j] *= inv;
        for (std::size_t i = 0; i < m_ + 2; ++i)
            if (i != r) at(i, s) *= -inv;
        a[s] = inv;
        std::swap(B_[r], N_[s]);
        ++iterations_;
    }

    Outcome run(int phase) {
        std::size_t x = (phase == 1) ? m_ : m_ + 1;
        int degenerate = 0;
        bool bland = false;
        const double tol = opt_.pivot_tol;
        for (;;) {
            if (iterations_ >= max_iter_) return Outcome::Limit;
            std::size_t s = n_ + 1;
            for (std::size_t j = 0; j <= n_; ++j) {
                if (N_[j] == -phase) continue;
                double v = at(x, j);
                if (!(v < -tol)) continue;
                if (s == n_ + 1) {
                    s = j;
                    continue;
                }
                if (bland) {
                    if (N_[j] < N_[s]) s = j;
                } else {
                    double cur = at(x, s);
                    if (v < cur || (v == cur && N_[j] < N_[s])) s = j;
                }
            }
            if (s == n_ + 1) return Outcome::Optimal;
            std::size_t r = m_;
            double best = 0.0;
            for (std::size_t i = 0; i < m_; ++i) {
                double d = at(i, s);
                if (!(d > tol)) continue;
                double ratio = at(i, n_ + 1) / d;
                if (r == m_ || ratio < best || (ratio == best && B_[i] < B_[r])) {
                    r = i;
                    best = ratio;
                }
            }
            if (r == m_) return Outcome::Unbounded;
            if (std::fabs(at(r, n_ + 1)) <= tol) {
                if (++degenerate >= opt_.bland_after) bland = true;
            } else {
                degenerate = 0;
            }
            pivot(r, s);
        }
    }

    double condition_estimate() {
        // ||B^{-1}||_1 from the slack columns, ||B||_1 from the basic columns.
        double inv_norm = 1.0;
        for (std::size_t j = 0; j <= n_; ++j) {
            if (N_[j] < static_cast<long>(n_)) continue;
            double s = 0.0;
            for (std::size_t i = 0; i < m_; ++i) s += std::fabs(at(i, j));
            inv_norm = std::max(inv_norm, s);
        }
        double b_norm = 1.0;
        for (std::size_t i = 0; i < m_; ++i) {
            long v = B_[i];
            if (v >= 0 && v < static_cast<long>(n_)) b_norm = std::max(b_norm, col_norm_[static_cast<std::size_t>(v)]);
            if (v == -1) b_norm = std::max(b_norm, static_cast<double>(m_));
        }
        return inv_norm * b_norm;
    }

    LpResult& finish(LpResult& res, LpStatus status) {
        res.status = status;
        res.iterations = iterations_;
        res.x.assign(n_, 0.0);
        res.duals.assign(m_, 0.0);
        if (status != LpStatus::Optimal) {
            res.objective = status == LpStatus::Unbounded ? std::numeric_limits<double>::infinity()
                                                          : -std::numeric_limits<double>::infinity();
            return res;
        }
        for (std::size_t i = 0; i < m_; ++i)
            if (B_[i] >= 0 && B_[i] < static_cast<long>(n_)) res.x[static_cast<std::size_t>(B_[i])] = at(i, n_ + 1);
        for (std::size_t j = 0; j <= n_; ++j)
            if (N_[j] >= static_cast<long>(n_)) {
                std::size_t row = static_cast<std::size_t>(N_[j]) - n_;
                res.duals[row] = at(m_, j) * scale_[row];
            }
        res.objective = at(m_, n_ + 1);
        res.condition = condition_estimate();
        if (res.condition > opt_.ill_conditioned) res.status = LpStatus::IllConditioned;
        return res;
    }

public:
    void set_column_norms(const std::vector<std::vector<double>>& A) {
        col_norm_.assign(n_, 0.0);
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < n_; ++j) col_norm_[j] += std::fabs(A[i][j]) * scale_[i];
    }

private:
    std::size_t m_, n_, w_;
    SimplexOptions opt_;
    std::vector<double> D_;
    std::vector<long> B_, N_;
    std::vector<double> scale_;
    std::vector<double> col_norm_;
    long iterations_ = 0;
    long max_iter_ = 0;
};

}  // namespace

LpResult simplex_maximize(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                          const std::vector<double>& c, const SimplexOptions& opt) {
    if (A.size() != b.size()) throw std::invalid_argument("constraint matrix and right-hand side differ in rows");
    for (const auto& row : A)
        if (row.size() != c.size()) throw std::invalid_argument("constraint matrix rows must match the objective length");
    for (const auto& row : A)
        for (double v : row)
            if (!std::isfinite(v)) throw std::invalid_argument("constraint matrix entries must be finite");
    Tableau t(A, b, c, opt);
    t.set_column_norms(A);
    return t.solve();
}

}  // namespace nevan
