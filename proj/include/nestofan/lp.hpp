#ifndef NESTOFAN_LP_HPP
#define NESTOFAN_LP_HPP

#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace nestofan {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat value = 0;
    std::vector<Rat> x;
};

/** Exact two-phase simplex over the rationals for
 *      maximize c.x  subject to  A x <= b,  x >= 0.
 *  Bland's rule throughout, so termination is guaranteed. */
class LpSolver {
public:
    LpSolver(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
             const std::vector<Rat>& c)
        : m_(static_cast<int>(b.size())), n_(static_cast<int>(c.size())),
          basic_(m_), nonbasic_(n_ + 1),
          d_(m_ + 2, std::vector<Rat>(n_ + 2, Rat(0)))
    {
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < n_; ++j) d_[i][j] = a[i][j];
        for (int i = 0; i < m_; ++i) {
            basic_[i] = n_ + i;
            d_[i][n_] = -1;
            d_[i][n_ + 1] = b[i];
        }
        for (int j = 0; j < n_; ++j) {
            nonbasic_[j] = j;
            d_[m_][j] = -c[j];
        }
        nonbasic_[n_] = -1;  // auxiliary variable for phase 1
        d_[m_ + 1][n_] = 1;
    }

    LpResult solve()
    {
        LpResult res;
        int r = 0;
        for (int i = 1; i < m_; ++i)
            if (d_[i][n_ + 1] < d_[r][n_ + 1]) r = i;
        if (m_ > 0 && d_[r][n_ + 1] < 0) {
            pivot(r, n_);
            if (!run(1) || d_[m_ + 1][n_ + 1] < 0) {
                res.status = LpStatus::Infeasible;
                return res;
            }
            for (int i = 0; i < m_; ++i)
                if (basic_[i] == -1) {
                    // drive the auxiliary variable out of the (degenerate) basis
                    int s = -1;
                    for (int j = 0; j <= n_ && s == -1; ++j)
                        if (d_[i][j] != 0) s = j;
                    if (s >= 0) pivot(i, s);
                }
        }
        if (!run(2)) {
            res.status = LpStatus::Unbounded;
            return res;
        }
        res.status = LpStatus::Optimal;
        res.value = d_[m_][n_ + 1];
        res.x.assign(n_, Rat(0));
        for (int i = 0; i < m_; ++i)
            if (basic_[i] >= 0 && basic_[i] < n_) res.x[basic_[i]] = d_[i][n_ + 1];
        return res;
    }

private:
    void pivot(int r, int s)
    {
        Rat inv = Rat(1) / d_[r][s];
        for (int i = 0; i < m_ + 2; ++i) {
            if (i == r || d_[i][s] == 0) continue;
            Rat f = d_[i][s] * inv;
            for (int j = 0; j < n_ + 2; ++j)
                if (j != s) d_[i][j] -= d_[r][j] * f;
        }
        for (int j = 0; j < n_ + 2; ++j)
            if (j != s) d_[r][j] *= inv;
        for (int i = 0; i < m_ + 2; ++i)
            if (i != r) d_[i][s] *= -inv;
        d_[r][s] = inv;
        std::swap(basic_[r], nonbasic_[s]);
    }

    bool run(int phase)
    {
        int obj = (phase == 1) ? m_ + 1 : m_;
        for (;;) {
            // Bland: entering = smallest-index eligible nonbasic variable
            int s = -1;
            for (int j = 0; j <= n_; ++j) {
                if (phase == 2 && nonbasic_[j] == -1) continue;
                if (d_[obj][j] < 0 && (s == -1 || nonbasic_[j] < nonbasic_[s])) s = j;
            }
            if (s == -1) return true;
            int r = -1;
            for (int i = 0; i < m_; ++i) {
                if (d_[i][s] <= 0) continue;
                if (r == -1) { r = i; continue; }
                Rat lhs = d_[i][n_ + 1] * d_[r][s];
                Rat rhs = d_[r][n_ + 1] * d_[i][s];
                if (lhs < rhs || (lhs == rhs && basic_[i] < basic_[r])) r = i;
            }
            if (r == -1) return false;  // unbounded
            pivot(r, s);
        }
    }

    int m_, n_;
    std::vector<int> basic_, nonbasic_;
    std::vector<std::vector<Rat>> d_;
};

inline LpResult solve_lp(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                         const std::vector<Rat>& c)
{
    if (a.size() != b.size()) throw std::invalid_argument("lp: row count mismatch");
    for (const auto& row : a)
        if (row.size() != c.size()) throw std::invalid_argument("lp: column count mismatch");
    return LpSolver(a, b, c).solve();
}

}  // namespace nestofan

#endif  // NESTOFAN_LP_HPP
