#include "lineup/lp.hpp"

#include <stdexcept>
#include <utility>

namespace lineup {

namespace {

class Tableau {
public:
    Tableau(std::vector<Vector> rows, std::vector<std::size_t> basis, std::size_t columns)
        : t_(std::move(rows)), basis_(std::move(basis)), cols_(columns)
    {
    }

    enum class Outcome { optimal, unbounded };

    /// Maximizes cost over the columns not marked as blocked.
    Outcome maximize(const Vector& cost, const std::vector<bool>& blocked)
    {
        for (;;) {
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_ && enter == cols_; ++j) {
                if (blocked[j] || is_basic(j))
                    continue;
                if (reduced_cost(cost, j) > 0)
                    enter = j;
            }
            if (enter == cols_)
                return Outcome::optimal;

            std::size_t leave = t_.size();
            Rational best;
            for (std::size_t i = 0; i < t_.size(); ++i) {
                if (t_[i][enter] <= 0)
                    continue;
                Rational ratio = t_[i][cols_] / t_[i][enter];
                if (leave == t_.size() || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == t_.size())
                return Outcome::unbounded;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c)
    {
        Rational inv = 1 / t_[r][c];
        for (auto& x : t_[r])
            x *= inv;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (i == r || t_[i][c] == 0)
                continue;
            Rational f = t_[i][c];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (t_[r][j] != 0)
                    t_[i][j] -= f * t_[r][j];
        }
        basis_[r] = c;
    }

    Rational value(const Vector& cost) const
    {
        Rational v = 0;
        for (std::size_t i = 0; i < t_.size(); ++i)
            v += cost[basis_[i]] * t_[i][cols_];
        return v;
    }

    Vector solution() const
    {
        Vector x(cols_, Rational(0));
        for (std::size_t i = 0; i < t_.size(); ++i)
            x[basis_[i]] = t_[i][cols_];
        return x;
    }

    std::vector<Vector>& rows() { return t_; }
    std::vector<std::size_t>& basis() { return basis_; }

private:
    bool is_basic(std::size_t j) const
    {
        for (auto b : basis_)
            if (b == j)
                return true;
        return false;
    }

    Rational reduced_cost(const Vector& cost, std::size_t j) const
    {
        Rational rc = cost[j];
        for (std::size_t i = 0; i < t_.size(); ++i)
            if (t_[i][j] != 0)
                rc -= cost[basis_[i]] * t_[i][j];
        return rc;
    }

    std::vector<Vector> t_;
    std::vector<std::size_t> basis_;
    std::size_t cols_;
};

}  // namespace

const char* to_string(LpStatus status)
{
    switch (status) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::unbounded: return "unbounded";
    case LpStatus::infeasible: return "infeasible";
    }
    return "?";
}

LpResult lp_solve(const LpProblem& p)
{
    const std::size_t n = p.objective.size();
    const std::size_t m = p.equalities.num_rows();
    if (p.equalities.num_cols() != n && m > 0)
        throw std::invalid_argument("lp_solve: constraint width does not match objective");
    if (p.rhs.size() != m)
        throw std::invalid_argument("lp_solve: rhs length mismatch");
    if (p.nonnegative.size() != n)
        throw std::invalid_argument("lp_solve: nonnegativity mask length mismatch");

    // Column layout: one column per nonnegative variable, two (x+, x-) per
    // free variable, then one artificial per row.
    std::vector<std::size_t> plus(n), minus(n, SIZE_MAX);
    std::size_t ncols = 0;
    for (std::size_t j = 0; j < n; ++j) {
        plus[j] = ncols++;
        if (!p.nonnegative[j])
            minus[j] = ncols++;
    }
    const std::size_t structural = ncols;
    const std::size_t total = structural + m;

    std::vector<Vector> rows(m, Vector(total + 1, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = p.rhs[i] < 0;
        for (std::size_t j = 0; j < n; ++j) {
            Rational a = flip ? Rational(-p.equalities.rows[i][j]) : p.equalities.rows[i][j];
            rows[i][plus[j]] = a;
            if (minus[j] != SIZE_MAX)
                rows[i][minus[j]] = -a;
        }
        rows[i][structural + i] = 1;
        rows[i][total] = flip ? Rational(-p.rhs[i]) : p.rhs[i];
        basis[i] = structural + i;
    }

    Tableau tab(std::move(rows), std::move(basis), total);

    Vector phase1(total, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        phase1[structural + i] = -1;
    std::vector<bool> blocked(total, false);
    tab.maximize(phase1, blocked);
    if (tab.value(phase1) < 0)
        return {LpStatus::infeasible, 0, {}};

    // Drive artificials out of the basis; drop rows that are redundant.
    for (std::size_t i = 0; i < tab.rows().size();) {
        if (tab.basis()[i] < structural) {
            ++i;
            continue;
        }
        std::size_t c = structural;
        for (std::size_t j = 0; j < structural; ++j)
            if (tab.rows()[i][j] != 0) {
                c = j;
                break;
            }
        if (c < structural) {
            tab.pivot(i, c);
            ++i;
        } else {
            tab.rows().erase(tab.rows().begin() + static_cast<std::ptrdiff_t>(i));
            tab.basis().erase(tab.basis().begin() + static_cast<std::ptrdiff_t>(i));
        }
    }
    for (std::size_t i = 0; i < m; ++i)
        blocked[structural + i] = true;

    Vector cost(total, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        cost[plus[j]] = p.objective[j];
        if (minus[j] != SIZE_MAX)
            cost[minus[j]] = -p.objective[j];
    }
    auto outcome = tab.maximize(cost, blocked);

    Vector cols = tab.solution();
    Vector x(n);
    for (std::size_t j = 0; j < n; ++j)
        x[j] = minus[j] == SIZE_MAX ? cols[plus[j]] : cols[plus[j]] - cols[minus[j]];

    LpResult result;
    result.witness = std::move(x);
    if (outcome == Tableau::Outcome::unbounded) {
        result.status = LpStatus::unbounded;
    } else {
        result.status = LpStatus::optimal;
        result.value = tab.value(cost);
    }
    return result;
}

}  // namespace lineup
