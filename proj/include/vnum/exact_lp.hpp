#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace vnum {

using Rational = boost::multiprecision::cpp_rational;

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    std::vector<Rational> x;
    Rational objective;
};

namespace detail {

// Dense tableau over exact rationals, Bland's rule throughout so the method
// terminates on degenerate problems.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), t_((rows + 1) * (cols + 1)), basis_(rows) {}

    Rational& at(std::size_t r, std::size_t c) { return t_[r * (cols_ + 1) + c]; }
    Rational& rhs(std::size_t r) { return at(r, cols_); }
    Rational& cost(std::size_t c) { return at(rows_, c); }
    std::size_t& basic(std::size_t r) { return basis_[r]; }

    void pivot(std::size_t pr, std::size_t pc) {
        const Rational p = at(pr, pc);
        for (std::size_t c = 0; c <= cols_; ++c) at(pr, c) /= p;
        for (std::size_t r = 0; r <= rows_; ++r) {
            if (r == pr) continue;
            const Rational f = at(r, pc);
            if (f == 0) continue;
            for (std::size_t c = 0; c <= cols_; ++c) at(r, c) -= f * at(pr, c);
        }
        basis_[pr] = pc;
    }

    // Minimizes the cost row over columns < allowed. Returns false if unbounded.
    bool optimize(std::size_t allowed) {
        for (;;) {
            std::optional<std::size_t> enter;
            for (std::size_t c = 0; c < allowed; ++c)
                if (cost(c) < 0) {
                    enter = c;
                    break;
                }
            if (!enter) return true;
            std::optional<std::size_t> leave;
            Rational best_ratio;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (at(r, *enter) <= 0) continue;
                Rational ratio = rhs(r) / at(r, *enter);
                if (!leave || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            if (!leave) return false;
            pivot(*leave, *enter);
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> t_;
    std::vector<std::size_t> basis_;
};

} // namespace detail

/// min c·x subject to A x = b, x >= 0, solved exactly by two-phase simplex.
inline LpResult solve_lp(const std::vector<std::vector<Rational>>& A, std::vector<Rational> b, const std::vector<Rational>& c) {
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    for (const auto& row : A)
        if (row.size() != n) throw DimensionMismatch(n, row.size());
    if (b.size() != m) throw DimensionMismatch(m, b.size());

    // Columns: n structural, m artificial.
    detail::Tableau tab(m, n + m);
    for (std::size_t r = 0; r < m; ++r) {
        const bool flip = b[r] < 0;
        for (std::size_t j = 0; j < n; ++j) tab.at(r, j) = flip ? Rational(-A[r][j]) : A[r][j];
        tab.rhs(r) = flip ? Rational(-b[r]) : b[r];
        tab.at(r, n + r) = 1;
        tab.basic(r) = n + r;
    }
    // Phase I cost: sum of artificials, expressed in the non-basic columns.
    for (std::size_t j = 0; j <= n + m; ++j) {
        Rational s = 0;
        if (j < n || j == n + m)
            for (std::size_t r = 0; r < m; ++r) s -= j == n + m ? tab.rhs(r) : tab.at(r, j);
        tab.at(m, j) = s;
    }
    tab.optimize(n + m);
    if (tab.at(m, n + m) != 0) return {LpStatus::infeasible, {}, 0};

    // Drive remaining zero-level artificials out of the basis where possible.
    for (std::size_t r = 0; r < m; ++r) {
        if (tab.basic(r) < n) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (tab.at(r, j) != 0) {
                tab.pivot(r, j);
                break;
            }
    }

    // Phase II cost row.
    for (std::size_t j = 0; j <= n + m; ++j) tab.at(m, j) = j < n ? c[j] : Rational(0);
    for (std::size_t r = 0; r < m; ++r) {
        const std::size_t bcol = tab.basic(r);
        if (bcol >= n) continue;
        const Rational f = tab.at(m, bcol);
        if (f == 0) continue;
        for (std::size_t j = 0; j <= n + m; ++j) tab.at(m, j) -= f * tab.at(r, j);
    }
    if (!tab.optimize(n)) return {LpStatus::unbounded, {}, 0};

    LpResult out{LpStatus::optimal, std::vector<Rational>(n, 0), 0};
    for (std::size_t r = 0; r < m; ++r)
        if (tab.basic(r) < n) out.x[tab.basic(r)] = tab.rhs(r);
    for (std::size_t j = 0; j < n; ++j) out.objective += c[j] * out.x[j];
    return out;
}

} // namespace vnum
