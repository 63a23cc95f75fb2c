#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "error.hpp"
#include "exact_lp.hpp"
#include "monomial_ideal.hpp"

namespace vnum {

/// Supporting inequality <normal, x> >= offset of a Newton polyhedron.
struct Facet {
    std::vector<std::int64_t> normal;
    std::int64_t offset = 0;

    friend bool operator==(const Facet&, const Facet&) = default;
    friend auto operator<=>(const Facet&, const Facet&) = default;
};

namespace detail {

inline std::int64_t to_int64(const boost::multiprecision::cpp_int& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw ExponentOverflow();
    return static_cast<std::int64_t>(v);
}

// One-dimensional kernel of an (n-1) x n rational matrix, scaled to a
// primitive integer vector; empty when the rank is below n-1.
inline std::vector<std::int64_t> kernel_line(std::vector<std::vector<Rational>> rows, std::size_t n) {
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const Rational p = rows[r][c];
        for (auto& x : rows[r]) x /= p;
        for (std::size_t o = 0; o < rows.size(); ++o) {
            if (o == r || rows[o][c] == 0) continue;
            const Rational f = rows[o][c];
            for (std::size_t j = 0; j < n; ++j) rows[o][j] -= f * rows[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r + 1 != n) return {};
    std::size_t free_col = 0;
    while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;

    std::vector<Rational> v(n, 0);
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -rows[i][free_col];

    boost::multiprecision::cpp_int den = 1;
    for (const auto& x : v) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
    std::vector<boost::multiprecision::cpp_int> iv;
    boost::multiprecision::cpp_int g = 0;
    for (const auto& x : v) {
        boost::multiprecision::cpp_int y = boost::multiprecision::numerator(x) * (den / boost::multiprecision::denominator(x));
        g = boost::multiprecision::gcd(g, y);
        iv.push_back(y);
    }
    std::vector<std::int64_t> out;
    for (auto& y : iv) out.push_back(to_int64(y / g));
    return out;
}

inline void for_each_subset(std::size_t total, std::size_t size, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (pick.size() == size) {
            f(pick);
            return;
        }
        for (std::size_t i = from; i + (size - pick.size()) <= total; ++i) {
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
}

} // namespace detail

/// NP(A) = conv(A) + R^n_{>=0}. Its lattice points at scale k are the
/// exponents of the integral closure of I(A)^k.
class NewtonPolyhedron {
public:
    NewtonPolyhedron(std::size_t n, std::vector<ExponentVector> points) : n_(n) {
        if (points.empty()) throw UndefinedOperation("Newton polyhedron of an empty set");
        points_ = minimalize(n, std::move(points)).generators();
        compute_facets();
    }

    static NewtonPolyhedron of(const MonomialIdeal& I) { return NewtonPolyhedron(I.ambient(), I.generators()); }

    std::size_t ambient() const noexcept { return n_; }
    const std::vector<ExponentVector>& points() const noexcept { return points_; }
    const std::vector<Facet>& facets() const noexcept { return facets_; }

    /// a ∈ k·NP, decided by the facet inequalities <w, a> >= k·h.
    bool contains_scaled(const ExponentVector& a, std::uint64_t k) const {
        require_same_dimension(n_, a.size());
        for (const auto& f : facets_) {
            std::int64_t lhs = 0;
            for (std::size_t i = 0; i < n_; ++i) lhs += f.normal[i] * static_cast<std::int64_t>(a[i]);
            if (lhs < static_cast<std::int64_t>(k) * f.offset) return false;
        }
        return true;
    }

private:
    // Facets are hyperplanes spanned by r+1 points of A together with n-1-r
    // coordinate directions (rays of the orthant); a candidate is kept when
    // its normal is non-negative and every point of A lies on the right side.
    void compute_facets() {
        const std::size_t m = points_.size();
        for (std::size_t r = 0; r + 1 <= std::min(m, n_); ++r) {
            detail::for_each_subset(m, r + 1, [&](const std::vector<std::size_t>& pts) {
                detail::for_each_subset(n_, n_ - 1 - r, [&](const std::vector<std::size_t>& dirs) {
                    std::vector<std::vector<Rational>> rows;
                    const auto& base = points_[pts[0]];
                    for (std::size_t j = 1; j < pts.size(); ++j) {
                        std::vector<Rational> row(n_);
                        for (std::size_t i = 0; i < n_; ++i)
                            row[i] = Rational(static_cast<std::int64_t>(points_[pts[j]][i])) - static_cast<std::int64_t>(base[i]);
                        rows.push_back(std::move(row));
                    }
                    for (std::size_t d : dirs) {
                        std::vector<Rational> row(n_, 0);
                        row[d] = 1;
                        rows.push_back(std::move(row));
                    }
                    auto w = detail::kernel_line(std::move(rows), n_);
                    if (w.empty()) return;
                    const bool any_neg = std::any_of(w.begin(), w.end(), [](std::int64_t x) { return x < 0; });
                    const bool any_pos = std::any_of(w.begin(), w.end(), [](std::int64_t x) { return x > 0; });
                    if (any_neg && any_pos) return;
                    if (any_neg)
                        for (auto& x : w) x = -x;
                    auto eval = [&](const ExponentVector& a) {
                        std::int64_t s = 0;
                        for (std::size_t i = 0; i < n_; ++i) s += w[i] * static_cast<std::int64_t>(a[i]);
                        return s;
                    };
                    const std::int64_t h = eval(base);
                    for (const auto& a : points_)
                        if (eval(a) < h) return;
                    facets_.push_back(Facet{std::move(w), h});
                });
            });
        }
        std::sort(facets_.begin(), facets_.end());
        facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
    }

    std::size_t n_;
    std::vector<ExponentVector> points_;
    std::vector<Facet> facets_;
};

/// Weights λ >= 0 with Σλ = k and Σ λ_i a_i <= a, when they exist.
struct MembershipCertificate {
    bool member = false;
    std::vector<Rational> weights;
};

/// a ∈ k·NP(A), decided by exact LP feasibility over the generators of A.
inline MembershipCertificate np_membership_certificate(const NewtonPolyhedron& np, const ExponentVector& a, std::uint64_t k) {
    require_same_dimension(np.ambient(), a.size());
    if (k == 0) throw UndefinedOperation("membership needs k >= 1");
    const auto& pts = np.points();
    const std::size_t m = pts.size(), n = np.ambient();
    // Variables: λ_1..λ_m, slacks s_1..s_n.
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(m + n, 0);
        for (std::size_t j = 0; j < m; ++j) row[j] = static_cast<std::int64_t>(pts[j][i]);
        row[m + i] = 1;
        rows.push_back(std::move(row));
        rhs.emplace_back(static_cast<std::int64_t>(a[i]));
    }
    std::vector<Rational> sum_row(m + n, 0);
    for (std::size_t j = 0; j < m; ++j) sum_row[j] = 1;
    rows.push_back(std::move(sum_row));
    rhs.emplace_back(static_cast<std::int64_t>(k));

    const auto res = solve_lp(rows, rhs, std::vector<Rational>(m + n, 0));
    if (res.status != LpStatus::optimal) return {};
    return {true, std::vector<Rational>(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(m))};
}

inline bool np_membership(const NewtonPolyhedron& np, const ExponentVector& a, std::uint64_t k) {
    return np_membership_certificate(np, a, k).member;
}

/// Minimal generators of the integral closure of I(A)^k: the componentwise
/// minimal lattice points of k·NP. For every point a' of the box
/// 0 <= a_i <= k·M_i over the first n-1 coordinates the least admissible a_n
/// is read off the facets; every minimal point arises this way.
inline MonomialIdeal closure_power(const NewtonPolyhedron& np, std::uint64_t k) {
    const std::size_t n = np.ambient();
    if (k == 0) return MonomialIdeal::unit(n);
    for (const auto& p : np.points())
        if (p.is_zero()) throw UndefinedOperation("unit ideal");
    if (n == 0) throw UndefinedOperation("unit ideal");

    std::vector<Exponent> cap(n, 0);
    for (const auto& p : np.points())
        for (std::size_t i = 0; i < n; ++i) cap[i] = std::max(cap[i], mul_exponent(p[i], k));

    const auto kk = static_cast<std::int64_t>(k);
    std::vector<ExponentVector> candidates;
    ExponentVector a(n);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i + 1 == n) {
            std::int64_t need = 0;
            for (const auto& f : np.facets()) {
                std::int64_t lhs = 0;
                for (std::size_t j = 0; j + 1 < n; ++j) lhs += f.normal[j] * static_cast<std::int64_t>(a[j]);
                const std::int64_t gap = kk * f.offset - lhs;
                const std::int64_t w = f.normal[n - 1];
                if (w == 0) {
                    if (gap > 0) return;
                    continue;
                }
                need = std::max(need, gap <= 0 ? 0 : (gap + w - 1) / w);
            }
            a[n - 1] = static_cast<Exponent>(need);
            candidates.push_back(a);
            return;
        }
        for (Exponent v = 0; v <= cap[i]; ++v) {
            a[i] = v;
            rec(i + 1);
        }
        a[i] = 0;
    };
    rec(0);
    return minimalize(n, std::move(candidates));
}

inline MonomialIdeal closure_power(const MonomialIdeal& I, std::uint64_t k) {
    if (I.is_zero()) throw UndefinedOperation("integral closure of the zero ideal");
    return closure_power(NewtonPolyhedron::of(I), k);
}

} // namespace vnum
