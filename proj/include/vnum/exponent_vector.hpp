#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "error.hpp"

namespace vnum {

using Exponent = std::uint32_t;
using Degree = std::uint64_t;

/// Checked exponent addition; throws ExponentOverflow instead of wrapping.
inline Exponent add_exponents(Exponent a, Exponent b) {
    if (a > std::numeric_limits<Exponent>::max() - b) throw ExponentOverflow();
    return a + b;
}

inline Exponent mul_exponent(Exponent a, std::uint64_t k) {
    const std::uint64_t r = static_cast<std::uint64_t>(a) * k;
    if (k != 0 && r / k != a) throw ExponentOverflow();
    if (r > std::numeric_limits<Exponent>::max()) throw ExponentOverflow();
    return static_cast<Exponent>(r);
}

/// A point of Z^n_{>=0}, i.e. the exponent of the monomial x^a.
///
/// Ordering is lexicographic on the entries; it is the canonical order used
/// for generator sets and for every tie-break in the library.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t n) : e_(n, 0) {}
    ExponentVector(std::initializer_list<Exponent> entries) : e_(entries) {}
    explicit ExponentVector(std::vector<Exponent> entries) : e_(std::move(entries)) {}

    static ExponentVector unit(std::size_t n, std::size_t i) {
        ExponentVector v(n);
        v.e_.at(i) = 1;
        return v;
    }

    std::size_t size() const noexcept { return e_.size(); }
    Exponent operator[](std::size_t i) const noexcept { return e_[i]; }
    Exponent& operator[](std::size_t i) noexcept { return e_[i]; }
    std::span<const Exponent> entries() const noexcept { return e_; }
    auto begin() const noexcept { return e_.begin(); }
    auto end() const noexcept { return e_.end(); }

    Degree degree() const noexcept {
        return std::accumulate(e_.begin(), e_.end(), Degree{0});
    }

    bool is_zero() const noexcept {
        return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x == 0; });
    }

    /// Number of variables with a positive exponent.
    std::size_t support_size() const noexcept {
        return static_cast<std::size_t>(
            std::count_if(e_.begin(), e_.end(), [](Exponent x) { return x != 0; }));
    }

    /// Componentwise <=, i.e. x^this divides x^other.
    bool divides(const ExponentVector& other) const noexcept {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > other.e_[i]) return false;
        return true;
    }

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) {
        return a.e_ <=> b.e_;
    }

private:
    std::vector<Exponent> e_;
};

inline void require_same_dimension(std::size_t expected, std::size_t got) {
    if (expected != got) throw DimensionMismatch(expected, got);
}

inline ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    require_same_dimension(a.size(), b.size());
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = add_exponents(a[i], b[i]);
    return r;
}

inline ExponentVector scale(const ExponentVector& a, std::uint64_t k) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul_exponent(a[i], k);
    return r;
}

/// Componentwise max, the exponent of lcm(x^a, x^b).
inline ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
    require_same_dimension(a.size(), b.size());
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

/// Exponent of x^a / gcd(x^a, x^b), i.e. a - min(a, b).
inline ExponentVector divide_out(const ExponentVector& a, const ExponentVector& b) {
    require_same_dimension(a.size(), b.size());
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - std::min(a[i], b[i]);
    return r;
}

/// Orders by total degree first, then lexicographically.
struct DegreeLexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        const Degree da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a < b;
    }
};

struct ExponentVectorHash {
    std::size_t operator()(const ExponentVector& v) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (Exponent x : v) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

} // namespace vnum
