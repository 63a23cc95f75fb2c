#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "../exponent_vector.hpp"

namespace vnum::detail {

// Calls f(v) for every v ∈ Z^n_{>=0} with |v| = d, in lexicographically
// decreasing order. Stops early when f returns false; returns false then.
inline bool for_each_monomial_of_degree(std::size_t n, Degree d,
                                        const std::function<bool(const ExponentVector&)>& f) {
    ExponentVector v(n);
    if (n == 0) return d == 0 ? f(v) : true;
    std::function<bool(std::size_t, Degree)> rec = [&](std::size_t i, Degree left) -> bool {
        if (i + 1 == n) {
            v[i] = static_cast<Exponent>(left);
            return f(v);
        }
        for (Degree e = left + 1; e-- > 0;) {
            v[i] = static_cast<Exponent>(e);
            if (!rec(i + 1, left - e)) return false;
        }
        return true;
    };
    return rec(0, d);
}

inline std::vector<ExponentVector> monomials_up_to_degree(std::size_t n, Degree max_degree) {
    std::vector<ExponentVector> out;
    for (Degree d = 0; d <= max_degree; ++d)
        for_each_monomial_of_degree(n, d, [&](const ExponentVector& v) {
            out.push_back(v);
            return true;
        });
    return out;
}

} // namespace vnum::detail
