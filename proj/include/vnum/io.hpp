#pragma once

#include <cctype>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "monomial_ideal.hpp"

namespace vnum {

namespace detail {

class IdealTextParser {
public:
    IdealTextParser(std::string_view text, std::size_t n) : s_(text), n_(n) {}

    MonomialIdeal parse() {
        skip_ws();
        if (pos_ == s_.size()) return MonomialIdeal::zero(n_);
        if (s_[pos_] == '0') {
            ++pos_;
            skip_ws();
            if (pos_ != s_.size()) fail("trailing input after zero ideal");
            return MonomialIdeal::zero(n_);
        }
        std::vector<ExponentVector> gens;
        for (;;) {
            gens.push_back(monomial());
            skip_ws();
            if (pos_ == s_.size()) break;
            expect(',');
        }
        return minimalize(n_, std::move(gens));
    }

private:
    ExponentVector monomial() {
        ExponentVector m(n_);
        skip_ws();
        if (peek() == '1') {
            ++pos_;
            return m;
        }
        for (;;) {
            skip_ws();
            const std::size_t at = pos_;
            if (peek() != 'x') fail("expected variable 'x<i>'");
            ++pos_;
            if (peek() == '_') ++pos_;
            const std::size_t idx = number();
            if (idx == 0 || idx > n_)
                fail_at("unknown variable index x" + std::to_string(idx) + " (ring has " + std::to_string(n_) + " variables)", at);
            Exponent e = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                const std::size_t v = number();
                if (v > std::numeric_limits<Exponent>::max()) fail("exponent too large");
                e = static_cast<Exponent>(v);
            }
            m[idx - 1] = add_exponents(m[idx - 1], e);
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
        }
        return m;
    }

    std::size_t number() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        std::size_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            const std::size_t d = static_cast<std::size_t>(s_[pos_] - '0');
            if (v > (std::numeric_limits<std::size_t>::max() - d) / 10) fail("number too large");
            v = v * 10 + d;
            ++pos_;
        }
        return v;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
    [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

    std::string_view s_;
    std::size_t n_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses `x1*x2, x2^3` style text into an ideal of K[x1..xn]. `1` is the
/// unit monomial; empty text or `0` is the zero ideal.
inline MonomialIdeal parse_ideal(std::string_view text, std::size_t n) {
    return detail::IdealTextParser(text, n).parse();
}

inline std::string to_string(const ExponentVector& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(i + 1);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

/// Canonical text form; parse_ideal(to_string(I), n) == I.
inline std::string to_string(const MonomialIdeal& I) {
    if (I.is_zero()) return "0";
    std::string out;
    for (const auto& g : I.generators()) {
        if (!out.empty()) out += ", ";
        out += to_string(g);
    }
    return out;
}

inline std::string to_string(const MonomialPrime& p) {
    std::string out = "(";
    for (std::size_t i : p.support()) {
        if (out.size() > 1) out += ',';
        out += 'x' + std::to_string(i + 1);
    }
    return out + ")";
}

/// Parses a 1-based index list such as `1,2,4` into a prime of K[x1..xn].
inline MonomialPrime parse_prime(std::string_view text, std::size_t n) {
    std::vector<std::size_t> support;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == 'x')) ++pos;
    };
    while (true) {
        skip();
        if (pos >= text.size()) break;
        const std::size_t at = pos;
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) throw ParseError("expected a variable index", pos);
        std::size_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
            if (v > n) break;
            ++pos;
        }
        if (v == 0 || v > n) throw ParseError("unknown variable index " + std::to_string(v), at);
        support.push_back(v - 1);
        skip();
        if (pos < text.size()) {
            if (text[pos] != ',') throw ParseError("expected ','", pos);
            ++pos;
        }
    }
    if (support.empty()) throw ParseError("empty prime", 0);
    return MonomialPrime(n, std::move(support));
}

} // namespace vnum
