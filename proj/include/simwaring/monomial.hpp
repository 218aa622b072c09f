#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "simwaring/bigint.hpp"
#include "simwaring/errors.hpp"

namespace simwaring {

/// A monomial x0^a0 * x1^a1 * ... over a fixed number of variables,
/// stored as its exponent vector. Immutable after construction.
class Monomial {
public:
    /// The constant monomial 1.
    explicit Monomial(int nvars) : exponents_(check_nvars(nvars), 0) {}

    Monomial(int nvars, std::vector<int> exponents) : exponents_(std::move(exponents)) {
        check_nvars(nvars);
        if (static_cast<int>(exponents_.size()) != nvars)
            throw std::invalid_argument("exponent vector length does not match nvars");
        for (int e : exponents_)
            if (e < 0) throw std::invalid_argument("negative exponent");
    }

    int nvars() const { return static_cast<int>(exponents_.size()); }
    int exponent(int var) const { return exponents_.at(static_cast<std::size_t>(var)); }
    const std::vector<int>& exponents() const { return exponents_; }

    int degree() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }
    bool is_constant() const { return degree() == 0; }

    /// Componentwise <=.
    bool divides(const Monomial& other) const {
        require_same_nvars(*this, other);
        for (int i = 0; i < nvars(); ++i)
            if (exponents_[i] > other.exponents_[i]) return false;
        return true;
    }

    /// Canonical text form: ascending variable indices, exponent 1 omitted,
    /// zero exponents skipped; the constant monomial renders as "1".
    std::string str() const {
        std::string out;
        for (int i = 0; i < nvars(); ++i) {
            int e = exponents_[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            if (!out.empty()) out += '*';
            out += 'x';
            out += std::to_string(i);
            if (e != 1) {
                out += '^';
                out += std::to_string(e);
            }
        }
        return out.empty() ? "1" : out;
    }

    /// Accepts the term grammar `x<i>(^<e>)?("*" term)*`, the bracket form
    /// `[e0,e1,...]` listing all nvars exponents, and "1" for the constant.
    /// Repeated variables sum their exponents.
    static Monomial parse(const std::string& text, int nvars);

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exponents_ == b.exponents_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    /// Lexicographic on exponent vectors; a deterministic total order for sets.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        require_same_nvars(a, b);
        return a.exponents_ < b.exponents_;
    }

    static void require_same_nvars(const Monomial& a, const Monomial& b) {
        if (a.nvars() != b.nvars())
            throw std::invalid_argument("monomials live in different variable counts");
    }

private:
    static int check_nvars(int nvars) {
        if (nvars <= 0) throw std::invalid_argument("nvars must be positive");
        return nvars;
    }

    std::vector<int> exponents_;
};

inline Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial::require_same_nvars(a, b);
    std::vector<int> exps(static_cast<std::size_t>(a.nvars()));
    for (int i = 0; i < a.nvars(); ++i) exps[i] = std::min(a.exponent(i), b.exponent(i));
    return Monomial(a.nvars(), std::move(exps));
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial::require_same_nvars(a, b);
    std::vector<int> exps(static_cast<std::size_t>(a.nvars()));
    for (int i = 0; i < a.nvars(); ++i) exps[i] = std::max(a.exponent(i), b.exponent(i));
    return Monomial(a.nvars(), std::move(exps));
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial::require_same_nvars(a, b);
    std::vector<int> exps(static_cast<std::size_t>(a.nvars()));
    for (int i = 0; i < a.nvars(); ++i) exps[i] = a.exponent(i) + b.exponent(i);
    return Monomial(a.nvars(), std::move(exps));
}

/// a / gcd(a, b): componentwise max(a_i - b_i, 0). The generator-wise step
/// behind colon ideals.
inline Monomial colon_quotient(const Monomial& a, const Monomial& b) {
    Monomial::require_same_nvars(a, b);
    std::vector<int> exps(static_cast<std::size_t>(a.nvars()));
    for (int i = 0; i < a.nvars(); ++i) exps[i] = std::max(a.exponent(i) - b.exponent(i), 0);
    return Monomial(a.nvars(), std::move(exps));
}

/// Complex Waring rank of a monomial: with S the nonzero exponents,
/// prod_{a in S}(a+1) / (min(S)+1). Exact; rejects the constant monomial.
inline BigInt waring_rank(const Monomial& m) {
    if (m.is_constant())
        throw hypothesis_error("waring rank is undefined for the constant monomial");
    BigInt product = 1;
    int min_exp = -1;
    for (int e : m.exponents()) {
        if (e == 0) continue;
        product *= e + 1;
        if (min_exp < 0 || e < min_exp) min_exp = e;
    }
    return product / (min_exp + 1);
}

/// Indices of the minimal nonzero exponent (restricted to the support).
inline std::set<int> min_positions(const Monomial& m) {
    if (m.is_constant())
        throw hypothesis_error("min positions are undefined for the constant monomial");
    int min_exp = 0;
    for (int e : m.exponents())
        if (e > 0 && (min_exp == 0 || e < min_exp)) min_exp = e;
    std::set<int> positions;
    for (int i = 0; i < m.nvars(); ++i)
        if (m.exponent(i) == min_exp) positions.insert(i);
    return positions;
}

namespace detail {

inline void skip_spaces(const std::string& text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

inline long parse_integer(const std::string& text, std::size_t& pos, const char* what) {
    skip_spaces(text, pos);
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw parse_error(std::string("expected ") + what + " in monomial '" + text + "'");
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1000000) throw parse_error(std::string(what) + " too large in '" + text + "'");
        ++pos;
    }
    return negative ? -value : value;
}

} // namespace detail

inline Monomial Monomial::parse(const std::string& text, int nvars) {
    check_nvars(nvars);
    std::size_t pos = 0;
    detail::skip_spaces(text, pos);
    if (pos >= text.size()) throw parse_error("empty monomial");

    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);

    if (text[pos] == '[') {
        ++pos;
        for (int i = 0; i < nvars; ++i) {
            long e = detail::parse_integer(text, pos, "exponent");
            if (e < 0) throw parse_error("negative exponent in '" + text + "'");
            exps[static_cast<std::size_t>(i)] = static_cast<int>(e);
            detail::skip_spaces(text, pos);
            if (i + 1 < nvars) {
                if (pos >= text.size() || text[pos] != ',')
                    throw parse_error("bracket form needs " + std::to_string(nvars) +
                                      " exponents in '" + text + "'");
                ++pos;
            }
        }
        detail::skip_spaces(text, pos);
        if (pos >= text.size() || text[pos] != ']')
            throw parse_error("bracket form needs " + std::to_string(nvars) + " exponents in '" +
                              text + "'");
        ++pos;
        detail::skip_spaces(text, pos);
        if (pos != text.size()) throw parse_error("trailing characters in '" + text + "'");
        return Monomial(nvars, std::move(exps));
    }

    if (text[pos] == '1') {
        std::size_t after = pos + 1;
        detail::skip_spaces(text, after);
        if (after == text.size()) return Monomial(nvars); // the constant monomial
    }

    while (true) {
        detail::skip_spaces(text, pos);
        if (pos >= text.size() || (text[pos] != 'x' && text[pos] != 'X'))
            throw parse_error("expected variable term in '" + text + "'");
        ++pos;
        long index = detail::parse_integer(text, pos, "variable index");
        if (index < 0 || index >= nvars)
            throw parse_error("variable index " + std::to_string(index) + " out of range in '" +
                              text + "' (nvars " + std::to_string(nvars) + ")");
        long exponent = 1;
        detail::skip_spaces(text, pos);
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            exponent = detail::parse_integer(text, pos, "exponent");
            if (exponent < 0) throw parse_error("negative exponent in '" + text + "'");
        }
        exps[static_cast<std::size_t>(index)] += static_cast<int>(exponent);
        if (exps[static_cast<std::size_t>(index)] > 1000000)
            throw parse_error("exponent too large in '" + text + "'");
        detail::skip_spaces(text, pos);
        if (pos == text.size()) break;
        if (text[pos] != '*') throw parse_error("expected '*' between terms in '" + text + "'");
        ++pos;
    }
    return Monomial(nvars, std::move(exps));
}

inline Monomial parse_monomial(const std::string& text, int nvars) {
    return Monomial::parse(text, nvars);
}

} // namespace simwaring
