#pragma once

/**
 * @file polynomial.hpp
 * @brief Exact-coefficient polynomials and the Fibonacci-like family G_i(x).
 *
 * G_0 = G_1 = 1, G_2 = 2 and G_i(x) = G_{i-1}(x) + x * G_{i-2}(x) for i >= 3.
 * Evaluated at m - 1 these give the minimizing weights of an elongated
 * m-ary Huffman tree; evaluated at 1 they give the Fibonacci numbers.
 *
 * Fibonacci index origin used throughout the library: Fib_1 = Fib_2 = 1,
 * Fib_3 = 2, ... so that G_i(1) = Fib_{i+1}. fibonacci() is defined through
 * g_value(k - 1, 1) and nothing else, so there is a single convention.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "mhuff/integer.hpp"

namespace mhuff {

class Polynomial {
public:
    /// The zero polynomial.
    Polynomial() = default;

    /// coeffs[k] is the coefficient of x^k; trailing zeros are stripped.
    explicit Polynomial(std::vector<Integer> coeffs);

    static Polynomial constant(Integer value);

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree of the polynomial; the zero polynomial reports 0.
    std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

    /// Coefficient of x^k, zero beyond the degree.
    Integer coefficient(std::size_t k) const;

    /// Exact evaluation by Horner's rule.
    Integer operator()(const Integer& x) const;

    Polynomial operator+(const Polynomial& other) const;

    /// Multiplies by x^k.
    Polynomial shifted(std::size_t k) const;

    bool operator==(const Polynomial& other) const = default;

    /// Highest degree first, e.g. "x^3 + 9x^2 + 9x + 2"; unit coefficients are elided.
    std::string to_string(char variable = 'x') const;

private:
    std::vector<Integer> coeffs_;
};

Integer eval_poly(const Polynomial& p, const Integer& x);

/// [G_0, ..., G_{count-1}].
std::vector<Polynomial> fibonacci_like_polys(std::size_t count);

/// G_i(m) through the numeric recurrence, without building coefficients.
Integer g_value(std::size_t i, const Integer& m);

/// Classical Fibonacci polynomials [F_1, ..., F_count] with F_1 = 1, F_2 = x,
/// F_i = x F_{i-1} + F_{i-2}. Only used to contrast with G_i.
std::vector<Polynomial> fibonacci_polys(std::size_t count);

/// Fib_k for k >= 1 (Fib_1 = Fib_2 = 1), computed as g_value(k - 1, 1).
/// Throws std::invalid_argument for k == 0.
Integer fibonacci(std::size_t k);

}  // namespace mhuff
