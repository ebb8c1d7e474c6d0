#include "mhuff/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace mhuff {

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(Integer value) { return Polynomial(std::vector<Integer>{std::move(value)}); }

Integer Polynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

Integer Polynomial::operator()(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<Integer> sum(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t k = 0; k < sum.size(); ++k) {
        sum[k] = coefficient(k) + other.coefficient(k);
    }
    return Polynomial(std::move(sum));
}

Polynomial Polynomial::shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Integer> out(k, Integer(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
}

std::string Polynomial::to_string(char variable) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Integer& c = coeffs_[k];
        if (c == 0) continue;
        Integer magnitude = c < 0 ? Integer(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (k == 0 || magnitude != 1) out += magnitude.str();
        if (k >= 1) out += variable;
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

Integer eval_poly(const Polynomial& p, const Integer& x) { return p(x); }

std::vector<Polynomial> fibonacci_like_polys(std::size_t count) {
    std::vector<Polynomial> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (i <= 1) {
            out.push_back(Polynomial::constant(1));
        } else if (i == 2) {
            out.push_back(Polynomial::constant(2));
        } else {
            out.push_back(out[i - 1] + out[i - 2].shifted(1));
        }
    }
    return out;
}

Integer g_value(std::size_t i, const Integer& m) {
    if (i <= 1) return 1;
    // (G_{k-2}, G_{k-1}) starting at k = 3
    Integer older = 1;
    Integer newer = 2;
    for (std::size_t k = 3; k <= i; ++k) {
        Integer next = newer + m * older;
        older = std::move(newer);
        newer = std::move(next);
    }
    return newer;
}

std::vector<Polynomial> fibonacci_polys(std::size_t count) {
    std::vector<Polynomial> out;
    out.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) {
        if (i == 1) {
            out.push_back(Polynomial::constant(1));
        } else if (i == 2) {
            out.push_back(Polynomial(std::vector<Integer>{0, 1}));
        } else {
            out.push_back(out[i - 2].shifted(1) + out[i - 3]);
        }
    }
    return out;
}

Integer fibonacci(std::size_t k) {
    if (k == 0) throw std::invalid_argument("Fibonacci numbers are indexed from 1");
    return g_value(k - 1, 1);
}

}  // namespace mhuff
