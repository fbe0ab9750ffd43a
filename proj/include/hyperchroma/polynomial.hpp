#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperchroma/bigint.hpp"
#include "hyperchroma/rational.hpp"

namespace hyperchroma {

/// Polynomial in one variable k with exact integer coefficients, stored as a
/// coefficient list in ascending powers with a nonzero leading coefficient
/// (the zero polynomial has an empty list).
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<BigInt> ascending_coeffs)
        : coeffs_(std::move(ascending_coeffs)) {
        trim();
    }

    static IntPolynomial zero() { return IntPolynomial(); }

    static IntPolynomial constant(BigInt c) {
        IntPolynomial p;
        if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
        return p;
    }

    static IntPolynomial monomial(BigInt coeff, int power) {
        if (power < 0) throw std::invalid_argument("IntPolynomial: negative power");
        IntPolynomial p;
        if (coeff.is_zero()) return p;
        p.coeffs_.assign(static_cast<std::size_t>(power) + 1, BigInt(0));
        p.coeffs_.back() = std::move(coeff);
        return p;
    }

    static IntPolynomial variable() { return monomial(BigInt(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero

    const BigInt& coeff(int power) const {
        static const BigInt kZero(0);
        if (power < 0 || power >= static_cast<int>(coeffs_.size())) return kZero;
        return coeffs_[static_cast<std::size_t>(power)];
    }

    const BigInt& leading() const {
        if (is_zero()) throw std::logic_error("IntPolynomial: zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
            if (i < a.coeffs_.size()) r.coeffs_[i] += a.coeffs_[i];
            if (i < b.coeffs_.size()) r.coeffs_[i] += b.coeffs_[i];
        }
        r.trim();
        return r;
    }

    friend IntPolynomial operator-(const IntPolynomial& a) {
        IntPolynomial r = a;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        return a + (-b);
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return IntPolynomial();
        IntPolynomial r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        r.trim();
        return r;
    }

    IntPolynomial& operator+=(const IntPolynomial& b) { return *this = *this + b; }
    IntPolynomial& operator-=(const IntPolynomial& b) { return *this = *this - b; }
    IntPolynomial& operator*=(const IntPolynomial& b) { return *this = *this * b; }

    IntPolynomial scaled(const BigInt& f) const {
        if (f.is_zero()) return IntPolynomial();
        IntPolynomial r = *this;
        for (auto& c : r.coeffs_) c *= f;
        return r;
    }

    IntPolynomial pow(unsigned e) const {
        IntPolynomial r = constant(BigInt(1));
        IntPolynomial b = *this;
        while (e != 0) {
            if (e & 1U) r *= b;
            b *= b;
            e >>= 1U;
        }
        return r;
    }

    BigInt evaluate(const BigInt& k) const {
        BigInt v(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * k + coeffs_[i];
        return v;
    }

    BigInt evaluate(long long k) const { return evaluate(BigInt(k)); }

    /// p(k + c), via Horner in the shifted variable.
    IntPolynomial shift_argument(const BigInt& c) const {
        IntPolynomial shifted_var = IntPolynomial(std::vector<BigInt>{c, BigInt(1)});
        IntPolynomial r;
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            r = r * shifted_var + constant(coeffs_[i]);
        return r;
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

    std::string to_string(const std::string& var = "k") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const BigInt& c = coeffs_[i];
            if (c.is_zero()) continue;
            bool first = s.empty();
            BigInt a = c.abs();
            s += first ? (c.signum() < 0 ? "-" : "") : (c.signum() < 0 ? " - " : " + ");
            bool unit = a == BigInt(1);
            if (i == 0) {
                s += a.to_string();
            } else {
                if (!unit) s += a.to_string();
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
        return os << p.to_string();
    }

private:
    std::vector<BigInt> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
};

/// prod_{i=0}^{p-1} (k - i)
inline IntPolynomial falling_factorial(int p) {
    if (p < 1) throw std::invalid_argument("falling_factorial: p must be >= 1");
    IntPolynomial r = IntPolynomial::constant(BigInt(1));
    for (int i = 0; i < p; ++i)
        r *= IntPolynomial(std::vector<BigInt>{BigInt(-i), BigInt(1)});
    return r;
}

/// C(n, r) as an exact integer (0 when r < 0 or r > n).
inline BigInt binomial(long long n, long long r) {
    if (r < 0 || r > n) return BigInt(0);
    r = std::min(r, n - r);
    BigInt num(1);
    for (long long i = 0; i < r; ++i) {
        num *= BigInt(n - i);
        num = num / BigInt(i + 1);  // exact at each step: product of j consecutive ints is divisible by j!
    }
    return num;
}

/// Eventual sign of an integer polynomial together with an explicit witness
/// threshold: sign(p(k)) equals `sign` for every integer k >= threshold.
///
/// The threshold starts from the Cauchy root bound ceil(1 + max_i |a_i/a_d|)
/// (every real root is strictly below it) and is then tightened downward by
/// exact evaluation while the sign persists. The result is a valid threshold,
/// not a certified minimum one.
struct SignThreshold {
    int sign = 0;                      // -1, 0, +1
    std::optional<BigInt> threshold;   // absent for the zero polynomial
};

inline SignThreshold sign_threshold(const IntPolynomial& p, int max_tighten_steps = 10000) {
    SignThreshold st;
    if (p.is_zero()) return st;
    st.sign = p.leading().signum();
    BigInt max_abs(0);
    for (int i = 0; i < p.degree(); ++i)
        if (p.coeff(i).abs() > max_abs) max_abs = p.coeff(i).abs();
    BigInt n = BigInt(1) + BigInt::ceil_div_abs(max_abs, p.leading());
    for (int step = 0; step < max_tighten_steps && n > BigInt(1); ++step) {
        BigInt candidate = n - BigInt(1);
        if (p.evaluate(candidate).signum() != st.sign) break;
        n = candidate;
    }
    st.threshold = n;
    return st;
}

/// num(k) / den(k) evaluated exactly at an integer point.
inline ExactRational rational_eval(const IntPolynomial& num, const IntPolynomial& den,
                                   const BigInt& k) {
    BigInt d = den.evaluate(k);
    if (d.is_zero()) throw std::domain_error("rational_eval: denominator vanishes at k");
    return ExactRational(num.evaluate(k), d);
}

}  // namespace hyperchroma
