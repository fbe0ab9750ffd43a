#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

#include "hyperchroma/bigint.hpp"

namespace hyperchroma {

/// Exact rational number: reduced fraction with positive denominator.
class ExactRational {
public:
    ExactRational() : num_(0), den_(1) {}
    ExactRational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT
    ExactRational(long long value) : num_(value), den_(1) {}          // NOLINT

    ExactRational(BigInt numerator, BigInt denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.is_zero()) throw std::domain_error("ExactRational: zero denominator");
        if (den_.signum() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (g > BigInt(1)) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        if (num_.is_zero()) den_ = BigInt(1);
    }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }
    bool is_integer() const { return den_ == BigInt(1); }

    static int compare(const ExactRational& a, const ExactRational& b) {
        // denominators are positive, so cross-multiplication preserves order
        return BigInt::compare(a.num_ * b.den_, b.num_ * a.den_);
    }

    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ExactRational& a, const ExactRational& b) { return !(a == b); }
    friend bool operator<(const ExactRational& a, const ExactRational& b) {
        return compare(a, b) < 0;
    }
    friend bool operator>(const ExactRational& a, const ExactRational& b) {
        return compare(a, b) > 0;
    }
    friend bool operator<=(const ExactRational& a, const ExactRational& b) {
        return compare(a, b) <= 0;
    }
    friend bool operator>=(const ExactRational& a, const ExactRational& b) {
        return compare(a, b) >= 0;
    }

    friend ExactRational operator+(const ExactRational& a, const ExactRational& b) {
        return ExactRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ExactRational operator-(const ExactRational& a, const ExactRational& b) {
        return ExactRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ExactRational operator*(const ExactRational& a, const ExactRational& b) {
        return ExactRational(a.num_ * b.num_, a.den_ * b.den_);
    }

    static ExactRational min(const ExactRational& a, const ExactRational& b) {
        return compare(a, b) <= 0 ? a : b;
    }

    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactRational& v) {
        return os << v.to_string();
    }

private:
    BigInt num_;
    BigInt den_;
};

}  // namespace hyperchroma
