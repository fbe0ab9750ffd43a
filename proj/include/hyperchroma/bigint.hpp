#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperchroma {

/// Arbitrary-precision signed integer.
///
/// Sign-and-magnitude with base-1e9 limbs (little-endian, no trailing zero
/// limbs). Every operation is exact; there is no floating point anywhere in
/// this library. Division truncates toward zero, so the remainder carries the
/// sign of the dividend, matching built-in integer semantics.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {  // NOLINT: implicit by design, mirrors built-in ints
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long mag = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                       : static_cast<unsigned long long>(v);
        while (mag != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(mag % kBase));
            mag /= kBase;
        }
    }

    static BigInt from_string(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("BigInt: empty string");
        bool neg = false;
        std::size_t i = 0;
        if (s[0] == '-' || s[0] == '+') {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
        BigInt r;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("BigInt: bad digit in \"" + std::string(s) + "\"");
            r = r.mul_small(10);
            r = r + BigInt(s[i] - '0');
        }
        if (neg) r.sign_ = -r.sign_;
        return r;
    }

    int signum() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator-(const BigInt& a) {
        BigInt r = a;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        if (a.sign_ == b.sign_) {
            BigInt r;
            r.sign_ = a.sign_;
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            return r;
        }
        int cmp = cmp_mag(a.limbs_, b.limbs_);
        if (cmp == 0) return BigInt();
        BigInt r;
        if (cmp > 0) {
            r.sign_ = a.sign_;
            r.limbs_ = sub_mag(a.limbs_, b.limbs_);
        } else {
            r.sign_ = b.sign_;
            r.limbs_ = sub_mag(b.limbs_, a.limbs_);
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.sign_ = a.sign_ * b.sign_;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = r.limbs_[i + j] +
                                    static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
            std::size_t j = i + b.limbs_.size();
            while (carry != 0) {
                std::uint64_t cur = r.limbs_[j] + carry;
                r.limbs_[j] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
                ++j;
            }
        }
        r.trim();
        return r;
    }

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    struct DivMod;

    /// Truncating division; remainder has the dividend's sign.
    static DivMod divmod(const BigInt& num, const BigInt& den);

    /// ceil(|a| / |b|) for nonzero b; used by the sign-threshold bound.
    static BigInt ceil_div_abs(const BigInt& a, const BigInt& b);

    static BigInt gcd(BigInt a, BigInt b);

    static BigInt pow(const BigInt& base, unsigned long long exp) {
        BigInt r(1), b = base;
        while (exp != 0) {
            if (exp & 1ULL) r *= b;
            b *= b;
            exp >>= 1ULL;
        }
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

    static int compare(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.sign_ >= 0 ? c : -c;
    }

    bool fits_int64() const {
        static const BigInt kMin = BigInt::from_string("-9223372036854775808");
        static const BigInt kMax = BigInt::from_string("9223372036854775807");
        return *this >= kMin && *this <= kMax;
    }

    long long to_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt: does not fit in int64");
        long long v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
        return sign_ < 0 ? -v : v;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::string s = sign_ < 0 ? "-" : "";
        s += std::to_string(limbs_.back());
        for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(limbs_[i]);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
        return os << v.to_string();
    }

private:
    static constexpr std::uint32_t kBase = 1000000000;

    int sign_ = 0;
    std::vector<std::uint32_t> limbs_;

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) sign_ = 0;
    }

    BigInt mul_small(std::uint32_t f) const {
        if (sign_ == 0 || f == 0) return BigInt();
        BigInt r;
        r.sign_ = sign_;
        r.limbs_.reserve(limbs_.size() + 1);
        std::uint64_t carry = 0;
        for (std::uint32_t limb : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
            r.limbs_.push_back(static_cast<std::uint32_t>(cur % kBase));
            carry = cur / kBase;
        }
        while (carry != 0) {
            r.limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
            carry /= kBase;
        }
        return r;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r;
        r.reserve(std::max(a.size(), b.size()) + 1);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
            std::uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r.push_back(static_cast<std::uint32_t>(cur % kBase));
            carry = cur / kBase;
        }
        if (carry != 0) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += kBase;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // schoolbook long division on magnitudes; quotient limb found by binary search
    static std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> divmod_mag(
        const std::vector<std::uint32_t>& num, const std::vector<std::uint32_t>& den) {
        if (cmp_mag(num, den) < 0) return {{}, num};
        std::vector<std::uint32_t> quot(num.size(), 0);
        BigInt rem;  // nonnegative running remainder
        BigInt d;
        d.sign_ = 1;
        d.limbs_ = den;
        for (std::size_t i = num.size(); i-- > 0;) {
            // rem = rem * base + num[i]
            rem.limbs_.insert(rem.limbs_.begin(), num[i]);
            rem.sign_ = 1;
            rem.trim();
            std::uint32_t lo = 0, hi = kBase - 1, q = 0;
            while (lo <= hi) {
                std::uint32_t mid = lo + (hi - lo) / 2;
                if (cmp_mag(d.mul_small(mid).limbs_, rem.limbs_) <= 0) {
                    q = mid;
                    lo = mid + 1;
                } else {
                    if (mid == 0) break;
                    hi = mid - 1;
                }
            }
            quot[i] = q;
            if (q != 0) rem = rem - d.mul_small(q);
        }
        while (!quot.empty() && quot.back() == 0) quot.pop_back();
        return {quot, rem.limbs_};
    }
};

struct BigInt::DivMod {
    BigInt quotient;
    BigInt remainder;
};

inline BigInt::DivMod BigInt::divmod(const BigInt& num, const BigInt& den) {
    if (den.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (num.sign_ == 0) return {};
    auto [qmag, rmag] = divmod_mag(num.limbs_, den.limbs_);
    DivMod res;
    if (!qmag.empty()) {
        res.quotient.sign_ = num.sign_ * den.sign_;
        res.quotient.limbs_ = std::move(qmag);
    }
    if (!rmag.empty()) {
        res.remainder.sign_ = num.sign_;
        res.remainder.limbs_ = std::move(rmag);
    }
    return res;
}

inline BigInt operator/(const BigInt& a, const BigInt& b) { return BigInt::divmod(a, b).quotient; }
inline BigInt operator%(const BigInt& a, const BigInt& b) { return BigInt::divmod(a, b).remainder; }

inline BigInt BigInt::ceil_div_abs(const BigInt& a, const BigInt& b) {
    auto [q, r] = divmod(a.abs(), b.abs());
    if (!r.is_zero()) q += BigInt(1);
    return q;
}

inline BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace hyperchroma
