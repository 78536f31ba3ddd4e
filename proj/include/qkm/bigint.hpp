// Arbitrary-precision signed integers. Sign-magnitude, base 2^32 limbs.
#ifndef QKM_BIGINT_HPP
#define QKM_BIGINT_HPP

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace qkm {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v < 0) { sign_ = -1; }
        else if (v > 0) { sign_ = 1; }
        unsigned long long m = sign_ < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                         : static_cast<unsigned long long>(v);
        while (m) { mag_.push_back(static_cast<uint32_t>(m)); m >>= 32; }
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt fromString(const std::string& s) {
        size_t p = 0;
        int sg = 1;
        if (p < s.size() && (s[p] == '+' || s[p] == '-')) { if (s[p] == '-') sg = -1; ++p; }
        if (p == s.size()) throw std::invalid_argument("BigInt: empty numeral");
        BigInt r;
        for (; p < s.size(); ++p) {
            if (s[p] < '0' || s[p] > '9') throw std::invalid_argument("BigInt: bad digit in '" + s + "'");
            r.mulSmallInPlace(10);
            r.addSmallInPlace(static_cast<uint32_t>(s[p] - '0'));
        }
        if (!r.mag_.empty()) r.sign_ = sg;
        return r;
    }

    bool isZero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    bool fitsLL() const {
        if (mag_.size() > 2) return false;
        unsigned long long m = magLL();
        if (sign_ >= 0) return m <= 0x7fffffffffffffffULL;
        return m <= 0x8000000000000000ULL;
    }
    long long toLL() const {
        if (!fitsLL()) throw std::overflow_error("BigInt: does not fit in long long");
        unsigned long long m = magLL();
        return sign_ < 0 ? -static_cast<long long>(m - 1) - 1 : static_cast<long long>(m);
    }

    friend BigInt operator-(const BigInt& a) {
        BigInt r = a;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = addMag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmpMag(a.mag_, b.mag_);
            if (c == 0) return r;
            if (c > 0) { r.mag_ = subMag(a.mag_, b.mag_); r.sign_ = a.sign_; }
            else { r.mag_ = subMag(b.mag_, a.mag_); r.sign_ = b.sign_; }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.sign_ == 0 || b.sign_ == 0) return r;
        r.mag_ = mulMag(a.mag_, b.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Truncated quotient/remainder, C semantics: sign(rem) == sign(a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        std::vector<uint32_t> qm, rm;
        divmodMag(a.mag_, b.mag_, qm, rm);
        q.mag_ = std::move(qm); q.sign_ = qm_sign(q.mag_, a.sign_ * b.sign_);
        r.mag_ = std::move(rm); r.sign_ = qm_sign(r.mag_, a.sign_);
    }
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    static BigInt gcd(const BigInt& a, const BigInt& b) {
        std::vector<uint32_t> x = a.mag_, y = b.mag_;
        if (x.empty()) return absOf(b);
        if (y.empty()) return absOf(a);
        int shift = 0;
        while (!oddMag(x) && !oddMag(y)) { shrMag1(x); shrMag1(y); ++shift; }
        while (!oddMag(x)) shrMag1(x);
        while (!y.empty()) {
            while (!oddMag(y)) shrMag1(y);
            if (cmpMag(x, y) > 0) x.swap(y);
            y = subMag(y, x);
        }
        BigInt r;
        r.mag_ = std::move(x);
        for (int i = 0; i < shift; ++i) shlMag1(r.mag_);
        r.sign_ = r.mag_.empty() ? 0 : 1;
        return r;
    }

    static BigInt absOf(const BigInt& a) {
        BigInt r = a;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmpMag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    std::string toString() const {
        if (sign_ == 0) return "0";
        std::vector<uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            uint64_t rem = 0;
            for (size_t i = m.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            for (int k = 0; k < 9; ++k) { digits.push_back(static_cast<char>('0' + rem % 10)); rem /= 10; }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        std::string out;
        if (sign_ < 0) out.push_back('-');
        out.append(digits.rbegin(), digits.rend());
        return out;
    }

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;  // little-endian, no trailing zero limbs

    unsigned long long magLL() const {
        unsigned long long m = 0;
        if (mag_.size() > 1) m = static_cast<unsigned long long>(mag_[1]) << 32;
        if (!mag_.empty()) m |= mag_[0];
        return m;
    }
    static int qm_sign(const std::vector<uint32_t>& m, int s) { return m.empty() ? 0 : s; }

    void mulSmallInPlace(uint32_t f) {
        uint64_t carry = 0;
        for (auto& limb : mag_) {
            uint64_t cur = static_cast<uint64_t>(limb) * f + carry;
            limb = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
    }
    void addSmallInPlace(uint32_t v) {
        uint64_t carry = v;
        for (size_t i = 0; carry && i < mag_.size(); ++i) {
            uint64_t cur = mag_[i] + carry;
            mag_[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
    }

    static int cmpMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<uint32_t> addMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r = big;
        uint64_t carry = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            uint64_t cur = r[i] + carry + (i < small.size() ? small[i] : 0);
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            if (!carry && i >= small.size()) break;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
        return r;
    }
    // requires a >= b
    static std::vector<uint32_t> subMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            borrow = 0;
            if (cur < 0) { cur += (1LL << 32); borrow = 1; }
            r[i] = static_cast<uint32_t>(cur);
            if (!borrow && i >= b.size()) break;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    static std::vector<uint32_t> mulMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size() + b.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + r[i + j] + carry;
                r[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            size_t k = i + b.size();
            while (carry) {
                uint64_t cur = r[k] + carry;
                r[k++] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    static bool oddMag(const std::vector<uint32_t>& m) { return !m.empty() && (m[0] & 1); }
    static void shrMag1(std::vector<uint32_t>& m) {
        uint32_t carry = 0;
        for (size_t i = m.size(); i-- > 0;) {
            uint32_t nc = m[i] & 1;
            m[i] = (m[i] >> 1) | (carry << 31);
            carry = nc;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
    }
    static void shlMag1(std::vector<uint32_t>& m) {
        uint32_t carry = 0;
        for (auto& limb : m) {
            uint32_t nc = limb >> 31;
            limb = (limb << 1) | carry;
            carry = nc;
        }
        if (carry) m.push_back(carry);
    }
    static size_t bitLen(const std::vector<uint32_t>& m) {
        if (m.empty()) return 0;
        return 32 * (m.size() - 1) + (32 - std::countl_zero(m.back()));
    }
    static bool bitAt(const std::vector<uint32_t>& m, size_t i) {
        return (m[i >> 5] >> (i & 31)) & 1;
    }
    static void divmodMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                          std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        q.clear(); r.clear();
        if (cmpMag(a, b) < 0) { r = a; return; }
        if (b.size() == 1) {
            uint64_t d = b[0], rem = 0;
            q.assign(a.size(), 0);
            for (size_t i = a.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | a[i];
                q[i] = static_cast<uint32_t>(cur / d);
                rem = cur % d;
            }
            while (!q.empty() && q.back() == 0) q.pop_back();
            if (rem) r.push_back(static_cast<uint32_t>(rem));
            return;
        }
        size_t bits = bitLen(a);
        q.assign(a.size(), 0);
        for (size_t i = bits; i-- > 0;) {
            shlMag1(r);
            if (bitAt(a, i)) {
                if (r.empty()) r.push_back(1);
                else {
                    uint64_t cur = r[0] | 1u;
                    r[0] = static_cast<uint32_t>(cur);
                }
            }
            if (cmpMag(r, b) >= 0) {
                r = subMag(r, b);
                q[i >> 5] |= (1u << (i & 31));
            }
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
    }
};

}  // namespace qkm

#endif
