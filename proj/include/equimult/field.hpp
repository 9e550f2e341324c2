#ifndef EQUIMULT_FIELD_HPP
#define EQUIMULT_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cstdint>
#include <sstream>
#include <string>

#include "errors.hpp"

namespace equimult {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

template <class K>
struct field_ctx;

// ---------------------------------------------------------------------------
// Exact rationals (the field Q).
// ---------------------------------------------------------------------------
class qq {
  public:
    qq() = default;
    explicit qq(long v) : v_(v) {}
    explicit qq(bigint v) : v_(std::move(v)) {}
    explicit qq(bigrat v) : v_(std::move(v)) {}
    qq(long num, long den) : v_(bigrat(num, den)) {}

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }

    qq operator-() const { return qq(bigrat(-v_)); }
    qq& operator+=(const qq& o) { v_ += o.v_; return *this; }
    qq& operator-=(const qq& o) { v_ -= o.v_; return *this; }
    qq& operator*=(const qq& o) { v_ *= o.v_; return *this; }
    qq& operator/=(const qq& o) {
        if (o.is_zero()) throw contract_error("division by zero in Q");
        v_ /= o.v_;
        return *this;
    }

    friend qq operator+(qq a, const qq& b) { return a += b; }
    friend qq operator-(qq a, const qq& b) { return a -= b; }
    friend qq operator*(qq a, const qq& b) { return a *= b; }
    friend qq operator/(qq a, const qq& b) { return a /= b; }
    friend bool operator==(const qq& a, const qq& b) { return a.v_ == b.v_; }
    friend bool operator!=(const qq& a, const qq& b) { return a.v_ != b.v_; }
    // Total order used only for canonical tie-breaking in printouts/sorts.
    friend bool operator<(const qq& a, const qq& b) { return a.v_ < b.v_; }

    qq inv() const {
        if (is_zero()) throw contract_error("inverse of zero in Q");
        return qq(bigrat(1) / v_);
    }

    const bigrat& value() const { return v_; }
    bigint numerator() const { return boost::multiprecision::numerator(v_); }
    bigint denominator() const { return boost::multiprecision::denominator(v_); }

    std::string str() const {
        std::ostringstream os;
        os << v_;
        return os.str();
    }

  private:
    bigrat v_ = 0;
};

template <>
struct field_ctx<qq> {
    using elem = qq;
    qq zero() const { return qq(); }
    qq one() const { return qq(1L); }
    qq from_long(long v) const { return qq(v); }
    qq from_integer(const bigint& v) const { return qq(v); }
    std::uint32_t characteristic() const { return 0; }
    std::size_t order_hint() const { return 0; }  // infinite
    bool operator==(const field_ctx&) const { return true; }
    std::string str() const { return "Q"; }
};

// ---------------------------------------------------------------------------
// Prime fields GF(p), p < 2^31. Elements carry their modulus so values stay
// self-describing; mixing moduli is a caller bug.
// ---------------------------------------------------------------------------
class fp {
  public:
    fp() = default;
    fp(std::uint32_t p, std::int64_t v) : p_(p) {
        assert(p >= 2);
        std::int64_t r = v % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        v_ = static_cast<std::uint32_t>(r);
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    std::uint32_t modulus() const { return p_; }
    std::uint32_t value() const { return v_; }

    fp operator-() const { return make(p_, v_ == 0 ? 0 : p_ - v_); }
    fp& operator+=(const fp& o) {
        check(o);
        std::uint64_t s = static_cast<std::uint64_t>(v_) + o.v_;
        if (s >= p_) s -= p_;
        v_ = static_cast<std::uint32_t>(s);
        return *this;
    }
    fp& operator-=(const fp& o) {
        check(o);
        v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + p_ - o.v_;
        return *this;
    }
    fp& operator*=(const fp& o) {
        check(o);
        v_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v_) * o.v_) % p_);
        return *this;
    }
    fp& operator/=(const fp& o) { return *this *= o.inv(); }

    friend fp operator+(fp a, const fp& b) { return a += b; }
    friend fp operator-(fp a, const fp& b) { return a -= b; }
    friend fp operator*(fp a, const fp& b) { return a *= b; }
    friend fp operator/(fp a, const fp& b) { return a /= b; }
    friend bool operator==(const fp& a, const fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend bool operator!=(const fp& a, const fp& b) { return !(a == b); }
    friend bool operator<(const fp& a, const fp& b) { return a.v_ < b.v_; }

    fp inv() const {
        if (v_ == 0) throw contract_error("inverse of zero in GF(p)");
        return pow(p_ - 2);
    }

    fp pow(std::uint64_t e) const {
        std::uint64_t base = v_, acc = 1;
        while (e) {
            if (e & 1) acc = (acc * base) % p_;
            base = (base * base) % p_;
            e >>= 1;
        }
        return make(p_, static_cast<std::uint32_t>(acc));
    }

    std::string str() const { return std::to_string(v_); }

  private:
    static fp make(std::uint32_t p, std::uint32_t v) {
        fp r;
        r.p_ = p;
        r.v_ = v;
        return r;
    }
    void check(const fp& o) const {
        assert(p_ == o.p_ && "GF(p) modulus mismatch");
        (void)o;
    }

    std::uint32_t p_ = 2;
    std::uint32_t v_ = 0;
};

template <>
struct field_ctx<fp> {
    using elem = fp;
    std::uint32_t p = 2;

    field_ctx() = default;
    explicit field_ctx(std::uint32_t prime) : p(prime) {}

    fp zero() const { return fp(p, 0); }
    fp one() const { return fp(p, 1); }
    fp from_long(long v) const { return fp(p, v); }
    fp from_integer(const bigint& v) const {
        bigint r = v % p;
        if (r < 0) r += p;
        return fp(p, static_cast<std::int64_t>(r));
    }
    std::uint32_t characteristic() const { return p; }
    std::size_t order_hint() const { return p; }
    bool operator==(const field_ctx& o) const { return p == o.p; }
    std::string str() const { return "GF(" + std::to_string(p) + ")"; }
};

inline bool is_prime_u32(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace equimult

#endif
