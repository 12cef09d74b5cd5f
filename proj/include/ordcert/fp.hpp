#pragma once

#include <cstdint>
#include <iosfwd>

#include "ordcert/errors.hpp"

namespace ordcert {

/// Element of the prime field F_p. The modulus travels with the value and
/// mixed-modulus arithmetic throws ModulusMismatch. All arithmetic is exact.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(std::int64_t value, std::uint64_t p) : p_(p) {
        check_modulus(p);
        std::int64_t m = static_cast<std::int64_t>(p);
        std::int64_t r = value % m;
        if (r < 0) r += m;
        v_ = static_cast<std::uint64_t>(r);
    }

    static Fp zero(std::uint64_t p) { return Fp(0, p); }
    static Fp one(std::uint64_t p) { return Fp(1, p); }

    std::uint64_t residue() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(Fp o) const {
        match(o);
        std::uint64_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return raw(s, p_);
    }
    Fp operator-(Fp o) const {
        match(o);
        std::uint64_t s = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
        return raw(s, p_);
    }
    Fp operator*(Fp o) const {
        match(o);
        return raw((v_ * o.v_) % p_, p_);
    }
    Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }

    Fp pow(std::uint64_t e) const {
        Fp acc = one(p_), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Multiplicative inverse; p must be prime and the element nonzero.
    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("Fp::inverse: zero element");
        return pow(p_ - 2);
    }

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    static void check_modulus(std::uint64_t p) {
        if (p < 2 || p >= (1ULL << 31))
            throw std::domain_error("Fp: modulus must satisfy 2 <= p < 2^31");
    }

private:
    static Fp raw(std::uint64_t v, std::uint64_t p) {
        Fp x;
        x.v_ = v;
        x.p_ = p;
        return x;
    }
    void match(const Fp& o) const {
        if (p_ != o.p_) throw ModulusMismatch("Fp: mixed moduli");
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

/// Deterministic primality test, valid for all p < 2^31.
bool is_prime(std::uint64_t n);

/// Smallest prime q >= lo with q ≡ 1 (mod r).
std::uint64_t smallest_prime_with_unity_root(std::uint64_t r, std::uint64_t lo);

}  // namespace ordcert
