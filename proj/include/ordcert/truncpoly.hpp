#pragma once

#include <cstdint>
#include <vector>

#include "ordcert/fp.hpp"

namespace ordcert {

/// Element of F_p[t]/(t^N): coefficients of t^0 .. t^{N-1}. Multiplication
/// discards degrees >= N.
class TruncPoly {
public:
    TruncPoly(std::size_t trunc, std::uint64_t p) : p_(p), c_(trunc, 0) { Fp::check_modulus(p); }

    static TruncPoly scalar(std::int64_t value, std::size_t trunc, std::uint64_t p) {
        TruncPoly f(trunc, p);
        if (trunc > 0) f.c_[0] = Fp(value, p).residue();
        return f;
    }
    static TruncPoly t_power(std::size_t e, std::size_t trunc, std::uint64_t p) {
        TruncPoly f(trunc, p);
        if (e < trunc) f.c_[e] = 1;
        return f;
    }

    std::size_t trunc() const { return c_.size(); }
    std::uint64_t modulus() const { return p_; }
    Fp coeff(std::size_t k) const { return Fp(static_cast<std::int64_t>(c_[k]), p_); }
    void set_coeff(std::size_t k, Fp x) {
        if (x.modulus() != p_) throw ModulusMismatch("TruncPoly::set_coeff");
        c_[k] = x.residue();
    }
    bool is_zero() const {
        for (auto x : c_)
            if (x) return false;
        return true;
    }

    /// Image under t -> 0 (degree-0 part, a ring homomorphism).
    Fp constant_term() const { return coeff(0); }

    TruncPoly operator+(const TruncPoly& o) const {
        match(o);
        TruncPoly f(c_.size(), p_);
        for (std::size_t k = 0; k < c_.size(); ++k) {
            std::uint64_t s = c_[k] + o.c_[k];
            f.c_[k] = s >= p_ ? s - p_ : s;
        }
        return f;
    }

    TruncPoly operator*(const TruncPoly& o) const {
        match(o);
        TruncPoly f(c_.size(), p_);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < c_.size(); ++j)
                f.c_[i + j] = (f.c_[i + j] + c_[i] * o.c_[j]) % p_;
        }
        return f;
    }

    bool operator==(const TruncPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const TruncPoly& o) const { return !(*this == o); }

private:
    void match(const TruncPoly& o) const {
        if (p_ != o.p_ || c_.size() != o.c_.size())
            throw ModulusMismatch("TruncPoly: mixed moduli or truncation orders");
    }

    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

/// Small dense matrix over F_p[t]/(t^N); only the ring operations needed for
/// order arithmetic.
class PolyMat {
public:
    PolyMat(std::size_t rows, std::size_t cols, std::size_t trunc, std::uint64_t p)
        : rows_(rows), cols_(cols), a_(rows * cols, TruncPoly(trunc, p)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    TruncPoly& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const TruncPoly& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    PolyMat operator*(const PolyMat& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("PolyMat::operator*");
        PolyMat m(rows_, o.cols_, a_.empty() ? 0 : a_[0].trunc(), a_.empty() ? 2 : a_[0].modulus());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    m.at(i, j) = m.at(i, j) + at(i, k) * o.at(k, j);
            }
        return m;
    }

    bool operator==(const PolyMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    std::size_t rows_, cols_;
    std::vector<TruncPoly> a_;
};

}  // namespace ordcert
