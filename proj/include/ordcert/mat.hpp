#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordcert/fp.hpp"

namespace ordcert {

/// Dense matrix over F_p, row major. Row-vector convention throughout the
/// library: linear maps act on the right, x |-> x*M, so composition of maps
/// is left-to-right matrix multiplication.
class Mat {
public:
    Mat() : rows_(0), cols_(0), p_(2) {}
    Mat(std::size_t rows, std::size_t cols, std::uint64_t p)
        : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {
        Fp::check_modulus(p);
    }

    static Mat identity(std::size_t n, std::uint64_t p);
    static Mat zero(std::size_t rows, std::size_t cols, std::uint64_t p) { return Mat(rows, cols, p); }
    static Mat row_vector(const std::vector<std::uint64_t>& entries, std::uint64_t p);
    static Mat from_rows(const std::vector<std::vector<std::uint64_t>>& rows, std::uint64_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t modulus() const { return p_; }

    std::uint64_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Fp entry(std::size_t i, std::size_t j) const { return Fp(static_cast<std::int64_t>(at(i, j)), p_); }
    void set(std::size_t i, std::size_t j, Fp x);
    void set(std::size_t i, std::size_t j, std::int64_t value) { set(i, j, Fp(value, p_)); }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat scaled(Fp c) const;
    Mat operator-() const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const;
    Mat transpose() const;
    Mat row(std::size_t i) const;
    void set_row(std::size_t i, const Mat& r);
    Mat hstack(const Mat& o) const;
    Mat vstack(const Mat& o) const;
    Mat submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    /// Rank by exact Gaussian elimination.
    std::size_t rank() const;

    /// Reduced row echelon form; pivot column indices returned via out-param.
    Mat rref(std::vector<std::size_t>* pivots = nullptr) const;

    /// Columns form a basis of the right kernel {x : M x = 0}; cols = cols() - rank().
    Mat kernel_basis() const;

    /// Rows form a basis of the left kernel {x : x M = 0} (row convention null space).
    Mat left_kernel() const;

    /// Row space basis in reduced echelon form (zero rows dropped).
    Mat row_basis() const;

    /// Solve A X = B for X; std::nullopt when inconsistent.
    static std::optional<Mat> solve_right(const Mat& a, const Mat& b);

    /// Solve X A = B for X; std::nullopt when inconsistent. (Row convention.)
    static std::optional<Mat> solve_left(const Mat& a, const Mat& b);

    std::optional<Mat> inverse() const;

    /// Reduce a row vector against echelonized rows (residue of x mod the row space).
    Mat reduce_against(const Mat& echelon_rows, const std::vector<std::size_t>& pivots) const;

    std::string to_string() const;

private:
    void match(const Mat& o) const {
        if (p_ != o.p_) throw ModulusMismatch("Mat: mixed moduli");
    }

    std::size_t rows_, cols_;
    std::uint64_t p_;
    std::vector<std::uint64_t> a_;
};

/// Concatenate the rows of several matrices (all same width).
Mat stack_rows(const std::vector<Mat>& mats, std::size_t cols, std::uint64_t p);

}  // namespace ordcert
