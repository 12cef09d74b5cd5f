#include "ordcert/mat.hpp"

#include <sstream>

namespace ordcert {

Mat Mat::identity(std::size_t n, std::uint64_t p) {
    Mat m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::row_vector(const std::vector<std::uint64_t>& entries, std::uint64_t p) {
    Mat m(1, entries.size(), p);
    for (std::size_t j = 0; j < entries.size(); ++j) m.at(0, j) = entries[j] % p;
    return m;
}

Mat Mat::from_rows(const std::vector<std::vector<std::uint64_t>>& rows, std::uint64_t p) {
    if (rows.empty()) return Mat(0, 0, p);
    Mat m(rows.size(), rows[0].size(), p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw DimensionMismatch("Mat::from_rows: ragged rows");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j] % p;
    }
    return m;
}

void Mat::set(std::size_t i, std::size_t j, Fp x) {
    if (x.modulus() != p_) throw ModulusMismatch("Mat::set: mixed moduli");
    at(i, j) = x.residue();
}

Mat Mat::operator+(const Mat& o) const {
    match(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("Mat::operator+");
    Mat m(rows_, cols_, p_);
    for (std::size_t k = 0; k < a_.size(); ++k) {
        std::uint64_t s = a_[k] + o.a_[k];
        m.a_[k] = s >= p_ ? s - p_ : s;
    }
    return m;
}

Mat Mat::operator-(const Mat& o) const {
    match(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("Mat::operator-");
    Mat m(rows_, cols_, p_);
    for (std::size_t k = 0; k < a_.size(); ++k)
        m.a_[k] = a_[k] >= o.a_[k] ? a_[k] - o.a_[k] : a_[k] + p_ - o.a_[k];
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    match(o);
    if (cols_ != o.rows_) throw DimensionMismatch("Mat::operator*: inner dimensions");
    Mat m(rows_, o.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                m.at(i, j) = (m.at(i, j) + x * o.at(k, j)) % p_;
        }
    return m;
}

Mat Mat::scaled(Fp c) const {
    if (c.modulus() != p_) throw ModulusMismatch("Mat::scaled");
    Mat m(rows_, cols_, p_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = (a_[k] * c.residue()) % p_;
    return m;
}

Mat Mat::operator-() const {
    Mat m(rows_, cols_, p_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] == 0 ? 0 : p_ - a_[k];
    return m;
}

bool Mat::is_zero() const {
    for (auto x : a_)
        if (x != 0) return false;
    return true;
}

Mat Mat::transpose() const {
    Mat m(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Mat Mat::row(std::size_t i) const {
    Mat m(1, cols_, p_);
    for (std::size_t j = 0; j < cols_; ++j) m.at(0, j) = at(i, j);
    return m;
}

void Mat::set_row(std::size_t i, const Mat& r) {
    if (r.cols_ != cols_ || r.rows_ != 1) throw DimensionMismatch("Mat::set_row");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = r.at(0, j);
}

Mat Mat::hstack(const Mat& o) const {
    match(o);
    if (rows_ != o.rows_) throw DimensionMismatch("Mat::hstack");
    Mat m(rows_, cols_ + o.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
    }
    return m;
}

Mat Mat::vstack(const Mat& o) const {
    match(o);
    if (cols_ != o.cols_) throw DimensionMismatch("Mat::vstack");
    Mat m(rows_ + o.rows_, cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(rows_ + i, j) = o.at(i, j);
    return m;
}

Mat Mat::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Mat m(nr, nc, p_);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = at(r0 + i, c0 + j);
    return m;
}

Mat Mat::rref(std::vector<std::size_t>* pivots) const {
    Mat m = *this;
    if (pivots) pivots->clear();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t sel = r;
        while (sel < rows_ && m.at(sel, c) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(r, j));
        std::uint64_t inv = Fp(static_cast<std::int64_t>(m.at(r, c)), p_).inverse().residue();
        for (std::size_t j = 0; j < cols_; ++j) m.at(r, j) = (m.at(r, j) * inv) % p_;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            std::uint64_t f = m.at(i, c);
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j) {
                std::uint64_t sub = (f * m.at(r, j)) % p_;
                m.at(i, j) = m.at(i, j) >= sub ? m.at(i, j) - sub : m.at(i, j) + p_ - sub;
            }
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return m;
}

std::size_t Mat::rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
}

Mat Mat::kernel_basis() const {
    std::vector<std::size_t> piv;
    Mat e = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : piv) is_pivot[c] = true;
    std::size_t nullity = cols_ - piv.size();
    Mat k(cols_, nullity, p_);
    std::size_t col = 0;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        k.at(f, col) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) {
            std::uint64_t v = e.at(i, f);
            k.at(piv[i], col) = v == 0 ? 0 : p_ - v;
        }
        ++col;
    }
    return k;
}

Mat Mat::left_kernel() const { return transpose().kernel_basis().transpose(); }

Mat Mat::row_basis() const {
    std::vector<std::size_t> piv;
    Mat e = rref(&piv);
    return e.submatrix(0, 0, piv.size(), cols_);
}

std::optional<Mat> Mat::solve_right(const Mat& a, const Mat& b) {
    a.match(b);
    if (a.rows_ != b.rows_) throw DimensionMismatch("Mat::solve_right: row counts");
    Mat aug = a.hstack(b);
    std::vector<std::size_t> piv;
    Mat e = aug.rref(&piv);
    // Any pivot in the b-block means inconsistency.
    for (auto c : piv)
        if (c >= a.cols_) return std::nullopt;
    Mat x(a.cols_, b.cols_, a.p_);
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) x.at(piv[i], j) = e.at(i, a.cols_ + j);
    return x;
}

std::optional<Mat> Mat::solve_left(const Mat& a, const Mat& b) {
    auto xt = solve_right(a.transpose(), b.transpose());
    if (!xt) return std::nullopt;
    return xt->transpose();
}

std::optional<Mat> Mat::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    auto x = solve_right(*this, identity(rows_, p_));
    if (!x) return std::nullopt;
    if ((*this) * (*x) != identity(rows_, p_)) return std::nullopt;
    return x;
}

Mat Mat::reduce_against(const Mat& echelon_rows, const std::vector<std::size_t>& pivots) const {
    Mat x = *this;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        std::uint64_t f = x.at(0, pivots[i]);
        if (f == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j) {
            std::uint64_t sub = (f * echelon_rows.at(i, j)) % p_;
            x.at(0, j) = x.at(0, j) >= sub ? x.at(0, j) - sub : x.at(0, j) + p_ - sub;
        }
    }
    return x;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

Mat stack_rows(const std::vector<Mat>& mats, std::size_t cols, std::uint64_t p) {
    std::size_t total = 0;
    for (const auto& m : mats) total += m.rows();
    Mat out(total, cols, p);
    std::size_t r = 0;
    for (const auto& m : mats) {
        if (m.cols() != cols) throw DimensionMismatch("stack_rows: width");
        for (std::size_t i = 0; i < m.rows(); ++i, ++r)
            for (std::size_t j = 0; j < cols; ++j) out.at(r, j) = m.at(i, j);
    }
    return out;
}

}  // namespace ordcert
