#include "ordcert/complex.hpp"

#include "ordcert/errors.hpp"

namespace ordcert {

const Module& Complex::term(int deg) const {
    if (!in_range(deg)) throw DegreeMismatch("Complex::term: degree out of range");
    return terms[deg - lo];
}

Mat Complex::diff_at(int deg) const {
    int from = term_dim(deg), to = term_dim(deg + 1);
    if (in_range(deg) && in_range(deg + 1)) return diff[deg - lo];
    return Mat(from, to, algebra->modulus());
}

bool Complex::all_terms_projective() const {
    for (const auto& s : proj_shape)
        if (!s) return false;
    return true;
}

bool Complex::validate() const {
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
        if (static_cast<int>(diff[i].rows()) != terms[i].dim() ||
            static_cast<int>(diff[i].cols()) != terms[i + 1].dim())
            return false;
        for (int a = 0; a < algebra->dim(); ++a)
            if (terms[i].action(a) * diff[i] != diff[i] * terms[i + 1].action(a)) return false;
    }
    for (std::size_t i = 0; i + 2 < terms.size(); ++i)
        if (!(diff[i] * diff[i + 1]).is_zero()) return false;
    return true;
}

Complex concentrated_complex(const Module& m, int degree) {
    Complex x;
    x.algebra = m.algebra();
    x.lo = degree;
    x.terms = {m};
    x.proj_shape = {std::nullopt};
    return x;
}

Complex shift(const Complex& x, int k) {
    Complex y = x;
    y.lo = x.lo - k;
    if (k % 2 != 0)
        for (auto& d : y.diff) d = -d;
    return y;
}

Mat ChainMap::comp_at(int deg) const {
    if (deg >= src.lo && deg <= src.hi()) {
        const Mat& c = comp[deg - src.lo];
        return c;
    }
    return Mat(src.term_dim(deg), dst.term_dim(deg), src.algebra->modulus());
}

bool ChainMap::validate() const {
    if (src.algebra.get() != dst.algebra.get()) return false;
    for (int deg = src.lo; deg <= src.hi(); ++deg) {
        const Mat& f = comp[deg - src.lo];
        if (static_cast<int>(f.rows()) != src.term_dim(deg) ||
            static_cast<int>(f.cols()) != dst.term_dim(deg))
            return false;
        if (src.term_dim(deg) == 0 || dst.term_dim(deg) == 0) continue;
        // module map in each degree
        for (int a = 0; a < src.algebra->dim(); ++a)
            if (src.term(deg).action(a) * f != f * dst.term(deg).action(a)) return false;
    }
    // commutes with differentials: f_n d_Y^n = d_X^n f_{n+1}
    int lo = std::min(src.lo, dst.lo) - 1, hi = std::max(src.hi(), dst.hi()) + 1;
    for (int deg = lo; deg <= hi; ++deg) {
        Mat lhs = comp_at(deg) * dst.diff_at(deg);
        Mat rhs = src.diff_at(deg) * comp_at(deg + 1);
        if (lhs != rhs) return false;
    }
    return true;
}

ChainMap zero_chain_map(const Complex& src, const Complex& dst) {
    ChainMap f{src, dst, {}};
    for (int deg = src.lo; deg <= src.hi(); ++deg)
        f.comp.push_back(Mat(src.term_dim(deg), dst.term_dim(deg), src.algebra->modulus()));
    return f;
}

Complex cone(const ChainMap& f) {
    const Complex& x = f.src;
    const Complex& y = f.dst;
    if (x.algebra.get() != y.algebra.get()) throw AlgebraMismatch("cone");
    const std::uint64_t p = x.algebra->modulus();
    Complex c;
    c.algebra = x.algebra;
    c.lo = std::min(x.lo - 1, y.lo);
    int hi = std::max(x.hi() - 1, y.hi());
    for (int deg = c.lo; deg <= hi; ++deg) {
        Module xm = x.in_range(deg + 1) ? x.term(deg + 1) : zero_module(x.algebra);
        Module ym = y.in_range(deg) ? y.term(deg) : zero_module(y.algebra);
        c.terms.push_back(direct_sum(xm, ym));
        auto sx = x.shape_at(deg + 1), sy = y.shape_at(deg);
        bool xz = x.term_dim(deg + 1) == 0, yz = y.term_dim(deg) == 0;
        if ((sx || xz) && (sy || yz)) {
            std::vector<int> shape;
            if (sx) shape.insert(shape.end(), sx->begin(), sx->end());
            if (sy) shape.insert(shape.end(), sy->begin(), sy->end());
            c.proj_shape.push_back(shape);
        } else {
            c.proj_shape.push_back(std::nullopt);
        }
    }
    // d(x, y) = (-d_X x, f x + d_Y y)
    for (int deg = c.lo; deg < hi; ++deg) {
        int rx = x.term_dim(deg + 1), ry = y.term_dim(deg);
        int cx = x.term_dim(deg + 2), cy = y.term_dim(deg + 1);
        Mat d(rx + ry, cx + cy, p);
        Mat dx = x.diff_at(deg + 1), fy = f.comp_at(deg + 1), dy = y.diff_at(deg);
        for (int i = 0; i < rx; ++i) {
            for (int j = 0; j < cx; ++j) d.at(i, j) = dx.at(i, j) == 0 ? 0 : p - dx.at(i, j);
            for (int j = 0; j < cy; ++j) d.at(i, cx + j) = fy.at(i, j);
        }
        for (int i = 0; i < ry; ++i)
            for (int j = 0; j < cy; ++j) d.at(rx + i, cx + j) = dy.at(i, j);
        c.diff.push_back(d);
    }
    // d o d = 0 is asserted on every constructed complex
    for (std::size_t i = 0; i + 1 < c.diff.size(); ++i)
        if (!(c.diff[i] * c.diff[i + 1]).is_zero())
            throw DegreeMismatch("cone: differential does not square to zero");
    return c;
}

HomologyData homology_data(const Complex& x, int n) {
    HomologyData out;
    const std::uint64_t p = x.algebra->modulus();
    if (!x.in_range(n)) {
        out.cycles = Mat(0, 0, p);
        out.boundaries = Mat(0, 0, p);
        out.h = zero_module(x.algebra);
        return out;
    }
    Mat dn = x.diff_at(n);
    out.cycles = dn.left_kernel().row_basis();
    Mat prev = x.diff_at(n - 1);
    out.boundaries = prev.row_basis();
    Module cyc = submodule_module(x.term(n), out.cycles);
    // boundaries in cycle coordinates
    auto binc = Mat::solve_left(out.cycles, out.boundaries);
    if (!binc) throw DegreeMismatch("homology_data: boundaries not inside cycles (d^2 != 0?)");
    out.h = quotient_module(cyc, binc->row_basis());
    return out;
}

Module homology(const Complex& x, int n) { return homology_data(x, n).h; }

bool is_quasi_iso(const ChainMap& f) {
    if (!f.validate()) return false;
    int lo = std::min(f.src.lo, f.dst.lo), hi = std::max(f.src.hi(), f.dst.hi());
    for (int deg = lo; deg <= hi; ++deg) {
        HomologyData hx = homology_data(f.src, deg);
        HomologyData hy = homology_data(f.dst, deg);
        if (hx.dim() != hy.dim()) return false;
        if (hx.dim() == 0) continue;
        // induced map on homology
        Mat img = hx.cycles * f.comp_at(deg);
        auto in_cyc = Mat::solve_left(hy.cycles, img);
        if (!in_cyc) return false;  // image not inside cycles: not a chain map
        // project to the quotient by boundaries
        Mat proj;
        Module cyc_y = submodule_module(f.dst.term(deg), hy.cycles);
        auto bnd_in = Mat::solve_left(hy.cycles, hy.boundaries);
        quotient_module(cyc_y, bnd_in->row_basis(), &proj);
        Mat induced = *in_cyc * proj;
        // need the composite (cycles of X) -> H(Y) to kill boundaries of X and be onto
        auto bx_in = Mat::solve_left(hx.cycles, hx.boundaries);
        if (!(bx_in->row_basis() * induced).is_zero()) return false;
        if (static_cast<int>(induced.rank()) != hy.dim()) return false;
    }
    return true;
}

int hom_homotopy_dim(const Complex& x, const Complex& y, int n) {
    if (!x.all_terms_projective())
        throw NotProjectiveTerms("hom_homotopy_dim: X must have projective terms");
    const std::uint64_t p = x.algebra->modulus();

    // Bases of Hom_A(X^m, Y^{m+k}) for k = n-1, n, n+1.
    auto hom_bases = [&](int k) {
        std::vector<std::vector<Mat>> per_degree;
        for (int m = x.lo; m <= x.hi(); ++m) {
            if (y.in_range(m + k) && x.term_dim(m) > 0)
                per_degree.push_back(hom_space(x.term(m), y.term(m + k)));
            else
                per_degree.push_back({});
        }
        return per_degree;
    };
    auto total_dim = [&](const std::vector<std::vector<Mat>>& b) {
        std::size_t t = 0;
        for (const auto& v : b) t += v.size();
        return t;
    };

    auto bn = hom_bases(n);
    auto bprev = hom_bases(n - 1);
    std::size_t dim_n = total_dim(bn), dim_prev = total_dim(bprev);
    if (dim_n == 0) return 0;

    // Cocycle condition for f = (f_m): f_m (-1)^n d_Y^{m+n} - d_X^m f_{m+1} = 0,
    // one block row of equations per degree m.
    std::vector<Mat> eq_blocks;
    std::size_t eq_cols = 0;
    for (int m = x.lo; m <= x.hi() + 1; ++m) eq_cols += static_cast<std::size_t>(x.term_dim(m)) * y.term_dim(m + n + 1);
    auto pack_equation = [&](const std::vector<std::vector<Mat>>& basis, int k) {
        // matrix rows: basis elements of degree-k hom families; cols: stacked
        // entries of the resulting degree-(k+1)-shifted family after applying
        // the differential condition. Built column-block per degree m.
        Mat rows(total_dim(basis), 0, p);
        for (int m = x.lo; m <= x.hi() + 1; ++m) {
            std::size_t ncols = static_cast<std::size_t>(x.term_dim(m)) * y.term_dim(m + k + 1);
            Mat blk(total_dim(basis), ncols, p);
            std::size_t r = 0;
            for (int mm = x.lo; mm <= x.hi(); ++mm) {
                for (const auto& f : basis[mm - x.lo]) {
                    Mat val(x.term_dim(m), y.term_dim(m + k + 1), p);
                    if (mm == m && y.in_range(m + k)) {
                        Mat t1 = f * y.diff_at(m + k);
                        val = (k % 2 == 0) ? val + t1 : val - t1;
                    }
                    if (mm == m + 1) {
                        Mat t2 = x.diff_at(m) * f;
                        val = val - t2;
                    }
                    for (int i = 0; i < static_cast<int>(val.rows()); ++i)
                        for (int j = 0; j < static_cast<int>(val.cols()); ++j)
                            blk.at(r, i * val.cols() + j) = val.at(i, j);
                    ++r;
                }
            }
            rows = rows.hstack(blk);
        }
        return rows;
    };

    Mat delta_n = pack_equation(bn, n);  // value of the total-Hom differential per basis elt
    std::size_t cocycle_dim = dim_n - delta_n.rank();
    std::size_t boundary_rank = 0;
    if (dim_prev > 0) {
        // boundaries: image of the differential one degree lower (also the
        // span of null homotopies, up to sign)
        Mat delta_prev_val = pack_equation(bprev, n - 1);
        boundary_rank = delta_prev_val.row_basis().rows();
    }
    if (boundary_rank > cocycle_dim)
        throw DegreeMismatch("hom_homotopy_dim: boundaries exceed cocycles");
    return static_cast<int>(cocycle_dim - boundary_rank);
}

std::vector<std::vector<Mat>> map_to_algebra_blocks(const ProjSum& src, const ProjSum& dst,
                                                    const Mat& map) {
    auto pa = src.algebra;
    const std::uint64_t p = pa->modulus();
    std::vector<std::vector<Mat>> blocks(src.summands());
    for (int cs = 0; cs < src.summands(); ++cs) {
        blocks[cs].reserve(dst.summands());
        Mat gen_row = map.row(src.generator_row(cs));
        for (int cd = 0; cd < dst.summands(); ++cd) {
            auto idx = dst.block_basis(cd);
            int off = dst.offset(cd);
            // algebra coordinates of the block element in e_{w} A e_{u}
            Mat elem(1, pa->dim(), p);
            for (std::size_t k = 0; k < idx.size(); ++k) elem.at(0, idx[k]) = gen_row.at(0, off + k);
            blocks[cs].push_back(elem);
        }
    }
    return blocks;
}

Mat map_from_algebra_blocks(const ProjSum& src, const ProjSum& dst,
                            const std::vector<std::vector<Mat>>& blocks) {
    auto pa = src.algebra;
    const std::uint64_t p = pa->modulus();
    Mat out(src.total_dim(), dst.total_dim(), p);
    for (int cs = 0; cs < src.summands(); ++cs) {
        auto sidx = src.block_basis(cs);
        int soff = src.offset(cs);
        for (int cd = 0; cd < dst.summands(); ++cd) {
            auto didx = dst.block_basis(cd);
            int doff = dst.offset(cd);
            const Mat& elem = blocks[cs][cd];
            // left multiplication by elem: row for path q (of P_u) gets elem * q
            for (std::size_t rq = 0; rq < sidx.size(); ++rq) {
                for (int b = 0; b < pa->dim(); ++b) {
                    std::uint64_t co = elem.at(0, b);
                    if (co == 0) continue;
                    int prod = pa->mul_basis(b, sidx[rq]);
                    if (prod < 0) continue;
                    for (std::size_t cq = 0; cq < didx.size(); ++cq)
                        if (didx[cq] == prod)
                            out.at(soff + rq, doff + cq) = (out.at(soff + rq, doff + cq) + co) % p;
                }
            }
        }
    }
    return out;
}

namespace {

Complex apply_vertex_rotation(const Complex& x) {
    auto pa = std::dynamic_pointer_cast<const PathAlgebra>(x.algebra);
    if (!pa) throw AlgebraMismatch("nakayama_shift: needs a path algebra");
    if (!x.all_terms_projective())
        throw NotProjectiveTerms("nakayama_shift: complex must have projective terms");
    const int r = pa->vertex_count();
    AlgebraMap sigma = rotation_automorphism(pa);

    Complex out;
    out.algebra = x.algebra;
    out.lo = x.lo;
    std::vector<ProjSum> oldsums, newsums;
    for (int deg = x.lo; deg <= x.hi(); ++deg) {
        auto shape = *x.shape_at(deg);
        std::vector<int> rotated;
        for (int v : shape) rotated.push_back((v + 1) % r);
        oldsums.push_back(ProjSum{pa, shape});
        newsums.push_back(ProjSum{pa, rotated});
        out.terms.push_back(newsums.back().to_module());
        out.proj_shape.push_back(rotated);
    }
    for (int i = 0; i + 1 < static_cast<int>(x.terms.size()); ++i) {
        auto blocks = map_to_algebra_blocks(oldsums[i], oldsums[i + 1], x.diff[i]);
        for (auto& row : blocks)
            for (auto& elem : row) elem = sigma.apply(elem);
        out.diff.push_back(map_from_algebra_blocks(newsums[i], newsums[i + 1], blocks));
    }
    return out;
}

}  // namespace

Complex nakayama_shift(const Complex& x) { return apply_vertex_rotation(x); }

Complex rotate_projective_complex(const Complex& x) { return apply_vertex_rotation(x); }

}  // namespace ordcert
