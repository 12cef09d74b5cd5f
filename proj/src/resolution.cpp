#include "ordcert/resolution.hpp"

#include "ordcert/errors.hpp"

namespace ordcert {

Resolution minimal_resolution(const Module& m, int depth) {
    if (depth < 0) throw InsufficientDepth("minimal_resolution: negative depth");
    Resolution res;
    res.module = m;
    res.diffs.push_back(Mat(0, 0, m.modulus()));  // placeholder at index 0

    Cover c0 = projective_cover(m);
    res.terms.push_back(c0.proj);
    res.augmentation = c0.surjection;

    Mat cur_surj = c0.surjection;          // terms[k] -> previous stage module
    Module cur_proj_mod = c0.proj.to_module();
    for (int k = 1; k <= depth; ++k) {
        Mat ker = cur_surj.left_kernel().row_basis();
        Module kermod = submodule_module(cur_proj_mod, ker);
        if (kermod.dim() == 0) {
            // finite projective dimension: pad with zero terms
            ProjSum zero{res.terms[0].algebra, {}};
            for (int j = k; j <= depth; ++j) {
                res.terms.push_back(zero);
                res.diffs.push_back(Mat(0, res.terms[j - 1].total_dim(), m.modulus()));
            }
            return res;
        }
        Cover c = projective_cover(kermod);
        res.terms.push_back(c.proj);
        res.diffs.push_back(c.surjection * ker);  // into terms[k-1] coordinates
        cur_surj = c.surjection;
        cur_proj_mod = c.proj.to_module();
    }
    return res;
}

Complex Resolution::to_complex(int upto) const {
    if (upto > depth()) throw InsufficientDepth("Resolution::to_complex: not enough depth");
    Complex x;
    x.algebra = terms[0].algebra;
    x.lo = -upto;
    for (int k = upto; k >= 0; --k) {
        x.terms.push_back(term_module(k));
        x.proj_shape.push_back(terms[k].vertices);
    }
    for (int k = upto; k >= 1; --k) x.diff.push_back(diffs[k]);
    return x;
}

bool Resolution::verify_exactness(int upto) const {
    if (upto > depth()) throw InsufficientDepth("Resolution::verify_exactness");
    // surjectivity of the augmentation
    if (static_cast<int>(augmentation.row_basis().rows()) != module.dim()) return false;
    // ker(aug) = im(d_1), ker(d_k) = im(d_{k+1})
    for (int k = 0; k < upto; ++k) {
        const Mat& out = (k == 0) ? augmentation : diffs[k];
        Mat ker = out.left_kernel().row_basis();
        Mat im = diffs[k + 1].row_basis();
        if (ker.rows() != im.rows()) return false;
        if (!Mat::solve_left(ker, im)) return false;
    }
    return true;
}

std::optional<int> detect_periodicity(const Resolution& res) {
    const int d = res.depth();
    if (d < 3) throw InsufficientDepth("detect_periodicity: depth too small");
    for (int q = 1; 2 * q + 1 <= d; ++q) {
        bool ok = true;
        for (int k = 0; k + q <= d && ok; ++k)
            if (!(res.terms[k].vertices == res.terms[k + q].vertices)) ok = false;
        for (int k = 1; k + q <= d && ok; ++k)
            if (res.diffs[k] != res.diffs[k + q]) ok = false;
        if (ok && res.terms[0].vertices.empty()) ok = false;  // finite resolution
        if (ok) return q;
    }
    return std::nullopt;
}

Complex good_truncation_two(const Resolution& res) {
    if (res.depth() < 3) throw InsufficientDepth("good_truncation_two: need depth >= 3");
    auto pa = res.terms[0].algebra;
    if (res.module.dim() != 1) throw DimensionMismatch("good_truncation_two: module not simple");

    // Bottom term: terms[2] / im(d_3), identified with the simple module via
    // its top. The induced differential into terms[1] is d_2 evaluated on the
    // generator of the covering summand.
    if (res.terms[2].summands() != 1)
        throw DimensionMismatch("good_truncation_two: second syzygy cover not indecomposable");
    int gen = res.terms[2].generator_row(0);
    Mat induced = res.diffs[2].row(gen);  // image of the generator in terms[1]

    Module s = res.module;  // reuse the simple module as the bottom term
    Complex t;
    t.algebra = pa;
    t.lo = -2;
    t.terms = {s, res.term_module(1), res.term_module(0)};
    t.proj_shape = {std::nullopt, res.terms[1].vertices, res.terms[0].vertices};
    t.diff = {induced, res.diffs[1]};
    if (!t.validate()) throw VerificationFailed("good_truncation_two: truncation not a complex");
    return t;
}

}  // namespace ordcert
