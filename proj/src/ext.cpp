#include "ordcert/ext.hpp"

#include "ordcert/errors.hpp"

namespace ordcert {

int TermHomBasis::dim() const {
    int d = 0;
    for (const auto& b : comp) d += static_cast<int>(b.rows());
    return d;
}

Mat TermHomBasis::expand(const ProjSum& term, const Module& n, const Mat& coords) const {
    std::vector<Mat> images;
    int off = 0;
    for (int c = 0; c < term.summands(); ++c) {
        Mat img(1, n.dim(), n.modulus());
        for (std::size_t k = 0; k < comp[c].rows(); ++k) {
            std::uint64_t co = coords.at(0, off + k);
            if (co) img = img + comp[c].row(k).scaled(Fp(static_cast<std::int64_t>(co), n.modulus()));
        }
        images.push_back(img);
        off += static_cast<int>(comp[c].rows());
    }
    return term.map_from_generator_images(images, n);
}

Mat TermHomBasis::coords_of(const std::vector<Mat>& images) const {
    std::vector<Mat> pieces;
    for (std::size_t c = 0; c < comp.size(); ++c) {
        auto sol = Mat::solve_left(comp[c], images[c]);
        if (!sol) throw LiftingFailed("TermHomBasis::coords_of: image outside N e_v");
        pieces.push_back(*sol);
    }
    Mat out(1, 0, images.empty() ? 2 : images[0].modulus());
    for (auto& x : pieces) out = out.hstack(x);
    return out;
}

TermHomBasis term_hom_basis(const ProjSum& term, const Module& n) {
    TermHomBasis b;
    auto pa = term.algebra;
    for (int c = 0; c < term.summands(); ++c)
        b.comp.push_back(n.action(pa->idempotent(term.vertices[c])).row_basis());
    return b;
}

HomCochain hom_cochain(const Resolution& res, const Module& n, int upto) {
    if (upto + 1 > res.depth())
        throw InsufficientDepth("hom_cochain: resolution depth must exceed upto");
    HomCochain hc;
    for (int k = 0; k <= upto + 1; ++k) hc.bases.push_back(term_hom_basis(res.terms[k], n));
    for (int k = 0; k <= upto + 1; ++k) hc.dims.push_back(hc.bases[k].dim());
    for (int k = 0; k <= upto; ++k) {
        // delta^k: Hom(terms[k], N) -> Hom(terms[k+1], N), f -> f o d_{k+1}
        Mat delta(hc.dims[k], hc.dims[k + 1], n.modulus());
        for (int b = 0; b < hc.dims[k]; ++b) {
            Mat unit(1, hc.dims[k], n.modulus());
            unit.at(0, b) = 1;
            Mat full = hc.bases[k].expand(res.terms[k], n, unit);
            Mat composed = res.diffs[k + 1] * full;
            std::vector<Mat> images;
            for (int c = 0; c < res.terms[k + 1].summands(); ++c)
                images.push_back(composed.row(res.terms[k + 1].generator_row(c)));
            delta.set_row(b, hc.bases[k + 1].coords_of(images));
        }
        hc.delta.push_back(delta);
    }
    return hc;
}

int ext_dim(const Resolution& res, const Module& n_mod, int n) {
    return ext_dims(res, n_mod, n)[n];
}

std::vector<int> ext_dims(const Resolution& res, const Module& n_mod, int upto) {
    HomCochain hc = hom_cochain(res, n_mod, upto);
    std::vector<int> out;
    for (int k = 0; k <= upto; ++k) {
        int cocycles = hc.dims[k] - static_cast<int>(hc.delta[k].rank());
        int boundaries = k == 0 ? 0 : static_cast<int>(hc.delta[k - 1].rank());
        out.push_back(cocycles - boundaries);
    }
    return out;
}

bool is_cocycle(const Resolution& res, const Module& target, const ExtClass& cls) {
    const int k = cls.degree;
    if (k + 1 > res.depth()) throw InsufficientDepth("is_cocycle");
    Mat full = res.terms[k].map_from_generator_images(cls.images, target);
    return (res.diffs[k + 1] * full).is_zero();
}

bool is_coboundary(const Resolution& res, const Module& target, const ExtClass& cls) {
    const int k = cls.degree;
    if (k == 0) {
        Mat full = res.terms[0].map_from_generator_images(cls.images, target);
        return full.is_zero();
    }
    HomCochain hc = hom_cochain(res, target, k);
    Mat coords = hc.bases[k].coords_of(cls.images);
    return Mat::solve_left(hc.delta[k - 1], coords).has_value();
}

ExtClass ext_generator(const Resolution& res, const Module& target, int n) {
    HomCochain hc = hom_cochain(res, target, n);
    // cocycle space basis
    Mat ker = hc.delta[n].left_kernel().row_basis();
    for (std::size_t i = 0; i < ker.rows(); ++i) {
        Mat cand = ker.row(i);
        bool bdry = n == 0 ? cand.is_zero() : Mat::solve_left(hc.delta[n - 1], cand).has_value();
        if (bdry) continue;
        ExtClass cls;
        cls.degree = n;
        Mat full = hc.bases[n].expand(res.terms[n], target, cand);
        for (int c = 0; c < res.terms[n].summands(); ++c)
            cls.images.push_back(full.row(res.terms[n].generator_row(c)));
        return cls;
    }
    throw LiftingFailed("ext_generator: no nonzero class in this degree");
}

ExtClass ext_identity(const Resolution& res) {
    ExtClass cls;
    cls.degree = 0;
    for (int c = 0; c < res.terms[0].summands(); ++c)
        cls.images.push_back(res.augmentation.row(res.terms[0].generator_row(c)));
    return cls;
}

PInftyReport is_p_infty_object(const Module& s, int q, int depth) {
    if (q < 1 || depth < 2 * q) throw InsufficientDepth("is_p_infty_object: need depth >= 2q");
    PInftyReport rep;
    rep.q = q;
    if (s.dim() == 0) return rep;
    Resolution res = minimal_resolution(s, depth + 1);
    rep.self_ext_dims = ext_dims(res, s, depth);
    bool pattern = true;
    for (int k = 0; k <= depth; ++k) pattern = pattern && rep.self_ext_dims[k] == (k % q == 0 ? 1 : 0);
    bool powers = true;
    if (pattern) {
        ExtClass theta = ext_generator(res, s, q);
        ExtClass power = theta;
        rep.power_nonzero.push_back(!is_coboundary(res, s, power));
        for (int m = 2; q * m <= depth; ++m) {
            power = yoneda_product(res, power, s, res, theta, s);
            rep.power_nonzero.push_back(!is_coboundary(res, s, power));
        }
        for (bool nz : rep.power_nonzero) powers = powers && nz;
    }
    rep.ok = pattern && powers;
    return rep;
}

ExtClass yoneda_product(const Resolution& res_a, const ExtClass& g, const Module& b_mod,
                        const Resolution& res_b, const ExtClass& f, const Module& c_mod) {
    const int n = g.degree, m = f.degree;
    if (n + m + 1 > res_a.depth() || m + 1 > res_b.depth())
        throw InsufficientDepth("yoneda_product");
    auto pa = res_a.terms[0].algebra;

    // Lift g: terms_a[n] -> B through the augmentation of res_b, then
    // degreewise: G_k: terms_a[n+k] -> terms_b[k] with G_k d^b_k = d^a_{n+k} G_{k-1}.
    auto solve_gen_images = [&](const ProjSum& src, const Module& dst_mod,
                                const Mat& through, const Mat& want) {
        // unknown module map src -> dst (full matrix), constrained by
        // (map o through) = want, solved generator by generator inside the
        // correct idempotent component of dst.
        std::vector<Mat> images;
        for (int c = 0; c < src.summands(); ++c) {
            Mat comp = dst_mod.action(pa->idempotent(src.vertices[c])).row_basis();
            Mat rhs = want.row(src.generator_row(c));
            auto y = Mat::solve_left(comp * through, rhs);
            if (!y) throw LiftingFailed("yoneda_product: comparison lift failed");
            images.push_back(*y * comp);
        }
        return images;
    };

    Mat g_full = res_a.terms[n].map_from_generator_images(g.images, b_mod);
    Module b0 = res_b.term_module(0);
    std::vector<Mat> g0_images =
        solve_gen_images(res_a.terms[n], b0, res_b.augmentation, g_full);
    Mat gk = res_a.terms[n].map_from_generator_images(g0_images, b0);

    for (int k = 1; k <= m; ++k) {
        Mat rhs = res_a.diffs[n + k] * gk;  // terms_a[n+k] -> terms_b[k-1]
        Module bk = res_b.term_module(k);
        std::vector<Mat> imgs = solve_gen_images(res_a.terms[n + k], bk, res_b.diffs[k], rhs);
        gk = res_a.terms[n + k].map_from_generator_images(imgs, bk);
    }

    Mat f_full = res_b.terms[m].map_from_generator_images(f.images, c_mod);
    Mat prod = gk * f_full;  // terms_a[n+m] -> C
    ExtClass out;
    out.degree = n + m;
    for (int c = 0; c < res_a.terms[n + m].summands(); ++c)
        out.images.push_back(prod.row(res_a.terms[n + m].generator_row(c)));
    return out;
}

}  // namespace ordcert
