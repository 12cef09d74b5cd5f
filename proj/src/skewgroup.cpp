#include "ordcert/skewgroup.hpp"

#include "ordcert/errors.hpp"

namespace ordcert {

namespace {

Fp smallest_primitive_root(int r, std::uint64_t p) {
    if (r == 1) return Fp::one(p);
    if ((p - 1) % static_cast<std::uint64_t>(r) != 0)
        throw NoRootOfUnity("build_skew_group: r does not divide p - 1");
    for (std::uint64_t z = 2; z < p; ++z) {
        Fp x(static_cast<std::int64_t>(z), p);
        if (x.pow(static_cast<std::uint64_t>(r)) != Fp::one(p)) continue;
        bool primitive = true;
        for (int k = 1; k < r; ++k)
            if (x.pow(static_cast<std::uint64_t>(k)) == Fp::one(p)) {
                primitive = false;
                break;
            }
        if (primitive) return x;
    }
    throw NoRootOfUnity("build_skew_group: no primitive root found");
}

}  // namespace

SkewGroupAlgebra build_skew_group(int r, std::uint64_t p) {
    if (r < 1) throw DimensionMismatch("build_skew_group: r >= 1 required");
    if (!is_prime(p)) throw NoRootOfUnity("build_skew_group: p must be prime");
    if (static_cast<std::uint64_t>(r) % p == 0)
        throw NoRootOfUnity("build_skew_group: p must not divide r");
    SkewGroupAlgebra s;
    s.r = r;
    s.p = p;
    s.zeta = smallest_primitive_root(r, p);

    const int d = r * r;
    auto alg = std::make_shared<StructureAlgebra>(d, p);
    // (t^{a1} g^{b1})(t^{a2} g^{b2}) = zeta^{b1 a2} t^{a1+a2} g^{b1+b2}
    for (int a1 = 0; a1 < r; ++a1)
        for (int b1 = 0; b1 < r; ++b1)
            for (int a2 = 0; a2 < r; ++a2)
                for (int b2 = 0; b2 < r; ++b2) {
                    int i = s.index(a1, b1), j = s.index(a2, b2);
                    if (a1 + a2 >= r) {
                        alg->set_product(i, j, {});
                        continue;
                    }
                    Fp coeff = s.zeta.pow(static_cast<std::uint64_t>(b1) * a2);
                    alg->set_product(i, j,
                                     {{s.index(a1 + a2, (b1 + b2) % r), coeff.residue()}});
                }
    Mat ident(1, d, p);
    ident.at(0, s.index(0, 0)) = 1;
    alg->set_identity(ident);
    std::vector<int> rad;
    for (int a = 1; a < r; ++a)
        for (int b = 0; b < r; ++b) rad.push_back(s.index(a, b));
    alg->set_radical_basis(rad);
    s.algebra = alg;
    return s;
}

Mat character_idempotent(const SkewGroupAlgebra& s, int i) {
    Mat eps(1, s.algebra->dim(), s.p);
    Fp rinv = Fp(s.r, s.p).inverse();
    for (int b = 0; b < s.r; ++b) {
        // zeta^{-i b} / r on g^b
        Fp c = s.zeta.pow(static_cast<std::uint64_t>(((s.r - i % s.r) % s.r)) *
                          static_cast<std::uint64_t>(b)) *
               rinv;
        eps.set(0, s.index(0, b), c);
    }
    return eps;
}

int SkewGroupIso::character_of_vertex(int i) const { return vertex_to_character[i]; }

SkewGroupIso iso_to_lambda(const SkewGroupAlgebra& s) {
    SkewGroupIso out;
    out.skew = s;
    out.lambda = PathAlgebra::cyclic_nakayama(s.r, s.p);
    const int r = s.r;

    Mat t_elem(1, s.algebra->dim(), s.p);
    if (r > 1) t_elem.at(0, s.index(1, 0)) = 1;

    // the character offset along arrows is pinned by verification
    for (int dir : {-1, +1}) {
        std::vector<int> c(r);
        for (int i = 0; i < r; ++i) c[i] = ((dir * i) % r + r) % r;
        Mat phi(r * r, s.algebra->dim(), s.p);
        for (int idx = 0; idx < out.lambda->dim(); ++idx) {
            int i = out.lambda->path_source(idx);
            int len = out.lambda->path_length(idx);
            Mat img = character_idempotent(s, c[i]);
            for (int k = 0; k < len; ++k) img = s.algebra->mul(img, t_elem);
            phi.set_row(idx, img);
        }
        AlgebraMap cand{out.lambda, s.algebra, phi};
        if (cand.verify().ok) {
            out.iso = cand;
            out.vertex_to_character = c;
            return out;
        }
        if (r <= 2) break;  // both directions coincide
    }
    throw VerificationFailed("iso_to_lambda: no character normalization verifies");
}

Module character_module(const SkewGroupAlgebra& s, int i) {
    std::vector<Mat> action;
    action.reserve(s.algebra->dim());
    for (int a = 0; a < s.r; ++a)
        for (int b = 0; b < s.r; ++b) {
            Mat m(1, 1, s.p);
            if (a == 0)
                m.set(0, 0, s.zeta.pow(static_cast<std::uint64_t>(((i % s.r) + s.r) % s.r) *
                                       static_cast<std::uint64_t>(b)));
            action.push_back(m);
        }
    return Module(s.algebra, 1, std::move(action));
}

Module pullback_module(const SkewGroupIso& iso, const Module& m) {
    if (m.algebra().get() != iso.skew.algebra.get())
        throw AlgebraMismatch("pullback_module: module not over the skew group algebra");
    std::vector<Mat> action;
    action.reserve(iso.lambda->dim());
    for (int idx = 0; idx < iso.lambda->dim(); ++idx)
        action.push_back(m.action_of(iso.iso.matrix.row(idx)));
    return Module(iso.lambda, m.dim(), std::move(action));
}

std::vector<int> simple_correspondence(const SkewGroupIso& iso, std::mt19937& rng) {
    const int r = iso.skew.r;
    std::vector<int> assignment(r, -1);
    std::vector<bool> hit(r, false);
    for (int i = 0; i < r; ++i) {
        Module pulled = pullback_module(iso, character_module(iso.skew, i));
        int found = -1;
        for (int j = 0; j < r; ++j) {
            if (is_isomorphic(pulled, simple_module(iso.lambda, j), rng).yes()) {
                found = j;
                break;
            }
        }
        if (found < 0) throw NotBijective("simple_correspondence: pullback is not a simple");
        if (hit[found]) throw NotBijective("simple_correspondence: assignment not injective");
        hit[found] = true;
        assignment[i] = found;
    }
    return assignment;
}

}  // namespace ordcert
