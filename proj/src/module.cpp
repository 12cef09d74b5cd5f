#include "ordcert/module.hpp"

#include <algorithm>

#include "ordcert/errors.hpp"

namespace ordcert {

Mat Module::action_of(const Mat& coords) const {
    Mat out(dim_, dim_, modulus());
    for (int a = 0; a < alg_->dim(); ++a) {
        std::uint64_t c = coords.at(0, a);
        if (c == 0) continue;
        out = out + action_[a].scaled(Fp(static_cast<std::int64_t>(c), modulus()));
    }
    return out;
}

bool Module::validate() const {
    const int d = alg_->dim();
    if (static_cast<int>(action_.size()) != d) return false;
    if (action_of(alg_->identity_coords()) != Mat::identity(dim_, modulus())) return false;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            Mat rhs(dim_, dim_, modulus());
            for (const auto& [c, coeff] : alg_->product(a, b))
                rhs = rhs + action_[c].scaled(Fp(static_cast<std::int64_t>(coeff), modulus()));
            if (action_[a] * action_[b] != rhs) return false;
        }
    return true;
}

int ProjSum::block_dim(int c) const {
    int count = 0;
    for (int q = 0; q < algebra->dim(); ++q)
        if (algebra->path_source(q) == vertices[c]) ++count;
    return count;
}

int ProjSum::offset(int c) const {
    int off = 0;
    for (int k = 0; k < c; ++k) off += block_dim(k);
    return off;
}

int ProjSum::total_dim() const { return offset(summands()); }

std::vector<int> ProjSum::block_basis(int c) const {
    std::vector<int> idx;
    for (int q = 0; q < algebra->dim(); ++q)
        if (algebra->path_source(q) == vertices[c]) idx.push_back(q);
    return idx;
}

int ProjSum::generator_row(int c) const {
    auto idx = block_basis(c);
    int lazy = algebra->idempotent(vertices[c]);
    for (std::size_t k = 0; k < idx.size(); ++k)
        if (idx[k] == lazy) return offset(c) + static_cast<int>(k);
    throw VertexOutOfRange("ProjSum::generator_row: lazy path missing");
}

Module ProjSum::to_module() const {
    const int d = total_dim();
    const std::uint64_t p = algebra->modulus();
    std::vector<Mat> action(algebra->dim(), Mat(d, d, p));
    for (int c = 0; c < summands(); ++c) {
        auto idx = block_basis(c);
        int off = offset(c);
        for (int a = 0; a < algebra->dim(); ++a)
            for (std::size_t row = 0; row < idx.size(); ++row) {
                int prod = algebra->mul_basis(idx[row], a);
                if (prod < 0) continue;
                auto col = std::find(idx.begin(), idx.end(), prod);
                action[a].at(off + row, off + (col - idx.begin())) = 1;
            }
    }
    return Module(algebra, d, std::move(action));
}

Mat ProjSum::map_from_generator_images(const std::vector<Mat>& images, const Module& n) const {
    Mat out(total_dim(), n.dim(), algebra->modulus());
    for (int c = 0; c < summands(); ++c) {
        auto idx = block_basis(c);
        int off = offset(c);
        for (std::size_t row = 0; row < idx.size(); ++row) {
            // basis path q = e_v * q, so its image is image(e_v) * R_q.
            Mat img = images[c] * n.action(idx[row]);
            out.set_row(off + row, img);
        }
    }
    return out;
}

Module simple_module(const PathAlgebraPtr& a, int vertex) {
    if (vertex < 0 || vertex >= a->vertex_count()) throw VertexOutOfRange("simple_module");
    std::vector<Mat> action(a->dim(), Mat(1, 1, a->modulus()));
    action[a->idempotent(vertex)].at(0, 0) = 1;
    return Module(a, 1, std::move(action));
}

Module projective_module(const PathAlgebraPtr& a, int vertex) {
    if (vertex < 0 || vertex >= a->vertex_count()) throw VertexOutOfRange("projective_module");
    return ProjSum{a, {vertex}}.to_module();
}

Module injective_module(const PathAlgebraPtr& a, int vertex) {
    if (vertex < 0 || vertex >= a->vertex_count()) throw VertexOutOfRange("injective_module");
    // Dual of the left module A e_v: basis the dual of {paths ending at v},
    // with (f * a)(x) = f(a x).
    std::vector<int> idx;
    for (int q = 0; q < a->dim(); ++q)
        if (a->path_target(q) == vertex) idx.push_back(q);
    const int d = static_cast<int>(idx.size());
    std::vector<Mat> action(a->dim(), Mat(d, d, a->modulus()));
    for (int elem = 0; elem < a->dim(); ++elem)
        for (int row = 0; row < d; ++row)
            for (int col = 0; col < d; ++col) {
                // f_{q_row} * elem = sum over q_col with elem * q_col = q_row.
                if (a->mul_basis(elem, idx[col]) == idx[row]) action[elem].at(row, col) = 1;
            }
    return Module(a, d, std::move(action));
}

Module zero_module(const AlgebraPtr& a) {
    std::vector<Mat> action(a->dim(), Mat(0, 0, a->modulus()));
    return Module(a, 0, std::move(action));
}

Module direct_sum(const Module& m, const Module& n) {
    if (m.algebra().get() != n.algebra().get()) throw AlgebraMismatch("direct_sum");
    const int d = m.dim() + n.dim();
    std::vector<Mat> action;
    action.reserve(m.algebra()->dim());
    for (int a = 0; a < m.algebra()->dim(); ++a) {
        Mat blk(d, d, m.modulus());
        for (int i = 0; i < m.dim(); ++i)
            for (int j = 0; j < m.dim(); ++j) blk.at(i, j) = m.action(a).at(i, j);
        for (int i = 0; i < n.dim(); ++i)
            for (int j = 0; j < n.dim(); ++j) blk.at(m.dim() + i, m.dim() + j) = n.action(a).at(i, j);
        action.push_back(blk);
    }
    return Module(m.algebra(), d, std::move(action));
}

std::vector<int> vertex_dims(const Module& m) {
    auto pa = std::dynamic_pointer_cast<const PathAlgebra>(m.algebra());
    if (!pa) throw AlgebraMismatch("vertex_dims: needs a path algebra");
    std::vector<int> dims;
    for (int v = 0; v < pa->vertex_count(); ++v)
        dims.push_back(static_cast<int>(m.action(pa->idempotent(v)).rank()));
    return dims;
}

Mat submodule_closure(const Module& m, const Mat& seed_rows) {
    Mat basis = seed_rows.row_basis();
    for (;;) {
        std::vector<Mat> pieces{basis};
        for (int a = 0; a < m.algebra()->dim(); ++a) pieces.push_back(basis * m.action(a));
        Mat bigger = stack_rows(pieces, m.dim(), m.modulus()).row_basis();
        if (bigger.rows() == basis.rows()) return bigger;
        basis = bigger;
    }
}

Module submodule_module(const Module& m, const Mat& basis_rows, Mat* inclusion) {
    const int s = static_cast<int>(basis_rows.rows());
    std::vector<Mat> action;
    action.reserve(m.algebra()->dim());
    for (int a = 0; a < m.algebra()->dim(); ++a) {
        Mat c = basis_rows * m.action(a);
        auto x = Mat::solve_left(basis_rows, c);
        if (!x) throw DimensionMismatch("submodule_module: rows not action stable");
        action.push_back(*x);
    }
    if (inclusion) *inclusion = basis_rows;
    return Module(m.algebra(), s, std::move(action));
}

Module quotient_module(const Module& m, const Mat& basis_rows, Mat* projection, Mat* section) {
    std::vector<std::size_t> piv;
    Mat e = basis_rows.rref(&piv);
    Mat echelon = e.submatrix(0, 0, piv.size(), m.dim());
    std::vector<std::size_t> free_cols;
    {
        std::vector<bool> is_piv(m.dim(), false);
        for (auto c : piv) is_piv[c] = true;
        for (int j = 0; j < m.dim(); ++j)
            if (!is_piv[j]) free_cols.push_back(j);
    }
    const int q = static_cast<int>(free_cols.size());
    const std::uint64_t p = m.modulus();

    // projection: reduce mod the row space, then read off free coordinates.
    Mat proj(m.dim(), q, p);
    for (int i = 0; i < m.dim(); ++i) {
        Mat unit(1, m.dim(), p);
        unit.at(0, i) = 1;
        Mat red = unit.reduce_against(echelon, piv);
        for (int j = 0; j < q; ++j) proj.at(i, j) = red.at(0, free_cols[j]);
    }
    Mat sect(q, m.dim(), p);
    for (int j = 0; j < q; ++j) sect.at(j, free_cols[j]) = 1;

    std::vector<Mat> action;
    action.reserve(m.algebra()->dim());
    for (int a = 0; a < m.algebra()->dim(); ++a) action.push_back(sect * m.action(a) * proj);
    if (projection) *projection = proj;
    if (section) *section = sect;
    return Module(m.algebra(), q, std::move(action));
}

namespace {

std::vector<int> radical_indices(const AlgebraPtr& alg) {
    auto idx = alg->radical_basis();
    if (!idx) throw AlgebraMismatch("radical: algebra has no known radical basis");
    return *idx;
}

}  // namespace

Mat radical_submodule(const Module& m) {
    std::vector<Mat> pieces;
    for (int j : radical_indices(m.algebra())) pieces.push_back(m.action(j));
    if (pieces.empty()) return Mat(0, m.dim(), m.modulus());
    return stack_rows(pieces, m.dim(), m.modulus()).row_basis();
}

Mat socle_submodule(const Module& m) {
    std::vector<Mat> blocks;
    for (int idx : radical_indices(m.algebra())) blocks.push_back(m.action(idx));
    if (blocks.empty()) return Mat::identity(m.dim(), m.modulus());
    Mat wide(m.dim(), 0, m.modulus());
    for (const auto& b : blocks) wide = wide.hstack(b);
    return wide.left_kernel().row_basis();
}

Module radical(const Module& m) { return submodule_module(m, radical_submodule(m)); }

Module top(const Module& m, Mat* projection) {
    return quotient_module(m, radical_submodule(m), projection);
}

Module socle(const Module& m) { return submodule_module(m, socle_submodule(m)); }

Cover projective_cover(const Module& m) {
    auto pa = std::dynamic_pointer_cast<const PathAlgebra>(m.algebra());
    if (!pa) throw AlgebraMismatch("projective_cover: needs a path algebra");
    Mat proj;
    Module t = top(m, &proj);

    // One projective summand per top basis vector, vertex by vertex, with a
    // deterministic lift of each top vector through the quotient section.
    std::vector<int> verts;
    std::vector<Mat> gens;
    for (int v = 0; v < pa->vertex_count(); ++v) {
        Mat ev = t.action(pa->idempotent(v));
        Mat comp = ev.row_basis();  // basis of (top M) e_v in top coords
        for (std::size_t k = 0; k < comp.rows(); ++k) {
            // lift: solve x * proj = comp_row, then force into M e_v.
            auto lift = Mat::solve_left(proj, comp.row(k));
            if (!lift) throw LiftingFailed("projective_cover: section failed");
            verts.push_back(v);
            gens.push_back(*lift * m.action(pa->idempotent(v)));
        }
    }
    ProjSum ps{pa, verts};
    Mat surj = ps.map_from_generator_images(gens, m);
    Mat image = surj.row_basis();
    if (static_cast<int>(image.rows()) != m.dim())
        throw LiftingFailed("projective_cover: lifted map is not surjective");
    return Cover{ps, surj};
}

std::vector<Mat> hom_space(const Module& m, const Module& n) {
    if (m.algebra().get() != n.algebra().get()) throw AlgebraMismatch("hom_space");
    const int dm = m.dim(), dn = n.dim();
    const std::uint64_t p = m.modulus();
    if (dm == 0 || dn == 0) return {};
    auto gens = m.algebra()->generator_indices();
    Mat sys(static_cast<std::size_t>(gens.size()) * dm * dn, static_cast<std::size_t>(dm) * dn, p);
    std::size_t row = 0;
    for (int g : gens) {
        const Mat& R = m.action(g);
        const Mat& S = n.action(g);
        for (int i = 0; i < dm; ++i)
            for (int j = 0; j < dn; ++j, ++row) {
                // (R F - F S)_{ij} = 0
                for (int k = 0; k < dm; ++k)
                    sys.at(row, k * dn + j) = (sys.at(row, k * dn + j) + R.at(i, k)) % p;
                for (int k = 0; k < dn; ++k) {
                    std::uint64_t sub = S.at(k, j);
                    if (sub == 0) continue;
                    std::uint64_t& cell = sys.at(row, i * dn + k);
                    cell = cell >= sub ? cell - sub : cell + p - sub;
                }
            }
    }
    Mat ker = sys.kernel_basis();
    std::vector<Mat> basis;
    for (std::size_t col = 0; col < ker.cols(); ++col) {
        Mat f(dm, dn, p);
        for (int i = 0; i < dm; ++i)
            for (int j = 0; j < dn; ++j) f.at(i, j) = ker.at(i * dn + j, col);
        basis.push_back(f);
    }
    return basis;
}

namespace {

struct LayerData {
    std::vector<std::vector<int>> layer_vertex_dims;
    bool uniserial = false;
};

LayerData radical_layers(const Module& m) {
    LayerData out;
    Module cur = m;
    out.uniserial = true;
    while (cur.dim() > 0) {
        Mat rad = radical_submodule(cur);
        Module t = quotient_module(cur, rad);
        out.layer_vertex_dims.push_back(vertex_dims(t));
        if (t.dim() > 1) out.uniserial = false;
        if (t.dim() == 0) break;  // degenerate, cannot happen for m != 0
        cur = submodule_module(cur, rad);
    }
    return out;
}

}  // namespace

IsoResult is_isomorphic(const Module& m, const Module& n, std::mt19937& rng, int trials) {
    IsoResult res;
    if (m.dim() != n.dim()) {
        res.verdict = IsoResult::Verdict::No;
        return res;
    }
    if (m.dim() == 0) {
        res.verdict = IsoResult::Verdict::Yes;
        res.witness = Mat(0, 0, m.modulus());
        return res;
    }
    if (vertex_dims(m) != vertex_dims(n)) {
        res.verdict = IsoResult::Verdict::No;
        return res;
    }
    auto homs = hom_space(m, n);
    const std::uint64_t p = m.modulus();
    for (int t = 0; t < trials && !homs.empty(); ++t) {
        Mat f(m.dim(), n.dim(), p);
        for (const auto& h : homs)
            f = f + h.scaled(Fp(static_cast<std::int64_t>(rng() % p), p));
        if (f.inverse()) {
            res.verdict = IsoResult::Verdict::Yes;
            res.witness = f;
            return res;
        }
    }
    // Deterministic fallback: uniserial modules are determined by their
    // radical-layer dimension vectors.
    LayerData lm = radical_layers(m), ln = radical_layers(n);
    if (lm.uniserial && ln.uniserial) {
        res.verdict = lm.layer_vertex_dims == ln.layer_vertex_dims ? IsoResult::Verdict::Yes
                                                                   : IsoResult::Verdict::No;
        return res;
    }
    res.verdict = IsoResult::Verdict::Inconclusive;
    return res;
}

Module twist(const Module& m, const AlgebraMap& sigma) {
    if (sigma.source.get() != m.algebra().get() || sigma.target.get() != m.algebra().get())
        throw NotAutomorphism("twist: map is not an endomap of the module's algebra");
    if (!sigma.matrix.inverse()) throw NotAutomorphism("twist: singular matrix");
    std::vector<Mat> action;
    action.reserve(m.algebra()->dim());
    for (int a = 0; a < m.algebra()->dim(); ++a) {
        // new action of x_a = old action of sigma(x_a)
        action.push_back(m.action_of(sigma.matrix.row(a)));
    }
    return Module(m.algebra(), m.dim(), std::move(action));
}

Module random_module(const PathAlgebraPtr& a, std::mt19937& rng, int max_summands,
                     int max_relations) {
    const int r = a->vertex_count();
    const std::uint64_t p = a->modulus();
    int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_summands));
    std::vector<int> verts;
    for (int i = 0; i < k; ++i) verts.push_back(static_cast<int>(rng() % static_cast<unsigned>(r)));
    ProjSum ps{a, verts};
    Module q = ps.to_module();
    int nrel = static_cast<int>(rng() % static_cast<unsigned>(max_relations + 1));
    if (nrel == 0) return q;
    Mat seeds(nrel, q.dim(), p);
    for (int i = 0; i < nrel; ++i)
        for (int j = 0; j < q.dim(); ++j) seeds.at(i, j) = rng() % p;
    Mat w = submodule_closure(q, seeds);
    if (static_cast<int>(w.rows()) == q.dim()) return q;  // quotient would be zero; keep q
    return quotient_module(q, w);
}

}  // namespace ordcert
