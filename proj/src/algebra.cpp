#include "ordcert/algebra.hpp"

#include <algorithm>
#include <deque>

#include "ordcert/errors.hpp"

namespace ordcert {

Mat Algebra::mul(const Mat& x, const Mat& y) const {
    if (x.rows() != 1 || y.rows() != 1 || static_cast<int>(x.cols()) != dim() ||
        static_cast<int>(y.cols()) != dim())
        throw DimensionMismatch("Algebra::mul: expected coordinate row vectors");
    Mat out(1, dim(), modulus());
    for (int a = 0; a < dim(); ++a) {
        std::uint64_t xa = x.at(0, a);
        if (xa == 0) continue;
        for (int b = 0; b < dim(); ++b) {
            std::uint64_t yb = y.at(0, b);
            if (yb == 0) continue;
            std::uint64_t f = (xa * yb) % modulus();
            for (const auto& [c, coeff] : product(a, b))
                out.at(0, c) = (out.at(0, c) + f * coeff) % modulus();
        }
    }
    return out;
}

bool Algebra::is_associative() const {
    const int d = dim();
    const std::uint64_t p = modulus();
    // (x_a x_b) x_c == x_a (x_b x_c) on all basis triples.
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const auto& ab = product(a, b);
            for (int c = 0; c < d; ++c) {
                Mat lhs(1, d, p), rhs(1, d, p);
                for (const auto& [m, co] : ab)
                    for (const auto& [k, co2] : product(m, c))
                        lhs.at(0, k) = (lhs.at(0, k) + co * co2) % p;
                for (const auto& [m, co] : product(b, c))
                    for (const auto& [k, co2] : product(a, m))
                        rhs.at(0, k) = (rhs.at(0, k) + co * co2) % p;
                if (lhs != rhs) return false;
            }
        }
    return true;
}

bool Algebra::identity_law_holds() const {
    const int d = dim();
    Mat e = identity_coords();
    for (int a = 0; a < d; ++a) {
        Mat x(1, d, modulus());
        x.at(0, a) = 1;
        if (mul(e, x) != x || mul(x, e) != x) return false;
    }
    return true;
}

Quiver Quiver::cyclic(int r) {
    Quiver q;
    q.vertices = r;
    for (int i = 0; i < r; ++i) q.arrows.push_back({i, (i + 1) % r});
    return q;
}

int Path::target(const Quiver& q) const {
    return arrows.empty() ? source : q.arrows[arrows.back()].second;
}

namespace {

bool contains_factor(const Path& p, const Quiver& q, const std::vector<Path>& forbidden) {
    for (const auto& f : forbidden) {
        if (f.length() == 0) continue;
        if (f.length() > p.length()) continue;
        for (std::size_t at = 0; at + f.arrows.size() <= p.arrows.size(); ++at) {
            bool match = true;
            for (std::size_t k = 0; k < f.arrows.size(); ++k)
                if (p.arrows[at + k] != f.arrows[k]) {
                    match = false;
                    break;
                }
            if (match) return true;
        }
    }
    (void)q;
    return false;
}

}  // namespace

std::shared_ptr<const PathAlgebra> PathAlgebra::monomial_quotient(Quiver q,
                                                                  std::vector<Path> forbidden,
                                                                  std::uint64_t p, int max_dim) {
    auto alg = std::shared_ptr<PathAlgebra>(new PathAlgebra());
    alg->quiver_ = std::move(q);
    alg->p_ = p;
    Fp::check_modulus(p);

    const Quiver& quiver = alg->quiver_;
    if (quiver.vertices <= 0) throw VertexOutOfRange("monomial_quotient: empty quiver");
    for (const auto& [s, t] : quiver.arrows)
        if (s < 0 || s >= quiver.vertices || t < 0 || t >= quiver.vertices)
            throw VertexOutOfRange("monomial_quotient: arrow endpoint out of range");

    // Breadth-first path enumeration, pruning paths containing a forbidden factor.
    std::deque<Path> frontier;
    for (int v = 0; v < quiver.vertices; ++v) frontier.push_back(Path{v, {}});
    while (!frontier.empty()) {
        Path cur = frontier.front();
        frontier.pop_front();
        if (contains_factor(cur, quiver, forbidden)) continue;
        alg->basis_.push_back(cur);
        if (static_cast<int>(alg->basis_.size()) > max_dim)
            throw std::runtime_error("monomial_quotient: dimension exceeds max_dim");
        int end = cur.target(quiver);
        for (std::size_t a = 0; a < quiver.arrows.size(); ++a) {
            if (quiver.arrows[a].first != end) continue;
            Path ext = cur;
            ext.arrows.push_back(static_cast<int>(a));
            frontier.push_back(ext);
        }
    }
    std::sort(alg->basis_.begin(), alg->basis_.end(), [&](const Path& x, const Path& y) {
        if (x.length() != y.length()) return x.length() < y.length();
        return x < y;
    });
    for (std::size_t i = 0; i < alg->basis_.size(); ++i) {
        alg->index_[alg->basis_[i]] = static_cast<int>(i);
        alg->targets_.push_back(alg->basis_[i].target(quiver));
    }
    alg->build_table();
    return alg;
}

std::shared_ptr<const PathAlgebra> PathAlgebra::cyclic_nakayama(int r, std::uint64_t p) {
    if (r < 1) throw VertexOutOfRange("cyclic_nakayama: r must be >= 1");
    Quiver q = Quiver::cyclic(r);
    // The ideal is generated by the r cycles of length r; every path of
    // length >= r contains one, so the surviving basis is all paths of
    // length < r, r^2 in total.
    std::vector<Path> cycles;
    for (int i = 0; i < r; ++i) {
        Path c{i, {}};
        for (int k = 0; k < r; ++k) c.arrows.push_back((i + k) % r);
        cycles.push_back(c);
    }
    return monomial_quotient(q, cycles, p, r * r + 1);
}

void PathAlgebra::build_table() {
    const int d = dim();
    table_.assign(static_cast<std::size_t>(d) * d, {});
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            if (targets_[a] != basis_[b].source) continue;
            Path prod = basis_[a];
            prod.arrows.insert(prod.arrows.end(), basis_[b].arrows.begin(), basis_[b].arrows.end());
            auto it = index_.find(prod);
            if (it != index_.end()) table_[a * d + b].push_back({it->second, 1});
        }
}

Mat PathAlgebra::identity_coords() const {
    Mat e(1, dim(), p_);
    for (int v = 0; v < quiver_.vertices; ++v) e.at(0, idempotent(v)) = 1;
    return e;
}

std::vector<int> PathAlgebra::generator_indices() const {
    std::vector<int> g;
    for (int v = 0; v < quiver_.vertices; ++v) g.push_back(idempotent(v));
    for (std::size_t a = 0; a < quiver_.arrows.size(); ++a) {
        int idx = arrow_element(static_cast<int>(a));
        if (idx >= 0) g.push_back(idx);
    }
    return g;
}

std::optional<std::vector<int>> PathAlgebra::radical_basis() const {
    std::vector<int> idx;
    for (int q = 0; q < dim(); ++q)
        if (path_length(q) >= 1) idx.push_back(q);
    return idx;
}

int PathAlgebra::idempotent(int vertex) const {
    if (vertex < 0 || vertex >= quiver_.vertices)
        throw VertexOutOfRange("PathAlgebra::idempotent");
    auto it = index_.find(Path{vertex, {}});
    if (it == index_.end()) throw VertexOutOfRange("PathAlgebra::idempotent: missing lazy path");
    return it->second;
}

int PathAlgebra::arrow_element(int arrow) const {
    Path p{quiver_.arrows[arrow].first, {arrow}};
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

std::optional<int> PathAlgebra::index_of(const Path& path) const {
    auto it = index_.find(path);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int PathAlgebra::mul_basis(int a, int b) const {
    const auto& terms = product(a, b);
    return terms.empty() ? -1 : terms.front().first;
}

bool PathAlgebra::is_cyclic_nakayama() const {
    const int r = quiver_.vertices;
    if (static_cast<int>(quiver_.arrows.size()) != r) return false;
    for (int i = 0; i < r; ++i)
        if (quiver_.arrows[i] != std::make_pair(i, (i + 1) % r)) return false;
    return dim() == r * r;
}

int PathAlgebra::cyclic_path(int source, int length) const {
    const int r = quiver_.vertices;
    if (source < 0 || source >= r) throw VertexOutOfRange("PathAlgebra::cyclic_path");
    Path p{source, {}};
    for (int k = 0; k < length; ++k) p.arrows.push_back((source + k) % r);
    auto idx = index_of(p);
    if (!idx) throw VertexOutOfRange("PathAlgebra::cyclic_path: path not in basis");
    return *idx;
}

AlgebraMap::Verification AlgebraMap::verify() const {
    Verification res;
    if (source->dim() != target->dim()) throw DimensionMismatch("AlgebraMap::verify: dims differ");
    if (source->modulus() != target->modulus()) throw ModulusMismatch("AlgebraMap::verify");
    const int d = source->dim();
    const std::uint64_t p = source->modulus();

    if (apply(source->identity_coords()) != target->identity_coords()) {
        res.failure = "not unital";
        return res;
    }
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            Mat xa(1, d, p), xb(1, d, p);
            xa.at(0, a) = 1;
            xb.at(0, b) = 1;
            Mat lhs = apply(source->mul(xa, xb));
            Mat rhs = target->mul(apply(xa), apply(xb));
            if (lhs != rhs) {
                res.failure = "not multiplicative";
                res.failing_pair = {a, b};
                return res;
            }
        }
    auto inv = matrix.inverse();
    if (!inv) {
        res.failure = "matrix not invertible";
        return res;
    }
    res.ok = true;
    res.inverse = *inv;
    return res;
}

AlgebraMap AlgebraMap::then(const AlgebraMap& next) const {
    if (target.get() != next.source.get())
        throw AlgebraMismatch("AlgebraMap::then: middle algebras differ");
    return AlgebraMap{source, next.target, matrix * next.matrix};
}

AlgebraMap AlgebraMap::inverse_map() const {
    auto inv = matrix.inverse();
    if (!inv) throw NotAutomorphism("AlgebraMap::inverse_map: singular matrix");
    return AlgebraMap{target, source, *inv};
}

AlgebraMap AlgebraMap::power(int k) const {
    if (source.get() != target.get()) throw AlgebraMismatch("AlgebraMap::power: not an endomap");
    AlgebraMap acc{source, target, Mat::identity(matrix.rows(), matrix.modulus())};
    AlgebraMap base = k >= 0 ? *this : inverse_map();
    int e = k >= 0 ? k : -k;
    for (int i = 0; i < e; ++i) acc = acc.then(base);
    return acc;
}

AlgebraMap rotation_automorphism(const PathAlgebraPtr& a) {
    if (!a->is_cyclic_nakayama())
        throw NotCyclicNakayama("rotation_automorphism: algebra is not a cyclic Nakayama algebra");
    const int r = a->vertex_count();
    const int d = a->dim();
    Mat m(d, d, a->modulus());
    for (int idx = 0; idx < d; ++idx) {
        int src = a->path_source(idx);
        int len = a->path_length(idx);
        m.at(idx, a->cyclic_path((src + 1) % r, len)) = 1;
    }
    return AlgebraMap{a, a, m};
}

int radical_dimension(const Algebra& a) {
    const int d = a.dim();
    const std::uint64_t p = a.modulus();
    if (p <= static_cast<std::uint64_t>(d))
        throw std::domain_error("radical_dimension: requires p > dim");
    // Left regular representation L_x, then the radical of the trace form
    // (x, y) -> tr(L_x L_y) equals the Jacobson radical when p > dim.
    std::vector<Mat> lreg;
    lreg.reserve(d);
    for (int x = 0; x < d; ++x) {
        Mat L(d, d, p);  // row b of L = coords of x_x * x_b
        for (int b = 0; b < d; ++b)
            for (const auto& [c, coeff] : a.product(x, b)) L.at(b, c) = coeff;
        lreg.push_back(L);
    }
    Mat gram(d, d, p);
    for (int x = 0; x < d; ++x)
        for (int y = x; y < d; ++y) {
            Mat prod = lreg[x] * lreg[y];
            std::uint64_t tr = 0;
            for (int i = 0; i < d; ++i) tr = (tr + prod.at(i, i)) % p;
            gram.at(x, y) = tr;
            gram.at(y, x) = tr;
        }
    return d - static_cast<int>(gram.rank());
}

}  // namespace ordcert
