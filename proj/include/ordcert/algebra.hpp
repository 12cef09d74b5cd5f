#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordcert/mat.hpp"

namespace ordcert {

/// Common interface of the finite-dimensional algebras in play: a fixed
/// basis, sparse structure constants, identity coordinates. Immutable after
/// construction and safe to share across threads.
class Algebra {
public:
    using Term = std::pair<int, std::uint64_t>;  // (basis index, coefficient)

    virtual ~Algebra() = default;
    virtual int dim() const = 0;
    virtual std::uint64_t modulus() const = 0;
    /// Sparse expansion of basis[a] * basis[b].
    virtual const std::vector<Term>& product(int a, int b) const = 0;
    virtual Mat identity_coords() const = 0;
    /// Basis indices that generate the algebra (used by intertwiner solvers).
    virtual std::vector<int> generator_indices() const = 0;
    /// Basis indices spanning the Jacobson radical, when known.
    virtual std::optional<std::vector<int>> radical_basis() const { return std::nullopt; }

    /// Product of coordinate row vectors.
    Mat mul(const Mat& x, const Mat& y) const;
    bool is_associative() const;
    bool identity_law_holds() const;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

struct Quiver {
    int vertices = 0;
    std::vector<std::pair<int, int>> arrows;  // (source, target), 0-based

    static Quiver cyclic(int r);
};

struct Path {
    int source = 0;
    std::vector<int> arrows;  // arrow indices, consecutive

    int length() const { return static_cast<int>(arrows.size()); }
    int target(const Quiver& q) const;
    bool operator==(const Path& o) const { return source == o.source && arrows == o.arrows; }
    bool operator<(const Path& o) const {
        return source != o.source ? source < o.source : arrows < o.arrows;
    }
};

/// Quotient of a path algebra by a monomial ideal: the basis is the set of
/// paths avoiding every forbidden factor, multiplication is concatenation
/// with killed paths sent to zero.
class PathAlgebra : public Algebra, public std::enable_shared_from_this<PathAlgebra> {
public:
    /// The cyclic Nakayama algebra on r vertices: all paths of length < r
    /// survive, every path of length >= r is zero. Dimension r^2.
    static std::shared_ptr<const PathAlgebra> cyclic_nakayama(int r, std::uint64_t p);

    /// General monomial quotient; throws if the quotient is not finite
    /// dimensional within max_dim basis paths.
    static std::shared_ptr<const PathAlgebra> monomial_quotient(Quiver q,
                                                                std::vector<Path> forbidden,
                                                                std::uint64_t p, int max_dim);

    int dim() const override { return static_cast<int>(basis_.size()); }
    std::uint64_t modulus() const override { return p_; }
    const std::vector<Term>& product(int a, int b) const override { return table_[a * dim() + b]; }
    Mat identity_coords() const override;
    std::vector<int> generator_indices() const override;
    std::optional<std::vector<int>> radical_basis() const override;

    const Quiver& quiver() const { return quiver_; }
    int vertex_count() const { return quiver_.vertices; }
    const Path& path(int idx) const { return basis_[idx]; }
    int path_source(int idx) const { return basis_[idx].source; }
    int path_target(int idx) const { return targets_[idx]; }
    int path_length(int idx) const { return basis_[idx].length(); }

    int idempotent(int vertex) const;  // index of the lazy path e_v
    int arrow_element(int arrow) const;
    std::optional<int> index_of(const Path& path) const;
    /// Concatenation product on basis indices; -1 when the product is zero.
    int mul_basis(int a, int b) const;

    bool is_cyclic_nakayama() const;
    /// For the cyclic algebra: basis index of the shortest path of the given
    /// length starting at `source` (length 0 gives e_source).
    int cyclic_path(int source, int length) const;

private:
    PathAlgebra() = default;
    void build_table();

    Quiver quiver_;
    std::vector<Path> basis_;
    std::vector<int> targets_;
    std::map<Path, int> index_;
    std::vector<std::vector<Term>> table_;
    std::uint64_t p_ = 2;
};

using PathAlgebraPtr = std::shared_ptr<const PathAlgebra>;

/// Finite-dimensional algebra given by sparse structure constants.
class StructureAlgebra : public Algebra {
public:
    StructureAlgebra(int dim, std::uint64_t p) : dim_(dim), p_(p), table_(static_cast<std::size_t>(dim) * dim) {
        Fp::check_modulus(p);
        identity_ = Mat(1, dim, p);
    }

    void set_product(int a, int b, std::vector<Term> terms) { table_[a * dim_ + b] = std::move(terms); }
    void set_identity(Mat coords) { identity_ = std::move(coords); }
    void set_label(int a, std::string label) {
        if (labels_.empty()) labels_.resize(dim_);
        labels_[a] = std::move(label);
    }
    const std::string& label(int a) const {
        static const std::string empty;
        return labels_.empty() ? empty : labels_[a];
    }

    int dim() const override { return dim_; }
    std::uint64_t modulus() const override { return p_; }
    const std::vector<Term>& product(int a, int b) const override { return table_[a * dim_ + b]; }
    Mat identity_coords() const override { return identity_; }
    std::vector<int> generator_indices() const override {
        std::vector<int> g(dim_);
        for (int i = 0; i < dim_; ++i) g[i] = i;
        return g;
    }
    void set_radical_basis(std::vector<int> idx) { radical_ = std::move(idx); }
    std::optional<std::vector<int>> radical_basis() const override { return radical_; }

private:
    int dim_;
    std::uint64_t p_;
    std::vector<std::vector<Term>> table_;
    Mat identity_;
    std::vector<std::string> labels_;
    std::optional<std::vector<int>> radical_;
};

using StructureAlgebraPtr = std::shared_ptr<const StructureAlgebra>;

/// Linear map between algebras in chosen bases (row convention: coordinates
/// map by x |-> x * matrix).
struct AlgebraMap {
    AlgebraPtr source;
    AlgebraPtr target;
    Mat matrix;

    struct Verification {
        bool ok = false;
        std::string failure;          // empty when ok
        std::optional<Mat> inverse;   // witness when ok and square
        std::optional<std::pair<int, int>> failing_pair;
    };

    /// True iff the map is unital, multiplicative on all basis pairs, and
    /// bijective. Witness: the inverse matrix, or the first failing pair.
    Verification verify() const;

    Mat apply(const Mat& coords) const { return coords * matrix; }
    AlgebraMap then(const AlgebraMap& next) const;
    AlgebraMap inverse_map() const;
    AlgebraMap power(int k) const;
};

/// The rotation automorphism sigma of the cyclic Nakayama algebra:
/// e_i -> e_{i+1}, arrows shift accordingly, sigma^r = id.
AlgebraMap rotation_automorphism(const PathAlgebraPtr& a);

/// Jacobson radical dimension via the trace form tr(L_x L_y); valid for
/// p > dim(A), which is enforced.
int radical_dimension(const Algebra& a);

}  // namespace ordcert
