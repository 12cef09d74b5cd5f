#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ordcert/algebra.hpp"

namespace ordcert {

/// Finite-dimensional right module: one action matrix per algebra basis
/// element, acting on coordinate row vectors (x |-> x * R_a), so
/// R_{ab} = R_a * R_b. Immutable after construction.
class Module {
public:
    Module() = default;
    Module(AlgebraPtr alg, int dim, std::vector<Mat> action)
        : alg_(std::move(alg)), dim_(dim), action_(std::move(action)) {}

    const AlgebraPtr& algebra() const { return alg_; }
    int dim() const { return dim_; }
    std::uint64_t modulus() const { return alg_->modulus(); }
    const Mat& action(int basis_idx) const { return action_[basis_idx]; }

    /// Action of a general algebra element given by coordinates.
    Mat action_of(const Mat& coords) const;

    /// Checks the right-module axioms on all basis pairs plus the identity law.
    bool validate() const;

    bool operator==(const Module& o) const {
        return alg_.get() == o.alg_.get() && dim_ == o.dim_ && action_ == o.action_;
    }

private:
    AlgebraPtr alg_;
    int dim_ = 0;
    std::vector<Mat> action_;
};

/// Formal direct sum of indecomposable projectives over a path algebra,
/// with the canonical path basis per summand.
struct ProjSum {
    PathAlgebraPtr algebra;
    std::vector<int> vertices;

    int summands() const { return static_cast<int>(vertices.size()); }
    int block_dim(int c) const;
    int offset(int c) const;
    int total_dim() const;
    /// Row index of the generator e_{v_c} of summand c inside the sum.
    int generator_row(int c) const;
    /// Algebra basis indices of the paths spanning summand c, in row order.
    std::vector<int> block_basis(int c) const;
    Module to_module() const;
    bool operator==(const ProjSum& o) const {
        return algebra.get() == o.algebra.get() && vertices == o.vertices;
    }

    /// A module map (sum -> N) is determined by the generator images; this
    /// expands generator rows into the full matrix.
    Mat map_from_generator_images(const std::vector<Mat>& images, const Module& n) const;
};

Module simple_module(const PathAlgebraPtr& a, int vertex);
Module projective_module(const PathAlgebraPtr& a, int vertex);
Module injective_module(const PathAlgebraPtr& a, int vertex);
Module zero_module(const AlgebraPtr& a);
Module direct_sum(const Module& m, const Module& n);

/// Per-vertex dimensions dim(M e_v) for modules over a path algebra.
std::vector<int> vertex_dims(const Module& m);

/// Echelonized basis (rows) of the smallest submodule containing the seeds.
Mat submodule_closure(const Module& m, const Mat& seed_rows);

/// The submodule spanned by echelonized basis rows, as a module; optional
/// out-param receives the inclusion matrix (sub coords -> ambient coords).
Module submodule_module(const Module& m, const Mat& basis_rows, Mat* inclusion = nullptr);

/// Quotient by the row space of basis_rows; optional out-params receive the
/// projection (ambient -> quotient coords) and a linear section.
Module quotient_module(const Module& m, const Mat& basis_rows, Mat* projection = nullptr,
                       Mat* section = nullptr);

Mat radical_submodule(const Module& m);    // basis rows of M * rad(A)
Mat socle_submodule(const Module& m);      // basis rows of {x : x * rad(A) = 0}
Module radical(const Module& m);
Module top(const Module& m, Mat* projection = nullptr);
Module socle(const Module& m);

struct Cover {
    ProjSum proj;
    Mat surjection;  // proj coords -> M coords
};

/// Projective cover with the lifted surjection; deterministic lift choices.
Cover projective_cover(const Module& m);

/// Basis of Hom_A(M, N): matrices commuting with the action of the algebra
/// generators.
std::vector<Mat> hom_space(const Module& m, const Module& n);

struct IsoResult {
    enum class Verdict { Yes, No, Inconclusive };
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Mat> witness;
    bool yes() const { return verdict == Verdict::Yes; }
};

/// Randomized invertible-hom search with a deterministic fallback for
/// uniserial modules; Inconclusive is surfaced, never silently false.
IsoResult is_isomorphic(const Module& m, const Module& n, std::mt19937& rng, int trials = 32);

/// Same module with the action precomposed by an automorphism.
Module twist(const Module& m, const AlgebraMap& sigma);

/// Random quotient of a random finite sum of projectives (for property tests).
Module random_module(const PathAlgebraPtr& a, std::mt19937& rng, int max_summands = 3,
                     int max_relations = 2);

}  // namespace ordcert
