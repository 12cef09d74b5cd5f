#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ordcert/module.hpp"
#include "ordcert/truncpoly.hpp"

namespace ordcert {

/// An order in Mat_n(k(t)) specified by an integer valuation matrix: the
/// (a,b) entries range over t^{v_ab} k[t]. The standard hereditary order with
/// ramification data (n_1,...,n_r) has v = 0 on and above the block diagonal
/// and 1 below it.
struct ValuationOrder {
    int n = 0;
    std::vector<int> data;  // ramification data when standard; empty otherwise
    std::vector<std::vector<int>> v;
    std::uint64_t p = 2;

    int blocks() const { return static_cast<int>(data.size()); }
    /// 0-based row index of the block corner alpha_j = n_1 + ... + n_j - 1.
    int corner(int j) const;
    bool operator==(const ValuationOrder& o) const { return n == o.n && v == o.v && p == o.p; }
};

ValuationOrder standard_hereditary_order(const std::vector<int>& data, std::uint64_t p);

/// Closure conditions: v_aa = 0 and v_ac <= v_ab + v_bc.
bool is_order(const std::vector<std::vector<int>>& v);
/// Maximality: v_ab = d_a - d_b for some integer vector d.
bool is_maximal(const std::vector<std::vector<int>>& v);
std::optional<std::vector<int>> maximality_witness(const std::vector<std::vector<int>>& v);

/// The finite-dimensional algebra Gamma/t^N Gamma with basis t^e E_{ab},
/// v_ab <= e < v_ab + N. Structure constants are computed by truncated
/// polynomial matrix multiplication.
struct OrderTruncation {
    ValuationOrder order;
    int trunc = 0;
    StructureAlgebraPtr algebra;
    std::vector<std::array<int, 3>> basis;  // (a, b, e)

    int index_of(int a, int b, int e) const;
    /// Coordinates of the multiplication-by-t element.
    Mat t_coords() const;
    /// Coordinates of t^{v_ab} E_{ab} (the valuation-minimal class).
    Mat unit_coords(int a, int b) const;
};

OrderTruncation truncated_order_algebra(const ValuationOrder& g, int n_trunc);

/// Fiber over a point: t = 0 gives Gamma/t Gamma (dimension n^2, basis the
/// valuation-minimal classes); t = c != 0 gives the full matrix algebra in
/// the scaled basis c^{v_ab} E_{ab}.
StructureAlgebraPtr order_fiber(const ValuationOrder& g, std::uint64_t c);

struct BasicReduction {
    StructureAlgebraPtr algebra;
    std::vector<int> chosen;       // ambient basis index of each chosen idempotent
    Mat basis_in_ambient;          // rows: eAe basis vectors in ambient coordinates
};

/// e A e for e the sum of one idempotent per supplied group (the last entry
/// of each group is the chosen representative). Verifies that the supplied
/// vectors are orthogonal idempotents summing to the identity.
BasicReduction basic_reduction(const StructureAlgebraPtr& a,
                               const std::vector<std::vector<int>>& idempotent_groups,
                               const std::vector<Mat>& idempotent_vectors);

/// The verified isomorphism Lambda_r -> basic algebra of the t = 0 fiber,
/// sending e_i to the block-corner idempotent and the arrow mu_{i,i+1} to the
/// corner-to-corner matrix unit class.
struct FiberBasicIso {
    PathAlgebraPtr lambda;
    BasicReduction basic;
    AlgebraMap iso;  // lambda -> basic.algebra
};

FiberBasicIso fiber_basic_iso_to_lambda(const ValuationOrder& g);

/// A twisted row lattice t^twist * (row of Gamma indexed by block j), as a
/// right Gamma-module given by its valuation pattern.
struct LatticeRow {
    int block = 0;  // j, 0-based
    int twist = 0;
};

/// Valuation pattern of the lattice row: entry b bounds the t-adic valuation
/// at column b.
std::vector<int> lattice_row_valuations(const ValuationOrder& g, const LatticeRow& row);

/// All maximal overorders B >= Gamma (one ramified point model), by
/// exhaustive search over valuation vectors d with d_1 = 0. Any maximal
/// order v_ab = d_a - d_b containing the standard order satisfies
/// d_a - d_b <= v_ab <= 1 for all a, b, so with d_1 = 0 both d_a <= v_a1 <= 1
/// and -d_a <= v_1a <= 1, i.e. |d_a| <= 1; the default search box. A wider
/// box is exposed for oracle cross-checks.
std::vector<ValuationOrder> enumerate_maximal_overorders(const ValuationOrder& g);
std::vector<ValuationOrder> enumerate_maximal_overorders_boxed(const ValuationOrder& g, int bound);

/// Both-sided multiplicative closure B * Gamma and Gamma * B inside B.
bool overorder_bimodule_closed(const ValuationOrder& b, const ValuationOrder& g);

/// The type of a maximal overorder: the unique j with every row of B a
/// t-twist of the lattice row L^{(j)} of Gamma. Throws MixedTypes when rows
/// disagree.
int classify_overorder_type(const ValuationOrder& b, const ValuationOrder& g);

/// Row-by-row verification that B is isomorphic to (L^{(j)})^{(+)n} as a
/// right Gamma-lattice (each row matches the type-j valuation pattern up to a
/// uniform twist per row).
bool overorder_module_check(const ValuationOrder& b, const ValuationOrder& g);

/// Restriction of scalars of a Lambda_r-module along Gamma/t^N ->> fiber ->
/// Lambda_r (basic orders only; t acts by zero).
Module pushforward_module(const Module& m, const OrderTruncation& gt, const FiberBasicIso& iso);

/// Checks the two-term lattice resolution of the pushed-forward simple:
/// the twisted row L' embeds in L^{(k)} with one-dimensional quotient
/// isomorphic to the simple at k (wrapping twist exponent 1 at k = r).
bool verify_lattice_resolution(const ValuationOrder& g, int k);

struct PushforwardExtTable {
    int r = 0;
    int depth = 0;
    // ext[k][j][nn] = dim Ext^nn(i_* S_k, i_* S_j)
    std::vector<std::vector<std::vector<int>>> ext;
    // hom_rows[a][k] = dim Hom(L^{(a)}, i_* S_k)
    std::vector<std::vector<int>> hom_rows;
    bool matches_expected(std::string* why = nullptr) const;
};

PushforwardExtTable pushforward_ext_table(const OrderTruncation& gt, const FiberBasicIso& iso,
                                          int depth);

/// Kernel and cokernel of multiplication by t on the pushed-forward simple,
/// transported back to Lambda_r-modules: (H^{-1}, H^0).
std::pair<Module, Module> derived_restriction_cohomology(const OrderTruncation& gt,
                                                         const FiberBasicIso& iso, int k);

/// dim of the projective cover of a module over the truncated order algebra
/// (top multiplicity times row dimension); used to witness non-projectivity.
int truncated_cover_dim(const Module& m, const OrderTruncation& gt);

}  // namespace ordcert
