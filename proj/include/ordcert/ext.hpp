#pragma once

#include <vector>

#include "ordcert/resolution.hpp"

namespace ordcert {

/// Coordinates for Hom_A((+)_c P_{v_c}, N): one row basis of N e_{v_c} per
/// summand, concatenated.
struct TermHomBasis {
    std::vector<Mat> comp;  // comp[c]: rows spanning N e_{v_c}
    int dim() const;
    /// Full matrix of the hom with the given coordinate vector.
    Mat expand(const ProjSum& term, const Module& n, const Mat& coords) const;
    /// Coordinates of a hom given by per-summand generator images.
    Mat coords_of(const std::vector<Mat>& images) const;
};

TermHomBasis term_hom_basis(const ProjSum& term, const Module& n);

/// The cochain complex Hom(P_bullet, N) in idempotent coordinates: dims[k] and
/// the precomposition differentials delta[k]: C^k -> C^{k+1}.
struct HomCochain {
    std::vector<int> dims;
    std::vector<Mat> delta;  // delta[k] for k = 0..D-1
    std::vector<TermHomBasis> bases;
};

HomCochain hom_cochain(const Resolution& res, const Module& n, int upto);

/// dim Ext^n_A(M, N) from a minimal resolution of M (depth >= n+1).
int ext_dim(const Resolution& res, const Module& n_mod, int n);

/// All dims Ext^0..Ext^D at once.
std::vector<int> ext_dims(const Resolution& res, const Module& n_mod, int upto);

/// An Ext class as a cocycle terms[degree] -> target, stored by per-summand
/// generator images; composing with the incoming differential gives zero.
struct ExtClass {
    int degree = 0;
    std::vector<Mat> images;
};

/// Verifies cocycle condition (class composed with d^{-(degree+1)} is 0).
bool is_cocycle(const Resolution& res, const Module& target, const ExtClass& cls);

/// True iff the cocycle is a coboundary (the zero Ext class).
bool is_coboundary(const Resolution& res, const Module& target, const ExtClass& cls);

/// A generator of Ext^n(M, N) when dim Ext^n = 1; throws otherwise.
ExtClass ext_generator(const Resolution& res, const Module& target, int n);

/// Yoneda product: g in Ext^n(A, B) (cocycle over res_a), f in Ext^m(B, C)
/// (cocycle over res_b); result in Ext^{n+m}(A, C) over res_a. Lifts g to a
/// chain map between the resolutions degreewise.
ExtClass yoneda_product(const Resolution& res_a, const ExtClass& g, const Module& b_mod,
                        const Resolution& res_b, const ExtClass& f, const Module& c_mod);

/// Identity class in Ext^0(M, M) over a minimal resolution of M.
ExtClass ext_identity(const Resolution& res);

/// Check that Ext^*(S, S) is a polynomial ring on one generator of degree q:
/// dim Ext^k = [q divides k] for k <= depth, and the degree-q generator has
/// nonzero powers throughout the range.
struct PInftyReport {
    bool ok = false;
    int q = 0;
    std::vector<int> self_ext_dims;
    std::vector<bool> power_nonzero;  // theta^m for m = 1, 2, ...
};

PInftyReport is_p_infty_object(const Module& s, int q, int depth);

}  // namespace ordcert
