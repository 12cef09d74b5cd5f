#pragma once

#include <optional>
#include <vector>

#include "ordcert/module.hpp"

namespace ordcert {

/// Bounded cochain complex. diff[i] is d^{lo+i}: X^{lo+i} -> X^{lo+i+1} as a
/// matrix acting on coordinate row vectors. Terms outside [lo, hi] are zero.
/// proj_shape[i], when set, records the term as the projective sum with the
/// given vertex list (canonical path bases).
struct Complex {
    AlgebraPtr algebra;
    int lo = 0;
    std::vector<Module> terms;
    std::vector<Mat> diff;  // size terms.size()-1 (empty complex: both empty)
    std::vector<std::optional<std::vector<int>>> proj_shape;

    int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
    bool in_range(int deg) const { return deg >= lo && deg <= hi(); }
    int term_dim(int deg) const { return in_range(deg) ? terms[deg - lo].dim() : 0; }
    const Module& term(int deg) const;
    /// d^deg as a term_dim(deg) x term_dim(deg+1) matrix (zero blocks outside range).
    Mat diff_at(int deg) const;
    std::optional<std::vector<int>> shape_at(int deg) const {
        return in_range(deg) ? proj_shape[deg - lo] : std::nullopt;
    }
    bool all_terms_projective() const;

    /// d o d = 0 and every differential intertwines the actions.
    bool validate() const;
};

Complex concentrated_complex(const Module& m, int degree);

/// Shift: X[k]^n = X^{n+k}, differential scaled by (-1)^k.
Complex shift(const Complex& x, int k);

struct ChainMap {
    Complex src;
    Complex dst;
    // comp[i]: component in degree src.lo + i (size src.terms.size()).
    std::vector<Mat> comp;

    Mat comp_at(int deg) const;
    bool validate() const;  // commutes with differentials in every degree
};

ChainMap zero_chain_map(const Complex& src, const Complex& dst);

/// Mapping cone with C^n = X^{n+1} (+) Y^n and d(x, y) = (-d x, f x + d y).
Complex cone(const ChainMap& f);

Module homology(const Complex& x, int n);

/// Homology data needed to push maps to homology classes.
struct HomologyData {
    Mat cycles;      // rows: basis of ker d^n inside X^n
    Mat boundaries;  // rows: basis of im d^{n-1} (subset of the cycle space)
    Module h;        // the subquotient as a module
    int dim() const { return h.dim(); }
};
HomologyData homology_data(const Complex& x, int n);

bool is_quasi_iso(const ChainMap& f);

/// dim of chain maps X -> Y[n] modulo homotopy (degree-n total-Hom
/// cohomology). Requires X to have projective terms.
int hom_homotopy_dim(const Complex& x, const Complex& y, int n);

/// The Nakayama reindexing P_i -> P_{i+1} applied termwise to a complex of
/// projectives over a cyclic Nakayama algebra, twisting differential entries
/// by the rotation automorphism.
Complex nakayama_shift(const Complex& x);

/// Transport a complex of projectives along the rotation: every vertex index
/// moves by +1 (same operation as nakayama_shift; exposed under the name used
/// by certificate rotation).
Complex rotate_projective_complex(const Complex& x);

/// Decompose a map (+)P_{u_c'} -> (+)P_{w_c} of projective sums into algebra
/// elements (one per block), and rebuild such a map from rotated elements.
std::vector<std::vector<Mat>> map_to_algebra_blocks(const ProjSum& src, const ProjSum& dst,
                                                    const Mat& map);
Mat map_from_algebra_blocks(const ProjSum& src, const ProjSum& dst,
                            const std::vector<std::vector<Mat>>& blocks);

}  // namespace ordcert
