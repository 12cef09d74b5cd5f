#pragma once

#include <optional>
#include <vector>

#include "ordcert/complex.hpp"

namespace ordcert {

/// Minimal projective resolution ... -> terms[2] -> terms[1] -> terms[0] -> M,
/// built from iterated projective covers. diffs[k] maps terms[k] -> terms[k-1]
/// (the cochain differential d^{-k}), augmentation maps terms[0] -> M.
struct Resolution {
    Module module;
    std::vector<ProjSum> terms;
    std::vector<Mat> diffs;  // index 1..depth used; diffs[0] unused placeholder
    Mat augmentation;

    int depth() const { return static_cast<int>(terms.size()) - 1; }
    Module term_module(int k) const { return terms[k].to_module(); }

    /// Brutal truncation as a complex in degrees [-upto, 0].
    Complex to_complex(int upto) const;

    /// Exactness at positions 1..upto plus surjectivity of the augmentation.
    bool verify_exactness(int upto) const;
};

Resolution minimal_resolution(const Module& m, int depth);

/// Smallest q > 0 such that terms and differential matrices repeat with shift
/// q (literal matrix equality on the canonical path bases); nullopt when no
/// period at most depth/2 exists. Throws InsufficientDepth when the resolution
/// cannot certify any q (depth < 2q + 1).
std::optional<int> detect_periodicity(const Resolution& res);

/// Good truncation tau_{>= -2} of a minimal resolution of a simple module S:
/// the three-term complex (S -> P' -> P) in degrees [-2, 0] quasi-isomorphic
/// to S, whose bottom term is the second syzygy quotient identified with S.
/// Only valid when the second syzygy's top equals S (true for simples over
/// the cyclic Nakayama algebras).
Complex good_truncation_two(const Resolution& res);

}  // namespace ordcert
