#pragma once

#include <vector>

#include "ordcert/module.hpp"

namespace ordcert {

/// k[t]/(t^r) * mu_r over F_p with a chosen primitive r-th root of unity
/// zeta: basis t^a g^b (0 <= a, b < r), relations t^r = 0, g^r = 1 and
/// g t = zeta t g.
struct SkewGroupAlgebra {
    int r = 0;
    std::uint64_t p = 2;
    Fp zeta;
    StructureAlgebraPtr algebra;

    int index(int a, int b) const { return a * r + b; }
};

/// Requires p prime with p = 1 (mod r); zeta is the smallest residue of
/// multiplicative order exactly r.
SkewGroupAlgebra build_skew_group(int r, std::uint64_t p);

/// Character idempotents eps_i = (1/r) sum_b zeta^{-i b} g^b.
Mat character_idempotent(const SkewGroupAlgebra& s, int i);

/// The verified isomorphism Lambda_r -> k[t]/(t^r) * mu_r sending e_i to
/// eps_{c(i)} and the arrow mu_{i,i+1} to t * eps_{c(i)}, with the character
/// offset c determined by verification.
struct SkewGroupIso {
    PathAlgebraPtr lambda;
    SkewGroupAlgebra skew;
    AlgebraMap iso;  // lambda -> skew.algebra
    int character_of_vertex(int i) const;  // the c map actually used
    std::vector<int> vertex_to_character;
};

SkewGroupIso iso_to_lambda(const SkewGroupAlgebra& s);

/// The one-dimensional module with g acting by zeta^i and t by zero.
Module character_module(const SkewGroupAlgebra& s, int i);

/// For each character module, the index j with pullback isomorphic to S_j;
/// throws NotBijective if the assignment fails to be a bijection.
std::vector<int> simple_correspondence(const SkewGroupIso& iso, std::mt19937& rng);

/// Pull a module over the skew group algebra back to Lambda_r along the iso.
Module pullback_module(const SkewGroupIso& iso, const Module& m);

}  // namespace ordcert
