// Acceptance suite: every criterion runs at desk scale (r = 1..6, depth
// 2r + 4, truncation 2, default primes) in exact arithmetic, printing one
// pass/fail line per criterion.

#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "ordcert/orderlocal.hpp"
#include "ordcert/report.hpp"
#include "ordcert/skewgroup.hpp"

using namespace ordcert;

namespace {

constexpr int kMaxR = 6;

std::uint64_t default_prime(int r) {
    return smallest_prime_with_unity_root(static_cast<std::uint64_t>(r), 101);
}

const std::vector<std::vector<int>> kDataVectors{{1, 1}, {1, 1, 1}, {2, 1}, {1, 1, 1, 1},
                                                 {2, 2, 1}};

bool criterion_1_dimension() {
    for (int r = 1; r <= kMaxR; ++r)
        if (PathAlgebra::cyclic_nakayama(r, default_prime(r))->dim() != r * r) return false;
    return true;
}

bool criterion_2_periodic_resolutions() {
    for (int r = 2; r <= kMaxR; ++r) {
        auto a = PathAlgebra::cyclic_nakayama(r, default_prime(r));
        const int depth = 2 * r + 4;
        for (int i = 0; i < r; ++i) {
            Resolution res = minimal_resolution(simple_module(a, i), depth + 1);
            auto q = detect_periodicity(res);
            if (!q || *q != 2) return false;
            for (int k = 0; k <= depth; ++k)
                if (res.terms[k].vertices != std::vector<int>{k % 2 == 0 ? i : (i + 1) % r})
                    return false;
            if (!res.verify_exactness(depth)) return false;
        }
    }
    return true;
}

bool criterion_3_ext_table() {
    for (int r = 2; r <= kMaxR; ++r) {
        auto a = PathAlgebra::cyclic_nakayama(r, default_prime(r));
        const int depth = 2 * r + 4;
        for (int j = 0; j < r; ++j) {
            Resolution res = minimal_resolution(simple_module(a, j), depth + 1);
            for (int k = 0; k < r; ++k) {
                auto dims = ext_dims(res, simple_module(a, k), depth);
                for (int n = 0; n <= depth; ++n) {
                    int expect =
                        (k == j && n % 2 == 0) || (k == (j + 1) % r && n % 2 == 1) ? 1 : 0;
                    if (dims[n] != expect) return false;
                }
            }
        }
    }
    return true;
}

bool criterion_4_p_infty_objects() {
    for (int r = 2; r <= kMaxR; ++r) {
        auto a = PathAlgebra::cyclic_nakayama(r, default_prime(r));
        const int depth = 2 * r + 4;
        for (int i = 0; i < r; ++i)
            if (!is_p_infty_object(simple_module(a, i), 2, depth).ok) return false;
    }
    return true;
}

bool criterion_5_sod_certificates() {
    for (int r = 1; r <= kMaxR; ++r) {
        auto a = PathAlgebra::cyclic_nakayama(r, default_prime(r));
        const int depth = 2 * r + 4;
        for (int i = 0; i < r; ++i) {
            SodVerdict v = check_sod(a, i, depth);
            if (!v.ok) return false;
            if (static_cast<int>(v.projective_form.cone_steps.size()) != r - 1) return false;
            if (static_cast<int>(v.injective_form.cone_steps.size()) != r - 1) return false;
            if (!check_exceptional(projective_module(a, i), depth)) return false;
            if (!check_exceptional(injective_module(a, i), depth)) return false;
        }
    }
    return true;
}

bool criterion_6_injectives_and_serre() {
    std::mt19937 rng(601);
    for (int r = 1; r <= kMaxR; ++r) {
        auto a = PathAlgebra::cyclic_nakayama(r, default_prime(r));
        for (int i = 0; i < r; ++i) {
            // deterministic: zero random trials forces the uniserial fallback
            auto iso =
                is_isomorphic(injective_module(a, i), projective_module(a, (i + 1) % r), rng, 0);
            if (!iso.yes()) return false;
        }
        for (int t = 0; t < 100; ++t) {
            Complex x = random_perfect_complex(a, rng);
            Complex y = random_perfect_complex(a, rng);
            if (!serre_duality_check(x, y, 4)) return false;
        }
    }
    return true;
}

bool criterion_7_rotation_periodicity() {
    std::mt19937 rng(701);
    for (int r = 1; r <= kMaxR; ++r) {
        auto a = PathAlgebra::cyclic_nakayama(r, default_prime(r));
        if (!rotation_periodicity_check(a, 2 * r + 4, rng).ok) return false;
    }
    return true;
}

bool criterion_8_order_fibers() {
    for (const auto& data : kDataVectors) {
        int r = static_cast<int>(data.size());
        auto g = standard_hereditary_order(data, default_prime(r));
        auto f1 = order_fiber(g, 1);
        if (radical_dimension(*f1) != 0) return false;
        if (f1->dim() != g.n * g.n) return false;
        FiberBasicIso iso = fiber_basic_iso_to_lambda(g);
        if (!iso.iso.verify().ok) return false;
        if (iso.basic.algebra->dim() != r * r) return false;
    }
    return true;
}

bool criterion_9_overorders() {
    for (const auto& data : kDataVectors) {
        int r = static_cast<int>(data.size());
        auto g = standard_hereditary_order(data, default_prime(r));
        auto overs = enumerate_maximal_overorders(g);
        if (static_cast<int>(overs.size()) != r) return false;
        std::vector<bool> seen(static_cast<std::size_t>(r), false);
        for (const auto& b : overs) {
            if (!is_order(b.v) || !is_maximal(b.v)) return false;
            if (!overorder_bimodule_closed(b, g)) return false;
            for (int x = 0; x < g.n; ++x)
                for (int y = 0; y < g.n; ++y)
                    if (b.v[x][y] > g.v[x][y]) return false;  // containment B >= Gamma
            if (!overorder_module_check(b, g)) return false;
            int ty;
            try {
                ty = classify_overorder_type(b, g);
            } catch (const MixedTypes&) {
                return false;
            }
            if (seen[ty]) return false;
            seen[ty] = true;
        }
        for (int j = 0; j < r; ++j)
            if (!seen[j]) return false;
    }
    return true;
}

bool criterion_10_pushforward() {
    std::mt19937 rng(1001);
    for (int r = 1; r <= kMaxR; ++r) {
        auto g = standard_hereditary_order(std::vector<int>(r, 1), default_prime(r));
        OrderTruncation gt = truncated_order_algebra(g, 2);
        FiberBasicIso iso = fiber_basic_iso_to_lambda(g);
        auto table = pushforward_ext_table(gt, iso, 2 * r + 4);
        if (!table.matches_expected()) return false;
        for (int k = 0; k < r; ++k) {
            auto [hm1, h0] = derived_restriction_cohomology(gt, iso, k);
            Module sk = simple_module(iso.lambda, k);
            if (!is_isomorphic(hm1, sk, rng).yes()) return false;
            if (!is_isomorphic(h0, sk, rng).yes()) return false;
        }
    }
    return true;
}

bool criterion_11_skew_group() {
    std::mt19937 rng(1101);
    for (int r = 2; r <= kMaxR; ++r) {
        std::uint64_t p = default_prime(r);
        auto s = build_skew_group(r, p);
        auto iso = iso_to_lambda(s);
        if (!iso.iso.verify().ok) return false;
        auto corr = simple_correspondence(iso, rng);
        std::vector<bool> seen(static_cast<std::size_t>(r), false);
        for (int j : corr) {
            if (seen[j]) return false;
            seen[j] = true;
        }
    }
    return true;
}

bool criterion_12_cross_oracle() {
    std::mt19937 rng(1201);
    for (int r = 1; r <= kMaxR; ++r) {
        auto a = PathAlgebra::cyclic_nakayama(r, default_prime(r));
        for (int t = 0; t < 50; ++t) {
            Module m = random_module(a, rng);
            Module n = random_module(a, rng);
            if (m.dim() == 0) continue;
            Resolution res = minimal_resolution(m, 5);
            auto dims = ext_dims(res, n, 4);
            Complex xc = res.to_complex(5);
            Complex nc = concentrated_complex(n, 0);
            for (int deg = 0; deg <= 4; ++deg)
                if (dims[deg] != hom_homotopy_dim(xc, nc, deg)) return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* label;
        std::function<bool()> run;
    };
    const std::vector<Criterion> criteria{
        {"01 dim Lambda_r = r^2 for r = 1..6", criterion_1_dimension},
        {"02 two-periodic resolutions of simples with alternating terms", criterion_2_periodic_resolutions},
        {"03 Ext table of simples matches the parity/adjacency pattern", criterion_3_ext_table},
        {"04 every simple is a P-infinity-2 object with nonzero theta powers", criterion_4_p_infty_objects},
        {"05 both semiorthogonal decompositions certify with r-1 cones", criterion_5_sod_certificates},
        {"06 injectives are shifted projectives; Serre duality on 100 random pairs", criterion_6_injectives_and_serre},
        {"07 rotation periodicity: sigma^r = id and certificates rotate", criterion_7_rotation_periodicity},
        {"08 order fibers: wild fiber semisimple, ramified fiber basic-isomorphic", criterion_8_order_fibers},
        {"09 exactly r maximal overorders, types a bijection", criterion_9_overorders},
        {"10 pushforward Ext tables and divisor-restriction cohomology", criterion_10_pushforward},
        {"11 skew group algebra isomorphism and simple correspondence", criterion_11_skew_group},
        {"12 Ext via resolutions equals Ext via total Hom complexes", criterion_12_cross_oracle},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::cout << "[FAIL] " << c.label << "  (exception: " << e.what() << ")\n";
            ++failures;
            continue;
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.label << "\n";
        if (!ok) ++failures;
    }
    if (failures == 0)
        std::cout << "acceptance: all criteria passed\n";
    else
        std::cout << "acceptance: " << failures << " criteria FAILED\n";
    return failures == 0 ? 0 : 1;
}
