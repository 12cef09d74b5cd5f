#include "ordcert/fp.hpp"

namespace ordcert {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t smallest_prime_with_unity_root(std::uint64_t r, std::uint64_t lo) {
    if (r == 0) throw std::domain_error("smallest_prime_with_unity_root: r == 0");
    std::uint64_t q = lo < 2 ? 2 : lo;
    for (;; ++q) {
        if (!is_prime(q)) continue;
        if (r == 1) return q;
        if ((q - 1) % r == 0 && q % r != 0) return q;
    }
}

}  // namespace ordcert
