#include "mcell/primes.hpp"

namespace mcell {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

Prime next_prime(std::uint64_t n) {
    std::uint64_t c = n + 1;
    if (c <= 2) return 2;
    if (c % 2 == 0) ++c;
    while (!is_prime(c)) c += 2;
    return c;
}

std::vector<std::pair<Prime, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<Prime, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            unsigned e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace mcell
