#include "editcode/balance.hpp"

#include <stdexcept>
#include <vector>

namespace editcode {

namespace {

void check_params(const BalanceParams& p) {
    if (p.ell < 1) throw std::invalid_argument("balance: ell must be >= 1");
    if (p.eps.den <= 0 || p.eps.num <= 0 || 2 * p.eps.num >= p.eps.den)
        throw std::invalid_argument("balance: eps must lie in (0, 1/2)");
}

// Windows of one fixed length against prefix sums.
bool windows_balanced(const std::vector<std::uint64_t>& prefix, std::uint64_t len,
                      const Ratio& eps) {
    const std::uint64_t n = prefix.size() - 1;
    if (len > n) return true;
    // (1/2 - eps) len <= w <= (1/2 + eps) len, eps = num/den, scaled by 2 den.
    const __int128 lo = (__int128)len * (eps.den - 2 * eps.num);
    const __int128 hi = (__int128)len * (eps.den + 2 * eps.num);
    for (std::uint64_t i = 0; i + len <= n; ++i) {
        const __int128 w2 = (__int128)(prefix[i + len] - prefix[i]) * 2 * eps.den;
        if (w2 < lo || w2 > hi) return false;
    }
    return true;
}

std::vector<std::uint64_t> prefix_weights(const BitSeq& x) {
    std::vector<std::uint64_t> prefix(x.size() + 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) prefix[i + 1] = prefix[i] + x[i];
    return prefix;
}

}  // namespace

bool is_locally_balanced(const BitSeq& x, const BalanceParams& p) {
    check_params(p);
    return windows_balanced(prefix_weights(x), p.ell, p.eps);
}

bool is_strong_locally_balanced(const BitSeq& x, const BalanceParams& p) {
    check_params(p);
    const auto prefix = prefix_weights(x);
    // O(n^2) over all window lengths; fine at desk scale.
    for (std::uint64_t len = p.ell; len <= x.size(); ++len)
        if (!windows_balanced(prefix, len, p.eps)) return false;
    return true;
}

bool is_d_regular(const BitSeq& x, std::uint64_t window) {
    if (window < 4) throw std::invalid_argument("is_d_regular: window must be >= 4");
    const std::size_t n = x.size();
    if (window > n) return true;
    // It suffices to check windows of length exactly `window`.
    for (std::size_t i = 1; i + window - 1 <= n; ++i) {
        bool has11 = false, has00 = false;
        for (std::size_t j = i; j + 1 <= i + window - 1; ++j) {
            if (x.at1(j) == 1 && x.at1(j + 1) == 1) has11 = true;
            if (x.at1(j) == 0 && x.at1(j + 1) == 0) has00 = true;
        }
        if (!has11 || !has00) return false;
    }
    return true;
}

bool link_condition(Ratio eps_tilde, Ratio s, Ratio eps) {
    if (eps_tilde.den <= 0 || s.den <= 0 || eps.den <= 0)
        throw std::invalid_argument("link_condition: denominators must be positive");
    if (eps_tilde.num <= 0 || 2 * eps_tilde.num >= eps_tilde.den)
        throw std::invalid_argument("link_condition: eps_tilde must lie in (0, 1/2)");
    if (s.num < s.den) throw std::invalid_argument("link_condition: s must be >= 1");
    if (2 * eps.num >= eps.den) return false;  // eps < 1/2 fails
    // eps_tilde + (1 - 4 eps_tilde^2) / (4s) <= eps
    // with eps_tilde = p/q, s = u/v, eps = a/b; multiply by 4 u q^2 b > 0:
    //   4 u p q b + v b (q^2 - 4 p^2) <= 4 u q^2 a
    const __int128 p = eps_tilde.num, q = eps_tilde.den;
    const __int128 u = s.num, v = s.den;
    const __int128 a = eps.num, b = eps.den;
    const __int128 lhs = 4 * u * p * q * b + v * b * (q * q - 4 * p * p);
    const __int128 rhs = 4 * u * q * q * a;
    return lhs <= rhs;
}

std::uint64_t count_balanced_pair(std::size_t n, const BalanceParams& p, std::size_t limit) {
    check_params(p);
    if (n > limit) throw std::invalid_argument("count_balanced_pair: n exceeds exhaustive limit");
    std::uint64_t count = 0;
    for (std::uint64_t v = 0; v < (1ull << n); ++v) {
        const BitSeq x = BitSeq::from_index(v, n);
        if (is_strong_locally_balanced(x, p) && is_strong_locally_balanced(differential(x), p))
            ++count;
    }
    return count;
}

}  // namespace editcode
