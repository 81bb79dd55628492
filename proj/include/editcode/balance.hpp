#pragma once

#include <cstdint>

#include "editcode/bitseq.hpp"

namespace editcode {

/// Exact rational, used so interval bounds like (1/2 +- eps) * ell are compared
/// without floating point.
struct Ratio {
    std::int64_t num{0};
    std::int64_t den{1};
};

struct BalanceParams {
    std::uint64_t ell{1};
    Ratio eps{1, 18};
};

/// Every window of length exactly ell has weight in [(1/2-eps)ell, (1/2+eps)ell]
/// (closed interval). Windows longer than n are vacuously satisfied.
bool is_locally_balanced(const BitSeq& x, const BalanceParams& p);

/// Locally balanced for every window length ell' in [ell, n].
bool is_strong_locally_balanced(const BitSeq& x, const BalanceParams& p);

/// Every consecutive subsequence of length >= window contains both "11" and
/// "00". Requires window >= 4; window > n is vacuous.
bool is_d_regular(const BitSeq& x, std::uint64_t window);

/// True iff eps_tilde + (1 - 4 eps_tilde^2) / (4s) <= eps < 1/2.
/// Requires 0 < eps_tilde < 1/2 and s >= 1. Exact rational arithmetic.
bool link_condition(Ratio eps_tilde, Ratio s, Ratio eps);

/// |{x in Sigma^n : x and psi(x) both strong-(ell,eps)-locally-balanced}| by
/// full enumeration. Rejects n over the exhaustive limit.
std::uint64_t count_balanced_pair(std::size_t n, const BalanceParams& p, std::size_t limit = 20);

}  // namespace editcode
