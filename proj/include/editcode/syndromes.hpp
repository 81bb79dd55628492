#pragma once

#include <cstdint>
#include <vector>

#include "editcode/bitseq.hpp"

namespace editcode {

/// Exact syndrome arithmetic is carried in 128 bits before any reduction.
using Wide = unsigned __int128;

/// c_i^{(k)} = sum_{j<=i} j^{k-1} for k >= 1, and 1 for k = 0. Requires i >= 1.
Wide vt_coefficient(std::uint64_t i, unsigned k);

/// VT^{(k)}(x) = sum_i c_i^{(k)} x_i, unreduced.
Wide vt(const BitSeq& x, unsigned k);

/// VT^{(k)}(x) mod m.
std::uint64_t vt_mod(const BitSeq& x, unsigned k, std::uint64_t m);

/// Plain entry sum of an integer sequence; VT^{(0)} of a run sequence.
Wide seq_sum(const IntSeq& r);

enum class Transform { Identity, Differential, Run, Indicator };

struct SyndromeSpec {
    Transform transform{Transform::Identity};
    int a{0};           // Indicator pair, ignored otherwise
    int b{1};
    unsigned order{0};  // k
    std::uint64_t modulus{1};
};

using SyndromeVector = std::vector<std::uint64_t>;

/// residue_j = VT^{(k_j)}(transform_j(x)) mod m_j. The Run transform feeds the
/// integer run sequence into a plain sum (order forced to 0).
SyndromeVector syndrome_vector(const BitSeq& x, const std::vector<SyndromeSpec>& specs);

}  // namespace editcode
