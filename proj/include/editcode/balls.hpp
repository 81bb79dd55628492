#pragma once

#include <cstdint>
#include <vector>

#include "editcode/bitseq.hpp"

namespace editcode {

/// Exactly `ins` insertions, exactly `del` deletions, up to `subs` substitutions.
struct ChannelBudget {
    unsigned ins{0};
    unsigned del{0};
    unsigned subs{0};
};

struct EditBudget {
    unsigned edits{0};
};

inline constexpr unsigned kBudgetLimit = 4;

/// B_{t1,t2,t3}(x): all sequences reachable under the budget, any error order.
/// Sorted, deduplicated. Throws when del > n or the total budget exceeds
/// kBudgetLimit. Generated canonically (deletions, then substitutions, then
/// insertions); equality with the any-order closure is a tested invariant.
std::vector<BitSeq> mixed_ball(const BitSeq& x, const ChannelBudget& b);

/// B_t(x): union of mixed balls over t1+t2+t3 <= t. Throws when t > n.
std::vector<BitSeq> edit_ball(const BitSeq& x, const EditBudget& b);

/// True iff the budgeted balls of x and y share a member. Requires |x| = |y|.
bool balls_intersect(const BitSeq& x, const BitSeq& y, const ChannelBudget& b);
bool edit_balls_intersect(const BitSeq& x, const BitSeq& y, const EditBudget& b);

/// Deletion/substitution normal form x(d,e): substitute position e
/// first, then delete position d (indices into the original x). e = 0 or
/// e = d means deletion only. 1-based; throws on out-of-range indices.
BitSeq apply_del_sub(const BitSeq& x, std::size_t d, std::size_t e);

struct EditOp {
    char kind{'s'};        // 'i' insert, 'd' delete, 's' substitute
    std::size_t pos{0};    // 1-based position in the word the op was applied to
    int symbol{0};         // inserted symbol; for 'd'/'s' the previous symbol
};

struct ChannelOutcome {
    BitSeq word;
    std::vector<EditOp> ops;
};

/// One uniformly sampled member of mixed_ball(x, b), deterministic per seed,
/// with a witnessing edit script.
ChannelOutcome simulate_channel(const BitSeq& x, const ChannelBudget& b, std::uint64_t seed);

}  // namespace editcode
