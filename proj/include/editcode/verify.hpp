#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "editcode/balls.hpp"
#include "editcode/bitseq.hpp"

namespace editcode {

/// A replayable refutation: two codewords and a corrupted word both can reach.
struct Witness {
    BitSeq x;
    BitSeq y;
    BitSeq common;
};

struct VerifyReport {
    std::string property;
    std::string params;
    bool certified{false};
    std::optional<Witness> witness;
    std::uint64_t pairs_checked{0};
    std::uint64_t balls_generated{0};
    std::uint64_t domain{0};  // number of codewords (or sequences) examined
    double elapsed_ms{0};
    std::vector<std::string> notes;
};

/// Pairwise disjointness of the budgeted balls. Refutations carry the
/// lexicographically-first counterexample pair and their smallest common word.
VerifyReport verify_correcting(const std::vector<BitSeq>& codewords, const ChannelBudget& b,
                               unsigned jobs = 1);

/// Same with the radius-t edit ball.
VerifyReport verify_edit_correcting(const std::vector<BitSeq>& codewords, const EditBudget& t,
                                    unsigned jobs = 1);

/// List-decodability: no corrupted word covered by more than L codeword
/// balls, established by ball-cover counting.
VerifyReport verify_list(const std::vector<BitSeq>& codewords, const ChannelBudget& b,
                         std::size_t L, unsigned jobs = 1);

/// Ball disjointness restricted to codeword pairs that agree outside a single
/// window of length at most P (all common prefix/suffix decompositions are
/// checked, since disjointness of a larger window does not imply it for a
/// smaller one).
VerifyReport verify_p_bounded(const std::vector<BitSeq>& codewords, std::uint64_t P,
                              const ChannelBudget& b, unsigned jobs = 1);

/// The biconditional: two-edit correcting <=> two-deletion correcting and
/// two-substitution correcting and one-deletion-one-substitution correcting.
/// Certified iff both directions hold on this codeword set.
VerifyReport verify_equivalence(const std::vector<BitSeq>& codewords, unsigned jobs = 1);

/// Exhaustive sweep of the pairwise ball lemmas (indel equivalence,
/// 1D1S/1I1S equivalence, mixed-type implication) and the differential-weight
/// observations, over all sequences of every length up to n_max.
VerifyReport verify_lemma_suite(std::size_t n_max, unsigned jobs = 1);

}  // namespace editcode
