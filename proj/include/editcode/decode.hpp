#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "editcode/balls.hpp"
#include "editcode/codes.hpp"

namespace editcode {

enum class OutcomeKind { Unique, List, NoCandidate, Ambiguous };

/// Unique carries exactly one word; List carries all candidates (sorted);
/// Ambiguous likewise. Every word returned satisfies the target membership
/// predicate and contains the received word in the stated ball.
struct DecodeOutcome {
    OutcomeKind kind{OutcomeKind::NoCandidate};
    std::vector<BitSeq> words;
    std::string detail;
};

std::string outcome_kind_name(OutcomeKind k);

using Membership = std::function<bool(const BitSeq&)>;

/// Syndrome decoder for up to two substitutions against the residues
/// (b0, b1, b2) taken modulo 4n^k+1. Case analysis on the centered
/// discrepancies; exact integer square roots; NoCandidate when any
/// consistency check (discriminant, parity, range, bit direction, final
/// congruences) fails.
DecodeOutcome decode_two_substitutions(const BitSeq& z, std::size_t n, std::uint64_t b0,
                                       std::uint64_t b1, std::uint64_t b2);

/// Enumerates the inverse ball of z under budget b (transmitted length n) and
/// filters by membership. Unique / Ambiguous / NoCandidate by candidate count.
DecodeOutcome decode_by_search(const BitSeq& z, std::size_t n, const ChannelBudget& b,
                               const Membership& member);

/// Single-edit decoding by received length: n-1 -> one deletion, n+1 -> one
/// insertion, n -> up to one substitution.
DecodeOutcome decode_single_edit(const BitSeq& y, const CodeSpec& spec);

/// Two-edit dispatch on |y| in {n-2..n+2}: pure deletion/insertion search at
/// n±2, one-indel-plus-up-to-one-substitution search at n±1, and at length n
/// the insert-delete search first, falling back to the two-substitution
/// decoder only when that search is empty. Throws on other lengths.
DecodeOutcome decode_two_edit(const BitSeq& y, const CodeSpec& spec);

/// List variant: unique at n±2, candidate list at n±1, and at length n the
/// union of the insert-delete search result and the two-substitution result.
DecodeOutcome list_decode_two_edit(const BitSeq& y, const CodeSpec& spec);

/// The (mod 4n^k+1, k in {0,1,2}) residue triple carried by a spec, when the
/// construction has one (C2S: b0..b2; C2E/C2E_L: a0..a2).
std::optional<std::array<std::uint64_t, 3>> substitution_residues(const CodeSpec& spec);

}  // namespace editcode
