#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "editcode/balance.hpp"
#include "editcode/bitseq.hpp"

namespace editcode {

enum class Construction { Lev, C2dBounded, CdsBounded, C2d, C2s, Cds, CdsList, C2e, C2eList };

/// How block pairings behave at the right boundary when a pairing's second
/// block index exceeds n'+1: either the lone block still contributes (paired
/// with the empty sequence) or the whole term is dropped. Kept switchable so
/// the verifier can A/B both readings.
enum class BoundaryRule { PairWithEmpty, DropLonePair };

std::string construction_name(Construction c);
std::optional<Construction> construction_from_name(const std::string& name);

struct CodeSpec {
    Construction tag{Construction::Lev};
    std::size_t n{0};
    std::uint64_t P{0};                       // block length for bounded codes
    BalanceParams balance{1, {1, 18}};        // ell, eps
    bool asymptotic_mode{false};
    BoundaryRule boundary{BoundaryRule::PairWithEmpty};
    std::uint64_t lev_modulus{0};             // Lev only; defaults to 2n
    std::map<std::string, std::uint64_t> residues;

    /// Parses "code=C2S n=12 b0=3 b1=17 b2=101 ..." tokens. Unknown keys and
    /// out-of-range residues are rejected.
    static CodeSpec parse(const std::vector<std::string>& tokens);
    std::string str() const;
};

/// One membership condition: a congruence (modulus > 0) or a structural
/// predicate such as the balance constraints (modulus == 0).
struct Condition {
    std::string name;
    std::uint64_t modulus{0};
    std::uint64_t expected{0};
    std::uint64_t actual{0};
    bool ok{false};
};

std::vector<Condition> evaluate_conditions(const CodeSpec& spec, const BitSeq& x);
bool is_member(const CodeSpec& spec, const BitSeq& x);

/// Returns spec with every residue set to the anchor's own syndromes (the
/// self-consistent class).
CodeSpec anchored(CodeSpec spec, const BitSeq& anchor);

/// The names of the residue keys a construction requires, in canonical order.
std::vector<std::string> residue_keys(const CodeSpec& spec);

/// In asymptotic mode, fills ell = ceil(1296 log2 n), eps = 1/18, P = 6(ell+3).
void apply_asymptotic_defaults(CodeSpec& spec);

/// All codewords in lexicographic order. Throws above `hard_limit`; emits a
/// warning on stderr above `warn_limit`.
std::vector<BitSeq> enumerate_code(const CodeSpec& spec, std::size_t hard_limit = 24,
                                   std::size_t warn_limit = 20);

struct PartitionStats {
    std::uint64_t eligible{0};       // sequences passing the structural predicates
    std::uint64_t classes{0};        // non-empty residue classes
    std::uint64_t max_class{0};
    double redundancy_bits{0};       // n - log2(max_class)
    std::map<std::uint64_t, std::uint64_t> size_histogram;
};

/// Histogram of class sizes over all residue tuples; residues in `spec` are
/// ignored (every x is keyed by its own syndromes).
PartitionStats partition_stats(const CodeSpec& spec, std::size_t hard_limit = 24);

// Low-level predicates, exposed for direct testing.
bool lev_member(const BitSeq& x, std::uint64_t m, std::uint64_t a);

/// The ten C2D^P block-pairing syndromes, order: odd/even pairing of
/// indicator-01 orders 1,2,3 (mod 4P, 4P^2, 8P^3), then indicator-10 orders
/// 0,2 (mod 3, 4P): {a1, a1', a2, a2', a3, a3', a4, a4', a5, a5'}.
std::array<std::uint64_t, 10> c2d_bounded_syndromes(const BitSeq& x, std::uint64_t P,
                                                    BoundaryRule rule);

/// The six CDS^P syndromes: VT^{(k)} of concatenated block pairs mod 3(2P)^k,
/// k in {1,2,3}, odd then even pairing: {c1, c1', c2, c2', c3, c3'}.
std::array<std::uint64_t, 6> cds_bounded_syndromes(const BitSeq& x, std::uint64_t P,
                                                   BoundaryRule rule);

}  // namespace editcode
