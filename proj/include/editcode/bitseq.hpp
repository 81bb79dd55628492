#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace editcode {

/// Finite binary sequence. Symbols are indexed 1..n in the math-facing API
/// (at1/set1/slice1); operator[] is 0-based for plain loops.
class BitSeq {
public:
    BitSeq() = default;
    explicit BitSeq(std::vector<std::uint8_t> bits);

    /// Parses "0"/"1" characters, most significant character = x_1.
    /// Throws std::invalid_argument on any other character.
    static BitSeq parse(std::string_view s);

    /// The n low bits of `value`, bit (n-1) = x_1. Requires n <= 64.
    static BitSeq from_index(std::uint64_t value, std::size_t n);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    int operator[](std::size_t i) const { return bits_[i]; }
    int at1(std::size_t i) const;
    void set1(std::size_t i, int bit);
    void push_back(int bit) { bits_.push_back(static_cast<std::uint8_t>(bit != 0)); }

    std::uint64_t weight() const;
    /// Number of ones in x_[i,j] (1-based, inclusive); empty when j < i.
    std::uint64_t range_weight(std::size_t i, std::size_t j) const;

    /// x_[i,j] as a new sequence (1-based, inclusive); empty when j < i.
    BitSeq slice1(std::size_t i, std::size_t j) const;

    std::string str() const;
    /// Packs the sequence into the low bits of a word, x_1 highest. Requires n <= 64.
    std::uint64_t to_index() const;

    const std::vector<std::uint8_t>& bits() const { return bits_; }

    auto operator<=>(const BitSeq&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

struct BitSeqHash {
    std::size_t operator()(const BitSeq& x) const noexcept;
};

/// Run sequences and other non-binary integer sequences.
using IntSeq = std::vector<std::uint64_t>;

BitSeq complement(const BitSeq& x);
BitSeq reversed(const BitSeq& x);
BitSeq concat(const BitSeq& a, const BitSeq& b);

/// psi(x): length n+1, psi_i = x_i xor x_{i-1} with x_0 = x_{n+1} = 0.
BitSeq differential(const BitSeq& x);

/// Unique x with differential(x) = p. Throws std::invalid_argument when p has
/// odd weight (no preimage under the zero padding).
BitSeq inverse_differential(const BitSeq& p);

/// r^x: length n+1, r_1 = x_1, r_{i+1} = r_i + [x_{i+1} != x_i], x_{n+1} = 0.
/// Requires n >= 1.
IntSeq run_sequence(const BitSeq& x);

/// ab-indicator: length n-1, position i is 1 iff (x_i, x_{i+1}) = (a, b).
/// Requires n >= 2.
BitSeq indicator(const BitSeq& x, int a, int b);

/// Block x^{(P,i)}: x_[(i-1)P+1, iP] for i <= n' = floor(n/P), and the tail
/// x_[n'P+1, n] (possibly empty) for i = n'+1. Requires P <= n, 1 <= i <= n'+1.
BitSeq block(const BitSeq& x, std::size_t P, std::size_t i);

struct ParseError : std::runtime_error {
    ParseError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line;
    std::size_t column;
};

/// Newline-delimited ASCII bitstrings; blank lines skipped. Throws ParseError
/// naming line and column on invalid characters.
std::vector<BitSeq> read_sequences(std::istream& in);

}  // namespace editcode
