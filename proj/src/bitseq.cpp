#include "editcode/bitseq.hpp"

#include <algorithm>

namespace editcode {

BitSeq::BitSeq(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
        if (b > 1) throw std::invalid_argument("BitSeq: symbol not in {0,1}");
    }
}

BitSeq BitSeq::parse(std::string_view s) {
    BitSeq out;
    out.bits_.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1')
            throw std::invalid_argument("BitSeq::parse: invalid character at column " +
                                        std::to_string(i + 1));
        out.bits_.push_back(static_cast<std::uint8_t>(s[i] - '0'));
    }
    return out;
}

BitSeq BitSeq::from_index(std::uint64_t value, std::size_t n) {
    if (n > 64) throw std::invalid_argument("BitSeq::from_index: n > 64");
    BitSeq out;
    out.bits_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.bits_[i] = static_cast<std::uint8_t>((value >> (n - 1 - i)) & 1u);
    return out;
}

int BitSeq::at1(std::size_t i) const {
    if (i < 1 || i > bits_.size()) throw std::out_of_range("BitSeq::at1: index out of range");
    return bits_[i - 1];
}

void BitSeq::set1(std::size_t i, int bit) {
    if (i < 1 || i > bits_.size()) throw std::out_of_range("BitSeq::set1: index out of range");
    bits_[i - 1] = static_cast<std::uint8_t>(bit != 0);
}

std::uint64_t BitSeq::weight() const {
    std::uint64_t w = 0;
    for (auto b : bits_) w += b;
    return w;
}

std::uint64_t BitSeq::range_weight(std::size_t i, std::size_t j) const {
    if (j < i) return 0;
    if (i < 1 || j > bits_.size()) throw std::out_of_range("BitSeq::range_weight: out of range");
    std::uint64_t w = 0;
    for (std::size_t k = i; k <= j; ++k) w += bits_[k - 1];
    return w;
}

BitSeq BitSeq::slice1(std::size_t i, std::size_t j) const {
    BitSeq out;
    if (j < i) return out;
    if (i < 1 || j > bits_.size()) throw std::out_of_range("BitSeq::slice1: out of range");
    out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(i - 1),
                     bits_.begin() + static_cast<std::ptrdiff_t>(j));
    return out;
}

std::string BitSeq::str() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
}

std::uint64_t BitSeq::to_index() const {
    if (bits_.size() > 64) throw std::invalid_argument("BitSeq::to_index: n > 64");
    std::uint64_t v = 0;
    for (auto b : bits_) v = (v << 1) | b;
    return v;
}

std::size_t BitSeqHash::operator()(const BitSeq& x) const noexcept {
    // FNV-1a over symbols, length folded in so 0 and 00 differ.
    std::uint64_t h = 1469598103934665603ull;
    h = (h ^ x.size()) * 1099511628211ull;
    for (auto b : x.bits()) h = (h ^ b) * 1099511628211ull;
    return static_cast<std::size_t>(h);
}

BitSeq complement(const BitSeq& x) {
    std::vector<std::uint8_t> out(x.bits());
    for (auto& b : out) b ^= 1u;
    return BitSeq(std::move(out));
}

BitSeq reversed(const BitSeq& x) {
    std::vector<std::uint8_t> out(x.bits());
    std::reverse(out.begin(), out.end());
    return BitSeq(std::move(out));
}

BitSeq concat(const BitSeq& a, const BitSeq& b) {
    std::vector<std::uint8_t> out(a.bits());
    out.insert(out.end(), b.bits().begin(), b.bits().end());
    return BitSeq(std::move(out));
}

BitSeq differential(const BitSeq& x) {
    const std::size_t n = x.size();
    std::vector<std::uint8_t> out(n + 1);
    std::uint8_t prev = 0;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = static_cast<std::uint8_t>(x[i] ^ prev);
        prev = static_cast<std::uint8_t>(x[i]);
    }
    out[n] = prev;  // 0 xor x_n
    return BitSeq(std::move(out));
}

BitSeq inverse_differential(const BitSeq& p) {
    if (p.empty()) throw std::invalid_argument("inverse_differential: empty input");
    if (p.weight() % 2 != 0)
        throw std::invalid_argument("inverse_differential: odd weight has no preimage");
    const std::size_t n = p.size() - 1;
    std::vector<std::uint8_t> out(n);
    std::uint8_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        acc ^= static_cast<std::uint8_t>(p[i]);
        out[i] = acc;
    }
    return BitSeq(std::move(out));
}

IntSeq run_sequence(const BitSeq& x) {
    const std::size_t n = x.size();
    if (n < 1) throw std::invalid_argument("run_sequence: requires n >= 1");
    IntSeq r(n + 1);
    r[0] = static_cast<std::uint64_t>(x[0]);
    for (std::size_t i = 1; i < n; ++i) r[i] = r[i - 1] + (x[i] != x[i - 1] ? 1 : 0);
    r[n] = r[n - 1] + (0 != x[n - 1] ? 1 : 0);  // x_{n+1} = 0
    return r;
}

BitSeq indicator(const BitSeq& x, int a, int b) {
    const std::size_t n = x.size();
    if (n < 2) throw std::invalid_argument("indicator: requires n >= 2");
    std::vector<std::uint8_t> out(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        out[i] = static_cast<std::uint8_t>(x[i] == a && x[i + 1] == b);
    return BitSeq(std::move(out));
}

BitSeq block(const BitSeq& x, std::size_t P, std::size_t i) {
    const std::size_t n = x.size();
    if (P == 0) throw std::invalid_argument("block: requires P >= 1");
    const std::size_t nprime = n / P;
    if (i < 1 || i > nprime + 1) throw std::invalid_argument("block: index out of range");
    if (i <= nprime) return x.slice1((i - 1) * P + 1, i * P);
    return x.slice1(nprime * P + 1, n);
}

ParseError::ParseError(std::size_t line_, std::size_t column_, const std::string& what_)
    : std::runtime_error(what_), line(line_), column(column_) {}

std::vector<BitSeq> read_sequences(std::istream& in) {
    std::vector<BitSeq> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        for (std::size_t col = 0; col < line.size(); ++col) {
            if (line[col] != '0' && line[col] != '1')
                throw ParseError(lineno, col + 1,
                                 "invalid character '" + std::string(1, line[col]) +
                                     "' at line " + std::to_string(lineno) + ", column " +
                                     std::to_string(col + 1));
        }
        out.push_back(BitSeq::parse(line));
    }
    return out;
}

}  // namespace editcode
