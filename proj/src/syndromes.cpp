#include "editcode/syndromes.hpp"

#include <stdexcept>

namespace editcode {

Wide vt_coefficient(std::uint64_t i, unsigned k) {
    if (i < 1) throw std::invalid_argument("vt_coefficient: requires i >= 1");
    switch (k) {
        case 0: return 1;
        case 1: return i;
        case 2: return Wide(i) * (i + 1) / 2;
        case 3: return Wide(i) * (i + 1) * (2 * Wide(i) + 1) / 6;  // sum of squares
        default: {
            Wide acc = 0;
            for (std::uint64_t j = 1; j <= i; ++j) {
                Wide p = 1;
                for (unsigned e = 0; e + 1 < k; ++e) p *= j;
                acc += p;
            }
            return acc;
        }
    }
}

Wide vt(const BitSeq& x, unsigned k) {
    Wide acc = 0;
    for (std::size_t i = 1; i <= x.size(); ++i)
        if (x.at1(i)) acc += vt_coefficient(i, k);
    return acc;
}

std::uint64_t vt_mod(const BitSeq& x, unsigned k, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("vt_mod: modulus must be positive");
    return static_cast<std::uint64_t>(vt(x, k) % m);
}

Wide seq_sum(const IntSeq& r) {
    Wide acc = 0;
    for (auto v : r) acc += v;
    return acc;
}

SyndromeVector syndrome_vector(const BitSeq& x, const std::vector<SyndromeSpec>& specs) {
    SyndromeVector out;
    out.reserve(specs.size());
    for (const auto& s : specs) {
        if (s.modulus == 0) throw std::invalid_argument("syndrome_vector: modulus must be positive");
        Wide raw = 0;
        switch (s.transform) {
            case Transform::Identity: raw = vt(x, s.order); break;
            case Transform::Differential: raw = vt(differential(x), s.order); break;
            case Transform::Run: raw = seq_sum(run_sequence(x)); break;
            case Transform::Indicator: raw = vt(indicator(x, s.a, s.b), s.order); break;
        }
        out.push_back(static_cast<std::uint64_t>(raw % s.modulus));
    }
    return out;
}

}  // namespace editcode
