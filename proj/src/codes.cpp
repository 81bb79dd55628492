#include "editcode/codes.hpp"

#include <cmath>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "editcode/syndromes.hpp"

namespace editcode {

namespace {

std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

BitSeq indicator_or_empty(const BitSeq& x, int a, int b) {
    if (x.size() < 2) return BitSeq{};
    return indicator(x, a, b);
}

bool needs_balance(Construction c) {
    return c == Construction::C2d || c == Construction::Cds || c == Construction::C2e ||
           c == Construction::C2eList;
}

bool needs_c2d_bounded(Construction c) {
    return c == Construction::C2d || c == Construction::C2e || c == Construction::C2eList;
}

bool needs_cds_bounded(Construction c) {
    return c == Construction::Cds || c == Construction::C2e;
}

bool needs_p(Construction c) {
    return c == Construction::C2dBounded || c == Construction::CdsBounded ||
           needs_c2d_bounded(c) || needs_cds_bounded(c);
}

struct Pairing {
    BitSeq cat;  // x^{(P,t)} x^{(P,t+1)}
};

std::vector<Pairing> block_pairs(const BitSeq& x, std::uint64_t P, bool odd, BoundaryRule rule) {
    const std::size_t nprime = x.size() / P;
    std::vector<Pairing> out;
    for (std::size_t t = odd ? 1 : 2; t <= nprime + 1; t += 2) {
        const BitSeq first = block(x, P, t);
        const BitSeq partner = t + 1 <= nprime + 1 ? block(x, P, t + 1) : BitSeq{};
        // A term whose partner block is empty or absent is a lone term: one
        // rule keeps it as the block alone, the other omits it entirely.
        if (partner.empty() && rule == BoundaryRule::DropLonePair) continue;
        out.push_back({concat(first, partner)});
    }
    return out;
}

const std::vector<std::string> kC2dBoundedKeys = {"a1", "a1p", "a2", "a2p", "a3",
                                                  "a3p", "a4", "a4p", "a5", "a5p"};
const std::vector<std::string> kCdsBoundedKeys = {"c1", "c1p", "c2", "c2p", "c3", "c3p"};

std::array<std::uint64_t, 10> c2d_bounded_moduli(std::uint64_t P) {
    return {4 * P, 4 * P, 4 * P * P, 4 * P * P, 8 * P * P * P,
            8 * P * P * P, 3, 3, 4 * P, 4 * P};
}

std::array<std::uint64_t, 6> cds_bounded_moduli(std::uint64_t P) {
    const std::uint64_t q = 2 * P;
    return {3 * q, 3 * q, 3 * q * q, 3 * q * q, 3 * q * q * q, 3 * q * q * q};
}

}  // namespace

std::string construction_name(Construction c) {
    switch (c) {
        case Construction::Lev: return "LEV";
        case Construction::C2dBounded: return "C2D_P";
        case Construction::CdsBounded: return "CDS_P";
        case Construction::C2d: return "C2D";
        case Construction::C2s: return "C2S";
        case Construction::Cds: return "CDS";
        case Construction::CdsList: return "CDS_L";
        case Construction::C2e: return "C2E";
        case Construction::C2eList: return "C2E_L";
    }
    return "?";
}

std::optional<Construction> construction_from_name(const std::string& name) {
    for (Construction c : {Construction::Lev, Construction::C2dBounded, Construction::CdsBounded,
                           Construction::C2d, Construction::C2s, Construction::Cds,
                           Construction::CdsList, Construction::C2e, Construction::C2eList})
        if (construction_name(c) == name) return c;
    return std::nullopt;
}

std::array<std::uint64_t, 10> c2d_bounded_syndromes(const BitSeq& x, std::uint64_t P,
                                                    BoundaryRule rule) {
    if (P == 0) throw std::invalid_argument("c2d_bounded: requires P >= 1");
    const auto moduli = c2d_bounded_moduli(P);
    std::array<Wide, 10> raw{};
    for (int parity = 0; parity < 2; ++parity) {
        for (const auto& pr : block_pairs(x, P, parity == 0, rule)) {
            const BitSeq i01 = indicator_or_empty(pr.cat, 0, 1);
            const BitSeq i10 = indicator_or_empty(pr.cat, 1, 0);
            raw[0 + parity] += vt(i01, 1);
            raw[2 + parity] += vt(i01, 2);
            raw[4 + parity] += vt(i01, 3);
            raw[6 + parity] += vt(i10, 0);
            raw[8 + parity] += vt(i10, 2);
        }
    }
    std::array<std::uint64_t, 10> out{};
    for (std::size_t i = 0; i < 10; ++i) out[i] = static_cast<std::uint64_t>(raw[i] % moduli[i]);
    return out;
}

std::array<std::uint64_t, 6> cds_bounded_syndromes(const BitSeq& x, std::uint64_t P,
                                                   BoundaryRule rule) {
    if (P == 0) throw std::invalid_argument("cds_bounded: requires P >= 1");
    const auto moduli = cds_bounded_moduli(P);
    std::array<Wide, 6> raw{};
    for (int parity = 0; parity < 2; ++parity) {
        for (const auto& pr : block_pairs(x, P, parity == 0, rule)) {
            for (unsigned k = 1; k <= 3; ++k) raw[2 * (k - 1) + parity] += vt(pr.cat, k);
        }
    }
    std::array<std::uint64_t, 6> out{};
    for (std::size_t i = 0; i < 6; ++i) out[i] = static_cast<std::uint64_t>(raw[i] % moduli[i]);
    return out;
}

bool lev_member(const BitSeq& x, std::uint64_t m, std::uint64_t a) {
    if (m < 2 * x.size()) throw std::invalid_argument("lev_member: requires m >= 2n");
    if (a >= m) throw std::invalid_argument("lev_member: residue out of range");
    return vt_mod(x, 1, m) == a;
}

std::vector<std::string> residue_keys(const CodeSpec& spec) {
    std::vector<std::string> keys;
    auto append = [&](std::initializer_list<const char*> ks) {
        for (auto* k : ks) keys.emplace_back(k);
    };
    switch (spec.tag) {
        case Construction::Lev: append({"a"}); break;
        case Construction::C2dBounded:
            keys.insert(keys.end(), kC2dBoundedKeys.begin(), kC2dBoundedKeys.end());
            break;
        case Construction::CdsBounded:
            keys.insert(keys.end(), kCdsBoundedKeys.begin(), kCdsBoundedKeys.end());
            break;
        case Construction::C2d:
            append({"a0", "a1", "b0", "b1", "b2"});
            for (auto& k : kC2dBoundedKeys) keys.push_back("p_" + k);
            break;
        case Construction::C2s: append({"b0", "b1", "b2"}); break;
        case Construction::Cds:
            append({"a0", "a1", "b0", "b1", "b2"});
            for (auto& k : kCdsBoundedKeys) keys.push_back("p_" + k);
            break;
        case Construction::CdsList: append({"b0", "b1", "b2"}); break;
        case Construction::C2e:
            append({"a0", "a1", "a2", "b0", "b1", "b2"});
            for (auto& k : kC2dBoundedKeys) keys.push_back("p_" + k);
            for (auto& k : kCdsBoundedKeys) keys.push_back("p_" + k);
            break;
        case Construction::C2eList:
            append({"a0", "a1", "a2", "b0", "b1"});
            for (auto& k : kC2dBoundedKeys) keys.push_back("p_" + k);
            break;
    }
    return keys;
}

void apply_asymptotic_defaults(CodeSpec& spec) {
    if (!spec.asymptotic_mode) return;
    if (spec.n < 2) throw std::invalid_argument("asymptotic mode: requires n >= 2");
    const std::uint64_t ell =
        static_cast<std::uint64_t>(std::ceil(1296.0 * std::log2(static_cast<double>(spec.n))));
    spec.balance = {ell, {1, 18}};
    if (needs_p(spec.tag) && spec.P < 6 * (ell + 3)) spec.P = 6 * (ell + 3);
}

std::vector<Condition> evaluate_conditions(const CodeSpec& spec, const BitSeq& x) {
    if (x.size() != spec.n) throw std::invalid_argument("evaluate_conditions: length mismatch");
    const std::uint64_t n = spec.n;
    std::vector<Condition> out;

    auto residue = [&](const std::string& key, std::uint64_t modulus) {
        auto it = spec.residues.find(key);
        if (it == spec.residues.end())
            throw std::invalid_argument("spec is missing residue '" + key + "'");
        if (it->second >= modulus)
            throw std::invalid_argument("residue '" + key + "' out of range [0, " +
                                        std::to_string(modulus) + ")");
        return it->second;
    };
    auto congruence = [&](const std::string& name, const std::string& key, Wide raw,
                          std::uint64_t modulus) {
        Condition c;
        c.name = name;
        c.modulus = modulus;
        c.expected = residue(key, modulus);
        c.actual = static_cast<std::uint64_t>(raw % modulus);
        c.ok = c.actual == c.expected;
        out.push_back(c);
    };
    auto predicate = [&](const std::string& name, bool ok) {
        Condition c;
        c.name = name;
        c.ok = ok;
        out.push_back(c);
    };

    if (needs_balance(spec.tag)) {
        predicate("strong_balanced(x)", is_strong_locally_balanced(x, spec.balance));
        predicate("strong_balanced(psi(x))",
                  is_strong_locally_balanced(differential(x), spec.balance));
    }
    if (spec.tag == Construction::CdsList) {
        const std::uint64_t w = x.weight();
        predicate("x not in {0^n, 1^n}", w != 0 && w != n);
    }

    const BitSeq psi =
        (spec.tag == Construction::C2d || spec.tag == Construction::Cds ||
         spec.tag == Construction::C2e || spec.tag == Construction::C2eList)
            ? differential(x)
            : BitSeq{};

    switch (spec.tag) {
        case Construction::Lev: {
            const std::uint64_t m = spec.lev_modulus ? spec.lev_modulus : 2 * n;
            if (m < 2 * n) throw std::invalid_argument("LEV: requires m >= 2n");
            congruence("VT1(x) mod " + std::to_string(m), "a", vt(x, 1), m);
            break;
        }
        case Construction::C2s:
            for (unsigned k = 0; k <= 2; ++k)
                congruence("VT" + std::to_string(k) + "(x)", "b" + std::to_string(k), vt(x, k),
                           4 * pow_u64(n, k) + 1);
            break;
        case Construction::CdsList:
            congruence("VT0(x) mod 4", "b0", vt(x, 0), 4);
            for (unsigned k = 1; k <= 2; ++k)
                congruence("VT" + std::to_string(k) + "(x)", "b" + std::to_string(k), vt(x, k),
                           2 * pow_u64(n, k));
            break;
        case Construction::C2d:
            for (unsigned k = 0; k <= 1; ++k)
                congruence("VT" + std::to_string(k) + "(psi(x))", "a" + std::to_string(k),
                           vt(psi, k), 4 * pow_u64(n + 1, k) + 1);
            for (unsigned k = 0; k <= 2; ++k)
                congruence("VT" + std::to_string(k) + "(x)", "b" + std::to_string(k), vt(x, k),
                           2 * pow_u64(n, k) + 1);
            break;
        case Construction::Cds:
            for (unsigned k = 0; k <= 1; ++k)
                congruence("VT" + std::to_string(k) + "(x)", "a" + std::to_string(k), vt(x, k),
                           3 * pow_u64(n, k) + 1);
            for (unsigned k = 0; k <= 2; ++k)
                congruence("VT" + std::to_string(k) + "(psi(x))", "b" + std::to_string(k),
                           vt(psi, k), 6 * pow_u64(n + 1, k) + 1);
            break;
        case Construction::C2e:
            for (unsigned k = 0; k <= 2; ++k)
                congruence("VT" + std::to_string(k) + "(x)", "a" + std::to_string(k), vt(x, k),
                           4 * pow_u64(n, k) + 1);
            for (unsigned k = 0; k <= 2; ++k)
                congruence("VT" + std::to_string(k) + "(psi(x))", "b" + std::to_string(k),
                           vt(psi, k), 6 * pow_u64(n + 1, k) + 1);
            break;
        case Construction::C2eList:
            for (unsigned k = 0; k <= 2; ++k)
                congruence("VT" + std::to_string(k) + "(x)", "a" + std::to_string(k), vt(x, k),
                           4 * pow_u64(n, k) + 1);
            for (unsigned k = 0; k <= 1; ++k)
                congruence("VT" + std::to_string(k) + "(psi(x))", "b" + std::to_string(k),
                           vt(psi, k), 4 * pow_u64(n + 1, k) + 1);
            break;
        case Construction::C2dBounded:
        case Construction::CdsBounded:
            break;
    }

    const bool direct_bounded =
        spec.tag == Construction::C2dBounded || spec.tag == Construction::CdsBounded;
    const std::string prefix = direct_bounded ? "" : "p_";
    if (spec.tag == Construction::C2dBounded || needs_c2d_bounded(spec.tag)) {
        if (spec.P == 0) throw std::invalid_argument("spec requires a block length P");
        const auto syn = c2d_bounded_syndromes(x, spec.P, spec.boundary);
        const auto moduli = c2d_bounded_moduli(spec.P);
        for (std::size_t i = 0; i < 10; ++i)
            congruence("C2D_P " + kC2dBoundedKeys[i], prefix + kC2dBoundedKeys[i], syn[i],
                       moduli[i]);
    }
    if (spec.tag == Construction::CdsBounded || needs_cds_bounded(spec.tag)) {
        if (spec.P == 0) throw std::invalid_argument("spec requires a block length P");
        const auto syn = cds_bounded_syndromes(x, spec.P, spec.boundary);
        const auto moduli = cds_bounded_moduli(spec.P);
        for (std::size_t i = 0; i < 6; ++i)
            congruence("CDS_P " + kCdsBoundedKeys[i], prefix + kCdsBoundedKeys[i], syn[i],
                       moduli[i]);
    }
    return out;
}

bool is_member(const CodeSpec& spec, const BitSeq& x) {
    for (const auto& c : evaluate_conditions(spec, x))
        if (!c.ok) return false;
    return true;
}

CodeSpec anchored(CodeSpec spec, const BitSeq& anchor) {
    // Evaluate with zero residues, then adopt the anchor's actual values.
    CodeSpec probe = spec;
    probe.residues.clear();
    const auto keys = residue_keys(spec);
    for (const auto& key : keys) probe.residues[key] = 0;
    std::size_t ki = 0;
    spec.residues.clear();
    for (const auto& c : evaluate_conditions(probe, anchor)) {
        if (c.modulus == 0) continue;
        spec.residues[keys.at(ki++)] = c.actual;
    }
    return spec;
}

std::vector<BitSeq> enumerate_code(const CodeSpec& spec, std::size_t hard_limit,
                                   std::size_t warn_limit) {
    if (spec.n > hard_limit) throw std::invalid_argument("enumerate_code: n over exhaustive limit");
    if (spec.n > warn_limit)
        std::cerr << "enumerate_code: warning: sweeping 2^" << spec.n << " sequences\n";
    std::vector<BitSeq> out;
    for (std::uint64_t v = 0; v < (1ull << spec.n); ++v) {
        BitSeq x = BitSeq::from_index(v, spec.n);
        if (is_member(spec, x)) out.push_back(std::move(x));
    }
    return out;
}

PartitionStats partition_stats(const CodeSpec& spec, std::size_t hard_limit) {
    if (spec.n > hard_limit) throw std::invalid_argument("partition_stats: n over exhaustive limit");
    CodeSpec probe = spec;
    probe.residues.clear();
    for (const auto& key : residue_keys(spec)) probe.residues[key] = 0;
    std::map<std::vector<std::uint64_t>, std::uint64_t> classes;
    PartitionStats stats;
    for (std::uint64_t v = 0; v < (1ull << spec.n); ++v) {
        const BitSeq x = BitSeq::from_index(v, spec.n);
        std::vector<std::uint64_t> key;
        bool eligible = true;
        for (const auto& c : evaluate_conditions(probe, x)) {
            if (c.modulus == 0) {
                if (!c.ok) eligible = false;
            } else {
                key.push_back(c.actual);
            }
        }
        if (!eligible) continue;
        ++stats.eligible;
        ++classes[key];
    }
    stats.classes = classes.size();
    for (const auto& [key, count] : classes) {
        stats.max_class = std::max(stats.max_class, count);
        ++stats.size_histogram[count];
    }
    stats.redundancy_bits =
        stats.max_class ? static_cast<double>(spec.n) - std::log2(static_cast<double>(stats.max_class))
                        : static_cast<double>(spec.n);
    return stats;
}

CodeSpec CodeSpec::parse(const std::vector<std::string>& tokens) {
    CodeSpec spec;
    std::map<std::string, std::string> kv;
    for (const auto& tok : tokens) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("spec token '" + tok + "' is not key=value");
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    auto take = [&](const std::string& key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    auto code = take("code");
    if (!code) throw std::invalid_argument("spec requires code=<construction>");
    auto tag = construction_from_name(*code);
    if (!tag) throw std::invalid_argument("unknown construction '" + *code + "'");
    spec.tag = *tag;
    auto nval = take("n");
    if (!nval) throw std::invalid_argument("spec requires n=<length>");
    spec.n = std::stoull(*nval);
    if (auto v = take("P")) spec.P = std::stoull(*v);
    if (auto v = take("ell")) spec.balance.ell = std::stoull(*v);
    if (auto v = take("eps_num")) spec.balance.eps.num = std::stoll(*v);
    if (auto v = take("eps_den")) spec.balance.eps.den = std::stoll(*v);
    if (auto v = take("m")) spec.lev_modulus = std::stoull(*v);
    if (auto v = take("mode")) {
        if (*v == "asymptotic")
            spec.asymptotic_mode = true;
        else if (*v == "relaxed")
            spec.asymptotic_mode = false;
        else
            throw std::invalid_argument("mode must be 'asymptotic' or 'relaxed'");
    }
    if (auto v = take("boundary")) {
        if (*v == "pair-empty")
            spec.boundary = BoundaryRule::PairWithEmpty;
        else if (*v == "drop-lone")
            spec.boundary = BoundaryRule::DropLonePair;
        else
            throw std::invalid_argument("boundary must be 'pair-empty' or 'drop-lone'");
    }
    apply_asymptotic_defaults(spec);
    for (const auto& key : residue_keys(spec))
        if (auto v = take(key)) spec.residues[key] = std::stoull(*v);
    if (!kv.empty()) throw std::invalid_argument("unknown spec key '" + kv.begin()->first + "'");
    return spec;
}

std::string CodeSpec::str() const {
    std::ostringstream os;
    os << "code=" << construction_name(tag) << " n=" << n;
    if (tag == Construction::Lev) os << " m=" << (lev_modulus ? lev_modulus : 2 * n);
    if (needs_p(tag)) os << " P=" << P;
    if (needs_balance(tag))
        os << " ell=" << balance.ell << " eps_num=" << balance.eps.num
           << " eps_den=" << balance.eps.den;
    if (needs_p(tag))
        os << " boundary="
           << (boundary == BoundaryRule::PairWithEmpty ? "pair-empty" : "drop-lone");
    os << " mode=" << (asymptotic_mode ? "asymptotic" : "relaxed");
    for (const auto& [k, v] : residues) os << ' ' << k << '=' << v;
    return os.str();
}

}  // namespace editcode
