// Command-line front end: syndrome/balance inspection, ball and channel
// tooling, membership, enumeration, partition statistics, decoding, and the
// brute-force verification harness.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "editcode/balance.hpp"
#include "editcode/balls.hpp"
#include "editcode/bitseq.hpp"
#include "editcode/codes.hpp"
#include "editcode/decode.hpp"
#include "editcode/syndromes.hpp"
#include "editcode/verify.hpp"

using json = nlohmann::ordered_json;
using namespace editcode;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoCandidate = 3;

struct Output {
    std::string format{"text"};
    std::string out_path;

    void emit(const json& report, const std::string& text) const {
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path);
            os = &file;
        }
        if (format == "json")
            *os << report.dump(2) << '\n';
        else
            *os << text;
    }
};

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", out.out_path, "Write the report to a file instead of stdout");
}

ChannelBudget parse_channel(const std::string& s) {
    unsigned t1 = 0, t2 = 0, t3 = 0;
    char c1 = 0, c2 = 0;
    std::istringstream is(s);
    if (!(is >> t1 >> c1 >> t2 >> c2 >> t3) || c1 != ',' || c2 != ',' || !(is >> std::ws).eof())
        throw CLI::ValidationError("--channel", "expected t1,t2,t3 (e.g. 0,2,0)");
    return {t1, t2, t3};
}

std::string strip_x_prefix(const std::string& s) {
    if (s.rfind("x=", 0) == 0) return s.substr(2);
    return s;
}

/// Splits the positional spec tokens into the code spec and an optional
/// inline x=<bits> sequence.
CodeSpec spec_from_tokens(std::vector<std::string> tokens, const std::string& anchor,
                          std::optional<BitSeq>* inline_x = nullptr) {
    std::vector<std::string> rest;
    for (auto& tok : tokens) {
        if (tok.rfind("x=", 0) == 0 && inline_x) {
            *inline_x = BitSeq::parse(tok.substr(2));
        } else {
            rest.push_back(std::move(tok));
        }
    }
    CodeSpec spec = CodeSpec::parse(rest);
    if (!anchor.empty()) spec = anchored(spec, BitSeq::parse(strip_x_prefix(anchor)));
    return spec;
}

json witness_json(const Witness& w) {
    return json{{"x", w.x.str()}, {"y", w.y.str()}, {"common", w.common.str()}};
}

json report_json(const json& config, const VerifyReport& rep) {
    json j{{"config", config},
           {"verdict", rep.certified ? "certified" : "refuted"},
           {"counts",
            {{"domain", rep.domain},
             {"pairs_checked", rep.pairs_checked},
             {"balls_generated", rep.balls_generated}}},
           {"elapsed_ms", rep.elapsed_ms}};
    if (rep.witness) j["witness"] = witness_json(*rep.witness);
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    return j;
}

std::string report_text(const VerifyReport& rep) {
    std::ostringstream os;
    os << rep.property << " [" << rep.params << "]: "
       << (rep.certified ? "certified" : "refuted") << '\n';
    if (rep.witness)
        os << "  witness: x=" << rep.witness->x.str() << " y=" << rep.witness->y.str()
           << " common=" << rep.witness->common.str() << '\n';
    for (const auto& n : rep.notes) os << "  note: " << n << '\n';
    os << "  domain=" << rep.domain << " pairs=" << rep.pairs_checked
       << " balls=" << rep.balls_generated << '\n';
    return os.str();
}

std::vector<BitSeq> read_word_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--words", "cannot open " + path);
    return read_sequences(in);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Binary edit-correcting codes: syndromes, balls, membership, "
                 "decoding, and exhaustive verification"};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    // ---------------------------------------------------------------- syndrome
    auto* syn = app.add_subcommand("syndrome", "VT syndromes of bitstrings");
    std::vector<std::string> syn_inputs;
    std::string syn_in_file, syn_transform = "identity";
    int syn_a = 0, syn_b = 1;
    unsigned syn_k = 0;
    std::uint64_t syn_mod = 0;
    Output syn_out;
    syn->add_option("bits", syn_inputs, "Bitstrings");
    syn->add_option("--in", syn_in_file, "Newline-delimited sequence file");
    syn->add_option("--transform", syn_transform, "identity|differential|run|indicator")
        ->check(CLI::IsMember({"identity", "differential", "run", "indicator"}));
    syn->add_option("--a", syn_a, "Indicator pair first bit");
    syn->add_option("--b", syn_b, "Indicator pair second bit");
    syn->add_option("--k", syn_k, "Syndrome order");
    syn->add_option("--modulus", syn_mod, "Reduce modulo m (0 = unreduced)");
    add_output_flags(syn, syn_out);
    syn->callback([&] {
        std::vector<BitSeq> xs;
        for (const auto& s : syn_inputs) xs.push_back(BitSeq::parse(s));
        if (!syn_in_file.empty()) {
            std::ifstream in(syn_in_file);
            if (!in) throw CLI::ValidationError("--in", "cannot open " + syn_in_file);
            for (auto& x : read_sequences(in)) xs.push_back(std::move(x));
        }
        if (xs.empty()) throw CLI::ValidationError("bits", "no input sequences");
        json residues = json::array();
        std::ostringstream text;
        for (const auto& x : xs) {
            Wide raw;
            if (syn_transform == "identity") raw = vt(x, syn_k);
            else if (syn_transform == "differential") raw = vt(differential(x), syn_k);
            else if (syn_transform == "run") raw = seq_sum(run_sequence(x));
            else raw = vt(indicator(x, syn_a, syn_b), syn_k);
            const Wide reduced = syn_mod ? raw % syn_mod : raw;
            const auto v = static_cast<std::uint64_t>(reduced);
            residues.push_back(v);
            text << v << '\n';
        }
        json config{{"subcommand", "syndrome"}, {"transform", syn_transform},
                    {"k", syn_k},               {"modulus", syn_mod},
                    {"inputs", xs.size()}};
        syn_out.emit(json{{"config", config},
                          {"verdict", "ok"},
                          {"counts", {{"inputs", xs.size()}}},
                          {"residues", residues},
                          {"elapsed_ms", 0}},
                     text.str());
    });

    // ----------------------------------------------------------------- balance
    auto* bal = app.add_subcommand("balance", "Locally-balanced / d-regular predicates");
    std::string bal_x;
    std::uint64_t bal_ell = 1, bal_regular = 0;
    std::int64_t bal_num = 1, bal_den = 18;
    bool bal_strong = false;
    Output bal_out;
    bal->add_option("x", bal_x, "Bitstring")->required();
    bal->add_option("--ell", bal_ell, "Window length");
    bal->add_option("--eps-num", bal_num, "Epsilon numerator");
    bal->add_option("--eps-den", bal_den, "Epsilon denominator");
    bal->add_flag("--strong", bal_strong, "All window lengths >= ell");
    bal->add_option("--regular", bal_regular, "d-regular check with this window (>= 4)");
    add_output_flags(bal, bal_out);
    bal->callback([&] {
        const BitSeq x = BitSeq::parse(bal_x);
        bool ok;
        std::string what;
        if (bal_regular) {
            ok = is_d_regular(x, bal_regular);
            what = "d-regular";
        } else {
            const BalanceParams p{bal_ell, {bal_num, bal_den}};
            ok = bal_strong ? is_strong_locally_balanced(x, p) : is_locally_balanced(x, p);
            what = bal_strong ? "strong-locally-balanced" : "locally-balanced";
        }
        json config{{"subcommand", "balance"}, {"x", x.str()},          {"check", what},
                    {"ell", bal_ell},          {"eps_num", bal_num},    {"eps_den", bal_den},
                    {"regular_window", bal_regular}};
        bal_out.emit(json{{"config", config},
                          {"verdict", ok ? "true" : "false"},
                          {"counts", {{"n", x.size()}}},
                          {"elapsed_ms", 0}},
                     what + ": " + (ok ? "true" : "false") + "\n");
    });

    // -------------------------------------------------------------------- ball
    auto* ball = app.add_subcommand("ball", "Enumerate an error ball");
    std::string ball_x;
    unsigned ball_t1 = 0, ball_t2 = 0, ball_t3 = 0;
    int ball_edits = -1;
    Output ball_out;
    ball->add_option("x", ball_x, "Bitstring")->required();
    ball->add_option("--t1", ball_t1, "Insertions (exact)");
    ball->add_option("--t2", ball_t2, "Deletions (exact)");
    ball->add_option("--t3", ball_t3, "Substitution cap");
    ball->add_option("--edits", ball_edits, "Total edit radius (overrides t1/t2/t3)");
    add_output_flags(ball, ball_out);
    ball->callback([&] {
        const BitSeq x = BitSeq::parse(ball_x);
        std::vector<BitSeq> members =
            ball_edits >= 0 ? edit_ball(x, {static_cast<unsigned>(ball_edits)})
                            : mixed_ball(x, {ball_t1, ball_t2, ball_t3});
        std::ostringstream text;
        json arr = json::array();
        for (const auto& w : members) {
            text << w.str() << '\n';
            arr.push_back(w.str());
        }
        json config{{"subcommand", "ball"}, {"x", x.str()},   {"t1", ball_t1},
                    {"t2", ball_t2},        {"t3", ball_t3}, {"edits", ball_edits}};
        ball_out.emit(json{{"config", config},
                           {"verdict", "ok"},
                           {"counts", {{"members", members.size()}}},
                           {"members", arr},
                           {"elapsed_ms", 0}},
                      text.str());
    });

    // ----------------------------------------------------------------- channel
    auto* chan = app.add_subcommand("channel", "Sample one corrupted word (seeded)");
    std::string chan_x;
    unsigned chan_t1 = 0, chan_t2 = 0, chan_t3 = 0;
    std::uint64_t chan_seed = 0;
    Output chan_out;
    chan->add_option("x", chan_x, "Bitstring")->required();
    chan->add_option("--t1", chan_t1, "Insertions (exact)");
    chan->add_option("--t2", chan_t2, "Deletions (exact)");
    chan->add_option("--t3", chan_t3, "Substitution cap");
    chan->add_option("--seed", chan_seed, "RNG seed (required; no implicit clock seeding)")
        ->required();
    add_output_flags(chan, chan_out);
    chan->callback([&] {
        const BitSeq x = BitSeq::parse(chan_x);
        const auto outcome = simulate_channel(x, {chan_t1, chan_t2, chan_t3}, chan_seed);
        std::ostringstream text;
        text << outcome.word.str() << '\n';
        json ops = json::array();
        for (const auto& op : outcome.ops) {
            const char* kind = op.kind == 'i' ? "insert" : op.kind == 'd' ? "delete" : "substitute";
            ops.push_back(json{{"op", kind}, {"pos", op.pos}, {"symbol", op.symbol}});
            text << kind << " pos=" << op.pos << " symbol=" << op.symbol << '\n';
        }
        json config{{"subcommand", "channel"}, {"x", x.str()},   {"t1", chan_t1},
                    {"t2", chan_t2},           {"t3", chan_t3}, {"seed", chan_seed}};
        chan_out.emit(json{{"config", config},
                           {"verdict", "ok"},
                           {"counts", {{"ops", outcome.ops.size()}}},
                           {"word", outcome.word.str()},
                           {"ops", ops},
                           {"elapsed_ms", 0}},
                      text.str());
    });

    // ------------------------------------------------------------------ member
    auto* mem = app.add_subcommand("member", "Membership with per-condition breakdown");
    std::vector<std::string> mem_tokens;
    std::string mem_anchor;
    Output mem_out;
    mem->add_option("spec", mem_tokens, "key=value spec tokens plus x=<bits>")->required();
    mem->add_option("--anchor", mem_anchor, "Set all residues to this sequence's syndromes");
    add_output_flags(mem, mem_out);
    mem->callback([&] {
        std::optional<BitSeq> x;
        const CodeSpec spec = spec_from_tokens(mem_tokens, mem_anchor, &x);
        if (!x) throw CLI::ValidationError("spec", "missing x=<bits>");
        const auto conditions = evaluate_conditions(spec, *x);
        bool ok = true;
        json arr = json::array();
        std::ostringstream text;
        for (const auto& c : conditions) {
            ok = ok && c.ok;
            json jc{{"name", c.name}, {"ok", c.ok}};
            if (c.modulus) {
                jc["modulus"] = c.modulus;
                jc["expected"] = c.expected;
                jc["actual"] = c.actual;
                text << (c.ok ? "  ok  " : "  FAIL") << ' ' << c.name << ": " << c.actual
                     << " (expected " << c.expected << " mod " << c.modulus << ")\n";
            } else {
                text << (c.ok ? "  ok  " : "  FAIL") << ' ' << c.name << '\n';
            }
            arr.push_back(std::move(jc));
        }
        json config{{"subcommand", "member"}, {"spec", spec.str()}, {"x", x->str()}};
        mem_out.emit(json{{"config", config},
                          {"verdict", ok ? "true" : "false"},
                          {"counts", {{"conditions", conditions.size()}}},
                          {"conditions", arr},
                          {"elapsed_ms", 0}},
                     std::string(ok ? "true" : "false") + "\n" + text.str());
    });

    // --------------------------------------------------------------- enumerate
    auto* en = app.add_subcommand("enumerate", "All codewords of a class");
    std::vector<std::string> en_tokens;
    std::string en_anchor;
    std::size_t en_limit = 24;
    Output en_out;
    en->add_option("spec", en_tokens, "key=value spec tokens")->required();
    en->add_option("--anchor", en_anchor, "Set all residues to this sequence's syndromes");
    en->add_option("--limit", en_limit, "Exhaustive n limit")->capture_default_str();
    add_output_flags(en, en_out);
    en->callback([&] {
        const CodeSpec spec = spec_from_tokens(en_tokens, en_anchor);
        const auto words = enumerate_code(spec, en_limit);
        std::ostringstream text;
        json arr = json::array();
        for (const auto& w : words) {
            text << w.str() << '\n';
            arr.push_back(w.str());
        }
        json config{{"subcommand", "enumerate"}, {"spec", spec.str()}};
        en_out.emit(json{{"config", config},
                         {"verdict", "ok"},
                         {"counts", {{"codewords", words.size()}}},
                         {"codewords", arr},
                         {"elapsed_ms", 0}},
                    text.str());
    });

    // ------------------------------------------------------------------- stats
    auto* st = app.add_subcommand("stats", "Partition statistics over residue classes");
    std::vector<std::string> st_tokens;
    std::size_t st_limit = 24;
    Output st_out;
    st->add_option("spec", st_tokens, "key=value spec tokens (residues ignored)")->required();
    st->add_option("--limit", st_limit, "Exhaustive n limit")->capture_default_str();
    add_output_flags(st, st_out);
    st->callback([&] {
        const CodeSpec spec = spec_from_tokens(st_tokens, "");
        const auto stats = partition_stats(spec, st_limit);
        json hist = json::object();
        for (const auto& [size, cnt] : stats.size_histogram)
            hist[std::to_string(size)] = cnt;
        const double n = static_cast<double>(spec.n);
        const double log_n = std::log2(n), loglog_n = n > 2 ? std::log2(log_n) : 0.0;
        // Asymptotic redundancy targets, printed for reference only; they are
        // existence results and are not achieved (or asserted) at this scale.
        json targets{{"two_deletion_or_1d1s", {{"formula", "4 log2 n + 12 log2 log2 n + O(1)"},
                                               {"value_without_O1", 4 * log_n + 12 * loglog_n}}},
                     {"two_edit", {{"formula", "6 log2 n + O(log2 log2 n)"},
                                   {"value_without_tail", 6 * log_n}}},
                     {"asserted", false}};
        std::ostringstream text;
        text << "eligible=" << stats.eligible << " classes=" << stats.classes
             << " max_class=" << stats.max_class << " redundancy_bits=" << stats.redundancy_bits
             << '\n'
             << "asymptotic targets (reference only, not asserted):\n"
             << "  4 log2 n + 12 log2 log2 n + O(1) ~ " << 4 * log_n + 12 * loglog_n << '\n'
             << "  6 log2 n + O(log2 log2 n) ~ " << 6 * log_n << "\n";
        json config{{"subcommand", "stats"}, {"spec", spec.str()}};
        st_out.emit(json{{"config", config},
                         {"verdict", "ok"},
                         {"counts",
                          {{"eligible", stats.eligible},
                           {"classes", stats.classes},
                           {"max_size", stats.max_class}}},
                         {"redundancy_bits", stats.redundancy_bits},
                         {"size_histogram", hist},
                         {"asymptotic_targets", targets},
                         {"elapsed_ms", 0}},
                    text.str());
    });

    // ------------------------------------------------------------------ decode
    auto* dec = app.add_subcommand("decode", "Decode a received word");
    std::vector<std::string> dec_tokens;
    std::string dec_anchor, dec_received, dec_channel;
    Output dec_out;
    dec->add_option("spec", dec_tokens, "key=value spec tokens")->required();
    dec->add_option("--anchor", dec_anchor, "Set all residues to this sequence's syndromes");
    dec->add_option("--received", dec_received, "Received bitstring")->required();
    dec->add_option("--channel", dec_channel, "Force search decoding under t1,t2,t3");
    add_output_flags(dec, dec_out);
    dec->callback([&] {
        const CodeSpec spec = spec_from_tokens(dec_tokens, dec_anchor);
        const BitSeq y = BitSeq::parse(dec_received);
        DecodeOutcome outcome;
        if (!dec_channel.empty()) {
            const ChannelBudget b = parse_channel(dec_channel);
            outcome = decode_by_search(y, spec.n, b,
                                       [&](const BitSeq& w) { return is_member(spec, w); });
        } else {
            switch (spec.tag) {
                case Construction::Lev: outcome = decode_single_edit(y, spec); break;
                case Construction::C2s: {
                    auto triple = substitution_residues(spec);
                    outcome = decode_two_substitutions(y, spec.n, (*triple)[0], (*triple)[1],
                                                       (*triple)[2]);
                    break;
                }
                case Construction::CdsList:
                case Construction::C2eList: outcome = list_decode_two_edit(y, spec); break;
                default: outcome = decode_two_edit(y, spec); break;
            }
        }
        json words = json::array();
        std::ostringstream text;
        text << outcome_kind_name(outcome.kind) << ": " << outcome.detail << '\n';
        for (const auto& w : outcome.words) {
            words.push_back(w.str());
            text << w.str() << '\n';
        }
        json config{{"subcommand", "decode"},
                    {"spec", spec.str()},
                    {"received", y.str()},
                    {"channel", dec_channel}};
        dec_out.emit(json{{"config", config},
                          {"verdict", outcome_kind_name(outcome.kind)},
                          {"counts", {{"candidates", outcome.words.size()}}},
                          {"words", words},
                          {"detail", outcome.detail},
                          {"elapsed_ms", 0}},
                     text.str());
        if (outcome.kind == OutcomeKind::NoCandidate) exit_code = kExitNoCandidate;
    });

    // ------------------------------------------------------------------ verify
    auto* ver = app.add_subcommand("verify", "Exhaustive certification of code properties");
    std::vector<std::string> ver_tokens;
    std::string ver_anchor, ver_words, ver_channel;
    int ver_edits = -1;
    std::size_t ver_list = 0;
    std::uint64_t ver_pbound = 0;
    bool ver_equiv = false;
    unsigned ver_jobs = 1;
    std::size_t ver_limit = 24;
    Output ver_out;
    ver->add_option("spec", ver_tokens, "key=value spec tokens (or use --words)");
    ver->add_option("--anchor", ver_anchor, "Set all residues to this sequence's syndromes");
    ver->add_option("--words", ver_words, "Verify an explicit codeword file instead of a spec");
    ver->add_option("--channel", ver_channel, "Channel budget t1,t2,t3");
    ver->add_option("--edits", ver_edits, "Edit-ball radius t");
    ver->add_option("--list", ver_list, "List cap L (with --channel)");
    ver->add_option("--p-bounded", ver_pbound, "Windowed check with this P (with --channel)");
    ver->add_flag("--equivalence", ver_equiv, "Two-edit biconditional check");
    ver->add_option("--jobs", ver_jobs, "Worker threads")->capture_default_str();
    ver->add_option("--limit", ver_limit, "Exhaustive n limit for spec enumeration");
    add_output_flags(ver, ver_out);
    ver->callback([&] {
        std::vector<BitSeq> words;
        std::string source;
        if (!ver_words.empty()) {
            words = read_word_file(ver_words);
            source = "words=" + ver_words;
        } else if (!ver_tokens.empty()) {
            const CodeSpec spec = spec_from_tokens(ver_tokens, ver_anchor);
            words = enumerate_code(spec, ver_limit);
            source = spec.str();
        } else {
            throw CLI::ValidationError("spec", "provide a code spec or --words");
        }
        VerifyReport rep;
        if (ver_equiv) {
            rep = verify_equivalence(words, ver_jobs);
        } else if (ver_list) {
            if (ver_channel.empty())
                throw CLI::ValidationError("--list", "requires --channel");
            rep = verify_list(words, parse_channel(ver_channel), ver_list, ver_jobs);
        } else if (ver_pbound) {
            if (ver_channel.empty())
                throw CLI::ValidationError("--p-bounded", "requires --channel");
            rep = verify_p_bounded(words, ver_pbound, parse_channel(ver_channel), ver_jobs);
        } else if (ver_edits >= 0) {
            rep = verify_edit_correcting(words, {static_cast<unsigned>(ver_edits)}, ver_jobs);
        } else if (!ver_channel.empty()) {
            rep = verify_correcting(words, parse_channel(ver_channel), ver_jobs);
        } else {
            throw CLI::ValidationError("--channel",
                                       "choose --channel, --edits, or --equivalence");
        }
        json config{{"subcommand", "verify"},
                    {"source", source},
                    {"property", rep.property},
                    {"params", rep.params},
                    {"jobs", ver_jobs}};
        ver_out.emit(report_json(config, rep), report_text(rep));
        if (!rep.certified) exit_code = kExitRefuted;
    });

    // ------------------------------------------------------------- lemma-suite
    auto* lem = app.add_subcommand("lemma-suite", "Exhaustive pairwise lemma sweep");
    std::size_t lem_nmax = 8;
    unsigned lem_jobs = 1;
    Output lem_out;
    lem->add_option("--n-max", lem_nmax, "Sweep all lengths up to this")->capture_default_str();
    lem->add_option("--jobs", lem_jobs, "Worker threads")->capture_default_str();
    add_output_flags(lem, lem_out);
    lem->callback([&] {
        const auto rep = verify_lemma_suite(lem_nmax, lem_jobs);
        json config{{"subcommand", "lemma-suite"}, {"n_max", lem_nmax}, {"jobs", lem_jobs}};
        lem_out.emit(report_json(config, rep), report_text(rep));
        if (!rep.certified) exit_code = kExitRefuted;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return exit_code;
}
