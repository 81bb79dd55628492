#include "editcode/balls.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <random>

namespace editcode {

namespace {

using Scripted = std::map<BitSeq, std::vector<EditOp>>;

void check_budget(const BitSeq& x, const ChannelBudget& b) {
    if (b.del > x.size()) throw std::invalid_argument("mixed_ball: more deletions than symbols");
    if (b.ins + b.del + b.subs > kBudgetLimit)
        throw std::invalid_argument("mixed_ball: budget exceeds configured limit");
}

Scripted singleton(const BitSeq& x) { return {{x, {}}}; }

std::vector<EditOp> extend(std::vector<EditOp> ops, EditOp op) {
    ops.push_back(op);
    return ops;
}

Scripted apply_deletions_once(const Scripted& in) {
    Scripted out;
    for (const auto& [w, ops] : in) {
        for (std::size_t d = 1; d <= w.size(); ++d) {
            BitSeq z = concat(w.slice1(1, d - 1), w.slice1(d + 1, w.size()));
            out.emplace(std::move(z), extend(ops, {'d', d, w.at1(d)}));
        }
    }
    return out;
}

Scripted apply_substitutions_upto(Scripted in, unsigned t3) {
    for (unsigned s = 0; s < t3; ++s) {
        Scripted next = in;
        for (const auto& [w, ops] : in) {
            for (std::size_t e = 1; e <= w.size(); ++e) {
                BitSeq z = w;
                z.set1(e, 1 - w.at1(e));
                next.emplace(std::move(z), extend(ops, {'s', e, w.at1(e)}));
            }
        }
        in = std::move(next);
    }
    return in;
}

Scripted apply_insertions_once(const Scripted& in) {
    Scripted out;
    for (const auto& [w, ops] : in) {
        for (std::size_t p = 0; p <= w.size(); ++p) {
            for (int sym : {0, 1}) {
                BitSeq z = w.slice1(1, p);
                z.push_back(sym);
                BitSeq tail = w.slice1(p + 1, w.size());
                for (std::size_t i = 1; i <= tail.size(); ++i) z.push_back(tail.at1(i));
                out.emplace(std::move(z), extend(ops, {'i', p + 1, sym}));
            }
        }
    }
    return out;
}

Scripted mixed_ball_scripted(const BitSeq& x, const ChannelBudget& b) {
    check_budget(x, b);
    Scripted cur = singleton(x);
    for (unsigned i = 0; i < b.del; ++i) cur = apply_deletions_once(cur);
    cur = apply_substitutions_upto(std::move(cur), b.subs);
    for (unsigned i = 0; i < b.ins; ++i) cur = apply_insertions_once(cur);
    return cur;
}

}  // namespace

std::vector<BitSeq> mixed_ball(const BitSeq& x, const ChannelBudget& b) {
    check_budget(x, b);
    std::set<BitSeq> cur{x};
    for (unsigned i = 0; i < b.del; ++i) {
        std::set<BitSeq> next;
        for (const auto& w : cur)
            for (std::size_t d = 1; d <= w.size(); ++d)
                next.insert(concat(w.slice1(1, d - 1), w.slice1(d + 1, w.size())));
        cur = std::move(next);
    }
    for (unsigned s = 0; s < b.subs; ++s) {
        std::set<BitSeq> next = cur;
        for (const auto& w : cur) {
            for (std::size_t e = 1; e <= w.size(); ++e) {
                BitSeq z = w;
                z.set1(e, 1 - w.at1(e));
                next.insert(std::move(z));
            }
        }
        cur = std::move(next);
    }
    for (unsigned i = 0; i < b.ins; ++i) {
        std::set<BitSeq> next;
        for (const auto& w : cur) {
            for (std::size_t p = 0; p <= w.size(); ++p) {
                for (int sym : {0, 1}) {
                    BitSeq z = w.slice1(1, p);
                    z.push_back(sym);
                    for (std::size_t j = p + 1; j <= w.size(); ++j) z.push_back(w.at1(j));
                    next.insert(std::move(z));
                }
            }
        }
        cur = std::move(next);
    }
    return {cur.begin(), cur.end()};
}

std::vector<BitSeq> edit_ball(const BitSeq& x, const EditBudget& b) {
    if (b.edits > x.size()) throw std::invalid_argument("edit_ball: t > n");
    std::set<BitSeq> acc;
    for (unsigned t1 = 0; t1 <= b.edits; ++t1)
        for (unsigned t2 = 0; t1 + t2 <= b.edits; ++t2)
            for (unsigned t3 = 0; t1 + t2 + t3 <= b.edits; ++t3) {
                auto ball = mixed_ball(x, {t1, t2, t3});
                acc.insert(ball.begin(), ball.end());
            }
    return {acc.begin(), acc.end()};
}

bool balls_intersect(const BitSeq& x, const BitSeq& y, const ChannelBudget& b) {
    if (x.size() != y.size()) throw std::invalid_argument("balls_intersect: length mismatch");
    auto ax = mixed_ball(x, b);
    std::unordered_set<BitSeq, BitSeqHash> probe(ax.begin(), ax.end());
    for (const auto& w : mixed_ball(y, b))
        if (probe.count(w)) return true;
    return false;
}

bool edit_balls_intersect(const BitSeq& x, const BitSeq& y, const EditBudget& b) {
    auto ax = edit_ball(x, b);
    std::unordered_set<BitSeq, BitSeqHash> probe(ax.begin(), ax.end());
    for (const auto& w : edit_ball(y, b))
        if (probe.count(w)) return true;
    return false;
}

BitSeq apply_del_sub(const BitSeq& x, std::size_t d, std::size_t e) {
    const std::size_t n = x.size();
    if (d < 1 || d > n) throw std::out_of_range("apply_del_sub: d out of range");
    if (e > n) throw std::out_of_range("apply_del_sub: e out of range");
    BitSeq w = x;
    if (e != 0 && e != d) w.set1(e, 1 - w.at1(e));
    return concat(w.slice1(1, d - 1), w.slice1(d + 1, n));
}

ChannelOutcome simulate_channel(const BitSeq& x, const ChannelBudget& b, std::uint64_t seed) {
    Scripted ball = mixed_ball_scripted(x, b);
    std::mt19937_64 rng(seed);
    const std::uint64_t size = ball.size();
    // Rejection sampling keeps the draw uniform and portable across stdlibs.
    const std::uint64_t bound = UINT64_MAX - UINT64_MAX % size;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= bound);
    auto it = ball.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(v % size));
    return {it->first, it->second};
}

}  // namespace editcode
