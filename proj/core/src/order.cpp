#include "multiseg/order.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>
#include <vector>

namespace multiseg {

namespace {

// single-line working state: sorted (b,e) pairs
using Segs = std::vector<std::pair<int, int>>;

struct SegsHash {
    std::size_t operator()(const Segs& v) const noexcept {
        std::size_t h = v.size();
        for (auto [b, e] : v) {
            h ^= static_cast<std::size_t>(b * 1000003 + e) + 0x9e3779b97f4a7c15ULL + (h << 6) +
                 (h >> 2);
        }
        return h;
    }
};

bool pair_linked(std::pair<int, int> s1, std::pair<int, int> s2) {
    if (s1.first > s2.second + 1 || s2.first > s1.second + 1) return false;
    std::pair<int, int> u{std::min(s1.first, s2.first), std::max(s1.second, s2.second)};
    return u != s1 && u != s2;
}

void linkings_of(const Segs& b, std::vector<Segs>& out) {
    out.clear();
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            if (!pair_linked(b[i], b[j])) continue;
            Segs c;
            c.reserve(b.size());
            for (std::size_t k = 0; k < b.size(); ++k)
                if (k != i && k != j) c.push_back(b[k]);
            c.emplace_back(std::min(b[i].first, b[j].first), std::max(b[i].second, b[j].second));
            int lo = std::max(b[i].first, b[j].first), hi = std::min(b[i].second, b[j].second);
            if (lo <= hi) c.emplace_back(lo, hi);
            std::sort(c.begin(), c.end());
            out.push_back(std::move(c));
        }
    }
}

// strict downset of a single-line state; `visited` is the shared budget meter
std::vector<Segs> downset_one_line(const Segs& b, std::size_t limit, std::size_t& visited) {
    std::unordered_set<Segs, SegsHash> seen;
    std::vector<Segs> frontier{b}, result, next, links;
    seen.insert(b);
    while (!frontier.empty()) {
        next.clear();
        for (const auto& x : frontier) {
            linkings_of(x, links);
            for (auto& y : links) {
                if (seen.insert(y).second) {
                    if (++visited > limit) throw DownsetBudgetExceeded(visited - 1);
                    result.push_back(y);
                    next.push_back(std::move(y));
                }
            }
        }
        frontier.swap(next);
    }
    return result;
}

Multisegment recombine(const std::vector<Line>& lines, const std::vector<const Segs*>& choice) {
    std::vector<Segment> segs;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (auto [b, e] : *choice[i]) segs.emplace_back(lines[i], b, e);
    return Multisegment(std::move(segs));
}

}  // namespace

std::set<Multisegment> elementary_linkings(const Multisegment& b) {
    std::set<Multisegment> out;
    const auto& items = b.items();
    for (std::size_t i = 0; i < items.size(); ++i) {
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            if (!is_linked(items[i], items[j])) continue;
            std::vector<Segment> c;
            c.reserve(items.size());
            for (std::size_t k = 0; k < items.size(); ++k)
                if (k != i && k != j) c.push_back(items[k]);
            c.emplace_back(items[i].line, std::min(items[i].b, items[j].b),
                           std::max(items[i].e, items[j].e));
            int lo = std::max(items[i].b, items[j].b), hi = std::min(items[i].e, items[j].e);
            if (lo <= hi) c.emplace_back(items[i].line, lo, hi);
            out.insert(Multisegment(std::move(c)));
        }
    }
    return out;
}

std::set<Multisegment> strict_downset(const Multisegment& b, std::size_t limit) {
    // cross-line pairs are never linked, so the downset factors across lines
    std::map<Line, Segs> per_line;
    for (const auto& s : b) {
        auto& v = per_line[s.line];
        v.insert(std::lower_bound(v.begin(), v.end(), std::pair{s.b, s.e}), {s.b, s.e});
    }
    std::vector<Line> lines;
    std::vector<std::vector<Segs>> downsets;  // element 0 of each is the line's own state
    std::size_t visited = 0;
    for (auto& [line, segs] : per_line) {
        lines.push_back(line);
        auto d = downset_one_line(segs, limit, visited);
        d.insert(d.begin(), segs);
        downsets.push_back(std::move(d));
    }
    // cartesian recombination, excluding the all-identity choice
    std::set<Multisegment> out;
    std::vector<std::size_t> idx(lines.size(), 0);
    std::size_t emitted = 0;
    for (;;) {
        bool all_self = std::all_of(idx.begin(), idx.end(), [](std::size_t i) { return i == 0; });
        if (!all_self) {
            if (++emitted > limit) throw DownsetBudgetExceeded(emitted - 1);
            std::vector<const Segs*> choice;
            for (std::size_t i = 0; i < lines.size(); ++i) choice.push_back(&downsets[i][idx[i]]);
            out.insert(recombine(lines, choice));
        }
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == downsets[i].size()) idx[i++] = 0;
        if (i == idx.size()) break;
    }
    return out;
}

bool leq(const Multisegment& b1, const Multisegment& b2, std::size_t limit) {
    if (b1 == b2) return true;
    if (support(b1) != support(b2)) return false;  // linking preserves support
    return strict_downset(b2, limit).count(b1) > 0;
}

}  // namespace multiseg
