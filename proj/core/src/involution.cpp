#include "multiseg/involution.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

namespace multiseg {

namespace {

void require_single_line(const Multisegment& a) {
    for (const auto& s : a)
        if (s.line != a.items().front().line)
            throw std::invalid_argument("step requires a single-line multisegment");
}

// working representation for per-line runs: sorted (b,e) pairs
using Segs = std::vector<std::pair<int, int>>;

// One end-descending step. Consumes from `work` (kept sorted), returns the
// produced interval and the used picks in stage order.
std::pair<int, int> left_step(Segs& work, std::vector<std::pair<int, int>>& used) {
    // maximal end, tie-broken by maximal beginning; (b,e) sort order means
    // the canonically-first copy among equals is the one std::find hits
    auto best = work.begin();
    for (auto it = work.begin(); it != work.end(); ++it)
        if (it->second > best->second || (it->second == best->second && it->first > best->first))
            best = it;
    std::pair<int, int> cur = *best;
    int x = cur.second;
    used.push_back(cur);
    work.erase(std::find(work.begin(), work.end(), cur));
    for (;;) {
        // among segments ending one lower that precede cur, maximal beginning
        const std::pair<int, int>* pick = nullptr;
        for (const auto& s : work)
            if (s.second == cur.second - 1 && s.first < cur.first && (!pick || s.first > pick->first))
                pick = &s;
        if (!pick) break;
        cur = *pick;
        used.push_back(cur);
        work.erase(std::find(work.begin(), work.end(), cur));
    }
    int k = static_cast<int>(used.size());
    // put back the truncations
    for (auto [b, e] : used)
        if (b <= e - 1) work.insert(std::lower_bound(work.begin(), work.end(), std::pair{b, e - 1}),
                                    {b, e - 1});
    return {x - k + 1, x};
}

// Dual step: minimal beginning (tie minimal end), beginnings ascend by 1,
// each later pick must be linked with (end above) the previous one.
std::pair<int, int> right_step(Segs& work, std::vector<std::pair<int, int>>& used) {
    auto best = work.begin();  // sorted by (b,e): front is minimal b, minimal e
    std::pair<int, int> cur = *best;
    int x = cur.first;
    used.push_back(cur);
    work.erase(best);
    for (;;) {
        const std::pair<int, int>* pick = nullptr;
        for (const auto& s : work)
            if (s.first == cur.first + 1 && s.second > cur.second &&
                (!pick || s.second < pick->second))
                pick = &s;
        if (!pick) break;
        cur = *pick;
        used.push_back(cur);
        work.erase(std::find(work.begin(), work.end(), cur));
    }
    int k = static_cast<int>(used.size());
    for (auto [b, e] : used)
        if (b + 1 <= e) work.insert(std::lower_bound(work.begin(), work.end(), std::pair{b + 1, e}),
                                    {b + 1, e});
    return {x, x + k - 1};
}

Multisegment to_multisegment(const Line& line, const Segs& segs) {
    std::vector<Segment> out;
    out.reserve(segs.size());
    for (auto [b, e] : segs) out.emplace_back(line, b, e);
    return Multisegment(std::move(out));
}

template <typename StepFn>
Multisegment run(const Multisegment& a, std::vector<StepTrace>* traces, StepFn step) {
    std::map<Line, Segs> per_line;
    for (const auto& s : a) {
        auto& v = per_line[s.line];
        v.insert(std::lower_bound(v.begin(), v.end(), std::pair{s.b, s.e}), {s.b, s.e});
    }
    std::vector<Segment> out;
    for (auto& [line, work] : per_line) {
        while (!work.empty()) {
            std::vector<std::pair<int, int>> used;
            auto [gb, ge] = step(work, used);
            out.emplace_back(line, gb, ge);
            if (traces) {
                StepTrace t;
                t.produced = Segment(line, gb, ge);
                for (auto [b, e] : used) t.used.emplace_back(line, b, e);
                t.remainder = to_multisegment(line, work);
                traces->push_back(std::move(t));
            }
        }
    }
    return Multisegment(std::move(out));
}

}  // namespace

StepTrace mwa_left_step(const Multisegment& a) {
    if (a.empty()) throw std::invalid_argument("empty multisegment");
    require_single_line(a);
    Segs work;
    for (const auto& s : a) work.emplace_back(s.b, s.e);
    std::vector<std::pair<int, int>> used;
    auto [gb, ge] = left_step(work, used);
    const Line& line = a.items().front().line;
    StepTrace t;
    t.produced = Segment(line, gb, ge);
    for (auto [b, e] : used) t.used.emplace_back(line, b, e);
    t.remainder = to_multisegment(line, work);
    return t;
}

StepTrace mwa_right_step(const Multisegment& a) {
    if (a.empty()) throw std::invalid_argument("empty multisegment");
    require_single_line(a);
    Segs work;
    for (const auto& s : a) work.emplace_back(s.b, s.e);
    std::vector<std::pair<int, int>> used;
    auto [gb, ge] = right_step(work, used);
    const Line& line = a.items().front().line;
    StepTrace t;
    t.produced = Segment(line, gb, ge);
    for (auto [b, e] : used) t.used.emplace_back(line, b, e);
    t.remainder = to_multisegment(line, work);
    return t;
}

Multisegment mwa_left(const Multisegment& a, std::vector<StepTrace>* traces) {
    return run(a, traces, [](Segs& w, auto& u) { return left_step(w, u); });
}

Multisegment mwa_right(const Multisegment& a, std::vector<StepTrace>* traces) {
    return run(a, traces, [](Segs& w, auto& u) { return right_step(w, u); });
}

std::string traces_to_json(const std::vector<StepTrace>& traces) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : traces) {
        nlohmann::json used = nlohmann::json::array();
        for (const auto& s : t.used) used.push_back({s.b, s.e});
        arr.push_back({{"produced", {t.produced.b, t.produced.e}},
                       {"line", t.produced.line.label},
                       {"used", std::move(used)}});
    }
    return arr.dump();
}

}  // namespace multiseg
