#include "multiseg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "multiseg/criteria.hpp"
#include "multiseg/involution.hpp"
#include "multiseg/lnt.hpp"
#include "multiseg/speh.hpp"

namespace multiseg {

std::string Report::to_json() const {
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : failures)
        fails.push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
    return nlohmann::json{{"suite", suite},
                          {"cases_run", cases_run},
                          {"failures", std::move(fails)},
                          {"wall_time", wall_time},
                          {"config",
                           {{"max_end", config.max_end},
                            {"max_segments", config.max_segments},
                            {"budget", config.budget},
                            {"seed", config.seed},
                            {"trials", config.trials},
                            {"parallel", config.parallel}}}}
        .dump(2);
}

namespace {

void fail(Report& rep, std::string inputs, std::string expected, std::string got) {
    if (rep.failures.size() < 50)  // cap the report, a broken property floods otherwise
        rep.failures.push_back({std::move(inputs), std::move(expected), std::move(got)});
    else
        rep.failures.push_back({"(suppressed)", "", ""});
}

std::string quad_str(const SpehParams& p) {
    std::ostringstream os;
    os << '(' << p.A << ',' << p.B << ',' << p.C << ',' << p.D << ")@" << p.line.label;
    return os.str();
}

std::vector<SpehParams> speh_grid(int max_end) {
    std::vector<SpehParams> out;
    for (int A = 0; A <= max_end; ++A)
        for (int D = A; D <= max_end; ++D)
            for (int B = A; B <= D; ++B) out.emplace_back(A, B, D + A - B, D);
    return out;
}

// exhaustive single-line multisegments with <= max_segs segments, endpoints in [0, max_end]
void for_each_multisegment(int max_end, int max_segs,
                           const std::function<void(const Multisegment&)>& fn) {
    std::vector<std::pair<int, int>> all;
    for (int b = 0; b <= max_end; ++b)
        for (int e = b; e <= max_end; ++e) all.emplace_back(b, e);
    std::vector<std::pair<int, int>> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        std::vector<Segment> segs;
        segs.reserve(cur.size());
        for (auto [b, e] : cur) segs.emplace_back(b, e);
        fn(Multisegment(std::move(segs)));
        if (cur.size() == static_cast<std::size_t>(max_segs)) return;
        for (std::size_t i = start; i < all.size(); ++i) {
            cur.push_back(all[i]);
            rec(i);  // with repetition
            cur.pop_back();
        }
    };
    rec(0);
}

Multisegment random_multisegment(std::mt19937_64& rng, int max_end, int max_segs) {
    std::uniform_int_distribution<int> nseg(1, std::max(1, max_segs));
    std::uniform_int_distribution<int> begin(-3, max_end + 3);
    std::uniform_int_distribution<int> len(1, max_end + 1);
    std::uniform_int_distribution<int> line_pick(0, 3);
    int n = nseg(rng);
    std::vector<Segment> segs;
    for (int i = 0; i < n; ++i) {
        Line line = line_pick(rng) == 0 ? Line{"mu"} : Line{};
        int b = begin(rng);
        segs.emplace_back(line, b, b + len(rng) - 1);
    }
    return Multisegment(std::move(segs));
}

// chunked parallel runner; results are merged in chunk order so the report
// is deterministic regardless of scheduling
void run_indexed(const VerifyConfig& cfg, std::size_t n,
                 const std::function<void(std::size_t, Report&)>& body, Report& rep) {
    unsigned workers =
        cfg.parallel ? std::max(1u, std::min(std::thread::hardware_concurrency(), 16u)) : 1u;
    if (workers <= 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) body(i, rep);
        return;
    }
    std::vector<Report> parts(workers);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) body(i, parts[w]);
        });
    }
    for (auto& t : threads) t.join();
    for (auto& p : parts) {
        rep.cases_run += p.cases_run;
        for (auto& f : p.failures) rep.failures.push_back(std::move(f));
    }
}

// ---------------------------------------------------------------- suites

void check_involution_laws(const Multisegment& a, Report& rep) {
    Multisegment t = mwa_left(a);
    ++rep.cases_run;
    if (mwa_left(t) != a)
        fail(rep, format_multisegment(a), "(a^t)^t = a", format_multisegment(mwa_left(t)));
    if (mwa_right(a) != t)
        fail(rep, format_multisegment(a), format_multisegment(t) + " (left = right)",
             format_multisegment(mwa_right(a)));
    if (mwa_left(contragredient(a)) != contragredient(t))
        fail(rep, format_multisegment(a), "(~a)^t = ~(a^t)",
             format_multisegment(mwa_left(contragredient(a))));
    if (mwa_left(a).cardinality() != a.cardinality())
        fail(rep, format_multisegment(a), "cardinality conserved", "");
}

void suite_involution(const VerifyConfig& cfg, Report& rep) {
    for_each_multisegment(std::min(cfg.max_end, 5), 4,
                          [&](const Multisegment& a) { check_involution_laws(a, rep); });
    std::mt19937_64 rng(cfg.seed);
    for (long i = 0; i < cfg.trials; ++i)
        check_involution_laws(random_multisegment(rng, cfg.max_end, cfg.max_segments + 3), rep);
}

void suite_rectangle(const VerifyConfig& cfg, Report& rep) {
    int bound = std::max(8, cfg.max_end);
    for (int n = 1; n <= bound; ++n) {
        for (int d = 1; d <= bound; ++d) {
            ++rep.cases_run;
            if (mwa_left(a_nd(n, d)) != a_nd(d, n))
                fail(rep, "a(" + std::to_string(n) + "," + std::to_string(d) + ")",
                     format_multisegment(a_nd(d, n)), format_multisegment(mwa_left(a_nd(n, d))));
        }
    }
}

void check_length_bounds(const Multisegment& a, Report& rep) {
    ++rep.cases_run;
    std::map<Line, std::array<int, 4>> spans;  // min_e, max_e, min_b, max_b
    for (const auto& s : a) {
        auto it = spans.find(s.line);
        if (it == spans.end())
            spans.emplace(s.line, std::array{s.e, s.e, s.b, s.b});
        else {
            it->second[0] = std::min(it->second[0], s.e);
            it->second[1] = std::max(it->second[1], s.e);
            it->second[2] = std::min(it->second[2], s.b);
            it->second[3] = std::max(it->second[3], s.b);
        }
    }
    Multisegment t = mwa_left(a);
    for (const auto& s : t) {
        const auto& sp = spans.at(s.line);
        int m_ends = sp[1] - sp[0] + 1, m_begins = sp[3] - sp[2] + 1;
        if (s.length() > m_ends)
            fail(rep, format_multisegment(a),
                 "dual lengths <= " + std::to_string(m_ends) + " (ends window)",
                 "segment of length " + std::to_string(s.length()));
        if (s.length() > m_begins)
            fail(rep, format_multisegment(a),
                 "dual lengths <= " + std::to_string(m_begins) + " (beginnings window)",
                 "segment of length " + std::to_string(s.length()));
    }
}

void suite_length_bounds(const VerifyConfig& cfg, Report& rep) {
    for_each_multisegment(std::min(cfg.max_end, 5), 4,
                          [&](const Multisegment& a) { check_length_bounds(a, rep); });
    std::mt19937_64 rng(cfg.seed);
    for (long i = 0; i < cfg.trials; ++i)
        check_length_bounds(random_multisegment(rng, cfg.max_end, cfg.max_segments + 3), rep);
}

void suite_speh_cross_validation(const VerifyConfig& cfg, Report& rep) {
    auto grid = speh_grid(cfg.max_end);
    const std::size_t n = grid.size();
    // theorem equivalence on every ordered pair
    run_indexed(
        cfg, n * n,
        [&](std::size_t idx, Report& r) {
            const SpehParams& p = grid[idx / n];
            const SpehParams& q = grid[idx % n];
            ++r.cases_run;
            Verdict v71 = speh_reducible_thm71(p, q);
            Verdict v72 = speh_reducible_thm72(p, q);
            if (v71.status != v72.status)
                fail(r, quad_str(p) + " vs " + quad_str(q), "thm71 = thm72",
                     to_string(v71.status) + " vs " + to_string(v72.status));
        },
        rep);
    // RC+Badulescu decisiveness and agreement; verdicts are symmetric, so
    // unordered pairs suffice for the expensive oracle
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) pairs.emplace_back(i, j);
    run_indexed(
        cfg, pairs.size(),
        [&](std::size_t idx, Report& r) {
            const SpehParams& p = grid[pairs[idx].first];
            const SpehParams& q = grid[pairs[idx].second];
            ++r.cases_run;
            Multisegment m1 = speh_multisegment(p), m2 = speh_multisegment(q);
            // the joint certificate chain: dual non-additivity proves
            // reducibility; absent that, non-crossed pairs are irreducible,
            // and crossed ones go to the downset scan
            Verdict oracle = rc_check(m1, m2);
            if (oracle.status != Status::Reducible) {
                if (!is_crossed(m1, m2))
                    oracle = {Status::Irreducible, "not-crossed", ""};
                else
                    oracle = badulescu_check(m1, m2, cfg.budget);
            }
            Verdict v72 = speh_reducible_thm72(p, q);
            if (oracle.status == Status::Unknown)
                fail(r, quad_str(p) + " vs " + quad_str(q), "decisive oracle",
                     "Unknown (" + oracle.criterion + ")");
            else if (oracle.status != v72.status)
                fail(r, quad_str(p) + " vs " + quad_str(q), to_string(v72.status),
                     to_string(oracle.status) + " (" + oracle.criterion + ")");
        },
        rep);
}

void suite_mw_equivalence(const VerifyConfig& cfg, Report& rep) {
    std::vector<MWParams> js;
    for (int t2 = 0; t2 <= 6; ++t2)
        for (int a2 = 0; a2 <= 16; ++a2)
            for (int b2 = a2; b2 <= 16; b2 += 2) js.emplace_back(t2, a2, b2);
    const std::size_t n = js.size();
    run_indexed(
        cfg, n * n,
        [&](std::size_t idx, Report& r) {
            const MWParams& j1 = js[idx / n];
            const MWParams& j2 = js[idx % n];
            ++r.cases_run;
            bool linked = mw_linked(j1, j2);
            auto aligned = mw_aligned_speh_pair(j1, j2);
            std::ostringstream in;
            in << "J(" << j1.t2 << '/' << 2 << ',' << j1.a2 << '/' << 2 << ',' << j1.b2 << '/' << 2
               << ") vs J(" << j2.t2 << "/2," << j2.a2 << "/2," << j2.b2 << "/2)";
            if (!aligned) {
                if (linked) fail(r, in.str(), "not linked (non-integral difference)", "linked");
                return;
            }
            bool red =
                speh_reducible_thm72(aligned->first, aligned->second).status == Status::Reducible;
            if (linked != red)
                fail(r, in.str(), std::string("mw_linked = ") + (red ? "true" : "false"),
                     linked ? "true" : "false");
        },
        rep);
}

void suite_lnt_equivalence(const VerifyConfig& cfg, Report& rep) {
    auto grid = speh_grid(cfg.max_end);
    const std::size_t n = grid.size();
    run_indexed(
        cfg, n * n,
        [&](std::size_t idx, Report& r) {
            const SpehParams& p = grid[idx / n];
            const SpehParams& q = grid[idx % n];
            ++r.cases_run;
            Partition alpha(std::vector<int>(p.segment_count(), p.segment_length()));
            Partition beta(std::vector<int>(q.segment_count(), q.segment_length()));
            if (!(i_set_speh(p) == i_set(alpha, p.C)))
                fail(r, quad_str(p), "i_set_speh = i_set(constant partition)", "mismatch");
            Verdict hull_form = lnt_reducible(alpha, p.C, beta, q.C);
            Verdict foot_form = lnt_reducible_footnote(alpha, p.C, beta, q.C);
            Verdict v72 = speh_reducible_thm72(p, q);
            if (hull_form.status != v72.status)
                fail(r, quad_str(p) + " vs " + quad_str(q), "lnt = thm72",
                     to_string(hull_form.status) + " vs " + to_string(v72.status));
            if (hull_form.status != foot_form.status)
                fail(r, quad_str(p) + " vs " + quad_str(q), "hull form = footnote form",
                     to_string(hull_form.status) + " vs " + to_string(foot_form.status));
        },
        rep);
}

void suite_support_containment(const VerifyConfig& cfg, Report& rep) {
    auto grid = speh_grid(cfg.max_end);
    const std::size_t n = grid.size();
    // Lemma 6.2 on each quadruple: no strict-downset element c of the Speh
    // multisegment has c^t below its dual
    run_indexed(
        cfg, n,
        [&](std::size_t idx, Report& r) {
            const SpehParams& q = grid[idx];
            ++r.cases_run;
            Multisegment a2 = speh_multisegment(q);
            auto down = strict_downset(a2, cfg.budget);
            auto down_dual = strict_downset(mwa_left(a2), cfg.budget);
            for (const auto& c : down)
                if (down_dual.count(mwa_left(c)))
                    fail(r, quad_str(q) + " c=" + format_multisegment(c), "c^t not< a2^t",
                         "c^t < a2^t");
        },
        rep);
    // containment pairs: dual additivity (Lemma 6.1) and the certificate
    // verdict (Prop 6.3)
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (grid[i].A <= grid[j].A && grid[j].D <= grid[i].D) pairs.emplace_back(i, j);
    run_indexed(
        cfg, pairs.size(),
        [&](std::size_t idx, Report& r) {
            const SpehParams& p1 = grid[pairs[idx].first];
            const SpehParams& p2 = grid[pairs[idx].second];
            ++r.cases_run;
            Multisegment a1 = speh_multisegment(p1), a2 = speh_multisegment(p2);
            if (mwa_left(a1 + a2) != mwa_left(a1) + mwa_left(a2)) {
                fail(r, quad_str(p1) + " contains " + quad_str(p2), "(a1+a2)^t = a1^t + a2^t",
                     "dual additivity fails");
                return;
            }
            Verdict v = badulescu_check(a1, a2, cfg.budget);
            if (v.status != Status::Irreducible)
                fail(r, quad_str(p1) + " contains " + quad_str(p2), "Irreducible",
                     to_string(v.status) + " (" + v.criterion + ")");
        },
        rep);
}

void suite_contact_closed_form(const VerifyConfig& cfg, Report& rep) {
    auto grid = speh_grid(cfg.max_end);
    const std::size_t n = grid.size();
    run_indexed(
        cfg, n * n,
        [&](std::size_t idx, Report& r) {
            const SpehParams& p = grid[idx / n];
            const SpehParams& q = grid[idx % n];
            ++r.cases_run;
            bool closed = contact_speh(p, q);
            bool direct = is_contact(speh_multisegment(p), speh_multisegment(q));
            if (closed != direct)
                fail(r, quad_str(p) + " vs " + quad_str(q), direct ? "contact" : "no contact",
                     closed ? "contact" : "no contact");
            // with p's support preceding q's, contact reduces to the one
            // dashed-interval intersection
            bool linked_supports = p.A < q.A && p.D < q.D && q.A <= p.D + 1;
            if (linked_supports) {
                bool dashed = std::max(p.B + 1, q.A) <= std::min(p.D + 1, q.C);
                if (direct != dashed)
                    fail(r, quad_str(p) + " precedes " + quad_str(q),
                         direct ? "dashed intervals meet" : "dashed intervals disjoint",
                         dashed ? "meet" : "disjoint");
            }
        },
        rep);
}

void suite_shrink_closure(const VerifyConfig& cfg, Report& rep) {
    auto grid = speh_grid(cfg.max_end);
    const std::size_t n = grid.size();
    run_indexed(
        cfg, n * n,
        [&](std::size_t idx, Report& r) {
            const SpehParams& p1 = grid[idx / n];
            const SpehParams& p2 = grid[idx % n];
            if (speh_reducible_thm72(p1, p2).status != Status::Irreducible) return;
            if (p2.C + p2.D > p1.C + p1.D) return;
            if (p2.C + p2.D == p1.C + p1.D &&
                !(1 <= p1.D - p1.B && p1.D - p1.B <= p2.D - p2.B))
                return;
            if (p1.D - p1.B < 1) return;  // shrunken quadruple would be malformed
            ++r.cases_run;
            SpehParams shrunk(p1.line, p1.A, p1.B, p1.C - 1, p1.D - 1);
            if (speh_reducible_thm72(shrunk, p2).status != Status::Irreducible)
                fail(r, quad_str(p1) + " shrunk vs " + quad_str(p2), "Irreducible", "Reducible");
        },
        rep);
    // pairwise-irreducible triples keep dual additivity
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (long i = 0; i < cfg.trials; ++i) {
        const SpehParams& p1 = grid[pick(rng)];
        const SpehParams& p2 = grid[pick(rng)];
        const SpehParams& p3 = grid[pick(rng)];
        ++rep.cases_run;
        if (speh_reducible_thm72(p1, p2).status != Status::Irreducible ||
            speh_reducible_thm72(p1, p3).status != Status::Irreducible ||
            speh_reducible_thm72(p2, p3).status != Status::Irreducible)
            continue;
        Multisegment a1 = speh_multisegment(p1), a2 = speh_multisegment(p2),
                     a3 = speh_multisegment(p3);
        if (mwa_left(a1 + a2 + a3) != mwa_left(a1) + mwa_left(a2) + mwa_left(a3))
            fail(rep, quad_str(p1) + " + " + quad_str(p2) + " + " + quad_str(p3),
                 "(sum)^t = sum of duals", "dual additivity fails");
    }
}

void suite_blm_crossed(const VerifyConfig& cfg, Report& rep) {
    auto grid = speh_grid(cfg.max_end);
    const std::size_t n = grid.size();
    run_indexed(
        cfg, n * n,
        [&](std::size_t idx, Report& r) {
            const SpehParams& p = grid[idx / n];
            const SpehParams& q = grid[idx % n];
            ++r.cases_run;
            if (speh_reducible_thm72(p, q).status == Status::Reducible &&
                !is_crossed(speh_multisegment(p), speh_multisegment(q)))
                fail(r, quad_str(p) + " vs " + quad_str(q), "Reducible implies crossed",
                     "not crossed");
        },
        rep);
}

using SuiteFn = void (*)(const VerifyConfig&, Report&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r = {
        {"involution", suite_involution},
        {"rectangle-duality", suite_rectangle},
        {"length-bounds", suite_length_bounds},
        {"speh-cross-validation", suite_speh_cross_validation},
        {"mw-equivalence", suite_mw_equivalence},
        {"lnt-equivalence", suite_lnt_equivalence},
        {"support-containment", suite_support_containment},
        {"contact-closed-form", suite_contact_closed_form},
        {"shrink-closure", suite_shrink_closure},
        {"blm-crossed", suite_blm_crossed},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : registry()) n.push_back(name);
        return n;
    }();
    return names;
}

Report run_suite(const std::string& name, const VerifyConfig& cfg) {
    for (const auto& [n, fn] : registry()) {
        if (n == name) {
            Report rep;
            rep.suite = name;
            rep.config = cfg;
            auto t0 = std::chrono::steady_clock::now();
            fn(cfg, rep);
            rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                                .count();
            return rep;
        }
    }
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace multiseg
