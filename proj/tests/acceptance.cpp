// Acceptance run: one PASS / FAIL / SKIP line per criterion, exit status 1
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ppmine/engine.hpp"
#include "ppmine/miner.hpp"
#include "ppmine/oracle.hpp"
#include "ppmine/prefix_projection.hpp"
#include "ppmine/side_constraints.hpp"
#include "ppmine/verify.hpp"

using namespace ppmine;
namespace fs = std::filesystem;

namespace {

enum class Verdict { pass, fail, skip };

struct Outcome {
    Verdict verdict = Verdict::pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

SequenceDatabase symbolic(const std::string& text) {
    std::istringstream in(text);
    return load_symbolic(in);
}

// Collects failed checks with a short description.
struct Checker {
    std::vector<std::string> failures;
    std::size_t checks = 0;
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures.size() < 5) failures.push_back(what);
    }
    bool ok() const { return failures.empty(); }
    std::string summary() const {
        std::string s = std::to_string(checks) + " checks";
        for (const auto& f : failures) s += "; failed: " + f;
        return s;
    }
};

// ---------------------------------------------------------------------------
// A1: worked example on ABCBC, BABC, AB, BCD.

Outcome worked_example() {
    const auto t0 = Clock::now();
    Checker c;
    const auto db = symbolic("A B C B C\nB A B C\nA B\nB C D\n");
    const auto& dict = db.dictionary();
    const Value A = dict.lookup("A"), B = dict.lookup("B"), C = dict.lookup("C"), D = dict.lookup("D");

    c.expect(support(db, make_items(db, "A C")) == 2, "support(AC) = 2");

    const auto pa = project(db, initial_projection(db), make_items(db, "A"));
    c.expect(pa == PseudoProjection{{1, 2}, {2, 3}, {3, 2}}, "projection on A");

    const auto fa = frequent_items(db, pa, 2);
    c.expect(fa.items == std::vector<ItemId>{B, C}, "frequent items of SDB|A");

    SearchState s(db, {2, 5});
    const bool root = s.propagate_root() == Status::Continue;
    const bool assigned = root && s.assign(A) == Status::Continue;
    c.expect(assigned, "P1 = A propagates");
    if (assigned) {
        for (std::size_t pos : {2u, 3u}) {
            const auto& v = s.vars();
            c.expect(!v.contains(pos, A) && !v.contains(pos, D), "A, D removed from P" + std::to_string(pos));
            c.expect(v.contains(pos, B) && v.contains(pos, C) && v.contains(pos, v.end_marker()),
                     "B, C, end kept in P" + std::to_string(pos));
        }
    }
    const double secs = seconds_since(t0);
    c.expect(secs < 1.0, "runtime under 1 s");
    std::ostringstream os;
    os << c.summary() << ", " << secs * 1000 << " ms";
    return {c.ok() ? Verdict::pass : Verdict::fail, os.str()};
}

// ---------------------------------------------------------------------------
// A2 + A3: engine vs generate-and-test oracle over seeded random databases.

constexpr std::size_t kSeeds = 200;
constexpr RandomDbParams kSweep{0, 15, 8, 5};
constexpr Count kMaxMinsup = 5;

struct SweepResult {
    Outcome equivalence;
    Outcome prefix_closure;
};

SweepResult oracle_sweep() {
    const auto t0 = Clock::now();
    std::size_t comparisons = 0;
    std::size_t mismatches = 0;
    std::string first_mismatch;

    std::size_t audited = 0;
    std::size_t orphans = 0;
    std::string first_orphan;

    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
        RandomDbParams p = kSweep;
        p.seed = seed;
        const auto db = random_db(p);
        const auto scenarios = standard_scenarios(db, seed);
        for (Count minsup = 1; minsup <= kMaxMinsup; ++minsup) {
            for (const auto& s : scenarios) {
                ++comparisons;
                const auto out = verify_scenario(db, minsup, s);
                if (!out.equal && mismatches++ == 0) {
                    first_mismatch = "seed " + std::to_string(seed) + " minsup " + std::to_string(minsup) + " " +
                                     s.name + " (missing " + std::to_string(out.missing.size()) + ", extra " +
                                     std::to_string(out.extra.size()) + ")";
                }
            }

            // Anti-monotonicity of the frequency-only output.
            const auto freq = mine(db, engine_config(db, minsup, scenarios.front()));
            std::set<Pattern> emitted;
            for (const auto& mp : freq.patterns) emitted.insert(mp.items);
            for (const auto& p : emitted) {
                for (std::size_t k = 1; k < p.size(); ++k) {
                    ++audited;
                    if (!emitted.contains(Pattern(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k))) &&
                        orphans++ == 0) {
                        first_orphan = "seed " + std::to_string(seed) + " minsup " + std::to_string(minsup);
                    }
                }
            }
        }
    }
    const double secs = seconds_since(t0);

    SweepResult r;
    std::ostringstream a;
    a << kSeeds << " seeds x minsup 1.." << kMaxMinsup << " x scenarios = " << comparisons << " comparisons, "
      << mismatches << " mismatches, " << secs << " s";
    if (secs >= 60.0) a << " (over the 60 s budget)";
    if (mismatches) a << "; first: " << first_mismatch;
    r.equivalence = {mismatches == 0 && secs < 60.0 ? Verdict::pass : Verdict::fail, a.str()};

    std::ostringstream b;
    b << audited << " proper prefixes audited, " << orphans << " missing";
    if (orphans) b << "; first: " << first_orphan;
    r.prefix_closure = {orphans == 0 && audited > 0 ? Verdict::pass : Verdict::fail, b.str()};
    return r;
}

// ---------------------------------------------------------------------------
// A4: randomized push/restore against replay from scratch.

std::unique_ptr<SearchState> fresh_state(const SequenceDatabase& db, const MiningConfig& cfg) {
    auto s = make_search(db, cfg);
    s->propagate_root();
    return s;
}

Outcome backtracking() {
    constexpr std::size_t kEpisodes = 1200;
    std::mt19937_64 rng(2024);
    std::size_t steps = 0;
    std::size_t restores = 0;
    std::size_t bad = 0;
    std::string first_bad;

    for (std::size_t ep = 0; ep < kEpisodes; ++ep) {
        const auto db = random_db({ep + 1, 12, 9, 5});
        MiningConfig cfg;
        cfg.minsup = 1 + static_cast<Count>(rng() % 3);
        // Side filters take part in some episodes so their state is undone too.
        if (ep % 3 == 1) cfg.among = {{static_cast<ItemId>(rng() % db.num_items()), 1, 2}};
        if (ep % 3 == 2) {
            cfg.min_size = 2;
            cfg.regex = std::make_shared<const Dfa>(compile_regex(random_regex(rng, db.dictionary(), 3), db.dictionary()));
        }
        auto s = fresh_state(db, cfg);
        if (s->root_failed()) continue;

        std::vector<Value> path;
        std::vector<std::uint64_t> snapshots{s->fingerprint()};
        const std::size_t moves = 20 + rng() % 40;
        for (std::size_t mv = 0; mv < moves; ++mv) {
            const bool can_push = s->depth() < s->ell();
            if (can_push && (s->depth() == 0 || rng() % 3 != 0)) {
                const auto values = s->vars().values(s->depth() + 1);
                const Value v = values[rng() % values.size()];
                ++steps;
                if (s->assign(v) == Status::Continue) {
                    path.push_back(v);
                    snapshots.push_back(s->fingerprint());
                } else {
                    s->restore(path.size());
                }
            } else if (s->depth() > 0) {
                const std::size_t to = rng() % s->depth();
                s->restore(to);
                path.resize(to);
                snapshots.resize(to + 1);
                ++restores;
            }

            if (s->fingerprint() != snapshots.back() && bad++ == 0) {
                first_bad = "episode " + std::to_string(ep) + " move " + std::to_string(mv) + " (snapshot)";
            }
        }

        // Replay the surviving prefix on a new state and compare.
        auto replay = fresh_state(db, cfg);
        bool replay_ok = true;
        for (Value v : path) replay_ok = replay_ok && replay->assign(v) == Status::Continue;
        if ((!replay_ok || replay->fingerprint() != s->fingerprint()) && bad++ == 0) {
            first_bad = "episode " + std::to_string(ep) + " (replay)";
        }
        // A full restore must give back the root state.
        s->restore(0);
        if (s->fingerprint() != snapshots.front() && bad++ == 0) {
            first_bad = "episode " + std::to_string(ep) + " (root)";
        }
    }
    std::ostringstream os;
    os << kEpisodes << " episodes, " << steps << " assignments, " << restores << " restores, " << bad
       << " divergences";
    if (bad) os << "; first: " << first_bad;
    return {bad == 0 ? Verdict::pass : Verdict::fail, os.str()};
}

// ---------------------------------------------------------------------------
// A5: regular constraint vs NFA simulation on every database of one or two
// sequences over {A, B, C} with length <= 4.

const std::vector<std::string> kRegexCoverage = {
    "A",                    // literal
    ".",                    // any item
    "A B",                  // concatenation
    "A | C",                // alternation
    "B *",                  // star
    "A +",                  // plus
    "A ? B",                // optional
    "( A | B ) C",          // grouping
    ". * C",                // wildcard loop
    "A . * A",              // same item at both ends
    "( A B ) + | C ?",      // nested postfix inside alternation
    "( A | B * ) ( C | . ) ?",
    "A * B ( B | C )",
    "( . . ) *",            // even lengths
    "C C C C",              // longest allowed word
    "C C C C C",            // longer than any pattern: empty language
};

Outcome regular_exhaustive() {
    const auto t0 = Clock::now();
    ItemDictionary dict;
    for (const char* s : {"A", "B", "C"}) dict.intern(s);

    std::vector<ItemSequence> seqs;
    for (std::size_t len = 1; len <= 4; ++len) {
        std::size_t total = 1;
        for (std::size_t k = 0; k < len; ++k) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            ItemSequence s;
            for (std::size_t k = 0, c = code; k < len; ++k, c /= 3) s.push_back(static_cast<ItemId>(c % 3));
            seqs.push_back(std::move(s));
        }
    }

    std::vector<std::shared_ptr<const Dfa>> dfas;
    std::vector<Nfa> nfas;
    for (const auto& expr : kRegexCoverage) {
        dfas.push_back(std::make_shared<const Dfa>(compile_regex(expr, dict)));
        nfas.push_back(build_nfa(parse_regex(expr, dict)));
    }

    std::size_t databases = 0;
    std::size_t comparisons = 0;
    std::size_t mismatches = 0;
    std::size_t nonempty = 0;
    std::string first;

    auto check_db = [&](const SequenceDatabase& db) {
        ++databases;
        for (Count minsup = 1; minsup <= db.size(); ++minsup) {
            OracleConfig ocfg;
            ocfg.max_pattern_length = db.max_length();
            ocfg.minsup = minsup;
            const auto frequent = enumerate_frequent(db, ocfg);
            for (std::size_t r = 0; r < dfas.size(); ++r) {
                PatternSupports want;
                for (const auto& [p, c] : frequent) {
                    if (nfas[r].accepts(p)) want.emplace(p, c);
                }
                MiningConfig cfg;
                cfg.minsup = minsup;
                cfg.regex = dfas[r];
                PatternSupports got;
                for (const auto& mp : mine(db, cfg).patterns) got.emplace(mp.items, mp.support);
                ++comparisons;
                if (!want.empty()) ++nonempty;
                if (got != want && mismatches++ == 0) {
                    std::ostringstream os;
                    write_symbolic(os, db);
                    first = "regex '" + kRegexCoverage[r] + "' minsup " + std::to_string(minsup) + " on " + os.str();
                }
            }
        }
    };

    for (std::size_t i = 0; i < seqs.size(); ++i) {
        check_db(SequenceDatabase({seqs[i]}, dict));
        for (std::size_t j = i; j < seqs.size(); ++j) check_db(SequenceDatabase({seqs[i], seqs[j]}, dict));
    }
    std::ostringstream os;
    os << kRegexCoverage.size() << " regexes x " << databases << " databases = " << comparisons
       << " comparisons (" << nonempty << " with solutions), " << mismatches << " mismatches, "
       << seconds_since(t0) << " s";
    if (mismatches) os << "; first: " << first;
    return {mismatches == 0 ? Verdict::pass : Verdict::fail, os.str()};
}

// ---------------------------------------------------------------------------
// A6: published pattern counts on the public SPMF datasets.

struct DatasetRun {
    std::string stem; // matched case-insensitively against file stems
    std::string minsup;
    std::size_t expected;
    bool constrained = false;
    double budget_s = 0; // 0: no time limit
};

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::optional<fs::path> find_dataset(const fs::path& dir, const std::string& stem) {
    for (const auto& e : fs::directory_iterator(dir)) {
        if (!e.is_regular_file()) continue;
        if (lower(e.path().stem().string()).starts_with(stem)) return e.path();
    }
    return std::nullopt;
}

Outcome datasets() {
    const char* env = std::getenv("PPMINE_DATA_DIR");
    if (!env || !fs::is_directory(env)) {
        return {Verdict::skip, "set PPMINE_DATA_DIR to a directory holding the SPMF files (FIFA, BIBLE, "
                               "Kosarak, Leviathan, PubMed)"};
    }
    const std::vector<DatasetRun> runs = {
        {"fifa", "20%", 938, false, 600},   {"bible", "10%", 174},   {"kosarak", "1%", 384},
        {"leviathan", "10%", 651},          {"pubmed", "5%", 2312},  {"pubmed", "5%", 279, true},
    };
    std::vector<std::string> notes;
    std::size_t ran = 0;
    bool ok = true;
    for (const auto& run : runs) {
        const auto path = find_dataset(env, run.stem);
        if (!path) {
            notes.push_back(run.stem + " missing");
            continue;
        }
        const auto db = load_file(path->string(), InputFormat::spmf);
        MiningConfig cfg;
        cfg.minsup = resolve_minsup(run.minsup, db.size());
        if (run.constrained) {
            cfg.min_size = 3;
            const auto ell = static_cast<Count>(db.max_length());
            cfg.among = {{db.dictionary().lookup("GENE"), 1, ell}, {db.dictionary().lookup("DISEASE"), 1, ell}};
        }
        const auto t0 = Clock::now();
        const auto result = mine_parallel(db, cfg);
        const double secs = seconds_since(t0);
        ++ran;
        const bool good = result.patterns.size() == run.expected && (run.budget_s == 0 || secs < run.budget_s);
        ok = ok && good;
        std::ostringstream os;
        os << run.stem << (run.constrained ? "+constraints" : "") << " " << run.minsup << ": "
           << result.patterns.size() << "/" << run.expected << " in " << secs << " s";
        notes.push_back(os.str());
    }
    std::string detail;
    for (const auto& n : notes) detail += (detail.empty() ? "" : "; ") + n;
    if (ran == 0) return {Verdict::skip, detail};
    return {ok && ran == runs.size() ? Verdict::pass : Verdict::fail, detail};
}

// ---------------------------------------------------------------------------
// A7: per-call work of the Prefix-Projection filter is linear in
// (projected items + d + ell * d), without drift as ell and m double.

struct WorkSample {
    std::size_t m, len, d;
    double max_ratio = 0;
    double mean_ratio = 0;
    std::size_t calls = 0;
};

WorkSample measure_work(std::size_t m, std::size_t len, std::size_t d) {
    WorkSample w{m, len, d};
    double sum = 0;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const auto db = random_db({seed, m, len, d});
        SearchState s(db, {resolve_minsup("10%", db.size()), std::nullopt});
        std::vector<PrefixProjectionWork> log;
        s.prefix_projection().set_work_log(&log);
        // Node budget keeps large instances fast; the per-call bound does not
        // depend on how much of the tree is explored.
        std::size_t emitted = 0;
        struct Stop {};
        try {
            s.solve_all([&](const Pattern&, Count) {
                if (++emitted > 4000) throw Stop{};
            });
        } catch (const Stop&) {
        }
        const double ell = static_cast<double>(s.ell());
        const double dd = static_cast<double>(db.num_items());
        for (const auto& call : log) {
            const double bound = static_cast<double>(call.projected_items) + dd + ell * dd;
            const double ratio = static_cast<double>(call.total()) / bound;
            w.max_ratio = std::max(w.max_ratio, ratio);
            sum += ratio;
            ++w.calls;
        }
    }
    w.mean_ratio = w.calls ? sum / static_cast<double>(w.calls) : 0;
    return w;
}

Outcome complexity() {
    constexpr std::size_t d = 12;
    std::vector<WorkSample> samples;
    for (std::size_t m : {200u, 400u, 800u, 1600u}) samples.push_back(measure_work(m, 10, d));
    for (std::size_t len : {20u, 40u, 80u}) samples.push_back(measure_work(200, len, d));

    // Fit the constant on the smallest instance; later instances may exceed it
    // by at most 10%, and successive doublings may not grow the ratio by more
    // than 10% either.
    const double c = samples.front().max_ratio;
    bool ok = c > 0;
    std::ostringstream os;
    os << "fitted c=" << c;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const auto& s = samples[k];
        ok = ok && s.calls > 0 && s.max_ratio <= 1.1 * c;
        // Index 4 starts the length series, which doubles from the base instance.
        const std::size_t prev = k == 4 ? 0 : k - 1;
        if (k > 0) ok = ok && s.max_ratio <= 1.1 * samples[prev].max_ratio;
        os << "; m=" << s.m << " len=" << s.len << ": calls=" << s.calls << " max=" << s.max_ratio
           << " mean=" << s.mean_ratio;
    }
    return {ok ? Verdict::pass : Verdict::fail, os.str()};
}

const char* label(Verdict v) {
    switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::skip: return "SKIP";
    }
    return "?";
}

} // namespace

int main() {
    bool failed = false;
    auto report = [&](const char* id, const char* title, const Outcome& o) {
        std::cout << id << ' ' << label(o.verdict) << "  " << title << ": " << o.detail << std::endl;
        failed = failed || o.verdict == Verdict::fail;
    };
    auto guarded = [](auto&& f) -> Outcome {
        try {
            return f();
        } catch (const std::exception& e) {
            return {Verdict::fail, std::string("exception: ") + e.what()};
        }
    };

    report("A1", "worked example", guarded(worked_example));
    SweepResult sweep;
    try {
        sweep = oracle_sweep();
    } catch (const std::exception& e) {
        sweep.equivalence = sweep.prefix_closure = {Verdict::fail, std::string("exception: ") + e.what()};
    }
    report("A2", "oracle equivalence", sweep.equivalence);
    report("A3", "anti-monotonicity", sweep.prefix_closure);
    report("A4", "backtracking integrity", guarded(backtracking));
    report("A5", "regular constraint exhaustive", guarded(regular_exhaustive));
    report("A6", "dataset pattern counts", guarded(datasets));
    report("A7", "filter work bound", guarded(complexity));
    return failed ? 1 : 0;
}
