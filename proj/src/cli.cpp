#include "ppmine/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <locale>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ppmine/error.hpp"
#include "ppmine/miner.hpp"
#include "ppmine/verify.hpp"

namespace ppmine::cli {

namespace {

// Oracle scale: larger instances make the generate-and-test oracle too slow.
constexpr std::size_t kVerifyMaxSequences = 25;
constexpr std::size_t kVerifyMaxLength = 10;
constexpr std::size_t kVerifyMaxItems = 6;

struct Request {
    std::string input;
    std::string format = "spmf";
    std::string minsup;
    std::size_t ell = 0;
    std::size_t min_size = 0;
    std::vector<std::string> require;
    std::vector<std::string> exclude;
    std::string regex;
    std::string output = "text";
    int threads = 1;
};

void add_constraint_options(CLI::App& app, Request& r) {
    app.add_option("--format", r.format, "Input format")->check(CLI::IsMember({"spmf", "symbolic"}));
    app.add_option("--min-size", r.min_size, "Minimum number of items per pattern");
    app.add_option("--require", r.require, "Item that must occur in every pattern (repeatable)");
    app.add_option("--exclude", r.exclude, "Item that must not occur in any pattern (repeatable)");
    app.add_option("--regex", r.regex, "Regular expression over item names");
}

SequenceDatabase load(const Request& r) {
    return load_file(r.input, r.format == "symbolic" ? InputFormat::symbolic : InputFormat::spmf);
}

MiningConfig make_config(const SequenceDatabase& db, const Request& r, Count minsup) {
    MiningConfig cfg;
    cfg.minsup = minsup;
    if (r.ell > 0) cfg.ell = r.ell;
    if (r.min_size > 0) cfg.min_size = r.min_size;
    const std::size_t ell = r.ell > 0 ? r.ell : db.max_length();
    for (const auto& name : r.require) {
        cfg.among.push_back({db.dictionary().lookup(name), 1, static_cast<Count>(ell)});
    }
    for (const auto& name : r.exclude) cfg.among.push_back({db.dictionary().lookup(name), 0, 0});
    if (!r.regex.empty()) cfg.regex = std::make_shared<const Dfa>(compile_regex(r.regex, db.dictionary()));
    return cfg;
}

MiningResult run_miner(const SequenceDatabase& db, const MiningConfig& cfg, int threads) {
    return threads == 1 ? mine(db, cfg) : mine_parallel(db, cfg, threads);
}

std::string join_names(const ItemDictionary& dict, const Pattern& p, char sep = ' ') {
    std::string s;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k) s += sep;
        s += dict.display(p[k]);
    }
    return s;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

std::string millis(const MiningStats& s) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::fixed << std::setprecision(3) << s.elapsed.count();
    return os.str();
}

void print_summary(std::ostream& os, std::size_t patterns, Count minsup, const MiningStats& s) {
    os << "#PATTERNS=" << patterns << " #MINSUP=" << minsup << " #NODES=" << s.nodes
       << " #FILTER_CALLS=" << s.filter_calls << " #REMOVALS=" << s.value_removals
       << " #FAILURES=" << s.failures << " #TIME_MS=" << millis(s) << '\n';
}

int cmd_mine(const Request& r, std::ostream& out, std::ostream& err) {
    const auto db = load(r);
    const Count minsup = resolve_minsup(r.minsup, db.size());
    const auto result = run_miner(db, make_config(db, r, minsup), r.threads);
    const auto& dict = db.dictionary();

    if (r.output == "text") {
        for (const auto& mp : result.patterns) out << join_names(dict, mp.items) << " #SUP=" << mp.support << '\n';
        print_summary(out, result.patterns.size(), minsup, result.stats);
    } else if (r.output == "csv") {
        out << "pattern,support\n";
        for (const auto& mp : result.patterns) out << csv_field(join_names(dict, mp.items)) << ',' << mp.support << '\n';
        print_summary(err, result.patterns.size(), minsup, result.stats);
    } else {
        for (const auto& mp : result.patterns) {
            nlohmann::json line;
            line["pattern"] = nlohmann::json::array();
            for (ItemId a : mp.items) line["pattern"].push_back(dict.display(a));
            line["support"] = mp.support;
            out << line.dump() << '\n';
        }
        print_summary(err, result.patterns.size(), minsup, result.stats);
    }
    return kSuccess;
}

void check_oracle_scale(std::size_t m, std::size_t len, std::size_t d) {
    if (m > kVerifyMaxSequences || len > kVerifyMaxLength || d > kVerifyMaxItems) {
        std::ostringstream os;
        os << "instance exceeds oracle scale (sequences " << m << "/" << kVerifyMaxSequences << ", length "
           << len << "/" << kVerifyMaxLength << ", items " << d << "/" << kVerifyMaxItems << ")";
        throw ParameterError(os.str());
    }
}

std::string describe(const ItemDictionary& dict, const std::vector<Pattern>& ps) {
    std::string s;
    for (const auto& p : ps) s += " <" + join_names(dict, p) + ">";
    return s;
}

struct SweepOptions {
    std::size_t seeds = 0;
    std::size_t m = 15;
    std::size_t len = 8;
    std::size_t d = 5;
    Count max_minsup = 5;
};

int cmd_verify(const Request& r, const SweepOptions& sweep, bool inject_fault, std::ostream& out) {
    if (sweep.seeds > 0) {
        check_oracle_scale(sweep.m, sweep.len, sweep.d);
        std::size_t passed = 0;
        for (std::size_t seed = 1; seed <= sweep.seeds; ++seed) {
            const auto db = random_db({seed, sweep.m, sweep.len, sweep.d});
            const auto scenarios = standard_scenarios(db, seed);
            std::string failure;
            std::size_t checks = 0;
            for (Count minsup = 1; minsup <= sweep.max_minsup && failure.empty(); ++minsup) {
                for (const auto& s : scenarios) {
                    ++checks;
                    if (!verify_scenario(db, minsup, s, inject_fault).equal) {
                        failure = s.name + " minsup=" + std::to_string(minsup);
                        break;
                    }
                }
            }
            if (failure.empty()) {
                ++passed;
                out << "seed=" << seed << " checks=" << checks << " PASS\n";
            } else {
                out << "seed=" << seed << " checks=" << checks << " FAIL " << failure << '\n';
            }
        }
        out << "SWEEP " << passed << "/" << sweep.seeds << " seeds passed\n";
        return passed == sweep.seeds ? kSuccess : kMismatch;
    }

    if (r.input.empty()) throw ParameterError("verify needs an input file or --sweep");
    const auto db = load(r);
    check_oracle_scale(db.size(), db.max_length(), db.num_items());
    const Count minsup = resolve_minsup(r.minsup, db.size());
    Scenario s{"request", {}, r.require, r.exclude, r.regex};
    if (r.min_size > 0) s.min_size = r.min_size;
    for (const auto& name : r.require) db.dictionary().lookup(name);
    for (const auto& name : r.exclude) db.dictionary().lookup(name);

    const auto outcome = verify_scenario(db, minsup, s, inject_fault);
    if (outcome.equal) {
        out << "MATCH (" << outcome.oracle_patterns << " patterns)\n";
        return kSuccess;
    }
    out << "MISMATCH (engine " << outcome.engine_patterns << ", oracle " << outcome.oracle_patterns << ")\n";
    if (!outcome.missing.empty()) out << "missing:" << describe(db.dictionary(), outcome.missing) << '\n';
    if (!outcome.extra.empty()) out << "extra:" << describe(db.dictionary(), outcome.extra) << '\n';
    return kMismatch;
}

int cmd_bench(const Request& r, const std::vector<std::string>& minsups, std::size_t repeats, std::ostream& out) {
    if (minsups.empty()) throw ParameterError("bench needs at least one minsup");
    if (repeats < 1) throw ParameterError("repeats must be >= 1");
    const auto db = load(r);
    const std::string dataset = std::filesystem::path(r.input).stem().string();

    std::vector<std::pair<std::string, Count>> resolved;
    for (const auto& text : minsups) resolved.emplace_back(text, resolve_minsup(text, db.size()));

    out << "dataset,minsup,patterns,nodes,filter_calls,removals,millis\n";
    for (const auto& [text, minsup] : resolved) {
        const auto cfg = make_config(db, r, minsup);
        for (std::size_t rep = 0; rep < repeats; ++rep) {
            const auto result = run_miner(db, cfg, r.threads);
            out << csv_field(dataset) << ',' << csv_field(text) << ',' << result.patterns.size() << ','
                << result.stats.nodes << ',' << result.stats.filter_calls << ',' << result.stats.value_removals
                << ',' << millis(result.stats) << '\n';
            out.flush();
        }
    }
    return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Constraint-based sequential pattern mining with the Prefix-Projection filter", "ppmine"};
    app.require_subcommand(1);

    Request req;
    SweepOptions sweep;
    bool inject_fault = false;
    std::vector<std::string> minsups;
    std::size_t repeats = 1;

    auto* mine_cmd = app.add_subcommand("mine", "Mine all patterns satisfying the constraints");
    mine_cmd->add_option("input", req.input, "Sequence database file")->required();
    mine_cmd->add_option("--minsup", req.minsup, "Absolute count or percentage such as 5%")->required();
    mine_cmd->add_option("--ell", req.ell, "Pattern capacity (default: longest sequence)");
    mine_cmd->add_option("--output", req.output, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    mine_cmd->add_option("--threads", req.threads, "Worker threads (1 = serial kernel, 0 = OpenMP default)");
    add_constraint_options(*mine_cmd, req);

    auto* verify_cmd = app.add_subcommand("verify", "Compare the engine with the brute-force oracle");
    verify_cmd->add_option("input", req.input, "Sequence database file");
    verify_cmd->add_option("--minsup", req.minsup, "Absolute count or percentage");
    verify_cmd->add_option("--sweep", sweep.seeds, "Random seed sweep over seeds 1..N");
    verify_cmd->add_option("--sweep-m", sweep.m, "Sequences per random database");
    verify_cmd->add_option("--sweep-len", sweep.len, "Maximum random sequence length");
    verify_cmd->add_option("--sweep-d", sweep.d, "Random alphabet size");
    verify_cmd->add_option("--sweep-max-minsup", sweep.max_minsup, "Sweep minsup over 1..N");
    verify_cmd->add_flag("--inject-fault", inject_fault, "Drop one engine pattern (harness self-test)")->group("");
    add_constraint_options(*verify_cmd, req);

    auto* bench_cmd = app.add_subcommand("bench", "Time mining runs and print CSV");
    bench_cmd->add_option("input", req.input, "Sequence database file")->required();
    bench_cmd->add_option("--minsup", minsups, "Comma-separated minsup list")->required()->delimiter(',');
    bench_cmd->add_option("--repeats", repeats, "Runs per minsup");
    bench_cmd->add_option("--threads", req.threads, "Worker threads (1 = serial kernel)");
    add_constraint_options(*bench_cmd, req);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (*mine_cmd) {
            if (req.minsup.empty()) throw ParameterError("--minsup is required");
            return cmd_mine(req, out, err);
        }
        if (*verify_cmd) {
            if (sweep.seeds == 0 && req.minsup.empty()) throw ParameterError("--minsup is required");
            return cmd_verify(req, sweep, inject_fault, out);
        }
        return cmd_bench(req, minsups, repeats, out);
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const RegexSyntaxError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const UnknownItemError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

} // namespace ppmine::cli
