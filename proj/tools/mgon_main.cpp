// mgon: command-line front end for the m-gonal numeration system.
//
// Subcommands: seq, decompose, dist, gaps, longest, verify.
// CSV goes to stdout (diagnostics to stderr); --json switches to JSON.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mgon/decomposition.hpp"
#include "mgon/experiments.hpp"
#include "mgon/gap_measures.hpp"
#include "mgon/longest_run.hpp"
#include "mgon/oracle.hpp"
#include "mgon/sequence.hpp"
#include "mgon/summand_counts.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace mgon;

constexpr int kSchemaVersion = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalOpts {
    bool json_out = false;
    bool schema_banner = false;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

void emit(const GlobalOpts& g, const std::string& command,
          const std::vector<std::string>& columns,
          const std::vector<std::vector<std::string>>& rows,
          const std::vector<std::pair<std::string, std::string>>& summary) {
    if (g.json_out) {
        json out;
        out["command"] = command;
        if (g.schema_banner) out["schema_version"] = kSchemaVersion;
        json jrows = json::array();
        for (const auto& row : rows) {
            json obj;
            for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = row[i];
            jrows.push_back(std::move(obj));
        }
        out["rows"] = std::move(jrows);
        if (!summary.empty()) {
            json s;
            for (const auto& [k, v] : summary) s[k] = v;
            out["summary"] = std::move(s);
        }
        std::cout << out.dump() << "\n";
        return;
    }
    std::ostringstream os;
    if (g.schema_banner) os << "# schema=" << kSchemaVersion << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
        os << columns[i] << (i + 1 < columns.size() ? "," : "");
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << row[i] << (i + 1 < row.size() ? "," : "");
        os << "\n";
    }
    if (!summary.empty()) {
        os << "#";
        for (const auto& [k, v] : summary) os << " " << k << "=" << v;
        os << "\n";
    }
    std::cout << os.str();
}

std::string join_ints(const std::vector<SeqIdx>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(xs[i]);
    }
    return s;
}

// ---- seq ----------------------------------------------------------------

int cmd_seq(const GlobalOpts& g, int m, std::int64_t count) {
    MGonParams p(m);
    auto terms = sequence_prefix(p, count);
    std::vector<std::vector<std::string>> rows;
    for (std::int64_t n = 0; n < count; ++n)
        rows.push_back({std::to_string(n), std::to_string(p.bin_of(n)),
                        to_string(terms[static_cast<std::size_t>(n)])});
    emit(g, "seq", {"n", "bin", "a_n"}, rows, {{"m", std::to_string(m)}});
    return 0;
}

// ---- decompose ----------------------------------------------------------

int cmd_decompose(const GlobalOpts& g, int m, const std::vector<std::string>& literals) {
    MGonParams p(m);
    std::vector<std::vector<std::string>> rows;
    for (const auto& lit : literals) {
        BigInt z = parse_bigint(lit);
        if (sgn(z) < 0) throw UsageError("z must be non-negative: " + lit);
        Decomposition d = decompose(p, z);
        auto values = summand_values(p, d);
        std::vector<SeqIdx> bins;
        for (SeqIdx idx : d.indices) bins.push_back(p.bin_of(idx));
        std::string value_list;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) value_list += " ";
            value_list += to_string(values[i]);
        }
        rows.push_back({to_string(z), std::to_string(d.indices.size()),
                        join_ints(d.indices), value_list, join_ints(bins),
                        join_ints(gaps_of(d)), to_string(recompose(p, d))});
    }
    emit(g, "decompose", {"z", "summands", "indices", "values", "bins", "gaps", "sum"},
         rows, {{"m", std::to_string(m)}});
    return 0;
}

// ---- dist ---------------------------------------------------------------

int cmd_dist_exact(const GlobalOpts& g, int m, std::int64_t n) {
    auto row = pnk_row_recursive(m, n);
    auto moments = exact_moments(m, n);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < row.size(); ++k)
        rows.push_back({std::to_string(k), to_string(row[k])});
    emit(g, "dist", {"k", "p_nk"}, rows,
         {{"m", std::to_string(m)},
          {"n", std::to_string(n)},
          {"interval_size", to_string(interval_size(MGonParams(m), n))},
          {"mean", to_string(moments.mean)},
          {"mean_decimal", fmt(to_double(moments.mean))},
          {"variance", to_string(moments.variance)},
          {"variance_decimal", fmt(to_double(moments.variance))}});
    return 0;
}

int cmd_dist_sampled(const GlobalOpts& g, int m, std::int64_t n, std::uint64_t samples) {
    mc::SamplerConfig cfg{m, n, mc::Interval::full, samples, g.seed, g.threads};
    auto r = mc::run_summand_experiment(cfg);
    std::vector<std::vector<std::string>> rows;
    for (auto [k, count] : r.histogram)
        rows.push_back({std::to_string(k), std::to_string(count)});
    emit(g, "dist", {"k", "count"}, rows,
         {{"m", std::to_string(m)},
          {"n", std::to_string(n)},
          {"samples", std::to_string(samples)},
          {"seed", std::to_string(g.seed)},
          {"threads", std::to_string(g.threads)},
          {"sample_mean", fmt(r.sample_mean)},
          {"sample_variance", fmt(r.sample_variance)},
          {"skewness", fmt(r.skewness)},
          {"excess_kurtosis", fmt(r.excess_kurtosis)},
          {"ks_normal", fmt(r.ks_statistic)},
          {"predicted_mean", fmt(r.predicted_mean)},
          {"predicted_variance", fmt(r.predicted_variance)}});
    return 0;
}

// ---- gaps ---------------------------------------------------------------

int cmd_gaps(const GlobalOpts& g, int m, const std::string& mode,
             std::optional<std::int64_t> n, std::int64_t gmax, std::uint64_t samples) {
    std::vector<std::vector<std::string>> rows;
    if (mode == "limit") {
        auto table = gap_table_limit(m, gmax);
        for (const auto& e : table.entries)
            rows.push_back({std::to_string(e.g), std::to_string(e.alpha),
                            std::to_string(e.beta), fmt(to_double(e.probability))});
        emit(g, "gaps", {"g", "alpha", "beta", "probability"}, rows,
             {{"m", std::to_string(m)}, {"mode", "limit"}});
        return 0;
    }
    if (mode == "exact") {
        if (!n) throw UsageError("--mode exact requires --n");
        auto table = gap_table_finite(m, *n, gmax, GapTotal::census);
        for (const auto& e : table.entries)
            rows.push_back({std::to_string(e.g), std::to_string(e.alpha),
                            std::to_string(e.beta), fmt(to_double(e.probability))});
        emit(g, "gaps", {"g", "alpha", "beta", "probability"}, rows,
             {{"m", std::to_string(m)},
              {"mode", "exact"},
              {"n", std::to_string(*n)},
              {"total_gaps", to_string(gap_total_census(m, *n))},
              {"convention", "census"}});
        return 0;
    }
    if (mode == "mc") {
        if (!n) throw UsageError("--mode mc requires --n");
        mc::SamplerConfig cfg{m, *n, mc::Interval::full, samples, g.seed, g.threads};
        auto r = mc::run_gap_experiment(cfg);
        std::vector<double> empirical(static_cast<std::size_t>(gmax) + 1, 0.0);
        for (auto [gap, count] : r.histogram)
            if (gap <= gmax)
                empirical[static_cast<std::size_t>(gap)] =
                    static_cast<double>(count) / static_cast<double>(r.histogram_total);
        for (std::int64_t gap = 1; gap <= gmax; ++gap) {
            auto [alpha, beta] = split_gap(m, gap);
            rows.push_back({std::to_string(gap), std::to_string(alpha),
                            std::to_string(beta),
                            fmt(to_double(gap_prob_limit(m, gap))),
                            fmt(empirical[static_cast<std::size_t>(gap)])});
        }
        emit(g, "gaps", {"g", "alpha", "beta", "probability", "empirical"}, rows,
             {{"m", std::to_string(m)},
              {"mode", "mc"},
              {"n", std::to_string(*n)},
              {"samples", std::to_string(samples)},
              {"seed", std::to_string(g.seed)},
              {"threads", std::to_string(g.threads)},
              {"total_gaps", std::to_string(r.histogram_total)},
              {"ks_vs_limit", fmt(r.ks_statistic)}});
        return 0;
    }
    throw UsageError("unknown gaps mode: " + mode);
}

// ---- longest ------------------------------------------------------------

int cmd_longest(const GlobalOpts& g, int m, std::int64_t n, std::uint64_t samples) {
    if (n < 2 * m) throw UsageError("longest requires n >= 2m");
    mc::SamplerConfig cfg{m, n, mc::Interval::bracket, samples, g.seed, g.threads};
    auto r = mc::run_longest_gap_experiment(cfg);
    std::vector<std::vector<std::string>> rows;
    rows.push_back({std::to_string(m), std::to_string(n), std::to_string(samples),
                    std::to_string(g.seed), std::to_string(g.threads),
                    fmt(r.sample_mean), fmt(r.sample_variance), fmt(r.predicted_mean),
                    fmt(r.schilling_refined), fmt(r.schilling_adjusted),
                    fmt(r.sample_mean - r.predicted_mean)});
    emit(g, "longest",
         {"m", "n", "samples", "seed", "threads", "mean", "variance", "main_term",
          "schilling_refined", "schilling_adjusted", "offset"},
         rows, {});
    return 0;
}

// ---- verify -------------------------------------------------------------

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

int cmd_verify(const GlobalOpts& g, int m, std::int64_t bins, bool deep) {
    MGonParams p(m);
    std::vector<Check> checks;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        checks.push_back({name, pass, detail});
    };

    oracle::EnumerationCensus census;
    bool enumerated = false;
    try {
        census = oracle::enumerate_all(
            m, bins, oracle::CensusOptions{.check_decompose = true, .joint_census = true});
        enumerated = true;
        add("uniqueness", true,
            std::to_string(census.interval_size) + " values each found exactly once");
        add("completeness", true, "sums cover [0; a_{mn+1}) with no holes");
        add("decompose_agrees", true, "digit decoder matches every enumerated index list");
    } catch (const std::exception& e) {
        add("uniqueness", false, e.what());
    }
    if (!enumerated) {
        // Without a census the remaining cross-checks cannot run.
        std::vector<std::vector<std::string>> rows;
        for (const auto& c : checks)
            rows.push_back({c.name, c.pass ? "pass" : "fail", c.detail});
        emit(g, "verify", {"check", "status", "detail"}, rows, {});
        return 1;
    }

    {
        bool ok = true;
        for (std::size_t k = 0; k < census.pnk_counts.size() && ok; ++k)
            ok = BigInt(census.pnk_counts[k]) ==
                 pnk_closed(m, bins, static_cast<std::int64_t>(k));
        auto recursive = pnk_row_recursive(m, bins);
        for (std::size_t k = 0; k < recursive.size() && ok; ++k)
            ok = recursive[k] == pnk_closed(m, bins, static_cast<std::int64_t>(k));
        add("pnk_counts", ok, "closed form = recurrence = census for every k");
    }
    {
        bool ok = omega(p, bins) == term(p, static_cast<SeqIdx>(m) * bins + 1) - 1;
        add("omega_identity", ok, "omega(n) = a_{mn+1} - 1");
    }
    {
        bool ok = true;
        std::int64_t bad_g = -1;
        for (std::int64_t gap = 1; gap <= census.max_gap && ok; ++gap) {
            if (gap_occurrence_count(m, bins, gap) !=
                BigInt(census.gap_counts[static_cast<std::size_t>(gap)])) {
                ok = false;
                bad_g = gap;
            }
        }
        add("gap_census", ok,
            ok ? "closed-form occurrence counts equal census for every g"
               : "mismatch at g = " + std::to_string(bad_g));
        bool total_ok = BigInt(census.n_gaps_total) == gap_total_census(m, bins);
        add("gap_total_identity", total_ok,
            "census gap total = (mu_n - 1)|I_n| + 1 (the +1 is the empty decomposition)");
    }
    {
        bool ok = true;
        for (std::int64_t g1 : {std::int64_t{1}, static_cast<std::int64_t>(m)}) {
            for (std::int64_t g2 : {static_cast<std::int64_t>(m), std::int64_t{2} * m}) {
                if (g1 > census.max_gap || g2 > census.max_gap) continue;
                Rational err = oracle::census_joint_statistic(census, g1, g2) -
                               joint_gap_limit_product(m, g1, g2);
                if (sgn(err) < 0) err = -err;
                if (err > make_rational(2, bins)) ok = false;
            }
        }
        add("joint_gaps", ok, "|joint statistic - P(g1)P(g2)| <= 2/n for sampled pairs");
    }
    {
        std::uint64_t limit = deep ? census.interval_size
                                   : std::min<std::uint64_t>(census.interval_size, 20000);
        bool ok = true;
        for (std::uint64_t v = 0; v < limit && ok; ++v) {
            BigInt z(static_cast<unsigned long>(v));
            Decomposition a = decompose(p, z);
            Decomposition b = decompose_greedy(p, z);
            ok = a.indices == b.indices && recompose(p, a) == z;
        }
        add("greedy_digit_agree", ok,
            "greedy decoder = digit decoder and round-trip over " +
                std::to_string(limit) + " values");
    }

    bool all = true;
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : checks) {
        all = all && c.pass;
        rows.push_back({c.name, c.pass ? "pass" : "fail", c.detail});
    }
    emit(g, "verify", {"check", "status", "detail"}, rows,
         {{"m", std::to_string(m)},
          {"bins", std::to_string(bins)},
          {"result", all ? "pass" : "fail"}});
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"m-gonal numeration system: sequences, decompositions, exact "
                 "distributions, and seeded Monte Carlo experiments"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global flags after the subcommand too

    GlobalOpts g;
    if (const char* env = std::getenv("MGON_SEED")) g.seed = std::strtoull(env, nullptr, 10);
    app.add_flag("--json", g.json_out, "emit JSON instead of CSV");
    app.add_flag("--schema-version", g.schema_banner, "prepend a schema version banner");
    app.add_option("--seed", g.seed, "RNG seed (default from MGON_SEED, else 1)");
    app.add_option("--threads", g.threads,
                   "worker chunk count (determinism is per seed+threads)")
        ->check(CLI::Range(1u, 256u));

    int m = 0;

    auto* seq = app.add_subcommand("seq", "print sequence terms");
    std::int64_t seq_count = 0;
    seq->add_option("--m", m, "bin size")->required()->check(CLI::PositiveNumber);
    seq->add_option("--count", seq_count, "number of terms")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* dec = app.add_subcommand("decompose", "decompose integers");
    std::vector<std::string> dec_z;
    dec->add_option("--m", m, "bin size")->required()->check(CLI::PositiveNumber);
    dec->add_option("z", dec_z, "integers to decompose (decimal)")->required();

    auto* dist = app.add_subcommand("dist", "summand-count distribution");
    std::int64_t dist_n = 0;
    bool dist_exact = false;
    std::uint64_t dist_samples = 0;
    dist->add_option("--m", m, "bin size")->required()->check(CLI::PositiveNumber);
    dist->add_option("--n", dist_n, "interval parameter")
        ->required()
        ->check(CLI::NonNegativeNumber);
    dist->add_flag("--exact", dist_exact, "exact big-integer row");
    dist->add_option("--samples", dist_samples, "Monte Carlo sample count");

    auto* gaps = app.add_subcommand("gaps", "gap-length distribution");
    std::string gaps_mode;
    std::int64_t gaps_n = -1, gaps_gmax = 0;
    std::uint64_t gaps_samples = 100000;
    gaps->add_option("--m", m, "bin size")->required()->check(CLI::PositiveNumber);
    gaps->add_option("--mode", gaps_mode, "exact | limit | mc")->required();
    gaps->add_option("--n", gaps_n, "interval parameter (exact and mc modes)");
    gaps->add_option("--gmax", gaps_gmax, "largest gap to print")
        ->required()
        ->check(CLI::PositiveNumber);
    gaps->add_option("--samples", gaps_samples, "Monte Carlo sample count (mc mode)");

    auto* longest =
        app.add_subcommand("longest", "longest-gap experiment over [a_n, a_{n+1})");
    std::int64_t longest_n = 0;
    std::uint64_t longest_samples = 100000;
    longest->add_option("--m", m, "bin size")->required()->check(CLI::PositiveNumber);
    longest->add_option("--n", longest_n, "bracket index")
        ->required()
        ->check(CLI::PositiveNumber);
    longest->add_option("--samples", longest_samples, "sample count")
        ->check(CLI::PositiveNumber);

    auto* verify =
        app.add_subcommand("verify", "exhaustive cross-checks against enumeration");
    std::int64_t verify_bins = 0;
    bool verify_deep = false;
    verify->add_option("--m", m, "bin size")->required()->check(CLI::PositiveNumber);
    verify->add_option("--bins", verify_bins, "number of full bins to enumerate")
        ->required()
        ->check(CLI::PositiveNumber);
    verify->add_flag("--deep", verify_deep,
                     "run the per-value decoder checks over the whole interval");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (seq->parsed()) return cmd_seq(g, m, seq_count);
        if (dec->parsed()) return cmd_decompose(g, m, dec_z);
        if (dist->parsed()) {
            if (dist_exact == (dist_samples > 0))
                throw UsageError("dist requires exactly one of --exact or --samples N");
            if (dist_exact && dist_n > 10000)
                throw UsageError("exact mode is guarded to n <= 10000");
            return dist_exact ? cmd_dist_exact(g, m, dist_n)
                              : cmd_dist_sampled(g, m, dist_n, dist_samples);
        }
        if (gaps->parsed())
            return cmd_gaps(g, m, gaps_mode,
                            gaps_n >= 0 ? std::optional<std::int64_t>(gaps_n) : std::nullopt,
                            gaps_gmax, gaps_samples);
        if (longest->parsed()) return cmd_longest(g, m, longest_n, longest_samples);
        if (verify->parsed()) return cmd_verify(g, m, verify_bins, verify_deep);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
