#include <CLI11.hpp>

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "quot/adhm.hpp"
#include "quot/enumerate.hpp"
#include "quot/json_io.hpp"
#include "quot/potential.hpp"
#include "quot/sampling.hpp"
#include "quot/stability.hpp"
#include "quot/tangent.hpp"
#include "quot/version.hpp"

namespace {

using quot::Json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

// Shared output/reproducibility options of every subcommand.
struct ReportOptions {
    std::string out_path;
    std::string format = "json";
    bool no_timestamp = false;
    std::uint64_t seed = 0;

    void attach(CLI::App* cmd, bool with_seed = true) {
        cmd->add_option("--out", out_path, "Write the report to this file instead of stdout");
        cmd->add_option("--format", format, "Report format: json (JSON-lines) or csv (flat commands only)")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_flag("--no-timestamp", no_timestamp, "Suppress the timestamp in the summary record");
        if (with_seed) cmd->add_option("--seed", seed, "64-bit seed recorded in every record");
    }
};

class Report {
public:
    explicit Report(const ReportOptions& opts) : opts_(opts) {
        if (!opts.out_path.empty()) {
            file_.open(opts.out_path, std::ios::trunc);
            if (!file_) throw quot::Error("cannot open output file '" + opts.out_path + "'");
        }
    }

    bool csv() const { return opts_.format == "csv"; }

    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

    void record(Json j) { stream() << j.dump() << "\n"; }

    void summary(Json j) {
        if (!opts_.no_timestamp) j["timestamp"] = utc_timestamp();
        stream() << j.dump() << "\n";
    }

    void csv_header(const std::string& header) { stream() << header << "\n"; }
    void csv_row(const std::string& row) { stream() << row << "\n"; }

private:
    ReportOptions opts_;
    std::ofstream file_;
};

Json base_record(const std::string& command, const ReportOptions& opts, Json params) {
    return Json{{"command", command}, {"version", std::string(quot::kVersion)}, {"seed", opts.seed},
                {"params", std::move(params)}};
}

quot::Rational parse_rational(const std::string& text, const std::string& flag) {
    try {
        return quot::Scalar::parse(quot::Field::rationals(), text).rat();
    } catch (const quot::ParseError&) {
        throw CLI::ValidationError(flag, "expected an exact rational like 3, -1/2");
    }
}

quot::FramedRep load_rep(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw quot::Error("cannot open rep file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw quot::ParseError("rep file '" + path + "': " + e.what());
    }
    return quot::rep_from_json(j);
}

// ---------------------------------------------------------------- tangent

struct TangentCmd {
    std::size_t m = 2, n = 0, r = 1;
    std::string field_tag = "Q";
    std::string point = "etale";
    std::string rep_path;
    std::size_t samples = 1;
    long long box = 3;
    std::optional<std::size_t> expected;
    bool emit_reps = false;
    ReportOptions report;

    // The reference dimension used when --expected is absent: the known
    // dimension formulas for n <= 1, one loop, or the plane.
    static std::optional<std::size_t> default_reference(const quot::FramedRep& rep) {
        if (rep.n() == 0) return 0;
        if (rep.n() == 1) return rep.m() - 1 + rep.r();
        if (rep.m() == 1) return rep.r() * rep.n();
        if (rep.m() == 2) return (rep.r() + 1) * rep.n();
        return std::nullopt;
    }

    int run() {
        if (report.format == "csv") throw CLI::ValidationError("--format", "tangent reports are JSON-lines");
        if (rep_path.empty() && (m < 1 || r < 1)) {
            throw CLI::ValidationError("--m/--r", "provide --m and --r, or a --rep file");
        }
        const quot::Field field = quot::Field::parse(field_tag);
        Report out(report);
        const Json params = rep_path.empty()
                                ? Json{{"m", m},         {"n", n},     {"r", r},
                                       {"field", field.to_string()}, {"point", point},
                                       {"box", box},     {"samples", samples}}
                                : Json{{"rep", rep_path}};

        quot::CounterRng rng(report.seed);
        const std::size_t total = rep_path.empty() ? samples : 1;
        for (std::size_t index = 0; index < total; ++index) {
            quot::FramedRep rep = [&] {
                if (!rep_path.empty()) return load_rep(rep_path);
                if (point == "punctual") {
                    if (n != 0 && n != r) {
                        throw CLI::ValidationError("--point", "punctual points have n = r");
                    }
                    return quot::punctual_point(m, r, field);
                }
                if (point == "random") return quot::random_stable_commuting_rep(rng, m, n, r, field, box);
                return quot::random_etale_rep(rng, m, n, r, field, box);
            }();
            const std::optional<std::size_t> reference = expected ? expected : default_reference(rep);
            const quot::TangentReport tr = quot::classify_point(rep, reference);
            Json rec = base_record("tangent", report, params);
            rec["index"] = index;
            rec.update(quot::tangent_report_to_json(tr));
            if (emit_reps || !rep_path.empty()) rec["rep"] = quot::rep_to_json(rep);
            out.record(std::move(rec));
        }
        Json sum = base_record("tangent", report, params);
        sum["samples"] = total;
        out.summary(std::move(sum));
        return kExitOk;
    }
};

// ---------------------------------------------------------------- critcheck

struct CritCheckCmd {
    std::size_t max_n = 3, max_r = 2;
    std::string field_tag = "Q";
    std::string rep_path;
    std::size_t samples = 100;
    long long box = 3;
    ReportOptions report;

    int run() {
        if (report.format == "csv") throw CLI::ValidationError("--format", "critcheck reports are JSON-lines");
        const quot::Field field = quot::Field::parse(field_tag);
        Report out(report);
        const Json params{{"max_n", max_n}, {"max_r", max_r}, {"field", field.to_string()},
                          {"box", box},     {"samples", samples}};

        quot::CounterRng rng(report.seed);
        std::size_t failures = 0;
        const std::size_t total = rep_path.empty() ? samples : 1;
        for (std::size_t index = 0; index < total; ++index) {
            const std::size_t n = 1 + rng.below(max_n);
            const std::size_t r = 1 + rng.below(max_r);

            // One arbitrary point probes grad = 0 <=> commuting; one stable
            // commuting point probes the kernel comparison.
            const quot::FramedRep probe = rep_path.empty() ? quot::random_rep(rng, 3, n, r, field, box)
                                                           : load_rep(rep_path);
            const bool grad_zero = quot::is_zero(quot::potential_gradient(probe));
            const bool commuting = quot::is_commuting(probe);

            const quot::FramedRep crit =
                (rep_path.empty() || !commuting || !quot::is_stable(probe))
                    ? quot::random_stable_commuting_rep(rng, 3, n, r, field, box)
                    : probe;
            const bool kernels_equal = quot::crit_equals_commuting_tangent(crit);

            const bool ok = (grad_zero == commuting) && kernels_equal;
            if (!ok) ++failures;

            Json rec = base_record("critcheck", report, params);
            rec["index"] = index;
            rec["n"] = crit.n();
            rec["r"] = crit.r();
            rec["f"] = quot::potential_value(probe).to_string();
            rec["grad_is_zero"] = grad_zero;
            rec["grad_matches_commuting"] = grad_zero == commuting;
            rec["hessian_rank"] = quot::rank(quot::hessian(crit));
            rec["kernels_equal"] = kernels_equal;
            if (!ok) {
                rec["probe_rep"] = quot::rep_to_json(probe);
                rec["critical_rep"] = quot::rep_to_json(crit);
            }
            out.record(std::move(rec));
        }

        Json sum = base_record("critcheck", report, params);
        sum["samples"] = total;
        sum["failures"] = failures;
        out.summary(std::move(sum));
        return failures == 0 ? kExitOk : kExitViolation;
    }
};

// ---------------------------------------------------------------- adhm

struct AdhmCmd {
    std::size_t n = 0, r = 1;
    bool dims_only = false;
    std::size_t samples = 10;
    std::string field_tag = "Q";
    long long box = 3;
    ReportOptions report;

    int run() {
        Report out(report);
        const Json params{{"n", n}, {"r", r}, {"field", field_tag}, {"samples", samples}};

        if (dims_only) {
            const quot::FramedQuotDims d = quot::framed_vs_quot_dims(n, r);
            if (out.csv()) {
                out.csv_header("n,r,framed_dim,quot_dim,codim,version");
                out.csv_row(std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(d.framed_dim) +
                            "," + std::to_string(d.quot_dim) + "," + std::to_string(d.codim) + "," +
                            std::string(quot::kVersion));
                return kExitOk;
            }
            Json rec = base_record("adhm", report, params);
            rec["framed_dim"] = d.framed_dim;
            rec["quot_dim"] = d.quot_dim;
            rec["codim"] = d.codim;
            out.summary(std::move(rec));
            return kExitOk;
        }

        if (out.csv()) throw CLI::ValidationError("--format", "adhm sampling reports are JSON-lines");
        const quot::Field field = quot::Field::parse(field_tag);
        quot::CounterRng rng(report.seed);
        std::size_t failures = 0;
        for (std::size_t index = 0; index < samples; ++index) {
            const quot::AdhmDatum d = quot::random_stable_adhm_solution(rng, n, r, field, box);
            const std::size_t moment_rank = quot::moment_jacobian_rank(d);
            const std::size_t tangent = quot::adhm_tangent_dim(d);
            const bool ok = moment_rank == n * n && tangent == 2 * n * r;
            if (!ok) ++failures;
            Json rec = base_record("adhm", report, params);
            rec["index"] = index;
            rec["moment_rank"] = moment_rank;
            rec["tangent_dim"] = tangent;
            rec["j_nonzero"] = !d.j().is_zero();
            rec["smooth_of_expected_dim"] = ok;
            if (!ok) rec["datum"] = quot::adhm_to_json(d);
            out.record(std::move(rec));
        }
        Json sum = base_record("adhm", report, params);
        sum["samples"] = samples;
        sum["failures"] = failures;
        out.summary(std::move(sum));
        return failures == 0 ? kExitOk : kExitViolation;
    }
};

// ---------------------------------------------------------------- count

struct CountCmd {
    std::size_t m = 1, n = 0, r = 1;
    std::uint64_t q = 2;
    quot::EnumerateOptions options;
    ReportOptions report;

    int run() {
        Report out(report);
        const Json params{{"m", m}, {"n", n}, {"r", r}, {"q", q}, {"budget", options.budget},
                          {"threads", options.threads}};
        try {
            const quot::CountResult result = quot::count_quot_points(m, n, r, q, options);
            if (out.csv()) {
                out.csv_header("m,n,r,q,stable_commuting_points,orbit_count,gauge_group_order,version");
                out.csv_row(std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(r) + "," +
                            std::to_string(q) + "," + std::to_string(result.stable_commuting_points) + "," +
                            std::to_string(result.orbit_count) + "," +
                            std::to_string(result.gauge_group_order) + "," + std::string(quot::kVersion));
                return kExitOk;
            }
            Json rec = base_record("count", report, params);
            rec.update(quot::count_result_to_json(result));
            out.summary(std::move(rec));
            return kExitOk;
        } catch (const quot::NonIntegralOrbitCount& e) {
            Json rec = base_record("count", report, params);
            rec["invariant_violation"] = e.what();
            out.summary(std::move(rec));
            return kExitViolation;
        }
    }
};

// ---------------------------------------------------------------- slope

struct SlopeCmd {
    std::string c1h = "0";
    int eps = 1;
    std::string delta1 = "1";
    std::string rank = "1";
    ReportOptions report;

    int run() {
        Report out(report);
        const quot::Rational value = quot::slope(parse_rational(c1h, "--c1H"), eps,
                                                 parse_rational(delta1, "--delta1"),
                                                 parse_rational(rank, "--rank"));
        if (out.csv()) {
            out.csv_header("c1H,eps,delta1,rank,slope,version");
            out.csv_row(c1h + "," + std::to_string(eps) + "," + delta1 + "," + rank + "," + value.get_str() +
                        "," + std::string(quot::kVersion));
            return kExitOk;
        }
        Json rec = base_record("slope", report,
                               Json{{"c1H", c1h}, {"eps", eps}, {"delta1", delta1}, {"rank", rank}});
        rec["slope"] = value.get_str();
        out.summary(std::move(rec));
        return kExitOk;
    }
};

// ---------------------------------------------------------------- embed

struct EmbedCmd {
    std::size_t n = 1, r = 1;
    std::string field_tag = "Q";
    std::string point = "etale";
    std::string rep_path;
    std::size_t samples = 1;
    long long box = 3;
    ReportOptions report;

    int run() {
        if (report.format == "csv") throw CLI::ValidationError("--format", "embed reports are JSON-lines");
        const quot::Field field = quot::Field::parse(field_tag);
        Report out(report);
        const Json params{{"n", n}, {"r", r}, {"field", field.to_string()}, {"point", point},
                          {"samples", samples}};

        quot::CounterRng rng(report.seed);
        std::size_t failures = 0;
        const std::size_t total = rep_path.empty() ? samples : 1;
        for (std::size_t index = 0; index < total; ++index) {
            const quot::FramedRep rep = [&] {
                if (!rep_path.empty()) return load_rep(rep_path);
                if (point == "punctual") return quot::punctual_point(2, r, field);
                if (point == "random") return quot::random_stable_commuting_rep(rng, 2, n, r, field, box);
                return quot::random_etale_rep(rng, 2, n, r, field, box);
            }();
            const quot::AdhmDatum d = quot::eta_embed(rep);
            const bool moment_zero = quot::moment(d).is_zero();
            const bool stable = quot::is_stable_adhm(d);
            const bool j_zero = d.j().is_zero();
            const bool roundtrip = quot::eta_restrict(d) == rep;
            const bool ok = moment_zero && stable && j_zero && roundtrip;
            if (!ok) ++failures;

            Json rec = base_record("embed", report, params);
            rec["index"] = index;
            rec["moment_zero"] = moment_zero;
            rec["stable"] = stable;
            rec["j_zero"] = j_zero;
            rec["roundtrip"] = roundtrip;
            rec["adhm"] = quot::adhm_to_json(d);
            out.record(std::move(rec));
        }
        Json sum = base_record("embed", report, params);
        sum["samples"] = total;
        sum["failures"] = failures;
        out.summary(std::move(sum));
        return failures == 0 ? kExitOk : kExitViolation;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact matrix models of Quot schemes and framed sheaves on projective space"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(quot::kVersion));

    TangentCmd tangent_cmd;
    CLI::App* tangent = app.add_subcommand("tangent", "Zariski tangent reports at Quot points");
    tangent->add_option("--m", tangent_cmd.m, "Number of loops (ambient dimension)");
    tangent->add_option("--n", tangent_cmd.n, "Quotient length");
    tangent->add_option("--r", tangent_cmd.r, "Framing rank");
    tangent->add_option("--field", tangent_cmd.field_tag, "Coefficient field: Q or Fp:<p>");
    tangent->add_option("--point", tangent_cmd.point, "Point constructor")
        ->check(CLI::IsMember({"punctual", "etale", "random"}));
    tangent->add_option("--rep", tangent_cmd.rep_path, "Read the point from a FramedRep JSON file");
    tangent->add_option("--samples", tangent_cmd.samples, "Number of sampled points");
    tangent->add_option("--box", tangent_cmd.box, "Coordinate box for rational sampling");
    tangent->add_option("--expected", tangent_cmd.expected, "Reference dimension for the verdict");
    tangent->add_flag("--emit-reps", tangent_cmd.emit_reps, "Embed the sampled rep in each record");
    tangent_cmd.report.attach(tangent);

    CritCheckCmd crit_cmd;
    CLI::App* crit = app.add_subcommand("critcheck", "Critical-locus vs commuting-locus probe (m = 3)");
    crit->add_option("--samples", crit_cmd.samples, "Number of sampled points");
    crit->add_option("--max-n", crit_cmd.max_n, "Largest quotient length sampled");
    crit->add_option("--max-r", crit_cmd.max_r, "Largest framing rank sampled");
    crit->add_option("--field", crit_cmd.field_tag, "Coefficient field: Q or Fp:<p>");
    crit->add_option("--rep", crit_cmd.rep_path, "Probe a single FramedRep JSON file");
    crit->add_option("--box", crit_cmd.box, "Coordinate box for rational sampling");
    crit_cmd.report.attach(crit);

    AdhmCmd adhm_cmd;
    CLI::App* adhm = app.add_subcommand("adhm", "Framed-moduli matrix model on the plane");
    adhm->add_option("--n", adhm_cmd.n, "Instanton number / quotient length")->required();
    adhm->add_option("--r", adhm_cmd.r, "Framing rank")->required();
    adhm->add_flag("--dims", adhm_cmd.dims_only, "Report dimension bookkeeping only");
    adhm->add_option("--samples", adhm_cmd.samples, "Number of sampled stable solutions");
    adhm->add_option("--field", adhm_cmd.field_tag, "Coefficient field: Q or Fp:<p>");
    adhm->add_option("--box", adhm_cmd.box, "Coordinate box for rational sampling");
    adhm_cmd.report.attach(adhm);

    CountCmd count_cmd;
    CLI::App* count = app.add_subcommand("count", "Exhaustive F_q point counts");
    count->add_option("--m", count_cmd.m, "Number of loops")->required();
    count->add_option("--n", count_cmd.n, "Quotient length")->required();
    count->add_option("--r", count_cmd.r, "Framing rank")->required();
    count->add_option("--q", count_cmd.q, "Field order (prime)")->required();
    count->add_option("--budget", count_cmd.options.budget, "Hard cap on enumerated tuples")
        ->envname("QUOT_BUDGET");
    count->add_option("--threads", count_cmd.options.threads, "Number of odometer shards");
    count->add_option("--checkpoint", count_cmd.options.checkpoint_path,
                      "Resumable checkpoint file (sequential mode)");
    count_cmd.report.attach(count);

    SlopeCmd slope_cmd;
    CLI::App* slope = app.add_subcommand("slope", "Framed slope arithmetic");
    slope->add_option("--c1H", slope_cmd.c1h, "Degree c_1(E).H^{m-1} as an exact rational")->required();
    slope->add_option("--eps", slope_cmd.eps, "Framing indicator: 0 or 1")->required();
    slope->add_option("--delta1", slope_cmd.delta1, "Leading stability coefficient")->required();
    slope->add_option("--rank", slope_cmd.rank, "Sheaf rank (positive rational)")->required();
    slope_cmd.report.attach(slope, /*with_seed=*/false);

    EmbedCmd embed_cmd;
    CLI::App* embed = app.add_subcommand("embed", "Embed Quot points into the framed-moduli model");
    embed->add_option("--n", embed_cmd.n, "Quotient length");
    embed->add_option("--r", embed_cmd.r, "Framing rank");
    embed->add_option("--field", embed_cmd.field_tag, "Coefficient field: Q or Fp:<p>");
    embed->add_option("--point", embed_cmd.point, "Point constructor")
        ->check(CLI::IsMember({"punctual", "etale", "random"}));
    embed->add_option("--rep", embed_cmd.rep_path, "Read the point from a FramedRep JSON file");
    embed->add_option("--samples", embed_cmd.samples, "Number of sampled points");
    embed->add_option("--box", embed_cmd.box, "Coordinate box for rational sampling");
    embed_cmd.report.attach(embed);

    try {
        app.parse(argc, argv);
        if (tangent->parsed()) return tangent_cmd.run();
        if (crit->parsed()) return crit_cmd.run();
        if (adhm->parsed()) return adhm_cmd.run();
        if (count->parsed()) return count_cmd.run();
        if (slope->parsed()) return slope_cmd.run();
        if (embed->parsed()) return embed_cmd.run();
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const quot::NonIntegralOrbitCount& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const quot::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
