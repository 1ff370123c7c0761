#include "phaselock/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <ostream>

#include <CLI11.hpp>

#include "phaselock/arith.hpp"
#include "phaselock/io.hpp"
#include "phaselock/lattice.hpp"
#include "phaselock/observables.hpp"
#include "phaselock/qphase.hpp"
#include "phaselock/verify.hpp"

namespace phaselock::cli {

namespace {

constexpr double kPi = std::numbers::pi;

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << '\n';
    return 2;
}

int with_output(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    if (path.empty()) {
        writer(std::cout);
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) return usage_error("cannot open output file: " + path);
    writer(out);
    return 0;
}

std::string sweep_csv_header(bool renormalized) {
    std::string h =
        "q,beta,expectation_def,expectation_closed,variance_def,variance_closed,"
        "modified_expectation,total_weight,mangoldt_q";
    if (renormalized) h += ",variance_renormalized";
    return h;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records,
                     const std::vector<double>* renormalized) {
    out << "# classical phase variance reference: pi^2/3 = " << io::format_real(kPi * kPi / 3.0) << '\n';
    out << sweep_csv_header(renormalized != nullptr) << '\n';
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        out << r.q << ',' << io::format_real(r.beta) << ',' << io::format_real(r.expectation_def) << ','
            << io::format_real(r.expectation_closed) << ',' << io::format_real(r.variance_def) << ','
            << io::format_real(r.variance_closed) << ',' << io::format_real(r.modified_expectation) << ','
            << io::format_real(r.total_weight) << ',' << io::format_real(r.mangoldt_q);
        if (renormalized) out << ',' << io::format_real((*renormalized)[i]);
        out << '\n';
    }
}

void write_sweep_json(std::ostream& out, const std::vector<SweepRecord>& records,
                      const std::vector<double>* renormalized) {
    out << "[\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        out << "  {\"q\": " << r.q << ", \"beta\": " << io::format_real(r.beta)
            << ", \"expectation_def\": " << io::format_real(r.expectation_def)
            << ", \"expectation_closed\": " << io::format_real(r.expectation_closed)
            << ", \"variance_def\": " << io::format_real(r.variance_def)
            << ", \"variance_closed\": " << io::format_real(r.variance_closed)
            << ", \"modified_expectation\": " << io::format_real(r.modified_expectation)
            << ", \"total_weight\": " << io::format_real(r.total_weight)
            << ", \"mangoldt_q\": " << io::format_real(r.mangoldt_q);
        if (renormalized) out << ", \"variance_renormalized\": " << io::format_real((*renormalized)[i]);
        out << '}' << (i + 1 < records.size() ? "," : "") << '\n';
    }
    out << "]\n";
}

void write_sweep(std::ostream& out, OutputFormat format, const std::vector<SweepRecord>& records,
                 const std::vector<double>* renormalized) {
    if (format == OutputFormat::csv)
        write_sweep_csv(out, records, renormalized);
    else
        write_sweep_json(out, records, renormalized);
}

std::string basename_of(const std::string& path) {
    const auto slash = path.find_last_of('/');
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

// Companion gnuplot script; the sweep CSV itself stays the single source
// of data.
int write_gnuplot_script(const RunConfig& cfg, const std::string& xlabel, int xcolumn) {
    if (cfg.format != OutputFormat::csv) return usage_error("--gnuplot requires --format csv");
    if (cfg.output_path.empty()) return usage_error("--gnuplot requires --out");
    std::ofstream out(cfg.gnuplot_path, std::ios::binary);
    if (!out) return usage_error("cannot open gnuplot script path: " + cfg.gnuplot_path);
    const std::string csv = basename_of(cfg.output_path);
    out << "set datafile separator ','\n"
        << "set xlabel '" << xlabel << "'\n"
        << "plot '" << csv << "' using " << xcolumn << ":4 with lines title 'expectation closed', \\\n"
        << "     '" << csv << "' using " << xcolumn << ":6 with lines title 'variance closed'\n";
    return 0;
}

}  // namespace

SweepRecord make_sweep_record(std::int64_t q, double beta) {
    const auto rep = observables::observable_report(q, beta);
    return {q,
            beta,
            rep.expectation_def,
            rep.expectation_closed,
            rep.variance_def,
            rep.variance_closed,
            rep.modified_expectation,
            rep.total_weight,
            arith::mangoldt(q)};
}

int cmd_sweep_q(const RunConfig& cfg) {
    if (cfg.q_min < 1 || cfg.q_min > cfg.q_max) return usage_error("require 1 <= q-min <= q-max");
    if (cfg.beta_values.empty()) return usage_error("at least one --beta value is required");
    for (const double beta : cfg.beta_values)
        if (!std::isfinite(beta)) return usage_error("beta values must be finite");

    std::vector<SweepRecord> records;
    std::vector<double> renormalized;
    for (std::int64_t q = cfg.q_min; q <= cfg.q_max; ++q) {
        for (const double beta : cfg.beta_values) {
            records.push_back(make_sweep_record(q, beta));
            if (cfg.renormalized) renormalized.push_back(observables::variance_renormalized(q, beta));
        }
    }
    const int rc = with_output(cfg.output_path, [&](std::ostream& out) {
        write_sweep(out, cfg.format, records, cfg.renormalized ? &renormalized : nullptr);
    });
    if (rc != 0) return rc;
    if (!cfg.gnuplot_path.empty()) return write_gnuplot_script(cfg, "q", 1);
    return 0;
}

int cmd_sweep_beta(const RunConfig& cfg) {
    if (cfg.q < 1) return usage_error("require q >= 1");
    if (cfg.beta_steps < 1) return usage_error("require beta-steps >= 1");
    if (!std::isfinite(cfg.beta_min) || !std::isfinite(cfg.beta_max) || cfg.beta_min > cfg.beta_max)
        return usage_error("require finite beta-min <= beta-max");

    std::vector<SweepRecord> records;
    std::vector<double> renormalized;
    for (std::int64_t i = 0; i < cfg.beta_steps; ++i) {
        const double beta =
            cfg.beta_steps == 1
                ? cfg.beta_min
                : cfg.beta_min + (cfg.beta_max - cfg.beta_min) * static_cast<double>(i) /
                                     static_cast<double>(cfg.beta_steps - 1);
        records.push_back(make_sweep_record(cfg.q, beta));
        if (cfg.renormalized) renormalized.push_back(observables::variance_renormalized(cfg.q, beta));
    }
    const int rc = with_output(cfg.output_path, [&](std::ostream& out) {
        write_sweep(out, cfg.format, records, cfg.renormalized ? &renormalized : nullptr);
    });
    if (rc != 0) return rc;
    if (!cfg.gnuplot_path.empty()) return write_gnuplot_script(cfg, "beta", 2);
    return 0;
}

int cmd_ramanujan(const RunConfig& cfg) {
    if (cfg.q_min < 1 || cfg.q_min > cfg.q_max) return usage_error("require 1 <= q-min <= q-max");
    return with_output(cfg.output_path, [&](std::ostream& out) {
        if (cfg.format == OutputFormat::csv) {
            out << "q,n,c_closed,c_direct,abs_diff\n";
            for (std::int64_t q = cfg.q_min; q <= cfg.q_max; ++q) {
                for (std::int64_t n = 0; n < q; ++n) {
                    const auto closed = arith::ramanujan_sum_closed(q, n);
                    const double direct = arith::ramanujan_sum_direct(q, n);
                    out << q << ',' << n << ',' << closed << ',' << io::format_real(direct) << ','
                        << io::format_real(std::abs(static_cast<double>(closed) - direct)) << '\n';
                }
            }
        } else {
            out << "[\n";
            bool first = true;
            for (std::int64_t q = cfg.q_min; q <= cfg.q_max; ++q) {
                for (std::int64_t n = 0; n < q; ++n) {
                    const auto closed = arith::ramanujan_sum_closed(q, n);
                    const double direct = arith::ramanujan_sum_direct(q, n);
                    if (!first) out << ",\n";
                    first = false;
                    out << "  {\"q\": " << q << ", \"n\": " << n << ", \"c_closed\": " << closed
                        << ", \"c_direct\": " << io::format_real(direct)
                        << ", \"abs_diff\": " << io::format_real(std::abs(static_cast<double>(closed) - direct))
                        << '}';
                }
            }
            out << "\n]\n";
        }
    });
}

int cmd_dump(const RunConfig& cfg) {
    if (cfg.q < 1) return usage_error("require q >= 1");
    Matrix m;
    if (cfg.target == "projector")
        m = qphase::locked_projector(cfg.q);
    else if (cfg.target == "locking-spectral")
        m = qphase::locking_operator_spectral(cfg.q);
    else if (cfg.target == "locking-projector")
        m = qphase::locking_operator_projector_form(cfg.q);
    else if (cfg.target == "pb")
        m = qphase::pb_phase_operator(cfg.q);
    else if (cfg.target == "commutator")
        m = qphase::locked_commutator_closed(cfg.q);
    else if (cfg.target == "number")
        m = qphase::number_operator(cfg.q);
    else if (cfg.target == "qft")
        m = qphase::qft_matrix(cfg.q);
    else if (cfg.target == "lattice-gram")
        m = lattice::gram_matrix(lattice::generator_matrix(cfg.q));
    else
        return usage_error("unknown dump target: " + cfg.target);
    return with_output(cfg.output_path, [&](std::ostream& out) { io::write_matrix_json(out, m); });
}

int cmd_verify(const RunConfig& cfg) {
    if (cfg.q_min < 1) return usage_error("require q-min >= 1");
    verify::VerifyOptions opt;
    opt.q_min = cfg.q_min;
    if (cfg.verify_q_max > 0) {
        if (cfg.verify_q_max < cfg.q_min) return usage_error("require q-min <= q-max");
        opt.q_max_operators = cfg.verify_q_max;
        opt.q_max_arith = cfg.verify_q_max;
        opt.q_max_lattice = cfg.verify_q_max;
        opt.q_max_observables = cfg.verify_q_max;
    }
    opt.inject_fault = cfg.inject_fault;
    const auto results = verify::run_verification(opt);
    verify::print_report(std::cout, results);
    return verify::all_passed(results) ? 0 : 1;
}

int run(int argc, const char* const* argv) {
    CLI::App app{"finite-dimensional quantum phase-locking toolkit"};
    app.require_subcommand(1);

    const std::map<std::string, OutputFormat> format_map{{"csv", OutputFormat::csv},
                                                         {"json", OutputFormat::json}};

    RunConfig sweep_q;
    sweep_q.beta_values = {0.0, 1.0, kPi};
    auto* sub_sq = app.add_subcommand("sweep-q", "sweep the dimension q at fixed beta values");
    sub_sq->add_option("--q-min", sweep_q.q_min, "smallest dimension (default 2)");
    sub_sq->add_option("--q-max", sweep_q.q_max, "largest dimension (default 100)");
    sub_sq->add_option("--beta", sweep_q.beta_values, "beta grid value, repeatable (default 0 1 pi)");
    sub_sq->add_option("--out", sweep_q.output_path, "output file (default stdout)");
    sub_sq->add_option("--format", sweep_q.format, "output format (default csv)")
        ->transform(CLI::CheckedTransformer(format_map));
    sub_sq->add_option("--gnuplot", sweep_q.gnuplot_path, "write a companion gnuplot script");
    sub_sq->add_flag("--renormalized", sweep_q.renormalized,
                     "append the exploratory renormalized-variance column");

    RunConfig sweep_beta;
    auto* sub_sb = app.add_subcommand("sweep-beta", "sweep beta at a fixed dimension q");
    sub_sb->add_option("--q", sweep_beta.q, "dimension (default 13)");
    sub_sb->add_option("--beta-min", sweep_beta.beta_min, "grid start (default 0)");
    sub_sb->add_option("--beta-max", sweep_beta.beta_max, "grid end (default 2*pi)");
    sub_sb->add_option("--beta-steps", sweep_beta.beta_steps, "grid point count, inclusive (default 256)");
    sub_sb->add_option("--out", sweep_beta.output_path, "output file (default stdout)");
    sub_sb->add_option("--format", sweep_beta.format, "output format (default csv)")
        ->transform(CLI::CheckedTransformer(format_map));
    sub_sb->add_option("--gnuplot", sweep_beta.gnuplot_path, "write a companion gnuplot script");
    sub_sb->add_flag("--renormalized", sweep_beta.renormalized,
                     "append the exploratory renormalized-variance column");

    RunConfig ramanujan;
    ramanujan.q_min = 1;
    ramanujan.q_max = 100;
    auto* sub_ram = app.add_subcommand("ramanujan", "emit c_q(n) tables, closed form vs direct sum");
    sub_ram->add_option("--q-min", ramanujan.q_min, "smallest modulus (default 1)");
    sub_ram->add_option("--q-max", ramanujan.q_max, "largest modulus (default 100)");
    auto* ram_single = sub_ram->add_option("--q", ramanujan.q, "emit the table for this single modulus");
    sub_ram->add_option("--out", ramanujan.output_path, "output file (default stdout)");
    sub_ram->add_option("--format", ramanujan.format, "output format (default csv)")
        ->transform(CLI::CheckedTransformer(format_map));

    RunConfig dump;
    auto* sub_dump = app.add_subcommand("dump", "emit one operator matrix as JSON");
    sub_dump->add_option("--q", dump.q, "dimension")->required();
    sub_dump
        ->add_option("--target", dump.target,
                     "matrix to dump: projector, locking-spectral, locking-projector, pb, "
                     "commutator, number, qft, lattice-gram")
        ->required()
        ->check(CLI::IsMember({"projector", "locking-spectral", "locking-projector", "pb", "commutator",
                               "number", "qft", "lattice-gram"}));
    sub_dump->add_option("--out", dump.output_path, "output file (default stdout)");

    RunConfig verify_cfg;
    verify_cfg.q_min = 1;
    auto* sub_ver = app.add_subcommand("verify", "run the self-verification suite");
    sub_ver->add_option("--q-min", verify_cfg.q_min, "smallest dimension (default 1)");
    sub_ver->add_option("--q-max", verify_cfg.verify_q_max,
                        "cap every suite at this dimension (default: per-suite ranges 64/100/200)");
    sub_ver->add_flag("--inject-fault", verify_cfg.inject_fault,
                      "negative control: corrupt one Ramanujan value so verification must fail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sub_sq->parsed()) {
            sweep_q.command = Command::sweep_q;
            return cmd_sweep_q(sweep_q);
        }
        if (sub_sb->parsed()) {
            sweep_beta.command = Command::sweep_beta;
            return cmd_sweep_beta(sweep_beta);
        }
        if (sub_ram->parsed()) {
            ramanujan.command = Command::ramanujan;
            if (ram_single->count() > 0) {
                ramanujan.q_min = ramanujan.q;
                ramanujan.q_max = ramanujan.q;
            }
            return cmd_ramanujan(ramanujan);
        }
        if (sub_dump->parsed()) {
            dump.command = Command::dump;
            return cmd_dump(dump);
        }
        if (sub_ver->parsed()) {
            verify_cfg.command = Command::verify;
            return cmd_verify(verify_cfg);
        }
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    return usage_error("no command given");
}

}  // namespace phaselock::cli
