// Command-line driver: batch scans, single-field explanations and the brute-force oracle.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "octic/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generators of power integral bases in totally complex pure octic fields Q(m^(1/8))"};
  app.require_subcommand(1);

  octic::RunConfig cfg;

  auto* scan = app.add_subcommand("scan", "run the full pipeline for every m in (FROM, TO] satisfying (*)");
  scan->add_option("--from", cfg.m_lo, "exclusive lower end of the m range")->required();
  scan->add_option("--to", cfg.m_hi, "inclusive upper end of the m range (≤ -1)")->required();
  scan->add_option("--bound-exp", cfg.bound_exponent, "coordinates are bounded by 10^E")->capture_default_str();
  scan->add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();
  scan->add_option("--out", cfg.output, "JSON Lines output file");
  scan->add_flag("--resume", cfg.resume, "skip fields already present in --out");
  scan->add_option("--h-mult", cfg.h_policy_multiplier, "lattice scale H = h_mult * C^2")->capture_default_str();
  scan->add_option("--guard-bits", cfg.precision_guard_bits, "extra precision beyond bits(H)")->capture_default_str();
  bool quiet = false;
  scan->add_flag("-q,--quiet", quiet, "do not print a line per field");

  long explain_m = 0;
  auto* explain = app.add_subcommand("explain", "run one field and print the reduction trace and results");
  explain->add_option("--m", explain_m, "the field parameter m < 0")->required();
  explain->add_option("--bound-exp", cfg.bound_exponent, "coordinates are bounded by 10^E")->capture_default_str();

  long oracle_m = 0;
  int oracle_box = 2;
  auto* oracle = app.add_subcommand("oracle", "brute-force all index-1 elements with small coordinates");
  oracle->add_option("--m", oracle_m, "the field parameter m < 0")->required();
  oracle->add_option("--box", oracle_box, "coordinate box |x| <= B, B <= 3")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*scan) {
      if (cfg.resume && cfg.output.empty()) throw std::invalid_argument("--resume needs --out");
      auto summary = octic::run_range(cfg, [&](const octic::FieldReport& r) {
        if (quiet) return;
        std::cout << "m=" << r.m << " status=" << octic::to_string(r.status) << " bound=" << r.enumeration_bound
                  << " generators=";
        for (std::size_t i = 0; i < r.generators.size(); ++i)
          std::cout << (i ? "," : "") << r.generators[i].to_string();
        std::cout << " ms=" << r.wall_time_ms << "\n";
      });
      std::cout << "fields: " << summary.fields << "  resumed-over: " << summary.skipped
                << "  reduction_failed: " << summary.failed << "\n";
      return summary.failed > 0 ? 2 : 0;
    }
    if (*explain) {
      auto r = octic::run_single(explain_m, cfg, &std::cout);
      return r.status == octic::FieldStatus::reduction_failed ? 2 : 0;
    }
    if (*oracle) {
      for (const auto& g : octic::oracle_scan(oracle_m, oracle_box)) std::cout << g.to_string() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
