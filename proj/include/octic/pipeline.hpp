#ifndef OCTIC_PIPELINE_HPP
#define OCTIC_PIPELINE_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "octic/enumerator.hpp"
#include "octic/field_scan.hpp"
#include "octic/generator_solver.hpp"
#include "octic/reducer.hpp"
#include "octic/thue_setup.hpp"

namespace octic {

enum class FieldStatus { ok, reduction_failed, skipped_star };

inline std::string to_string(FieldStatus s) {
  switch (s) {
    case FieldStatus::ok:
      return "ok";
    case FieldStatus::reduction_failed:
      return "reduction_failed";
    case FieldStatus::skipped_star:
      return "skipped_star";
  }
  return "?";
}

inline FieldStatus status_from_string(const std::string& s) {
  if (s == "ok") return FieldStatus::ok;
  if (s == "reduction_failed") return FieldStatus::reduction_failed;
  if (s == "skipped_star") return FieldStatus::skipped_star;
  throw std::invalid_argument("unknown status: " + s);
}

struct RunConfig {
  long m_lo = -5000;  // exclusive
  long m_hi = -1;     // inclusive
  int bound_exponent = 200;
  long h_policy_multiplier = 10;
  int precision_guard_bits = 64;
  unsigned jobs = 1;
  std::string output;
  bool resume = false;

  void validate() const {
    if (!(m_lo < m_hi)) throw std::invalid_argument("RunConfig: need m_lo < m_hi");
    if (m_hi > -1) throw std::invalid_argument("RunConfig: need m_hi ≤ −1");
    if (bound_exponent < 1) throw std::invalid_argument("RunConfig: bound exponent must be ≥ 1");
    if (h_policy_multiplier < 1) throw std::invalid_argument("RunConfig: H multiplier must be ≥ 1");
    if (jobs == 0) throw std::invalid_argument("RunConfig: jobs must be ≥ 1");
  }

  ReductionPolicy policy() const {
    ReductionPolicy p;
    p.h_multiplier = h_policy_multiplier;
    p.guard_bits = precision_guard_bits;
    return p;
  }
};

struct FieldReport {
  long m = 0;
  bool star = false;
  Int c0 = 0;
  Int enumeration_bound = 0;
  std::array<ReductionTrace, 4> reduction_traces;
  std::vector<ThueSolution> thue_solutions;
  std::vector<AbsGen> generators;
  long wall_time_ms = 0;
  FieldStatus status = FieldStatus::skipped_star;

  // not persisted
  std::vector<RelGen> relative_generators;
  std::vector<Y0Record> y0_records;
};

/// Full pipeline for one field. The initial bound uses the field's own |m| for the
/// |√m| factor of the coordinate bound, so a report does not depend on the range it
/// was computed in.
inline FieldReport process_field(long m, const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  FieldReport rep;
  rep.m = m;
  rep.star = condition_star(m);
  if (!rep.star) {
    rep.status = FieldStatus::skipped_star;
    return rep;
  }
  const FieldParams fp = make_field_params(m);
  const QuadRing ring(m);

  const ResolventForms forms = build_resolvent_forms(pure_octic_relative(ring), ring);
  for (const auto& [u, v] : solve_unit_equation(forms, fp.units, ring))
    if (!v.is_zero())
      throw std::logic_error("unit equation has a solution with V ≠ 0 for m = " + std::to_string(m));

  const InitialBound ib = initial_bound(cfg.bound_exponent, -m);
  const ThueProblem tp = make_thue_problem(fp, ib.C0);
  rep.c0 = tp.C0;
  FieldReduction fr = reduce_field(m, tp.C0, tp.d, cfg.policy());
  rep.reduction_traces = std::move(fr.traces);
  rep.enumeration_bound = fr.enumeration_bound;
  if (fr.failed) {
    rep.status = FieldStatus::reduction_failed;
  } else {
    rep.thue_solutions = enumerate_small(m, rep.enumeration_bound.get_si());
    FieldSolution fs = solve_field(fp, rep.thue_solutions);
    rep.generators = std::move(fs.generators);
    rep.relative_generators = std::move(fs.relative);
    rep.y0_records = std::move(fs.y0_records);
    rep.status = FieldStatus::ok;
    if (rep.generators.empty()) throw std::logic_error("no generator found, α must always be present");
  }
  rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// --- JSON Lines -----------------------------------------------------------------------

inline nlohmann::json to_json(const FieldReport& r) {
  using nlohmann::json;
  json traces = json::array();
  for (const auto& t : r.reduction_traces) {
    json steps = json::array();
    for (const auto& s : t.steps)
      steps.push_back({s.c_in.get_str(), s.h_scale.get_str(), s.first_vector_norm_sq.get_str(), s.c_out.get_str()});
    traces.push_back(std::move(steps));
  }
  json sols = json::array();
  for (const auto& s : r.thue_solutions)
    sols.push_back({s.a.a.get_str(), s.a.b.get_str(), s.b.a.get_str(), s.b.b.get_str(),
                    json::array({s.rho.a.get_str(), s.rho.b.get_str()})});
  json gens = json::array();
  for (const auto& g : r.generators) {
    json v = json::array();
    for (const auto& c : g.c) v.push_back(c.get_str());
    gens.push_back(std::move(v));
  }
  json j;
  j["m"] = r.m;
  j["star"] = r.star;
  j["enumeration_bound"] = r.enumeration_bound.get_str();
  j["reduction_traces"] = std::move(traces);
  j["thue_solutions"] = std::move(sols);
  j["generators"] = std::move(gens);
  j["wall_time_ms"] = r.wall_time_ms;
  j["status"] = to_string(r.status);
  return j;
}

inline FieldReport report_from_json(const nlohmann::json& j) {
  FieldReport r;
  r.m = j.at("m").get<long>();
  r.star = j.at("star").get<bool>();
  r.enumeration_bound = Int(j.at("enumeration_bound").get<std::string>());
  const auto& traces = j.at("reduction_traces");
  if (traces.size() > 4) throw std::invalid_argument("report: more than four reduction traces");
  for (std::size_t t = 0; t < traces.size(); ++t) {
    ReductionTrace& tr = r.reduction_traces[t];
    tr.j0 = static_cast<int>(t) + 1;
    for (const auto& s : traces[t]) {
      tr.steps.push_back({Int(s.at(0).get<std::string>()), Int(s.at(1).get<std::string>()),
                          Int(s.at(2).get<std::string>()), Int(s.at(3).get<std::string>())});
    }
    if (!tr.steps.empty()) tr.reduced_bound = tr.steps.back().c_out;
  }
  for (const auto& s : j.at("thue_solutions")) {
    auto z = [&](std::size_t i) { return Int(s.at(i).get<std::string>()); };
    const auto& rho = s.at(4);
    r.thue_solutions.push_back({QuadInt(z(0), z(1)), QuadInt(z(2), z(3)),
                                QuadInt(Int(rho.at(0).get<std::string>()), Int(rho.at(1).get<std::string>()))});
  }
  for (const auto& g : j.at("generators")) {
    AbsGen a;
    if (g.size() != 8) throw std::invalid_argument("report: generator must have 8 coordinates");
    for (std::size_t i = 0; i < 8; ++i) a.c[i] = Int(g.at(i).get<std::string>());
    r.generators.push_back(std::move(a));
  }
  r.wall_time_ms = j.at("wall_time_ms").get<long>();
  r.status = status_from_string(j.at("status").get<std::string>());
  return r;
}

inline std::vector<FieldReport> load_reports(const std::string& path) {
  std::vector<FieldReport> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(report_from_json(nlohmann::json::parse(line)));
  }
  return out;
}

/// Re-checks a persisted report from scratch: every generator has index 1 and every
/// Thue solution satisfies its equation.
inline bool validate_report(const FieldReport& r) {
  if (r.star != condition_star(r.m)) return false;
  if (!r.star) return r.status == FieldStatus::skipped_star && r.generators.empty();
  if (r.status == FieldStatus::ok && r.generators.empty()) return false;
  const FieldParams fp = make_field_params(r.m);
  for (const auto& g : r.generators)
    if (!has_index_one(g, fp) || !(canonicalize(g) == g)) return false;
  for (const auto& s : r.thue_solutions)
    if (!verify_solution(s, r.m)) return false;
  for (const auto& t : r.reduction_traces)
    for (const auto& s : t.steps)
      if (s.first_vector_norm_sq < 40 * s.c_in * s.c_in || !(s.c_out < s.c_in)) return false;
  return true;
}

// --- batch driver ---------------------------------------------------------------------

struct RunSummary {
  std::size_t fields = 0;     // fields processed in this run
  std::size_t skipped = 0;    // already present in the output (resume)
  std::size_t failed = 0;     // status reduction_failed
  std::vector<FieldReport> reports;  // completion order
};

/// Runs every m in (m_lo, m_hi] satisfying (*). Reports are appended to cfg.output as
/// they complete; with cfg.resume, values of m already in the file are skipped.
inline RunSummary run_range(const RunConfig& cfg, const std::function<void(const FieldReport&)>& on_report = {}) {
  cfg.validate();
  std::set<long> done;
  if (cfg.resume && !cfg.output.empty())
    for (const auto& r : load_reports(cfg.output)) done.insert(r.m);

  std::vector<long> todo;
  RunSummary summary;
  for (const auto& fp : enumerate_fields(cfg.m_lo, cfg.m_hi)) {
    if (done.count(fp.m) != 0) {
      ++summary.skipped;
      continue;
    }
    todo.push_back(fp.m);
  }

  std::ofstream out;
  if (!cfg.output.empty()) {
    out.open(cfg.output, cfg.resume ? std::ios::app : std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file " + cfg.output);
  }
  std::mutex sink;
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= todo.size()) return;
      FieldReport rep;
      try {
        rep = process_field(todo[i], cfg);
      } catch (...) {
        std::lock_guard<std::mutex> lock(sink);
        if (!error) error = std::current_exception();
        next = todo.size();
        return;
      }
      std::lock_guard<std::mutex> lock(sink);
      if (out.is_open()) {
        out << to_json(rep).dump() << '\n';
        out.flush();
      }
      if (rep.status == FieldStatus::reduction_failed) ++summary.failed;
      ++summary.fields;
      if (on_report) on_report(rep);
      summary.reports.push_back(std::move(rep));
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(std::max<std::size_t>(1, todo.size()))));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return summary;
}

// --- explain --------------------------------------------------------------------------

/// "7.6992e33"-style rendering for large integers; small ones are printed exactly.
inline std::string sci(const Int& z, int digits = 5) {
  if (abs(z) < 1000000) return z.get_str();
  Real r(z, 64);
  return r.to_string(digits);
}

inline void render_explain(const FieldReport& r, std::ostream& os) {
  os << "m = " << r.m << "  condition (*): " << (r.star ? "yes" : "no") << "  status: " << to_string(r.status)
     << "\n";
  if (!r.star) return;
  os << "initial bound C0 = " << sci(r.c0) << "\n";
  for (const auto& t : r.reduction_traces) {
    os << "\nreduction, j0 = " << t.j0 << "\n";
    os << std::left << std::setw(14) << "  C" << std::setw(14) << "H" << std::setw(14) << "|l1|^2/C^2"
       << "new C\n";
    for (const auto& s : t.steps) {
      Rat ratio(s.first_vector_norm_sq, s.c_in * s.c_in);
      std::ostringstream q;
      q << std::fixed << std::setprecision(2) << ratio.get_d();
      os << "  " << std::setw(12) << sci(s.c_in) << std::setw(14) << sci(s.h_scale) << std::setw(14) << q.str()
         << sci(s.c_out) << "\n";
    }
    os << "  reduced bound " << t.reduced_bound << (t.failed ? "  FAILED: " + t.failure : "") << "\n";
  }
  os << "\nenumeration bound " << r.enumeration_bound << "\n";
  os << "Thue solutions (A, B, rho):\n";
  for (const auto& s : r.thue_solutions) os << "  (" << s.a << ", " << s.b << ", " << s.rho << ")\n";
  if (!r.relative_generators.empty()) {
    os << "relative generators (X, Y, Z), up to units:\n";
    for (const auto& g : r.relative_generators) os << "  (" << g.x << ", " << g.y << ", " << g.z << ")\n";
  }
  for (const auto& y : r.y0_records) {
    os << "  y0 equation for delta = (" << y.delta.x << ", " << y.delta.y << ", " << y.delta.z
       << "), eps = " << y.eps << ": deg I^2 = " << y.observed_degree << ", roots {";
    for (std::size_t i = 0; i < y.roots.size(); ++i) os << (i ? ", " : "") << y.roots[i];
    os << "}\n";
  }
  os << "generators up to equivalence:\n";
  for (const auto& g : r.generators) os << "  " << g.to_string() << "\n";
  os << "wall time " << r.wall_time_ms << " ms\n";
}

inline FieldReport run_single(long m, const RunConfig& cfg, std::ostream* explain = nullptr) {
  FieldReport r = process_field(m, cfg);
  if (explain) render_explain(r, *explain);
  return r;
}

// --- brute-force oracle ---------------------------------------------------------------

/// All canonical γ with x0 = 0 and |coordinate| ≤ box of index 1, by exhaustion.
inline std::vector<AbsGen> oracle_scan(long m, int box) {
  if (!condition_star(m) || m >= 0) throw std::invalid_argument("oracle_scan: m must satisfy (*)");
  if (box < 0 || box > 3) throw std::invalid_argument("oracle_scan: box must be in 0..3");
  const FieldParams fp = make_field_params(m);
  std::vector<AbsGen> out;
  AbsGen g;
  std::array<long, 7> v{};
  v.fill(-box);
  const long span = 2L * box + 1;
  long total = 1;
  for (int i = 0; i < 7; ++i) total *= span;
  for (long n = 0; n < total; ++n) {
    long t = n;
    for (std::size_t i = 0; i < 7; ++i) {
      v[i] = t % span - box;
      t /= span;
    }
    // v follows the canonical order (x1, y1, x2, y2, x3, y3, y0); keep first-nonzero-positive only
    const auto first = std::find_if(v.begin(), v.end(), [](long x) { return x != 0; });
    if (first == v.end() || *first < 0) continue;
    g.c[0] = 0;
    for (std::size_t i = 0; i < 7; ++i) g.c[kCanonicalOrder[i]] = v[i];
    if (has_index_one(g, fp)) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace octic

#endif  // OCTIC_PIPELINE_HPP
