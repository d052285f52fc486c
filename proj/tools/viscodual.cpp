#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "visco/checks.hpp"
#include "visco/duality.hpp"
#include "visco/errors.hpp"
#include "visco/grids.hpp"
#include "visco/material_file.hpp"
#include "visco/models.hpp"
#include "visco/number_format.hpp"
#include "visco/oracles.hpp"

namespace {

using namespace visco;

struct RangeSpec {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
};

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw DomainError("bad number '" + text + "'");
  }
  if (used != text.size()) throw DomainError("bad number '" + text + "'");
  return v;
}

std::size_t parse_count(const std::string& text) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw DomainError("bad count '" + text + "'");
  }
  if (used != text.size() || v < 0) throw DomainError("bad count '" + text + "'");
  return static_cast<std::size_t>(v);
}

RangeSpec parse_range(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw DomainError("range must look like lo:hi:count");
  RangeSpec r;
  r.lo = parse_double(text.substr(0, c1));
  r.hi = parse_double(text.substr(c1 + 1, c2 - c1 - 1));
  r.count = parse_count(text.substr(c2 + 1));
  return r;
}

// convert(convert(x)) restores x, so the written name round-trips too.
std::string dual_name(const std::string& name) {
  const std::string suffix = "-dual";
  if (name.size() >= suffix.size() &&
      name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
    return name.substr(0, name.size() - suffix.size());
  return name + suffix;
}

struct DualPair {
  RelaxationModel relax;
  CreepModel creep;
};

DualPair pair_from(const MaterialRecord& rec, ReciprocalStats* stats) {
  if (rec.is_relaxation())
    return {rec.relaxation(), relaxation_to_creep(rec.relaxation(), stats)};
  return {creep_to_relaxation(rec.creep(), stats), rec.creep()};
}

void print_limits(const RelaxationModel& relax, const CreepModel& creep) {
  const LimitReport rep = limits_report(relax, creep);
  std::cout << "f0_at_zero      = " << to_string(rep.f0_at_zero) << "\n";
  std::cout << "f_inf           = " << format_double17(rep.f_inf) << "\n";
  std::cout << "h_at_zero       = " << format_double17(rep.h_at_zero) << "\n";
  std::cout << "h_slope_at_zero = " << to_string(rep.h_slope_at_zero) << "\n";
  std::cout << "h_at_inf        = " << to_string(rep.h_at_inf) << "\n";
  std::cout << "flow_b          = " << format_double17(rep.flow_b) << "\n";
  if (relax.newtonian() > 0.0)
    std::cout << "note: newtonian term present, so h(0) = 0\n";
}

// Reconstructs the pole/atom picture the engine worked with; for the creep
// direction that is the lifted function p h~(p), whose triple swaps the
// offset and flow coefficients.
InterlacingSummary interlacing_for(bool from_relaxation, const RelaxationModel& relax,
                                   const CreepModel& creep) {
  CbfRep input;
  StieltjesRep reciprocal;
  if (from_relaxation) {
    input.const_term = relax.equilibrium();
    input.slope = relax.newtonian();
    input.spectrum = relax.spectrum();
    reciprocal.const_term = creep.offset();
    reciprocal.pole_at_zero = creep.flow();
    reciprocal.spectrum = creep.spectrum();
  } else {
    input.const_term = creep.flow();
    input.slope = creep.offset();
    input.spectrum = creep.spectrum();
    reciprocal.const_term = relax.newtonian();
    reciprocal.pole_at_zero = relax.equilibrium();
    reciprocal.spectrum = relax.spectrum();
  }
  return check_interlacing(input, reciprocal);
}

int cmd_convert(const std::string& in_path, const std::string& out_path) {
  const MaterialRecord rec = read_material_file(in_path);
  ReciprocalStats stats;
  const DualPair pair = pair_from(rec, &stats);
  if (stats.precision_loss()) {
    std::cerr << "error: residue extraction lost precision (estimate "
              << format_double17(stats.max_residue_rel_err) << ", limit "
              << format_double17(kPrecisionLossThreshold)
              << "); rates are too close for double arithmetic\n";
    return 3;
  }

  const MaterialRecord out = rec.is_relaxation()
                                 ? MaterialRecord{dual_name(rec.name), pair.creep}
                                 : MaterialRecord{dual_name(rec.name), pair.relax};
  write_material_file(out_path, out);

  print_limits(pair.relax, pair.creep);
  const InterlacingSummary il = interlacing_for(rec.is_relaxation(), pair.relax, pair.creep);
  std::cout << "interlacing: poles=" << il.pole_count << " atoms=" << il.atom_count
            << " count=" << (il.count_ok ? "ok" : "FAIL") << " alternation="
            << (il.alternation_ok ? "ok" : "FAIL") << "\n";
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int cmd_verify(const std::string& in_path, const std::string& dual_path,
               const std::string& pgrid_spec, double step) {
  const MaterialRecord rec = read_material_file(in_path);
  std::optional<DualPair> pair;
  if (dual_path.empty()) {
    pair = pair_from(rec, nullptr);
  } else {
    const MaterialRecord dual = read_material_file(dual_path);
    if (rec.is_relaxation() == dual.is_relaxation())
      throw DomainError("verify needs one relaxation model and one creep model");
    if (rec.is_relaxation())
      pair = DualPair{rec.relaxation(), dual.creep()};
    else
      pair = DualPair{dual.relaxation(), rec.creep()};
  }

  const RangeSpec ps = parse_range(pgrid_spec);
  const std::vector<double> pgrid = log_spaced(ps.lo, ps.hi, ps.count);
  const double residual = duality_residual(pair->relax, pair->creep, pgrid);

  const std::vector<double> tgrid = uniform_grid(10.0, step);
  const double conv = convolution_identity_error(pair->relax, pair->creep, tgrid, step);

  const RoundtripReport rt = roundtrip_check(pair->relax);

  const std::vector<double> grid = linear_spaced(0.01, 10.0, 64);
  std::vector<double> fvals(grid.size()), hvals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    fvals[i] = eval_relaxation(pair->relax, grid[i]);
    hvals[i] = eval_creep(pair->creep, grid[i]);
  }
  const CheckReport cm = cm_check(grid, fvals, 6);
  const CheckReport bern = bernstein_check(grid, hvals, 6);

  struct Row {
    const char* name;
    double value;
    double threshold;
    bool pass;
  };
  const Row rows[] = {
      {"duality residual", residual, 1e-10, residual < 1e-10},
      {"convolution identity", conv, 1e-6, conv < 1e-6},
      {"roundtrip discrepancy", rt.max_rel_discrepancy, 1e-8,
       rt.atom_count_match && rt.max_rel_discrepancy < 1e-8},
      {"cm margin (order 6)", cm.worst_margin, -cm.tolerance, cm.pass},
      {"bernstein margin (order 6)", bern.worst_margin, -bern.tolerance, bern.pass},
  };
  bool all_pass = true;
  std::printf("%-28s %13s %13s  %s\n", "check", "value", "threshold", "status");
  for (const Row& r : rows) {
    std::printf("%-28s %13.4e %13.4e  %s\n", r.name, r.value, r.threshold,
                r.pass ? "pass" : "FAIL");
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}

int cmd_sample(const std::string& in_path, const std::string& t_spec, bool log_scale) {
  const MaterialRecord rec = read_material_file(in_path);
  const RangeSpec ts = parse_range(t_spec);
  const std::vector<double> grid =
      log_scale ? log_spaced(ts.lo, ts.hi, ts.count) : linear_spaced(ts.lo, ts.hi, ts.count);

  std::string out = "t,value\n";
  for (double t : grid) {
    const double v = rec.is_relaxation() ? eval_relaxation(rec.relaxation(), t)
                                         : eval_creep(rec.creep(), t);
    out += format_double17(t);
    out += ',';
    out += format_double17(v);
    out += '\n';
  }
  std::cout << out;
  return 0;
}

int cmd_limits(const std::string& in_path) {
  const MaterialRecord rec = read_material_file(in_path);
  const DualPair pair = pair_from(rec, nullptr);
  print_limits(pair.relax, pair.creep);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact interconversion between relaxation moduli and creep functions"};
  app.require_subcommand(1);

  std::string in_path, out_path, dual_path, t_spec;
  std::string pgrid = "1e-4:1e4:64";
  double step = 1e-3;
  bool log_scale = false;

  CLI::App* convert = app.add_subcommand("convert", "write the dual model file");
  convert->add_option("input", in_path, "material JSON file")->required();
  convert->add_option("-o,--output", out_path, "output JSON path")->required();

  CLI::App* verify = app.add_subcommand("verify", "check a model (or pair) against the duality");
  verify->add_option("input", in_path, "material JSON file")->required();
  verify->add_option("--dual", dual_path, "dual model file; converted internally when absent");
  verify->add_option("--pgrid", pgrid, "log-spaced transform grid lo:hi:n");
  verify->add_option("--step", step, "quadrature step for the convolution identity");

  CLI::App* sample = app.add_subcommand("sample", "print t,value samples as CSV");
  sample->add_option("input", in_path, "material JSON file")->required();
  sample->add_option("--t", t_spec, "time grid lo:hi:n")->required();
  sample->add_flag("--log", log_scale, "space the grid logarithmically");

  CLI::App* limits = app.add_subcommand("limits", "print the limit report of the dual pair");
  limits->add_option("input", in_path, "material JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (convert->parsed()) return cmd_convert(in_path, out_path);
    if (verify->parsed()) return cmd_verify(in_path, dual_path, pgrid, step);
    if (sample->parsed()) return cmd_sample(in_path, t_spec, log_scale);
    if (limits->parsed()) return cmd_limits(in_path);
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
