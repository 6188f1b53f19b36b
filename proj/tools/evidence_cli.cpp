// Command-line front end: fixtures, estimation, combination, relabeling,
// synthesis and theorem verification over population CSV and mass JSON files.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "evidence/error.hpp"
#include "evidence/frame.hpp"
#include "evidence/harness.hpp"
#include "evidence/io.hpp"
#include "evidence/labeling.hpp"
#include "evidence/mass.hpp"
#include "evidence/population.hpp"

namespace {

using namespace evidence;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr std::uint64_t kDefaultSeed = 1;

struct Options {
  std::string frame;  // "a|b|c" override for population files
  std::string population;
  std::string out;
  std::string report;
  std::string tables;
  std::string label;
  std::string spec;
  std::string mass;
  std::string format = "text";
  std::string mode = "exact";
  std::string fixture;
  std::string mass_a;
  std::string mass_b;
  std::string tolerance = "0.01";
  std::uint64_t seed = kDefaultSeed;
  std::size_t size = 0;
  std::size_t trials = 10000;
  unsigned threads = 1;
};

std::optional<Frame> frame_override(const Options& o) {
  if (o.frame.empty()) return std::nullopt;
  std::vector<std::string> names;
  std::size_t start = 0;
  while (true) {
    auto bar = o.frame.find('|', start);
    names.push_back(o.frame.substr(start, bar == std::string::npos ? bar : bar - start));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return Frame::make(std::move(names));
}

Population load_population(const Options& o) {
  return io::population_from_csv(io::read_file(o.population), frame_override(o));
}

void emit(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
  } else {
    io::write_file(path, contents);
  }
}

void announce_seed(std::uint64_t seed) { std::cerr << "seed: " << seed << "\n"; }

int emit_report(const Options& o, const VerificationReport& report) {
  emit(o.out, o.format == "json" ? report.to_json() : report.to_text());
  return report.overall() ? kExitOk : kExitFail;
}

int run_fixture(const Options& o) {
  Population p = o.fixture == "coot" ? coot_fixture() : coot_standin();
  emit(o.out, io::population_to_csv(p));
  return kExitOk;
}

int run_estimate(const Options& o) {
  const MassFunction m = estimate_mass(load_population(o));
  emit(o.out, io::mass_to_json(m));
  if (!o.tables.empty()) emit(o.tables, io::tables_to_json(m));
  return kExitOk;
}

int run_combine(const Options& o) {
  const MassFunction a = io::mass_from_json(io::read_file(o.mass_a));
  const MassFunction b = io::mass_from_json(io::read_file(o.mass_b));
  const Combination c = dempster_combine(a, b);
  emit(o.out, io::mass_to_json(c.mass));
  if (!o.report.empty()) emit(o.report, io::combination_report_json(c));
  std::cerr << "conflict: " << c.conflict.str() << "\n";
  return kExitOk;
}

int run_relabel(const Options& o) {
  const Population p = load_population(o);
  RelabelOutcome outcome = [&] {
    if (!o.label.empty()) return simple_relabel(p, FrameSubset::decode(p.frame(), o.label));
    announce_seed(o.seed);
    const MassFunction spec = io::mass_from_json(io::read_file(o.spec));
    return general_relabel(p, LabelingProcessSpec::from_mass(spec), o.seed, o.threads);
  }();
  emit(o.out, io::population_to_csv(outcome.population));
  if (!o.report.empty()) emit(o.report, io::relabel_report_json(outcome));
  return kExitOk;
}

int run_synthesize(const Options& o) {
  const MassFunction m = io::mass_from_json(io::read_file(o.mass));
  const SynthesisMode mode = o.mode == "exact" ? SynthesisMode::exact : SynthesisMode::sampled;
  if (mode == SynthesisMode::sampled) announce_seed(o.seed);
  emit(o.out, io::population_to_csv(synthesize_population(m, o.size, mode, o.seed)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frequentist evidence-theory toolkit: belief functions estimated from measured "
               "populations, Dempster combination and relabeling processes."};
  app.require_subcommand(1);
  Options o;

  app.add_option("--frame", o.frame,
                 "Frame override for population files, elements joined by '|'");

  auto* fixture = app.add_subcommand("fixture", "Write a built-in population as CSV");
  fixture->add_option("name", o.fixture, "coot (labeled, 717 records) or coot-standin (unlabeled)")
      ->required()
      ->check(CLI::IsMember({"coot", "coot-standin"}));
  fixture->add_option("--out", o.out, "Output CSV (stdout if omitted)");

  auto* estimate = app.add_subcommand("estimate", "Estimate the mass function of a population");
  estimate->add_option("--population", o.population, "Population CSV")->required()->check(CLI::ExistingFile);
  estimate->add_option("--out", o.out, "Mass JSON output (stdout if omitted)");
  estimate->add_option("--tables", o.tables, "Belief/plausibility tables JSON (frames up to 12)");

  auto* combine = app.add_subcommand("combine", "Combine two mass functions with Dempster's rule");
  combine->add_option("m1", o.mass_a, "First mass JSON")->required()->check(CLI::ExistingFile);
  combine->add_option("m2", o.mass_b, "Second mass JSON")->required()->check(CLI::ExistingFile);
  combine->add_option("--out", o.out, "Combined mass JSON (stdout if omitted)");
  combine->add_option("--report", o.report, "Combined mass plus conflict as JSON");

  auto* relabel = app.add_subcommand("relabel", "Run a labeling process over a population");
  relabel->add_option("--population", o.population, "Population CSV")->required()->check(CLI::ExistingFile);
  auto* label_opt = relabel->add_option("--label", o.label, "Label for the simple process, e.g. 'a|b'");
  auto* spec_opt = relabel->add_option("--spec", o.spec, "Mass JSON of the general process")
                       ->check(CLI::ExistingFile);
  label_opt->excludes(spec_opt);
  relabel->add_option("--seed", o.seed, "Seed for the general process")->envname("EVIDENCE_SEED");
  relabel->add_option("--threads", o.threads, "Worker threads (output does not depend on it)");
  relabel->add_option("--out", o.out, "Relabeled population CSV (stdout if omitted)");
  relabel->add_option("--report", o.report, "Survivor/discard report JSON");

  auto* synth = app.add_subcommand("synthesize", "Build an unlabeled population from a mass function");
  synth->add_option("--mass", o.mass, "Mass JSON")->required()->check(CLI::ExistingFile);
  synth->add_option("--size", o.size, "Number of records")->required()->check(CLI::PositiveNumber);
  synth->add_option("--mode", o.mode, "exact (apportioned counts) or sampled")
      ->check(CLI::IsMember({"exact", "sampled"}));
  synth->add_option("--seed", o.seed, "Seed for sampled mode")->envname("EVIDENCE_SEED");
  synth->add_option("--out", o.out, "Output CSV (stdout if omitted)");

  auto* verify = app.add_subcommand("verify", "Check the theorems on a population");
  verify->require_subcommand(1);
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", o.out, "Report output (stdout if omitted)");
  };
  auto* axioms = verify->add_subcommand("axioms", "Mass, belief and plausibility identities");
  axioms->add_option("--population", o.population, "Population CSV")->required()->check(CLI::ExistingFile);
  add_common(axioms);
  auto* vsimple = verify->add_subcommand("simple-relabel", "Simple relabeling equals combination");
  vsimple->add_option("--population", o.population, "Population CSV")->required()->check(CLI::ExistingFile);
  vsimple->add_option("--label", o.label, "Label, e.g. 'a|b'")->required();
  add_common(vsimple);
  auto* vgeneral = verify->add_subcommand("general-relabel", "Expected relabeling equals combination");
  vgeneral->add_option("--population", o.population, "Population CSV")->required()->check(CLI::ExistingFile);
  vgeneral->add_option("--spec", o.spec, "Mass JSON of the process")->required()->check(CLI::ExistingFile);
  vgeneral->add_option("--trials", o.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
  vgeneral->add_option("--seed", o.seed, "Base seed")->envname("EVIDENCE_SEED");
  vgeneral->add_option("--tolerance", o.tolerance, "Absolute tolerance on mean belief");
  vgeneral->add_option("--threads", o.threads, "Worker threads (result does not depend on it)");
  add_common(vgeneral);
  auto* vcoot = verify->add_subcommand("coot-table", "Built-in Coot fixture against its table");
  add_common(vcoot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*fixture) return run_fixture(o);
    if (*estimate) return run_estimate(o);
    if (*combine) return run_combine(o);
    if (*relabel) {
      if (o.label.empty() && o.spec.empty()) {
        std::cerr << "relabel: one of --label or --spec is required\n";
        return kExitUsage;
      }
      return run_relabel(o);
    }
    if (*synth) return run_synthesize(o);
    if (*axioms) return emit_report(o, verify_mte_axioms(load_population(o)));
    if (*vsimple) {
      const Population p = load_population(o);
      return emit_report(o, verify_simple_relabel(p, FrameSubset::decode(p.frame(), o.label)));
    }
    if (*vgeneral) {
      announce_seed(o.seed);
      const Population p = load_population(o);
      const auto spec = LabelingProcessSpec::from_mass(io::mass_from_json(io::read_file(o.spec)));
      MonteCarloOptions mc{o.trials, o.seed, Rational::parse(o.tolerance), o.threads};
      return emit_report(o, verify_general_relabel(p, spec, mc));
    }
    if (*vcoot) return emit_report(o, verify_coot_table());
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return e.code() == Errc::total_conflict ? kExitFail : kExitUsage;
  }
  return kExitUsage;
}
