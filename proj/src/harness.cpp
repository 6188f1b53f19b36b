#include "evidence/harness.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "evidence/error.hpp"
#include "evidence/random.hpp"

namespace evidence {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skipped: return "SKIPPED";
  }
  return "?";
}

void VerificationReport::expect_equal(std::string name, const Rational& lhs, const Rational& rhs,
                                      std::string detail) {
  add(Check{std::move(name), lhs == rhs ? CheckStatus::pass : CheckStatus::fail, lhs.str(),
            rhs.str(), std::move(detail)});
}

void VerificationReport::skip(std::string name, std::string detail) {
  add(Check{std::move(name), CheckStatus::skipped, {}, {}, std::move(detail)});
}

void VerificationReport::append(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool VerificationReport::overall() const { return count(CheckStatus::fail) == 0; }

std::size_t VerificationReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      checks_.begin(), checks_.end(), [&](const Check& c) { return c.status == status; }));
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["overall"] = overall();
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["status"] = std::string(to_string(c.status));
    entry["lhs"] = c.lhs;
    entry["rhs"] = c.rhs;
    entry["detail"] = c.detail;
    doc["checks"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::string VerificationReport::to_text() const {
  std::size_t width = 5;
  for (const auto& c : checks_) width = std::max(width, c.name.size());
  std::ostringstream os;
  for (const auto& c : checks_) {
    os << std::left << std::setw(8) << to_string(c.status) << std::setw(static_cast<int>(width) + 2)
       << c.name;
    if (!c.lhs.empty() || !c.rhs.empty()) os << c.lhs << " vs " << c.rhs;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << (overall() ? "OVERALL PASS" : "OVERALL FAIL") << ": " << count(CheckStatus::pass)
     << " passed, " << count(CheckStatus::fail) << " failed, " << count(CheckStatus::skipped)
     << " skipped\n";
  return os.str();
}

// Citizen Coot ---------------------------------------------------------------

Frame coot_frame() {
  static const Frame frame = Frame::make({"HB", "HG", "MB", "MG", "SB", "SG", "DB", "DG"});
  return frame;
}

FrameSubset coot_label() {
  return FrameSubset::from_names(coot_frame(), {"HG", "HB", "MG", "MB", "SB", "DB"});
}

const std::vector<CootRow>& coot_rows() {
  static const std::vector<CootRow> rows = {
      {{"HB"}, 20, 20},
      {{"HG"}, 112, 112},
      {{"HB", "HG"}, 70, 202},
      {{"MB"}, 80, 80},
      {{"MG"}, 127, 127},
      {{"MB", "MG"}, 110, 317},
      {{"SB"}, 65, 65},
      {{"DB"}, 13, 13},
      {{"HB", "SB"}, 15, 100},
      {{"HB", "SB", "HG"}, 14, 184},
      {{"MB", "SB"}, 30, 175},
      {{"MB", "SB", "MG"}, 25, 387},
      {{"HB", "DB"}, 8, 41},
      {{"HB", "DB", "HG"}, 3, 114},
      {{"MB", "DB"}, 15, 108},
      {{"MB", "DB", "MG"}, 10, 228},
  };
  return rows;
}

namespace {

std::string padded_id(std::string_view prefix, std::size_t index) {
  std::string digits = std::to_string(index);
  if (digits.size() < 3) digits.insert(0, 3 - digits.size(), '0');
  return std::string(prefix) + digits;
}

Population build_population(std::string_view prefix,
                            const std::vector<std::pair<std::vector<std::string>, int>>& classes,
                            const std::optional<FrameSubset>& label) {
  const Frame frame = coot_frame();
  std::vector<PopulationRecord> records;
  for (const auto& [members, count] : classes) {
    const FrameSubset response = FrameSubset::from_names(frame, members);
    for (int i = 0; i < count; ++i) {
      std::string id = padded_id(prefix, records.size() + 1);
      if (label) {
        records.emplace_back(std::move(id), response, *label);
      } else {
        records.emplace_back(std::move(id), response);
      }
    }
  }
  return Population(frame, std::move(records));
}

}  // namespace

Population coot_fixture() {
  std::vector<std::pair<std::vector<std::string>, int>> classes;
  for (const auto& row : coot_rows()) {
    classes.emplace_back(row.members, static_cast<int>(row.mass_count));
  }
  return build_population("coot-", classes, coot_label());
}

Population coot_standin() {
  return build_population("bottle-",
                          {
                              {{"HB"}, 20},
                              {{"HG"}, 112},
                              {{"HB", "HG"}, 50},
                              {{"HB", "HG", "SG"}, 20},
                              {{"MB"}, 80},
                              {{"MG"}, 127},
                              {{"MB", "MG"}, 75},
                              {{"SG"}, 20},
                              {{"DG"}, 10},
                              {{"SG", "DG"}, 5},
                              {{"SB"}, 45},
                              {{"SB", "SG"}, 20},
                              {{"DB"}, 5},
                              {{"DB", "DG"}, 8},
                              {{"HB", "SB"}, 15},
                              {{"HB", "SB", "HG"}, 14},
                              {{"MB", "SB"}, 30},
                              {{"MB", "SB", "MG"}, 25},
                              {{"HB", "DB"}, 8},
                              {{"HB", "DB", "HG"}, 3},
                              {{"MB", "DB"}, 15},
                              {{"MB", "DB", "MG"}, 10},
                          },
                          std::nullopt);
}

VerificationReport verify_coot_table() {
  VerificationReport report;
  const Frame frame = coot_frame();
  const Population fixture = coot_fixture();
  report.expect_equal("coot size", Rational(static_cast<std::int64_t>(fixture.size())),
                      Rational(kCootSize));

  const MassFunction m = estimate_mass(fixture);
  report.expect_equal("coot focal count", Rational(static_cast<std::int64_t>(m.focal_count())),
                      Rational(static_cast<std::int64_t>(coot_rows().size())));
  const BeliefTable bel = belief_table(m);

  for (const auto& row : coot_rows()) {
    const FrameSubset set = FrameSubset::from_names(frame, row.members);
    report.expect_equal("mass " + set.encode(), m.weight(set), Rational(row.mass_count, kCootSize));

    // Subset sum straight from the table's mass column.
    std::int64_t subset_sum = 0;
    for (const auto& other : coot_rows()) {
      if (FrameSubset::from_names(frame, other.members).is_subset_of(set)) {
        subset_sum += other.mass_count;
      }
    }
    if (subset_sum == row.printed_belief) {
      report.expect_equal("belief " + set.encode(), bel.at(set),
                          Rational(row.printed_belief, kCootSize));
    } else {
      report.expect_equal("belief " + set.encode(), bel.at(set), Rational(subset_sum, kCootSize),
                          "printed value " + std::to_string(row.printed_belief) + "/" +
                              std::to_string(kCootSize) +
                              " is not the subset sum of the mass column");
    }
  }
  return report;
}

// Theorem checks -------------------------------------------------------------

namespace {

std::string describe(const MassFunction& m) {
  std::vector<std::pair<std::string, std::string>> parts;
  for (const auto& [bits, w] : m.weights()) {
    parts.emplace_back(encode_mask(m.frame(), bits), w.str());
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& [set, w] : parts) {
    if (!out.empty()) out += ' ';
    out += set + ":" + w;
  }
  return out;
}

void expect_masses(VerificationReport& report, std::string name, const MassFunction& lhs,
                   const MassFunction& rhs, std::string detail) {
  report.add(Check{std::move(name), lhs == rhs ? CheckStatus::pass : CheckStatus::fail,
                   describe(lhs), describe(rhs), std::move(detail)});
}

std::optional<Combination> try_combine(const MassFunction& a, const MassFunction& b) {
  try {
    return dempster_combine(a, b);
  } catch (const Error& e) {
    if (e.code() == Errc::total_conflict) return std::nullopt;
    throw;
  }
}

}  // namespace

VerificationReport verify_mte_axioms(const Population& p, const MassEstimator& estimator) {
  if (p.empty()) throw Error(Errc::empty_population, "population has no records");
  VerificationReport report;
  const MassFunction m = estimator ? estimator(p) : estimate_mass(p);
  const Frame& frame = p.frame();

  Rational total = 0;
  for (const auto& [bits, w] : m.weights()) total += w;
  report.expect_equal("mass sums to one", total, Rational(1));
  report.expect_equal("mass of empty set", m.weight(Mask{0}), Rational(0));

  if (frame.size() > kMaxAxiomFrame) {
    report.skip("belief equals subset sum", "frame larger than " + std::to_string(kMaxAxiomFrame));
    report.skip("plausibility duality", "frame larger than " + std::to_string(kMaxAxiomFrame));
    return report;
  }

  const std::size_t subsets = frame.powerset_size();
  std::optional<Check> bel_failure;
  std::optional<Check> pl_failure;
  for (Mask a = 0; a < subsets; ++a) {
    const FrameSubset set(frame, a);
    const Rational direct_bel = estimate_belief_direct(p, set);
    const Rational summed_bel = belief(m, set);
    if (!bel_failure && direct_bel != summed_bel) {
      bel_failure = Check{"belief equals subset sum", CheckStatus::fail, direct_bel.str(),
                          summed_bel.str(), "first mismatch at " + set.encode()};
    }
    const Rational direct_pl = estimate_plausibility_direct(p, set);
    const Rational dual = Rational(1) - belief(m, set.complement());
    if (!pl_failure && direct_pl != dual) {
      pl_failure = Check{"plausibility duality", CheckStatus::fail, direct_pl.str(), dual.str(),
                         "first mismatch at " + set.encode()};
    }
  }
  const std::string scope = "all " + std::to_string(subsets) + " subsets";
  report.add(bel_failure.value_or(
      Check{"belief equals subset sum", CheckStatus::pass, {}, {}, scope}));
  report.add(pl_failure.value_or(Check{"plausibility duality", CheckStatus::pass, {}, {}, scope}));
  return report;
}

VerificationReport verify_simple_relabel(const Population& p, const FrameSubset& label) {
  if (p.empty()) throw Error(Errc::empty_population, "population has no records");
  if (label.is_empty()) throw Error(Errc::empty_label, "relabeling needs a nonempty label");
  VerificationReport report;

  const RelabelOutcome outcome = simple_relabel(p, label);
  const auto combined = try_combine(estimate_mass(p), MassFunction::categorical(label));

  if (outcome.population.empty() || !combined) {
    const bool matched = outcome.population.empty() && !combined;
    report.add(Check{"relabel equals combination",
                     matched ? CheckStatus::pass : CheckStatus::fail,
                     outcome.population.empty() ? "empty population" : "nonempty population",
                     combined ? "finite conflict" : "total conflict",
                     matched ? "matched degenerate outcome" : "only one side is degenerate"});
    return report;
  }

  expect_masses(report, "relabel equals combination", estimate_mass(outcome.population),
                combined->mass, "label " + label.encode());
  report.expect_equal("discard fraction equals conflict", outcome.discard_fraction(),
                      combined->conflict);
  return report;
}

MonteCarloMean monte_carlo_belief(const Population& p, const LabelingProcessSpec& spec,
                                  std::size_t trials, std::uint64_t seed, unsigned threads) {
  if (trials == 0) throw Error(Errc::out_of_range, "at least one trial is required");
  const std::size_t subsets = p.frame().powerset_size();

  struct Tally {
    std::map<std::size_t, std::vector<std::uint64_t>> sums;  // keyed by survivor count
    std::size_t empty = 0;
  };

  auto run = [&](std::size_t begin, std::size_t end, Tally& tally) {
    for (std::size_t t = begin; t < end; ++t) {
      const RelabelOutcome outcome = general_relabel(p, spec, derive_seed(seed, t));
      if (outcome.population.empty()) {
        ++tally.empty;
        continue;
      }
      const auto counts = belief_counts(outcome.population);
      auto [it, inserted] = tally.sums.try_emplace(outcome.survivors(), subsets, 0);
      for (std::size_t a = 0; a < subsets; ++a) it->second[a] += counts[a];
    }
  };

  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(trials)));
  std::vector<Tally> tallies(threads);
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (trials + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(trials, begin + chunk);
      if (begin >= end) continue;
      if (threads == 1) {
        run(begin, end, tallies[w]);
      } else {
        pool.emplace_back(run, begin, end, std::ref(tallies[w]));
      }
    }
  }

  Tally merged;
  for (auto& tally : tallies) {
    merged.empty += tally.empty;
    for (auto& [n, sums] : tally.sums) {
      auto [it, inserted] = merged.sums.try_emplace(n, subsets, 0);
      for (std::size_t a = 0; a < subsets; ++a) it->second[a] += sums[a];
    }
  }

  MonteCarloMean result;
  result.empty_trials = merged.empty;
  result.used_trials = trials - merged.empty;
  if (result.used_trials == 0) {
    throw Error(Errc::all_trials_empty, "every trial discarded the whole population");
  }
  result.mean_belief.assign(subsets, Rational(0));
  const Rational used(static_cast<std::int64_t>(result.used_trials));
  for (const auto& [n, sums] : merged.sums) {
    const Rational per_record = Rational(1) / (Rational(static_cast<std::int64_t>(n)) * used);
    for (std::size_t a = 0; a < subsets; ++a) {
      result.mean_belief[a] += Rational(mpq_class(mpz_class(std::to_string(sums[a])))) * per_record;
    }
  }
  return result;
}

VerificationReport verify_general_relabel(const Population& p, const LabelingProcessSpec& spec,
                                          const MonteCarloOptions& options) {
  if (p.empty()) throw Error(Errc::empty_population, "population has no records");
  VerificationReport report;
  const auto combined = try_combine(estimate_mass(p), spec.as_mass());

  // Closed form.
  const auto weights = expected_class_weights(p, spec);
  const Rational discard = weights.at(0);
  if (discard == Rational(1) || !combined) {
    const bool matched = discard == Rational(1) && !combined;
    report.add(Check{"expected classes equal combination",
                     matched ? CheckStatus::pass : CheckStatus::fail, "expected discard " + discard.str(),
                     combined ? "finite conflict" : "total conflict",
                     matched ? "matched degenerate outcome" : "only one side is degenerate"});
  } else {
    MassFunction::Weights renormalized;
    for (const auto& [cls, w] : weights) {
      if (cls != 0 && !w.is_zero()) renormalized.emplace(cls, w / (Rational(1) - discard));
    }
    expect_masses(report, "expected classes equal combination",
                  MassFunction::make(p.frame(), renormalized), combined->mass, "EXACT");
    report.expect_equal("expected discard equals conflict", discard, combined->conflict, "EXACT");
  }

  // Monte Carlo.
  if (!combined) {
    report.skip("monte carlo belief", "total conflict leaves nothing to estimate");
    return report;
  }
  if (p.frame().size() > kMaxDenseFrame) {
    report.skip("monte carlo belief", "frame too large for dense belief tables");
    return report;
  }
  const MonteCarloMean mc = monte_carlo_belief(p, spec, options.trials, options.seed, options.threads);
  const BeliefTable target = belief_table(combined->mass);
  Rational worst = -1;
  Mask worst_set = 0;
  for (Mask a = 0; a < target.values().size(); ++a) {
    const Rational gap = (mc.mean_belief[a] - target.at(a)).abs();
    if (gap > worst) {
      worst = gap;
      worst_set = a;
    }
  }
  std::ostringstream detail;
  detail << "max |mean - combined| = " << worst.to_decimal(6) << " at "
         << encode_mask(p.frame(), worst_set) << ", tolerance " << options.tolerance.to_decimal(6)
         << ", trials used " << mc.used_trials << ", empty trials " << mc.empty_trials;
  report.add(Check{"monte carlo belief",
                   worst <= options.tolerance ? CheckStatus::pass : CheckStatus::fail,
                   mc.mean_belief[worst_set].str(), target.at(worst_set).str(),
                   detail.str()});
  return report;
}

}  // namespace evidence
