#include "evidence/population.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "evidence/error.hpp"
#include "evidence/random.hpp"

namespace evidence {

PopulationRecord::PopulationRecord(std::string object_id, FrameSubset response, FrameSubset label)
    : object_id_(std::move(object_id)), response_(std::move(response)), label_(std::move(label)) {
  require_same_frame(response_.frame(), label_.frame());
  if (response_.is_empty()) {
    throw Error(Errc::invalid_record, "object '" + object_id_ + "' has an empty response");
  }
  if (!response_.intersects(label_)) {
    throw Error(Errc::invalid_record, "object '" + object_id_ + "': response " +
                                          response_.encode() + " misses its label " +
                                          label_.encode());
  }
}

PopulationRecord::PopulationRecord(std::string object_id, FrameSubset response)
    : PopulationRecord(std::move(object_id), response, FrameSubset::full(response.frame())) {}

Population::Population(Frame frame, std::vector<PopulationRecord> records)
    : frame_(std::move(frame)), records_(std::move(records)) {
  std::unordered_set<std::string_view> ids;
  ids.reserve(records_.size());
  for (const auto& r : records_) {
    require_same_frame(frame_, r.frame());
    if (!ids.insert(r.object_id()).second) {
      throw Error(Errc::duplicate_id, "duplicate object id '" + r.object_id() + "'");
    }
  }
}

bool measure(const PopulationRecord& r, const FrameSubset& a) { return r.response().intersects(a); }

bool measure_labeled(const PopulationRecord& r, const FrameSubset& a) {
  return measure(r, a.intersect(r.label()));
}

FrameSubset effective_response(const PopulationRecord& r) {
  return r.response().intersect(r.label());
}

bool expr_holds(const PopulationRecord& r, const FrameSubset& a) {
  require_same_frame(r.frame(), a.frame());
  const Frame& frame = r.frame();
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const bool hit = measure_labeled(r, FrameSubset::singleton(frame, i));
    if (hit != a.contains(i)) return false;
  }
  return true;
}

std::map<Mask, std::uint64_t> class_counts(const Population& p) {
  std::map<Mask, std::uint64_t> counts;
  for (const auto& r : p.records()) ++counts[r.response().bits() & r.label().bits()];
  return counts;
}

namespace {

void require_nonempty(const Population& p) {
  if (p.empty()) throw Error(Errc::empty_population, "population has no records");
}

}  // namespace

MassFunction estimate_mass(const Population& p) {
  require_nonempty(p);
  const Rational size(static_cast<std::int64_t>(p.size()));
  MassFunction::Weights weights;
  for (const auto& [bits, count] : class_counts(p)) {
    weights.emplace(bits, Rational(static_cast<std::int64_t>(count)) / size);
  }
  return MassFunction::make(p.frame(), weights);
}

Rational estimate_belief_direct(const Population& p, const FrameSubset& a) {
  require_nonempty(p);
  require_same_frame(p.frame(), a.frame());
  const FrameSubset outside = a.complement();
  std::int64_t hits = 0;
  for (const auto& r : p.records()) {
    if (!measure_labeled(r, outside)) ++hits;
  }
  return Rational(hits, static_cast<std::int64_t>(p.size()));
}

Rational estimate_plausibility_direct(const Population& p, const FrameSubset& a) {
  require_nonempty(p);
  require_same_frame(p.frame(), a.frame());
  std::int64_t hits = 0;
  for (const auto& r : p.records()) {
    if (measure_labeled(r, a)) ++hits;
  }
  return Rational(hits, static_cast<std::int64_t>(p.size()));
}

std::vector<std::uint64_t> belief_counts(const Population& p) {
  const Frame& frame = p.frame();
  if (frame.size() > kMaxDenseFrame) {
    throw Error(Errc::dense_too_large, "dense tables are limited to " +
                                           std::to_string(kMaxDenseFrame) + " elements");
  }
  std::vector<std::uint64_t> counts(frame.powerset_size(), 0);
  for (const auto& r : p.records()) ++counts[r.response().bits() & r.label().bits()];
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const Mask bit = Mask{1} << i;
    for (Mask s = 0; s < counts.size(); ++s) {
      if (s & bit) counts[s] += counts[s ^ bit];
    }
  }
  return counts;
}

MeasurementTable MeasurementTable::from_response(const FrameSubset& response) {
  const Frame& frame = response.frame();
  std::vector<bool> truth(frame.powerset_size());
  for (Mask s = 0; s < truth.size(); ++s) truth[s] = (s & response.bits()) != 0;
  return {frame, std::move(truth)};
}

AxiomReport validate_axioms(const MeasurementTable& table) {
  const Frame& frame = table.frame;
  if (frame.size() > kMaxAxiomFrame) {
    throw Error(Errc::dense_too_large, "axiom validation is limited to " +
                                           std::to_string(kMaxAxiomFrame) + " elements");
  }
  if (table.truth.size() != frame.powerset_size()) {
    throw Error(Errc::out_of_range, "measurement table needs one entry per subset");
  }
  const auto& t = table.truth;
  const Mask full = frame.full_mask();
  AxiomReport report;

  if (!t[full]) {
    report.frame_true = false;
    report.violations.push_back("measurement of the whole frame is false");
  }
  for (Mask a = 0; a <= full; ++a) {
    if (t[a]) {
      // Enough to check the one-element extensions; the rest follows by chaining.
      for (std::size_t i = 0; i < frame.size(); ++i) {
        const Mask b = a | (Mask{1} << i);
        if (b != a && !t[b]) {
          report.superset_consistent = false;
          report.violations.push_back("superset consistency: " + encode_mask(frame, a) +
                                      " true but " + encode_mask(frame, b) + " false");
        }
      }
      if (std::popcount(a) >= 2) {
        bool found = false;
        for (Mask b : submasks(a)) {
          if (b != a && t[b]) {
            found = true;
            break;
          }
        }
        if (!found) {
          report.subset_consistent = false;
          report.violations.push_back("subset consistency: " + encode_mask(frame, a) +
                                      " true but no proper subset is");
        }
      }
    }
    bool any_singleton = false;
    for (std::size_t i = 0; i < frame.size(); ++i) {
      if (((a >> i) & 1U) && t[Mask{1} << i]) any_singleton = true;
    }
    if (any_singleton != static_cast<bool>(t[a])) {
      report.singleton_determined = false;
      report.violations.push_back("singleton determination: " + encode_mask(frame, a) + " is " +
                                  (t[a] ? "true" : "false") + " but its singletons say " +
                                  (any_singleton ? "true" : "false"));
    }
    if (a == full) break;
  }
  return report;
}

namespace {

std::string synthesized_id(std::size_t index, std::size_t size) {
  std::string digits = std::to_string(index + 1);
  const std::size_t width = std::to_string(size).size();
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return "obj-" + digits;
}

}  // namespace

Population synthesize_population(const MassFunction& m, std::size_t size, SynthesisMode mode,
                                 std::uint64_t seed) {
  if (size == 0) throw Error(Errc::zero_size, "population size must be positive");
  const Frame& frame = m.frame();

  // Focal sets in canonical encoding order.
  std::vector<std::pair<std::string, Mask>> order;
  for (const auto& [bits, w] : m.weights()) order.emplace_back(encode_mask(frame, bits), bits);
  std::sort(order.begin(), order.end());

  std::vector<PopulationRecord> records;
  records.reserve(size);

  if (mode == SynthesisMode::exact) {
    const Rational total(static_cast<std::int64_t>(size));
    std::vector<std::uint64_t> counts;
    std::vector<Rational> remainders;
    std::uint64_t assigned = 0;
    for (const auto& [key, bits] : order) {
      Rational quota = m.weight(bits) * total;
      mpz_class whole;
      mpz_fdiv_q(whole.get_mpz_t(), quota.get().get_num_mpz_t(), quota.get().get_den_mpz_t());
      counts.push_back(whole.get_ui());
      assigned += whole.get_ui();
      remainders.push_back(quota - Rational(mpq_class(whole)));
    }
    std::vector<std::size_t> rank(order.size());
    for (std::size_t i = 0; i < rank.size(); ++i) rank[i] = i;
    std::stable_sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) {
      return remainders[a] > remainders[b];
    });
    for (std::size_t i = 0; assigned < size; ++i, ++assigned) ++counts[rank[i]];

    for (std::size_t c = 0; c < order.size(); ++c) {
      for (std::uint64_t j = 0; j < counts[c]; ++j) {
        records.emplace_back(synthesized_id(records.size(), size), FrameSubset(frame, order[c].second));
      }
    }
  } else {
    std::vector<Rational> probs;
    for (const auto& entry : order) probs.push_back(m.weight(entry.second));
    DiscreteSampler sampler(probs);
    for (std::size_t i = 0; i < size; ++i) {
      CounterStream stream(seed, i);
      const Mask bits = order[sampler.draw(stream)].second;
      records.emplace_back(synthesized_id(i, size), FrameSubset(frame, bits));
    }
  }
  return Population(frame, std::move(records));
}

}  // namespace evidence
