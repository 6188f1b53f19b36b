#include "evidence/labeling.hpp"

#include <algorithm>
#include <optional>
#include <thread>

#include "evidence/error.hpp"
#include "evidence/random.hpp"

namespace evidence {

LabelingProcessSpec::LabelingProcessSpec(MassFunction mass) : mass_(std::move(mass)) {
  for (const auto& [bits, w] : mass_.weights()) {
    labels_.emplace_back(mass_.frame(), bits);
    probs_.push_back(w);
  }
}

LabelingProcessSpec LabelingProcessSpec::make(const std::vector<FrameSubset>& labels,
                                              const std::vector<Rational>& probs) {
  if (labels.empty()) throw Error(Errc::invalid_spec, "labeling process needs at least one label");
  if (labels.size() != probs.size()) {
    throw Error(Errc::invalid_spec, "labels and probabilities differ in length");
  }
  const Frame& frame = labels.front().frame();
  MassFunction::Weights weights;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    require_same_frame(frame, labels[i].frame());
    if (labels[i].is_empty()) throw Error(Errc::invalid_spec, "labels must be nonempty");
    if (probs[i].sign() <= 0) {
      throw Error(Errc::invalid_spec, "selection probability of " + labels[i].encode() +
                                          " must be positive, got " + probs[i].str());
    }
    if (!weights.emplace(labels[i].bits(), probs[i]).second) {
      throw Error(Errc::invalid_spec, "label " + labels[i].encode() + " listed twice");
    }
  }
  try {
    return LabelingProcessSpec(MassFunction::make(frame, weights));
  } catch (const Error& e) {
    throw Error(Errc::invalid_spec, e.what());
  }
}

LabelingProcessSpec LabelingProcessSpec::from_mass(const MassFunction& m) {
  return LabelingProcessSpec(m);
}

LabelingProcessSpec LabelingProcessSpec::point(const FrameSubset& label) {
  if (label.is_empty()) throw Error(Errc::invalid_spec, "labels must be nonempty");
  return LabelingProcessSpec(MassFunction::categorical(label));
}

Rational RelabelOutcome::discard_fraction() const {
  const std::size_t total = survivors() + discarded;
  if (total == 0) return 0;
  return Rational(static_cast<std::int64_t>(discarded), static_cast<std::int64_t>(total));
}

namespace {

std::optional<PopulationRecord> relabel_record(const PopulationRecord& r, const FrameSubset& label) {
  if (!measure_labeled(r, label)) return std::nullopt;
  return PopulationRecord(r.object_id(), r.response(), r.label().intersect(label));
}

RelabelOutcome collect(const Frame& frame, std::vector<std::optional<PopulationRecord>>& slots) {
  std::vector<PopulationRecord> kept;
  kept.reserve(slots.size());
  std::size_t discarded = 0;
  for (auto& slot : slots) {
    if (slot) {
      kept.push_back(std::move(*slot));
    } else {
      ++discarded;
    }
  }
  return RelabelOutcome{Population(frame, std::move(kept)), discarded};
}

}  // namespace

RelabelOutcome simple_relabel(const Population& p, const FrameSubset& label) {
  require_same_frame(p.frame(), label.frame());
  if (label.is_empty()) throw Error(Errc::empty_label, "relabeling needs a nonempty label");
  std::vector<std::optional<PopulationRecord>> slots;
  slots.reserve(p.size());
  for (const auto& r : p.records()) slots.push_back(relabel_record(r, label));
  return collect(p.frame(), slots);
}

RelabelOutcome general_relabel(const Population& p, const LabelingProcessSpec& spec,
                               std::uint64_t seed, unsigned threads) {
  require_same_frame(p.frame(), spec.frame());
  const DiscreteSampler sampler(spec.probs());
  const auto& records = p.records();
  std::vector<std::optional<PopulationRecord>> slots(records.size());

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      CounterStream stream(seed, i);
      slots[i] = relabel_record(records[i], spec.labels()[sampler.draw(stream)]);
    }
  };

  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(records.size())));
  if (threads <= 1) {
    work(0, records.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (records.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(records.size(), begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
  }
  return collect(p.frame(), slots);
}

std::map<Mask, Rational> expected_class_weights(const Population& p,
                                                const LabelingProcessSpec& spec) {
  require_same_frame(p.frame(), spec.frame());
  if (p.empty()) throw Error(Errc::empty_population, "population has no records");
  const Rational size(static_cast<std::int64_t>(p.size()));
  std::map<Mask, Rational> out;
  for (const auto& [cls, count] : class_counts(p)) {
    const Rational share = Rational(static_cast<std::int64_t>(count)) / size;
    for (std::size_t i = 0; i < spec.size(); ++i) {
      out[cls & spec.labels()[i].bits()] += share * spec.probs()[i];
    }
  }
  out.try_emplace(0, Rational(0));
  return out;
}

}  // namespace evidence
