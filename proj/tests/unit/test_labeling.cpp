#include "doctest.h"
#include "evidence/error.hpp"
#include "evidence/io.hpp"
#include "evidence/labeling.hpp"
#include "support/generators.hpp"

using namespace evidence;

namespace {

const Frame abc = Frame::make({"a", "b", "c"});

FrameSubset set(std::vector<std::string> names) { return FrameSubset::from_names(abc, names); }

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an evidence::Error");
  return Errc::out_of_range;
}

// Class frequencies of a population including discarded records under the
// empty class, as fractions of `total`.
std::map<Mask, Rational> observed_classes(const RelabelOutcome& out, std::size_t total) {
  std::map<Mask, Rational> freq;
  for (const auto& [cls, n] : class_counts(out.population)) {
    freq[cls] = Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(total));
  }
  freq[0] = Rational(static_cast<std::int64_t>(out.discarded), static_cast<std::int64_t>(total));
  return freq;
}

}  // namespace

TEST_CASE("labeling process spec validation") {
  CHECK(error_of([] { LabelingProcessSpec::make({}, {}); }) == Errc::invalid_spec);
  CHECK(error_of([] { LabelingProcessSpec::make({set({"a"})}, {Rational(1, 2)}); }) == Errc::invalid_spec);
  CHECK(error_of([] {
          LabelingProcessSpec::make({set({"a"}), set({"b"})}, {Rational(1), Rational(0)});
        }) == Errc::invalid_spec);
  CHECK(error_of([] {
          LabelingProcessSpec::make({set({"a"}), set({"a"})}, {Rational(1, 2), Rational(1, 2)});
        }) == Errc::invalid_spec);
  CHECK(error_of([] { LabelingProcessSpec::make({set({})}, {Rational(1)}); }) == Errc::invalid_spec);

  const auto spec = LabelingProcessSpec::make({set({"b", "c"}), set({"a"})}, {Rational(3, 4), Rational(1, 4)});
  CHECK(spec.size() == 2);
  CHECK(spec.as_mass().weight(set({"a"})) == Rational(1, 4));
}

TEST_CASE("simple_relabel") {
  testing::Rng rng(1);
  const Population p = testing::random_population(rng, abc, 50);
  const auto same = simple_relabel(p, FrameSubset::full(abc));
  CHECK(same.population == p);
  CHECK(same.discarded == 0);

  const Population one(abc, {PopulationRecord("o", set({"a"}))});
  const auto gone = simple_relabel(one, set({"b"}));
  CHECK(gone.population.empty());
  CHECK(gone.discarded == 1);
  CHECK(gone.discard_fraction() == Rational(1));

  const Population two(abc, {PopulationRecord("x", set({"a", "b"})), PopulationRecord("y", set({"c"})),
                             PopulationRecord("z", set({"b"}), set({"b", "c"}))});
  const auto out = simple_relabel(two, set({"b", "c"}));
  REQUIRE(out.survivors() == 3);
  CHECK(out.population.records()[0].label() == set({"b", "c"}));
  CHECK(out.population.records()[0].response() == set({"a", "b"}));
  CHECK(effective_response(out.population.records()[0]) == set({"b"}));
  CHECK(out.population.records()[2].label() == set({"b", "c"}));

  const auto cut = simple_relabel(two, set({"a"}));
  REQUIRE(cut.survivors() == 1);
  CHECK(cut.population.records()[0].object_id() == "x");
  CHECK(cut.discarded == 2);

  CHECK(error_of([&] { simple_relabel(two, set({})); }) == Errc::empty_label);
}

TEST_CASE("simple_relabel invariants") {
  testing::Rng rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const Frame f = testing::random_frame(rng, 1, 6);
    const Population p = testing::random_population(rng, f, 80);
    const FrameSubset label(f, testing::random_nonempty_mask(rng, f));
    const auto once = simple_relabel(p, label);

    std::size_t missing = 0;
    for (const auto& [cls, n] : class_counts(p)) {
      if ((cls & label.bits()) == 0) missing += n;
    }
    CHECK(once.discarded == missing);
    CHECK(once.survivors() + once.discarded == p.size());

    const auto twice = simple_relabel(once.population, label);
    CHECK(twice.population == once.population);
    CHECK(twice.discarded == 0);

    for (std::uint64_t seed : {0ULL, 7ULL, 123456789ULL}) {
      const auto general = general_relabel(p, LabelingProcessSpec::point(label), seed);
      CHECK(general.population == once.population);
      CHECK(general.discarded == once.discarded);
    }
  }
}

TEST_CASE("general_relabel") {
  testing::Rng rng(4);
  const Population p = testing::random_population(rng, abc, 200);
  const auto spec = LabelingProcessSpec::make({set({"a", "b"}), set({"c"}), FrameSubset::full(abc)},
                                              {Rational(1, 2), Rational(1, 3), Rational(1, 6)});

  const auto vac = general_relabel(p, LabelingProcessSpec::point(FrameSubset::full(abc)), 9);
  CHECK(vac.population == p);

  const auto a = general_relabel(p, spec, 31);
  const auto b = general_relabel(p, spec, 31);
  const auto c = general_relabel(p, spec, 31, 4);
  CHECK(io::population_to_csv(a.population) == io::population_to_csv(b.population));
  CHECK(io::population_to_csv(a.population) == io::population_to_csv(c.population));
  CHECK(a.discarded == c.discarded);

  const auto other = general_relabel(p, spec, 32);
  CHECK_FALSE(io::population_to_csv(a.population) == io::population_to_csv(other.population));

  for (const auto& r : a.population.records()) {
    bool matches_some_label = false;
    for (const auto& l : spec.labels()) {
      if (r.label() == r.label().intersect(l)) matches_some_label = true;
    }
    CHECK(matches_some_label);
  }
}

TEST_CASE("expected_class_weights") {
  testing::Rng rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const Frame f = testing::random_frame(rng, 1, 6);
    const Population p = testing::random_population(rng, f, 100);

    const auto vac = expected_class_weights(p, LabelingProcessSpec::point(FrameSubset::full(f)));
    const auto m = estimate_mass(p);
    CHECK(vac.at(0) == Rational(0));
    for (const auto& [cls, w] : vac) CHECK(w == m.weight(cls));

    const FrameSubset label(f, testing::random_nonempty_mask(rng, f));
    const auto point = expected_class_weights(p, LabelingProcessSpec::point(label));
    auto observed = observed_classes(simple_relabel(p, label), p.size());
    for (auto& [cls, w] : point) {
      CHECK(w == (observed.count(cls) ? observed[cls] : Rational(0)));
    }
    for (auto& [cls, w] : observed) {
      if (!w.is_zero()) CHECK(point.count(cls) == 1);
    }

    const auto spec = testing::random_spec(rng, f);
    Rational total = 0;
    for (const auto& [cls, w] : expected_class_weights(p, spec)) total += w;
    CHECK(total == Rational(1));
  }
  CHECK_THROWS_AS(expected_class_weights(Population(abc, {}), LabelingProcessSpec::point(set({"a"}))),
                  Error);
}
