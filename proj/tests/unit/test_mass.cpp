#include "doctest.h"
#include "evidence/error.hpp"
#include "evidence/mass.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace evidence;

namespace {

const Frame abc = Frame::make({"a", "b", "c"});
const Frame coot = Frame::make({"HB", "HG", "MB", "MG", "SB", "SG", "DB", "DG"});

FrameSubset set(const Frame& f, std::vector<std::string> names) {
  return FrameSubset::from_names(f, names);
}

// The Table-1 mass column (numerators over 717).
MassFunction table1_mass() {
  const std::vector<std::pair<std::vector<std::string>, int>> rows = {
      {{"HB"}, 20},        {{"HG"}, 112},       {{"HB", "HG"}, 70},       {{"MB"}, 80},
      {{"MG"}, 127},       {{"MB", "MG"}, 110}, {{"SB"}, 65},             {{"DB"}, 13},
      {{"HB", "SB"}, 15},  {{"HB", "SB", "HG"}, 14}, {{"MB", "SB"}, 30},  {{"MB", "SB", "MG"}, 25},
      {{"HB", "DB"}, 8},   {{"HB", "DB", "HG"}, 3},  {{"MB", "DB"}, 15},  {{"MB", "DB", "MG"}, 10},
  };
  std::vector<std::pair<FrameSubset, Rational>> entries;
  for (const auto& [names, count] : rows) entries.emplace_back(set(coot, names), Rational(count, 717));
  return MassFunction::make(coot, entries);
}

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an evidence::Error");
  return Errc::out_of_range;
}

}  // namespace

TEST_CASE("make_mass validates instead of renormalizing") {
  const auto vac = MassFunction::make(abc, {{FrameSubset::full(abc), Rational(1)}});
  CHECK(vac == MassFunction::vacuous(abc));
  CHECK(table1_mass().focal_count() == 16);

  CHECK(error_of([] {
          MassFunction::make(abc, {{FrameSubset::empty(abc), Rational(1, 2)},
                                   {FrameSubset::full(abc), Rational(1, 2)}});
        }) == Errc::mass_on_empty_set);
  CHECK(error_of([] {
          MassFunction::make(abc, {{set(abc, {"a"}), Rational(-1, 2)},
                                   {FrameSubset::full(abc), Rational(3, 2)}});
        }) == Errc::nonpositive_weight);
  CHECK(error_of([] { MassFunction::make(abc, {{set(abc, {"a"}), Rational(1, 2)}}); }) ==
        Errc::mass_sum_not_one);
}

TEST_CASE("categorical_mass") {
  CHECK(MassFunction::categorical(FrameSubset::full(abc)) == MassFunction::vacuous(abc));
  const auto label = set(coot, {"HB", "HG", "MB", "MG", "SB", "DB"});
  const auto m = MassFunction::categorical(label);
  CHECK(m.weight(label) == Rational(1));
  CHECK(m.focal_count() == 1);
  CHECK(error_of([] { MassFunction::categorical(FrameSubset::empty(abc)); }) == Errc::empty_label);
}

TEST_CASE("belief on the Coot mass") {
  const auto m = table1_mass();
  CHECK(belief(m, set(coot, {"HB", "HG"})) == Rational(202, 717));
  CHECK(belief(m, FrameSubset::full(coot)) == Rational(1));
  // Subset sum over the mass column; the printed column says 184/717 here.
  CHECK(belief(m, set(coot, {"HB", "SB", "HG"})) == Rational(296, 717));
  CHECK(belief(m, FrameSubset::empty(coot)) == Rational(0));
  CHECK(error_of([&] { belief(m, FrameSubset::full(abc)); }) == Errc::frame_mismatch);
}

TEST_CASE("plausibility") {
  const auto m = table1_mass();
  CHECK(plausibility(m, FrameSubset::full(coot)) == Rational(1));
  const auto half = MassFunction::make(abc, {{set(abc, {"a"}), Rational(1, 2)},
                                             {set(abc, {"a", "b"}), Rational(1, 2)}});
  CHECK(plausibility(half, set(abc, {"b"})) == Rational(1, 2));

  // Focal sets containing SB: 65 + 15 + 14 + 30 + 25.
  const auto sb = set(coot, {"SB"});
  CHECK(plausibility(m, sb) == Rational(149, 717));
  CHECK(Rational(1) - belief(m, sb.complement()) == Rational(149, 717));
  CHECK(plausibility_by_intersection(m, sb) == Rational(149, 717));
}

TEST_CASE("belief_table") {
  const auto vac = belief_table(MassFunction::vacuous(abc));
  for (Mask a = 0; a < 8; ++a) CHECK(vac.at(a) == (a == 7 ? Rational(1) : Rational(0)));

  const auto table = belief_table(table1_mass());
  CHECK(table.at(set(coot, {"HB"})) == Rational(20, 717));
  CHECK(table.at(set(coot, {"MB", "MG"})) == Rational(317, 717));
  CHECK(table.at(set(coot, {"MB", "SB"})) == Rational(175, 717));

  testing::Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Frame f = testing::random_frame(rng, 1, 7);
    const auto m = testing::random_mass(rng, f);
    const auto t = belief_table(m);
    const auto dense = oracle::dense(m);
    for (Mask a = 0; a <= f.full_mask(); ++a) {
      CHECK(t.at(a) == belief(m, FrameSubset(f, a)));
      CHECK(t.at(a) == oracle::subset_sum(dense, a));
    }
  }

  std::vector<std::string> big;
  for (int i = 0; i < 21; ++i) big.push_back("e" + std::to_string(i));
  const Frame wide = Frame::make(big);
  CHECK(error_of([&] { belief_table(MassFunction::vacuous(wide)); }) == Errc::dense_too_large);
}

TEST_CASE("mass_from_belief") {
  CHECK(mass_from_belief(belief_table(MassFunction::vacuous(abc))) == MassFunction::vacuous(abc));
  const auto cat = MassFunction::categorical(set(abc, {"a", "c"}));
  CHECK(mass_from_belief(belief_table(cat)) == cat);
  CHECK(mass_from_belief(belief_table(table1_mass())) == table1_mass());

  // Bel({a}) = 1/2 but Bel({a,b}) = 1/4 breaks monotonicity.
  std::vector<Rational> bad(8, Rational(0));
  bad[0b001] = Rational(1, 2);
  bad[0b011] = Rational(1, 4);
  bad[0b101] = Rational(1, 2);
  bad[0b111] = Rational(1);
  CHECK(error_of([&] { mass_from_belief(BeliefTable(abc, bad)); }) == Errc::not_a_belief_function);

  std::vector<Rational> nonzero_empty(8, Rational(1, 2));
  nonzero_empty[7] = Rational(1);
  CHECK(error_of([&] { mass_from_belief(BeliefTable(abc, nonzero_empty)); }) ==
        Errc::not_a_belief_function);
}

TEST_CASE("dempster_combine") {
  const auto ab = MassFunction::categorical(set(abc, {"a", "b"}));
  const auto bc = MassFunction::categorical(set(abc, {"b", "c"}));
  const auto r1 = dempster_combine(ab, bc);
  CHECK(r1.mass == MassFunction::categorical(set(abc, {"b"})));
  CHECK(r1.conflict == Rational(0));

  const auto half = MassFunction::make(abc, {{set(abc, {"a"}), Rational(1, 2)},
                                             {set(abc, {"a", "b"}), Rational(1, 2)}});
  const auto r2 = dempster_combine(half, MassFunction::categorical(set(abc, {"b"})));
  CHECK(r2.mass == MassFunction::categorical(set(abc, {"b"})));
  CHECK(r2.conflict == Rational(1, 2));

  CHECK(error_of([] {
          dempster_combine(MassFunction::categorical(set(abc, {"a"})),
                           MassFunction::categorical(set(abc, {"b"})));
        }) == Errc::total_conflict);
  const Frame xy = Frame::make({"x", "y"});
  CHECK(error_of([&] { dempster_combine(ab, MassFunction::vacuous(xy)); }) == Errc::frame_mismatch);
}

TEST_CASE("dempster_combine against the dense oracle") {
  testing::Rng rng(21);
  int compared = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Frame f = testing::random_frame(rng, 1, 6);
    const auto m1 = testing::random_mass(rng, f);
    const auto m2 = testing::random_mass(rng, f);
    const auto expected = oracle::dempster(oracle::dense(m1), oracle::dense(m2));
    if (!expected) {
      CHECK_THROWS_AS(dempster_combine(m1, m2), Error);
      continue;
    }
    const auto got = dempster_combine(m1, m2);
    CHECK(got.conflict == expected->conflict);
    CHECK(oracle::dense(got.mass) == expected->mass);
    ++compared;

    const FrameSubset focus(f, testing::random_nonempty_mask(rng, f));
    const auto direct = oracle::condition_on(m1, focus);
    const auto cat = MassFunction::categorical(focus);
    if (direct) {
      CHECK(dempster_combine(m1, cat).mass == *direct);
    } else {
      CHECK_THROWS_AS(dempster_combine(m1, cat), Error);
    }
  }
  CHECK(compared > 100);
}
