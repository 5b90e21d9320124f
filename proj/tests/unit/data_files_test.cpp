#include <gtest/gtest.h>

#include <string>

#include "revmatch/brute_force.hpp"
#include "revmatch/cnf.hpp"
#include "revmatch/real_io.hpp"
#include "revmatch/reductions.hpp"
#include "support.hpp"

using namespace revmatch;
using revmatch::testing_support::reference_apply;

namespace {

std::string data(const char* name) { return std::string(REVMATCH_TEST_DATA) + "/" + name; }

}  // namespace

TEST(DataFiles, Mixed4Circuit) {
  const Circuit c = read_real_file(data("mixed4.real"));
  ASSERT_EQ(c.width(), 4u);
  EXPECT_EQ(c.size(), 5u);
  // traced by hand through the five gates
  EXPECT_EQ(c.apply(0b0000), 0b0011u);
  EXPECT_EQ(c.apply(0b1000), 0b1000u);
  for (std::uint64_t x = 0; x < 16; ++x) EXPECT_EQ(c.apply(x), reference_apply(c, x)) << x;
}

TEST(DataFiles, UniqueModels) {
  const Cnf two = read_dimacs_file(data("unique2.cnf"));
  const SatCount s2 = brute_force_sat(two);
  EXPECT_EQ(s2.models, 1u);
  EXPECT_EQ(s2.first, (Assignment{true, false}));

  const Cnf three = read_dimacs_file(data("unique3.cnf"));
  const SatCount s3 = brute_force_sat(three);
  EXPECT_EQ(s3.models, 1u);
  EXPECT_EQ(s3.first, (Assignment{true, true, false}));

  EXPECT_EQ(brute_force_sat(read_dimacs_file(data("unsat1.cnf"))).models, 0u);
}

TEST(DataFiles, ReductionsRecoverTheModel) {
  const Cnf phi = read_dimacs_file(data("unique2.cnf"));
  const ReductionInstance nn = build_nn_instance(phi);
  const auto wnn = brute_force_match(nn.c1, nn.c2, EquivType::parse("N-N"));
  ASSERT_TRUE(wnn.has_value());
  EXPECT_EQ(extract_assignment_nn(phi, *wnn), (Assignment{true, false}));

  const ReductionInstance pp = build_pp_instance(phi);
  const auto wpp = brute_force_match(pp.c1, pp.c2, EquivType::parse("P-P"));
  ASSERT_TRUE(wpp.has_value());
  EXPECT_EQ(extract_assignment_pp(phi, *wpp), (Assignment{true, false}));
}

TEST(DataFiles, UnsatHasNoWitness) {
  const Cnf phi = read_dimacs_file(data("unsat1.cnf"));
  const ReductionInstance nn = build_nn_instance(phi);
  EXPECT_FALSE(brute_force_match(nn.c1, nn.c2, EquivType::parse("N-N")).has_value());
}
