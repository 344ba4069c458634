#include "chi3/a3.hpp"

#include <string>

#include "chi3/partition.hpp"
#include "chi3/strata.hpp"
#include "chi3/tables.hpp"
#include "doctest.h"

using namespace chi3;

namespace {

const M2Provider& solved_m2() {
  static const M2Provider m2 = bootstrap_m2(default_m2_anchors());
  return m2;
}

}  // namespace

TEST_CASE("triple-elliptic locus values") {
  CHECK(euler_a111(Partition(0, 0, 0)) == 1);
  for (int w = 1; w <= 9; w += 2)
    for (const Partition& lam : partitions_of_weight(w)) {
      CAPTURE(lam.str());
      CHECK(euler_a111(lam) == 0);
    }
}

TEST_CASE("genus-2 times elliptic stratum") {
  CHECK(euler_kunneth(Partition(0, 0, 0), solved_m2()) == 1);
  M2Provider empty;
  CHECK_THROWS_AS(euler_kunneth(Partition(0, 0, 0), empty), CoverageError);
  // odd weight dies on the elliptic factor before any genus-2 lookup
  CHECK(euler_kunneth(Partition(2, 1, 0), empty) == 0);
}

TEST_CASE("abelian threefold assembly at the trivial weight") {
  H3Provider h3;
  A3Breakdown b = euler_a3(Partition(0, 0, 0), h3, solved_m2());
  CHECK(b.m30_term == 2);
  CHECK(b.h3_term == 1);
  CHECK(b.kunneth_term == 1);
  CHECK(b.a111_term == 1);
  CHECK(b.total == 5);
}

TEST_CASE("abelian threefold values reproduce the reference rows") {
  H3Provider h3;
  for (const A3Row& row : reference_a3()) {
    if (row.lambda.weight() > 10) continue;
    CAPTURE(row.lambda.str());
    A3Breakdown b = euler_a3(row.lambda, h3, solved_m2());
    CHECK(b.total == row.a3);
    CHECK(b.total == b.m30_term + b.h3_term + b.kunneth_term + b.a111_term);
  }
}

TEST_CASE("odd weights vanish without any provider data") {
  H3Provider h3;
  M2Provider empty;
  for (int w = 1; w <= 13; w += 2)
    for (const Partition& lam : partitions_of_weight(w)) {
      CAPTURE(lam.str());
      A3Breakdown b = euler_a3(lam, h3, empty);
      CHECK(b.m30_term == 0);
      CHECK(b.h3_term == 0);
      CHECK(b.kunneth_term == 0);
      CHECK(b.a111_term == 0);
      CHECK(b.total == 0);
    }
}

TEST_CASE("coverage holes are reported per missing table") {
  H3Provider h3;

  // weight 40: hyperelliptic data is built in, genus-2 data is not
  try {
    euler_a3(Partition(40, 0, 0), h3, solved_m2());
    FAIL("expected a coverage error");
  } catch (const CoverageError& e) {
    std::string msg = e.what();
    CHECK(msg.find("genus-2") != std::string::npos);
    CHECK(msg.find("hyperelliptic") == std::string::npos);
  }

  // weight 12: both tables run out
  try {
    euler_a3(Partition(12, 0, 0), h3, solved_m2());
    FAIL("expected a coverage error");
  } catch (const CoverageError& e) {
    std::string msg = e.what();
    CHECK(msg.find("--h3-table") != std::string::npos);
    CHECK(msg.find("--m2-table") != std::string::npos);
  }
}

TEST_CASE("extension data fills the declared holes") {
  H3Provider h3;
  h3.set_value(Partition(12, 0, 0), 123);
  M2Provider m2 = solved_m2();
  for (const Partition2& mu : partitions2_of_weight(12)) m2.set_value(mu, 0);

  A3Breakdown b = euler_a3(Partition(12, 0, 0), h3, m2);
  CHECK(b.h3_term == 123);
  CHECK(b.m30_term == euler_m3_nonhyp(Partition(12, 0, 0)));
  CHECK(b.total == b.m30_term + b.h3_term + b.kunneth_term + b.a111_term);
}
