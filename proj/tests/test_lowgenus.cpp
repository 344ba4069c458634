#include "chi3/lowgenus.hpp"

#include <fstream>
#include <string>

#include "chi3/partition.hpp"
#include "chi3/tables.hpp"
#include "doctest.h"

using namespace chi3;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("elliptic Euler characteristics") {
  CHECK(euler_a1(0) == 1);
  CHECK(euler_a1(2) == -1);
  CHECK(euler_a1(4) == -1);
  CHECK(euler_a1(6) == -1);
  CHECK(euler_a1(8) == -1);
  CHECK(euler_a1(10) == -3);
  CHECK(euler_a1(12) == -1);
  for (long k = 1; k <= 39; k += 2) CHECK(euler_a1(k) == 0);
  for (long k = 2; k <= 40; k += 2) {
    CAPTURE(k);
    CHECK(euler_a1(k) <= -1);
    // the two extra-automorphism points each contribute at least once
    CHECK(euler_a1(k) + (k + 1) >= 2);
  }
  CHECK_THROWS_AS(euler_a1(-2), std::invalid_argument);
}

TEST_CASE("hyperelliptic provider built-in data") {
  H3Provider h3;
  CHECK(h3.lookup(Partition(0, 0, 0)) == 1);
  CHECK(h3.lookup(Partition(6, 0, 0)) == -5);
  CHECK(h3.lookup(Partition(10, 0, 0)) == -17);
  CHECK(h3.lookup(Partition(40, 0, 0)) == -3825);
  CHECK(h3.lookup(Partition(14, 13, 13)) == -2262);
  // odd weight vanishes without data
  CHECK(h3.lookup(Partition(4, 1, 0)) == 0);
  CHECK(h3.covers(Partition(4, 1, 0)));
  // even weight beyond the built-in rows is a declared hole
  CHECK_FALSE(h3.covers(Partition(12, 0, 0)));
  CHECK_THROWS_AS(h3.lookup(Partition(12, 0, 0)), CoverageError);
  try {
    h3.lookup(Partition(12, 0, 0));
  } catch (const CoverageError& e) {
    CHECK(std::string(e.what()).find("--h3-table") != std::string::npos);
  }
}

TEST_CASE("hyperelliptic provider extension files") {
  std::string path = write_temp("chi3_test_h3_ext.txt",
                                "# extension rows\n"
                                "12,0,0,77\n"
                                " 6,0,0 , 99 \n"
                                "\n"
                                "8,0,0,-7  # unchanged on purpose\n");
  H3Provider h3;
  h3.load_extension(path);
  CHECK(h3.lookup(Partition(12, 0, 0)) == 77);
  CHECK(h3.lookup(Partition(6, 0, 0)) == 99);  // override wins
  CHECK(h3.lookup(Partition(8, 0, 0)) == -7);

  std::string short_row = write_temp("chi3_test_h3_bad1.txt", "1,2,3\n");
  H3Provider fresh;
  CHECK_THROWS_AS(fresh.load_extension(short_row), std::runtime_error);

  std::string not_int = write_temp("chi3_test_h3_bad2.txt", "1,0,0,x\n");
  CHECK_THROWS_AS(fresh.load_extension(not_int), std::runtime_error);

  std::string not_sorted = write_temp("chi3_test_h3_bad3.txt", "1,2,0,5\n");
  CHECK_THROWS_AS(fresh.load_extension(not_sorted), std::invalid_argument);

  CHECK_THROWS_AS(fresh.load_extension("/tmp/chi3_does_not_exist.txt"), std::runtime_error);
}

TEST_CASE("genus-2 provider lookups") {
  M2Provider empty;
  CHECK(empty.lookup(Partition2(2, 1)) == 0);  // odd weight
  CHECK(empty.covers(Partition2(2, 1)));
  CHECK_FALSE(empty.covers(Partition2(0, 0)));
  CHECK_THROWS_AS(empty.lookup(Partition2(0, 0)), CoverageError);

  std::string path = write_temp("chi3_test_m2_ext.txt", "0,0,1\n2,0,-1\n");
  M2Provider loaded;
  loaded.load_extension(path);
  CHECK(loaded.lookup(Partition2(0, 0)) == 1);
  CHECK(loaded.lookup(Partition2(2, 0)) == -1);
  CHECK_FALSE(loaded.covers(Partition2(1, 1)));
}

TEST_CASE("full genus-3 moduli values") {
  H3Provider h3;
  CHECK(euler_m3(Partition(0, 0, 0), h3) == 3);
  CHECK(euler_m3(Partition(6, 0, 0), h3) == -1);
  CHECK(euler_m3(Partition(8, 2, 0), h3) == -6);
  CHECK(euler_m3(Partition(4, 1, 0), h3) == 2);  // odd: hyperelliptic part is 0
  CHECK(euler_m3(Partition(40, 0, 0), h3) == -568);
  CHECK_THROWS_AS(euler_m3(Partition(12, 0, 0), h3), CoverageError);
}

TEST_CASE("genus-2 bootstrap solves and validates") {
  M2Provider m2 = bootstrap_m2(default_m2_anchors());
  CHECK(m2.lookup(Partition2(0, 0)) == 1);
  for (int w = 0; w <= 10; w += 2)
    for (const Partition2& mu : partitions2_of_weight(w)) {
      CAPTURE(mu.str());
      CHECK(m2.covers(mu));
    }
  CHECK(m2.table().size() == 21);

  // The greedy subset choice must not affect the solution.
  M2Provider reversed = bootstrap_m2(default_m2_anchors(), true);
  CHECK(m2.table() == reversed.table());
}
