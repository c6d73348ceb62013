#include <doctest.h>

#include "thetakit/errors.hpp"
#include "thetakit/identities.hpp"
#include "thetakit/parallel.hpp"

using namespace thetakit;

TEST_CASE("range spec parsing") {
  const RangeSpec s = RangeSpec::parse("# desk run\ng_max = 3\nn_max=5\nh_list=1, 3,9\n\nd_list=1,3\n");
  CHECK(s.g_max == 3);
  CHECK(s.n_max == 5);
  CHECK(s.h_list == std::vector<long>{1, 3, 9});
  CHECK(s.d_list == std::vector<long>{1, 3});

  const RangeSpec d = RangeSpec::parse("");
  CHECK(d.g_max == 2);
  CHECK(d.d_list.empty());

  CHECK_THROWS_AS(RangeSpec::parse("g_max 2"), HypothesisError);
  CHECK_THROWS_AS(RangeSpec::parse("colour=blue"), HypothesisError);
  CHECK_THROWS_AS(RangeSpec::parse("n_max=ten"), HypothesisError);
  CHECK_THROWS_AS(RangeSpec::parse("h_list=3,4"), HypothesisError);
  CHECK_THROWS_AS(RangeSpec::parse("g_max=0"), HypothesisError);
  CHECK_THROWS_AS(RangeSpec::load("/nonexistent/range.txt"), HypothesisError);
}

TEST_CASE("suites pass on a small range and ignore the thread count") {
  const RangeSpec s = RangeSpec::parse("g_max=2\nn_max=4\nh_list=1,3\n");
  set_thread_count(1);
  const auto one = run_identities(s);
  set_thread_count(3);
  const auto three = run_identities(s);
  set_thread_count(1);
  REQUIRE(one.size() == three.size());
  CHECK(one.size() == 11);
  for (std::size_t i = 0; i < one.size(); ++i) {
    CAPTURE(one[i].name);
    CHECK(one[i].passed());
    CHECK(one[i].cases > 0);
    CHECK(one[i].skipped == 0);
    CHECK(one[i].lines == three[i].lines);
  }
}
