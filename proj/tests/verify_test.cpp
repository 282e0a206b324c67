#include <gtest/gtest.h>

#include "heis/error.hpp"
#include "heis/verify.hpp"

using namespace heis;

TEST(Verify, AllTheoremsPassOnSmallCases) {
  for (const auto& id : verify::theorem_ids()) {
    const int n = id == "tech-lem1" ? 2 : 3;
    for (int q : {2, 3}) {
      const auto checks = verify::run(id, n, q);
      EXPECT_FALSE(checks.empty()) << id;
      for (const auto& c : checks) EXPECT_TRUE(c.pass) << id << " " << c.name << ": " << c.expected << " vs " << c.computed;
    }
  }
}

TEST(Verify, UnknownTheorem) { EXPECT_THROW(verify::run("nope", 3, 2), UnknownFamily); }
