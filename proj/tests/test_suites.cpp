#include "doctest.h"

#include "linset/suites.hpp"

using namespace linset;

TEST_CASE("suite registry") {
  const auto& names = suite_names();
  CHECK(names.size() == 11);
  CHECK(names.front() == "dualbases");
  SuiteParams p;
  bool raised = false;
  try {
    run_suite("nope", p);
  } catch (const Error& e) {
    raised = e.kind() == ErrorKind::UnknownSuite;
    CHECK(e.witness().find("dualbases") != std::string::npos);
  }
  CHECK(raised);
}

TEST_CASE("small suites pass and report") {
  for (auto [q, n] : {std::pair<uint64_t, int>{2, 4}, {3, 4}, {4, 3}, {2, 5}}) {
    SuiteParams p;
    p.q = q;
    p.n = n;
    p.samples = 4;
    for (const char* s : {"dualbases", "projections", "weights", "scattered", "minsize", "duality"}) {
      auto r = run_suite(s, p);
      CHECK_MESSAGE(r.ok(), r.to_json().dump());
      auto j = r.to_json();
      CHECK(j["suite"] == s);
      CHECK(j["ok"] == true);
      for (const auto& c : r.checks) CHECK(c.total + c.notes.size() > 0);
    }
  }
}

TEST_CASE("two-weight suite at q=3") {
  SuiteParams p;
  p.q = 3;
  p.n = 4;
  p.samples = 6;
  auto r = run_suite("two-weight", p);
  CHECK_MESSAGE(r.ok(), r.to_json().dump());
}

TEST_CASE("a failing check keeps its witness") {
  Check c;
  c.add(true);
  c.add(false, {{"x", 1}});
  CHECK_FALSE(c.ok());
  CHECK(c.failures.size() == 1);
  CHECK(c.failures[0]["x"] == 1);
}
