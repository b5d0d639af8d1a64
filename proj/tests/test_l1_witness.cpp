#include <doctest.h>

#include "lpembed/l1_witness.hpp"
#include "lpembed/metric_space.hpp"

using namespace lpembed;

TEST_CASE("dyadic intervals follow the binary digits") {
  CHECK(interval_of_string(DyadicString::from_string("0")).left == Rational(0));
  CHECK(interval_of_string(DyadicString::from_string("0")).right == Rational(1, 2));
  CHECK(interval_of_string(DyadicString::from_string("11")).left == Rational(3, 4));
  CHECK(interval_of_string(DyadicString::from_string("11")).right == Rational(1));
  // the empty string is the whole interval
  CHECK(interval_of_string(DyadicString{}).left == Rational(0));
  CHECK(interval_of_string(DyadicString{}).right == Rational(1));
}

TEST_CASE("dyadic intervals nest") {
  const auto outer = interval_of_string(DyadicString::from_string("10"));
  for (const char* child : {"100", "101"}) {
    const auto inner = interval_of_string(DyadicString::from_string(child));
    CHECK(inner.left >= outer.left);
    CHECK(inner.right <= outer.right);
  }
}

TEST_CASE("psi is the canonical positive injection") {
  CHECK(psi(DyadicString{}) == 1);
  CHECK(psi(DyadicString::from_string("0")) == 2);
  CHECK(psi(DyadicString::from_string("1")) == 3);
  CHECK(psi(DyadicString::from_string("10")) == 6);
}

TEST_CASE("psi never collides across lengths up to 10") {
  std::set<int64_t> seen;
  for (size_t len = 0; len <= 10; ++len)
    for (const auto& s : DyadicString::all_of_length(len)) {
      const int64_t v = psi(s);
      CHECK(v > 0);
      CHECK(seen.insert(v).second);
    }
}

TEST_CASE("member norms are exact") {
  CHECK(make_zero_member().norm() == Rational(0));
  CHECK(make_d_member().norm() == Rational(1));
  for (const char* bits : {"0", "1", "01", "110", "0010"}) {
    const auto m = make_f_member(DyadicString::from_string(bits));
    const unsigned len = static_cast<unsigned>(std::string(bits).size());
    CHECK(m.norm() == dyadic_unit(len) + len);
  }
}

TEST_CASE("pairwise distance identities") {
  const auto d = make_d_member();
  const auto zero = make_zero_member();
  const auto f0 = make_f_member(DyadicString::from_string("0"));
  const auto f1 = make_f_member(DyadicString::from_string("1"));

  CHECK(l1_distance(d, zero) == Rational(1));
  // ||f_0 - d|| = ||f_0|| + ||d|| - 2 * 2^-1 = 3/2 + 1 - 1
  CHECK(l1_distance(f0, d) == Rational(3, 2));
  // disjoint supports at equal length
  CHECK(l1_distance(f0, f1) == Rational(3));
  CHECK(l1_distance(f0, f1) == f0.norm() + f1.norm());
}

TEST_CASE("same-length members are disjointly supported, different lengths overlap") {
  for (int len = 1; len <= 5; ++len) {
    const auto strings = DyadicString::all_of_length(static_cast<size_t>(len));
    for (size_t a = 0; a < strings.size(); ++a)
      for (size_t b = a + 1; b < strings.size(); ++b) {
        const auto fa = make_f_member(strings[a]);
        const auto fb = make_f_member(strings[b]);
        CHECK(l1_distance(fa, fb) == fa.norm() + fb.norm());
      }
  }
  // prefix strings share dyadic mass: strict inequality
  const auto f0 = make_f_member(DyadicString::from_string("0"));
  const auto f00 = make_f_member(DyadicString::from_string("00"));
  CHECK(l1_distance(f0, f00) < f0.norm() + f00.norm());
}

TEST_CASE("build_l1_space at max_len 1") {
  const auto ws = build_l1_space(1);
  REQUIRE(ws.members.size() == 4);
  CHECK(ws.members[0].label == "zero");
  CHECK(ws.members[1].label == "d");
  CHECK(ws.members[2].label == "f_0");
  CHECK(ws.members[3].label == "f_1");
  CHECK(ws.space.exact());
  CHECK(ws.space.rd(2, 3) == Rational(3));
  CHECK(ws.space.rd(1, 2) == Rational(3, 2));
  CHECK(ws.space.rd(1, 3) == Rational(3, 2));
  CHECK(validate_space(ws.space).empty());
}

TEST_CASE("build_l1_space member counts are 2^(max_len+1)") {
  CHECK(build_l1_space(0).members.size() == 2);
  CHECK(build_l1_space(2).members.size() == 8);
  CHECK(build_l1_space(3).members.size() == 16);
}

TEST_CASE("build_l1_space honors the cardinality cap") {
  CHECK_THROWS_WITH_AS(build_l1_space(4, 16), doctest::Contains("cap"), std::runtime_error);
}

TEST_CASE("the full rational matrix is a metric, exactly") {
  const auto ws = build_l1_space(4);
  CHECK(validate_space(ws.space).empty());
}

TEST_CASE("decomposition identities hold through level 6") {
  const auto report = verify_decomposition_identities(6);
  CHECK(report.all_ok);
  for (const auto& lvl : report.levels) {
    CHECK(lvl.tiles_unit_interval);
    CHECK(lvl.sums_to_d);
    CHECK(lvl.norms_match);
  }
}
