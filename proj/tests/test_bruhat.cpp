#include "doctest.h"

#include "korbit/bruhat.hpp"
#include "korbit/error.hpp"
#include "oracles.hpp"

using namespace korbit;

namespace {
std::vector<int> vec(const Permutation& p) { return {p.entries().begin(), p.entries().end()}; }
Involution inv(const char* s) { return parse_involution(s); }
}  // namespace

TEST_CASE("bruhat_leq examples") {
  CHECK(bruhat_leq(parse_perm("2143"), parse_perm("4321")));
  CHECK_FALSE(bruhat_leq(parse_perm("1324"), parse_perm("2143")));
  CHECK_FALSE(bruhat_leq(parse_perm("2143"), parse_perm("1324")));
  const Permutation p = parse_perm("31524");
  CHECK(bruhat_leq(p, p));
  CHECK_THROWS_AS(bruhat_leq(parse_perm("21"), parse_perm("321")), Error);
}

TEST_CASE("bruhat_leq agrees with reflection chains on S_4") {
  const auto perms = oracle::all_perms(4);
  for (const auto& u : perms) {
    const auto up = oracle::bruhat_upset(u);
    for (const auto& v : perms) {
      CHECK(bruhat_leq(Permutation(u), Permutation(v)) == (up.count(v) > 0));
    }
  }
}

TEST_CASE("rank") {
  for (int m = 1; m <= 8; ++m) {
    CHECK(rank(w0(m)) == 0);
    CHECK(rank(Involution::identity(m)) == m * m / 4);
  }
  CHECK(rank(inv("3412")) == 1);
  CHECK(rank(inv("2143")) == 2);
  CHECK(rank(inv("1324")) == 3);
}

TEST_CASE("rank matches the set-based re-evaluation for m <= 7") {
  for (int m = 1; m <= 7; ++m) {
    for (const auto& pi : enumerate_involutions(m)) CHECK(rank(pi) == oracle::rank(vec(pi)));
  }
}

TEST_CASE("codim") {
  CHECK(codim(w0(6)) == 9);
  CHECK(codim(Involution::identity(6)) == 0);
  CHECK(codim(inv("3412")) == 3);
}

TEST_CASE("interval examples") {
  const Interval top = interval(w0(5));
  CHECK(top.size() == 1);
  CHECK(top.contains(w0(5)));
  CHECK(interval(Involution::identity(5)).size() == involution_count(5));

  const Interval I = interval(inv("2143"));
  std::vector<std::string> names;
  for (const auto& v : I.members()) names.push_back(format_perm(v));
  CHECK(names == std::vector<std::string>{"2143", "3412", "4231", "4321"});
  CHECK(I.rank_histogram() == std::map<int, int>{{0, 1}, {1, 2}, {2, 1}});
}

TEST_CASE("intervals agree with the reflection-chain oracle and nest") {
  for (int m = 2; m <= 5; ++m) {
    const auto invs = enumerate_involutions(m);
    for (const auto& pi : invs) {
      const Interval I = interval(pi);
      std::set<std::vector<int>> got;
      for (const auto& v : I.members()) got.insert(vec(v));
      CHECK(got == oracle::interval(vec(pi)));
      CHECK(I.contains(pi));
      CHECK(I.contains(w0(m)));
      // pi has the largest rank, w0 the smallest.
      CHECK(I.rank_histogram().rbegin()->first == rank(pi));
      CHECK(I.rank_histogram().begin()->first == 0);
      for (const auto& other : invs) {
        if (!bruhat_leq(other, pi)) continue;
        const Interval J = interval(other);
        for (const auto& v : I.members()) CHECK(J.contains(v));
      }
    }
  }
}

TEST_CASE("interval guards the desk-scale size") {
  CHECK_THROWS_AS(interval(w0(13)), Error);
  try {
    involution_table(13);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}
