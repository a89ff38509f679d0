#include <doctest.h>

#include "hypsurf/cosets.hpp"
#include "support.hpp"

using namespace hypsurf;

namespace {

Word w2(const std::string& s) { return parse_word(s, 2); }

std::vector<Word> parity_kernel() {
  std::vector<Word> out;
  for (const char* s : {"b1", "a2", "b2", "a1^2", "a1 b1 a1^-1", "a1 a2 a1^-1", "a1 b2 a1^-1"}) out.push_back(w2(s));
  return out;
}

void check_complete_and_consistent(const CosetTable& t, const SurfacePresentation& p, const std::vector<Word>& gens) {
  REQUIRE(t.closed());
  CHECK(static_cast<int>(t.rows.size()) == t.index());
  for (int c = 0; c < t.index(); ++c) {
    for (int x = 0; x < t.columns; ++x) {
      int d = t.rows[c][x];
      REQUIRE(d >= 0);
      REQUIRE(d < t.index());
      CHECK(t.rows[d][inverse_letter(x)] == c);
    }
    CHECK(trace_word(t, c, p.relator()) == c);
  }
  for (const Word& g : gens) CHECK(trace_word(t, 0, g) == 0);
}

}  // namespace

TEST_CASE("whole group has index 1") {
  SurfacePresentation p(2);
  std::vector<Word> gens{w2("a1"), w2("b1"), w2("a2"), w2("b2")};
  auto t = coset_enumerate(p, gens);
  CHECK(t.index() == 1);
  check_complete_and_consistent(t, p, gens);
}

TEST_CASE("parity kernel has index 2") {
  SurfacePresentation p(2);
  auto gens = parity_kernel();
  auto t = coset_enumerate(p, gens);
  CHECK(t.index() == 2);
  check_complete_and_consistent(t, p, gens);
  // a1 swaps the cosets, every other generator fixes both.
  auto perms = letter_permutations(t);
  CHECK(perms[letter_a(1)] == std::vector<int>{1, 0});
  CHECK(perms[letter_a(1, true)] == std::vector<int>{1, 0});
  for (Letter l : {letter_b(1), letter_a(2), letter_b(2)}) CHECK(perms[l] == std::vector<int>{0, 1});
  // Every subgroup generator acts trivially on both cosets.
  for (const Word& g : gens)
    for (int c = 0; c < 2; ++c) CHECK(trace_word(t, c, g) == c);
}

TEST_CASE("cyclic subgroup exhausts the budget") {
  SurfacePresentation p(2);
  auto t = coset_enumerate(p, {w2("a1")}, 10000);
  CHECK_FALSE(t.closed());
  CHECK(t.status == CosetTable::Status::CutoffExceeded);
  CHECK(t.index() == -1);
  CHECK(t.live_cosets <= 10000);
  CHECK(t.rows.empty());
}

TEST_CASE("larger finite indices") {
  SurfacePresentation p(2);
  // Kernel of a1 -> 1 mod 3, other generators -> 0.
  std::vector<Word> gens{w2("a1^3"), w2("b1"), w2("a2"), w2("b2"), w2("a1 b1 a1^-1"), w2("a1 a2 a1^-1"),
                         w2("a1 b2 a1^-1"), w2("a1^2 b1 a1^-2"), w2("a1^2 a2 a1^-2"), w2("a1^2 b2 a1^-2")};
  auto t = coset_enumerate(p, gens);
  CHECK(t.index() == 3);
  check_complete_and_consistent(t, p, gens);
  // Kernel of a1, a2 -> Z/2 x Z/2 (Schreier generators over 1, a1, a2, a1 a2): index 4.
  std::vector<Word> mod2;
  for (const char* s : {"b1", "b2", "a1^2", "a1 b1 a1^-1", "a1 b2 a1^-1", "a2 a1 a2^-1 a1^-1", "a2^2", "a2 b1 a2^-1",
                        "a2 b2 a2^-1", "a1 a2 a1 a2^-1", "a1 a2^2 a1^-1", "a1 a2 b1 a2^-1 a1^-1",
                        "a1 a2 b2 a2^-1 a1^-1"})
    mod2.push_back(free_reduce(w2(s)));
  auto t4 = coset_enumerate(p, mod2);
  CHECK(t4.index() == 4);
  check_complete_and_consistent(t4, p, mod2);
}

TEST_CASE("enumeration is deterministic") {
  SurfacePresentation p(2);
  auto a = coset_enumerate(p, parity_kernel());
  auto b = coset_enumerate(p, parity_kernel());
  CHECK(a.rows == b.rows);
  CHECK(a.live_cosets == b.live_cosets);
}

TEST_CASE("bad subgroup words") {
  SurfacePresentation p(2);
  CHECK_THROWS_AS(coset_enumerate(p, {w2("a1 a1^-1")}), DomainError);
  CHECK_THROWS_AS(coset_enumerate(p, {Word{9}}), DomainError);
  CHECK_THROWS_AS(coset_enumerate(p, {Word{-1}}), DomainError);
}

TEST_CASE("quotient_genus examples and index-chi consistency") {
  CHECK(quotient_genus(2, 1) == 2);
  CHECK(quotient_genus(2, 2) == 3);
  CHECK(quotient_genus(3, 3) == 7);
  for (int g = 2; g <= 5; ++g)
    for (int n = 1; n <= 6; ++n) CHECK(n * (2 - 2 * g) == 2 - 2 * quotient_genus(g, n));
}

TEST_CASE("images of the shipped homomorphisms generate the base") {
  SurfacePresentation p(2);
  for (const auto& f : {mk_pinch(3, 2), mk_pinch(4, 2), mk_doubling(2), identity_hom(2)}) {
    std::vector<Word> gens;
    for (const Word& w : f.images)
      if (!w.empty()) gens.push_back(w);
    CHECK(coset_enumerate(p, gens).index() == 1);
  }
}
