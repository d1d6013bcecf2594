#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include <zlat/fixtures.hpp>
#include <zlat/ztheory.hpp>

#include "support/convert.hpp"
#include "support/oracles.hpp"

using namespace zlat;
using testutil::set_of;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  REQUIRE(false);
  return errc::bad_param;
}

element_id id_of(const mult_lattice& ml, std::string_view label) {
  return *ml.lattice().find_label(label);
}

} // namespace

TEST_CASE("z-element sets per fixture") {
  auto c3 = fixture_by_name("C3");
  CHECK(z_elements(c3) == set_of(c3, {"m", "1"}));

  auto b4 = fixture_by_name("B4");
  CHECK(z_elements(b4) == b4.lattice().universe());

  auto z8 = fixture_by_name("Z8");
  CHECK(z_elements(z8) == set_of(z8, {"(1)", "(2)"}));

  auto d12 = fixture_by_name("D12");
  CHECK(z_elements(d12) == set_of(d12, {"(1)", "(2)", "(3)", "(6)"}));
}

TEST_CASE("the three z forms agree with the reference pair form") {
  for (const auto& name : fixture_names()) {
    auto ml = fixture_by_name(name);
    auto r = testutil::to_rel(ml.lattice());
    for (element_id x : ml.lattice().universe()) {
      bool lib = is_z_element(ml, x);
      CHECK(lib == oracle::is_z_pair_form(r, x));
      CHECK(lib == oracle::is_z_equal_form(r, x));
      auto prof = z_classify(ml, x);
      CHECK(lib == (prof.little_m == x));
      CHECK(lib == (prof.cz == x));
    }
  }
}

TEST_CASE("maximal covers and closures") {
  auto d12 = fixture_by_name("D12");
  auto [m4, lm4] = maximal_cover(d12, id_of(d12, "(4)"));
  CHECK(m4 == set_of(d12, {"(2)"}));
  CHECK(lm4 == id_of(d12, "(2)"));
  auto [mb, lmb] = maximal_cover(d12, d12.bottom());
  CHECK(mb == set_of(d12, {"(2)", "(3)"}));
  CHECK(lmb == id_of(d12, "(6)"));
  auto [mt, lmt] = maximal_cover(d12, d12.top());
  CHECK(mt.empty());
  CHECK(lmt == d12.top());

  CHECK(z_closure(d12, d12.bottom()) == id_of(d12, "(6)"));
  CHECK(z_closure(d12, id_of(d12, "(4)")) == id_of(d12, "(2)"));
  CHECK(z_closure(d12, id_of(d12, "(6)")) == id_of(d12, "(6)"));

  auto z8 = fixture_by_name("Z8");
  CHECK(z_closure(z8, z8.bottom()) == id_of(z8, "(2)"));
  CHECK(z_closure(z8, id_of(z8, "(4)")) == id_of(z8, "(2)"));

  for (const auto& name : fixture_names()) {
    auto ml = fixture_by_name(name);
    auto r = testutil::to_rel(ml.lattice());
    for (element_id x : ml.lattice().universe()) {
      CHECK(static_cast<int>(z_closure(ml, x)) == oracle::z_closure(r, x));
      CHECK(static_cast<int>(z_classify(ml, x).little_m) == oracle::little_m(r, x));
    }
  }
}

TEST_CASE("z profiles on D12") {
  auto d12 = fixture_by_name("D12");
  auto p2 = z_classify(d12, id_of(d12, "(2)"));
  CHECK(p2.is_z);
  CHECK(p2.z_prime);
  CHECK(p2.z_semiprime);
  CHECK(p2.z_strongly_irreducible);
  CHECK(p2.strong_z);
  CHECK(p2.basic_z);

  auto p6 = z_classify(d12, id_of(d12, "(6)"));
  CHECK(p6.is_z);
  CHECK(!p6.z_prime);                 // (2)*(3) = (12) <= (6), neither factor below
  CHECK(!p6.z_strongly_irreducible);  // (2) /\ (3) = (6)
  CHECK(!p6.z_irreducible);
  CHECK(p6.basic_z);

  auto p4 = z_classify(d12, id_of(d12, "(4)"));
  CHECK(!p4.is_z);
  CHECK(!p4.z_prime); // z flags require a z-element
  CHECK(!p4.strong_z);
  CHECK(p4.little_m == id_of(d12, "(2)"));
  CHECK(p4.cz == id_of(d12, "(2)"));

  auto pt = z_classify(d12, d12.top());
  CHECK(pt.is_z);
  CHECK(!pt.z_prime); // z-primes are proper
}

TEST_CASE("z prime and z irreducible sets") {
  auto d12 = fixture_by_name("D12");
  CHECK(z_primes(d12) == set_of(d12, {"(2)", "(3)"}));
  CHECK(minimal_z_primes(d12) == set_of(d12, {"(2)", "(3)"}));
  CHECK(z_irreducibles(d12) == set_of(d12, {"(2)", "(3)"}));
  CHECK(closed_set_Vz(d12, id_of(d12, "(6)")) == set_of(d12, {"(2)", "(3)"}));
  CHECK(closed_set_Vz(d12, id_of(d12, "(2)")) == set_of(d12, {"(2)"}));

  auto c3 = fixture_by_name("C3");
  CHECK(z_primes(c3) == set_of(c3, {"m"}));
  CHECK(minimal_z_primes(c3) == set_of(c3, {"m"}));

  auto z8 = fixture_by_name("Z8");
  CHECK(z_primes(z8) == set_of(z8, {"(2)"}));

  auto b4 = fixture_by_name("B4");
  CHECK(z_primes(b4) == set_of(b4, {"a", "b"}));

  for (const auto& name : fixture_names()) {
    auto ml = fixture_by_name(name);
    auto expect = oracle::z_primes_of(testutil::to_rel(ml.lattice()), testutil::to_table(ml));
    CHECK(testutil::as_ints(z_primes(ml)) == expect);
  }
}

TEST_CASE("strong and basic z flags differ on Z8") {
  auto z8 = fixture_by_name("Z8");
  auto p2 = z_classify(z8, id_of(z8, "(2)"));
  CHECK(p2.strong_z);
  CHECK(p2.basic_z);
  auto p4 = z_classify(z8, id_of(z8, "(4)"));
  CHECK(!p4.strong_z); // m_{(4)} = (2) != (4)
  CHECK(!p4.basic_z);
  auto pt = z_classify(z8, z8.top());
  CHECK(pt.strong_z); // empty maximal cover, meet = top
}

TEST_CASE("structure level z predicates") {
  auto c3 = lattice_z_predicates(fixture_by_name("C3"));
  CHECK(c3.szi);
  CHECK(!c3.pz); // the bottom is prime but not a z-element
  CHECK(c3.z_join_closed);

  auto b4 = lattice_z_predicates(fixture_by_name("B4"));
  CHECK(b4.szi);
  CHECK(b4.pz);
  CHECK(b4.z_join_closed);

  auto z8 = lattice_z_predicates(fixture_by_name("Z8"));
  CHECK(!z8.szi); // m_{(4)} = (2) with (2)*(2) = (4), not idempotent
  CHECK(z8.pz);
  CHECK(z8.z_join_closed);

  auto d12 = lattice_z_predicates(fixture_by_name("D12"));
  CHECK(!d12.szi);
  CHECK(d12.pz);
  CHECK(d12.z_join_closed);
}

TEST_CASE("z irreducible decompositions") {
  auto d12 = fixture_by_name("D12");
  CHECK(z_irreducible_decomposition(d12, id_of(d12, "(6)")) ==
        std::vector<element_id>{id_of(d12, "(2)"), id_of(d12, "(3)")});
  CHECK(z_irreducible_decomposition(d12, d12.top()).empty());
  CHECK(z_irreducible_decomposition(d12, id_of(d12, "(2)")) ==
        std::vector<element_id>{id_of(d12, "(2)")});
  CHECK(code_of([&] { z_irreducible_decomposition(d12, id_of(d12, "(4)")); }) ==
        errc::not_z_element);

  auto b4 = fixture_by_name("B4");
  CHECK(z_irreducible_decomposition(b4, b4.bottom()) ==
        std::vector<element_id>{id_of(b4, "a"), id_of(b4, "b")});

  // Every fixture decomposition must meet back to its element, use only
  // z-irreducible members and carry no redundant member.
  for (const auto& name : fixture_names()) {
    auto ml = fixture_by_name(name);
    for (element_id x : z_elements(ml)) {
      auto parts = z_irreducible_decomposition(ml, x);
      element_set s;
      for (element_id p : parts) {
        CHECK(z_classify(ml, p).z_irreducible);
        s.insert(p);
      }
      CHECK(ml.lattice().meet_of(s) == x);
      for (element_id drop : s) {
        auto rest = s;
        rest.erase(drop);
        CHECK(ml.lattice().meet_of(rest) != x);
      }
    }
  }
}

TEST_CASE("quotient structure on D12") {
  auto d12 = fixture_by_name("D12");
  auto q = z_quotient(d12);
  CHECK(q.carrier == set_of(d12, {"(1)", "(2)", "(3)", "(6)"}));
  CHECK(q.structure.size() == 4);
  REQUIRE(q.carrier_of.size() == 4);

  auto qi = [&](std::string_view label) { return q.index_of[id_of(d12, label)]; };
  // (2) (.) (3) = cz((2)*(3)) = cz((12)) = (6)
  CHECK(q.odot[qi("(2)") * 4 + qi("(3)")] == qi("(6)"));
  // (2) (.) (2) = cz((4)) = (2): the quotient multiplication is idempotent.
  CHECK(q.odot[qi("(2)") * 4 + qi("(2)")] == qi("(2)"));
  CHECK(q.projection[id_of(d12, "(12)")] == qi("(6)"));
  CHECK(q.projection[id_of(d12, "(4)")] == qi("(2)"));

  // The quotient of a structure whose product escapes Z is still a frame.
  CHECK(is_frame(q.structure));
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 4; ++j)
      CHECK(q.odot[i * 4 + j] == q.structure.meet(i, j));
}

TEST_CASE("quotient of Z8 is the two chain") {
  auto z8 = fixture_by_name("Z8");
  auto q = z_quotient(z8);
  CHECK(q.carrier == set_of(z8, {"(1)", "(2)"}));
  CHECK(q.structure.size() == 2);
  CHECK(is_frame(q.structure));
  // Projection is onto: both carrier points are hit.
  std::vector<bool> hit(2, false);
  for (element_id x : z8.lattice().universe()) hit[q.projection[x]] = true;
  CHECK(hit == std::vector<bool>(2, true));
}

TEST_CASE("quotient vee matches closures of joins") {
  for (const auto& name : fixture_names()) {
    auto ml = fixture_by_name(name);
    auto q = z_quotient(ml);
    unsigned k = q.structure.size();
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; j < k; ++j) {
        element_id a = q.carrier_of[i], b = q.carrier_of[j];
        CHECK(q.carrier_of[q.vee[i * k + j]] == z_closure(ml, ml.join(a, b)));
        CHECK(q.carrier_of[q.odot[i * k + j]] == z_closure(ml, ml.mul(a, b)));
      }
  }
}

TEST_CASE("misc guard rails") {
  auto one = chain_frame(1);
  CHECK(code_of([&] { minimal_z_primes(one); }) == errc::trivial_lattice);
  CHECK(z_elements(one) == element_set{0});

  auto c3 = fixture_by_name("C3");
  CHECK(code_of([&] { z_closure(c3, 9); }) == errc::foreign_element);
  CHECK(code_of([&] { z_classify(c3, 9); }) == errc::foreign_element);
}
