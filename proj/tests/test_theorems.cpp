#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include <zlat/fixtures.hpp>
#include <zlat/theorems.hpp>

using namespace zlat;

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

const theorem_report& report_for(const std::vector<theorem_report>& reports, theorem_id id) {
  auto it = std::find_if(reports.begin(), reports.end(),
                         [&](const theorem_report& r) { return r.id == id; });
  REQUIRE(it != reports.end());
  return *it;
}

} // namespace

TEST_CASE("catalog is stable") {
  auto cat = theorem_catalog();
  std::vector<std::string_view> codes;
  for (const auto& info : cat) codes.push_back(info.code);
  CHECK(codes == std::vector<std::string_view>{
                     "MULT-BASICS", "MAX-PRIME", "Z-MEETS", "Z-RESIDUAL", "Z-ANNIHILATOR",
                     "Z-PRODUCT-SZI", "CZ-LAWS", "CZ-JOIN-EQ", "PZ-CHAR", "NUCLEUS-SZI",
                     "QUOTIENT-FRAME", "REGULAR-STRONGZ", "SEMISIMPLE-DICHOTOMY",
                     "QUASILOCAL-PZ", "HOM-INV", "HOM-KERNEL", "EQ-IRR", "EQ-PRIME",
                     "EQ-SEMIPRIME", "EQ-PRIMARY", "VPSS", "Z-DECOMP", "MIN-ZPRIME",
                     "MIN-ZSI", "ZCHAIN"});
  for (const auto& info : cat) {
    CHECK(!info.statement.empty());
    CHECK(theorem_from_code(info.code) == info.id);
    CHECK(theorem_about(info.id).code == info.code);
  }
  CHECK(code_of([] { theorem_from_code("NO-SUCH"); }) == errc::unknown_theorem_id);
}

TEST_CASE("verdict names") {
  CHECK(verdict_name(verdict::pass) == "pass");
  CHECK(verdict_name(verdict::fail) == "fail");
  CHECK(verdict_name(verdict::not_applicable) == "not-applicable");
}

TEST_CASE("no fixture fails any theorem") {
  for (const auto& name : fixture_names()) {
    auto ml = fixture_by_name(name);
    auto reports = run_theorems(ml);
    CHECK(reports.size() == theorem_catalog().size());
    for (const auto& r : reports) {
      INFO(name << " " << theorem_about(r.id).code);
      CHECK(r.result != verdict::fail);
      CHECK(r.structure == name);
      if (r.result != verdict::fail) {
        CHECK(r.law.empty());
        CHECK(r.witness.empty());
      }
    }
  }
}

TEST_CASE("hypothesis gating per fixture") {
  auto on = [](const char* fixture, theorem_id id) {
    auto ml = fixture_by_name(fixture);
    std::vector<theorem_id> sel{id};
    return run_theorems(ml, sel).at(0);
  };

  // szi holds on C3 and B4 but not on Z8 or D12.
  CHECK(on("C3", theorem_id::eq_prime).result == verdict::pass);
  CHECK(on("B4", theorem_id::eq_prime).result == verdict::pass);
  CHECK(on("Z8", theorem_id::eq_prime).result == verdict::not_applicable);
  CHECK(on("D12", theorem_id::eq_prime).result == verdict::not_applicable);
  CHECK(on("Z8", theorem_id::eq_prime).detail ==
        "hypothesis not satisfied: every m-image is idempotent (szi)");
  CHECK(on("C3", theorem_id::eq_prime).detail ==
        "hypothesis satisfied: every m-image is idempotent (szi)");

  // Only B4 is semisimple or regular among the fixtures.
  CHECK(on("B4", theorem_id::z_annihilator).result == verdict::pass);
  CHECK(on("B4", theorem_id::semisimple_dichotomy).result == verdict::pass);
  CHECK(on("B4", theorem_id::regular_strongz).result == verdict::pass);
  CHECK(on("C3", theorem_id::regular_strongz).result == verdict::not_applicable);
  CHECK(on("Z8", theorem_id::semisimple_dichotomy).result == verdict::not_applicable);

  // quasi-local + pz: fails only on C3 (prime bottom is not a z-element).
  CHECK(on("C3", theorem_id::quasilocal_pz).result == verdict::not_applicable);
  CHECK(on("Z8", theorem_id::quasilocal_pz).result == verdict::pass);
  CHECK(on("D12", theorem_id::quasilocal_pz).result == verdict::pass);

  // Chains are z-totally-irreducible; B4 is not (its bottom is a proper
  // z-element equal to a meet of incomparable z-elements).
  CHECK(on("C3", theorem_id::zchain).result == verdict::pass);
  CHECK(on("Z8", theorem_id::zchain).result == verdict::pass);
  CHECK(on("B4", theorem_id::zchain).result == verdict::not_applicable);
  CHECK(on("D12", theorem_id::zchain).result == verdict::not_applicable);

  // Unconditional theorems never report not_applicable.
  for (const auto& name : fixture_names()) {
    CHECK(on(name.c_str(), theorem_id::mult_basics).result == verdict::pass);
    CHECK(on(name.c_str(), theorem_id::z_product_szi).result == verdict::pass);
    CHECK(on(name.c_str(), theorem_id::cz_laws).result == verdict::pass);
  }
}

TEST_CASE("selection subsets and bad selections") {
  auto c3 = fixture_by_name("C3");
  std::vector<theorem_id> sel{theorem_id::z_meets, theorem_id::max_prime};
  auto reports = run_theorems(c3, sel);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].id == theorem_id::z_meets);
  CHECK(reports[1].id == theorem_id::max_prime);
}

TEST_CASE("hom diagnostics surface in the detail field") {
  auto d12 = fixture_by_name("D12");
  std::vector<theorem_id> sel{theorem_id::hom_inv, theorem_id::hom_kernel};
  auto reports = run_theorems(d12, sel);
  CHECK(reports[0].result == verdict::pass);
  CHECK(reports[0].detail.find("50/66") != std::string::npos);
  CHECK(reports[0].detail.find("constant-top") != std::string::npos);
  CHECK(reports[1].detail.find("40/66") != std::string::npos);
}

TEST_CASE("a broken table fails MULT-BASICS with a recheckable witness") {
  auto lat = validate_lattice(4, std::vector<std::pair<unsigned, unsigned>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                              {"0", "a", "b", "1"});
  auto t = mult_table::meet_table(lat);
  t.set(1, 2, 3); // a*b = 1, above the meet
  auto broken = mult_lattice::unchecked(lat, t, "broken");

  std::vector<theorem_id> sel{theorem_id::mult_basics};
  auto reports = run_theorems(broken, sel);
  REQUIRE(reports.size() == 1);
  const auto& r = reports[0];
  CHECK(r.result == verdict::fail);
  CHECK(!r.law.empty());
  CHECK(!r.witness.empty());
  CHECK(recheck_witness(broken, r));

  // A doctored witness no longer reproduces the violation.
  auto doctored = r;
  doctored.witness.assign(doctored.witness.size(), broken.top());
  CHECK(!recheck_witness(broken, doctored));

  // A report with an unknown law cannot be rechecked.
  auto bogus = r;
  bogus.law = "no-such-law";
  CHECK(code_of([&] { recheck_witness(broken, bogus); }) == errc::bad_param);
}

TEST_CASE("full run on a broken structure reports the failure once per violated theorem") {
  auto lat = validate_lattice(3, std::vector<std::pair<unsigned, unsigned>>{{0, 1}, {1, 2}});
  mult_table t = mult_table::meet_table(lat);
  t.set(1, 1, 2); // e1*e1 = top, violates product-below-factors
  auto broken = mult_lattice::unchecked(lat, t, "bad3");
  auto reports = run_theorems(broken);
  const auto& basics = report_for(reports, theorem_id::mult_basics);
  CHECK(basics.result == verdict::fail);
  CHECK(recheck_witness(broken, basics));
  unsigned fails = 0;
  for (const auto& r : reports) fails += r.result == verdict::fail;
  CHECK(fails >= 1);
}

TEST_CASE("pass reports carry hypothesis notes only when conditional") {
  auto b4 = fixture_by_name("B4");
  std::vector<theorem_id> sel{theorem_id::z_meets};
  CHECK(run_theorems(b4, sel).at(0).detail.empty());
  std::vector<theorem_id> sel2{theorem_id::eq_prime};
  CHECK(run_theorems(b4, sel2).at(0).detail ==
        "hypothesis satisfied: every m-image is idempotent (szi)");
}
