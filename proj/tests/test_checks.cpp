#include <doctest.h>

#include "latcon/checks.hpp"
#include "latcon/error.hpp"
#include "latcon/filters.hpp"
#include "support.hpp"

using namespace support;

TEST_CASE("filter search counts") {
  CHECK(count_filters_by_search(chain(1)) == 1);
  CHECK(count_filters_by_search(named("N5")) == 5);
  CHECK(count_filters_by_search(div(30)) == 8);
  CHECK(count_ideals_by_search(named("K")) == 6);
}

TEST_CASE("single-lattice checks pass on the example lattices") {
  for (const char* name : {"B2", "M3", "N5", "K"}) {
    const Lattice l = named(name);
    CHECK(check_lattice_axioms(l, name).passed());
    CHECK(check_prime_remark(l, name).passed());
    CHECK(check_irreducibility_lemma(l, name).passed());
    CHECK(check_dilate(l, name).passed());
    CHECK(check_gcs_finite(l, name).passed());
  }
  CHECK(check_dilate(chain(4), "chain(4)").passed());
  CHECK(check_dilate(chain(2), "chain(2)").passed());
  CHECK(check_distributive(div(12), "div(12)").passed());
  CHECK(check_distributive(named("N5"), "N5").status == CheckStatus::skipped);
  CHECK(check_irreducibility_lemma(chain(1), "chain(1)").status == CheckStatus::skipped);
}

TEST_CASE("spectra of two-summand sums") {
  const Lattice l3 = chain(3);
  auto report = check_spechsum(l3, l3, "L3+L3");
  CHECK(report.passed());
  CHECK(report.details["predicted"] == 2);
  report = check_spechsum(l3, osum(named("B2"), chain(2)), "K");
  CHECK(report.passed());
  CHECK(report.details["prime_filters"] == 1);
  report = check_spechsum(named("N5"), named("N5"), "N5+N5");
  CHECK(report.passed());
  CHECK(report.details["prime_filters"] == 0);
  CHECK_THROWS_AS(check_spechsum(chain(2), l3, "small"), Error);
}

TEST_CASE("Con of two-summand sums: the three cases") {
  const Lattice l3 = chain(3);
  auto report = check_cghsum(l3, l3, "B2");
  CHECK(report.passed());
  CHECK(report.details["case"] == 2);
  report = check_cghsum(l3, chain(4), "N5");
  CHECK(report.passed());
  CHECK(report.details["case"] == 2);
  report = check_cghsum(l3, osum(named("B2"), chain(2)), "K");
  CHECK(report.passed());
  CHECK(report.details["case"] == 1);
  report = check_cghsum(named("N5"), named("B2"), "N5+B2");
  CHECK(report.passed());
  CHECK(report.details["case"] == 0);
  CHECK(report.details["con_size"] == 3);
  CHECK(check_hsum_counts(named("N5"), named("N5"), "N5+N5").passed());
}

TEST_CASE("sums of three or more") {
  const Lattice l3 = chain(3);
  const Lattice m3_family[] = {l3, l3, l3};
  CHECK(check_multi_hsum(m3_family, "M3").passed());
  const Lattice mixed[] = {l3, l3, chain(4)};
  CHECK(check_multi_hsum(mixed, "L3+L3+L4").passed());
  const Lattice n5 = named("N5");
  const Lattice n5s[] = {n5, n5, n5};
  const auto report = check_multi_hsum(n5s, "N5^3");
  CHECK(report.passed());
  CHECK(report.details["con_size"] == 9);
  const Lattice two[] = {l3, l3};
  CHECK_THROWS_AS(check_multi_hsum(two, "two"), Error);
}

TEST_CASE("caps turn into skips") {
  CheckCaps caps;
  caps.con.max_elements = 3;
  CHECK(check_prime_remark(named("N5"), "N5", caps).status == CheckStatus::skipped);
  caps = {};
  caps.max_dilate_input = 4;
  CHECK(check_dilate(named("N5"), "N5", caps).status == CheckStatus::skipped);
}

TEST_CASE("a corrupted meet table is reported with a witness") {
  const Lattice n5 = named("N5");
  const Lattice broken = detail::with_corrupted_meet(n5, n5.at("x"), n5.at("z"), n5.at("x"));
  const auto report = check_lattice_axioms(broken, "broken");
  CHECK(report.failed());
  CHECK(report.details.contains("witness"));
  CHECK(report.details["mismatches"].size() > 0);
}

TEST_CASE("suite runs") {
  SuiteConfig config;
  const auto reports = run_suite(config);
  CHECK(reports.size() > 100);
  for (const auto& r : reports) CHECK_MESSAGE(!r.failed(), r.check_name, " ", r.instance_descr);

  config.suites = {"dilate"};
  config.count = 0;
  config.max_size = 8;
  const auto dilated = run_suite(config);
  CHECK(dilated.size() == 12);
  for (const auto& r : dilated) CHECK(r.passed());

  config.suites = {"axioms"};
  config.inject_fault = true;
  const auto faulty = run_suite(config);
  const auto failed = std::count_if(faulty.begin(), faulty.end(),
                                    [](const CheckReport& r) { return r.failed(); });
  CHECK(failed >= 1);
  CHECK(render_reports(faulty, true).find("FAIL  axioms  fault:") != std::string::npos);

  config.suites = {"nonsense"};
  CHECK_THROWS_AS(run_suite(config), Error);
}
