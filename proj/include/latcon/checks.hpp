#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "latcon/congruence.hpp"
#include "latcon/lattice.hpp"

namespace latcon {

enum class CheckStatus { passed, failed, skipped };

std::string_view to_string(CheckStatus status) noexcept;

/// Outcome of one check on one instance. A failed report always carries a
/// witness: the lattice(s) as JSON plus the offending object.
struct CheckReport {
  std::string check_name;
  std::string instance_descr;
  CheckStatus status = CheckStatus::passed;
  nlohmann::json details = nlohmann::json::object();

  bool passed() const noexcept { return status == CheckStatus::passed; }
  bool failed() const noexcept { return status == CheckStatus::failed; }
};

nlohmann::json to_json(const CheckReport& report);

struct CheckCaps {
  ConOptions con;
  /// Largest summand accepted by the two-summand checks.
  std::size_t max_summand = 10;
  /// Largest L accepted by check_dilate.
  std::size_t max_dilate_input = 8;
};

/// Number of filters of L, found by a search over in/out assignments that
/// never consults principal generators. Independent of all_filters().
std::size_t count_filters_by_search(const Lattice& lattice);
/// Same for ideals (the search run on the dual).
std::size_t count_ideals_by_search(const Lattice& lattice);

/// Order is a partial order and the meet/join tables hold the actual
/// glb/lub; the lattice laws hold exhaustively.
CheckReport check_lattice_axioms(const Lattice& lattice, const std::string& instance);

/// For every proper filter P: P prime ⇔ L∖P ideal ⇔ L∖P prime ideal ⇔
/// eq(P, L∖P) congruence ⇔ eq(P, L∖P) maximal. For every congruence θ:
/// |L/θ| = 2 ⇔ θ = eq(0/θ, 1/θ) ≠ ∇ ⇔ θ ≠ ∇ with 0/θ ∪ 1/θ = L.
CheckReport check_prime_remark(const Lattice& lattice, const std::string& instance,
                               const CheckCaps& caps = {});

/// Meet-irreducibility of 0 against the filter L∖{0}, the ideal {0} and the
/// congruence eq({0}, L∖{0}), dually for 1; for |L| > 2 the convexity of
/// L∖{0,1} against eq({0}, L∖{0,1}, {1}).
CheckReport check_irreducibility_lemma(const Lattice& lattice, const std::string& instance,
                                       const CheckCaps& caps = {});

/// Prime spectra of A ⊞ B against the irreducibility of 0 and 1 in A and B.
CheckReport check_spechsum(const Lattice& a, const Lattice& b, const std::string& instance,
                           const CheckCaps& caps = {});

/// Con(A ⊞ B) computed directly against the prediction
/// {α ⊞ β : α ∈ Con₀₁(A), β ∈ Con₀₁(B)} ∪ {case-dependent two-class
/// congruences} ∪ {∇}, plus the shape of Con(A ⊞ B) and subdirect
/// irreducibility.
CheckReport check_cghsum(const Lattice& a, const Lattice& b, const std::string& instance,
                         const CheckCaps& caps = {});

/// Size and filter/ideal count identities for A ⊞ B.
CheckReport check_hsum_counts(const Lattice& a, const Lattice& b, const std::string& instance);

/// Three or more summands of size > 2: empty spectra, no two-class
/// congruences, Con = Con₀₁ ∪ {∇} with Con₀₁ the product of the summands'.
CheckReport check_multi_hsum(std::span<const Lattice> family, const std::string& instance,
                             const CheckCaps& caps = {});

/// D(L) is simple and its size, filter and ideal counts grow by
/// 2·|fat intervals|.
CheckReport check_dilate(const Lattice& lattice, const std::string& instance,
                         const CheckCaps& caps = {});

/// |Con(S ⊞ B2)| = |Con₀₁(S)| + 1, and S ⊞ B2 is simple when Con₀₁(S) = {Δ}.
CheckReport check_gcs_finite(const Lattice& s, const std::string& instance,
                             const CheckCaps& caps = {});

/// Distributive L has at least as many congruences as filters. Skipped for
/// non-distributive input.
CheckReport check_distributive(const Lattice& lattice, const std::string& instance,
                               const CheckCaps& caps = {});

struct SuiteConfig {
  /// Any of: axioms, prime, lemma, spechsum, cghsum, counts, multi, dilate,
  /// gcs, distributive, or "all".
  std::vector<std::string> suites{"all"};
  std::uint64_t seed = 7;
  std::size_t count = 25;
  std::size_t max_size = 9;
  /// Random summand pairs / families drawn for the multi-lattice checks.
  std::size_t pairs = 25;
  CheckCaps caps;
  /// Also run the checks on a lattice with a deliberately corrupted meet
  /// table; the harness must report it.
  bool inject_fault = false;
  /// When non-zero, also add every lattice of 1..exhaustive elements
  /// (at most 7) to the corpus.
  std::size_t exhaustive = 0;
};

/// Names accepted in SuiteConfig::suites, "all" excluded.
std::span<const std::string_view> suite_names() noexcept;

/// Runs the selected checks over the named and random corpus. Reports come
/// back in (suite, instance) order. Throws BadConfig.
std::vector<CheckReport> run_suite(const SuiteConfig& config);

/// "PASS check  instance" lines, with details under each failure, and a
/// summary line.
std::string render_reports(std::span<const CheckReport> reports, bool failures_only = false);

}  // namespace latcon
