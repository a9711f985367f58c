#ifndef SPECTREE_VERIFY_HPP
#define SPECTREE_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "spectree/spectrum.hpp"
#include "spectree/tree.hpp"

namespace spectree {

struct ReportEntry {
  std::string code;    // canonical code of the tree involved
  std::string detail;  // human-readable description
};

/// Outcome of one claim over one scope. A passing report has no
/// violations; witnesses list the equality/extremal cases the claim
/// names. Witness and violation lists are sorted by canonical code, so
/// sharded runs merge to the same report as unsharded ones.
struct VerificationReport {
  std::string claim;
  std::string scope;
  long long checked = 0;
  std::vector<ReportEntry> witnesses;
  std::vector<ReportEntry> violations;
  std::vector<std::string> notes;
  std::map<std::string, long long> counters;  // per-lemma checked counts
  double elapsed_seconds = 0.0;

  bool passed() const { return violations.empty(); }
};

/// Shard selector for sweeps over enumerated trees.
struct Shard {
  int index = 0;
  int count = 1;
};

/// Associative merge of per-shard reports for the same claim and base
/// scope; entry lists are re-sorted, counters summed.
VerificationReport merge_reports(const std::vector<VerificationReport>& parts);

/// Spider spectra match their closed forms for all 1 <= k <= s <= s_max.
VerificationReport verify_spider_spectra(int s_max);

/// charpoly(H(s,2,t)) matches the diameter-3 closed form for all
/// s <= s_max, t <= t_max.
VerificationReport verify_h_tree(int s_max, int t_max);

/// Multiplicity bound (n-3)/2 for eigenvalues != 1 over all trees of
/// order n >= 6; equality exactly at T((n-1)/2,(n-1)/2) for odd n.
VerificationReport verify_bound_km2(int n, Shard shard = {});

/// Unique tree of even order n >= 8 with a non-1 class of multiplicity
/// n/2 - 2 is T(n/2, n/2-1).
VerificationReport verify_thm_half_minus_2(int n, Shard shard = {});

/// Unique tree of odd order n >= 9 with a non-1 class of multiplicity
/// (n-1)/2 - 2 is T((n+1)/2, (n-3)/2).
VerificationReport verify_thm_halfm1_minus_2(int n, Shard shard = {});

/// The five order-10 trees with a non-1 class of multiplicity 2 beyond
/// the mu_2 = theta spider: three theta-classes with mu_2 < theta (one
/// being T*(4,4)), one x^2-4x+1 class, one x^3-5x^2+6x-1 class.
VerificationReport verify_counterexamples_10(Shard shard = {});

/// mu_2 >= theta forces star/spider/H(2,2,2)/H(3,2,2); equality exactly
/// for spiders with k >= 2. Swept over all trees of order n.
VerificationReport verify_kho2(int n, Shard shard = {});

/// mu_{n-1} = theta-bar exactly for spiders with k >= 2; mu_{n-1} <=
/// theta-bar forces star or spider. Swept over all trees of order n.
VerificationReport verify_kho_trees(int n, Shard shard = {});

/// T*(s,k) has theta-multiplicity k-2 and mu_2 < theta for all
/// 2 <= k <= s <= s_max.
VerificationReport verify_tstar(int s_max);

/// Witness direction of the floor(n/2)-j multiplicity classification:
/// the named spider attains m(mu_2) = floor(n/2)-j with mu_2 = theta;
/// for j >= 3 the T* family shows the restriction to mu_2 is needed.
/// The converse sweep runs only when n <= sweep_bound.
VerificationReport verify_thm_n2k_witness(int j, int n, int sweep_bound = 12);

/// Bundled elementary bounds (degree, pendant, diameter, trace and
/// product identities, eigenvalue-1 multiplicities) over all trees of
/// order n.
VerificationReport verify_property_suite(int n, Shard shard = {});

/// Seeded random pendant- and edge-deletion interlacing checks on trees
/// of order n, all comparisons exact.
VerificationReport verify_interlacing(int n, int samples, unsigned long seed);

}  // namespace spectree

#endif  // SPECTREE_VERIFY_HPP
