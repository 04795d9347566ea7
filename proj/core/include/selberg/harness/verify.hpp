#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "selberg/harness/corpus.hpp"
#include "selberg/tolerances.hpp"

namespace selberg {

struct VerifyItem {
  std::string name;
  bool passed = false;
  std::string summary;
  nlohmann::json detail;
  double seconds = 0;
};

struct VerifyReport {
  std::vector<VerifyItem> items;

  bool passed() const;
  const VerifyItem* find(const std::string& name) const;
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  std::size_t angle_samples = 10;
  int invariance_trials = 50;
  std::uint64_t seed = 61;
  Tolerances tol;
};

/// Facet label i (1-based) for each facet slot: the printed vertex the facet
/// misses. 0 when the facet does not miss exactly one printed vertex.
std::vector<int> facet_labels(const DomainWithPairing& d, const std::vector<SymMatrix>& printed);

/// "rij" labels of a ridge from the facet labels of the two facets through it.
std::string ridge_label(const DomainWithPairing& d, std::size_t ridge, const std::vector<int>& labels);

/// Runs the full pipeline on the corpus. Items: provenance, determinants,
/// relators, unipotent, domain, f_vector, pairings, exactness, cycles,
/// angle_sums, finite_volume, satake_census, expressibility,
/// edge_invariance, edge_scaling. Failures never throw.
VerifyReport verify_example(const Corpus61& corpus = Corpus61::standard(), const VerifyOptions& options = {});

}  // namespace selberg
