#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "selberg/matcore/space.hpp"
#include "selberg/poincare/cycles.hpp"
#include "selberg/poincare/domain.hpp"

namespace selberg {

/// The element g that maps facet F_from onto F_to. Facet F_i is the facet
/// missing vertex i (1-based).
struct PairingSlot {
  std::string label;
  Isometry element;
  int from;
  int to;
};

/// The 5-simplex example in X_3: six rank-one vertices, pairings a, b, c,
/// cusp generators u, v, w and the relators of both presentations.
struct Corpus61 {
  std::vector<SymMatrix> vertices;
  Isometry a, b, c;
  Isometry u, v, w;
  std::vector<std::string> presentation_relators;
  std::vector<std::string> parabolic_relators;
  std::vector<PairingSlot> pairings;
  /// Ridge labels "rij" (i < j) with the letter leaving each ridge.
  std::vector<CycleSignature> cycles;

  static Corpus61 standard();

  std::map<std::string, Isometry> alphabet() const;
  std::vector<IsometryWord> relator_words() const;
  /// {a, b, c} with inverses, centered at I.
  GeneratorSet generator_set() const;

  nlohmann::json to_json() const;
  /// FNV-1a over the compact dump of to_json().
  std::uint64_t provenance_hash() const;
};

/// Hash of the unmodified corpus.
inline constexpr std::uint64_t kCorpusHash = 0x17943d6f6aedae66ULL;

}  // namespace selberg
