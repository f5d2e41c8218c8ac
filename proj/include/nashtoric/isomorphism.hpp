#pragma once

#include <optional>
#include <vector>

#include "nashtoric/semigroup.hpp"

namespace nashtoric {

// Certificate that two semigroups are unimodularly equivalent: map carries
// source Hilbert basis element i onto target element permutation[i].
struct IsomorphismWitness {
  Mat map;
  std::vector<Index> permutation;

  friend bool operator==(const IsomorphismWitness& a,
                         const IsomorphismWitness& b) {
    return equal(a.map, b.map) && a.permutation == b.permutation;
  }
};

// Checks the witness invariants exactly: |det(map)| = 1 and the mapped source
// basis is a bijective re-indexing of the target basis.
bool verify_witness(const IsomorphismWitness& w, const AffineSemigroup& src,
                    const AffineSemigroup& dst);

// Exhaustive certified search for a unimodular map carrying the source
// Hilbert basis onto the target one: one fixed independent d-subset of the
// source is matched against every ordered d-tuple of target elements, the map
// is solved exactly, and the first full bijection wins. Absence is therefore
// a proof of non-equivalence. Throws DimensionError on rank mismatch.
std::optional<IsomorphismWitness> find_isomorphism(const AffineSemigroup& src,
                                                   const AffineSemigroup& dst);

// Cheap GL(d,Z)-invariant key for deduplication: unequal fingerprints imply
// non-isomorphic; equal fingerprints still need find_isomorphism.
struct Fingerprint {
  Index rank = 0;
  Index basis_size = 0;
  std::vector<Int> subset_dets;           // sorted |det| over all d-subsets
  std::vector<Index> membership_counts;   // sorted per-element difference hits

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const AffineSemigroup& s);

}  // namespace nashtoric
