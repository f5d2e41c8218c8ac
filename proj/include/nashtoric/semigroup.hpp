#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nashtoric/lattice.hpp"
#include "nashtoric/numeric.hpp"

namespace nashtoric {

inline constexpr int kDefaultSieveDepth = 6;

// Witness that a target lies in the semigroup: target equals the sum of
// generator * multiplicity over the listed terms.
struct Representation {
  std::vector<std::pair<Index, Int>> terms;  // (generator index, multiplicity)

  Vec evaluate(const Mat& gens) const;
};

// A binomial x_lhs - x_rhs in the generators, stored as two index multisets.
struct BinomialRelation {
  std::vector<Index> lhs;
  std::vector<Index> rhs;
};

// Pointed affine semigroup, represented by its lexicographically sorted
// Hilbert basis plus a strictly positive integer functional (the pointedness
// certificate, reused as the search budget for membership decisions).
class AffineSemigroup {
 public:
  AffineSemigroup(Mat basis, Covec certificate);

  Index rank() const { return basis_.rows(); }
  Index size() const { return basis_.cols(); }
  const Mat& basis() const { return basis_; }
  const Covec& certificate() const { return cert_; }
  Vec element(Index i) const { return basis_.col(i); }

  friend bool operator==(const AffineSemigroup& a, const AffineSemigroup& b) {
    return equal(a.basis_, b.basis_) && equal(a.cert_, b.cert_);
  }

 private:
  Mat basis_;
  Covec cert_;
};

// Finds an integer functional with value >= 1 on every generator column, or
// std::nullopt when none exists (the generated cone contains a line).
// Decided by exact Fourier-Motzkin elimination over the rationals.
// Throws DegenerateInputError on empty input or a zero generator.
std::optional<Covec> pointedness_certificate(const Mat& gens);

// Decides whether target is a nonnegative integer combination of the
// generator columns, returning a representation when it is. `cert` must be a
// valid pointedness certificate for gens (checked; InvalidCertificateError
// otherwise). The search is exact and complete: each unit of multiplicity on
// generator g consumes cert(g) >= 1 of the budget cert(target).
std::optional<Representation> is_member(const Vec& target, const Mat& gens,
                                        const Covec& cert,
                                        const SearchLimits& limits = {});

// Convenience overload computing a certificate internally.
std::optional<Representation> is_member(const Vec& target, const Mat& gens);

// Removes every generator that shows up as a sum of 2..depth generators
// (with repetition) during recursive sum generation. Column order of the
// survivors is preserved. Requires pointed input.
Mat sieve(const Mat& gens, int depth = kDefaultSieveDepth,
          const SearchLimits& limits = {});

// Computes the Hilbert basis (unique minimal generating set) of the semigroup
// generated by the columns: zero/duplicate columns are stripped, a sieve pass
// removes visible sums, then each survivor is kept iff it is not a member of
// the semigroup generated by the others. Throws NotPointedError /
// LatticeSpanError when the input is not pointed or does not span Z^d.
AffineSemigroup hilbert_basis(const Mat& gens,
                              int sieve_depth = kDefaultSieveDepth,
                              const SearchLimits& limits = {});

// True iff the two generator lists generate the same semigroup (mutual
// membership of generators).
bool semigroup_equals(const Mat& a, const Mat& b,
                      const SearchLimits& limits = {});

// True iff the semigroup is free of rank d, i.e. the Hilbert basis has d
// elements forming a unimodular matrix.
bool is_smooth(const AffineSemigroup& s);

// Searches for u not in S with lambda*u in S for some lambda >= 2, over
// lattice points of certificate value <= search_bound inside the cone.
// Absence of a witness within the bound is not a saturation proof.
// `multiplier_bound` caps the lambda that are tried.
std::optional<Vec> saturation_witness(const AffineSemigroup& s,
                                      const Int& search_bound,
                                      const Int& multiplier_bound = 12);

// True iff sum of lhs generators equals sum of rhs generators exactly.
// Throws IndexError when an index is out of range.
bool relation_holds(const BinomialRelation& rel, const Mat& gens);

namespace detail {
// Internal entry points that reuse a known-valid certificate.
Mat sieve_with_certificate(const Mat& gens, int depth, const Covec& cert,
                           const SearchLimits& limits);
AffineSemigroup hilbert_basis_with_certificate(const Mat& stripped_gens,
                                               int sieve_depth,
                                               const Covec& cert,
                                               const SearchLimits& limits);
}  // namespace detail

}  // namespace nashtoric
