#pragma once

#include "specstar/lgroup.hpp"
#include "specstar/spectral_poset.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace specstar {

/// A prime filter of the positive cone, addressed structurally: a path of
/// component indices through nested products down to one lex block, plus a
/// level j >= 1. The filter holds exactly the elements whose first j
/// coordinates in that block are lexicographically positive.
struct PrimeFilter {
  std::vector<int> path;  // 0-based component indices
  int level = 1;          // 1-based level within the target lex block

  bool operator==(const PrimeFilter&) const = default;
};

/// The prime spectrum of the Bezout domain whose group of divisibility is the
/// given l-group: a tree-shaped SpectralPoset with a distinguished root (the
/// zero ideal) and a prime filter tagged onto every non-root point. The poset
/// order agrees with filter inclusion.
class BezoutSpectrum {
public:
  BezoutSpectrum(SpectralPoset poset, DescriptorPtr group, int root,
                 std::vector<std::optional<PrimeFilter>> filters);

  const SpectralPoset& poset() const { return poset_; }
  const DescriptorPtr& group() const { return group_; }
  int root() const { return root_; }
  bool is_root(int p) const { return p == root_; }
  const PrimeFilter& filter(int p) const;

private:
  SpectralPoset poset_;
  DescriptorPtr group_;
  int root_;
  std::vector<std::optional<PrimeFilter>> filters_;
};

/// Constructs the spectrum of a descriptor: a lex block of rank k yields a
/// chain root < P1 < ... < Pk; a product glues the component spectra at a
/// common root.
BezoutSpectrum build_spectrum(DescriptorPtr desc);

/// Membership of g in the filter: the first `level` coordinates of g's lex
/// block at `path` form a lexicographically positive tuple. Throws InputError
/// when the filter does not address a lex block of g's group.
bool filter_contains(const PrimeFilter& f, const GroupElement& g);

/// A realizable closed set V(g) = {P : g in filter(P)} together with the
/// witness g, or the whole-space pattern standing for V of the zero ideal.
struct VSetPattern {
  PointSet members;
  std::optional<GroupElement> witness;  // empty exactly for the whole space
  bool whole_space = false;
};

/// V(g) for an integral element g >= 0; the root is never a member and g = 0
/// (a unit) gives the empty set.
VSetPattern v_set(const BezoutSpectrum& spec, const GroupElement& g);

/// The exact, duplicate-free image of g -> V(g) over all g >= 0, each with a
/// canonical {0,1}-coordinate witness, plus the whole-space pattern. Within a
/// lex block the realizable proper sets are the chain tails; products combine
/// one realizable choice per component.
std::vector<VSetPattern> enumerate_v_sets(const BezoutSpectrum& spec);

/// All jointly realizable pattern pairs (V(a), V(b)) with 0 <= b <= a and
/// b in filter(p), i.e. pairs of principal ideals aD subset of bD, both inside
/// the prime of p. Throws InputError when p is the root.
std::vector<std::pair<VSetPattern, VSetPattern>> enumerate_nested_pairs(
    const BezoutSpectrum& spec, int p);

/// Minimal primes over the proper nonzero ideal of g.
PointSet min_primes(const BezoutSpectrum& spec, const GroupElement& g);

/// Whether the field element with value g is almost integral over the domain:
/// holds iff the negative part of g has bounded multiples.
bool is_almost_integral(const GroupElement& g);

/// Direct verdicts for membership in Spec*: the root together with every
/// point whose filter contains no element with bounded multiples. A level-j
/// lex filter contains such an element exactly when j >= 2.
PointSet spec_ast_oracle(const BezoutSpectrum& spec);

}  // namespace specstar
