#pragma once

#include "specstar/lgroup.hpp"  // InputError

#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace specstar {

/// A subset of the points of a SpectralPoset, by point index.
using PointSet = std::set<int>;

/// A finite poset of prime points under specialization: p < q reads "p is
/// properly contained in q". Closed sets of the Zariski topology are exactly
/// the up-closed subsets. Immutable after construction.
class SpectralPoset {
public:
  /// Builds from point names and order-generating pairs (a, b) meaning a < b.
  /// The relation is transitively closed at load time; a cycle or a duplicate
  /// name is an input error.
  static SpectralPoset from_covers(std::vector<std::string> points,
                                   std::vector<std::pair<std::string, std::string>> covers);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& point_names() const { return names_; }
  const std::string& name(int p) const;
  int index_of(const std::string& point_name) const;

  bool less(int p, int q) const;
  bool leq(int p, int q) const { return p == q ? (check_point(p), true) : less(p, q); }

private:
  SpectralPoset() = default;
  void check_point(int p) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<bool>> less_;
};

PointSet all_points(const SpectralPoset& poset);

/// True iff p < q with no point strictly between.
bool covers(const SpectralPoset& poset, int p, int q);

/// Up-closure {q : exists p in x with p <= q}; the closure of x in the
/// Zariski topology.
PointSet zariski_closure(const SpectralPoset& poset, const PointSet& x);

/// True iff the closure of x is the whole space, i.e. every minimal point of
/// the poset lies in x.
bool is_dense(const SpectralPoset& poset, const PointSet& x);

/// x together with every point outside x covered by a member of x.
PointSet rim_closure(const SpectralPoset& poset, const PointSet& x);

/// Points of x with no member of x strictly below them.
PointSet minimal_elements(const SpectralPoset& poset, const PointSet& x);

/// Length of the longest strict chain below p; minimal points have height 0.
int height(const SpectralPoset& poset, int p);

/// True iff every point's down-set is totally ordered.
bool is_tree(const SpectralPoset& poset);

/// True iff iso (src index -> dst index) is a bijection that preserves and
/// reflects the order.
bool is_order_isomorphism(const SpectralPoset& src, const SpectralPoset& dst,
                          const std::vector<int>& iso);

PointSet image(const std::vector<int>& mapping, const PointSet& x);

/// Probe for the invariance of the rim closure under order isomorphisms:
/// returns whether image(rim_closure(x)) equals rim_closure(image(x)),
/// computing both sides independently. Throws InputError if iso is not an
/// order isomorphism.
bool check_qf_invariance(const SpectralPoset& src, const SpectralPoset& dst,
                         const std::vector<int>& iso, const PointSet& x);

/// A relabeled copy of src: point p becomes point perm[p], named
/// name_prefix + index. Useful for generating order-isomorphic posets.
SpectralPoset permuted_copy(const SpectralPoset& src, const std::vector<int>& perm,
                            const std::string& name_prefix = "q");

}  // namespace specstar
