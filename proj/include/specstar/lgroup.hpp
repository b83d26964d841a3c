#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace specstar {

/// Exact unbounded integer; no floating point is used anywhere in the library.
using Int = boost::multiprecision::cpp_int;

/// Raised when a caller violates an operation precondition (unknown point,
/// descriptor mismatch, malformed input document, ...).
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class LGroupDescriptor;
using DescriptorPtr = std::shared_ptr<const LGroupDescriptor>;

/// Shape of a lattice-ordered abelian group: either Z^k under the
/// lexicographic order (rank k >= 1), or a finite pointwise product of such
/// groups. A descriptor fixes a flat coordinate layout for its elements.
class LGroupDescriptor {
public:
  static DescriptorPtr lex(int rank);
  static DescriptorPtr product(std::vector<DescriptorPtr> components);

  bool is_lex() const { return components_.empty(); }
  int lex_rank() const;
  const std::vector<DescriptorPtr>& components() const;
  int coordinate_count() const { return coord_count_; }

  bool operator==(const LGroupDescriptor& other) const;
  bool operator!=(const LGroupDescriptor& other) const { return !(*this == other); }

  /// Renders as "lex(2)" or "product(lex(1),lex(2))".
  std::string to_string() const;

private:
  LGroupDescriptor() = default;

  int rank_ = 0;                            // > 0 iff lex shape
  std::vector<DescriptorPtr> components_;   // nonempty iff product shape
  int coord_count_ = 0;
};

/// An element of the group named by its descriptor: a flat integer tuple,
/// read according to the descriptor's shape. Immutable after construction.
class GroupElement {
public:
  GroupElement(DescriptorPtr descriptor, std::vector<Int> coordinates);

  static GroupElement zero(DescriptorPtr descriptor);
  /// The unit vector with a single 1 at the given flat coordinate.
  static GroupElement unit(DescriptorPtr descriptor, int coordinate);

  const DescriptorPtr& descriptor() const { return descriptor_; }
  const std::vector<Int>& coordinates() const { return coordinates_; }

  bool same_group(const GroupElement& other) const;
  bool operator==(const GroupElement& other) const;
  bool operator!=(const GroupElement& other) const { return !(*this == other); }

  /// Renders nested tuples, e.g. "(1,-3)" or "((1),(0,2))".
  std::string to_string() const;

private:
  DescriptorPtr descriptor_;
  std::vector<Int> coordinates_;
};

GroupElement add(const GroupElement& a, const GroupElement& b);
GroupElement subtract(const GroupElement& a, const GroupElement& b);
GroupElement negate(const GroupElement& g);
/// n must be >= 1.
GroupElement scalar_mul(const Int& n, const GroupElement& g);

/// Partial order of the group: lexicographic within lex blocks, componentwise
/// across products. Compatible with addition.
bool leq(const GroupElement& a, const GroupElement& b);
GroupElement meet(const GroupElement& a, const GroupElement& b);
GroupElement join(const GroupElement& a, const GroupElement& b);

bool is_zero(const GroupElement& g);
bool is_nonnegative(const GroupElement& g);

struct Decomposition {
  GroupElement pos;
  GroupElement neg;
};

/// Splits g into pos = g v 0 and neg = (-g) v 0, so that g = pos - neg and
/// meet(pos, neg) = 0.
Decomposition decompose(const GroupElement& g);

struct BoundedMultiples {
  bool bounded = false;
  /// When bounded, a witness c >= 0 with c >= n*g for every n >= 1.
  std::optional<GroupElement> witness;
};

/// Decides whether the set {n*g : n >= 1} has an upper bound in the group.
/// Within a lex block this holds exactly when the leading coordinate of the
/// block is <= 0; across products it must hold in every component. The
/// witness is 0 on blocks where g <= 0 and the block's leading unit vector
/// otherwise.
BoundedMultiples bounded_multiples(const GroupElement& g);

}  // namespace specstar
