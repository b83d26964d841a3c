#include "specstar/lgroup.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace specstar {

namespace {

// Compares coords[offset, offset+len) lexicographically: -1, 0 or 1.
int lex_cmp(const std::vector<Int>& a, const std::vector<Int>& b, int offset, int len) {
  for (int i = 0; i < len; ++i) {
    const Int& x = a[offset + i];
    const Int& y = b[offset + i];
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

bool leq_rec(const LGroupDescriptor& d, int offset, const std::vector<Int>& a,
             const std::vector<Int>& b) {
  if (d.is_lex()) return lex_cmp(a, b, offset, d.lex_rank()) <= 0;
  for (const auto& comp : d.components()) {
    if (!leq_rec(*comp, offset, a, b)) return false;
    offset += comp->coordinate_count();
  }
  return true;
}

void meet_rec(const LGroupDescriptor& d, int offset, const std::vector<Int>& a,
              const std::vector<Int>& b, bool want_join, std::vector<Int>& out) {
  if (d.is_lex()) {
    const int cmp = lex_cmp(a, b, offset, d.lex_rank());
    const std::vector<Int>& pick = (cmp <= 0) == !want_join ? a : b;
    for (int i = 0; i < d.lex_rank(); ++i) out[offset + i] = pick[offset + i];
    return;
  }
  for (const auto& comp : d.components()) {
    meet_rec(*comp, offset, a, b, want_join, out);
    offset += comp->coordinate_count();
  }
}

// Returns false as soon as one lex block has unbounded multiples; otherwise
// fills the witness coordinates block by block.
bool bounded_rec(const LGroupDescriptor& d, int offset, const std::vector<Int>& g,
                 std::vector<Int>& witness) {
  if (d.is_lex()) {
    const int k = d.lex_rank();
    std::vector<Int> zero(g.size(), 0);
    const int cmp = lex_cmp(g, zero, offset, k);
    if (cmp <= 0) return true;  // witness coordinates stay 0
    if (g[offset] > 0) return false;
    witness[offset] = 1;  // leading coordinate of g is 0: block leading unit dominates
    return true;
  }
  for (const auto& comp : d.components()) {
    if (!bounded_rec(*comp, offset, g, witness)) return false;
    offset += comp->coordinate_count();
  }
  return true;
}

void require_same_group(const GroupElement& a, const GroupElement& b) {
  if (!a.same_group(b)) throw InputError("group elements have mismatched descriptors");
}

}  // namespace

DescriptorPtr LGroupDescriptor::lex(int rank) {
  if (rank < 1) throw InputError("lex rank must be >= 1");
  LGroupDescriptor d;
  d.rank_ = rank;
  d.coord_count_ = rank;
  return std::make_shared<const LGroupDescriptor>(std::move(d));
}

DescriptorPtr LGroupDescriptor::product(std::vector<DescriptorPtr> components) {
  if (components.empty()) throw InputError("product needs at least one component");
  LGroupDescriptor d;
  for (const auto& comp : components) {
    if (!comp) throw InputError("null component descriptor");
    d.coord_count_ += comp->coordinate_count();
  }
  d.components_ = std::move(components);
  return std::make_shared<const LGroupDescriptor>(std::move(d));
}

int LGroupDescriptor::lex_rank() const {
  if (!is_lex()) throw InputError("lex_rank queried on a product descriptor");
  return rank_;
}

const std::vector<DescriptorPtr>& LGroupDescriptor::components() const {
  return components_;
}

bool LGroupDescriptor::operator==(const LGroupDescriptor& other) const {
  if (is_lex() != other.is_lex()) return false;
  if (is_lex()) return rank_ == other.rank_;
  if (components_.size() != other.components_.size()) return false;
  for (size_t i = 0; i < components_.size(); ++i)
    if (*components_[i] != *other.components_[i]) return false;
  return true;
}

std::string LGroupDescriptor::to_string() const {
  std::ostringstream out;
  if (is_lex()) {
    out << "lex(" << rank_ << ")";
  } else {
    out << "product(";
    for (size_t i = 0; i < components_.size(); ++i) {
      if (i) out << ",";
      out << components_[i]->to_string();
    }
    out << ")";
  }
  return out.str();
}

GroupElement::GroupElement(DescriptorPtr descriptor, std::vector<Int> coordinates)
    : descriptor_(std::move(descriptor)), coordinates_(std::move(coordinates)) {
  if (!descriptor_) throw InputError("null descriptor");
  if (static_cast<int>(coordinates_.size()) != descriptor_->coordinate_count())
    throw InputError("coordinate count does not match descriptor");
}

GroupElement GroupElement::zero(DescriptorPtr descriptor) {
  if (!descriptor) throw InputError("null descriptor");
  std::vector<Int> coords(descriptor->coordinate_count(), 0);
  return GroupElement(std::move(descriptor), std::move(coords));
}

GroupElement GroupElement::unit(DescriptorPtr descriptor, int coordinate) {
  if (!descriptor) throw InputError("null descriptor");
  if (coordinate < 0 || coordinate >= descriptor->coordinate_count())
    throw InputError("unit coordinate out of range");
  std::vector<Int> coords(descriptor->coordinate_count(), 0);
  coords[coordinate] = 1;
  return GroupElement(std::move(descriptor), std::move(coords));
}

bool GroupElement::same_group(const GroupElement& other) const {
  return descriptor_ == other.descriptor_ || *descriptor_ == *other.descriptor_;
}

bool GroupElement::operator==(const GroupElement& other) const {
  return same_group(other) && coordinates_ == other.coordinates_;
}

namespace {

void render_element(const LGroupDescriptor& d, int offset, const std::vector<Int>& coords,
                    std::ostringstream& out) {
  out << "(";
  if (d.is_lex()) {
    for (int i = 0; i < d.lex_rank(); ++i) {
      if (i) out << ",";
      out << coords[offset + i];
    }
  } else {
    bool first = true;
    for (const auto& comp : d.components()) {
      if (!first) out << ",";
      first = false;
      render_element(*comp, offset, coords, out);
      offset += comp->coordinate_count();
    }
  }
  out << ")";
}

}  // namespace

std::string GroupElement::to_string() const {
  std::ostringstream out;
  render_element(*descriptor_, 0, coordinates_, out);
  return out.str();
}

GroupElement add(const GroupElement& a, const GroupElement& b) {
  require_same_group(a, b);
  std::vector<Int> coords(a.coordinates());
  for (size_t i = 0; i < coords.size(); ++i) coords[i] += b.coordinates()[i];
  return GroupElement(a.descriptor(), std::move(coords));
}

GroupElement negate(const GroupElement& g) {
  std::vector<Int> coords(g.coordinates());
  for (auto& c : coords) c = -c;
  return GroupElement(g.descriptor(), std::move(coords));
}

GroupElement subtract(const GroupElement& a, const GroupElement& b) {
  return add(a, negate(b));
}

GroupElement scalar_mul(const Int& n, const GroupElement& g) {
  if (n < 1) throw InputError("scalar_mul requires a positive integer");
  std::vector<Int> coords(g.coordinates());
  for (auto& c : coords) c *= n;
  return GroupElement(g.descriptor(), std::move(coords));
}

bool leq(const GroupElement& a, const GroupElement& b) {
  require_same_group(a, b);
  return leq_rec(*a.descriptor(), 0, a.coordinates(), b.coordinates());
}

GroupElement meet(const GroupElement& a, const GroupElement& b) {
  require_same_group(a, b);
  std::vector<Int> out(a.coordinates().size());
  meet_rec(*a.descriptor(), 0, a.coordinates(), b.coordinates(), false, out);
  return GroupElement(a.descriptor(), std::move(out));
}

GroupElement join(const GroupElement& a, const GroupElement& b) {
  require_same_group(a, b);
  std::vector<Int> out(a.coordinates().size());
  meet_rec(*a.descriptor(), 0, a.coordinates(), b.coordinates(), true, out);
  return GroupElement(a.descriptor(), std::move(out));
}

bool is_zero(const GroupElement& g) {
  return std::all_of(g.coordinates().begin(), g.coordinates().end(),
                     [](const Int& c) { return c == 0; });
}

bool is_nonnegative(const GroupElement& g) {
  return leq(GroupElement::zero(g.descriptor()), g);
}

Decomposition decompose(const GroupElement& g) {
  const GroupElement zero = GroupElement::zero(g.descriptor());
  return Decomposition{join(g, zero), join(negate(g), zero)};
}

BoundedMultiples bounded_multiples(const GroupElement& g) {
  std::vector<Int> witness(g.coordinates().size(), 0);
  if (!bounded_rec(*g.descriptor(), 0, g.coordinates(), witness))
    return BoundedMultiples{false, std::nullopt};
  return BoundedMultiples{true, GroupElement(g.descriptor(), std::move(witness))};
}

}  // namespace specstar
