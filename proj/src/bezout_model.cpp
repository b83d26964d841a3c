#include "specstar/bezout_model.hpp"

#include <algorithm>
#include <string>

namespace specstar {

namespace {

struct PendingPoint {
  std::string name;
  std::string parent;  // covering predecessor
  PrimeFilter filter;
};

// Walks the descriptor and emits one chain of points per lex block, each
// chain hanging from the root.
void collect_points(const DescriptorPtr& desc, std::vector<int>& path,
                    const std::string& prefix, const std::string& root_name,
                    std::vector<PendingPoint>& out) {
  if (desc->is_lex()) {
    for (int j = 1; j <= desc->lex_rank(); ++j) {
      PendingPoint pt;
      pt.name = prefix + "P" + std::to_string(j);
      pt.parent = j == 1 ? root_name : prefix + "P" + std::to_string(j - 1);
      pt.filter = PrimeFilter{path, j};
      out.push_back(std::move(pt));
    }
    return;
  }
  for (size_t i = 0; i < desc->components().size(); ++i) {
    path.push_back(static_cast<int>(i));
    collect_points(desc->components()[i], path,
                   prefix + "c" + std::to_string(i + 1) + ".", root_name, out);
    path.pop_back();
  }
}

void check_model_element(const BezoutSpectrum& spec, const GroupElement& g) {
  if (*g.descriptor() != *spec.group())
    throw InputError("group element does not belong to the spectrum's group");
}

// Canonical {0,1} witnesses whose v-sets enumerate the realizable patterns:
// per lex block the zero vector or one leading-tail unit, combined across
// products.
void collect_witnesses(const DescriptorPtr& desc, int offset,
                       std::vector<std::vector<Int>>& out) {
  if (desc->is_lex()) {
    std::vector<std::vector<Int>> combined;
    for (int i = 0; i <= desc->lex_rank(); ++i) {
      for (const auto& base : out) {
        std::vector<Int> w = base;
        if (i > 0) w[offset + i - 1] = 1;
        combined.push_back(std::move(w));
      }
    }
    out = std::move(combined);
    return;
  }
  for (const auto& comp : desc->components()) {
    collect_witnesses(comp, offset, out);
    offset += comp->coordinate_count();
  }
}

}  // namespace

BezoutSpectrum::BezoutSpectrum(SpectralPoset poset, DescriptorPtr group, int root,
                               std::vector<std::optional<PrimeFilter>> filters)
    : poset_(std::move(poset)), group_(std::move(group)), root_(root),
      filters_(std::move(filters)) {
  if (!group_) throw InputError("null group descriptor");
  if (root_ < 0 || root_ >= poset_.size()) throw InputError("root out of range");
  if (static_cast<int>(filters_.size()) != poset_.size())
    throw InputError("filter tagging size mismatch");
  if (filters_[root_].has_value()) throw InputError("root must carry no filter");
  for (int p = 0; p < poset_.size(); ++p) {
    if (p == root_) continue;
    if (!filters_[p].has_value()) throw InputError("non-root point without filter");
    if (!poset_.less(root_, p)) throw InputError("root is not the unique minimum");
  }
  if (!is_tree(poset_)) throw InputError("spectrum poset is not a tree");
}

const PrimeFilter& BezoutSpectrum::filter(int p) const {
  poset_.name(p);  // range check
  if (p == root_) throw InputError("the root (zero ideal) carries no filter");
  return *filters_[p];
}

BezoutSpectrum build_spectrum(DescriptorPtr desc) {
  if (!desc) throw InputError("null descriptor");
  const std::string root_name = "root";
  std::vector<PendingPoint> pending;
  std::vector<int> path;
  collect_points(desc, path, "", root_name, pending);

  std::vector<std::string> names{root_name};
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<std::optional<PrimeFilter>> filters{std::nullopt};
  for (auto& pt : pending) {
    names.push_back(pt.name);
    covers.emplace_back(pt.parent, pt.name);
    filters.push_back(std::move(pt.filter));
  }
  SpectralPoset poset = SpectralPoset::from_covers(std::move(names), std::move(covers));
  return BezoutSpectrum(std::move(poset), std::move(desc), 0, std::move(filters));
}

bool filter_contains(const PrimeFilter& f, const GroupElement& g) {
  const LGroupDescriptor* d = g.descriptor().get();
  int offset = 0;
  for (int ci : f.path) {
    if (d->is_lex() || ci < 0 || ci >= static_cast<int>(d->components().size()))
      throw InputError("filter path does not address the element's group");
    for (int k = 0; k < ci; ++k) offset += d->components()[k]->coordinate_count();
    d = d->components()[ci].get();
  }
  if (!d->is_lex() || f.level < 1 || f.level > d->lex_rank())
    throw InputError("filter level out of range for its lex block");
  for (int i = 0; i < f.level; ++i) {
    const Int& c = g.coordinates()[offset + i];
    if (c != 0) return c > 0;
  }
  return false;
}

VSetPattern v_set(const BezoutSpectrum& spec, const GroupElement& g) {
  check_model_element(spec, g);
  if (!is_nonnegative(g)) throw InputError("v_set requires an integral element g >= 0");
  VSetPattern pattern;
  pattern.witness = g;
  for (int p = 0; p < spec.poset().size(); ++p) {
    if (spec.is_root(p)) continue;
    if (filter_contains(spec.filter(p), g)) pattern.members.insert(p);
  }
  return pattern;
}

std::vector<VSetPattern> enumerate_v_sets(const BezoutSpectrum& spec) {
  std::vector<std::vector<Int>> witnesses{
      std::vector<Int>(spec.group()->coordinate_count(), 0)};
  collect_witnesses(spec.group(), 0, witnesses);

  std::vector<VSetPattern> out;
  out.reserve(witnesses.size() + 1);
  for (auto& w : witnesses)
    out.push_back(v_set(spec, GroupElement(spec.group(), std::move(w))));
  VSetPattern whole;
  whole.members = all_points(spec.poset());
  whole.whole_space = true;
  out.push_back(std::move(whole));
  return out;
}

std::vector<std::pair<VSetPattern, VSetPattern>> enumerate_nested_pairs(
    const BezoutSpectrum& spec, int p) {
  spec.poset().name(p);  // range check
  if (spec.is_root(p))
    throw InputError("nested pairs are defined for non-root points only");
  std::vector<VSetPattern> patterns = enumerate_v_sets(spec);
  patterns.pop_back();  // drop the whole-space (zero ideal) pattern

  std::vector<std::pair<VSetPattern, VSetPattern>> out;
  for (const auto& outer : patterns) {
    for (const auto& inner : patterns) {
      if (!inner.members.count(p)) continue;
      if (!std::includes(outer.members.begin(), outer.members.end(),
                         inner.members.begin(), inner.members.end()))
        continue;
      out.emplace_back(outer, inner);
    }
  }
  return out;
}

PointSet min_primes(const BezoutSpectrum& spec, const GroupElement& g) {
  check_model_element(spec, g);
  if (!is_nonnegative(g) || is_zero(g))
    throw InputError("min_primes requires a proper nonzero ideal (g >= 0, g != 0)");
  return minimal_elements(spec.poset(), v_set(spec, g).members);
}

bool is_almost_integral(const GroupElement& g) {
  return bounded_multiples(decompose(g).neg).bounded;
}

PointSet spec_ast_oracle(const BezoutSpectrum& spec) {
  PointSet out{spec.root()};
  for (int p = 0; p < spec.poset().size(); ++p) {
    if (spec.is_root(p)) continue;
    if (spec.filter(p).level == 1) out.insert(p);
  }
  return out;
}

}  // namespace specstar
