#include "specstar/spectral_poset.hpp"

#include <algorithm>

namespace specstar {

namespace {

void check_subset(const SpectralPoset& poset, const PointSet& x) {
  for (int p : x)
    if (p < 0 || p >= poset.size()) throw InputError("point set member out of range");
}

}  // namespace

SpectralPoset SpectralPoset::from_covers(
    std::vector<std::string> points,
    std::vector<std::pair<std::string, std::string>> covers) {
  SpectralPoset poset;
  poset.names_ = std::move(points);
  for (int i = 0; i < poset.size(); ++i) {
    if (!poset.index_.emplace(poset.names_[i], i).second)
      throw InputError("duplicate point name: " + poset.names_[i]);
  }
  const int n = poset.size();
  poset.less_.assign(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : covers) {
    const int i = poset.index_of(a);
    const int j = poset.index_of(b);
    if (i == j) throw InputError("reflexive order pair: " + a);
    poset.less_[i][j] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!poset.less_[i][k]) continue;
      for (int j = 0; j < n; ++j)
        if (poset.less_[k][j]) poset.less_[i][j] = true;
    }
  for (int i = 0; i < n; ++i)
    if (poset.less_[i][i]) throw InputError("order relation contains a cycle");
  return poset;
}

const std::string& SpectralPoset::name(int p) const {
  check_point(p);
  return names_[p];
}

int SpectralPoset::index_of(const std::string& point_name) const {
  auto it = index_.find(point_name);
  if (it == index_.end()) throw InputError("unknown point: " + point_name);
  return it->second;
}

bool SpectralPoset::less(int p, int q) const {
  check_point(p);
  check_point(q);
  return less_[p][q];
}

void SpectralPoset::check_point(int p) const {
  if (p < 0 || p >= size()) throw InputError("point index out of range");
}

PointSet all_points(const SpectralPoset& poset) {
  PointSet out;
  for (int p = 0; p < poset.size(); ++p) out.insert(p);
  return out;
}

bool covers(const SpectralPoset& poset, int p, int q) {
  if (!poset.less(p, q)) return false;
  for (int r = 0; r < poset.size(); ++r)
    if (poset.less(p, r) && poset.less(r, q)) return false;
  return true;
}

PointSet zariski_closure(const SpectralPoset& poset, const PointSet& x) {
  check_subset(poset, x);
  PointSet out;
  for (int q = 0; q < poset.size(); ++q)
    for (int p : x)
      if (poset.leq(p, q)) {
        out.insert(q);
        break;
      }
  return out;
}

bool is_dense(const SpectralPoset& poset, const PointSet& x) {
  return zariski_closure(poset, x) == all_points(poset);
}

PointSet rim_closure(const SpectralPoset& poset, const PointSet& x) {
  check_subset(poset, x);
  PointSet out = x;
  for (int p = 0; p < poset.size(); ++p) {
    if (x.count(p)) continue;
    for (int q : x)
      if (covers(poset, p, q)) {
        out.insert(p);
        break;
      }
  }
  return out;
}

PointSet minimal_elements(const SpectralPoset& poset, const PointSet& x) {
  check_subset(poset, x);
  PointSet out;
  for (int p : x) {
    bool minimal = true;
    for (int q : x)
      if (poset.less(q, p)) {
        minimal = false;
        break;
      }
    if (minimal) out.insert(p);
  }
  return out;
}

int height(const SpectralPoset& poset, int p) {
  poset.name(p);  // membership check
  int h = 0;
  for (int q = 0; q < poset.size(); ++q)
    if (poset.less(q, p)) h = std::max(h, height(poset, q) + 1);
  return h;
}

bool is_tree(const SpectralPoset& poset) {
  for (int p = 0; p < poset.size(); ++p)
    for (int a = 0; a < poset.size(); ++a) {
      if (!poset.less(a, p)) continue;
      for (int b = a + 1; b < poset.size(); ++b)
        if (poset.less(b, p) && !poset.less(a, b) && !poset.less(b, a)) return false;
    }
  return true;
}

bool is_order_isomorphism(const SpectralPoset& src, const SpectralPoset& dst,
                          const std::vector<int>& iso) {
  if (src.size() != dst.size()) return false;
  if (static_cast<int>(iso.size()) != src.size()) return false;
  std::vector<bool> hit(dst.size(), false);
  for (int p = 0; p < src.size(); ++p) {
    if (iso[p] < 0 || iso[p] >= dst.size() || hit[iso[p]]) return false;
    hit[iso[p]] = true;
  }
  for (int p = 0; p < src.size(); ++p)
    for (int q = 0; q < src.size(); ++q)
      if (src.less(p, q) != dst.less(iso[p], iso[q])) return false;
  return true;
}

PointSet image(const std::vector<int>& mapping, const PointSet& x) {
  PointSet out;
  for (int p : x) {
    if (p < 0 || p >= static_cast<int>(mapping.size()))
      throw InputError("point set member outside the mapping's domain");
    out.insert(mapping[p]);
  }
  return out;
}

bool check_qf_invariance(const SpectralPoset& src, const SpectralPoset& dst,
                         const std::vector<int>& iso, const PointSet& x) {
  if (!is_order_isomorphism(src, dst, iso))
    throw InputError("mapping is not an order isomorphism");
  check_subset(src, x);
  return image(iso, rim_closure(src, x)) == rim_closure(dst, image(iso, x));
}

SpectralPoset permuted_copy(const SpectralPoset& src, const std::vector<int>& perm,
                            const std::string& name_prefix) {
  if (static_cast<int>(perm.size()) != src.size())
    throw InputError("permutation size mismatch");
  std::vector<std::string> names(src.size());
  for (int p = 0; p < src.size(); ++p) {
    if (perm[p] < 0 || perm[p] >= src.size() || !names[perm[p]].empty())
      throw InputError("not a permutation");
    names[perm[p]] = name_prefix + std::to_string(perm[p]);
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int p = 0; p < src.size(); ++p)
    for (int q = 0; q < src.size(); ++q)
      if (src.less(p, q)) pairs.emplace_back(names[perm[p]], names[perm[q]]);
  return SpectralPoset::from_covers(std::move(names), std::move(pairs));
}

}  // namespace specstar
