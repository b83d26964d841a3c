#include "specstar/criteria.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace specstar {

namespace {

std::string render_members(const BezoutSpectrum& spec, const PointSet& members) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int p : members) {
    if (!first) out << ",";
    first = false;
    out << spec.poset().name(p);
  }
  out << "}";
  return out.str();
}

std::string render_pattern(const BezoutSpectrum& spec, const VSetPattern& pattern) {
  std::ostringstream out;
  if (pattern.whole_space) return "V(0) = whole space";
  out << "V(" << pattern.witness->to_string() << ") = "
      << render_members(spec, pattern.members);
  return out.str();
}

// Shared per-model precomputation for the two derived criteria.
struct CriteriaContext {
  std::vector<VSetPattern> patterns;    // includes the whole-space pattern
  std::vector<PointSet> min_sets;       // minimal elements per pattern
  std::vector<bool> dense_rim;          // density of the rim closure per pattern

  explicit CriteriaContext(const BezoutSpectrum& spec)
      : patterns(enumerate_v_sets(spec)) {
    min_sets.reserve(patterns.size());
    dense_rim.reserve(patterns.size());
    for (const auto& pattern : patterns) {
      min_sets.push_back(minimal_elements(spec.poset(), pattern.members));
      dense_rim.push_back(is_dense(spec.poset(), rim_closure(spec.poset(), pattern.members)));
    }
  }

  // First pattern containing p whose rim closure fails to be dense.
  std::optional<size_t> topological_excluder(int p) const {
    for (size_t i = 0; i < patterns.size(); ++i)
      if (patterns[i].members.count(p) && !dense_rim[i]) return i;
    return std::nullopt;
  }

  // First nested pair (outer, inner) with p in inner and disjoint Min sets.
  std::optional<std::pair<size_t, size_t>> min_excluder(int p) const {
    for (size_t a = 0; a + 1 < patterns.size(); ++a) {    // skip whole space
      for (size_t b = 0; b + 1 < patterns.size(); ++b) {
        if (!patterns[b].members.count(p)) continue;
        if (!std::includes(patterns[a].members.begin(), patterns[a].members.end(),
                           patterns[b].members.begin(), patterns[b].members.end()))
          continue;
        const PointSet& ma = min_sets[a];
        const PointSet& mb = min_sets[b];
        const bool disjoint = std::none_of(mb.begin(), mb.end(),
                                           [&](int q) { return ma.count(q) > 0; });
        if (disjoint) return std::make_pair(a, b);
      }
    }
    return std::nullopt;
  }
};

}  // namespace

PointSet CriteriaReport::agreed() const {
  PointSet out;
  for (int p = 0; p < static_cast<int>(verdicts.size()); ++p)
    if (verdicts[p].oracle && verdicts[p].topological && verdicts[p].min_criterion)
      out.insert(p);
  return out;
}

PointSet spec_ast_topological(const BezoutSpectrum& spec) {
  CriteriaContext ctx(spec);
  PointSet out;
  for (int p = 0; p < spec.poset().size(); ++p)
    if (!ctx.topological_excluder(p)) out.insert(p);
  return out;
}

PointSet spec_ast_min_criterion(const BezoutSpectrum& spec) {
  CriteriaContext ctx(spec);
  PointSet out{spec.root()};
  for (int p = 0; p < spec.poset().size(); ++p) {
    if (spec.is_root(p)) continue;
    if (!ctx.min_excluder(p)) out.insert(p);
  }
  return out;
}

CriteriaReport cross_validate(const BezoutSpectrum& spec) {
  CriteriaContext ctx(spec);
  const PointSet oracle = spec_ast_oracle(spec);

  std::vector<PointVerdicts> verdicts(spec.poset().size());
  for (int p = 0; p < spec.poset().size(); ++p) {
    verdicts[p].oracle = oracle.count(p) > 0;
    verdicts[p].topological = !ctx.topological_excluder(p).has_value();
    verdicts[p].min_criterion =
        spec.is_root(p) || !ctx.min_excluder(p).has_value();
  }
  return assemble_report(spec, std::move(verdicts));
}

CriteriaReport assemble_report(const BezoutSpectrum& spec,
                               std::vector<PointVerdicts> verdicts) {
  if (static_cast<int>(verdicts.size()) != spec.poset().size())
    throw InputError("verdict table size mismatch");
  CriteriaContext ctx(spec);

  CriteriaReport report;
  report.verdicts = std::move(verdicts);
  report.agreement = true;
  for (int p = 0; p < spec.poset().size(); ++p) {
    const PointVerdicts& v = report.verdicts[p];
    if (v.all_agree()) continue;
    report.agreement = false;
    std::ostringstream detail;
    detail << "criteria disagree at " << spec.poset().name(p)
           << ": oracle=" << (v.oracle ? "in" : "out")
           << " topological=" << (v.topological ? "in" : "out")
           << " min=" << (v.min_criterion ? "in" : "out");
    if (auto i = ctx.topological_excluder(p))
      detail << "; non-dense rim closure of " << render_pattern(spec, ctx.patterns[*i]);
    if (!spec.is_root(p)) {
      if (auto pair = ctx.min_excluder(p))
        detail << "; disjoint Min sets for pair ("
               << render_pattern(spec, ctx.patterns[pair->first]) << ", "
               << render_pattern(spec, ctx.patterns[pair->second]) << ")";
    }
    report.counterexamples.push_back(Counterexample{p, detail.str()});
  }

  const PointSet agreed = report.agreed();
  report.cic = agreed == all_points(spec.poset());
  report.max_spec_ast_height = 0;
  for (int p : agreed)
    report.max_spec_ast_height =
        std::max(report.max_spec_ast_height, height(spec.poset(), p));
  return report;
}

bool check_height_bound(const CriteriaReport& report, const BezoutSpectrum& spec) {
  for (int p : report.agreed())
    if (height(spec.poset(), p) > 1) return false;
  return true;
}

bool check_phi_invariance(const BezoutSpectrum& a, const BezoutSpectrum& b,
                          const std::vector<int>& iso) {
  if (!is_order_isomorphism(a.poset(), b.poset(), iso))
    throw InputError("mapping is not an order isomorphism between the spectra");
  return image(iso, cross_validate(a).agreed()) == cross_validate(b).agreed();
}

}  // namespace specstar
