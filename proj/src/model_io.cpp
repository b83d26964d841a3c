#include "specstar/model_io.hpp"

#include <sstream>
#include <utility>
#include <vector>

namespace specstar {

namespace {

using nlohmann::json;

DescriptorPtr parse_rec(const json& doc) {
  if (!doc.is_object()) throw InputError("model document node must be an object");
  const auto type_it = doc.find("type");
  if (type_it == doc.end() || !type_it->is_string())
    throw InputError("model document node needs a string \"type\"");
  const std::string type = type_it->get<std::string>();
  if (type == "lex") {
    const auto rank_it = doc.find("rank");
    if (rank_it == doc.end() || !rank_it->is_number_integer())
      throw InputError("\"lex\" node needs an integer \"rank\"");
    const int rank = rank_it->get<int>();
    if (rank < 1) throw InputError("\"rank\" must be >= 1");
    return LGroupDescriptor::lex(rank);
  }
  if (type == "product") {
    const auto comp_it = doc.find("components");
    if (comp_it == doc.end() || !comp_it->is_array() || comp_it->empty())
      throw InputError("\"product\" node needs a non-empty \"components\" array");
    std::vector<DescriptorPtr> components;
    components.reserve(comp_it->size());
    for (const auto& child : *comp_it) components.push_back(parse_rec(child));
    return LGroupDescriptor::product(std::move(components));
  }
  throw InputError("unknown model node type: " + type);
}

json point_names_json(const BezoutSpectrum& spec, const PointSet& points) {
  json out = json::array();
  for (int p : points) out.push_back(spec.poset().name(p));
  return out;
}

}  // namespace

DescriptorPtr parse_model(const nlohmann::json& doc, int max_coordinates) {
  DescriptorPtr desc = parse_rec(doc);
  if (desc->coordinate_count() > max_coordinates)
    throw InputError("model exceeds the coordinate limit of " +
                     std::to_string(max_coordinates));
  return desc;
}

DescriptorPtr parse_model_text(const std::string& text, int max_coordinates) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("model document is not valid JSON: ") + e.what());
  }
  return parse_model(doc, max_coordinates);
}

nlohmann::json model_to_json(const DescriptorPtr& desc) {
  if (desc->is_lex()) return json{{"type", "lex"}, {"rank", desc->lex_rank()}};
  json components = json::array();
  for (const auto& comp : desc->components()) components.push_back(model_to_json(comp));
  return json{{"type", "product"}, {"components", std::move(components)}};
}

std::string filter_to_text(const PrimeFilter& f) {
  std::ostringstream out;
  for (int ci : f.path) out << "c" << (ci + 1) << ".";
  out << "level " << f.level;
  return out.str();
}

nlohmann::json filter_to_json(const PrimeFilter& f) {
  json path = json::array();
  for (int ci : f.path) path.push_back(ci + 1);
  return json{{"path", std::move(path)}, {"level", f.level}};
}

std::string spectrum_to_text(const BezoutSpectrum& spec) {
  std::ostringstream out;
  out << "model: " << spec.group()->to_string() << "\n";
  out << "points:\n";
  for (int p = 0; p < spec.poset().size(); ++p) {
    out << "  " << spec.poset().name(p) << "  height=" << height(spec.poset(), p);
    if (!spec.is_root(p)) out << "  filter=" << filter_to_text(spec.filter(p));
    out << "\n";
  }
  out << "edges:\n";
  for (int p = 0; p < spec.poset().size(); ++p)
    for (int q = 0; q < spec.poset().size(); ++q)
      if (covers(spec.poset(), p, q))
        out << "  " << spec.poset().name(p) << " -> " << spec.poset().name(q) << "\n";
  return out.str();
}

nlohmann::json spectrum_to_json(const BezoutSpectrum& spec) {
  json points = json::array();
  for (int p = 0; p < spec.poset().size(); ++p) {
    json pt{{"name", spec.poset().name(p)}, {"height", height(spec.poset(), p)}};
    pt["filter"] = spec.is_root(p) ? json(nullptr) : filter_to_json(spec.filter(p));
    points.push_back(std::move(pt));
  }
  json edges = json::array();
  for (int p = 0; p < spec.poset().size(); ++p)
    for (int q = 0; q < spec.poset().size(); ++q)
      if (covers(spec.poset(), p, q))
        edges.push_back(json{{"from", spec.poset().name(p)}, {"to", spec.poset().name(q)}});
  return json{{"model", model_to_json(spec.group())},
              {"points", std::move(points)},
              {"edges", std::move(edges)}};
}

std::string spectrum_to_dot(const BezoutSpectrum& spec) {
  std::ostringstream out;
  out << "digraph spectrum {\n";
  for (int p = 0; p < spec.poset().size(); ++p)
    out << "  \"" << spec.poset().name(p) << "\";\n";
  for (int p = 0; p < spec.poset().size(); ++p)
    for (int q = 0; q < spec.poset().size(); ++q)
      if (covers(spec.poset(), p, q))
        out << "  \"" << spec.poset().name(p) << "\" -> \""
            << spec.poset().name(q) << "\";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json report_to_json(const BezoutSpectrum& spec, const CriteriaReport& report,
                              const std::vector<std::string>& extra_violations) {
  json points = json::array();
  for (int p = 0; p < spec.poset().size(); ++p) {
    json pt{{"name", spec.poset().name(p)}, {"height", height(spec.poset(), p)}};
    pt["filter"] = spec.is_root(p) ? json(nullptr) : filter_to_json(spec.filter(p));
    points.push_back(std::move(pt));
  }

  PointSet oracle, topological, min_criterion;
  for (int p = 0; p < spec.poset().size(); ++p) {
    if (report.verdicts[p].oracle) oracle.insert(p);
    if (report.verdicts[p].topological) topological.insert(p);
    if (report.verdicts[p].min_criterion) min_criterion.insert(p);
  }
  json spec_ast{{"oracle", point_names_json(spec, oracle)},
                {"topological", point_names_json(spec, topological)},
                {"min_criterion", point_names_json(spec, min_criterion)},
                {"agreed", point_names_json(spec, report.agreed())}};

  json violations = json::array();
  for (const auto& ce : report.counterexamples)
    violations.push_back(json{{"point", spec.poset().name(ce.point)}, {"detail", ce.detail}});
  for (const auto& v : extra_violations)
    violations.push_back(json{{"point", nullptr}, {"detail", v}});

  return json{{"model", model_to_json(spec.group())},
              {"points", std::move(points)},
              {"spec_ast", std::move(spec_ast)},
              {"cic", report.cic},
              {"violations", std::move(violations)}};
}

std::string report_to_text(const BezoutSpectrum& spec, const CriteriaReport& report,
                           const std::vector<std::string>& extra_violations) {
  std::ostringstream out;
  out << "model: " << spec.group()->to_string() << "\n";
  out << "points:\n";
  for (int p = 0; p < spec.poset().size(); ++p) {
    out << "  " << spec.poset().name(p) << "  height=" << height(spec.poset(), p);
    if (!spec.is_root(p)) out << "  filter=" << filter_to_text(spec.filter(p));
    out << "\n";
  }
  auto render_column = [&](auto member) {
    std::ostringstream line;
    bool first = true;
    for (int p = 0; p < spec.poset().size(); ++p) {
      if (!member(report.verdicts[p])) continue;
      if (!first) line << " ";
      first = false;
      line << spec.poset().name(p);
    }
    return line.str();
  };
  out << "spec*:\n";
  out << "  oracle:        "
      << render_column([](const PointVerdicts& v) { return v.oracle; }) << "\n";
  out << "  topological:   "
      << render_column([](const PointVerdicts& v) { return v.topological; }) << "\n";
  out << "  min-criterion: "
      << render_column([](const PointVerdicts& v) { return v.min_criterion; }) << "\n";
  out << "agreement: " << (report.agreement ? "yes" : "no") << "\n";
  out << "cic: " << (report.cic ? "yes" : "no") << "\n";
  if (report.counterexamples.empty() && extra_violations.empty()) {
    out << "violations: none\n";
  } else {
    out << "violations:\n";
    for (const auto& ce : report.counterexamples) out << "  " << ce.detail << "\n";
    for (const auto& v : extra_violations) out << "  " << v << "\n";
  }
  return out.str();
}

DescriptorPtr random_descriptor(std::mt19937_64& rng, int max_rank, int max_components) {
  if (max_rank < 1 || max_components < 1)
    throw InputError("size bounds must be >= 1");
  auto draw = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  // draw a total budget of lex blocks, then group some consecutive blocks
  // into nested products; the budget keeps enumeration sizes desk-scale
  int remaining = draw(1, max_components);
  if (remaining == 1) return LGroupDescriptor::lex(draw(1, max_rank));
  std::vector<DescriptorPtr> components;
  while (remaining > 0) {
    int take = 1;
    if (remaining >= 2 && draw(0, 3) == 0) take = draw(2, remaining);
    if (take == 1) {
      components.push_back(LGroupDescriptor::lex(draw(1, max_rank)));
    } else {
      std::vector<DescriptorPtr> blocks;
      blocks.reserve(take);
      for (int j = 0; j < take; ++j)
        blocks.push_back(LGroupDescriptor::lex(draw(1, max_rank)));
      components.push_back(LGroupDescriptor::product(std::move(blocks)));
    }
    remaining -= take;
  }
  if (components.size() == 1) return components.front();
  return LGroupDescriptor::product(std::move(components));
}

}  // namespace specstar
