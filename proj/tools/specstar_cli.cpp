#include "specstar/criteria.hpp"
#include "specstar/model_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace specstar;
using nlohmann::json;

constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

std::string read_document(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
}

// Downward closedness of the agreed Spec* in the poset; required for exit 0.
std::vector<std::string> structural_violations(const BezoutSpectrum& spec,
                                               const CriteriaReport& report) {
  std::vector<std::string> out;
  const PointSet agreed = report.agreed();
  if (!agreed.count(spec.root()))
    out.push_back("agreed spec* does not contain the root");
  for (int p : agreed)
    for (int q = 0; q < spec.poset().size(); ++q)
      if (spec.poset().less(q, p) && !agreed.count(q))
        out.push_back("agreed spec* is not downward closed: contains " +
                      spec.poset().name(p) + " but not " + spec.poset().name(q));
  if (!check_height_bound(report, spec))
    out.push_back("agreed spec* contains a point of height > 1");
  return out;
}

int cmd_spectrum(const std::string& model_path, const std::string& format,
                 const std::string& dot_path) {
  DescriptorPtr desc = parse_model_text(read_document(model_path));
  BezoutSpectrum spec = build_spectrum(desc);
  if (!dot_path.empty()) write_file(dot_path, spectrum_to_dot(spec));
  if (format == "json")
    std::cout << spectrum_to_json(spec).dump(2) << "\n";
  else
    std::cout << spectrum_to_text(spec);
  return 0;
}

int cmd_verify(const std::string& model_path, const std::string& format,
               const std::string& dot_path, bool inject_fault) {
  DescriptorPtr desc = parse_model_text(read_document(model_path));
  BezoutSpectrum spec = build_spectrum(desc);
  CriteriaReport report = cross_validate(spec);
  if (inject_fault) {
    auto verdicts = report.verdicts;
    verdicts.back().topological = !verdicts.back().topological;
    report = assemble_report(spec, std::move(verdicts));
  }
  const std::vector<std::string> extra = structural_violations(spec, report);
  if (!dot_path.empty()) write_file(dot_path, spectrum_to_dot(spec));
  if (format == "json")
    std::cout << report_to_json(spec, report, extra).dump(2) << "\n";
  else
    std::cout << report_to_text(spec, report, extra);
  const bool ok = report.agreement && extra.empty();
  return ok ? 0 : kExitViolation;
}

int cmd_fuzz(int count, std::uint64_t seed, int max_rank, int max_components,
             const std::string& format) {
  std::mt19937_64 rng(seed);
  json iterations = json::array();
  std::ostringstream text;
  int passed = 0;
  for (int i = 0; i < count; ++i) {
    DescriptorPtr desc = random_descriptor(rng, max_rank, max_components);
    BezoutSpectrum spec = build_spectrum(desc);
    CriteriaReport report = cross_validate(spec);
    bool ok = report.agreement && structural_violations(spec, report).empty();

    // rim-closure invariance probe on a random relabeling
    const int n = spec.poset().size();
    std::vector<int> perm(n);
    for (int p = 0; p < n; ++p) perm[p] = p;
    for (int p = n - 1; p > 0; --p)
      std::swap(perm[p], perm[static_cast<int>(rng() % static_cast<std::uint64_t>(p + 1))]);
    PointSet subset;
    for (int p = 0; p < n; ++p)
      if (rng() % 2 == 0) subset.insert(p);
    SpectralPoset relabeled = permuted_copy(spec.poset(), perm);
    if (!check_qf_invariance(spec.poset(), relabeled, perm, subset)) ok = false;

    if (ok) ++passed;
    iterations.push_back(json{{"index", i}, {"model", model_to_json(desc)}, {"ok", ok}});
    text << "iter " << i << ": model=" << desc->to_string() << " "
         << (ok ? "ok" : "FAIL") << "\n";
  }
  if (format == "json") {
    json out{{"seed", seed},
             {"count", count},
             {"bounds", json{{"max_rank", max_rank}, {"max_components", max_components}}},
             {"iterations", std::move(iterations)},
             {"passed", passed}};
    std::cout << out.dump(2) << "\n";
  } else {
    text << "fuzz: " << passed << "/" << count << " passed (seed " << seed << ")\n";
    std::cout << text.str();
  }
  return passed == count ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Bezout-domain spectra: Zariski topology and spec* criteria"};
  app.require_subcommand(1);

  std::string model_path = "-";
  std::string format = "text";
  std::string dot_path;
  bool inject_fault = false;
  int count = 100;
  std::uint64_t seed = 0;
  int max_rank = 3;
  int max_components = 3;

  auto add_common = [&](CLI::App* sub, bool with_model) {
    if (with_model)
      sub->add_option("model", model_path, "model document path ('-' for stdin)");
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "print the prime spectrum of a model");
  add_common(spectrum, true);
  spectrum->add_option("--export-dot", dot_path, "write a DOT graph description");

  CLI::App* verify = app.add_subcommand("verify", "cross-validate the spec* criteria");
  add_common(verify, true);
  verify->add_option("--export-dot", dot_path, "write a DOT graph description");
  verify->add_flag("--inject-fault", inject_fault)->group("");  // hidden test hook

  CLI::App* fuzz = app.add_subcommand("fuzz", "cross-validate random models");
  fuzz->add_option("--count", count, "number of models")->check(CLI::PositiveNumber);
  fuzz->add_option("--seed", seed, "random seed");
  fuzz->add_option("--max-rank", max_rank, "maximum lex rank")->check(CLI::PositiveNumber);
  fuzz->add_option("--max-components", max_components, "maximum product components")
      ->check(CLI::PositiveNumber);
  add_common(fuzz, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(model_path, format, dot_path);
    if (verify->parsed()) return cmd_verify(model_path, format, dot_path, inject_fault);
    return cmd_fuzz(count, seed, max_rank, max_components, format);
  } catch (const specstar::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
