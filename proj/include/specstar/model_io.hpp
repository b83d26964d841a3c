#pragma once

#include "specstar/bezout_model.hpp"
#include "specstar/criteria.hpp"

#include <json.hpp>

#include <random>
#include <string>

namespace specstar {

/// Parses a model document: {"type":"lex","rank":k} or
/// {"type":"product","components":[...]}. Throws InputError on schema
/// violations or when the total coordinate count exceeds the limit.
DescriptorPtr parse_model(const nlohmann::json& doc, int max_coordinates = 64);
DescriptorPtr parse_model_text(const std::string& text, int max_coordinates = 64);

nlohmann::json model_to_json(const DescriptorPtr& desc);

std::string filter_to_text(const PrimeFilter& f);
nlohmann::json filter_to_json(const PrimeFilter& f);

std::string spectrum_to_text(const BezoutSpectrum& spec);
nlohmann::json spectrum_to_json(const BezoutSpectrum& spec);

/// Plain graph-description export: one directed edge per cover pair.
std::string spectrum_to_dot(const BezoutSpectrum& spec);

/// Extra verdict-level findings attached to a report rendering (height-bound
/// or closure violations found by the CLI).
nlohmann::json report_to_json(const BezoutSpectrum& spec, const CriteriaReport& report,
                              const std::vector<std::string>& extra_violations = {});
std::string report_to_text(const BezoutSpectrum& spec, const CriteriaReport& report,
                           const std::vector<std::string>& extra_violations = {});

/// Deterministic random descriptor within the given bounds; drawing is done
/// with plain modulo reduction so the stream is stable across platforms.
DescriptorPtr random_descriptor(std::mt19937_64& rng, int max_rank, int max_components);

}  // namespace specstar
