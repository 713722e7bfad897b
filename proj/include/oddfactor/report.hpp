#pragma once

// JSON views of the library's result types. Floating values are rounded to
// `precision` decimal places so output is stable across runs.

#include <json.hpp>

#include "oddfactor/factor.hpp"
#include "oddfactor/spectral.hpp"
#include "oddfactor/thresholds.hpp"
#include "oddfactor/verify.hpp"

namespace oddfactor {

inline constexpr int kDefaultPrecision = 9;

double round_to(double value, int precision);

nlohmann::json to_json(const Spectrum& s, int precision = kDefaultPrecision);
nlohmann::json to_json(const ThresholdParams& p, int precision = kDefaultPrecision);
nlohmann::json to_json(const FactorCertificate& c);
nlohmann::json to_json(const AmahashiViolation& v);
nlohmann::json to_json(const TrialReport& t, int precision = kDefaultPrecision);
nlohmann::json to_json(const SharpnessResult& s, int precision = kDefaultPrecision);
nlohmann::json to_json(const Case2Result& c, int precision = kDefaultPrecision);
nlohmann::json to_json(const CampaignSummary& s, int precision = kDefaultPrecision);

}  // namespace oddfactor
