#pragma once

#include <json.hpp>

#include "goeritz/goeritz_group.hpp"
#include "goeritz/nt_classifier.hpp"
#include "goeritz/recognizer.hpp"
#include "goeritz/slope_lab.hpp"

// Machine-readable output. Serialization uses ordered JSON so that
// parse-then-reserialize round trips byte-identically.

namespace goeritz {

using json = nlohmann::ordered_json;

json normal_form_to_json(const NormalForm& nf);
NormalForm normal_form_from_json(const json& j);

json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const json& j);

json scan_report_to_json(const ScanReport& r);
json recognition_to_json(const RecognitionResult& r);
json slopes_to_json(Monodromy mono, long long bound, const std::set<Slope>& slopes);

}  // namespace goeritz
