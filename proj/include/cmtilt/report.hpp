#pragma once

// JSON and plain-text rendering of analysis and catalog reports.

#include <string>

#include "json.hpp"

#include "cmtilt/analysis.hpp"
#include "cmtilt/catalog.hpp"

namespace cmtilt {

nlohmann::ordered_json to_json(const AnalysisReport& r);
nlohmann::ordered_json to_json(const SiltingReport& r);
nlohmann::ordered_json to_json(const CatalogRow& row);
nlohmann::ordered_json to_json(const CatalogSummary& s);

std::string to_text(const AnalysisReport& r);
std::string to_text(const SiltingReport& r);
std::string to_text(const CatalogSummary& s);

}  // namespace cmtilt
