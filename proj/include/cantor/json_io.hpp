#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cantor/admissibility.hpp"
#include "cantor/digits.hpp"
#include "cantor/ifs.hpp"

namespace cantor {

nlohmann::json to_json(const TranslationVector& t);
TranslationVector vector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const AffineMap& map);
nlohmann::json to_json(const std::vector<AffineMap>& ifs);
nlohmann::json to_json(const VerifyReport& report);

/// One CSV row per vector: m,N,tau,entries,admissible. Entries are digit
/// strings joined by ';'.
std::string to_csv_row(const TranslationVector& t, bool admissible);
inline const char* kCsvHeader = "m,N,tau,entries,admissible";

}  // namespace cantor
