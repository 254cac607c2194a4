#pragma once

// JSON, CSV and text renderings shared by the CLI and the Python module.
// Polynomials in q become [[exponent, coefficient], ...] in increasing
// exponent; integers that do not fit in 64 bits are written as strings.

#include <string>

#include <json.hpp>

#include "qchar/characters.hpp"
#include "qchar/qtorus.hpp"
#include "qchar/verify.hpp"

namespace qchar {

inline constexpr int kSchemaVersion = 1;

nlohmann::ordered_json integer_json(const BigInt& x);
nlohmann::ordered_json qpoly_json(const QPoly& c);
// "1 + 2q^-1 - q^-3", highest power first
std::string qpoly_text(const QPoly& c);

nlohmann::ordered_json character_json(const GradedCharacter& g);
std::string character_csv(const GradedCharacter& g);
std::string character_text(const GradedCharacter& g);

// Reports without timings, so output depends only on the inputs.
nlohmann::ordered_json reports_json(const std::string& suite, const std::vector<CheckReport>& reports);
std::string reports_csv(const std::vector<CheckReport>& reports);
std::string reports_text(const std::vector<CheckReport>& reports);

nlohmann::ordered_json torus_json(int rank, int k, const QTable& table);

}  // namespace qchar
