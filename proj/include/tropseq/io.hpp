#pragma once

#include "tropseq/dimension.hpp"
#include "tropseq/polyhedra.hpp"
#include "tropseq/poly.hpp"
#include "tropseq/tropical.hpp"

#include <json.hpp>

#include <string>

namespace tropseq::io {

using nlohmann::json;

// All parsers throw std::invalid_argument on malformed input.

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

/// ["a0", "a1", ...], low degree first.
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

/// {"order": n, "coeffs": [[...], ...]}
json to_json(const HolonomicSystem& sys);
HolonomicSystem system_from_json(const json& j);

json sequence_to_json(const Sequence& w);
Sequence sequence_from_json(const json& j);

json to_json(const EntropyClass& cls);
json to_json(const Pattern& pat);
json to_json(const AttainmentGraph& g);
json to_json(const LinearSystem& ls);
json to_json(const ScanReport& report);
json to_json(const LemmaReport& report);

/// Columns: N,dim,ratio_num,ratio_den,classified_entropy
std::string scan_to_csv(const ScanReport& report);

json read_json_file(const std::string& path);

}  // namespace tropseq::io
