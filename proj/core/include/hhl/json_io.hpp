#pragma once

// JSON renderings of every report and object the CLI writes. Objects use
// sorted keys and canonical basis orders, so equal inputs serialize to
// identical bytes.

#include <string>

#include <nlohmann/json.hpp>

#include "hhl/bar.hpp"
#include "hhl/complexes.hpp"
#include "hhl/hecke.hpp"
#include "hhl/homology.hpp"
#include "hhl/identities.hpp"
#include "hhl/structure_checks.hpp"

namespace hhl {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

// [["[1,2]", "3"], ["[2,1]", "-1/2"], ...] in canonical basis order.
Json to_json(const HeckeElement& x);
Json to_json(const ComplexInfo& info);
// Metadata, then per degree the labels and the boundary as [row, col, "value"] triplets.
Json to_json(const LabeledComplex& c);
Json to_json(const HomologyReport& rep);
Json to_json(const IdentityReport& rep);
Json to_json(const StructureReport& rep);
Json to_json(const StabilizationReport& rep);

// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

// "degree,dim,rank,betti" rows in increasing degree.
std::string betti_csv(const HomologyReport& rep);

}  // namespace hhl
