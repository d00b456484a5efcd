#pragma once

#include "json.hpp"  // vendored nlohmann single header

#include "ptopo/complexes.hpp"
#include "ptopo/morse.hpp"
#include "ptopo/posets.hpp"

namespace ptopo {

nlohmann::json to_json(const Composition& c);
nlohmann::json to_json(const KnapsackPartition& kp);
nlohmann::json to_json(const FinitePoset& p);
nlohmann::json to_json(const OrderedComplex& k);
nlohmann::json to_json(const HomologyProfile& hp);
nlohmann::json to_json(const MorseMatching& m);
nlohmann::json to_json(const ChainElement& x);

}  // namespace ptopo
