#pragma once

#include <string>

#include <json.hpp>

#include "permspectra/characters.hpp"
#include "permspectra/families.hpp"
#include "permspectra/partitions.hpp"
#include "permspectra/permcore.hpp"
#include "permspectra/search.hpp"
#include "permspectra/spectral.hpp"

namespace permspectra {

/// Insertion-ordered JSON so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

// Serialization conventions: permutations are 1-indexed one-line integer
// arrays, partitions are integer arrays like [3,2,2] (string keys "[3,2,2]"
// inside maps), rationals are strings "p/q".

Json to_json(const Permutation& p);
Json to_json(const Partition& p);
Json to_json(const Rat& r);  // string
Json to_json(const ClassFunction& f);
Json to_json(const CharacterTable& t);
Json to_json(const WeightedCayleySpec& s);
Json to_json(const SpectrumTable& s);
Json to_json(const HoffmanReport& r);
Json to_json(const Family& f);
Json to_json(const CosetSpec& c);
Json to_json(const StabilityReport& r);
Json to_json(const W1Report& r);
Json to_json(const SearchResult& r);
Json to_json(const NeighborhoodReport& r);
Json to_json(const TightnessReport& r);

Permutation permutation_from_json(const Json& j);
Partition partition_from_json(const Json& j);
Family family_from_json(const Json& j, int n);
WeightedCayleySpec spec_from_json(const Json& j);

std::string character_table_csv(const CharacterTable& t);
std::string spectrum_csv(const SpectrumTable& s);

}  // namespace permspectra
