#pragma once

// Canonical JSON documents for every structure. Emission is
// `json::dump()` of objects with sorted keys, so parse followed by emit
// reproduces a canonical document byte for byte. Elements are referenced by
// their string ids.

#include <stdexcept>
#include <string>

#include "fatdelta/bicat.hpp"
#include "fatdelta/fair_set.hpp"
#include "fatdelta/fair_two.hpp"
#include "fatdelta/fat_delta.hpp"
#include "fatdelta/fincat.hpp"
#include "json.hpp"

namespace fatdelta::io {

using json = nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses text, throwing FormatError on malformed JSON.
json parse_json(const std::string& text);
/// Compact dump with sorted keys.
std::string emit(const json& j);

// {"objects":[id], "arrows":[{"id","src","tgt"}], "identities":{obj:arr}, "compose":[[f,g,fg]]}
json to_json(const FinCategory& c);
FinCategory category_from_json(const json& j);

// {"src":cat, "dst":cat, "objMap":{id:id}, "arrMap":{id:id}}
json to_json(const FinFunctor& f);
FinFunctor functor_from_json(const json& j);

// the category fields without identities, plus "units":[{"id","object","arrow"}]
json to_json(const FairSetCategory& x);
FairSetCategory fair_set_from_json(const json& j);

// {"objects":[id], "homs":[{"src","tgt","category"}],
//  "tensor":[{"x","y","z","objects":[[a,b,ab]],"arrows":[[f,g,fg]]}]}
json to_json(const SemiTwoCategory& s);
SemiTwoCategory semi_two_from_json(const json& j);

// semi-2-category fields plus
// "units":[{"object","category","tensor":{"objects","arrows"},"embed":{"objMap","arrMap"}}]
json to_json(const FairTwoCategory& x);
FairTwoCategory fair_two_from_json(const json& j);

// semi-2-category fields plus
// "units":[{"object","I","lambda":[{"tgt","cell","component"}],"rho":[{"src","cell","component"}]}]
json to_json(const StrictCompBicategory& c);
StrictCompBicategory bicategory_from_json(const json& j);

json to_json(const SemiTwoCategory& s, const IdentityTriple& t);
IdentityTriple triple_from_json(const SemiTwoCategory& s, const json& j);

/// One-object bicategory as a monoidal category:
/// {"category", "tensor":{"objects","arrows"}, "unit":{"I","lambda":[{"cell","component"}],"rho":[...]}}
StrictCompBicategory monoidal_from_json(const json& j);
json to_monoidal_json(const StrictCompBicategory& c);

// {"top","bottom","srcEpi","dstEpi"} as delta-map strings
json to_json(const EpiSquare& sq);
EpiSquare epi_square_from_json(const json& j);

json to_json(const Verdict& v);

}  // namespace fatdelta::io
