#pragma once

#include <json.hpp>

#include "facterm/fincat.hpp"
#include "facterm/fmor.hpp"
#include "facterm/fstring.hpp"
#include "facterm/nerve.hpp"
#include "facterm/orientals.hpp"
#include "facterm/sdelta.hpp"
#include "facterm/spans.hpp"

namespace facterm {

using Json = nlohmann::json;

Json fstring_to_json(const FString& s);
FString fstring_from_json(const Json& j);

Json token_to_json(const GeneratorToken& t);
GeneratorToken token_from_json(const Json& j);
Json word_to_json(const std::vector<GeneratorToken>& w);
std::vector<GeneratorToken> word_from_json(const Json& j);

Json fmorphism_to_json(const FMorphism& f);
FMorphism fmorphism_from_json(const Json& j);

Json flags_to_json(const ClassFlags& f);

Json fscategory_to_json(const FSCategory& f);
FSCategory fscategory_from_json(const Json& j);

Json fsfunctor_to_json(const FSFunctor& p);
FSFunctor fsfunctor_from_json(const Json& j);

Json labeling_to_json(const PathLabeling& lab);
PathLabeling labeling_from_json(const Json& j);

Json table_to_json(const ModelTable& t);
ModelTable table_from_json(const Json& j);

Json span_to_json(const Span& s);
Span span_from_json(const Json& j);

Json distlaw_to_json(const DistLaw& d);
DistLaw distlaw_from_json(const Json& j);

Json basedistlaw_to_json(const BaseDistLaw& b);
BaseDistLaw basedistlaw_from_json(const Json& j);

Json homology_to_json(const FString& s, const std::vector<HomologyGroup>& h);

Json orcell_to_json(const OrCell& c);
OrCell orcell_from_json(const Json& j);

}  // namespace facterm
