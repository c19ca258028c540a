#pragma once

#include <string>

#include "json.hpp"
#include "opensos/bisim.hpp"
#include "opensos/equations.hpp"
#include "opensos/gsos.hpp"
#include "opensos/ruloid.hpp"
#include "opensos/spec_io.hpp"

namespace opensos {

using Json = nlohmann::json;

/// Document tree with fields tss, labels, ops, rules{name,premises,conclusion}, eqs.
Json json_of(const SpecDocument& doc);
Json json_of(const Tss& t);
Json json_of(const Ruloid& r);
Json json_of(const Step& s);
Json json_of(const Lts& lts);
Json json_of(const Hml& f);
Json json_of(const HpState& st);
Json json_of(const Substitution& sigma);
Json json_of(const Verdict& v);
Json json_of(const CriteriaReport& c);
Json json_of(const FertilityResult& f);
Json json_of(const NonEvolvingTable& t);
Json json_of(const ProofResult& p);
Json json_of(const SweepReport& s);
Json json_of(const PreservationReport& p);

/// {analysis, tss, verdict, details[]}
Json analysis_json(const std::string& analysis, const std::string& tss, const std::string& verdict, Json details);

}  // namespace opensos
