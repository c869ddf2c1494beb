#pragma once

#include <json.hpp>

#include "migs/constructions.hpp"
#include "migs/family_search.hpp"

namespace migs {

/// verify_mig_lower_bound for n >= 11, verify_x_family below.
FamilyCertificate verify_family(const XFamily& xf);

/// { n, members, witnesses, masks, checks, metadata }.
nlohmann::json family_certificate_json(const XFamily& xf, const FamilyCertificate& cert);

/// Reads the document written by family_certificate_json. A member without a
/// witness entry gets the least integer in every other mask but not its own.
/// Throws std::invalid_argument on a malformed document.
XFamily family_from_json(const nlohmann::json& doc);

nlohmann::json lemma_certificate_json(const LemmaPartition& lp, const LemmaCertificate& cert);

nlohmann::json search_result_json(const SearchResult& result);

}  // namespace migs
