#include "migs/certificate.hpp"

#include <stdexcept>

namespace migs {

FamilyCertificate verify_family(const XFamily& xf) {
  return xf.n >= 11 ? verify_mig_lower_bound(xf) : verify_x_family(xf);
}

namespace {

nlohmann::json checks_json(const Certificate& cert) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& c : cert.checks) out[c.name] = {{"passed", c.passed}, {"detail", c.detail}};
  return out;
}

std::string rational_text(const Rational& r) { return std::to_string(r.num) + "/" + std::to_string(r.den); }

RepairCase parse_repair_case(const std::string& text) {
  for (auto c : {RepairCase::small_n, RepairCase::case1_z_added, RepairCase::case2_rebuilt}) {
    if (to_string(c) == text) return c;
  }
  throw std::invalid_argument("unknown repair_case '" + text + "'");
}

}  // namespace

nlohmann::json family_certificate_json(const XFamily& xf, const FamilyCertificate& cert) {
  nlohmann::json doc;
  doc["n"] = xf.n;
  doc["members"] = nlohmann::json::array();
  doc["witnesses"] = nlohmann::json::object();
  for (std::size_t k = 0; k < xf.members.size(); ++k) {
    const std::string text = xf.members[k].to_string();
    doc["members"].push_back(text);
    if (k < xf.witnesses.size()) doc["witnesses"][text] = xf.witnesses[k];
  }
  doc["masks"] = nlohmann::json::array();
  for (const auto& m : cert.masks) doc["masks"].push_back(m.to_bitstring());
  doc["checks"] = checks_json(cert);
  doc["passed"] = cert.passed();
  nlohmann::json meta;
  meta["size"] = xf.members.size();
  meta["repair_case"] = to_string(xf.repair_case);
  meta["m"] = xf.m;
  meta["alpha"] = xf.alpha;
  meta["t"] = nlohmann::json::array();
  for (const auto& t : xf.tvals) meta["t"].push_back(rational_text(t));
  meta["z"] = xf.z ? nlohmann::json(xf.z->to_string()) : nlohmann::json(nullptr);
  doc["metadata"] = meta;
  return doc;
}

XFamily family_from_json(const nlohmann::json& doc) {
  try {
    XFamily xf;
    xf.n = doc.at("n").get<int>();
    const auto& members = doc.at("members");
    if (!members.is_array()) throw std::invalid_argument("'members' must be an array");
    for (const auto& m : members) xf.members.push_back(Partition::parse(m.get<std::string>(), xf.n));
    const nlohmann::json witnesses = doc.value("witnesses", nlohmann::json::object());
    const std::vector<int> fallback = least_witnesses(xf.members, xf.n);
    for (std::size_t k = 0; k < xf.members.size(); ++k) {
      const std::string key = xf.members[k].to_string();
      xf.witnesses.push_back(witnesses.contains(key) ? witnesses.at(key).get<int>() : fallback[k]);
    }
    if (doc.contains("metadata")) {
      const auto& meta = doc.at("metadata");
      if (meta.contains("repair_case")) xf.repair_case = parse_repair_case(meta.at("repair_case").get<std::string>());
      xf.m = meta.value("m", 0);
      if (meta.contains("alpha")) xf.alpha = meta.at("alpha").get<std::vector<long long>>();
      if (meta.contains("z") && !meta.at("z").is_null()) {
        xf.z = Partition::parse(meta.at("z").get<std::string>(), xf.n);
      }
    }
    return xf;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed family document: ") + e.what());
  }
}

nlohmann::json lemma_certificate_json(const LemmaPartition& lp, const LemmaCertificate& cert) {
  nlohmann::json doc;
  doc["i"] = lp.i;
  doc["n"] = lp.n;
  doc["partition"] = lp.p.to_string();
  doc["case"] = to_string(lp.case_tag);
  doc["missing"] = cert.missing;
  doc["expected_missing"] = cert.expected_missing;
  doc["mask"] = cert.mask.to_bitstring();
  doc["checks"] = checks_json(cert);
  doc["passed"] = cert.passed();
  return doc;
}

nlohmann::json search_result_json(const SearchResult& result) {
  nlohmann::json doc;
  doc["n"] = result.n;
  doc["t_max"] = result.t_max;
  doc["members"] = nlohmann::json::array();
  doc["witnesses"] = nlohmann::json::object();
  for (std::size_t k = 0; k < result.optimal_family.size(); ++k) {
    const std::string text = result.optimal_family[k].to_string();
    doc["members"].push_back(text);
    if (k < result.witnesses.size()) doc["witnesses"][text] = result.witnesses[k];
  }
  doc["masks"] = nlohmann::json::array();
  for (const auto& p : result.optimal_family) doc["masks"].push_back(partial_sums(p).to_bitstring());
  doc["nodes_explored"] = result.nodes_explored;
  doc["incumbent"] = result.incumbent;
  doc["exhaustive"] = result.exhaustive;
  return doc;
}

}  // namespace migs
