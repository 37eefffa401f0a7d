#include "tgs/report.hpp"

#include <sstream>

#include "json.hpp"

namespace tgs {

ProofTag tag_from_name(const std::string& name) {
  for (ProofTag t :
       {ProofTag::SN, ProofTag::KCIRC, ProofTag::TI, ProofTag::R2,
        ProofTag::NNC, ProofTag::AUTOCENT, ProofTag::BFS_EXACT,
        ProofTag::UNDETERMINED})
    if (name == tag_name(t))
      return t;
  throw error("unknown proof tag: " + name);
}

std::string input_digest(const Group& g) {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(g.degree());
  for (const Perm& p : g.generators())
    for (unsigned i = 0; i < g.degree(); ++i)
      mix(p[i]);
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

std::string record_to_json(const ReportRecord& rec) {
  nlohmann::ordered_json j;
  j["schema_version"] = rec.schema_version;
  j["tool_version"] = rec.tool_version;
  j["mode"] = rec.mode;
  j["input_digest"] = rec.digest;
  j["caps"] = {{"enum", rec.caps.enum_cap},
               {"orbit", rec.caps.orbit_cap},
               {"scan", rec.caps.scan_cap},
               {"subgroup", rec.caps.subgroup_cap},
               {"quotient", rec.caps.quotient_cap},
               {"states", rec.caps.state_budget},
               {"pairs", rec.caps.pair_cap}};
  const KReport& r = rec.report;
  j["group"] = r.group_name;
  j["prime"] = r.prime;
  j["group_order"] = r.group_order;
  j["sylow_order"] = r.sylow_order;
  j["normalizer_order"] = r.normalizer_order;
  j["k_circle_order"] = r.k_circle_order;
  j["tag"] = tag_name(r.tag);
  if (r.k_determined) {
    j["k_order"] = r.k_order;
    j["t_group"] = r.t_invariants;
  } else {
    j["k_interval"] = {r.k_lower, r.k_upper};
    j["t_group"] = "undetermined";
  }
  j["failed_criteria"] = r.failed_criteria;
  j["timing_ms"] = r.elapsed_ms;
  return j.dump(2);
}

ReportRecord record_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ReportRecord rec;
  rec.schema_version = j.at("schema_version").get<unsigned>();
  rec.tool_version = j.at("tool_version").get<std::string>();
  rec.mode = j.at("mode").get<std::string>();
  rec.digest = j.at("input_digest").get<std::string>();
  const auto& c = j.at("caps");
  rec.caps.enum_cap = c.at("enum").get<unsigned long long>();
  rec.caps.orbit_cap = c.at("orbit").get<unsigned long long>();
  rec.caps.scan_cap = c.at("scan").get<unsigned long long>();
  rec.caps.subgroup_cap = c.at("subgroup").get<unsigned long long>();
  rec.caps.quotient_cap = c.at("quotient").get<unsigned long long>();
  rec.caps.state_budget = c.at("states").get<unsigned long long>();
  rec.caps.pair_cap = c.at("pairs").get<unsigned long long>();
  KReport& r = rec.report;
  r.group_name = j.at("group").get<std::string>();
  r.prime = j.at("prime").get<unsigned>();
  r.group_order = j.at("group_order").get<unsigned long long>();
  r.sylow_order = j.at("sylow_order").get<unsigned long long>();
  r.normalizer_order = j.at("normalizer_order").get<unsigned long long>();
  r.k_circle_order = j.at("k_circle_order").get<unsigned long long>();
  r.tag = tag_from_name(j.at("tag").get<std::string>());
  if (j.contains("k_order")) {
    r.k_determined = true;
    r.k_order = j.at("k_order").get<unsigned long long>();
    r.k_lower = r.k_upper = r.k_order;
    r.t_invariants =
        j.at("t_group").get<std::vector<unsigned long long>>();
  } else {
    r.k_lower = j.at("k_interval").at(0).get<unsigned long long>();
    r.k_upper = j.at("k_interval").at(1).get<unsigned long long>();
  }
  r.failed_criteria =
      j.at("failed_criteria").get<std::vector<std::string>>();
  r.elapsed_ms = j.at("timing_ms").get<double>();
  return rec;
}

namespace {

std::string invariants_text(const std::vector<unsigned long long>& inv) {
  if (inv.empty())
    return "1";
  std::string out;
  for (size_t i = 0; i < inv.size(); ++i) {
    if (i)
      out += " x ";
    out += "C" + std::to_string(inv[i]);
  }
  return out;
}

}  // namespace

std::string report_text(const KReport& rep) {
  std::ostringstream out;
  out << "group " << rep.group_name << ", p = " << rep.prime << "\n";
  out << "  |G| = " << rep.group_order << ", |S| = " << rep.sylow_order
      << ", |N_G(S)| = " << rep.normalizer_order << "\n";
  out << "  |K_circle| = " << rep.k_circle_order << "\n";
  if (rep.k_determined) {
    out << "  |K| = " << rep.k_order << " [" << tag_name(rep.tag) << "]\n";
    out << "  T(G,S) = " << invariants_text(rep.t_invariants) << "\n";
  } else {
    out << "  |K| in [" << rep.k_lower << ", " << rep.k_upper
        << "] [UNDETERMINED]\n";
    out << "  T(G,S) undetermined\n";
    for (const std::string& f : rep.failed_criteria)
      out << "    failed: " << f << "\n";
  }
  out << "  time " << rep.elapsed_ms << " ms\n";
  return out.str();
}

}  // namespace tgs
