#include "goeritz/json_io.hpp"

namespace goeritz {

json normal_form_to_json(const NormalForm& nf) {
  json j;
  j["head"] = {{"a", nf.head_alpha()}, {"g", nf.head_gamma()}};
  json syl = json::array();
  for (const auto& s : nf.syllables())
    syl.push_back({{"gen", std::string(1, s.gen)}, {"exp", s.exp}});
  j["syllables"] = syl;
  return j;
}

NormalForm normal_form_from_json(const json& j) {
  NormalForm nf;
  if (j.at("head").at("a").get<int>()) nf.append_alpha();
  if (j.at("head").at("g").get<int>()) nf.append_gamma();
  for (const auto& s : j.at("syllables")) {
    std::string gen = s.at("gen").get<std::string>();
    long long exp = s.at("exp").get<long long>();
    if (gen == "b")
      nf.append_beta(exp);
    else
      nf.append_delta(exp);
  }
  return nf;
}

json verdict_to_json(const Verdict& v) {
  json j;
  j["type"] = verdict_type_name(v.type);
  if (v.order) j["order"] = *v.order;
  if (v.subgroup) j["subgroup"] = subgroup_name(*v.subgroup);
  if (v.conjugator) j["conjugator"] = v.conjugator->to_word();
  if (v.crs_label) j["crs"] = *v.crs_label;
  if (v.evidence) {
    j["evidence"] = {{"vertex", v.evidence->vertex},
                     {"fig8", v.evidence->fig8},
                     {"disk_stab", v.evidence->disk_stab}};
  }
  if (v.budget_spent) j["budget"] = *v.budget_spent;
  return j;
}

Verdict verdict_from_json(const json& j) {
  Verdict v;
  std::string t = j.at("type").get<std::string>();
  if (t == "finite_order") v.type = VerdictType::FiniteOrder;
  else if (t == "reducible") v.type = VerdictType::Reducible;
  else if (t == "pseudo_anosov") v.type = VerdictType::PseudoAnosov;
  else v.type = VerdictType::Unknown;
  if (j.contains("order")) v.order = j["order"].get<long long>();
  if (j.contains("subgroup")) {
    std::string s = j["subgroup"].get<std::string>();
    if (s == "disk_stab") v.subgroup = SubgroupId::DiskStab;
    else if (s == "sphere_stab") v.subgroup = SubgroupId::SphereStab;
    else if (s == "pants_stab") v.subgroup = SubgroupId::PantsStab;
    else v.subgroup = SubgroupId::Fig8Stab;
  }
  if (j.contains("conjugator"))
    v.conjugator = normal_form(parse_goeritz_word(j["conjugator"].get<std::string>()));
  if (j.contains("crs")) v.crs_label = j["crs"].get<std::string>();
  if (j.contains("evidence")) {
    Evidence e;
    e.vertex = j["evidence"].at("vertex").get<std::string>();
    e.fig8 = j["evidence"].at("fig8").get<std::string>();
    e.disk_stab = j["evidence"].at("disk_stab").get<std::string>();
    v.evidence = e;
  }
  if (j.contains("budget")) v.budget_spent = j["budget"].get<std::size_t>();
  return v;
}

json scan_report_to_json(const ScanReport& r) {
  json j;
  j["total"] = r.total;
  json counts;
  for (auto [type, n] : r.counts) counts[verdict_type_name(type)] = n;
  j["counts"] = counts;
  j["unknown_rate"] = r.unknown_rate;
  json hits = json::array();
  for (const auto& e : r.exceptional) {
    json h;
    h["word"] = e.word;
    h["expanded"] = e.expanded;
    h["verdict"] = verdict_to_json(e.verdict);
    hits.push_back(h);
  }
  j["exceptional"] = hits;
  return j;
}

json recognition_to_json(const RecognitionResult& r) {
  json j;
  j["verdict"] = recognition_kind_name(r.kind);
  j["trace"] = r.trace;
  if (r.kind == RecognitionKind::NotS3)
    j["reason"] = r.reason == NotS3Reason::Homology ? "homology" : "casson";
  if (r.central_twist) j["central_exponent"] = *r.central_twist;
  if (r.casson_magnitude) j["casson"] = *r.casson_magnitude;
  return j;
}

json slopes_to_json(Monodromy mono, long long bound, const std::set<Slope>& slopes) {
  json j;
  j["mono"] = mono == Monodromy::Trefoil ? "trefoil" : "fig8";
  j["bound"] = bound;
  json arr = json::array();
  for (const auto& s : slopes) arr.push_back(s.to_string());
  j["slopes"] = arr;
  return j;
}

}  // namespace goeritz
