#include "wordchir/report.hpp"

#include <json.hpp>

namespace wordchir {

namespace {

using nlohmann::json;

json certificate_to_json(const InversionCertificate& c) {
  json j;
  j["word"] = c.word.str();
  j["rank"] = c.word.rank();
  j["kind"] = c.kind == WitnessKind::AutomorphismWitness ? "automorphism" : "endomorphism";
  j["endomorphism"] = c.endo.str();
  if (c.aut_proof) j["inverse"] = c.aut_proof->str();
  return j;
}

json verdict_to_json(const Verdict& v) {
  json j;
  j["word"] = v.word.str();
  j["rank"] = v.word.rank();
  j["status"] = std::string(status_name(v.status));
  j["reasons"] = json::array();
  for (const RuleFiring& r : v.reasons) {
    json f;
    f["rule"] = std::string(rule_name(r.rule));
    f["note"] = r.note;
    json params = json::object();
    for (const auto& [k, val] : r.params) params[k] = val;
    f["params"] = std::move(params);
    j["reasons"].push_back(std::move(f));
  }
  j["certificates"] = json::array();
  for (const InversionCertificate& c : v.certificates) {
    j["certificates"].push_back(certificate_to_json(c));
  }
  if (v.witness) {
    j["witness"] = {{"group", v.witness->group},
                    {"element", v.witness->element},
                    {"label", v.witness->element_label}};
  }
  if (v.search_stats.nodes_explored || v.search_stats.minimal_length) {
    j["search"] = {{"nodes_explored", v.search_stats.nodes_explored},
                   {"peak_frontier", v.search_stats.peak_frontier},
                   {"minimal_length", v.search_stats.minimal_length}};
  }
  return j;
}

json document(json items) {
  json doc;
  doc["tool"] = "wordchir";
  doc["version"] = "0.1.0";
  doc["items"] = std::move(items);
  return doc;
}

}  // namespace

std::string report_to_json(std::span<const Verdict> verdicts, bool pretty) {
  json items = json::array();
  for (const Verdict& v : verdicts) items.push_back(verdict_to_json(v));
  return document(std::move(items)).dump(pretty ? 2 : -1);
}

std::string census_to_json(const CensusReport& report, bool pretty) {
  json j;
  j["tool"] = "wordchir";
  j["version"] = "0.1.0";
  j["length"] = report.length;
  j["total"] = report.total;
  j["aut_invertible"] = report.aut_invertible;
  j["indeterminate"] = report.indeterminate;
  json words = json::array();
  for (const Word& w : report.non_aut_invertible) words.push_back(w.str());
  j["non_aut_invertible"] = std::move(words);
  j["statuses"] = {{"achiral", report.status_count(Status::Achiral)},
                   {"chiral", report.status_count(Status::Chiral)},
                   {"undecided", report.status_count(Status::Undecided)}};
  return j.dump(pretty ? 2 : -1);
}

ReportVerification verify_report_json(const std::string& json_text) {
  ReportVerification out;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const std::exception& e) {
    out.ok = false;
    out.errors.emplace_back(std::string("not valid JSON: ") + e.what());
    return out;
  }
  if (!doc.contains("items") || !doc["items"].is_array()) {
    out.ok = false;
    out.errors.emplace_back("missing items array");
    return out;
  }
  for (const json& item : doc["items"]) {
    ++out.items;
    const std::string where = "item " + std::to_string(out.items);
    Word word;
    try {
      word = Word::parse(item.at("word").get<std::string>(), item.at("rank").get<int>());
    } catch (const std::exception& e) {
      out.ok = false;
      out.errors.push_back(where + ": bad word: " + e.what());
      continue;
    }
    const std::string status = item.value("status", "");
    bool has_achiral_evidence = false;
    for (const json& c : item.value("certificates", json::array())) {
      ++out.certificates_checked;
      try {
        const int rank = c.at("rank").get<int>();
        InversionCertificate cert{
            Word::parse(c.at("word").get<std::string>(), rank),
            Endomorphism::parse(c.at("endomorphism").get<std::string>(), rank),
            WitnessKind::EndomorphismWitness, std::nullopt};
        if (c.value("kind", "endomorphism") == "automorphism") {
          cert.kind = WitnessKind::AutomorphismWitness;
          cert.aut_proof = Endomorphism::parse(c.at("inverse").get<std::string>(), rank);
        }
        const CertStatus cs = verify_certificate(cert);
        if (cs != CertStatus::Ok) {
          out.ok = false;
          out.errors.push_back(where + ": certificate failed: " +
                               std::string(cert_status_name(cs)));
        } else {
          has_achiral_evidence = true;
        }
      } catch (const std::exception& e) {
        out.ok = false;
        out.errors.push_back(where + ": unreadable certificate: " + e.what());
      }
    }
    for (const json& r : item.value("reasons", json::array())) {
      const std::string rule = r.value("rule", "");
      if (rule == "GcdSurjective") {
        if (exponent_gcd(word.exponent_vector()) != 1) {
          out.ok = false;
          out.errors.push_back(where + ": GcdSurjective fired but the exponent gcd is not 1");
        } else {
          has_achiral_evidence = true;
        }
      }
      if (rule == "PowerReduce" || rule == "TestWordChiral") has_achiral_evidence = true;
    }
    if (status == "achiral" && !has_achiral_evidence) {
      out.ok = false;
      out.errors.push_back(where + ": achiral status without verifiable evidence");
    }
  }
  return out;
}

}  // namespace wordchir
