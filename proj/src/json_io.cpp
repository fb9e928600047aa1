#include "qtcat/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace qtcat {

using nlohmann::json;

json partition_to_json(const Partition& p) {
  json j = json::array();
  for (unsigned part : p.parts()) j.push_back(part);
  return j;
}

Partition partition_from_json(const json& j) {
  if (!j.is_array())
    throw std::invalid_argument("partition JSON must be an array of integers");
  std::vector<unsigned> parts;
  for (const auto& x : j) {
    if (!x.is_number_unsigned())
      throw std::invalid_argument("partition parts must be nonnegative integers");
    parts.push_back(x.get<unsigned>());
  }
  return Partition(std::move(parts));
}

json matrix_to_json(const QtMatrix& m, std::size_t n) {
  json entries = json::array();
  for (const auto& [key, c] : m.entries())
    entries.push_back(json::array({key.first, key.second, c}));
  return json{{"n", n}, {"entries", entries}};
}

json pairing_to_json(std::size_t n, const NOppositeResult& res) {
  json j;
  j["n"] = n;
  json pairs = json::array();
  if (res.pairing)
    for (const auto& [g, h] : res.pairing->forward)
      pairs.push_back(json::array({partition_to_json(g), partition_to_json(h)}));
  j["pairs"] = pairs;
  switch (res.status) {
    case NOppositeResult::Status::ok:
      j["status"] = "ok";
      j["witness"] = nullptr;
      break;
    case NOppositeResult::Status::duplicate:
      j["status"] = "duplicate";
      j["witness"] = json::array({partition_to_json(res.duplicate_witness[0]),
                                  partition_to_json(res.duplicate_witness[1])});
      break;
    case NOppositeResult::Status::unmatched:
      j["status"] = "unmatched";
      j["witness"] = json::array(
          {res.unmatched_witness->first, res.unmatched_witness->second});
      break;
  }
  return j;
}

json spec_to_json(const ChainSpec& spec) {
  json entries = json::array();
  for (const ChainEntry& e : spec.entries) {
    json je;
    je["mu"] = partition_to_json(e.mu);
    je["mu_star"] = partition_to_json(e.mu_star);
    switch (e.kind) {
      case ChainEntry::Kind::explicit_: {
        je["kind"] = "explicit";
        json gens = json::array();
        for (const Partition& g : e.generators) gens.push_back(partition_to_json(g));
        je["generators"] = gens;
        je["tail"] = partition_to_json(e.tail_mu);
        break;
      }
      case ChainEntry::Kind::hook:
        je["kind"] = "hook";
        break;
      case ChainEntry::Kind::almost_hook:
        je["kind"] = "almost-hook";
        je["params"] = json{{"a", e.a}, {"b", e.b}};
        break;
    }
    entries.push_back(std::move(je));
  }
  return json{{"k", spec.k}, {"entries", entries}};
}

ChainSpec spec_from_json(const json& j) {
  ChainSpec spec;
  if (!j.is_object() || !j.contains("k") || !j.contains("entries"))
    throw std::invalid_argument("chain spec JSON needs fields \"k\" and \"entries\"");
  spec.k = j.at("k").get<std::uint64_t>();
  for (const auto& je : j.at("entries")) {
    ChainEntry e;
    e.mu = partition_from_json(je.at("mu"));
    e.mu_star = partition_from_json(je.at("mu_star"));
    const std::string kind = je.value("kind", std::string("explicit"));
    if (kind == "explicit") {
      e.kind = ChainEntry::Kind::explicit_;
      if (je.contains("generators"))
        for (const auto& g : je.at("generators"))
          e.generators.push_back(partition_from_json(g));
      e.tail_mu = je.contains("tail") ? partition_from_json(je.at("tail")) : e.mu;
    } else if (kind == "hook") {
      e.kind = ChainEntry::Kind::hook;
    } else if (kind == "almost-hook") {
      e.kind = ChainEntry::Kind::almost_hook;
      e.a = je.at("params").at("a").get<std::uint64_t>();
      e.b = je.at("params").at("b").get<std::uint64_t>();
    } else {
      throw std::invalid_argument("unknown chain kind \"" + kind + "\"");
    }
    spec.entries.push_back(std::move(e));
  }
  return spec;
}

ChainSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file " + path);
  json j;
  in >> j;
  return spec_from_json(j);
}

json report_to_json(const VerificationReport& report) {
  json conditions;
  for (const auto& [name, c] : report.conditions) {
    json jc;
    jc["status"] = c.passed ? "pass" : "fail";
    if (!c.passed) jc["witness"] = c.witness;
    conditions[name] = jc;
  }
  return json{{"k", report.k},
              {"n_k", report.n_k},
              {"max_dinv", report.max_dinv},
              {"conditions", conditions},
              {"pass", report.passed()}};
}

std::vector<Partition> partition_list_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open partition file " + path);
  json j;
  in >> j;
  if (!j.is_array())
    throw std::invalid_argument("partition file must hold a JSON array");
  std::vector<Partition> out;
  for (const auto& p : j) out.push_back(partition_from_json(p));
  return out;
}

}  // namespace qtcat
