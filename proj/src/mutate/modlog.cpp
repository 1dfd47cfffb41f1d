#include "scpd/mutate/modlog.hpp"

namespace scpd::mutate {

std::size_t ModificationLog::n_transforms() const {
  std::size_t n = 0;
  for (const auto& r : records) {
    if (!r.injection) n += r.count;
  }
  return n;
}

std::size_t ModificationLog::l_lloc_injected() const {
  std::size_t l = 0;
  for (const auto& r : records) l += r.lloc_injected;
  return l;
}

void ModificationLog::append(std::vector<ModificationRecord> more) {
  for (auto& r : more) records.push_back(std::move(r));
}

nlohmann::ordered_json ModificationLog::to_json() const {
  nlohmann::ordered_json j;
  j["n_transforms"] = n_transforms();
  j["l_lloc_injected"] = l_lloc_injected();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json o;
    o["kind"] = r.kind;
    o["category"] = r.injection ? "injection" : "transform";
    o["file"] = r.file;
    o["path"] = r.path;
    o["count"] = r.count;
    o["lloc_injected"] = r.lloc_injected;
    arr.push_back(std::move(o));
  }
  j["records"] = std::move(arr);
  return j;
}

ModificationLog ModificationLog::from_json(const nlohmann::json& j) {
  ModificationLog log;
  for (const auto& o : j.at("records")) {
    ModificationRecord r;
    r.kind = o.at("kind").get<std::string>();
    r.injection = o.at("category").get<std::string>() == "injection";
    r.file = o.at("file").get<std::string>();
    r.path = o.at("path").get<std::string>();
    r.count = o.at("count").get<std::size_t>();
    r.lloc_injected = o.at("lloc_injected").get<std::size_t>();
    log.records.push_back(std::move(r));
  }
  return log;
}

}  // namespace scpd::mutate
