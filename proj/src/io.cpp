#include "wreath/io.hpp"

#include <fstream>

namespace wreath {

PermGroup perm_group_from_json(const nlohmann::json& j, std::size_t cap) {
  if (!j.is_object()) throw ParseError("group description must be a JSON object");
  if (!j.contains("degree") || !j["degree"].is_number_integer())
    throw ParseError("group description needs an integer \"degree\"");
  const int degree = j["degree"].get<int>();
  if (degree < 1) throw ParseError("group degree must be positive");

  if (j.value("symmetric", false)) {
    if (j.contains("generators"))
      throw ParseError("give either \"symmetric\": true or \"generators\", not both");
    std::size_t size = 1;
    for (int i = 2; i <= degree; ++i) {
      if (size > cap / static_cast<std::size_t>(i))
        throw CapExceeded("symmetric group of degree " + std::to_string(degree) +
                          " exceeds the enumeration cap of " + std::to_string(cap));
      size *= static_cast<std::size_t>(i);
    }
    return PermGroup::symmetric(degree, cap);
  }
  if (!j.contains("generators") || !j["generators"].is_array())
    throw ParseError("group description needs a \"generators\" array");
  std::vector<Perm> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_string()) throw ParseError("generators must be cycle strings like \"(1,2)\"");
    gens.push_back(Perm::parse(g.get<std::string>(), degree));
  }
  return PermGroup(degree, std::move(gens), cap);
}

Ctx context_from_json(const nlohmann::json& j, std::size_t cap) {
  if (!j.is_object() || !j.contains("base") || !j.contains("top"))
    throw ParseError("wreath product description needs \"base\" and \"top\" groups");
  auto base = make_perm_oracle(perm_group_from_json(j["base"], cap));
  const auto& jt = j["top"];
  if (jt.is_object() && jt.value("symmetric", false)) {
    if (!jt.contains("degree") || !jt["degree"].is_number_integer())
      throw ParseError("group description needs an integer \"degree\"");
    return WreathContext::make_full_symmetric(std::move(base), jt["degree"].get<int>(), cap);
  }
  return WreathContext::make(std::move(base), perm_group_from_json(jt, cap));
}

Ctx context_from_file(const std::string& path, std::size_t cap) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open group file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return context_from_json(j, cap);
}

nlohmann::json element_to_json(const WreathElement& w) {
  nlohmann::json base = nlohmann::json::array();
  for (int g = 1; g <= w.degree(); ++g)
    base.push_back(w.ctx()->base->describe(w.base_at(g)));
  return {{"base", std::move(base)}, {"top", w.top().str()}};
}

std::string format_count(std::uint64_t value) {
  std::string digits = std::to_string(value);
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && (digits.size() - i) % 3 == 0) out += ',';
    out += digits[i];
  }
  return out;
}

}  // namespace wreath
