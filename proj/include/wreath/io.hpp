#ifndef WREATH_IO_HPP
#define WREATH_IO_HPP

#include <string>

#include "wreath/element.hpp"
#include "wreath/perm_group.hpp"

#include <json.hpp>

namespace wreath {

/// Permutation group from JSON: {"degree": n, "generators": ["(1,2)", ...]}
/// or {"degree": n, "symmetric": true}.
PermGroup perm_group_from_json(const nlohmann::json& j, std::size_t cap);

/// Wreath-product context from JSON: {"base": <group>, "top": <group>}.
/// A symmetric top keeps its closed-form handling.
Ctx context_from_json(const nlohmann::json& j, std::size_t cap);

Ctx context_from_file(const std::string& path, std::size_t cap);

nlohmann::json element_to_json(const WreathElement& w);

// 1234567 -> "1,234,567"
std::string format_count(std::uint64_t value);

}  // namespace wreath

#endif
