#pragma once

#include <optional>

#include "ydlab/group_models.hpp"

namespace ydlab {

/// Built-in groups: z2, z3, z4, klein4, s3 and (order 8) d4.
std::optional<FiniteGroup> catalog_group(const std::string& name);

/// Built-in actions: z2-on-2points, z3-on-z3, s3-on-3points, plus the
/// translation action <group>-regular for every catalog group.
std::optional<GroupAction> catalog_action(const std::string& name);

std::vector<std::string> catalog_group_names();
std::vector<std::string> catalog_action_names();

/// Translation action of a group on itself.
GroupAction regular_action(const FiniteGroup& G);

} // namespace ydlab
