#pragma once

#include <optional>

#include "ydlab/group_models.hpp"

namespace ydlab {

/// Thrown on malformed model files; carries the 1-based line number.
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct ModelFile {
    FiniteGroup group;
    std::optional<GroupAction> action;
};

/**
 * Parses the line-based model format:
 *
 *   group <name>
 *   elements e a b              # first element is the identity
 *   table
 *   e a b
 *   a b e
 *   b e a
 *   end
 *   set 3                       # optional action block
 *   action
 *   e: 0 1 2
 *   a: 1 2 0
 *   b: 2 0 1
 *   end
 *
 * '#' starts a comment; tokens are whitespace separated. A table that is not
 * a group law, or a permutation family that is not an action, is rejected
 * with the failing triple or element named.
 */
ModelFile parse_model_text(const std::string& text);

ModelFile parse_model_file(const std::string& path);

} // namespace ydlab
