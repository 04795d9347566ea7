#pragma once

#include <map>
#include <string>

#include "selberg/matcore/space.hpp"

namespace selberg {

/// Parses words such as "(a b a^-1 b^-1)^2", "a^{2}b^-1" or "[u,v] w^-2".
/// Letters are the longest matching alphabet keys; [x,y] = x y x^-1 y^-1;
/// "^n" takes any integer. Throws Parse on malformed input.
IsometryWord parse_word(const std::string& text, const std::map<std::string, Isometry>& alphabet);

/// True iff the exact product is the identity. The empty word is trivial.
bool relator_check(const IsometryWord& word);

/// (g - I)^n = 0 exactly.
bool is_unipotent(const Isometry& g);

}  // namespace selberg
