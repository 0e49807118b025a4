#pragma once

#include <string>

#include "latmut/poset.hpp"

namespace latmut {

// {"covers":[[x,y],...],"labels":[...],"n":N}; keys sorted, covers sorted.
std::string poset_to_json(const Poset& p);
// Throws ParseError on malformed input and InvalidPoset on bad structure.
Poset poset_from_json(const std::string& text);

// One node per element, one edge per cover, rank=same groups by height.
std::string poset_to_dot(const Poset& p, const std::string& name = "poset");

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace latmut
