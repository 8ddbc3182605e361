#pragma once

#include <string>

#include "schur/group.hpp"

namespace schur {

// Set files are UTF-8 text:
//   line 1: group=<group spec>
//   line 2: elements=<comma-separated canonical indices, or (c1,..);(c1,..) coordinates>
//   line 3 (optional): sha256=<hex digest of lines 1-2, each terminated by '\n'>
// Parse errors carry the 1-based line number.
ElementSet read_set_file(const std::string& path, int64_t cap = kDefaultDenseCap);
void write_set_file(const std::string& path, const ElementSet& set);

// Inline element-list parsers used by the CLI; `where` names the input in
// error messages.
std::vector<int64_t> parse_index_list(const GroupSpec& g, std::string_view text,
                                      const std::string& where);
std::vector<int64_t> parse_coord_list(const GroupSpec& g, std::string_view text,
                                      const std::string& where);

std::string sha256_hex(std::string_view data);

}  // namespace schur
