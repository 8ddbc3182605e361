#include "schur/setfile.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace schur {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256: digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

namespace {

[[noreturn]] void file_fail(const std::string& path, int line, const std::string& what) {
  throw std::invalid_argument(path + ":" + std::to_string(line) + ": " + what);
}

int64_t parse_number(std::string_view text, std::size_t& pos, const std::string& where) {
  if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
    throw std::invalid_argument(where + ": expected a number at column " + std::to_string(pos + 1));
  int64_t v = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    v = v * 10 + (text[pos] - '0');
    if (v > (int64_t{1} << 40))
      throw std::invalid_argument(where + ": number too large at column " + std::to_string(pos + 1));
    ++pos;
  }
  return v;
}

}  // namespace

std::vector<int64_t> parse_index_list(const GroupSpec& g, std::string_view text,
                                      const std::string& where) {
  std::vector<int64_t> out;
  std::size_t pos = 0;
  if (text.empty()) return out;
  while (true) {
    std::size_t at = pos;
    int64_t v = parse_number(text, pos, where);
    if (v >= g.order())
      throw std::invalid_argument(where + ": element index " + std::to_string(v) +
                                  " out of range for " + format_group_spec(g) + " at column " +
                                  std::to_string(at + 1));
    out.push_back(v);
    if (pos == text.size()) break;
    if (text[pos] != ',')
      throw std::invalid_argument(where + ": expected ',' at column " + std::to_string(pos + 1));
    ++pos;
  }
  return out;
}

std::vector<int64_t> parse_coord_list(const GroupSpec& g, std::string_view text,
                                      const std::string& where) {
  std::vector<int64_t> out;
  std::size_t pos = 0;
  if (text.empty()) return out;
  while (true) {
    if (pos >= text.size() || text[pos] != '(')
      throw std::invalid_argument(where + ": expected '(' at column " + std::to_string(pos + 1));
    ++pos;
    std::vector<int64_t> coords;
    while (true) {
      coords.push_back(parse_number(text, pos, where));
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    if (pos >= text.size() || text[pos] != ')')
      throw std::invalid_argument(where + ": expected ')' at column " + std::to_string(pos + 1));
    ++pos;
    out.push_back(g.index_of(coords));  // validates count and ranges
    if (pos == text.size()) break;
    if (text[pos] != ';')
      throw std::invalid_argument(where + ": expected ';' at column " + std::to_string(pos + 1));
    ++pos;
  }
  return out;
}

ElementSet read_set_file(const std::string& path, int64_t cap) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(path + ": cannot open");
  std::string line1, line2, line3;
  if (!std::getline(in, line1)) file_fail(path, 1, "missing 'group=' line");
  if (!std::getline(in, line2)) file_fail(path, 2, "missing 'elements=' line");
  bool has_checksum = static_cast<bool>(std::getline(in, line3));
  auto strip_cr = [](std::string& s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
  };
  strip_cr(line1);
  strip_cr(line2);
  strip_cr(line3);
  if (has_checksum && line3.empty()) has_checksum = false;

  if (line1.rfind("group=", 0) != 0) file_fail(path, 1, "expected 'group=<spec>'");
  if (line2.rfind("elements=", 0) != 0) file_fail(path, 2, "expected 'elements=<list>'");
  if (has_checksum) {
    if (line3.rfind("sha256=", 0) != 0) file_fail(path, 3, "expected 'sha256=<hex>'");
    std::string expect = sha256_hex(line1 + "\n" + line2 + "\n");
    std::string got = line3.substr(7);
    if (got != expect)
      file_fail(path, 3, "checksum mismatch: file says " + got + ", content hashes to " + expect);
  }

  GroupSpec g = [&] {
    try {
      return parse_group_spec(std::string_view(line1).substr(6), cap);
    } catch (const std::invalid_argument& e) {
      file_fail(path, 1, e.what());
    }
  }();
  std::string_view elems = std::string_view(line2).substr(9);
  std::vector<int64_t> indices;
  try {
    if (!elems.empty() && elems.front() == '(')
      indices = parse_coord_list(g, elems, "elements");
    else
      indices = parse_index_list(g, elems, "elements");
  } catch (const std::invalid_argument& e) {
    file_fail(path, 2, e.what());
  }
  return ElementSet::from_indices(std::move(g), indices);
}

void write_set_file(const std::string& path, const ElementSet& set) {
  std::ostringstream elems;
  bool first = true;
  set.for_each([&](int64_t i) {
    if (!first) elems << ",";
    elems << i;
    first = false;
  });
  std::string line1 = "group=" + format_group_spec(set.group());
  std::string line2 = "elements=" + elems.str();
  std::string body = line1 + "\n" + line2 + "\n";
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::invalid_argument(path + ": cannot write");
  out << body << "sha256=" << sha256_hex(body) << "\n";
}

}  // namespace schur
