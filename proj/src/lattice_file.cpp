#include "latsort/lattice_file.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

namespace latsort {
namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream stream(line);
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

bool is_comment_or_blank(const std::vector<std::string>& tokens) {
  return tokens.empty() || tokens.front().front() == '#';
}

}  // namespace

LatticeFileData parse_lattice_file(std::istream& in) {
  LatticeFileData data;
  std::unordered_set<std::string> seen;
  std::string line;
  int line_number = 0;
  int section = 0;  // 0: expect elements, 1: expect covers, 2: done

  while (std::getline(in, line)) {
    ++line_number;
    auto tokens = tokenize(line);
    if (is_comment_or_blank(tokens)) continue;

    if (section == 0) {
      if (tokens.front() != "elements:")
        throw ParseError("expected 'elements:' line, got '" + tokens.front() + "'", line_number);
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const auto& name = tokens[i];
        if (name.find('<') != std::string::npos)
          throw ParseError("element name '" + name + "' may not contain '<'", line_number);
        if (!seen.insert(name).second)
          throw ParseError("duplicate element name '" + name + "'", line_number);
        data.names.push_back(name);
      }
      if (data.names.empty()) throw ParseError("no elements declared", line_number);
      section = 1;
    } else if (section == 1) {
      if (tokens.front() != "covers:")
        throw ParseError("expected 'covers:' line, got '" + tokens.front() + "'", line_number);
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const auto& pair = tokens[i];
        const auto split = pair.find('<');
        if (split == std::string::npos || pair.find('<', split + 1) != std::string::npos)
          throw ParseError("cover '" + pair + "' must join two names with a single '<'",
                           line_number);
        std::string lower = pair.substr(0, split);
        std::string upper = pair.substr(split + 1);
        if (lower.empty() || upper.empty())
          throw ParseError("cover '" + pair + "' has an empty side", line_number);
        for (const auto& side : {lower, upper})
          if (!seen.count(side))
            throw ParseError("cover references undeclared element '" + side + "'", line_number);
        data.covers.emplace_back(std::move(lower), std::move(upper));
      }
      section = 2;
    } else {
      throw ParseError("unexpected content after covers line: '" + tokens.front() + "'",
                       line_number);
    }
  }

  if (section == 0) throw ParseError("missing 'elements:' line", line_number);
  if (section == 1) throw ParseError("missing 'covers:' line", line_number);
  return data;
}

FiniteLattice load_lattice_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open lattice file '" + path.string() + "'");
  auto data = parse_lattice_file(in);
  return from_cover_relation(data.names, data.covers);
}

}  // namespace latsort
