#pragma once

// Flat-file formats.
//
// Necklace files hold one set literal per line (line k is N_k); the number
// of sets fixes n. Collection files hold one set literal per line. Blank
// lines and '#' comments are ignored everywhere, except that a comment of
// the form "# n=7 r=3" supplies the context of a collection file.

#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "collection.hpp"
#include "necklace.hpp"

namespace wsc {

namespace detail {

struct Lines
{
  std::vector<std::string> literals;
  std::optional<int> n;
  std::optional<int> r;
};

inline Lines split_lines(const std::string& text)
{
  static const std::regex directive(R"(^\s*#\s*n\s*=\s*(\d+)(\s+r\s*=\s*(\d+))?\s*$)");
  Lines out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    std::smatch m;
    if (std::regex_match(line, m, directive)) {
      out.n = std::stoi(m[1]);
      if (m[3].matched)
        out.r = std::stoi(m[3]);
      continue;
    }
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos)
      continue;
    auto last = line.find_last_not_of(" \t");
    out.literals.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

inline std::string read_file(const std::string& path)
{
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

} // namespace detail

inline Necklace parse_necklace(const std::string& text)
{
  const auto lines = detail::split_lines(text);
  if (lines.literals.empty())
    throw InputError("necklace file has no sets");
  const int n = static_cast<int>(lines.literals.size());
  if (lines.n && *lines.n != n)
    throw InputError("necklace file declares n=" + std::to_string(*lines.n) + " but lists " + std::to_string(n) +
                     " sets");
  std::vector<Subset> sets;
  for (const auto& l : lines.literals)
    sets.push_back(parse_subset(l, n));
  return validate_necklace(sets);
}

inline Necklace read_necklace_file(const std::string& path) { return parse_necklace(detail::read_file(path)); }

/// `n_hint` wins over a "# n=..." directive; without either, n is the largest element seen.
inline Collection parse_collection(const std::string& text, std::optional<int> n_hint = std::nullopt)
{
  const auto lines = detail::split_lines(text);
  int n = 0;
  if (n_hint)
    n = *n_hint;
  else if (lines.n)
    n = *lines.n;
  else {
    for (const auto& l : lines.literals) {
      // digit literals only exist for n <= 9
      const bool comma = l.find(',') != std::string::npos;
      const Subset s = parse_subset(l, comma ? kMaxGround : 9);
      for (Element e : s.elements())
        n = std::max(n, e);
    }
    n = std::max(n, 1);
  }
  std::vector<Subset> members;
  for (const auto& l : lines.literals)
    members.push_back(parse_subset(l, n));
  int r = lines.r.value_or(members.empty() ? 0 : members.front().size());
  return Collection(GroundContext(n, r), std::move(members));
}

inline Collection read_collection_file(const std::string& path, std::optional<int> n_hint = std::nullopt)
{
  return parse_collection(detail::read_file(path), n_hint);
}

inline std::string format_collection(const Collection& c)
{
  std::string out = "# n=" + std::to_string(c.context().n) + " r=" + std::to_string(c.context().r) + "\n";
  for (const Subset& s : c)
    out += to_literal(s) + "\n";
  return out;
}

inline std::string format_necklace(const Necklace& nk)
{
  std::string out;
  for (const Subset& s : nk.sets())
    out += to_literal(s) + "\n";
  return out;
}

inline void write_text_file(const std::string& path, const std::string& text)
{
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text))
    throw OutputError("cannot write '" + path + "'");
}

} // namespace wsc
