#include "profusion/group_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "profusion/constructors.hpp"
#include "profusion/error.hpp"

namespace profusion {

std::string strip_line(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  std::size_t b = 0, e = line.size();
  while (b < e && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(line[e - 1]))) --e;
  return std::string(line.substr(b, e - b));
}

PermGroup parse_group_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t degree = 0;
  bool have_degree = false;
  std::vector<std::string> perm_lines;
  std::string constructor;
  while (std::getline(in, raw)) {
    std::string line = strip_line(raw);
    if (line.empty()) continue;
    if (line.rfind("degree", 0) == 0) {
      auto colon = line.find(':');
      if (colon == std::string::npos) throw Error(Errc::ParseError, "expected 'degree: n'");
      try {
        degree = std::stoul(line.substr(colon + 1));
      } catch (const std::logic_error&) {
        throw Error(Errc::ParseError, "bad degree line: " + line);
      }
      have_degree = true;
    } else if (line.front() == '(') {
      perm_lines.push_back(line);
    } else {
      if (!constructor.empty()) throw Error(Errc::ParseError, "more than one constructor line");
      constructor = line;
    }
  }
  if (!constructor.empty()) {
    if (have_degree || !perm_lines.empty())
      throw Error(Errc::ParseError, "constructor line cannot be combined with generators");
    return group_by_name(constructor);
  }
  if (!have_degree) throw Error(Errc::ParseError, "missing 'degree:' line");
  std::vector<Perm> gens;
  for (const auto& line : perm_lines) gens.push_back(Perm::parse(line, degree));
  return PermGroup::from_generators(degree, std::move(gens));
}

PermGroup load_group(const std::string& spec) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    std::ifstream file(spec);
    std::stringstream buffer;
    buffer << file.rdbuf();
    return parse_group_text(buffer.str());
  }
  return group_by_name(spec);
}

std::string format_group(const PermGroup& g) {
  std::ostringstream out;
  out << "degree: " << g.degree() << "\n";
  for (const auto& p : g.generators()) out << p.to_string() << "\n";
  return out.str();
}

}  // namespace profusion
