#include <filesystem>
#include <fstream>
#include <sstream>

#include "profusion/error.hpp"
#include "profusion/group_io.hpp"
#include "profusion/tower.hpp"

namespace profusion {

namespace {

struct Section {
  std::string keyword;
  std::optional<std::size_t> index;
  std::vector<std::string> lines;
  std::size_t line_no = 0;
};

std::optional<Section> keyword_line(const std::string& line, std::size_t line_no) {
  for (const char* bare : {"level", "ambient", "group", "normal"})
    if (line == bare) return Section{bare, std::nullopt, {}, line_no};
  for (const char* indexed : {"map", "projection"}) {
    std::string head = std::string(indexed) + " ";
    if (line.rfind(head, 0) != 0) continue;
    try {
      std::size_t used = 0;
      std::string rest = line.substr(head.size());
      std::size_t i = std::stoul(rest, &used);
      if (used != rest.size()) break;
      return Section{indexed, i, {}, line_no};
    } catch (const std::logic_error&) {
      break;
    }
  }
  return std::nullopt;
}

std::string where(const Section& s) { return "section '" + s.keyword + "' at line " + std::to_string(s.line_no); }

PermGroup section_group(const Section& s) {
  std::string text;
  for (const auto& l : s.lines) text += l + "\n";
  try {
    return parse_group_text(text);
  } catch (const Error& e) {
    throw Error(Errc::ParseError, where(s) + ": " + e.what());
  }
}

std::vector<Elem> section_elements(const Section& s, const PermGroup& g) {
  std::vector<Elem> out;
  for (const auto& l : s.lines) {
    std::optional<Elem> found;
    try {
      found = g.find(Perm::parse(l, g.degree()));
    } catch (const Error& e) {
      throw Error(Errc::ParseError, where(s) + ": " + e.what());
    }
    if (!found) throw Error(Errc::ParseError, where(s) + ": " + l + " is not an element of " + g.describe());
    out.push_back(*found);
  }
  return out;
}

GroupHom section_hom(const Section& s, const PermGroup& domain, const PermGroup& codomain) {
  auto images = section_elements(s, codomain);
  if (images.size() != domain.generator_elems().size())
    throw Error(Errc::ParseError, where(s) + ": expected " + std::to_string(domain.generator_elems().size()) +
                                      " generator images, found " + std::to_string(images.size()));
  auto hom = GroupHom::try_from_generator_images(domain, codomain, images);
  if (!hom) throw Error(Errc::ParseError, where(s) + ": images do not define a homomorphism");
  return *hom;
}

}  // namespace

TowerSpec parse_tower_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Section> sections;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_line(raw);
    if (line.empty()) continue;
    if (auto s = keyword_line(line, line_no)) {
      sections.push_back(std::move(*s));
      continue;
    }
    if (sections.empty()) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + " precedes any section");
    sections.back().lines.push_back(line);
  }
  if (sections.empty()) throw Error(Errc::ParseError, "empty tower file");

  if (sections.front().keyword == "group") {
    PermGroup g = section_group(sections.front());
    std::vector<Subgroup> chain;
    for (std::size_t i = 1; i < sections.size(); ++i) {
      if (sections[i].keyword != "normal")
        throw Error(Errc::ParseError, where(sections[i]) + ": only 'normal' sections follow 'group'");
      chain.push_back(Subgroup::generated(g, section_elements(sections[i], g)));
    }
    if (chain.empty()) throw Error(Errc::ParseError, "a chain tower needs at least one 'normal' section");
    return tower_from_chain(g, chain);
  }

  TowerSpec t;
  std::vector<const Section*> maps, projections;
  const Section* ambient = nullptr;
  for (const auto& s : sections) {
    if (s.keyword == "level") {
      t.levels.push_back(section_group(s));
    } else if (s.keyword == "map") {
      maps.push_back(&s);
    } else if (s.keyword == "projection") {
      projections.push_back(&s);
    } else if (s.keyword == "ambient") {
      if (ambient) throw Error(Errc::ParseError, where(s) + ": second ambient group");
      ambient = &s;
    } else {
      throw Error(Errc::ParseError, where(s) + ": unexpected in a level tower");
    }
  }
  if (t.levels.empty()) throw Error(Errc::ParseError, "no 'level' sections");
  t.maps.resize(t.levels.size() - 1);
  std::vector<bool> seen(t.levels.size(), false);
  for (const Section* s : maps) {
    std::size_t i = *s->index;
    if (i == 0 || i >= t.levels.size() || seen[i])
      throw Error(Errc::ParseError, where(*s) + ": map index must be 1.." + std::to_string(t.levels.size() - 1) +
                                        " and appear once");
    seen[i] = true;
    t.maps[i - 1] = section_hom(*s, t.levels[i], t.levels[i - 1]);
  }
  for (std::size_t i = 1; i < t.levels.size(); ++i)
    if (!seen[i]) throw Error(Errc::ParseError, "missing 'map " + std::to_string(i) + "'");
  if (ambient) {
    t.ambient = section_group(*ambient);
    t.projections.resize(t.levels.size());
    std::vector<bool> done(t.levels.size(), false);
    for (const Section* s : projections) {
      std::size_t i = *s->index;
      if (i >= t.levels.size() || done[i]) throw Error(Errc::ParseError, where(*s) + ": bad or repeated projection");
      done[i] = true;
      t.projections[i] = section_hom(*s, *t.ambient, t.levels[i]);
    }
    for (std::size_t i = 0; i < t.levels.size(); ++i)
      if (!done[i]) throw Error(Errc::ParseError, "missing 'projection " + std::to_string(i) + "'");
  } else if (!projections.empty()) {
    throw Error(Errc::ParseError, "projections need an ambient group");
  }
  t.validate();
  return t;
}

TowerSpec load_tower(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error(Errc::ParseError, "cannot read tower file " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_tower_text(buffer.str());
}

}  // namespace profusion
