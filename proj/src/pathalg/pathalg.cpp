#include "profusion/pathalg.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <sstream>

#include "profusion/algebra.hpp"
#include "profusion/error.hpp"
#include "profusion/group_io.hpp"
#include "profusion/group_ops.hpp"

namespace profusion {

bool operator<(const PathWord& a, const PathWord& b) {
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
  if (a.arrows.empty()) return a.vertex < b.vertex;
  return a.arrows < b.arrows;
}

bool operator==(const PathWord& a, const PathWord& b) {
  if (a.arrows.empty() || b.arrows.empty()) return a.arrows.empty() && b.arrows.empty() && a.vertex == b.vertex;
  return a.arrows == b.arrows;
}

// ---------------------------------------------------------------- Quiver

namespace {

bool reserved_char(char c) {
  return c == '+' || c == '-' || c == '*' || c == '^' || c == ':' || std::isspace(static_cast<unsigned char>(c));
}

}  // namespace

Quiver::Quiver(std::size_t vertices, std::vector<Arrow> arrows) : vertices_(vertices), arrows_(std::move(arrows)) {
  if (vertices_ == 0 && !arrows_.empty()) throw Error(Errc::PreconditionViolated, "arrows need vertices");
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    if (a.source >= vertices_ || a.target >= vertices_)
      throw Error(Errc::PreconditionViolated, "arrow " + a.label + " has an endpoint out of range");
    if (a.label.empty()) throw Error(Errc::PreconditionViolated, "empty arrow label");
    if (std::isdigit(static_cast<unsigned char>(a.label.front())))
      throw Error(Errc::PreconditionViolated, "label " + a.label + " starts with a digit");
    if (std::any_of(a.label.begin(), a.label.end(), reserved_char))
      throw Error(Errc::PreconditionViolated, "label " + a.label + " contains a reserved character");
    for (std::size_t j = 0; j < i; ++j)
      if (arrows_[j].label == a.label) throw Error(Errc::PreconditionViolated, "duplicate label " + a.label);
  }
}

Quiver Quiver::bouquet(std::size_t loops) {
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < loops; ++i) {
    std::string label = loops <= 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i + 1);
    arrows.push_back(Arrow{0, 0, label});
  }
  return Quiver(1, std::move(arrows));
}

std::optional<std::size_t> Quiver::arrow_index(std::string_view label) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].label == label) return i;
  return std::nullopt;
}

std::size_t Quiver::source(const PathWord& w) const {
  return w.arrows.empty() ? w.vertex : arrows_[w.arrows.back()].source;
}

std::size_t Quiver::target(const PathWord& w) const {
  return w.arrows.empty() ? w.vertex : arrows_[w.arrows.front()].target;
}

bool Quiver::is_path(const PathWord& w) const {
  if (w.arrows.empty()) return w.vertex < vertices_;
  for (std::size_t a : w.arrows)
    if (a >= arrows_.size()) return false;
  for (std::size_t i = 0; i + 1 < w.arrows.size(); ++i)
    if (arrows_[w.arrows[i]].source != arrows_[w.arrows[i + 1]].target) return false;
  return true;
}

std::optional<PathWord> Quiver::compose(const PathWord& x, const PathWord& y) const {
  if (source(x) != target(y)) return std::nullopt;
  if (x.arrows.empty()) return y;
  if (y.arrows.empty()) return x;
  PathWord out{0, x.arrows};
  out.arrows.insert(out.arrows.end(), y.arrows.begin(), y.arrows.end());
  return out;
}

std::vector<PathWord> Quiver::paths_of_length(std::size_t n) const {
  std::vector<PathWord> layer;
  for (std::size_t v = 0; v < vertices_; ++v) layer.push_back(vertex(v));
  for (std::size_t len = 0; len < n; ++len) {
    std::vector<PathWord> next;
    for (const auto& w : layer)
      for (std::size_t a = 0; a < arrows_.size(); ++a) {
        if (!w.arrows.empty() && source(w) != arrows_[a].target) continue;
        if (w.arrows.empty() && w.vertex != arrows_[a].target) continue;
        PathWord ext{0, w.arrows};
        ext.arrows.push_back(a);
        next.push_back(std::move(ext));
      }
    if (len == 0) {
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
    }
    layer = std::move(next);
  }
  return layer;
}

std::string Quiver::to_string(const PathWord& w) const {
  if (w.arrows.empty()) return "e" + std::to_string(w.vertex);
  std::string out;
  for (std::size_t a : w.arrows) out += arrows_[a].label;
  return out;
}

std::string Quiver::to_string(const PathSum& x, const Field& field) const {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : x) {
    if (!out.empty()) out += " + ";
    if (c != Field::one()) out += (field.degree() == 1 ? std::to_string(c.v) : field.to_string(c)) + "*";
    out += to_string(w);
  }
  return out;
}

PathWord Quiver::parse_path(std::string_view text) const {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(Errc::ParseError, "empty path");
  auto longest_label = [&](std::string_view rest) -> std::optional<std::size_t> {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
      const auto& l = arrows_[i].label;
      if (rest.substr(0, l.size()) == l && (!best || l.size() > arrows_[*best].label.size())) best = i;
    }
    return best;
  };
  if (text.front() == 'e' && text.size() > 1 && !longest_label(text) &&
      std::all_of(text.begin() + 1, text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    std::size_t v = std::stoul(std::string(text.substr(1)));
    if (v >= vertices_) throw Error(Errc::ParseError, "vertex " + std::string(text) + " out of range");
    return vertex(v);
  }
  PathWord w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto a = longest_label(text.substr(pos));
    if (!a) throw Error(Errc::ParseError, "no arrow label at '" + std::string(text.substr(pos)) + "'");
    pos += arrows_[*a].label.size();
    std::size_t repeat = 1;
    if (pos < text.size() && text[pos] == '^') {
      std::size_t end = ++pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == pos) throw Error(Errc::ParseError, "exponent expected in '" + std::string(text) + "'");
      repeat = std::stoul(std::string(text.substr(pos, end - pos)));
      if (repeat == 0) throw Error(Errc::ParseError, "zero exponent in '" + std::string(text) + "'");
      pos = end;
    }
    w.arrows.insert(w.arrows.end(), repeat, *a);
  }
  if (!is_path(w)) throw Error(Errc::ParseError, "'" + std::string(text) + "' is not a path");
  return w;
}

PathSum Quiver::parse_sum(std::string_view text, const Field& field) const {
  PathSum out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos == text.size()) throw Error(Errc::ParseError, "empty sum");
  if (text.substr(pos) == "0") return out;
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) throw Error(Errc::ParseError, "dangling operator in '" + std::string(text) + "'");
    std::int64_t sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw Error(Errc::ParseError, "operator expected in '" + std::string(text) + "'");
    }
    first = false;
    std::int64_t coeff = 1;
    std::size_t end = pos;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end > pos) {
      coeff = std::stoll(std::string(text.substr(pos, end - pos)));
      pos = end;
      skip();
      if (pos < text.size() && text[pos] == '*') ++pos;
      skip();
    }
    end = pos;
    while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
    std::string_view token = text.substr(pos, end - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    if (token.empty()) throw Error(Errc::ParseError, "path expected in '" + std::string(text) + "'");
    PathWord w = parse_path(token);
    FqElem c = field.add(out.count(w) ? out[w] : Field::zero(), field.from_int(sign * coeff));
    if (c == Field::zero())
      out.erase(w);
    else
      out[w] = c;
    pos = end;
    skip();
    if (pos == text.size()) break;
  }
  return out;
}

QuiverSpec parse_quiver_text(std::string_view text, const Field& field) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::string> relation_text;
  auto fail = [&](const std::string& what) {
    throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_line(raw);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) fail("expected 'key: value'");
    std::string key = strip_line(line.substr(0, colon));
    std::string value = strip_line(line.substr(colon + 1));
    if (key == "vertices") {
      if (vertices) fail("second 'vertices' line");
      try {
        std::size_t used = 0;
        vertices = std::stoul(value, &used);
        if (used != value.size()) fail("bad vertex count " + value);
      } catch (const std::logic_error&) {
        fail("bad vertex count " + value);
      }
    } else if (key == "relation") {
      relation_text.push_back(value);
    } else {
      auto arrow = value.find("->");
      if (arrow == std::string::npos) fail("expected 'label: src -> tgt'");
      try {
        std::size_t a = 0, b = 0;
        std::string src = strip_line(value.substr(0, arrow)), tgt = strip_line(value.substr(arrow + 2));
        std::size_t src_v = std::stoul(src, &a), tgt_v = std::stoul(tgt, &b);
        if (a != src.size() || b != tgt.size()) fail("bad endpoints in " + value);
        arrows.push_back(Arrow{src_v, tgt_v, key});
      } catch (const std::logic_error&) {
        fail("bad endpoints in " + value);
      }
    }
  }
  if (!vertices) throw Error(Errc::ParseError, "missing 'vertices:' line");
  std::optional<Quiver> quiver;
  try {
    quiver.emplace(*vertices, std::move(arrows));
  } catch (const Error& e) {
    throw Error(Errc::ParseError, e.what());
  }
  QuiverSpec spec{*quiver, {}};
  for (const auto& r : relation_text) spec.relations.push_back(spec.quiver.parse_sum(r, field));
  return spec;
}

QuiverSpec load_quiver(const std::string& path, const Field& field) {
  std::ifstream file(path);
  if (!file) throw Error(Errc::ParseError, "cannot read quiver file " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_quiver_text(buffer.str(), field);
}

// ------------------------------------------------------ TruncatedAlgebra

namespace {

PathSum multiply_path(const Quiver& q, const PathWord& left, const PathSum& x, const PathWord& right,
                      std::size_t s) {
  PathSum out;
  for (const auto& [w, c] : x) {
    auto lw = q.compose(left, w);
    if (!lw) continue;
    auto lwr = q.compose(*lw, right);
    if (lwr && lwr->length() < s) out.emplace(std::move(*lwr), c);
  }
  return out;
}

}  // namespace

TruncatedAlgebra::TruncatedAlgebra(Quiver quiver, Field field, std::vector<PathSum> generators, std::size_t s)
    : quiver_(std::move(quiver)),
      field_(std::move(field)),
      generators_(std::move(generators)),
      s_(s),
      ideal_(field_, 0) {
  if (s_ == 0) throw Error(Errc::PreconditionViolated, "truncation degree must be positive");
  for (const auto& g : generators_)
    for (const auto& [w, c] : g) {
      if (!quiver_.is_path(w)) throw Error(Errc::PreconditionViolated, "generator term is not a path");
      if (w.length() < 2)
        throw Error(Errc::GeneratorNotInJSquared, quiver_.to_string(g, field_) + " has a term of length below 2");
    }
  for (std::size_t n = 0; n < s_; ++n)
    for (auto& w : quiver_.paths_of_length(n)) {
      index_.emplace(w, coords_.size());
      coords_.push_back(std::move(w));
    }
  ideal_ = RowSpace(field_, coords_.size());

  // Vertex-uniform pieces e_i g e_j seed the closure under arrow products.
  std::deque<PathSum> pending;
  for (const auto& g : generators_)
    for (std::size_t i = 0; i < quiver_.vertex_count(); ++i)
      for (std::size_t j = 0; j < quiver_.vertex_count(); ++j) {
        auto piece = multiply_path(quiver_, Quiver::vertex(i), g, Quiver::vertex(j), s_);
        if (!piece.empty()) pending.push_back(std::move(piece));
      }
  while (!pending.empty()) {
    PathSum x = std::move(pending.front());
    pending.pop_front();
    if (!ideal_.insert(to_dense(x))) continue;
    for (std::size_t a = 0; a < quiver_.arrows().size(); ++a) {
      PathWord arrow{0, {a}};
      for (std::size_t v = 0; v < quiver_.vertex_count(); ++v) {
        auto left = multiply_path(quiver_, arrow, x, Quiver::vertex(v), s_);
        if (!left.empty()) pending.push_back(std::move(left));
        auto right = multiply_path(quiver_, Quiver::vertex(v), x, arrow, s_);
        if (!right.empty()) pending.push_back(std::move(right));
      }
    }
  }

  std::vector<bool> pivot(coords_.size(), false);
  for (std::size_t c : ideal_.pivots()) pivot[c] = true;
  for (std::size_t c = 0; c < coords_.size(); ++c)
    if (!pivot[c]) {
      basis_.push_back(coords_[c]);
      basis_coord_.push_back(c);
    }
  table_.assign(basis_.size(), std::vector<FqVector>(basis_.size()));
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      PathSum prod;
      auto w = quiver_.compose(basis_[i], basis_[j]);
      if (w && w->length() < s_) prod.emplace(std::move(*w), Field::one());
      table_[i][j] = reduce(prod);
    }
}

FqVector TruncatedAlgebra::to_dense(const PathSum& x) const {
  FqVector v(coords_.size(), Field::zero());
  for (const auto& [w, c] : x) {
    if (w.length() >= s_) continue;
    auto it = index_.find(w);
    if (it == index_.end()) throw Error(Errc::PreconditionViolated, "term is not a path of the quiver");
    v[it->second] = field_.add(v[it->second], c);
  }
  return v;
}

std::optional<std::size_t> TruncatedAlgebra::coordinate(const PathWord& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> TruncatedAlgebra::ideal_degree_dims() const {
  std::vector<std::size_t> dims(s_, 0);
  for (std::size_t c : ideal_.pivots()) ++dims[coords_[c].length()];
  return dims;
}

std::vector<std::size_t> TruncatedAlgebra::degree_dims() const {
  std::vector<std::size_t> dims(s_, 0);
  for (const auto& w : basis_) ++dims[w.length()];
  return dims;
}

FqVector TruncatedAlgebra::reduce(const PathSum& x) const {
  FqVector full = ideal_.reduce(to_dense(x));
  FqVector out(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) out[i] = full[basis_coord_[i]];
  return out;
}

PathSum TruncatedAlgebra::to_sum(const FqVector& coords) const {
  if (coords.size() != basis_.size()) throw Error(Errc::DimensionMismatch, "coordinate vector length");
  PathSum out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (coords[i] != Field::zero()) out.emplace(basis_[i], coords[i]);
  return out;
}

bool TruncatedAlgebra::in_ideal(const PathSum& x) const { return ideal_.contains(to_dense(x)); }

FqVector TruncatedAlgebra::multiply(const FqVector& x, const FqVector& y) const {
  if (x.size() != basis_.size() || y.size() != basis_.size())
    throw Error(Errc::DimensionMismatch, "coordinate vector length");
  FqVector out(basis_.size(), Field::zero());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == Field::zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == Field::zero()) continue;
      FqElem c = field_.mul(x[i], y[j]);
      const FqVector& row = table_[i][j];
      for (std::size_t k = 0; k < row.size(); ++k)
        if (row[k] != Field::zero()) out[k] = field_.add(out[k], field_.mul(c, row[k]));
    }
  }
  return out;
}

bool TruncatedAlgebra::associative() const {
  const std::size_t n = basis_.size();
  auto unit = [&](std::size_t i) {
    FqVector v(n, Field::zero());
    v[i] = Field::one();
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (multiply(table_[i][j], unit(k)) != multiply(unit(i), table_[j][k])) return false;
  return true;
}

TruncatedAlgebra truncated_quotient(const Quiver& quiver, const std::vector<PathSum>& generators, std::size_t s,
                                    const Field& field) {
  return TruncatedAlgebra(quiver, field, generators, s);
}

std::optional<std::size_t> is_admissible(const Quiver& quiver, const std::vector<PathSum>& generators,
                                         std::size_t bound, const Field& field) {
  if (bound < 2) throw Error(Errc::PreconditionViolated, "admissibility bound must be at least 2");
  auto dims = TruncatedAlgebra(quiver, field, generators, bound + 1).degree_dims();
  for (std::size_t n = 2; n <= bound; ++n)
    if (dims[n] == 0) return n;
  return std::nullopt;
}

// ------------------------------------------------------------ chains

bool ChainLimitReport::ok() const {
  return !truncations.empty() &&
         std::all_of(truncations.begin(), truncations.end(), [&](const ChainTruncation& t) { return t.witnessed(levels); });
}

ChainLimitReport chain_limit_check(const IdealChain& chain, std::size_t s_max) {
  if (chain.levels.empty()) throw Error(Errc::PreconditionViolated, "empty ideal chain");
  if (s_max == 0) throw Error(Errc::PreconditionViolated, "truncation degree must be positive");
  ChainLimitReport rep;
  rep.levels = chain.levels.size();
  for (std::size_t s = 1; s <= s_max; ++s) {
    std::vector<TruncatedAlgebra> algebras;
    for (const auto& gens : chain.levels) algebras.emplace_back(chain.quiver, chain.field, gens, s);
    ChainTruncation t;
    t.s = s;
    for (std::size_t n = 0; n < algebras.size(); ++n) {
      t.dims.push_back(algebras[n].dim());
      if (n == 0) continue;
      for (const auto& row : algebras[n].ideal().rows())
        if (!algebras[n - 1].ideal().contains(row))
          throw Error(Errc::NotAChain, "I_" + std::to_string(n + 1) + " + J^" + std::to_string(s) + " is not inside I_" +
                                           std::to_string(n) + " + J^" + std::to_string(s));
    }
    std::size_t from = t.dims.size();
    while (from > 1 && t.dims[from - 2] == t.dims.back()) --from;
    t.stable_from = from;
    t.limit_degree_dims = algebras.back().degree_dims();
    t.limit_ideal_degree_dims = algebras.back().ideal_degree_dims();
    rep.truncations.push_back(std::move(t));
  }
  return rep;
}

// ------------------------------------------------------ presentations

namespace {

AlgebraElement word_image(const PermGroup& p, const Field& f, const std::vector<Elem>& gens, const PathWord& w) {
  AlgebraElement out = AlgebraElement::one(p, f);
  AlgebraElement one = AlgebraElement::one(p, f);
  for (std::size_t a : w.arrows) out = out * (one - AlgebraElement::basis(p, f, gens[a]));
  return out;
}

/// Spanning sets of J^1, ..., J^s for the augmentation ideal J of kP.
std::vector<RowSpace> radical_powers(const PermGroup& p, const Field& f, std::size_t s) {
  auto one = AlgebraElement::one(p, f);
  std::vector<AlgebraElement> gens_minus_one;
  for (Elem g : p.generator_elems()) gens_minus_one.push_back(one - AlgebraElement::basis(p, f, g));
  std::vector<RowSpace> powers;
  RowSpace layer(f, p.order());
  std::vector<AlgebraElement> spanning;
  for (Elem h = 1; h < p.order(); ++h) {
    auto x = one - AlgebraElement::basis(p, f, h);
    if (layer.insert(x.dense())) spanning.push_back(x);
  }
  powers.push_back(layer);
  while (powers.size() < s) {
    RowSpace next(f, p.order());
    std::vector<AlgebraElement> next_spanning;
    for (const auto& v : spanning)
      for (const auto& g : gens_minus_one) {
        auto w = v * g;
        if (next.insert(w.dense())) next_spanning.push_back(std::move(w));
      }
    powers.push_back(next);
    spanning = std::move(next_spanning);
  }
  return powers;
}

}  // namespace

FqVector presentation_image(const GroupPresentation& pres, const PathWord& w) {
  if (!pres.quiver.is_path(w)) throw Error(Errc::PreconditionViolated, "word is not a path of the bouquet");
  return word_image(pres.group, pres.algebra.field(), pres.generators, w).dense();
}

GroupPresentation group_algebra_presentation(const PermGroup& p, std::size_t s, const Field& field,
                                             std::optional<std::vector<Elem>> generators) {
  if (s == 0) throw Error(Errc::PreconditionViolated, "truncation degree must be positive");
  auto prime = prime_of_p_group(p);
  if (!prime && p.order() != 1) throw Error(Errc::NotPGroup, p.describe() + " is not a p-group");
  if (prime && *prime != field.characteristic())
    throw Error(Errc::PreconditionViolated, "field characteristic differs from the prime of the group");
  std::vector<Elem> gens = generators ? *generators : frattini_quotient(p).basis_lifts;
  for (Elem g : gens)
    if (g >= p.order()) throw Error(Errc::PreconditionViolated, "generator index out of range");
  Quiver quiver = Quiver::bouquet(gens.size());

  auto powers = radical_powers(p, field, s);
  const RowSpace& top = powers.back();
  std::vector<PathWord> coords;
  std::vector<FqVector> images;
  for (std::size_t n = 0; n < s; ++n)
    for (auto& w : quiver.paths_of_length(n)) {
      images.push_back(word_image(p, field, gens, w).dense());
      coords.push_back(std::move(w));
    }

  // Paths of length below t must span kP modulo J^t for every t <= s.
  for (std::size_t t = 1; t <= s; ++t) {
    RowSpace span = powers[t - 1];
    for (std::size_t c = 0; c < coords.size() && coords[c].length() < t; ++c) span.insert(images[c]);
    if (span.rank() != p.order())
      throw Error(Errc::GeneratorsDoNotSpan, "images of the loops do not span kP/J^" + std::to_string(t));
  }

  FqMatrix m(field, p.order(), coords.size());
  for (std::size_t c = 0; c < coords.size(); ++c) {
    FqVector col = top.reduce(images[c]);
    for (std::size_t r = 0; r < p.order(); ++r) m.at(r, c) = col[r];
  }
  RowSpace kernel(field, coords.size());
  for (auto& v : kernel_basis(m)) kernel.insert(std::move(v));
  std::vector<PathSum> kernel_sums;
  std::vector<std::size_t> kernel_dims(s, 0);
  for (std::size_t i = 0; i < kernel.rank(); ++i) {
    if (coords[kernel.pivots()[i]].length() < 2)
      throw Error(Errc::PreconditionViolated, "generators are dependent modulo the Frattini subgroup");
    ++kernel_dims[coords[kernel.pivots()[i]].length()];
    PathSum x;
    for (std::size_t c = 0; c < coords.size(); ++c)
      if (kernel.rows()[i][c] != Field::zero()) x.emplace(coords[c], kernel.rows()[i][c]);
    kernel_sums.push_back(std::move(x));
  }

  TruncatedAlgebra algebra(quiver, field, kernel_sums, s);
  const std::size_t target_dim = p.order() - top.rank();
  ensure(algebra.dim() == target_dim, "presentation quotient has the dimension of kP/J^s");
  ensure(algebra.ideal().rank() == kernel.rank(), "the kernel is an ideal");

  auto image_of = [&](const PathSum& x) {
    FqVector v(p.order(), Field::zero());
    for (const auto& [w, c] : x) {
      auto img = images[*algebra.coordinate(w)];
      for (std::size_t r = 0; r < v.size(); ++r) v[r] = field.add(v[r], field.mul(c, img[r]));
    }
    return v;
  };
  std::size_t checked = 0;
  bool multiplicative = true;
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    for (std::size_t j = 0; j < algebra.dim(); ++j) {
      auto lhs = AlgebraElement::from_dense(p, field, image_of(algebra.to_sum(algebra.product(i, j))));
      auto rhs = AlgebraElement::from_dense(p, field, images[*algebra.coordinate(algebra.basis()[i])]) *
                 AlgebraElement::from_dense(p, field, images[*algebra.coordinate(algebra.basis()[j])]);
      ++checked;
      multiplicative = multiplicative && top.contains((lhs - rhs).dense());
    }

  return GroupPresentation{p,         std::move(gens), quiver,  s, std::move(kernel_sums), std::move(kernel_dims),
                           target_dim, checked,        multiplicative, std::move(algebra)};
}

IdealChain kernel_chain(const std::vector<GroupPresentation>& levels) {
  if (levels.empty()) throw Error(Errc::PreconditionViolated, "no presentations");
  IdealChain chain{levels.front().quiver, levels.front().algebra.field(), {}};
  for (const auto& l : levels) {
    if (l.quiver.arrows().size() != chain.quiver.arrows().size())
      throw Error(Errc::PreconditionViolated, "presentations use different loop counts");
    if (l.truncation != levels.front().truncation)
      throw Error(Errc::PreconditionViolated, "presentations use different truncations");
    if (!(l.algebra.field() == chain.field)) throw Error(Errc::PreconditionViolated, "presentations use different fields");
    chain.levels.push_back(l.kernel);
  }
  return chain;
}

TruncatedAlgebra tame_algebra(int index, std::size_t s, const Field& field) {
  if (index < 1 || index > 3) throw Error(Errc::BadIndex, "tame algebra index " + std::to_string(index));
  if (s < 2) throw Error(Errc::PreconditionViolated, "truncation degree must be at least 2");
  auto build = [&](Quiver q, std::initializer_list<const char*> relations) {
    std::vector<PathSum> gens;
    for (const char* r : relations) gens.push_back(q.parse_sum(r, field));
    return TruncatedAlgebra(std::move(q), field, std::move(gens), s);
  };
  switch (index) {
    case 1:
      return build(Quiver(1, {{0, 0, "a"}, {0, 0, "b"}}), {"a^2", "b^2"});
    case 2:
      return build(Quiver(2, {{0, 0, "a"}, {0, 1, "b1"}, {1, 0, "b2"}}), {"b1b2", "a^2"});
    default:
      return build(Quiver(3, {{0, 1, "b2"}, {1, 0, "b1"}, {1, 2, "a1"}, {2, 1, "a2"}}), {"a1a2", "b1b2"});
  }
}

}  // namespace profusion
