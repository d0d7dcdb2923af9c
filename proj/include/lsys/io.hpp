#pragma once

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstdint>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "lsys/error.hpp"
#include "lsys/geometry.hpp"
#include "lsys/lsystem.hpp"

namespace lsys {

// ---------------------------------------------------------------------------
// Word literals: comma-separated signed tokens, e.g. "4, 2, 3, 1, 3, -2, -4".
// ---------------------------------------------------------------------------

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// U+2212 MINUS SIGN, as typeset in the literature.
inline constexpr std::string_view unicode_minus = "\xE2\x88\x92";

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                       std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

inline ParseError parse_error_at(std::string_view text, std::string_view key,
                                 const std::string& what) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  const auto pos = text.find(quoted);
  if (pos == std::string_view::npos) return ParseError(what, 0, 0);
  auto [line, column] = line_column(text, pos);
  return ParseError(what, line, column);
}

/// Shortest decimal that round-trips; integers print without a fraction.
inline std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop negative zero
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw Error("cannot format number");
  return std::string(buf, end);
}

inline std::string format_number(std::int64_t v) { return std::to_string(v); }

}  // namespace detail

inline Symbol parse_symbol(const Alphabet& alphabet, std::string_view text) {
  std::string_view body = detail::trim(text);
  bool neg = false;
  if (body.starts_with('-')) {
    neg = true;
    body.remove_prefix(1);
  } else if (body.starts_with(detail::unicode_minus)) {
    neg = true;
    body.remove_prefix(detail::unicode_minus.size());
  }
  body = detail::trim(body);
  if (body.empty()) {
    throw ValidationError("empty element in word literal", std::string(text));
  }
  const auto id = alphabet.find(body);
  if (!id) {
    throw ValidationError("undeclared token '" + std::string(body) + "'",
                          std::string(body));
  }
  if (!alphabet.signable(*id)) {
    if (neg) {
      throw ValidationError("token '" + std::string(body) +
                                "' is unsigned and cannot be negated",
                            std::string(body));
    }
    return unsigned_symbol(*id);
  }
  return neg ? negative(*id) : positive(*id);
}

inline Word parse_word(const Alphabet& alphabet, std::string_view text) {
  Word out;
  if (detail::trim(text).empty()) return out;
  std::size_t begin = 0;
  while (true) {
    const auto comma = text.find(',', begin);
    out.push_back(parse_symbol(alphabet, text.substr(begin, comma - begin)));
    if (comma == std::string_view::npos) break;
    begin = comma + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// System definition files
// ---------------------------------------------------------------------------

/// Parses a JSON system definition:
///
///   name            text
///   symbols         [{"token": "1", "signable": true}, ...]
///   start           word literal
///   sign_symmetric  bool, optional (default true)
///   rules           {token: word literal}; omitted tokens map to themselves.
///                   Keys "-x" are allowed only when sign_symmetric is false.
///   interpretation  {token: "skip" | "origin" | [dx, dy]} for every token
///
/// Syntax and structure problems raise ParseError; a well-formed file that
/// names undeclared tokens, negates unsigned ones, etc. raises
/// ValidationError naming the token.
inline LSystem parse_system_file(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    auto [line, column] = detail::line_column(text, offset);
    throw ParseError("malformed JSON", line, column);
  }
  if (!doc.is_object()) throw ParseError("definition must be a JSON object", 1, 1);

  static constexpr std::string_view known[] = {
      "name", "symbols", "start", "sign_symmetric", "rules", "interpretation"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw detail::parse_error_at(text, key, "unknown field '" + key + "'");
    }
  }
  auto require = [&](const char* key, json::value_t type, const char* kind) -> const json& {
    if (!doc.contains(key)) {
      throw ParseError(std::string("missing field '") + key + "'", 0, 0);
    }
    const json& v = doc.at(key);
    if (v.type() != type) {
      throw detail::parse_error_at(text, key,
                                   std::string("field '") + key + "' must be " + kind);
    }
    return v;
  };

  const std::string name = require("name", json::value_t::string, "a string").get<std::string>();

  std::vector<TokenSpec> specs;
  for (const json& entry : require("symbols", json::value_t::array, "an array")) {
    if (!entry.is_object() || !entry.contains("token") || !entry.at("token").is_string()) {
      throw detail::parse_error_at(text, "symbols",
                                   "each symbol needs a string 'token'");
    }
    TokenSpec spec{entry.at("token").get<std::string>(), true};
    if (entry.contains("signable")) {
      if (!entry.at("signable").is_boolean()) {
        throw detail::parse_error_at(text, "signable", "'signable' must be a boolean");
      }
      spec.signable = entry.at("signable").get<bool>();
    }
    specs.push_back(std::move(spec));
  }
  auto alphabet = make_alphabet(std::move(specs));

  bool sign_symmetric = true;
  if (doc.contains("sign_symmetric")) {
    sign_symmetric =
        require("sign_symmetric", json::value_t::boolean, "a boolean").get<bool>();
  }

  const std::size_t n = alphabet->size();
  std::vector<Word> images;
  std::vector<Word> negatives;
  for (std::size_t i = 0; i < n; ++i) {
    auto id = static_cast<TokenId>(i);
    const bool s = alphabet->signable(id);
    images.push_back({Symbol{id, s ? Sign::positive : Sign::none}});
    if (!sign_symmetric) negatives.push_back(s ? Word{negative(id)} : Word{});
  }

  for (const auto& [key, value] : require("rules", json::value_t::object, "an object").items()) {
    if (!value.is_string()) {
      throw detail::parse_error_at(text, key, "rule for '" + key + "' must be a word literal string");
    }
    std::string_view tok = key;
    const bool neg_key = tok.starts_with('-');
    if (neg_key) tok.remove_prefix(1);
    const auto id = alphabet->find(tok);
    if (!id) {
      throw ValidationError("rule for undeclared token '" + std::string(tok) + "'",
                            std::string(tok));
    }
    if (neg_key) {
      if (sign_symmetric) {
        throw ValidationError("rule for '" + key +
                                  "' given but negative images follow from sign symmetry",
                              std::string(tok));
      }
      if (!alphabet->signable(*id)) {
        throw ValidationError("token '" + std::string(tok) + "' is unsigned and cannot be negated",
                              std::string(tok));
      }
      negatives[*id] = parse_word(*alphabet, value.get<std::string>());
    } else {
      images[*id] = parse_word(*alphabet, value.get<std::string>());
    }
  }

  const json& interp_json = require("interpretation", json::value_t::object, "an object");
  std::vector<Action> actions(n);
  std::vector<bool> seen(n, false);
  for (const auto& [key, value] : interp_json.items()) {
    const auto id = alphabet->find(key);
    if (!id) {
      throw ValidationError("interpretation for undeclared token '" + key + "'", key);
    }
    if (value.is_string() && value.get<std::string>() == "skip") {
      actions[*id] = Action::skip();
    } else if (value.is_string() && value.get<std::string>() == "origin") {
      actions[*id] = Action::origin();
    } else if (value.is_array() && value.size() == 2 && value[0].is_number_integer() &&
               value[1].is_number_integer()) {
      const auto dx = value[0].get<std::int64_t>();
      const auto dy = value[1].get<std::int64_t>();
      if (std::abs(dx) + std::abs(dy) != 1) {
        throw ValidationError("interpretation of '" + key + "' is not a unit step", key);
      }
      actions[*id] = Action::step(static_cast<int>(dx), static_cast<int>(dy));
    } else {
      throw detail::parse_error_at(text, key,
                                   "interpretation of '" + key +
                                       "' must be \"skip\", \"origin\" or [dx, dy]");
    }
    seen[*id] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen[i]) {
      const std::string& tok = alphabet->token(static_cast<TokenId>(i));
      throw ValidationError("token '" + tok + "' has no interpretation", tok);
    }
  }

  const std::string start_text =
      require("start", json::value_t::string, "a word literal string").get<std::string>();
  Word start = parse_word(*alphabet, start_text);
  if (start.empty()) throw ValidationError("start word is empty", "");

  Morphism morphism(alphabet, std::move(images), sign_symmetric, std::move(negatives));
  return LSystem(name, std::move(morphism), std::move(start),
                 Interpretation(std::move(actions)));
}

/// Canonical definition text for a system; parse_system_file inverts it.
/// Every rule is written out, including constants.
inline std::string serialize_system(const LSystem& sys) {
  using nlohmann::json;
  const Alphabet& alphabet = sys.alphabet();
  const Morphism& m = sys.morphism;
  auto quote = [](const std::string& s) { return json(s).dump(); };

  std::ostringstream out;
  out << "{\n  \"name\": " << quote(sys.name) << ",\n  \"symbols\": [\n";
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    const TokenSpec& t = alphabet.tokens()[i];
    out << "    {\"token\": " << quote(t.token)
        << ", \"signable\": " << (t.signable ? "true" : "false") << "}"
        << (i + 1 < alphabet.size() ? ",\n" : "\n");
  }
  out << "  ],\n  \"start\": " << quote(alphabet.format(sys.start)) << ",\n"
      << "  \"sign_symmetric\": " << (m.sign_symmetric() ? "true" : "false") << ",\n"
      << "  \"rules\": {\n";
  std::vector<std::string> rules;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    auto id = static_cast<TokenId>(i);
    rules.push_back("    " + quote(alphabet.token(id)) + ": " +
                    quote(alphabet.format(m.image(id))));
  }
  if (!m.sign_symmetric()) {
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      auto id = static_cast<TokenId>(i);
      if (!alphabet.signable(id)) continue;
      rules.push_back("    " + quote("-" + alphabet.token(id)) + ": " +
                      quote(alphabet.format(m.negative_image(id))));
    }
  }
  for (std::size_t i = 0; i < rules.size(); ++i) {
    out << rules[i] << (i + 1 < rules.size() ? ",\n" : "\n");
  }
  out << "  },\n  \"interpretation\": {\n";
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    const Action& a = sys.interpretation.entries()[i];
    out << "    " << quote(alphabet.token(static_cast<TokenId>(i))) << ": ";
    switch (a.kind) {
      case Action::Kind::skip: out << "\"skip\""; break;
      case Action::Kind::origin: out << "\"origin\""; break;
      case Action::Kind::move: out << "[" << int{a.dx} << ", " << int{a.dy} << "]"; break;
    }
    out << (i + 1 < alphabet.size() ? ",\n" : "\n");
  }
  out << "  }\n}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Emitters
// ---------------------------------------------------------------------------

/// Streams canonical moves as "1, 2, -1" followed by a newline. Nothing is
/// written for an empty sequence.
class MoveTextWriter {
 public:
  explicit MoveTextWriter(std::ostream& out) : out_(&out) {}

  void write(Move m) {
    if (count_ != 0) *out_ << ", ";
    *out_ << code(m);
    ++count_;
  }

  void finish() {
    if (count_ != 0) *out_ << '\n';
  }

  std::uint64_t count() const noexcept { return count_; }

 private:
  std::ostream* out_;
  std::uint64_t count_ = 0;
};

inline std::string emit_moves_text(std::span<const Move> moves) {
  std::ostringstream out;
  MoveTextWriter writer(out);
  for (Move m : moves) writer.write(m);
  writer.finish();
  return out.str();
}

/// Word in source notation, e.g. "0, 3, 4, -1", newline-terminated.
inline std::string emit_word_text(const Alphabet& alphabet, const Word& w) {
  if (w.empty()) return "";
  return alphabet.format(w) + "\n";
}

template <typename T>
void write_csv_row(std::ostream& out, const BasicPoint<T>& p) {
  out << detail::format_number(p.x) << ',' << detail::format_number(p.y) << '\n';
}

inline constexpr std::string_view csv_header = "x,y\n";

template <typename T>
std::string emit_csv(std::span<const BasicPoint<T>> points) {
  std::ostringstream out;
  out << csv_header;
  for (const auto& p : points) write_csv_row(out, p);
  return out.str();
}

inline std::string emit_csv(const Path& p) { return emit_csv(std::span<const Point>(p)); }

inline std::string emit_csv(const NormalizedPath& p) {
  return emit_csv(std::span<const BasicPoint<double>>(p.points));
}

struct RenderOptions {
  double stroke_width = 1.0;
  double margin = 5.0;
  double cell_size = 10.0;
  bool y_flip = true;

  void validate() const {
    if (!(stroke_width > 0.0)) throw ValidationError("stroke width must be positive", "");
    if (!(cell_size > 0.0)) throw ValidationError("cell size must be positive", "");
    if (!(margin >= 0.0)) throw ValidationError("margin must be non-negative", "");
  }
};

/// SVG 1.1 document with one polyline through the scaled points. The view
/// box is the bounding box plus the margin on every side.
template <typename T>
std::string emit_svg(std::span<const BasicPoint<T>> points, const RenderOptions& opts) {
  opts.validate();
  const auto box = bounding_box(points);
  const double width = static_cast<double>(box.max_x - box.min_x) * opts.cell_size + 2 * opts.margin;
  const double height = static_cast<double>(box.max_y - box.min_y) * opts.cell_size + 2 * opts.margin;
  using detail::format_number;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << format_number(width) << "\" height=\"" << format_number(height)
      << "\" viewBox=\"0 0 " << format_number(width) << ' ' << format_number(height)
      << "\">\n"
      << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\""
      << format_number(opts.stroke_width)
      << "\" stroke-linecap=\"round\" stroke-linejoin=\"round\" points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double x = static_cast<double>(points[i].x - box.min_x) * opts.cell_size + opts.margin;
    const double y = opts.y_flip
                         ? static_cast<double>(box.max_y - points[i].y) * opts.cell_size + opts.margin
                         : static_cast<double>(points[i].y - box.min_y) * opts.cell_size + opts.margin;
    if (i != 0) out << ' ';
    out << format_number(x) << ',' << format_number(y);
  }
  out << "\"/>\n</svg>\n";
  return out.str();
}

inline std::string emit_svg(const Path& p, const RenderOptions& opts = {}) {
  return emit_svg(std::span<const Point>(p), opts);
}

inline std::string emit_svg(const NormalizedPath& p, const RenderOptions& opts = {}) {
  return emit_svg(std::span<const BasicPoint<double>>(p.points), opts);
}

}  // namespace lsys
