#include "cusp/gluing_file.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "cusp/isosig.hpp"

namespace cusp {

std::string to_string(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::BadHeader: return "bad header";
    case ParseErrorKind::MalformedToken: return "malformed token";
    case ParseErrorKind::TetOutOfRange: return "tetrahedron index out of range";
    case ParseErrorKind::NotPermutation: return "not a permutation";
    case ParseErrorKind::WrongFaceCount: return "wrong face count";
    case ParseErrorKind::WrongTetCount: return "wrong tetrahedron count";
  }
  return "?";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         to_string(kind) + ": " + detail),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Triangulation parse_gluing_table(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<Token>>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split(line);
    if (!tokens.empty()) lines.emplace_back(line_no, std::move(tokens));
    pos = end + 1;
  }
  if (lines.empty()) throw ParseError(ParseErrorKind::BadHeader, 1, 1, "missing 'tets <n>' header");

  const auto& [header_line, header] = lines.front();
  if (header.size() != 2 || header[0].text != "tets" || !all_digits(header[1].text) ||
      header[1].text.size() > 9)
    throw ParseError(ParseErrorKind::BadHeader, header_line, header[0].column, "expected 'tets <n>'");
  const std::size_t n = std::stoul(std::string(header[1].text));
  if (lines.size() - 1 != n)
    throw ParseError(ParseErrorKind::WrongTetCount, lines.back().first, 1,
                     "header declares " + std::to_string(n) + " tetrahedra but " +
                         std::to_string(lines.size() - 1) + " lines follow");

  Triangulation tri(n);
  for (std::size_t t = 0; t < n; ++t) {
    const auto& [ln, tokens] = lines[t + 1];
    if (tokens.size() != 4)
      throw ParseError(ParseErrorKind::WrongFaceCount, ln, tokens.front().column,
                       "expected 4 faces, found " + std::to_string(tokens.size()));
    for (int f = 0; f < 4; ++f) {
      const Token& tok = tokens[f];
      if (tok.text == "-") continue;
      const auto colon = tok.text.find(':');
      if (colon == std::string_view::npos || !all_digits(tok.text.substr(0, colon)) ||
          colon > 9 || tok.text.size() != colon + 5 || !all_digits(tok.text.substr(colon + 1)))
        throw ParseError(ParseErrorKind::MalformedToken, ln, tok.column,
                         "'" + std::string(tok.text) + "' is not of the form t:p0p1p2p3");
      const std::size_t target = std::stoul(std::string(tok.text.substr(0, colon)));
      if (target >= n)
        throw ParseError(ParseErrorKind::TetOutOfRange, ln, tok.column,
                         "tetrahedron " + std::to_string(target) + " does not exist");
      std::array<int, 4> img{};
      for (int k = 0; k < 4; ++k) img[k] = tok.text[colon + 1 + k] - '0';
      if (!Perm4::is_permutation(img))
        throw ParseError(ParseErrorKind::NotPermutation, ln, tok.column + colon + 1,
                         "'" + std::string(tok.text.substr(colon + 1)) + "' is not a permutation of 0123");
      tri.set_gluing(t, f, Gluing{target, Perm4(img[0], img[1], img[2], img[3])});
    }
  }
  return tri;
}

std::string serialize_gluing_table(const Triangulation& tri) {
  std::string out = "tets " + std::to_string(tri.size()) + "\n";
  for (std::size_t t = 0; t < tri.size(); ++t) {
    for (int f = 0; f < 4; ++f) {
      if (f) out += ' ';
      const auto& g = tri.gluing(t, f);
      out += g ? std::to_string(g->tet) + ":" + g->perm.str() : "-";
    }
    out += '\n';
  }
  return out;
}

Triangulation load_triangulation(const std::string& source) {
  if (source.rfind("sig:", 0) == 0) return decode_signature(std::string_view(source).substr(4));
  std::stringstream buf;
  if (source == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(source);
    if (!in) throw std::runtime_error("cannot open " + source);
    buf << in.rdbuf();
  }
  return parse_gluing_table(buf.str());
}

}  // namespace cusp
