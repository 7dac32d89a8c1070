#include <charconv>
#include <sstream>
#include <string>

#include "bracelab/errors.hpp"
#include "bracelab/workbench.hpp"

namespace bracelab {

namespace {

std::string join_invariants(const AbelianPGroup& g) {
  std::string out;
  for (std::size_t i = 0; i < g.invariants().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(g.invariants()[i]);
  }
  return out;
}

/// Reads one line left to right, reporting 1-based columns.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  std::string_view word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ' ' && text_[pos_] != '\t' && text_[pos_] != '\r' &&
           text_[pos_] != ':' && text_[pos_] != '=' && text_[pos_] != ',')
      ++pos_;
    if (start == pos_) fail("expected a word");
    return text_.substr(start, pos_ - start);
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Int integer() {
    skip_space();
    Int v = 0;
    auto res = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (res.ec != std::errc() || (pos_ < text_.size() && text_[pos_] == '-')) fail("expected a non-negative integer");
    pos_ = static_cast<std::size_t>(res.ptr - text_.data());
    return v;
  }
  std::string_view rest() {
    skip_space();
    auto r = text_.substr(pos_);
    while (!r.empty() && (r.back() == ' ' || r.back() == '\t' || r.back() == '\r')) r.remove_suffix(1);
    pos_ = text_.size();
    return r;
  }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

struct Line {
  std::string_view text;
  std::size_t number;
};

std::vector<Line> content_lines(std::string_view text, std::size_t& last_line) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) out.push_back({line, number});
    start = end + 1;
  }
  last_line = number;
  return out;
}

bool is_header(std::string_view line) {
  auto first = line.find_first_not_of(" \t");
  if (first == std::string_view::npos) return false;
  line.remove_prefix(first);
  auto word = line.substr(0, line.find_first_of(" \t"));
  return word == "brace" || word == "prelie";
}

}  // namespace

std::string serialize(const AlgebraDocument& doc) {
  const AbelianPGroup& g = doc.group();
  std::ostringstream out;
  out << (doc.kind() == DocumentKind::brace ? "brace" : "prelie") << " p=" << g.prime() << " n=" << g.log_order()
      << " inv=" << join_invariants(g) << '\n';
  if (!doc.name.empty()) out << "name " << doc.name << '\n';
  if (!doc.provenance.empty()) out << "provenance " << doc.provenance << '\n';
  if (doc.kind() == DocumentKind::brace) {
    const Brace& b = doc.brace();
    for (Elem i = 0; i < g.size(); ++i) {
      out << "row " << i << ':';
      for (Elem j = 0; j < g.size(); ++j) out << ' ' << b.circle(i, j);
      out << '\n';
    }
  } else {
    const PreLieRing& p = doc.prelie();
    for (int i = 0; i < g.rank(); ++i)
      for (int j = 0; j < g.rank(); ++j) {
        out << "sc " << i << ' ' << j << ':';
        auto coords = g.element(p.structure_constant(i, j)).coords;
        for (std::size_t k = 0; k < coords.size(); ++k) out << (k == 0 ? " " : ",") << coords[k];
        out << '\n';
      }
  }
  return out.str();
}

std::vector<AlgebraDocument> deserialize_all(std::string_view text) {
  std::size_t last_line = 0;
  const auto lines = content_lines(text, last_line);
  std::vector<AlgebraDocument> docs;
  std::size_t at = 0;
  while (at < lines.size()) {
    Cursor head(lines[at].text, lines[at].number);
    auto kind_word = head.word();
    if (kind_word != "brace" && kind_word != "prelie") head.fail("expected 'brace' or 'prelie'");
    const bool is_brace = kind_word == "brace";
    Int p = 0, n = 0;
    std::vector<int> inv;
    bool seen_p = false, seen_n = false, seen_inv = false;
    while (!head.at_end()) {
      auto key = head.word();
      head.expect('=');
      if (key == "p") {
        p = head.integer();
        seen_p = true;
      } else if (key == "n") {
        n = head.integer();
        seen_n = true;
      } else if (key == "inv") {
        do {
          inv.push_back(static_cast<int>(head.integer()));
        } while (head.accept(','));
        seen_inv = true;
      } else {
        head.fail("unknown header field '" + std::string(key) + "'");
      }
    }
    if (!seen_p || !seen_n || !seen_inv) head.fail("header needs p=, n= and inv=");
    AbelianPGroup g(p, inv);
    if (g.log_order() != n)
      throw InvariantViolation("n = " + std::to_string(n) + " does not match invariants summing to " +
                               std::to_string(g.log_order()));
    ++at;

    std::string name, provenance;
    const std::size_t expected = is_brace ? g.size() : static_cast<std::size_t>(g.rank() * g.rank());
    std::vector<Elem> payload;
    payload.reserve(is_brace ? g.size() * g.size() : expected);
    std::size_t filled = 0;
    while (filled < expected || (at < lines.size() && !is_header(lines[at].text))) {
      if (at >= lines.size()) throw ParseError("document ends before its payload is complete", last_line + 1, 1);
      Cursor c(lines[at].text, lines[at].number);
      if (is_header(lines[at].text)) c.fail("new document starts before the payload is complete");
      auto word = c.word();
      if (word == "name") {
        name = std::string(c.rest());
      } else if (word == "provenance") {
        provenance = std::string(c.rest());
      } else if (filled >= expected) {
        c.fail("unexpected line after a complete payload");
      } else if (is_brace && word == "row") {
        Int i = c.integer();
        if (static_cast<std::size_t>(i) != filled) c.fail("expected row " + std::to_string(filled));
        c.expect(':');
        for (std::size_t j = 0; j < g.size(); ++j) {
          if (c.at_end())
            c.fail("row " + std::to_string(i) + " has " + std::to_string(j) + " entries, expected " +
                   std::to_string(g.size()));
          Int v = c.integer();
          if (v < 0 || static_cast<std::size_t>(v) >= g.size())
            throw InvariantViolation("row " + std::to_string(i) + " entry " + std::to_string(v) +
                                     " is outside the group");
          payload.push_back(static_cast<Elem>(v));
        }
        if (!c.at_end()) c.fail("row " + std::to_string(i) + " has too many entries");
        ++filled;
      } else if (!is_brace && word == "sc") {
        const auto r = static_cast<std::size_t>(g.rank());
        Int i = c.integer();
        Int j = c.integer();
        if (static_cast<std::size_t>(i) != filled / r || static_cast<std::size_t>(j) != filled % r)
          c.fail("expected sc " + std::to_string(filled / r) + " " + std::to_string(filled % r));
        c.expect(':');
        std::vector<Int> coords;
        do {
          coords.push_back(c.integer());
        } while (c.accept(','));
        if (!c.at_end()) c.fail("trailing text after coordinates");
        if (coords.size() != r)
          c.fail("expected " + std::to_string(r) + " coordinates, got " + std::to_string(coords.size()));
        for (std::size_t k = 0; k < r; ++k)
          if (coords[k] >= g.component_order(static_cast<int>(k)))
            throw InvariantViolation("coordinate " + std::to_string(coords[k]) + " exceeds its component order");
        payload.push_back(g.index(GroupElement{coords}));
        ++filled;
      } else {
        c.fail(std::string("unexpected '") + std::string(word) + "'");
      }
      ++at;
    }
    if (is_brace)
      docs.push_back({Brace(g, std::move(payload)), std::move(name), std::move(provenance)});
    else
      docs.push_back({PreLieRing(g, std::move(payload)), std::move(name), std::move(provenance)});
  }
  return docs;
}

AlgebraDocument deserialize(std::string_view text) {
  auto docs = deserialize_all(text);
  if (docs.size() != 1) throw ParseError("expected exactly one document, found " + std::to_string(docs.size()), 1, 1);
  return std::move(docs.front());
}

}  // namespace bracelab
