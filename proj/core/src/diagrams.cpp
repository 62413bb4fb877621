#include "vconc/diagrams.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "vconc/errors.hpp"

namespace vconc {
namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t position() const { return pos_ + 1; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_ + 1, what); }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string name() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a component name");
    return std::string(text_.substr(start, pos_ - start));
  }

  Passage passage() {
    Passage p;
    char r = peek();
    if (r == 'O') p.role = Role::kOver;
    else if (r == 'U') p.role = Role::kUnder;
    else fail("expected a passage (O or U)");
    ++pos_;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a crossing id");
    if (pos_ - start > 12) fail("crossing id too long");
    p.id = std::stol(std::string(text_.substr(start, pos_ - start)));
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '+') {
      p.sign = 1;
      ++pos_;
    } else if (pos_ < text_.size() && text_[pos_] == '-') {
      p.sign = -1;
      ++pos_;
    } else if (text_.substr(pos_, kUnicodeMinus.size()) == kUnicodeMinus) {
      p.sign = -1;
      pos_ += kUnicodeMinus.size();
    } else {
      fail("expected a crossing sign");
    }
    return p;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Seen {
  int sign;
  std::size_t position;
};

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

const Component* VirtualLinkDiagram::find(std::string_view name) const {
  for (const auto& c : components)
    if (c.name == name) return &c;
  return nullptr;
}

std::size_t VirtualLinkDiagram::crossing_count() const {
  std::size_t n = 0;
  for (const auto& c : components) n += c.passages.size();
  return n / 2;
}

VirtualLinkDiagram parse_gauss(std::string_view text) {
  Lexer lex(text);
  VirtualLinkDiagram d;
  std::map<long, Seen> over, under;
  std::set<std::string> names;
  if (lex.done()) return d;
  while (true) {
    std::size_t name_pos = lex.position();
    Component c;
    c.name = lex.name();
    if (!names.insert(c.name).second) throw ParseError(name_pos, "duplicate component name '" + c.name + "'");
    lex.expect(':');
    while (!lex.done() && lex.peek() != ';') {
      lex.skip_space();
      std::size_t at = lex.position();
      Passage p = lex.passage();
      auto& table = p.role == Role::kOver ? over : under;
      auto& other = p.role == Role::kOver ? under : over;
      if (table.count(p.id))
        throw ValidationError(Condition::kDiagram, "crossing " + std::to_string(p.id) + " has two " +
                                                       (p.role == Role::kOver ? "O" : "U") +
                                                       " passages (position " + std::to_string(at) + ")");
      auto it = other.find(p.id);
      if (it != other.end() && it->second.sign != p.sign)
        throw ValidationError(Condition::kDiagram, "crossing " + std::to_string(p.id) +
                                                       " has mismatched signs (position " + std::to_string(at) + ")");
      table[p.id] = Seen{p.sign, at};
      c.passages.push_back(p);
    }
    d.components.push_back(std::move(c));
    if (lex.done()) break;
    lex.expect(';');
    if (lex.done()) break;  // trailing separator
  }
  auto dangling = [](const std::map<long, Seen>& a, const std::map<long, Seen>& b, const char* missing) {
    for (const auto& [id, seen] : a)
      if (!b.count(id))
        throw ValidationError(Condition::kDiagram, "crossing " + std::to_string(id) + " has no " + missing +
                                                       " passage (position " + std::to_string(seen.position) + ")");
  };
  dangling(over, under, "U");
  dangling(under, over, "O");
  return d;
}

std::string render(const VirtualLinkDiagram& d) {
  std::string out;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    if (i) out += " ; ";
    out += d.components[i].name + ":";
    for (const auto& p : d.components[i].passages) {
      out += ' ';
      out += p.role == Role::kOver ? 'O' : 'U';
      out += std::to_string(p.id);
      out += p.sign > 0 ? '+' : '-';
    }
  }
  return out;
}

int vlk(const VirtualLinkDiagram& d, std::string_view j, std::string_view k) {
  const Component* cj = d.find(j);
  const Component* ck = d.find(k);
  if (!cj) throw InvalidArgument("vlk: unknown component '" + std::string(j) + "'");
  if (!ck) throw InvalidArgument("vlk: unknown component '" + std::string(k) + "'");
  if (cj == ck) throw InvalidArgument("vlk: components must differ");
  std::set<long> under_k;
  for (const auto& p : ck->passages)
    if (p.role == Role::kUnder) under_k.insert(p.id);
  int total = 0;
  for (const auto& p : cj->passages)
    if (p.role == Role::kOver && under_k.count(p.id)) total += p.sign;
  return total;
}

CurveSystem parse_curve_system(std::string_view text) {
  // Directive lines are blanked so parse positions stay valid for the diagram body.
  std::string body(text);
  CurveSystem cs;
  bool have_cores = false;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t end = body.find('\n', start);
    if (end == std::string::npos) end = body.size();
    std::size_t first = body.find_first_not_of(" \t\r", start);
    if (first != std::string::npos && first < end && body[first] == '@') {
      auto words = split_words(body.substr(first + 1, end - first - 1));
      if (words.empty()) throw ParseError(first + 1, "empty directive");
      if (words[0] == "cores") {
        if (have_cores) throw ParseError(first + 1, "repeated @cores directive");
        have_cores = true;
        cs.cores.assign(words.begin() + 1, words.end());
      } else if (words[0] == "push") {
        if (words.size() != 4) throw ParseError(first + 1, "@push expects: core plus minus");
        if (cs.push_offs.count(words[1])) throw ParseError(first + 1, "repeated @push for '" + words[1] + "'");
        cs.push_offs[words[1]] = {words[2], words[3]};
      } else {
        throw ParseError(first + 1, "unknown directive '@" + words[0] + "'");
      }
      for (std::size_t i = start; i < end; ++i) body[i] = ' ';
    }
    start = end + 1;
  }
  cs.diagram = parse_gauss(body);

  if (cs.cores.size() % 2 != 0)
    throw ValidationError(Condition::kDiagram, "curve system needs an even number of cores");
  std::set<std::string> used;
  auto claim = [&](const std::string& n) {
    if (!cs.diagram.find(n)) throw ValidationError(Condition::kDiagram, "component '" + n + "' not in diagram");
    if (!used.insert(n).second) throw ValidationError(Condition::kDiagram, "component '" + n + "' used twice");
  };
  for (const auto& c : cs.cores) {
    claim(c);
    auto it = cs.push_offs.find(c);
    if (it == cs.push_offs.end()) throw ValidationError(Condition::kDiagram, "core '" + c + "' has no @push");
  }
  for (const auto& [core, pm] : cs.push_offs) {
    if (!used.count(core)) throw ValidationError(Condition::kDiagram, "@push for '" + core + "' which is not a core");
    claim(pm.first);
    claim(pm.second);
  }
  return cs;
}

SeifertCouple assemble_couple(const CurveSystem& cs) {
  const std::size_t n = cs.cores.size();
  RatMatrix plus(n, n), minus(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [p, m] = cs.push_offs.at(cs.cores[i]);
    for (std::size_t j = 0; j < n; ++j) {
      plus(i, j) = vlk(cs.diagram, p, cs.cores[j]);
      minus(i, j) = vlk(cs.diagram, m, cs.cores[j]);
    }
  }
  return validate_couple(plus, minus, Ring::kZ);
}

}  // namespace vconc
