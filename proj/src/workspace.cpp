#include "regcat/workspace.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace regcat {

namespace {

struct Token {
  enum class Kind { name, symbol, end } kind;
  std::string text;
  int line;
  int col;
};

std::string where(const Token& t) {
  return std::to_string(t.line) + ":" + std::to_string(t.col);
}

bool name_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '\'' || c == '.' || c >= 0x80;
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const auto c = static_cast<unsigned char>(src[i]);
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (src.substr(i, 2) == "->") {
      out.push_back({Token::Kind::symbol, "->", line, col});
      advance(2);
      continue;
    }
    if (std::string_view("={},:*()").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Token::Kind::symbol, std::string(1, static_cast<char>(c)), line, col});
      advance(1);
      continue;
    }
    if (name_char(c)) {
      const int l = line;
      const int k = col;
      std::size_t j = i;
      while (j < src.size() && name_char(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Kind::name, std::string(src.substr(i, j - i)), l, k});
      advance(j - i);
      continue;
    }
    throw Error(Errc::SyntaxError, std::to_string(line) + ":" + std::to_string(col) +
                                       ": unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
  }
  out.push_back({Token::Kind::end, "", line, col});
  return out;
}

struct NameRef {
  std::string text;
  Token at;
};

struct SetDecl {
  NameRef name;
  std::vector<NameRef> elements;
};

struct MapDecl {
  NameRef name, dom, cod;
  std::vector<std::pair<NameRef, NameRef>> pairs;
};

struct DiagramDecl {
  NameRef name;
  std::vector<NameRef> members;
};

struct BraidingDecl {
  NameRef name, left, right;
  struct Entry {
    NameRef x, y, out_y, out_x;
  };
  std::vector<Entry> entries;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  void parse() {
    while (peek().kind != Token::Kind::end) {
      const Token& head = peek();
      if (head.kind == Token::Kind::name && head.text == "set") {
        next();
        set_decl();
      } else if (head.kind == Token::Kind::name && head.text == "map") {
        next();
        map_decl();
      } else if (head.kind == Token::Kind::name && head.text == "diagram") {
        next();
        diagram_decl();
      } else if (head.kind == Token::Kind::name && head.text == "braiding") {
        next();
        braiding_decl();
      } else {
        fail(head, "'set', 'map', 'diagram' or 'braiding'");
      }
    }
  }

  std::vector<SetDecl> sets;
  std::vector<MapDecl> maps;
  std::vector<DiagramDecl> diagrams;
  std::vector<BraidingDecl> braidings;

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] static void fail(const Token& t, const std::string& expected) {
    const std::string found = t.kind == Token::Kind::end ? "end of input" : "'" + t.text + "'";
    throw Error(Errc::SyntaxError, where(t) + ": expected " + expected + ", found " + found);
  }

  NameRef name() {
    const Token& t = peek();
    if (t.kind != Token::Kind::name) fail(t, "a name");
    next();
    return {t.text, t};
  }

  void expect(std::string_view sym) {
    const Token& t = peek();
    if (t.kind != Token::Kind::symbol || t.text != sym) fail(t, "'" + std::string(sym) + "'");
    next();
  }

  bool accept(std::string_view sym) {
    const Token& t = peek();
    if (t.kind == Token::Kind::symbol && t.text == sym) {
      next();
      return true;
    }
    return false;
  }

  // "{" item ("," item)* "}", also accepting "{ }".
  template <typename Item>
  void braced_list(Item item) {
    expect("{");
    if (accept("}")) return;
    do {
      item();
    } while (accept(","));
    expect("}");
  }

  void set_decl() {
    SetDecl d{name(), {}};
    expect("=");
    braced_list([&] { d.elements.push_back(name()); });
    sets.push_back(std::move(d));
  }

  void map_decl() {
    MapDecl d;
    d.name = name();
    expect(":");
    d.dom = name();
    expect("->");
    d.cod = name();
    braced_list([&] {
      NameRef from = name();
      expect("->");
      d.pairs.emplace_back(std::move(from), name());
    });
    maps.push_back(std::move(d));
  }

  void diagram_decl() {
    DiagramDecl d{name(), {}};
    braced_list([&] { d.members.push_back(name()); });
    diagrams.push_back(std::move(d));
  }

  void braiding_decl() {
    BraidingDecl d;
    d.name = name();
    expect(":");
    d.left = name();
    expect("*");
    d.right = name();
    braced_list([&] {
      BraidingDecl::Entry e;
      expect("(");
      e.x = name();
      expect(",");
      e.y = name();
      expect(")");
      expect("->");
      expect("(");
      e.out_y = name();
      expect(",");
      e.out_x = name();
      expect(")");
      d.entries.push_back(std::move(e));
    });
    braidings.push_back(std::move(d));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

[[noreturn]] void unknown(const NameRef& ref) {
  throw Error(Errc::UnknownReference, ref.text + " at " + where(ref.at));
}

Index label_index(const SetRef& s, const NameRef& ref) {
  auto i = s->index_of(ref.text);
  if (!i) throw Error(Errc::UnknownLabel, ref.text + " in " + s->id() + " at " + where(ref.at));
  return *i;
}

}  // namespace

const SetRef& Workspace::set(const std::string& name) const {
  auto it = sets.find(name);
  if (it == sets.end()) throw Error(Errc::UnknownReference, "set " + name);
  return it->second;
}

const FinMap& Workspace::map(const std::string& name) const {
  auto it = maps.find(name);
  if (it == maps.end()) throw Error(Errc::UnknownReference, "map " + name);
  return it->second;
}

const Diagram& Workspace::diagram(const std::string& name) const {
  auto it = diagrams.find(name);
  if (it == diagrams.end()) throw Error(Errc::UnknownReference, "diagram " + name);
  return it->second;
}

const Braiding& Workspace::braiding(const std::string& name) const {
  auto it = braidings.find(name);
  if (it == braidings.end()) throw Error(Errc::UnknownReference, "braiding " + name);
  return it->second;
}

bool operator==(const Workspace& a, const Workspace& b) {
  auto same_set = [](const SetRef& x, const SetRef& y) {
    return x->id() == y->id() && x->labels() == y->labels();
  };
  if (a.sets.size() != b.sets.size() || a.maps.size() != b.maps.size() ||
      a.diagrams.size() != b.diagrams.size() || a.braidings.size() != b.braidings.size()) {
    return false;
  }
  for (auto i = a.sets.begin(), j = b.sets.begin(); i != a.sets.end(); ++i, ++j) {
    if (i->first != j->first || !same_set(i->second, j->second)) return false;
  }
  for (auto i = a.maps.begin(), j = b.maps.begin(); i != a.maps.end(); ++i, ++j) {
    if (i->first != j->first || !(i->second == j->second)) return false;
  }
  for (auto i = a.diagrams.begin(), j = b.diagrams.begin(); i != a.diagrams.end(); ++i, ++j) {
    if (i->first != j->first) return false;
    const auto& ea = i->second.edges();
    const auto& eb = j->second.edges();
    if (ea.size() != eb.size()) return false;
    for (std::size_t k = 0; k < ea.size(); ++k) {
      if (ea[k].name() != eb[k].name() || !(ea[k] == eb[k])) return false;
    }
  }
  for (auto i = a.braidings.begin(), j = b.braidings.begin(); i != a.braidings.end(); ++i, ++j) {
    if (i->first != j->first || !(i->second.map() == j->second.map())) return false;
  }
  return true;
}

Workspace parse_workspace(std::string_view source) {
  Parser p(tokenize(source));
  p.parse();

  Workspace w;
  for (auto& d : p.sets) {
    std::vector<std::string> labels;
    for (const auto& e : d.elements) {
      for (const auto& prior : labels) {
        if (prior == e.text) {
          throw Error(Errc::DuplicateLabel, e.text + " in set " + d.name.text + " at " + where(e.at));
        }
      }
      labels.push_back(e.text);
    }
    if (!w.sets.emplace(d.name.text, FiniteSet::make(d.name.text, std::move(labels))).second) {
      throw Error(Errc::DuplicateName, "set " + d.name.text + " at " + where(d.name.at));
    }
  }

  auto lookup_set = [&](const NameRef& ref) -> const SetRef& {
    auto it = w.sets.find(ref.text);
    if (it == w.sets.end()) unknown(ref);
    return it->second;
  };

  for (auto& d : p.maps) {
    const SetRef& dom = lookup_set(d.dom);
    const SetRef& cod = lookup_set(d.cod);
    constexpr Index missing = static_cast<Index>(-1);
    std::vector<Index> table(dom->size(), missing);
    for (const auto& [from, to] : d.pairs) {
      Index x = label_index(dom, from);
      Index y = label_index(cod, to);
      if (table[x] != missing) {
        throw Error(Errc::DuplicateAssignment, d.name.text + ": " + from.text + " at " + where(from.at));
      }
      table[x] = y;
    }
    for (Index x = 0; x < table.size(); ++x) {
      if (table[x] == missing) throw Error(Errc::NotTotal, d.name.text + ": " + dom->label(x));
    }
    FinMap f(d.name.text, dom, cod, std::move(table));
    if (!w.maps.emplace(d.name.text, std::move(f)).second) {
      throw Error(Errc::DuplicateName, "map " + d.name.text + " at " + where(d.name.at));
    }
  }

  for (auto& d : p.diagrams) {
    std::vector<FinMap> edges;
    for (const auto& m : d.members) {
      auto it = w.maps.find(m.text);
      if (it == w.maps.end()) unknown(m);
      for (const auto& e : edges) {
        if (e.name() == m.text) {
          throw Error(Errc::DuplicateName, "edge " + m.text + " at " + where(m.at));
        }
      }
      edges.push_back(it->second);
    }
    if (w.diagrams.count(d.name.text)) {
      throw Error(Errc::DuplicateName, "diagram " + d.name.text + " at " + where(d.name.at));
    }
    w.diagrams.emplace(d.name.text, Diagram::from_edges(d.name.text, std::move(edges)));
  }

  for (auto& d : p.braidings) {
    const SetRef& left = lookup_set(d.left);
    const SetRef& right = lookup_set(d.right);
    const auto nl = static_cast<Index>(left->size());
    const auto nr = static_cast<Index>(right->size());
    constexpr Index missing = static_cast<Index>(-1);
    std::vector<Index> table(static_cast<std::size_t>(nl) * nr, missing);
    for (const auto& e : d.entries) {
      const Index slot = label_index(left, e.x) * nr + label_index(right, e.y);
      const Index value = label_index(right, e.out_y) * nl + label_index(left, e.out_x);
      if (table[slot] != missing) {
        throw Error(Errc::DuplicateAssignment,
                    d.name.text + ": (" + e.x.text + "," + e.y.text + ") at " + where(e.x.at));
      }
      table[slot] = value;
    }
    for (Index i = 0; i < table.size(); ++i) {
      if (table[i] == missing) {
        throw Error(Errc::NotTotal, d.name.text + ": (" + left->label(i / nr) + "," +
                                        right->label(i % nr) + ")");
      }
    }
    if (w.braidings.count(d.name.text)) {
      throw Error(Errc::DuplicateName, "braiding " + d.name.text + " at " + where(d.name.at));
    }
    w.braidings.emplace(d.name.text, Braiding::from_table(d.name.text, left, right, std::move(table)));
  }
  return w;
}

std::string render_workspace(const Workspace& w) {
  std::ostringstream out;
  bool first_group = true;
  auto group = [&] {
    if (!first_group) out << '\n';
    first_group = false;
  };

  if (!w.sets.empty()) {
    group();
    for (const auto& [name, s] : w.sets) {
      out << "set " << name << " = {";
      for (std::size_t i = 0; i < s->size(); ++i) out << (i ? ", " : " ") << s->labels()[i];
      out << (s->empty() ? "}" : " }") << '\n';
    }
  }
  for (const auto& [name, f] : w.maps) {
    group();
    out << "map " << name << " : " << f.dom()->id() << " -> " << f.cod()->id() << " {";
    if (f.size() == 0) {
      out << "}\n";
      continue;
    }
    out << '\n';
    for (Index x = 0; x < f.size(); ++x) {
      out << "  " << f.dom()->label(x) << " -> " << f.cod()->label(f(x))
          << (x + 1 < f.size() ? ",\n" : "\n");
    }
    out << "}\n";
  }
  if (!w.diagrams.empty()) {
    group();
    for (const auto& [name, d] : w.diagrams) {
      out << "diagram " << name << " {";
      for (std::size_t i = 0; i < d.edges().size(); ++i) {
        out << (i ? ", " : " ") << d.edges()[i].name();
      }
      out << (d.edges().empty() ? "}" : " }") << '\n';
    }
  }
  for (const auto& [name, b] : w.braidings) {
    group();
    const auto& l = b.left();
    const auto& r = b.right();
    out << "braiding " << name << " : " << l->id() << " * " << r->id() << " {";
    const std::size_t total = l->size() * r->size();
    if (total == 0) {
      out << "}\n";
      continue;
    }
    out << '\n';
    for (Index x = 0; x < l->size(); ++x) {
      for (Index y = 0; y < r->size(); ++y) {
        auto [u, v] = b.apply(x, y);
        const bool last = x + 1 == l->size() && y + 1 == r->size();
        out << "  (" << l->label(x) << "," << r->label(y) << ") -> (" << r->label(u) << ","
            << l->label(v) << ")" << (last ? "\n" : ",\n");
      }
    }
    out << "}\n";
  }
  return out.str();
}

}  // namespace regcat
