#include "graphmonads/label.hpp"

#include <algorithm>
#include <cctype>
#include <variant>

#include "graphmonads/errors.hpp"

namespace graphmonads {

namespace {

bool is_reserved(char c) {
  return c == '{' || c == '}' || c == '(' || c == ')' || c == ',' || c == '~' || c == '#';
}

bool is_atom_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && !is_reserved(c);
}

}  // namespace

struct VertexLabel::Node {
  struct AtomData {
    std::string token;
  };
  struct TaggedData {
    VertexLabel base;
    int bit;
  };
  struct SetData {
    std::vector<VertexLabel> elems;  // canonically sorted, distinct, size 1 or 2
  };
  struct PairData {
    VertexLabel left;
    VertexLabel right;
  };

  std::variant<AtomData, TaggedData, SetData, PairData> data;
};

VertexLabel VertexLabel::atom(std::string token) {
  if (token.empty()) {
    throw InvalidLabel("atom token must be nonempty");
  }
  for (char c : token) {
    if (!is_atom_char(c)) {
      throw InvalidLabel("atom token '" + token + "' contains whitespace or a reserved character");
    }
  }
  auto node = std::make_shared<Node>();
  node->data = Node::AtomData{std::move(token)};
  return VertexLabel(std::move(node));
}

VertexLabel VertexLabel::tagged(const VertexLabel& base, int bit) {
  if (bit != 0 && bit != 1) {
    throw InvalidLabel("tag bit must be 0 or 1, got " + std::to_string(bit));
  }
  auto node = std::make_shared<Node>();
  node->data = Node::TaggedData{base, bit};
  return VertexLabel(std::move(node));
}

VertexLabel VertexLabel::set(std::vector<VertexLabel> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty() || elems.size() > 2) {
    throw InvalidLabel("set label must have 1 or 2 distinct elements, got " +
                       std::to_string(elems.size()));
  }
  auto node = std::make_shared<Node>();
  node->data = Node::SetData{std::move(elems)};
  return VertexLabel(std::move(node));
}

VertexLabel VertexLabel::pair(const VertexLabel& left, const VertexLabel& right) {
  auto node = std::make_shared<Node>();
  node->data = Node::PairData{left, right};
  return VertexLabel(std::move(node));
}

VertexLabel::Kind VertexLabel::kind() const {
  switch (node_->data.index()) {
    case 0: return Kind::Atom;
    case 1: return Kind::Tagged;
    case 2: return Kind::Set;
    default: return Kind::Pair;
  }
}

const std::string& VertexLabel::token() const {
  return std::get<Node::AtomData>(node_->data).token;
}

const VertexLabel& VertexLabel::base() const {
  return std::get<Node::TaggedData>(node_->data).base;
}

int VertexLabel::bit() const {
  return std::get<Node::TaggedData>(node_->data).bit;
}

const std::vector<VertexLabel>& VertexLabel::elems() const {
  return std::get<Node::SetData>(node_->data).elems;
}

const VertexLabel& VertexLabel::left() const {
  return std::get<Node::PairData>(node_->data).left;
}

const VertexLabel& VertexLabel::right() const {
  return std::get<Node::PairData>(node_->data).right;
}

std::strong_ordering operator<=>(const VertexLabel& a, const VertexLabel& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  auto ka = static_cast<int>(a.kind());
  auto kb = static_cast<int>(b.kind());
  if (auto c = ka <=> kb; c != 0) return c;
  switch (a.kind()) {
    case VertexLabel::Kind::Atom:
      return a.token().compare(b.token()) <=> 0;
    case VertexLabel::Kind::Tagged: {
      if (auto c = a.base() <=> b.base(); c != 0) return c;
      return a.bit() <=> b.bit();
    }
    case VertexLabel::Kind::Set: {
      const auto& ea = a.elems();
      const auto& eb = b.elems();
      for (std::size_t i = 0; i < ea.size() && i < eb.size(); ++i) {
        if (auto c = ea[i] <=> eb[i]; c != 0) return c;
      }
      return ea.size() <=> eb.size();
    }
    case VertexLabel::Kind::Pair: {
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
    }
  }
  return std::strong_ordering::equal;  // unreachable
}

bool operator==(const VertexLabel& a, const VertexLabel& b) {
  return (a <=> b) == 0;
}

std::string VertexLabel::str() const {
  switch (kind()) {
    case Kind::Atom:
      return token();
    case Kind::Tagged:
      return base().str() + "~" + (bit() ? "1" : "0");
    case Kind::Set: {
      std::string out = "{";
      const auto& es = elems();
      for (std::size_t i = 0; i < es.size(); ++i) {
        if (i) out += ',';
        out += es[i].str();
      }
      out += '}';
      return out;
    }
    case Kind::Pair:
      return "(" + left().str() + "," + right().str() + ")";
  }
  return {};  // unreachable
}

namespace {

struct LabelParser {
  std::string_view text;
  std::size_t pos = 0;

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  void expect(char c) {
    if (peek() != c) {
      throw InvalidLabel("expected '" + std::string(1, c) + "' at offset " +
                         std::to_string(pos) + " in label '" + std::string(text) + "'");
    }
    ++pos;
  }

  VertexLabel parse_label() {
    VertexLabel lab = parse_primary();
    while (peek() == '~') {
      ++pos;
      char b = peek();
      if (b != '0' && b != '1') {
        throw InvalidLabel("tag bit must be 0 or 1 in label '" + std::string(text) + "'");
      }
      ++pos;
      lab = VertexLabel::tagged(lab, b - '0');
    }
    return lab;
  }

  VertexLabel parse_primary() {
    if (peek() == '(') {
      ++pos;
      VertexLabel l = parse_label();
      expect(',');
      VertexLabel r = parse_label();
      expect(')');
      return VertexLabel::pair(l, r);
    }
    if (peek() == '{') {
      ++pos;
      std::vector<VertexLabel> elems;
      elems.push_back(parse_label());
      if (peek() == ',') {
        ++pos;
        elems.push_back(parse_label());
      }
      expect('}');
      return VertexLabel::set(std::move(elems));
    }
    std::size_t start = pos;
    while (pos < text.size() && is_atom_char(text[pos])) ++pos;
    if (pos == start) {
      throw InvalidLabel("expected a label at offset " + std::to_string(pos) + " in '" +
                         std::string(text) + "'");
    }
    return VertexLabel::atom(std::string(text.substr(start, pos - start)));
  }
};

}  // namespace

VertexLabel VertexLabel::parse(std::string_view text) {
  LabelParser p{text};
  VertexLabel lab = p.parse_label();
  if (p.pos != text.size()) {
    throw InvalidLabel("trailing characters after label in '" + std::string(text) + "'");
  }
  return lab;
}

}  // namespace graphmonads
