// Copyright 2026 The gbent-cayley Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gbf/expression.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <memory>
#include <sstream>
#include <vector>

namespace gbf {
namespace {

// Expression tree evaluated at every point of V_n.
struct Node {
  enum class Kind { Constant, Variable, Add, Sub, Mul, Xor, Neg } kind;
  unsigned value = 0;  // constant residue or 1-based variable index
  std::unique_ptr<Node> lhs, rhs;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make(Node::Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr, unsigned value = 0) {
  auto node = std::make_unique<Node>();
  node->kind = kind;
  node->value = value;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

class Parser {
 public:
  Parser(std::string_view src, int n, unsigned q) : src_(src), n_(n), q_(q) {}

  NodePtr parse() {
    skip_ws();
    if (pos_ == src_.size()) error("empty expression");
    auto root = sum();
    skip_ws();
    if (pos_ != src_.size()) error(std::string("unexpected character '") + src_[pos_] + "'");
    return root;
  }

 private:
  [[noreturn]] void error(const std::string& message) const {
    fail(ErrorCode::Parse, "syntax error at position " + std::to_string(pos_) + ": " + message);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool at_xor() const { return src_.substr(pos_, 3) == "(+)"; }

  NodePtr sum() {
    auto lhs = xor_term();
    for (;;) {
      skip_ws();
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
        const auto kind = src_[pos_] == '+' ? Node::Kind::Add : Node::Kind::Sub;
        ++pos_;
        lhs = make(kind, std::move(lhs), xor_term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr xor_term() {
    auto lhs = product();
    for (;;) {
      skip_ws();
      if (!at_xor()) return lhs;
      pos_ += 3;
      lhs = make(Node::Kind::Xor, std::move(lhs), product());
    }
  }

  bool starts_atom() const {
    if (pos_ >= src_.size()) return false;
    const char c = src_[pos_];
    if (c == '(') return !at_xor();
    return c == 'x' || c == 'X' || std::isdigit(static_cast<unsigned char>(c));
  }

  NodePtr product() {
    auto lhs = unary();
    for (;;) {
      skip_ws();
      if (pos_ < src_.size() && src_[pos_] == '*') {
        ++pos_;
        lhs = make(Node::Kind::Mul, std::move(lhs), unary());
      } else if (starts_atom()) {
        lhs = make(Node::Kind::Mul, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '-') {
      ++pos_;
      return make(Node::Kind::Neg, unary());
    }
    return atom();
  }

  unsigned integer() {
    const auto start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer");
    unsigned long long value = 0;
    const auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (ec != std::errc{}) {
      pos_ = start;
      error("integer literal out of range");
    }
    (void)ptr;
    return static_cast<unsigned>(value % q_);
  }

  NodePtr atom() {
    skip_ws();
    if (pos_ >= src_.size()) error("unexpected end of expression");
    const char c = src_[pos_];
    if (c == '(') {
      if (at_xor()) error("XOR operator '(+)' without a left operand");
      ++pos_;
      auto inner = sum();
      skip_ws();
      if (pos_ >= src_.size() || src_[pos_] != ')') error("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x' || c == 'X') {
      const auto start = pos_;
      ++pos_;
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        error("expected a variable index after 'x'");
      const auto digits = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      unsigned long long index = 0;
      std::from_chars(src_.data() + digits, src_.data() + pos_, index);
      if (index < 1 || index > static_cast<unsigned long long>(n_)) {
        fail(ErrorCode::Parse, "variable x" + std::string(src_.substr(digits, pos_ - digits)) + " at position " +
                                   std::to_string(start) + " is out of range for n=" + std::to_string(n_));
      }
      return make(Node::Kind::Variable, nullptr, nullptr, static_cast<unsigned>(index));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return make(Node::Kind::Constant, nullptr, nullptr, integer());
    error(std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int n_;
  unsigned q_;
};

unsigned eval(const Node& node, Vertex x, int n, unsigned q) {
  const unsigned mask = q - 1;
  switch (node.kind) {
    case Node::Kind::Constant:
      return node.value;
    case Node::Kind::Variable:
      return (x >> (n - static_cast<int>(node.value))) & 1u;
    case Node::Kind::Add:
      return (eval(*node.lhs, x, n, q) + eval(*node.rhs, x, n, q)) & mask;
    case Node::Kind::Sub:
      return (eval(*node.lhs, x, n, q) + q - eval(*node.rhs, x, n, q)) & mask;
    case Node::Kind::Mul:
      return (eval(*node.lhs, x, n, q) * eval(*node.rhs, x, n, q)) & mask;
    case Node::Kind::Xor:
      return (eval(*node.lhs, x, n, q) ^ eval(*node.rhs, x, n, q)) & mask;
    case Node::Kind::Neg:
      return (q - eval(*node.lhs, x, n, q)) & mask;
  }
  fail(ErrorCode::Internal, "corrupt expression tree");
}

}  // namespace

Gbf parse_expression(std::string_view src, int n, int k, const Limits& limits) {
  check_dimensions(n, k, limits);
  const unsigned q = 1u << k;
  Parser parser(src, n, q);
  const auto root = parser.parse();
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  for (Vertex x = 0; x < table.size(); ++x) table[x] = static_cast<std::uint8_t>(eval(*root, x, n, q));
  return Gbf(n, k, std::move(table), limits);
}

// ---------------------------------------------------------------------------

namespace {

std::string strip_comments(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_comment = false;
  for (char c : text) {
    if (c == '#') in_comment = true;
    if (c == '\n') in_comment = false;
    if (!in_comment) out.push_back(c);
  }
  return out;
}

int header_field(const std::string& token, const char* name) {
  const std::string prefix = std::string(name) + "=";
  if (token.rfind(prefix, 0) != 0) fail(ErrorCode::Parse, "expected '" + prefix + "<int>' in .gbf header, got '" + token + "'");
  int value = 0;
  const char* begin = token.data() + prefix.size();
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || begin == end) fail(ErrorCode::Parse, "malformed .gbf header field '" + token + "'");
  return value;
}

}  // namespace

Gbf parse_gbf(std::string_view text, const Limits& limits) {
  std::istringstream in(strip_comments(text));
  std::string first, second;
  if (!(in >> first >> second)) fail(ErrorCode::Parse, ".gbf input is missing the 'n=<int> k=<int>' header");
  const int n = header_field(first, "n");
  const int k = header_field(second, "k");
  check_dimensions(n, k, limits);
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> table;
  table.reserve(size);
  std::string token;
  while (in >> token) {
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      fail(ErrorCode::Parse, "malformed truth-table value '" + token + "' at position " + std::to_string(table.size()));
    if (value >= (1u << k))
      fail(ErrorCode::Parse, "truth-table value " + token + " at position " + std::to_string(table.size()) +
                                 " is not in Z_" + std::to_string(1u << k));
    table.push_back(static_cast<std::uint8_t>(value));
  }
  if (table.size() != size)
    fail(ErrorCode::Parse, ".gbf table has " + std::to_string(table.size()) + " values, expected " + std::to_string(size));
  return Gbf(n, k, std::move(table), limits);
}

std::string format_gbf(const Gbf& f) {
  return "n=" + std::to_string(f.n()) + " k=" + std::to_string(f.k()) + "\n" + table_string(f) + "\n";
}

Gbf load_gbf(const std::string& path, const Limits& limits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_gbf(buffer.str(), limits);
}

void save_gbf(const Gbf& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::Io, "cannot write '" + path + "'");
  out << format_gbf(f);
  if (!out) fail(ErrorCode::Io, "failed writing '" + path + "'");
}

}  // namespace gbf
