#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "tautilt/error.hpp"

namespace tautilt {

/// Permutation of {0..n-1}; externally written 1-indexed in cycle notation.
/// Products compose right to left: (a * b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }
  explicit Permutation(std::vector<std::uint16_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (auto x : img_) {
      if (x >= img_.size() || seen[x]) throw InvalidArgument("images do not form a permutation");
      seen[x] = true;
    }
  }

  static Permutation identity(std::size_t n) { return Permutation(n); }

  std::size_t degree() const { return img_.size(); }
  std::size_t operator()(std::size_t i) const { return img_[i]; }
  const std::vector<std::uint16_t>& images() const { return img_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw InvalidArgument("permutation degree mismatch");
    Permutation r;
    r.img_.resize(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) r.img_[i] = a.img_[b.img_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.img_.resize(degree());
    for (std::size_t i = 0; i < degree(); ++i) r.img_[img_[i]] = static_cast<std::uint16_t>(i);
    return r;
  }

  std::vector<std::vector<std::size_t>> cycles() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(degree(), false);
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::vector<std::size_t> c;
      for (std::size_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        c.push_back(j);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  /// Element order (lcm of cycle lengths).
  std::uint64_t order() const {
    std::uint64_t o = 1;
    for (const auto& c : cycles()) o = std::lcm(o, static_cast<std::uint64_t>(c.size()));
    return o;
  }

  int sign() const {
    std::size_t even_cycles = 0;
    for (const auto& c : cycles())
      if (c.size() % 2 == 0) ++even_cycles;
    return even_cycles % 2 == 0 ? 1 : -1;
  }

  /// "(1 2 3)(4 5)", identity "()".
  std::string to_cycle_string() const {
    std::string s;
    for (const auto& c : cycles()) {
      if (c.size() < 2) continue;
      s += '(';
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) s += ' ';
        s += std::to_string(c[k] + 1);
      }
      s += ')';
    }
    return s.empty() ? "()" : s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint16_t> img_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p.images()) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

/// Parses a product of cycles such as "(1 2 3)(4 5)" on {1..n}. Cycles are
/// composed right to left; whitespace and commas inside cycles are ignored
/// apart from separating points.
inline Permutation parse_cycles(std::string_view text, std::size_t n) {
  Permutation result(n);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  std::vector<Permutation> factors;
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation string; write the identity as ()");
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<std::size_t> pts;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size()) throw ParseError("unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("unexpected character in cycle: " + std::string(text));
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        if (v > 65535) throw ParseError("point out of range");
        ++i;
      }
      if (v < 1 || v > n) throw ParseError("point " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (std::find(pts.begin(), pts.end(), v - 1) != pts.end()) throw ParseError("repeated point in cycle");
      pts.push_back(v - 1);
    }
    std::vector<std::uint16_t> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (std::size_t k = 0; k < pts.size(); ++k) img[pts[k]] = static_cast<std::uint16_t>(pts[(k + 1) % pts.size()]);
    factors.emplace_back(std::move(img));
  }
  for (auto it = factors.begin(); it != factors.end(); ++it) result = result * *it;
  return result;
}

/// Comma-free list of generators separated by ';' or ',' between cycle
/// groups, e.g. "(1 2), (1 2 3)". An empty string gives no generators.
inline std::vector<Permutation> parse_generators(std::string_view text, std::size_t n) {
  std::vector<Permutation> gens;
  std::string cur;
  int depth = 0;
  auto flush = [&] {
    bool blank = std::all_of(cur.begin(), cur.end(), [](unsigned char c) { return std::isspace(c); });
    if (!blank) gens.push_back(parse_cycles(cur, n));
    cur.clear();
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses: " + std::string(text));
    if (depth == 0 && (c == ',' || c == ';')) {
      flush();
      continue;
    }
    cur += c;
  }
  if (depth != 0) throw ParseError("unbalanced parentheses: " + std::string(text));
  flush();
  return gens;
}

}  // namespace tautilt
