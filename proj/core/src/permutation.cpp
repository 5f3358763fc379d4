#include "charprod/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "charprod/error.hpp"

namespace charprod {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || hit[p]) {
      throw std::invalid_argument("permutation images are not a bijection");
    }
    hit[p] = true;
  }
}

Permutation Permutation::from_cycles(
    std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Permutation result(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      if (from >= degree) throw std::invalid_argument("cycle point out of range");
      if (used[from]) throw std::invalid_argument("cycles are not disjoint");
      used[from] = true;
      result.images_[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

Permutation Permutation::pow(std::int64_t k) const {
  auto n = static_cast<std::int64_t>(order());
  k %= n;
  if (k < 0) k += n;
  Permutation result(images_.size());
  Permutation base = *this;
  auto e = static_cast<std::uint64_t>(k);
  while (e != 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < images_.size()) throw std::invalid_argument("cannot shrink a permutation");
  Permutation result(degree);
  std::copy(images_.begin(), images_.end(), result.images_.begin());
  return result;
}

Permutation Permutation::shifted(std::size_t offset, std::size_t degree) const {
  if (offset + images_.size() > degree) throw std::invalid_argument("shift out of range");
  Permutation result(degree);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    result.images_[offset + i] = static_cast<Point>(offset + images_[i]);
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch("permutation degrees differ");
  Permutation r;
  r.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i) r.images_[i] = b.images_[a.images_[i]];
  return r;
}

namespace {

struct CycleText {
  std::vector<std::vector<Point>> cycles;
  Point max_point = 0;
};

CycleText scan_cycles(std::string_view text, std::size_t line_no) {
  CycleText out;
  std::size_t i = 0;
  auto fail = [&](const std::string& what, std::size_t col) {
    throw ParseError(what, line_no, col + 1);
  };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) fail("expected '('", i);
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') fail("expected '('", i);
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip_ws();
      if (i == text.size()) fail("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected a point number", i);
      std::size_t start = i;
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > 1'000'000) fail("point number too large", start);
        ++i;
      }
      if (value == 0) fail("points are 1-based", start);
      auto p = static_cast<Point>(value - 1);
      if (std::find(cycle.begin(), cycle.end(), p) != cycle.end()) {
        fail("point repeated within a cycle", start);
      }
      cycle.push_back(p);
      out.max_point = std::max(out.max_point, static_cast<Point>(value));
    }
    if (cycle.size() > 1) out.cycles.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace

Permutation parse_permutation(std::string_view text, std::size_t line_no,
                              std::optional<std::size_t> degree) {
  CycleText parsed = scan_cycles(text, line_no);
  std::size_t n = degree.value_or(std::max<std::size_t>(parsed.max_point, 1));
  if (parsed.max_point > n) {
    throw ParseError("point exceeds declared degree", line_no, 1);
  }
  std::vector<bool> used(n, false);
  for (const auto& c : parsed.cycles) {
    for (Point p : c) {
      if (used[p]) throw ParseError("cycles are not disjoint", line_no, 1);
      used[p] = true;
    }
  }
  return Permutation::from_cycles(n, parsed.cycles);
}

GeneratorList parse_generators(std::string_view text) {
  std::optional<std::size_t> declared;
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    std::string_view body = line.substr(first);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
    if (body.starts_with("degree")) {
      std::size_t eq = body.find('=');
      if (eq == std::string_view::npos) throw ParseError("expected 'degree=N'", line_no, first + 1);
      std::string_view num = body.substr(eq + 1);
      while (!num.empty() && num.front() == ' ') num.remove_prefix(1);
      if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError("degree must be a positive integer", line_no, first + eq + 2);
      }
      if (num.size() > 7) throw ParseError("degree too large", line_no, first + eq + 2);
      declared = std::stoul(std::string(num));
      if (*declared == 0) throw ParseError("degree must be a positive integer", line_no, first + eq + 2);
    } else {
      lines.emplace_back(line_no, line);
    }
    if (end == text.size()) break;
  }

  GeneratorList out;
  std::vector<CycleText> scanned;
  std::size_t max_point = 1;
  for (auto [no, line] : lines) {
    scanned.push_back(scan_cycles(line, no));
    max_point = std::max<std::size_t>(max_point, scanned.back().max_point);
  }
  if (declared && max_point > *declared && !lines.empty()) {
    throw ParseError("point exceeds declared degree", lines.front().first, 1);
  }
  out.degree = declared.value_or(max_point);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    out.generators.push_back(parse_permutation(lines[i].second, lines[i].first, out.degree));
  }
  return out;
}

}  // namespace charprod

std::size_t std::hash<charprod::Permutation>::operator()(
    const charprod::Permutation& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (charprod::Point x : p.images()) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return h;
}
