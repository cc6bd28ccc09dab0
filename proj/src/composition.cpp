#include "immaculate/composition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace immaculate {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::parse(const std::string& text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("malformed composition: " + text);
  const std::string body = text.substr(1, text.size() - 2);
  if (body.empty()) return Composition{};
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    if (comma == std::string::npos) comma = body.size();
    const char* first = body.data() + pos;
    const char* last = body.data() + comma;
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || value < 1)
      throw std::invalid_argument("malformed composition: " + text);
    parts.push_back(value);
    pos = comma + 1;
    if (comma == body.size()) break;
  }
  return Composition(std::move(parts));
}

std::string Composition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::weight() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw std::invalid_argument("compositions_of: negative n");
  std::vector<Composition> out;
  std::vector<int> prefix;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(Composition(prefix));
      return;
    }
    for (int first = 1; first <= remaining; ++first) {
      prefix.push_back(first);
      self(self, remaining - first);
      prefix.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

DescentSet to_descent_set(const Composition& alpha) {
  DescentSet s;
  s.n = alpha.weight();
  int sum = 0;
  for (int i = 0; i + 1 < alpha.length(); ++i) {
    sum += alpha.parts()[i];
    s.elements.push_back(sum);
  }
  return s;
}

Composition from_descent_set(const DescentSet& descents) {
  if (descents.n < 0) throw std::invalid_argument("descent set: negative n");
  int prev = 0;
  std::vector<int> parts;
  for (int e : descents.elements) {
    if (e <= prev || e >= descents.n)
      throw std::invalid_argument("invalid descent set element");
    parts.push_back(e - prev);
    prev = e;
  }
  if (descents.n > prev) parts.push_back(descents.n - prev);
  return Composition(std::move(parts));
}

bool refines(const Composition& alpha, const Composition& beta) {
  if (alpha.weight() != beta.weight())
    throw std::invalid_argument("refines: compositions of different weights are incomparable");
  const auto sa = to_descent_set(alpha).elements;
  const auto sb = to_descent_set(beta).elements;
  return std::includes(sa.begin(), sa.end(), sb.begin(), sb.end());
}

Partition sort_to_partition(const Composition& alpha) {
  std::vector<int> parts = alpha.parts();
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

}  // namespace immaculate

std::size_t std::hash<immaculate::Composition>::operator()(
    const immaculate::Composition& alpha) const noexcept {
  // FNV-1a over the parts.
  std::size_t h = 1469598103934665603ull;
  for (int p : alpha.parts()) {
    h ^= static_cast<std::size_t>(p);
    h *= 1099511628211ull;
  }
  return h;
}
