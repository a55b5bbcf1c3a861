#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <vector>

namespace skewbrace {

// Subset of a carrier {0, ..., ambient-1}, kept sorted and duplicate-free so
// equal sets compare equal and set lists have one canonical order.
class ElementSet {
public:
  ElementSet() = default;
  ElementSet(std::vector<uint16_t> elements, int ambient)
      : elements_(std::move(elements)), ambient_(ambient) {
    canonicalize();
  }

  static ElementSet single(int x, int ambient) {
    return ElementSet({static_cast<uint16_t>(x)}, ambient);
  }
  static ElementSet zero(int ambient) { return single(0, ambient); }
  static ElementSet whole(int ambient) {
    std::vector<uint16_t> all(ambient);
    for (int i = 0; i < ambient; ++i) all[i] = static_cast<uint16_t>(i);
    return ElementSet(std::move(all), ambient);
  }

  const std::vector<uint16_t>& elements() const noexcept { return elements_; }
  int ambient() const noexcept { return ambient_; }
  int size() const noexcept { return static_cast<int>(elements_.size()); }
  bool empty() const noexcept { return elements_.empty(); }

  bool contains(int x) const {
    return std::binary_search(elements_.begin(), elements_.end(),
                              static_cast<uint16_t>(x));
  }
  bool is_zero() const { return size() == 1 && elements_[0] == 0; }
  bool is_whole() const { return size() == ambient_; }

  bool subset_of(const ElementSet& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(),
                         elements_.begin(), elements_.end());
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet& a, const ElementSet& b) {
    if (auto c = a.elements_.size() <=> b.elements_.size(); c != 0) return c;
    return a.elements_ <=> b.elements_;
  }

  // Membership mask indexed by carrier element.
  std::vector<char> mask() const {
    std::vector<char> m(ambient_, 0);
    for (uint16_t x : elements_) m[x] = 1;
    return m;
  }
  static ElementSet from_mask(const std::vector<char>& m) {
    std::vector<uint16_t> xs;
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i]) xs.push_back(static_cast<uint16_t>(i));
    return ElementSet(std::move(xs), static_cast<int>(m.size()));
  }

private:
  void canonicalize() {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()),
                    elements_.end());
  }

  std::vector<uint16_t> elements_;
  int ambient_ = 0;
};

}  // namespace skewbrace
