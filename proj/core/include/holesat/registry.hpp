#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace holesat {

// Semantic variable families. Point indices are 0-based in memory and
// 1-based in their text form, e.g. O(1,2,3) or E(1,2;3,4).
enum class VarKind : std::uint8_t {
  Orientation,  // O(a,b,c): triple (a,b,c) positively oriented
  Bounding,     // E(a,b;c,d): segment ab bounds conv{a,b,c,d}
  Gon,          // Gk(X): X is a k-gon (k = 4 feeds the hole definitions)
  Inside,       // I(i;a,b,c): i inside triangle abc
  Hole,         // Hk(X): X is a k-hole (k = 3 is the 3-hole variable)
  Left,         // Lk(a,b): a k-hole lies left of a->b (see encoder for variants)
  Right,        // Rk(a,b)
  Counter,      // C(i,j): at least j of the first i counted variables are true
};

struct VarTag {
  VarKind kind = VarKind::Orientation;
  std::uint8_t size = 0;              // k for Gon/Hole/Left/Right
  std::uint8_t arity = 0;             // number of used entries in idx
  std::array<std::uint32_t, 6> idx{};  // point indices (or counter coordinates)

  static VarTag orientation(int a, int b, int c);
  static VarTag bounding(int a, int b, int c, int d);
  static VarTag gon(std::span<const int> x);
  static VarTag inside(int i, int a, int b, int c);
  static VarTag hole(std::span<const int> x);
  static VarTag left(int k, int a, int b);
  static VarTag right(int k, int a, int b);
  static VarTag counter(int i, int j);

  [[nodiscard]] std::uint64_t key() const;
  [[nodiscard]] std::string to_string() const;
  static VarTag parse(std::string_view text);

  friend bool operator==(const VarTag&, const VarTag&) = default;
};

/// Bijection between semantic tags and DIMACS variable ids (1-based).
class VarRegistry {
 public:
  int add(const VarTag& tag);
  [[nodiscard]] int id(const VarTag& tag) const;
  [[nodiscard]] std::optional<int> find(const VarTag& tag) const;
  [[nodiscard]] const VarTag& tag(int id) const { return tags_.at(static_cast<std::size_t>(id) - 1); }
  [[nodiscard]] int size() const { return static_cast<int>(tags_.size()); }
  [[nodiscard]] std::size_t count(VarKind kind) const;

  /// Contiguous id ranges per family, in registration order: (kind, first id, count).
  struct Block {
    VarKind kind;
    int first;
    int count;
  };
  [[nodiscard]] std::vector<Block> layout() const;

  void write(std::ostream& out) const;
  static VarRegistry read(std::istream& in);
  void save(const std::filesystem::path& path) const;
  static VarRegistry load(const std::filesystem::path& path);

  friend bool operator==(const VarRegistry& a, const VarRegistry& b) { return a.tags_ == b.tags_; }

 private:
  std::vector<VarTag> tags_;
  std::unordered_map<std::uint64_t, int> ids_;
};

std::string_view kind_name(VarKind kind);

}  // namespace holesat
