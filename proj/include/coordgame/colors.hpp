#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "coordgame/graph.hpp"

namespace coordgame {

using ColorId = std::int32_t;

// The palette M: color names interned to dense ids 0..m-1.
class Palette {
 public:
  Palette() = default;
  // Ids follow the order given; names must be distinct and non-empty.
  explicit Palette(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(ColorId id) const { return names_.at(id); }
  const std::vector<std::string>& names() const { return names_; }

  bool contains(std::string_view name) const;
  // Throws InvalidArgument for an unknown name.
  ColorId id(std::string_view name) const;

  friend bool operator==(const Palette& a, const Palette& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, ColorId> ids_;
};

// A: every node's non-empty color set A_i over the palette.
class ColorAssignment {
 public:
  // Sets are sorted and deduplicated. Throws InvalidArgument on an empty set
  // or a color id outside the palette.
  ColorAssignment(Palette palette, std::vector<std::vector<ColorId>> sets);

  // Palette is the sorted union of all names.
  static ColorAssignment from_names(
      const std::vector<std::vector<std::string>>& sets);

  int node_count() const { return static_cast<int>(sets_.size()); }
  const Palette& palette() const { return palette_; }

  // A_i, ascending by color id.
  std::span<const ColorId> colors_of(NodeId i) const { return sets_.at(i); }
  bool allows(NodeId i, ColorId x) const;
  int max_set_size() const;

  // V_x = { i : x in A_i }, ascending.
  std::vector<NodeId> slice(ColorId x) const;

  // Number of palette colors that occur in some A_i.
  int colors_in_use() const;

  friend bool operator==(const ColorAssignment&,
                         const ColorAssignment&) = default;

 private:
  Palette palette_;
  std::vector<std::vector<ColorId>> sets_;
};

}  // namespace coordgame
