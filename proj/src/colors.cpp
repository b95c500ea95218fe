#include "coordgame/colors.hpp"

#include <algorithm>

#include "coordgame/error.hpp"

namespace coordgame {

Palette::Palette(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InvalidArgument("empty color name");
    auto [it, inserted] = ids_.emplace(names_[i], static_cast<ColorId>(i));
    if (!inserted) throw InvalidArgument("duplicate color '" + names_[i] + "'");
  }
}

bool Palette::contains(std::string_view name) const {
  return ids_.count(std::string(name)) != 0;
}

ColorId Palette::id(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) {
    throw InvalidArgument("unknown color '" + std::string(name) + "'");
  }
  return it->second;
}

ColorAssignment::ColorAssignment(Palette palette,
                                 std::vector<std::vector<ColorId>> sets)
    : palette_(std::move(palette)), sets_(std::move(sets)) {
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    auto& set = sets_[i];
    if (set.empty()) {
      throw InvalidArgument("node " + std::to_string(i) + " has an empty color set");
    }
    for (ColorId x : set) {
      if (x < 0 || x >= palette_.size()) {
        throw InvalidArgument("node " + std::to_string(i) +
                              " uses a color outside the palette");
      }
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
  }
}

ColorAssignment ColorAssignment::from_names(
    const std::vector<std::vector<std::string>>& sets) {
  std::vector<std::string> names;
  for (const auto& set : sets) names.insert(names.end(), set.begin(), set.end());
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  Palette palette(std::move(names));
  std::vector<std::vector<ColorId>> ids;
  ids.reserve(sets.size());
  for (const auto& set : sets) {
    auto& row = ids.emplace_back();
    for (const auto& name : set) row.push_back(palette.id(name));
  }
  return ColorAssignment(std::move(palette), std::move(ids));
}

bool ColorAssignment::allows(NodeId i, ColorId x) const {
  const auto& set = sets_.at(i);
  return std::binary_search(set.begin(), set.end(), x);
}

int ColorAssignment::max_set_size() const {
  std::size_t best = 0;
  for (const auto& set : sets_) best = std::max(best, set.size());
  return static_cast<int>(best);
}

std::vector<NodeId> ColorAssignment::slice(ColorId x) const {
  std::vector<NodeId> out;
  for (NodeId i = 0; i < node_count(); ++i) {
    if (allows(i, x)) out.push_back(i);
  }
  return out;
}

int ColorAssignment::colors_in_use() const {
  std::vector<char> used(palette_.size(), 0);
  for (const auto& set : sets_) {
    for (ColorId x : set) used[x] = 1;
  }
  return static_cast<int>(std::count(used.begin(), used.end(), 1));
}

}  // namespace coordgame
