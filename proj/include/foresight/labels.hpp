#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>

namespace foresight {

/// The seven odd-one-out dimensions. Enum order is the canonical output order.
enum class CharacterLabel {
  color = 0,
  orientation,
  size,
  shape,
  focus,
  location,  // "position" is accepted as an alias on input
  pattern,
};

inline constexpr std::array<CharacterLabel, 7> kAllLabels = {
    CharacterLabel::color, CharacterLabel::orientation, CharacterLabel::size,
    CharacterLabel::shape, CharacterLabel::focus,       CharacterLabel::location,
    CharacterLabel::pattern};

inline std::string_view label_name(CharacterLabel l) {
  switch (l) {
    case CharacterLabel::color: return "color";
    case CharacterLabel::orientation: return "orientation";
    case CharacterLabel::size: return "size";
    case CharacterLabel::shape: return "shape";
    case CharacterLabel::focus: return "focus";
    case CharacterLabel::location: return "location";
    case CharacterLabel::pattern: return "pattern";
  }
  return "?";
}

/// Case-insensitive; canonicalizes "position" to location.
inline std::optional<CharacterLabel> parse_label(std::string_view s) {
  std::string lower;
  lower.reserve(s.size());
  for (char c : s) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "position") return CharacterLabel::location;
  for (CharacterLabel l : kAllLabels) {
    if (lower == label_name(l)) return l;
  }
  return std::nullopt;
}

using LabelSet = std::set<CharacterLabel>;

/// Set precision/recall/F1 over the 7-label vocabulary. Precision is 0 for an
/// empty prediction; F1 is 0 when p + r == 0. gt must be non-empty.
inline std::tuple<double, double, double> label_prf(const LabelSet& pred, const LabelSet& gt) {
  std::size_t hits = 0;
  for (CharacterLabel l : pred) {
    if (gt.count(l)) ++hits;
  }
  const double p = pred.empty() ? 0.0 : static_cast<double>(hits) / static_cast<double>(pred.size());
  const double r = gt.empty() ? 0.0 : static_cast<double>(hits) / static_cast<double>(gt.size());
  const double f1 = (p + r) > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
  return {p, r, f1};
}

}  // namespace foresight
