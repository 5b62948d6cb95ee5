#pragma once

#include "foresight/bbox.hpp"
#include "foresight/labels.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace foresight {

/// Content of <draft_answer> and <final_answer>: 1..7 distinct labels plus a box.
struct AnswerPayload {
  LabelSet characters;
  BoundingBox bbox;

  bool operator==(const AnswerPayload& o) const = default;
};

/// Canonical wire form: {"characters":["color",...],"bbox":[x1,y1,x2,y2]},
/// characters in canonical label order, no whitespace.
inline std::string answer_to_json(const AnswerPayload& a) {
  std::string out = "{\"characters\":[";
  bool first = true;
  for (CharacterLabel l : a.characters) {
    if (!first) out += ',';
    first = false;
    out += '"';
    out += label_name(l);
    out += '"';
  }
  out += "],\"bbox\":[";
  out += std::to_string(a.bbox.x1) + "," + std::to_string(a.bbox.y1) + "," +
         std::to_string(a.bbox.x2) + "," + std::to_string(a.bbox.y2);
  out += "]}";
  return out;
}

/// Lenient parse of the wire form: key order free, labels case-insensitive,
/// duplicates collapse after canonicalization. Returns nullopt when the text is
/// not valid JSON, a label is unknown, the set is empty, or the box is invalid.
inline std::optional<AnswerPayload> answer_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  if (!j.contains("characters") || !j.contains("bbox")) return std::nullopt;
  const auto& chars = j["characters"];
  const auto& box = j["bbox"];
  if (!chars.is_array() || chars.empty() || !box.is_array() || box.size() != 4) return std::nullopt;

  AnswerPayload out;
  for (const auto& c : chars) {
    if (!c.is_string()) return std::nullopt;
    auto l = parse_label(c.get<std::string>());
    if (!l) return std::nullopt;
    out.characters.insert(*l);
  }
  int v[4];
  for (int i = 0; i < 4; ++i) {
    if (!box[i].is_number_integer()) return std::nullopt;
    v[i] = box[i].get<int>();
  }
  if (v[0] >= v[2] || v[1] >= v[3]) return std::nullopt;
  out.bbox = BoundingBox(v[0], v[1], v[2], v[3]);
  return out;
}

}  // namespace foresight
