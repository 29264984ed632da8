#include "yhc/label_text.hpp"

#include <json.hpp>

namespace yhc {

std::string partition_to_text(const Partition& p) {
  std::string s = "[";
  for (int i = 0; i < p.length(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

std::string label_to_text(const CharLabel& label) {
  std::string s = "[";
  for (std::size_t i = 0; i < label.blocks.size(); ++i) s += (i ? "," : "") + partition_to_text(label.blocks[i]);
  s += "]";
  if (label.split) s += *label.split == SplitSign::Plus ? ":+" : ":-";
  return s;
}

CharLabel parse_label(TypeTag type, int d, std::string_view text) {
  CharLabel label;
  label.type = type;
  label.d = d;
  std::string body(text);
  if (body.size() >= 2 && body[body.size() - 2] == ':') {
    const char c = body.back();
    if (c == '+') label.split = SplitSign::Plus;
    else if (c == '-') label.split = SplitSign::Minus;
    else throw InvalidArgument("bad split suffix in label '" + body + "'");
    body.resize(body.size() - 2);
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument("label is not a JSON array of arrays: '" + body + "'");
  }
  if (!j.is_array()) throw InvalidArgument("label must be a JSON array of arrays");
  for (const auto& part : j) {
    if (!part.is_array()) throw InvalidArgument("label must be a JSON array of arrays");
    std::vector<int> parts;
    for (const auto& x : part) {
      if (!x.is_number_integer()) throw InvalidArgument("partition parts must be integers");
      parts.push_back(x.get<int>());
    }
    label.blocks.emplace_back(std::move(parts));
  }
  validate(label);
  return label;
}

}  // namespace yhc
