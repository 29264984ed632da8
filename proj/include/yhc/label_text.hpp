#pragma once

#include <string>
#include <string_view>

#include "yhc/partitions.hpp"

namespace yhc {

// [[2,1],[],[1]] with an optional ":+" / ":-" suffix for split type-D labels.
std::string label_to_text(const CharLabel& label);

// Throws InvalidArgument on malformed text or a label that fails validate().
CharLabel parse_label(TypeTag type, int d, std::string_view text);

std::string partition_to_text(const Partition& p);

}  // namespace yhc
