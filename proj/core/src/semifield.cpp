#include "tropic/semifield.hpp"

#include <cctype>
#include <string>

namespace tropic {

std::string_view to_string(SemifieldKind kind) {
  switch (kind) {
    case SemifieldKind::max_plus_float:
      return "maxplus-float";
    case SemifieldKind::max_plus_rational:
      return "maxplus-rational";
    case SemifieldKind::min_plus_float:
      return "minplus-float";
    case SemifieldKind::max_times_float:
      return "maxtimes-float";
  }
  return "unknown";
}

SemifieldKind parse_semifield_kind(std::string_view tag) {
  std::string key;
  key.reserve(tag.size());
  for (char c : tag) {
    if (c != '-' && c != '_') key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (key == "maxplusfloat") return SemifieldKind::max_plus_float;
  if (key == "maxplusrational") return SemifieldKind::max_plus_rational;
  if (key == "minplusfloat") return SemifieldKind::min_plus_float;
  if (key == "maxtimesfloat") return SemifieldKind::max_times_float;
  throw UnknownSemifield(std::string(tag));
}

}  // namespace tropic
