#pragma once

// Virtual link diagrams as Gauss codes, virtual linking numbers, and
// directed Seifert matrices assembled from core/push-off curve systems.
//
// Text grammar: components separated by ';', each "name: passage ...",
// passage = (O|U)(id)(+|-). U+2212 is accepted for '-'. Whitespace is ignored.
// Curve systems add directive lines:
//   @cores a b
//   @push a a_plus a_minus

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vconc/seifert.hpp"

namespace vconc {

enum class Role { kOver, kUnder };

struct Passage {
  long id = 0;
  Role role = Role::kOver;
  int sign = 1;

  friend bool operator==(const Passage&, const Passage&) = default;
};

struct Component {
  std::string name;
  std::vector<Passage> passages;  // cyclic

  friend bool operator==(const Component&, const Component&) = default;
};

struct VirtualLinkDiagram {
  std::vector<Component> components;

  const Component* find(std::string_view name) const;
  std::size_t crossing_count() const;
  friend bool operator==(const VirtualLinkDiagram&, const VirtualLinkDiagram&) = default;
};

/// Throws ParseError on bad syntax, ValidationError(kDiagram) on inconsistent crossings.
VirtualLinkDiagram parse_gauss(std::string_view text);
std::string render(const VirtualLinkDiagram& d);

/// Sum of signs of crossings with the over passage on j and the under passage on k.
int vlk(const VirtualLinkDiagram& d, std::string_view j, std::string_view k);

struct CurveSystem {
  VirtualLinkDiagram diagram;
  std::vector<std::string> cores;
  std::map<std::string, std::pair<std::string, std::string>> push_offs;  // core -> (plus, minus)
};

CurveSystem parse_curve_system(std::string_view text);

/// A^{+-}[i][j] = vlk(push^{+-}(core i), core j), validated as a Z-couple.
SeifertCouple assemble_couple(const CurveSystem& cs);

}  // namespace vconc
