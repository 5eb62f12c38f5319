// SPDX-License-Identifier: Apache-2.0
#include "polygraph/molgraph/element.h"

#include <array>
#include <cmath>
#include <string>

#include "polygraph/core/error.h"

namespace polygraph {
namespace {

constexpr std::array<int, 1> kVal1{1};
constexpr std::array<int, 1> kVal2{2};
constexpr std::array<int, 1> kVal3{3};
constexpr std::array<int, 1> kVal4{4};
constexpr std::array<int, 2> kVal35{3, 5};
constexpr std::array<int, 3> kVal246{2, 4, 6};
constexpr std::array<int, 4> kVal1357{1, 3, 5, 7};

// Masses: IUPAC standard atomic weights (conventional). vdW radii: Bondi 1964,
// with Mantina 2009 for B.
const std::array<Element, 12> kElements{{
    {"H", 1, 1.008, 1, kVal1, 0.31, 1.20, 2.20, true},
    {"B", 5, 10.81, 3, kVal3, 0.84, 1.92, 2.04, true},
    {"C", 6, 12.011, 4, kVal4, 0.76, 1.70, 2.55, true},
    {"N", 7, 14.007, 3, kVal35, 0.71, 1.55, 3.04, true},
    {"O", 8, 15.999, 2, kVal2, 0.66, 1.52, 3.44, true},
    {"F", 9, 18.998, 1, kVal1, 0.57, 1.47, 3.98, true},
    {"Si", 14, 28.085, 4, kVal4, 1.11, 2.10, 1.90, false},
    {"P", 15, 30.974, 3, kVal35, 1.07, 1.80, 2.19, true},
    {"S", 16, 32.06, 2, kVal246, 1.05, 1.80, 2.58, true},
    {"Cl", 17, 35.45, 1, kVal1357, 1.02, 1.75, 3.16, true},
    {"Br", 35, 79.904, 1, kVal1357, 1.20, 1.85, 2.96, true},
    {"I", 53, 126.90, 1, kVal1357, 1.39, 1.98, 2.66, true},
}};

}  // namespace

std::span<const Element> supported_elements() { return kElements; }

bool is_supported_element(std::string_view symbol) {
  for (const auto& e : kElements)
    if (e.symbol == symbol) return true;
  return false;
}

const Element& element_by_symbol(std::string_view symbol) {
  for (const auto& e : kElements)
    if (e.symbol == symbol) return e;
  throw Error(ErrorCode::kUnsupportedElement, "unsupported element '" + std::string(symbol) + "'");
}

const Element& element_by_number(int atomic_number) {
  for (const auto& e : kElements)
    if (e.atomic_number == atomic_number) return e;
  throw Error(ErrorCode::kUnsupportedElement,
              "unsupported atomic number " + std::to_string(atomic_number));
}

const Element& element_by_mass(double mass) {
  const Element* best = &kElements[0];
  for (const auto& e : kElements)
    if (std::abs(e.atomic_mass - mass) < std::abs(best->atomic_mass - mass)) best = &e;
  if (std::abs(best->atomic_mass - mass) > 0.5)
    throw Error(ErrorCode::kUnsupportedElement,
                "no supported element near mass " + std::to_string(mass));
  return *best;
}

}  // namespace polygraph
