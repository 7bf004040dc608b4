#pragma once

#include "doctest.h"
#include "weyl/family.hpp"

namespace weyl {
inline doctest::String toString(const FamilySpec& s) { return s.to_string().c_str(); }
}  // namespace weyl
