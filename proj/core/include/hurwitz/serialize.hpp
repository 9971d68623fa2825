#pragma once

// Text forms: JSON for machines, CSV for tables. Rationals are always strings.

#include <string>
#include <utility>
#include <vector>

#include "hurwitz/characters.hpp"
#include "hurwitz/hurwitz.hpp"
#include "hurwitz/jack.hpp"

namespace hurwitz {

std::string to_json(const Partition& p);
std::string to_json(const MultiPoly& value);
std::string to_json(const HurwitzResult& result);
std::string to_json(const PSumExpansion& expansion);

/// Header row and first column carry the partition labels.
std::string char_table_csv(const CharTable& table);

/// m,C rows in the given order.
std::string structure_csv(const std::vector<std::pair<Rational, Rational>>& coefficients);

}  // namespace hurwitz
