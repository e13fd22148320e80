#pragma once

#include <string>
#include <vector>

#include "qm/domain.hpp"

namespace qm {

// Q = 2x1^2 + x1x2 + x2^2, s = 4, jstar = {(1/4,1/4): +1, (1/4,-2/4): -1}
FamilySpec running_example();
// congruence condition fails, G = {1}: exponent 2
FamilySpec fixture_condition_false();
// Q = x1^2 + x1x2 + x2^2, s = 3: G = {1,3}, Q1 empty
FamilySpec fixture_adversarial();
// one shift with alpha1 integral
FamilySpec fixture_boundary();
// boundary shifts paired as (a, x), (b, 1 - x) with equal weights
FamilySpec fixture_paired_boundary();

struct NamedFixture {
  std::string name;
  FamilySpec spec;
};
std::vector<NamedFixture> all_fixtures();

FamilySpec make_spec(i64 a1, i64 a2, i64 a3, i64 s,
                     const std::vector<std::pair<std::pair<std::string, std::string>, std::string>>& shifts);

}  // namespace qm
