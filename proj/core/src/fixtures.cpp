#include "qm/fixtures.hpp"

namespace qm {

FamilySpec make_spec(i64 a1, i64 a2, i64 a3, i64 s,
                     const std::vector<std::pair<std::pair<std::string, std::string>, std::string>>& shifts) {
  FamilySpec spec;
  spec.form = {a1, a2, a3};
  spec.s = s;
  for (const auto& [alpha, eps] : shifts)
    spec.jstar.push_back(
        {ShiftPair::from_alpha(parse_rational(alpha.first), parse_rational(alpha.second), s), parse_rational(eps)});
  return spec;
}

FamilySpec running_example() { return make_spec(2, 1, 1, 4, {{{"1/4", "1/4"}, "1"}, {{"1/4", "-2/4"}, "-1"}}); }

FamilySpec fixture_condition_false() { return make_spec(2, 1, 1, 3, {{{"1/3", "1"}, "1"}, {{"1/3", "1/3"}, "-1"}}); }

FamilySpec fixture_adversarial() { return make_spec(1, 1, 1, 3, {{{"1/3", "1/3"}, "1"}, {{"1/3", "1"}, "-1"}}); }

FamilySpec fixture_boundary() { return make_spec(2, 1, 1, 3, {{{"1", "1/3"}, "1"}, {{"1/3", "1/3"}, "-1"}}); }

FamilySpec fixture_paired_boundary() {
  return make_spec(2, 1, 1, 3,
                   {{{"1", "1/3"}, "1"}, {{"1", "2/3"}, "1"}, {{"1/3", "1/3"}, "-1"}, {{"2/3", "1/3"}, "-1"}});
}

std::vector<NamedFixture> all_fixtures() {
  return {{"running", running_example()},
          {"condition-false", fixture_condition_false()},
          {"adversarial", fixture_adversarial()},
          {"boundary", fixture_boundary()},
          {"paired-boundary", fixture_paired_boundary()}};
}

}  // namespace qm
