#include <algorithm>

#include "lol/verify.hpp"

namespace lol::verify {

const std::vector<CheckSpec>& catalog() {
  static const std::vector<CheckSpec> all = [] {
    std::vector<CheckSpec> out;
    add_field_checks(out);
    add_bicyclic_checks(out);
    add_projection_checks(out);
    add_jordan_checks(out);
    add_other_checks(out);
    add_audit_checks(out);
    std::sort(out.begin(), out.end(), [](const CheckSpec& a, const CheckSpec& b) { return a.id < b.id; });
    return out;
  }();
  return all;
}

}  // namespace lol::verify
