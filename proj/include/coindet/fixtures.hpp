#pragma once

#include <string>
#include <vector>

#include "coindet/dga.hpp"

namespace coindet {

/* Built-in study algebras.  `algebra_a` and `algebra_a_prime` differ only in
 * the differential of a13; `algebra_half_strict` kills every product with a0
 * on one side or a2 on the other, making one threefold bracket strictly
 * zero; `algebra_alt_grading` is the first algebra with stretched degrees. */
Presentation algebra_a();
Presentation algebra_a_prime();
Presentation algebra_half_strict();
Presentation algebra_alt_grading();

Presentation fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace coindet
