#pragma once

// The concrete one-parameter families (odd m >= 3) used by verify-paper and the tests.

#include "concord/exact/laurent.hpp"
#include "concord/exact/scalar.hpp"
#include "concord/plumbing.hpp"
#include "concord/spinc.hpp"

namespace concord::families {

/// e0 = -2; chains [-2 x 2m], [-2], [-3], [-(m+1)].
PlumbingGraph y_graph(long m);
/// e0 = -2; chains [-2 x m], [-2 x (m-2)], [-(2m+1)].
PlumbingGraph minus_b_graph(long m);

/// a0 = 0, branch 1 = (0,...,0,1), a_{3,1} = 1, a_{4,1} = (m-3)/2.
SpinCRep y_k1(long m);
/// a0 = 0, branch 1 = (0,...,0,1,0), a_{3,1} = 0, a_{4,1} = m-2.
SpinCRep y_k2(long m);
/// x_1 = 2b_0 + 2(b_{1,1}+...+b_{1,2m}) + b_{2,1} + b_{3,1}; lambda x_1 = k_1.
IntVector y_x1(long m);

/// x_1 = b_{1,1} + b_{1,3} + ... + b_{1,m} + b_{3,1}.
IntVector minus_b_x1(long m);
/// x_2 = b_{2,1} + b_{2,3} + ... + b_{2,m-2} + b_{3,1}.
IntVector minus_b_x2(long m);

/// Linking matrix [[m, -2m-1, 0], [-2m-1, m+1, 0], [0, 0, m+6]].
/// `as_printed` puts m in the (2,2) slot instead of m+1.
IntMatrix linking_matrix(long m, bool as_printed = false);
/// [[m, -2m-1, 0, 0], [-2m-1, 2m+7, 0, 0], [0, 0, 0, -1], [0, 0, -1, m+6]].
IntMatrix handle_slide_matrix(long m);

/// [[0, m+1], [m, 0]].
IntMatrix seifert_matrix(long m);
/// (m+1)t - m.
LaurentPoly lambda_poly(long m);

}  // namespace concord::families
