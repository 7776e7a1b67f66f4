#include "concord/families.hpp"

#include "concord/errors.hpp"

namespace concord::families {

namespace {
void check_m(long m) {
    if (m < 3 || m % 2 == 0) throw InputError("family parameter m must be odd and >= 3");
}
}  // namespace

PlumbingGraph y_graph(long m) {
    return {-2, {std::vector<long>(static_cast<std::size_t>(2 * m), -2), {-2}, {-3}, {-(m + 1)}}};
}

PlumbingGraph minus_b_graph(long m) {
    return {-2,
            {std::vector<long>(static_cast<std::size_t>(m), -2),
             std::vector<long>(static_cast<std::size_t>(m - 2), -2),
             {-(2 * m + 1)}}};
}

SpinCRep y_k1(long m) {
    check_m(m);
    SpinCRep r = SpinCRep::zero(y_graph(m));
    r.a[0].back() = 1;
    r.a[2][0] = 1;
    r.a[3][0] = (m - 3) / 2;
    return r;
}

SpinCRep y_k2(long m) {
    check_m(m);
    SpinCRep r = SpinCRep::zero(y_graph(m));
    r.a[0][static_cast<std::size_t>(2 * m - 2)] = 1;
    r.a[3][0] = m - 2;
    return r;
}

IntVector y_x1(long m) {
    check_m(m);
    PlumbingGraph g = y_graph(m);
    IntVector x = IntVector::Zero(g.vertex_count());
    x(0) = 2;
    for (std::size_t j = 0; j < g.branches[0].size(); ++j) x(g.index(0, j)) = 2;
    x(g.index(1, 0)) = 1;
    x(g.index(2, 0)) = 1;
    return x;
}

IntVector minus_b_x1(long m) {
    check_m(m);
    PlumbingGraph g = minus_b_graph(m);
    IntVector x = IntVector::Zero(g.vertex_count());
    for (long j = 0; j < m; j += 2) x(g.index(0, static_cast<std::size_t>(j))) = 1;
    x(g.index(2, 0)) = 1;
    return x;
}

IntVector minus_b_x2(long m) {
    check_m(m);
    PlumbingGraph g = minus_b_graph(m);
    IntVector x = IntVector::Zero(g.vertex_count());
    for (long j = 0; j < m - 2; j += 2) x(g.index(1, static_cast<std::size_t>(j))) = 1;
    x(g.index(2, 0)) = 1;
    return x;
}

IntMatrix linking_matrix(long m, bool as_printed) {
    return int_matrix({{m, -2 * m - 1, 0}, {-2 * m - 1, as_printed ? m : m + 1, 0}, {0, 0, m + 6}});
}

IntMatrix handle_slide_matrix(long m) {
    return int_matrix({{m, -2 * m - 1, 0, 0}, {-2 * m - 1, 2 * m + 7, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, m + 6}});
}

IntMatrix seifert_matrix(long m) { return int_matrix({{0, m + 1}, {m, 0}}); }

LaurentPoly lambda_poly(long m) {
    return LaurentPoly::monomial(Rational(m + 1), 1) - LaurentPoly(Rational(m));
}

}  // namespace concord::families
