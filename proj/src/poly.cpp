#include "concord/exact/poly.hpp"

#include "concord/errors.hpp"

namespace concord::poly {

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) {
    Poly q = p;
    trim(q);
    return static_cast<int>(q.size()) - 1;
}

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) { return add(a, scale(b, Rational(-1))); }

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly scale(const Poly& a, const Rational& c) {
    Poly r = a;
    for (auto& x : r) x *= c;
    trim(r);
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    Poly bb = b;
    trim(bb);
    if (bb.empty()) throw InputError("polynomial division by zero");
    Poly r = a;
    trim(r);
    if (r.size() < bb.size()) return {{}, r};
    Poly q(r.size() - bb.size() + 1);
    const Rational lead = bb.back();
    while (!r.empty() && r.size() >= bb.size()) {
        const std::size_t shift = r.size() - bb.size();
        const Rational c = r.back() / lead;
        q[shift] = c;
        for (std::size_t i = 0; i < bb.size(); ++i) r[i + shift] -= c * bb[i];
        r.pop_back();
        trim(r);
    }
    trim(q);
    return {q, r};
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return scale(a, Rational(1) / a.back());
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    trim(d);
    return d;
}

Rational eval(const Poly& p, const Rational& x) {
    Rational v(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    Poly result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly basis{Rational(1)};
        Rational denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = mul(basis, Poly{-xs[j], Rational(1)});
            denom *= xs[i] - xs[j];
        }
        result = add(result, scale(basis, ys[i] / denom));
    }
    return result;
}

namespace {

Poly squarefree(const Poly& p) {
    Poly g = gcd(p, derivative(p));
    if (degree(g) <= 0) return p;
    return divmod(p, g).first;
}

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain{squarefree(p)};
    chain.push_back(derivative(chain[0]));
    while (!chain.back().empty()) {
        Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.empty()) break;
        chain.push_back(scale(r, Rational(-1)));
    }
    return chain;
}

int variations(const std::vector<Poly>& chain, const Rational& x) {
    int v = 0, last = 0;
    for (const auto& q : chain) {
        int s = sign(eval(q, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

int count_real_roots(const Poly& p, const Rational& a, const Rational& b) {
    if (degree(p) <= 0) return 0;
    auto chain = sturm_chain(p);
    return variations(chain, a) - variations(chain, b);
}

Rational root_bound(const Poly& p) {
    Poly q = p;
    trim(q);
    if (q.empty()) throw InputError("root bound of zero polynomial");
    Rational m(0);
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
        Rational r = q[i] / q.back();
        if (r < 0) r = -r;
        if (r > m) m = r;
    }
    return m + 1;
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Poly& p, const Rational& width) {
    std::vector<std::pair<Rational, Rational>> out;
    if (degree(p) <= 0) return out;
    auto chain = sturm_chain(p);
    const Poly& sf = chain[0];
    const Rational bound = root_bound(p);
    struct Item {
        Rational a, b;
        int va, vb;
    };
    std::vector<Item> stack{{-bound, bound, variations(chain, -bound), variations(chain, bound)}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        const int n = it.va - it.vb;
        if (n == 0) continue;
        if (n == 1 && it.b - it.a < width) {
            out.emplace_back(it.a, it.b);
            continue;
        }
        Rational mid = (it.a + it.b) / 2;
        for (int k = 3; eval(sf, mid) == 0; ++k) mid = it.a + (it.b - it.a) / k;
        const int vm = variations(chain, mid);
        stack.push_back({mid, it.b, vm, it.vb});
        stack.push_back({it.a, mid, it.va, vm});
    }
    return out;
}

}  // namespace concord::poly
