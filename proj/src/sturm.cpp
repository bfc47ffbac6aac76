#include "kcert/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace kcert {

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
  std::vector<UniPoly> chain{p};
  UniPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  for (;;) {
    const std::size_t n = chain.size();
    UniPoly r = UniPoly::divmod(chain[n - 2], chain[n - 1]).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

namespace {

int count_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(sgn(q(x)));
  return count_changes(signs);
}

int sign_variations_at_infinity(const std::vector<UniPoly>& chain, int direction) {
  std::vector<int> signs;
  for (const auto& q : chain) {
    int s = sgn(q.leading());
    if (direction < 0 && q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_changes(signs);
}

int count_roots(const std::vector<UniPoly>& chain, const Rational& lo, const Rational& hi) {
  if (chain.front()(lo) == 0) throw std::domain_error("Sturm count from a root");
  if (hi <= lo) return 0;
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

int count_roots_above(const std::vector<UniPoly>& chain, const Rational& lo) {
  if (chain.front()(lo) == 0) throw std::domain_error("Sturm count from a root");
  return sign_variations(chain, lo) - sign_variations_at_infinity(chain, 1);
}

std::vector<RootInterval> sturm_isolate(const UniPoly& p, Rational lo, Rational hi, const Rational& target_width) {
  if (p.is_zero()) throw std::domain_error("isolating roots of the zero polynomial");
  if (target_width <= 0) throw std::invalid_argument("isolation width must be positive");
  if (hi <= lo) throw std::invalid_argument("empty isolation interval");
  const std::vector<UniPoly> chain = sturm_chain(p);
  Rational step = (hi - lo) / 1024;
  while (p(lo) == 0) lo -= step, step /= 2;
  step = (hi - lo) / 1024;
  while (p(hi) == 0) hi += step, step /= 2;

  struct Pending {
    Rational a, b;
    int roots;
  };
  std::vector<RootInterval> out;
  std::vector<Pending> stack{{lo, hi, count_roots(chain, lo, hi)}};
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.roots == 0) continue;
    if (cur.roots == 1 && cur.b - cur.a <= target_width) {
      out.push_back({cur.a, cur.b});
      continue;
    }
    Rational m = (cur.a + cur.b) / 2;
    Rational nudge = (cur.b - cur.a) / 8;
    while (p(m) == 0) {
      m += nudge;
      nudge /= 2;
    }
    const int left = count_roots(chain, cur.a, m);
    stack.push_back({m, cur.b, cur.roots - left});
    stack.push_back({cur.a, m, left});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

}  // namespace kcert
