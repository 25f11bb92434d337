#include "recip/sturm.hpp"

#include <cmath>
#include <deque>

namespace recip {

namespace {

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p);
  Poly d = p.derivative();
  if (!d.is_zero()) chain.push_back(d);
  while (chain.size() >= 2 && !chain.back().is_zero()) {
    Poly r = Poly::divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rat& x) {
  int var = 0, last = 0;
  for (const auto& q : chain) {
    int s = sgn(q.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

// Cauchy bound on the absolute value of any root.
Rat root_bound(const Poly& p) {
  Rat m(0);
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, rat_abs(p.coeff(k)));
  return Rat(1) + m / rat_abs(p.lead());
}

Poly squarefree_part(const Poly& p) {
  Poly g = Poly::gcd(p, p.derivative());
  return Poly::divmod(p, g).first;
}

}  // namespace

int sturm_count(const Poly& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
  Poly sf = squarefree_part(p);
  auto chain = sturm_chain(sf);
  return sign_variations(chain, a) - sign_variations(chain, b);
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const Poly& p, const Rat& width) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  Poly sf = squarefree_part(p);
  if (sf.degree() <= 0) return {};
  auto chain = sturm_chain(sf);
  auto count = [&](const Rat& a, const Rat& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
  };
  Rat bound = root_bound(sf);
  std::vector<std::pair<Rat, Rat>> out;
  std::deque<std::pair<Rat, Rat>> work{{-bound, bound}};
  while (!work.empty()) {
    auto [lo, hi] = work.front();
    work.pop_front();
    int c = count(lo, hi);
    if (c == 0) continue;
    if (c == 1 && hi - lo < width) {
      out.push_back({lo, hi});
      continue;
    }
    Rat mid = (lo + hi) / 2;
    Rat step = (hi - lo) / 4;
    while (sf.eval(mid) == 0) {
      // nudge the split point off the root
      mid += step;
      step /= 3;
    }
    work.push_back({lo, mid});
    work.push_back({mid, hi});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<double> real_roots(const Poly& p) {
  std::vector<double> roots;
  for (const auto& [lo, hi] : isolate_real_roots(p, Rat(1, 1000000000000LL)))
    roots.push_back((to_double(lo) + to_double(hi)) / 2);
  return roots;
}

std::pair<std::vector<Rat>, bool> rational_roots(const Poly& p, int max_den) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::vector<Rat> roots;
  Poly rem = p;
  for (double r : real_roots(p)) {
    for (int q = 1; q <= max_den; ++q) {
      long long num = std::llround(r * q);
      Rat cand{Int(num), Int(q)};
      if (p.eval(cand) == 0) {
        while (rem.eval(cand) == 0) {
          roots.push_back(cand);
          rem = Poly::divmod(rem, Poly({-cand, Rat(1)})).first;
        }
        break;
      }
    }
  }
  return {roots, rem.degree() <= 0};
}

}  // namespace recip
