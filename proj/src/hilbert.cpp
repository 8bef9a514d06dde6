#include <algorithm>
#include <functional>

#include "hv/grobner.hpp"

namespace hv {

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  Monomial m;
  m.e.assign(nvars, 0);
  // Lexicographic enumeration by recursion on the first variable.
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == nvars - 1) {
      m.e[var] = remaining;
      out.push_back(m);
      m.e[var] = 0;
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      m.e[var] = k;
      rec(var + 1, remaining - k);
    }
    m.e[var] = 0;
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back(m);
    return out;
  }
  rec(0, degree);
  return out;
}

namespace {

void add_scaled(std::vector<Integer>& acc, const std::vector<Integer>& src, int shift, int sign) {
  if (acc.size() < src.size() + shift) acc.resize(src.size() + shift, 0);
  for (size_t i = 0; i < src.size(); ++i) acc[i + shift] += sign * src[i];
}

void trim(std::vector<Integer>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Numerator of the Hilbert series of R/<gens> for a monomial ideal, over the
// full denominator (1-t)^nvars. Recursion: pick a generator m, then
// N(J) = N(J \ {m}) - t^deg(m) * N((J \ {m}) : m).
std::vector<Integer> numerator_rec(std::vector<Monomial> gens) {
  // Remove redundant generators.
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.deg() < b.deg(); });
  std::vector<Monomial> min_gens;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& g : min_gens)
      if (mono_divides(g, m)) {
        redundant = true;
        break;
      }
    if (!redundant) min_gens.push_back(m);
  }
  if (min_gens.empty()) return {Integer(1)};
  for (const auto& m : min_gens)
    if (m.deg() == 0) return {};  // unit ideal: zero ring

  // Base case: pairwise coprime generators -> product of (1 - t^deg).
  bool coprime = true;
  for (size_t i = 0; i < min_gens.size() && coprime; ++i)
    for (size_t j = i + 1; j < min_gens.size() && coprime; ++j)
      if (!mono_coprime(min_gens[i], min_gens[j])) coprime = false;
  if (coprime) {
    std::vector<Integer> num{Integer(1)};
    for (const auto& m : min_gens) {
      std::vector<Integer> next(num.size() + m.deg(), 0);
      for (size_t i = 0; i < num.size(); ++i) {
        next[i] += num[i];
        next[i + m.deg()] -= num[i];
      }
      num = std::move(next);
      trim(num);
    }
    return num;
  }

  // Pivot: last generator (largest degree among minimal generators).
  Monomial pivot = min_gens.back();
  min_gens.pop_back();
  std::vector<Monomial> colon;
  for (const auto& g : min_gens) colon.push_back(mono_div(g, mono_gcd(g, pivot)));

  std::vector<Integer> without = numerator_rec(min_gens);
  std::vector<Integer> quotient = numerator_rec(std::move(colon));
  std::vector<Integer> out;
  add_scaled(out, without, 0, +1);
  add_scaled(out, quotient, pivot.deg(), -1);
  trim(out);
  return out;
}

}  // namespace

std::vector<Integer> hilbert_numerator(std::vector<Monomial> lt_gens) {
  auto out = numerator_rec(std::move(lt_gens));
  if (out.empty()) out.push_back(0);
  return out;
}

std::vector<Integer> expand_series(const std::vector<Integer>& numerator, int nvars, int cap) {
  // Coefficients of N(t) / (1-t)^nvars up to degree cap; the expansion of
  // 1/(1-t)^n has coefficient C(e+n-1, n-1) at t^e.
  std::vector<Integer> binom(cap + 1);
  for (int e = 0; e <= cap; ++e) {
    Integer b = 1;
    for (int k = 1; k <= nvars - 1; ++k) {
      b *= e + k;
      b /= k;
    }
    binom[e] = (nvars == 0) ? Integer(e == 0 ? 1 : 0) : b;
  }
  std::vector<Integer> out(cap + 1, 0);
  for (int e = 0; e <= cap; ++e)
    for (size_t i = 0; i < numerator.size() && static_cast<int>(i) <= e; ++i)
      out[e] += numerator[i] * binom[e - static_cast<int>(i)];
  return out;
}

}  // namespace hv
