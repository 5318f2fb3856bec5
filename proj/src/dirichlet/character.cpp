#include "vtwist/dirichlet/character.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "vtwist/errors.hpp"
#include "vtwist/numcore/integer.hpp"

namespace vtwist::dirichlet {

using numcore::powmod;

namespace {

std::uint64_t phi_prime_power(std::uint64_t p, int k) {
  std::uint64_t q = 1;
  for (int i = 1; i < k; ++i) q *= p;
  return q * (p - 1);
}

Component make_component(int ell, std::uint64_t p, int k, int e) {
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  std::uint64_t g = numcore::primitive_root_prime_power(p, k);
  return {q, p, k, g, ((e % ell) + ell) % ell};
}

// Discrete log of a modulo ell with respect to the component's generator.
int component_exponent(const Component& c, int ell, std::uint64_t a) {
  std::uint64_t r = a % c.q;
  std::uint64_t n = phi_prime_power(c.p, c.k) / ell;
  std::uint64_t h = powmod(r, n, c.q);
  std::uint64_t gamma = powmod(c.g, n, c.q);
  std::uint64_t cur = 1;
  for (int j = 0; j < ell; ++j) {
    if (cur == h) return j;
    cur = numcore::mulmod(cur, gamma, c.q);
  }
  throw std::logic_error("component_exponent: projection left the order-ell subgroup");
}

}  // namespace

Character Character::trivial(int ell) {
  Character c;
  c.ell_ = ell;
  c.f_ = 1;
  return c;
}

Character::Character(int ell, std::vector<Component> components) : ell_(ell), comps_(std::move(components)) {
  if (ell < 3 || !numcore::is_prime(static_cast<std::uint64_t>(ell)))
    throw std::invalid_argument("Character: ell must be an odd prime");
  std::sort(comps_.begin(), comps_.end(), [](const Component& a, const Component& b) { return a.q < b.q; });
  f_ = 1;
  for (size_t i = 0; i < comps_.size(); ++i) {
    auto& c = comps_[i];
    if (i && comps_[i - 1].p == c.p) throw InadmissibleConductorError("Character: repeated prime");
    bool ok = (c.k == 1 && c.p % ell == 1) || (c.p == static_cast<std::uint64_t>(ell) && c.k == 2);
    if (!ok) throw InadmissibleConductorError("Character: modulus " + std::to_string(c.q) + " carries no primitive order-" + std::to_string(ell) + " character");
    c.e = ((c.e % ell) + ell) % ell;
    if (c.e == 0) throw std::invalid_argument("Character: component exponent must be nonzero");
    c.g = numcore::primitive_root_prime_power(c.p, c.k);
    f_ *= c.q;
  }
}

std::optional<int> Character::exponent(std::uint64_t a) const {
  int s = 0;
  for (auto& c : comps_) {
    if (a % c.p == 0) return std::nullopt;
    s = (s + c.e * component_exponent(c, ell_, a)) % ell_;
  }
  return s;
}

std::vector<std::int8_t> Character::exponent_table() const {
  std::vector<std::int8_t> tab(f_, 0);
  if (f_ == 1) return tab;
  for (auto& c : comps_) {
    std::vector<std::int16_t> local(c.q, -1);
    std::uint64_t x = 1, ord = phi_prime_power(c.p, c.k);
    for (std::uint64_t m = 0; m < ord; ++m) {
      local[x] = static_cast<std::int16_t>((m % ell_) * c.e % ell_);
      x = numcore::mulmod(x, c.g, c.q);
    }
    for (std::uint64_t a = 0; a < f_; ++a) {
      if (tab[a] < 0) continue;
      auto v = local[a % c.q];
      tab[a] = v < 0 ? -1 : static_cast<std::int8_t>((tab[a] + v) % ell_);
    }
  }
  return tab;
}

Character Character::power(int j) const {
  j = ((j % ell_) + ell_) % ell_;
  if (j == 0) return trivial(ell_);
  std::vector<Component> cs = comps_;
  for (auto& c : cs) c.e = static_cast<int>((static_cast<long>(c.e) * j) % ell_);
  return Character(ell_, cs);
}

Character Character::operator*(const Character& o) const {
  if (o.ell_ != ell_) throw std::invalid_argument("Character product: mismatched ell");
  if (numcore::gcd_u64(f_, o.f_) != 1) throw std::invalid_argument("Character product: conductors must be coprime");
  std::vector<Component> cs = comps_;
  cs.insert(cs.end(), o.comps_.begin(), o.comps_.end());
  return Character(ell_, cs);
}

Character Character::orbit_representative() const {
  Character best = *this;
  auto key = [](const Character& c) {
    std::vector<int> v;
    for (auto& x : c.comps_) v.push_back(x.e);
    return v;
  };
  for (int j = 2; j < ell_; ++j) {
    Character c = power(j);
    if (key(c) < key(best)) best = c;
  }
  return best;
}

std::string Character::id() const {
  std::ostringstream os;
  os << "(" << f_ << ";";
  for (size_t i = 0; i < comps_.size(); ++i) os << (i ? ", " : " ") << comps_[i].q << ":" << comps_[i].e;
  os << ")";
  return os.str();
}

Character Character::parse(int ell, const std::string& id) {
  static const std::regex outer(R"(\s*\(\s*(\d+)\s*;(.*)\)\s*)");
  static const std::regex item(R"(\s*(\d+)\s*:\s*(\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(id, m, outer)) throw std::invalid_argument("Character::parse: malformed id '" + id + "'");
  std::uint64_t f = std::stoull(m[1]);
  std::string body = m[2];
  std::vector<Component> cs;
  std::stringstream ss(body);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.find_first_not_of(" \t") == std::string::npos) continue;
    std::smatch im;
    if (!std::regex_match(part, im, item)) throw std::invalid_argument("Character::parse: malformed component '" + part + "'");
    std::uint64_t q = std::stoull(im[1]);
    int e = std::stoi(im[2]);
    auto fq = numcore::factor(q);
    if (fq.size() != 1) throw std::invalid_argument("Character::parse: modulus is not a prime power");
    cs.push_back(make_component(ell, fq[0].prime, fq[0].exponent, e));
  }
  Character c = cs.empty() ? trivial(ell) : Character(ell, cs);
  if (c.conductor() != f) throw std::invalid_argument("Character::parse: conductor does not match components");
  return c;
}

bool is_admissible_conductor(std::uint64_t f, int ell) {
  if (f <= 1) return false;
  for (auto& pp : numcore::factor(f)) {
    if (pp.prime == static_cast<std::uint64_t>(ell)) {
      if (pp.exponent != 2) return false;
    } else if (pp.exponent != 1 || pp.prime % ell != 1) {
      return false;
    }
  }
  return true;
}

std::vector<Character> characters_of_order(std::uint64_t f, int ell) {
  if (!is_admissible_conductor(f, ell)) return {};
  auto fs = numcore::factor(f);
  std::vector<Character> out;
  std::vector<int> e(fs.size(), 1);
  while (true) {
    std::vector<Component> cs;
    for (size_t i = 0; i < fs.size(); ++i) cs.push_back(make_component(ell, fs[i].prime, fs[i].exponent, e[i]));
    out.emplace_back(ell, cs);
    size_t i = 0;
    while (i < e.size() && ++e[i] == ell) e[i++] = 1;
    if (i == e.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const Character& a, const Character& b) {
    for (size_t i = 0; i < a.components().size(); ++i)
      if (a.components()[i].e != b.components()[i].e) return a.components()[i].e < b.components()[i].e;
    return false;
  });
  return out;
}

std::vector<Character> enumerate(int ell, std::uint64_t X, bool dedup) {
  // Prime-power building blocks, then a depth-first walk over products <= X.
  std::vector<std::uint64_t> blocks;
  std::uint64_t l2 = static_cast<std::uint64_t>(ell) * ell;
  if (l2 <= X) blocks.push_back(l2);
  for (auto p : numcore::primes_up_to(static_cast<std::uint32_t>(std::min<std::uint64_t>(X, 0xffffffffu))))
    if (p % ell == 1) blocks.push_back(p);
  std::sort(blocks.begin(), blocks.end());
  std::vector<std::uint64_t> conductors;
  std::function<void(size_t, std::uint64_t)> dfs = [&](size_t start, std::uint64_t prod) {
    for (size_t i = start; i < blocks.size(); ++i) {
      if (prod > X / blocks[i]) break;
      std::uint64_t next = prod * blocks[i];
      conductors.push_back(next);
      dfs(i + 1, next);
    }
  };
  dfs(0, 1);
  std::sort(conductors.begin(), conductors.end());
  std::vector<Character> out;
  for (auto f : conductors) {
    for (auto& c : characters_of_order(f, ell)) {
      if (!dedup || c.is_orbit_representative()) out.push_back(c);
    }
  }
  return out;
}

std::vector<Character> factor_character(const Character& chi) {
  std::vector<Character> out;
  for (auto& c : chi.components()) out.emplace_back(chi.ell(), std::vector<Component>{c});
  return out;
}

GaussSum gauss_sum(const Character& chi, mpfr_prec_t prec) {
  const int ell = chi.ell();
  const std::uint64_t f = chi.conductor();
  const mpfr_prec_t wp = prec + 32;
  if (f == 1) return {numcore::Complex(numcore::Real(1L, prec), numcore::Real(prec)), 0.0};
  // Bucket e^{2 pi i c / f} by the exponent of chi(c).
  std::vector<numcore::Complex> bucket(ell, numcore::Complex(wp));
  auto tab = chi.exponent_table();
  numcore::Real step = numcore::Real::pi(wp) * 2L / static_cast<long>(f);
  for (std::uint64_t c = 1; c < f; ++c) {
    if (tab[c] < 0) continue;
    numcore::Real theta = step * static_cast<long>(c);
    bucket[tab[c]] += numcore::Complex(cos(theta), sin(theta));
  }
  numcore::Complex g(wp);
  for (int k = 0; k < ell; ++k) g += bucket[k] * numcore::Complex::root_of_unity(k, ell, wp);
  double err = static_cast<double>(f) * std::ldexp(1.0, -static_cast<int>(wp) + 6);
  return {g, err};
}

}  // namespace vtwist::dirichlet
