#include "goeritz/lens.hpp"

#include <string>

#include "goeritz/errors.hpp"

namespace goeritz {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

LensSpace::LensSpace(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  const std::string name = "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
  if (p < 2) throw InvalidInput(name + ": p must be at least 2");
  if (q < 1 || 2 * q > p) throw InvalidInput(name + ": q must satisfy 1 <= q <= p/2");
  if (gcd(p, q) != 1) throw InvalidInput(name + ": gcd(p, q) must be 1");
}

std::string_view to_string(Classification c) {
  return c == Classification::Forest ? "forest" : "contractible";
}

const std::optional<TypeWindow>& LensInvariants::window(std::int64_t qbar, std::int64_t q) const {
  if (qbar == q) return window_q;
  if (qbar == q_prime) return window_q_prime;
  throw InvalidInput("qbar " + std::to_string(qbar) + " is neither q nor q'");
}

std::int64_t normalized_inverse(std::int64_t p, std::int64_t q) {
  if (p == 2) return 1;
  // Extended Euclid for q^-1 mod p.
  std::int64_t r0 = p;
  std::int64_t r1 = mod(q, p);
  std::int64_t t0 = 0;
  std::int64_t t1 = 1;
  while (r1 != 0) {
    const std::int64_t k = r0 / r1;
    std::int64_t tmp = r0 - k * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - k * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) throw InvalidInput("q is not invertible mod p");
  const std::int64_t k = mod(t0, p);
  return 2 * k <= p ? k : p - k;
}

std::optional<TypeWindow> type_window(std::int64_t p, std::int64_t qbar) {
  if (qbar < 1) return std::nullopt;
  const std::int64_t r = p % qbar;
  if (r < 2 || r > qbar - 2) return std::nullopt;
  return TypeWindow{p / qbar, r};
}

bool is_pm_one_mod(std::int64_t p, std::int64_t q) {
  if (q == 1) return true;
  const std::int64_t r = mod(p, q);
  return r == 1 || r == q - 1;
}

LensInvariants invariants(const LensSpace& L) {
  const std::int64_t p = L.p();
  const std::int64_t q = L.q();
  LensInvariants out{};
  out.q_prime = normalized_inverse(p, q);
  __extension__ typedef __int128 wide;
  out.q_squared_is_one = static_cast<std::int64_t>(static_cast<wide>(q) * q % p) == 1 % p;
  out.classification = is_pm_one_mod(p, q) ? Classification::Contractible : Classification::Forest;
  out.window_q = type_window(p, q);
  out.window_q_prime = type_window(p, out.q_prime);
  return out;
}

std::string_view to_string(DiffPi1 g) {
  switch (g) {
    case DiffPi1::Z2:
      return "Z/2";
    case DiffPi1::Z2xZ2:
      return "Z/2+Z/2";
    case DiffPi1::Z:
      return "Z";
    case DiffPi1::ZxZ2:
      return "Z+Z/2";
    case DiffPi1::ZxZ:
      return "Z+Z";
  }
  return "?";
}

DiffPi1Report pi1_diff(const SplitManifold& M) {
  if (std::holds_alternative<Sphere3>(M)) return {DiffPi1::Z2, false};
  const LensSpace& L = std::get<LensSpace>(M);
  if (L.p() == 2) return {DiffPi1::Z2xZ2, true};
  if (L.q() == 1) return {L.p() % 2 == 1 ? DiffPi1::Z : DiffPi1::ZxZ2, false};
  return {DiffPi1::ZxZ, false};
}

}  // namespace goeritz
