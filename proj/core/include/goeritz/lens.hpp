#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

namespace goeritz {

/// L(p, q) normalized so that gcd(p, q) = 1 and 1 <= q <= p/2.
class LensSpace {
 public:
  /// Throws InvalidInput unless p >= 2, gcd(p, q) = 1 and 1 <= q <= p/2.
  LensSpace(std::int64_t p, std::int64_t q);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  friend bool operator==(const LensSpace&, const LensSpace&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

/// The 3-sphere, which has no lens-space parameters but shares the reports.
struct Sphere3 {};

using SplitManifold = std::variant<Sphere3, LensSpace>;

enum class Classification { Contractible, Forest };

std::string_view to_string(Classification c);

/// p = qbar * m + r with 2 <= r <= qbar - 2.
struct TypeWindow {
  std::int64_t m;
  std::int64_t r;
  friend bool operator==(const TypeWindow&, const TypeWindow&) = default;
};

struct LensInvariants {
  std::int64_t q_prime;
  bool q_squared_is_one;
  Classification classification;
  std::optional<TypeWindow> window_q;
  std::optional<TypeWindow> window_q_prime;

  /// Window for qbar, which must be q or q_prime.
  const std::optional<TypeWindow>& window(std::int64_t qbar, std::int64_t q) const;
};

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t mod(std::int64_t a, std::int64_t n);

/// The unique k in [1, p/2] with q*k = +-1 (mod p). Requires gcd(p, q) = 1 and
/// p >= 2; p = 2 gives 1.
std::int64_t normalized_inverse(std::int64_t p, std::int64_t q);

/// Window (m, r) for qbar, if 2 <= p mod qbar <= qbar - 2.
std::optional<TypeWindow> type_window(std::int64_t p, std::int64_t qbar);

/// p = +-1 (mod q). Every p qualifies when q = 1.
bool is_pm_one_mod(std::int64_t p, std::int64_t q);

LensInvariants invariants(const LensSpace& L);

enum class DiffPi1 { Z2, Z2xZ2, Z, ZxZ2, ZxZ };

/// ASCII descriptor, e.g. "Z+Z/2".
std::string_view to_string(DiffPi1 g);

struct DiffPi1Report {
  DiffPi1 group;
  bool smale_conditional;  // true only for L(2,1)
};

DiffPi1Report pi1_diff(const SplitManifold& M);

}  // namespace goeritz
