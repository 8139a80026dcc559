#include "goeritz/shell_bridge.hpp"

#include <string>

#include "goeritz/errors.hpp"
#include "goeritz/primitivity.hpp"

namespace goeritz {

namespace {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("principal vertex exponent overflow");
  return out;
}

struct Node {
  PrincipalVertex left;
  PrincipalVertex right;
  PrincipalVertex apex;
};

// n - qbar of the two ends. A pair with both offsets of one sign only has
// descendants with |n - qbar| >= 2, so it can never reach qbar +- 1.
bool can_reach_target(const Node& node, std::int64_t qbar) {
  const std::int64_t a = node.left.n_exp - qbar;
  const std::int64_t b = node.right.n_exp - qbar;
  return (a > 0) != (b > 0);
}

}  // namespace

std::string principal_label(std::string_view w) {
  return w.empty() ? std::string("E_eps") : "E_" + std::string(w);
}

Shell shell_words(std::int64_t p, std::int64_t qbar) {
  if (p < 2 || qbar < 1 || qbar >= p || gcd(p, qbar) != 1) {
    throw InvalidInput("shell (" + std::to_string(p) + "," + std::to_string(qbar) +
                       "): need gcd(p, qbar) = 1 and 1 <= qbar < p");
  }
  if (p > kMaxShellP) {
    throw ResourceLimit("shell: p = " + std::to_string(p) + " exceeds " + std::to_string(kMaxShellP));
  }
  Shell shell{p, qbar, {}, Word::generator(Gen::x), shell_primitive_indices(p, qbar)};
  shell.words.reserve(static_cast<std::size_t>(p) + 1);
  shell.words.push_back(Word::generator(Gen::y, p));
  std::set<std::int64_t> residues;
  for (std::int64_t k = 1; k <= p; ++k) {
    residues.insert(mod((k - 1) * qbar, p));
    Word w;
    for (auto it = residues.begin(); it != residues.end(); ++it) {
      const auto next = std::next(it);
      const std::int64_t gap = (next == residues.end() ? p : *next) - *it;
      w.push_back({Gen::x, 1});
      w.push_back({Gen::y, gap});
    }
    shell.words.push_back(std::move(w));
  }
  return shell;
}

std::set<std::int64_t> shell_primitive_indices(std::int64_t p, std::int64_t qbar) {
  const std::int64_t k = normalized_inverse(p, qbar);
  return {1, k, p - k, p - 1};
}

std::set<std::int64_t> oracle_primitive_indices(const Shell& shell) {
  std::set<std::int64_t> out;
  for (std::size_t k = 0; k < shell.words.size(); ++k) {
    if (is_primitive(CyclicWord(shell.words[k])).is_primitive) out.insert(static_cast<std::int64_t>(k));
  }
  return out;
}

Word PrincipalVertex::word(std::int64_t qbar) const {
  Word w;
  for (std::int64_t i = 0; i < m_exp; ++i) {
    w.push_back({Gen::x, 1});
    w.push_back({Gen::y, qbar});
  }
  w.push_back({Gen::x, 1});
  w.push_back({Gen::y, n_exp});
  return w;
}

PrincipalVertex mediant(const PrincipalVertex& left, const PrincipalVertex& right, std::int64_t qbar) {
  return {{}, add(add(left.m_exp, right.m_exp), 1), add(left.n_exp, right.n_exp) - qbar};
}

std::array<PrincipalVertex, 2> principal_roots(std::int64_t qbar, std::int64_t m, std::int64_t r) {
  return {PrincipalVertex{"m", m - 1, qbar + r}, PrincipalVertex{"m+1", m, r}};
}

PrincipalVertex principal_vertex(std::int64_t p, std::int64_t qbar, std::int64_t m, std::int64_t r,
                                 std::string_view w) {
  const auto window = type_window(p, qbar);
  if (!window || window->m != m || window->r != r) {
    throw InvalidInput("(m, r) = (" + std::to_string(m) + ", " + std::to_string(r) +
                       ") is not the window of p = " + std::to_string(p) + ", qbar = " + std::to_string(qbar));
  }
  auto [left, right] = principal_roots(qbar, m, r);
  PrincipalVertex apex = mediant(left, right, qbar);
  for (char c : w) {
    if (c == 'L') {
      left = apex;
    } else if (c == 'R') {
      right = apex;
    } else {
      throw InvalidInput(std::string("principal vertex word has letter '") + c + "'");
    }
    apex = mediant(left, right, qbar);
  }
  apex.w = std::string(w);
  return apex;
}

const CorridorVertex& Bridge::vertex(std::string_view label) const {
  for (const CorridorVertex& v : vertices) {
    if (v.label == label) return v;
  }
  throw InvalidInput("bridge has no vertex " + std::string(label));
}

Bridge find_bridge(const LensSpace& L, std::int64_t qbar, int max_depth) {
  const LensInvariants inv = invariants(L);
  const std::string name = "L(" + std::to_string(L.p()) + "," + std::to_string(L.q()) + ")";
  if (inv.classification != Classification::Forest) {
    throw NotForest(name + " is not a forest case (p = +-1 mod q)");
  }
  const auto& window = inv.window(qbar, L.q());
  if (!window) throw NotForest(name + ": qbar = " + std::to_string(qbar) + " has no (m, r) window");
  const std::int64_t m = window->m;
  const std::int64_t r = window->r;

  const auto roots = principal_roots(qbar, m, r);
  std::vector<Node> level{{roots[0], roots[1], mediant(roots[0], roots[1], qbar)}};
  std::optional<Node> hit;
  bool tie = false;
  for (int depth = 0;; ++depth) {
    for (const Node& node : level) {
      const std::int64_t off = node.apex.n_exp - qbar;
      if (off == 1 || off == -1) {
        if (hit) {
          tie = true;
        } else {
          hit = node;
        }
      }
    }
    if (hit) break;
    if (depth >= max_depth) {
      throw DepthLimitExceeded(name + ": no bridge within depth " + std::to_string(max_depth));
    }
    std::vector<Node> next;
    next.reserve(level.size() * 2);
    for (const Node& node : level) {
      Node l{node.apex, node.right, {}};
      Node rr{node.left, node.apex, {}};
      for (Node* child : {&l, &rr}) {
        if (!can_reach_target(*child, qbar)) continue;
        child->apex = mediant(child->left, child->right, qbar);
        child->apex.w = node.apex.w + (child == &l ? "L" : "R");
        next.push_back(std::move(*child));
      }
    }
    if (next.empty()) {
      throw DepthLimitExceeded(name + ": principal complex search exhausted without a bridge");
    }
    level = std::move(next);
  }

  Bridge b{L, qbar, m, r, hit->apex.w, hit->apex, hit->apex.word(qbar), {}, {}, 0, tie};

  // Unroll the corridor from Delta_1.
  b.vertices.push_back({"E", Word::generator(Gen::x), std::nullopt});
  b.vertices.push_back({"E_m", roots[0].word(qbar), roots[0]});
  b.vertices.push_back({"E_{m+1}", roots[1].word(qbar), roots[1]});
  b.corridor.push_back({"E", "E_m", "E_{m+1}"});

  auto label_of = [&](std::string_view prefix) {
    return prefix.size() == b.w.size() ? std::string("D") : principal_label(prefix);
  };
  std::string left = "E_m";
  std::string right = "E_{m+1}";
  PrincipalVertex lv = roots[0];
  PrincipalVertex rv = roots[1];
  PrincipalVertex apex = mediant(lv, rv, qbar);
  std::string apex_label = label_of("");
  for (std::size_t i = 0;; ++i) {
    apex.w = b.w.substr(0, i);
    b.vertices.push_back({apex_label, apex.word(qbar), apex});
    b.corridor.push_back({left, right, apex_label});
    if (i == b.w.size()) break;
    if (b.w[i] == 'L') {
      left = apex_label;
      lv = apex;
    } else {
      right = apex_label;
      rv = apex;
    }
    apex = mediant(lv, rv, qbar);
    apex_label = label_of(std::string_view(b.w).substr(0, i + 1));
  }
  b.simplex_count = static_cast<std::int64_t>(b.corridor.size());
  return b;
}

std::int64_t fold_residue(std::int64_t v, std::int64_t p) {
  const std::int64_t r = mod(v, p);
  return 2 * r <= p ? r : p - r;
}

EndHomology bridge_end_homology(const Bridge& b) {
  // Dual classes: E's dual curve is [y], D's is [x] + qbar [y]; the map to
  // H_1(L) kills [x] and sends [y] to a generator.
  const std::int64_t p = b.lens.p();
  const AbelianPair dual_e{0, 1};
  const AbelianPair dual_d{1, b.qbar};
  return {fold_residue(dual_e.ey, p), fold_residue(dual_d.ey, p)};
}

}  // namespace goeritz
