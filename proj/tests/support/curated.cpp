#include "curated.hpp"

#include "bgeom/model.hpp"
#include "bgeom/positivity.hpp"

#include <optional>

namespace bgeom::testing {

namespace {

Rational least_coefficient(const BoundaryDivisor& b) {
  Rational least = 1;
  for (const auto& [name, q] : b) {
    if (q > 0 && q < least) least = q;
  }
  return least;
}

// ⌊m0(K+B+M)⌋ with K, M integral: m0K + Σ⌊m0 b⌋C + m0M.
DivisorClass round_down(const Lattice& x, const BoundaryDivisor& b, const DivisorClass& m, int m0) {
  DivisorClass g = Rational(m0) * (x.canonical() + m);
  for (const auto& [name, q] : b) g += floor(Rational(m0) * q) * x.curve_class(name);
  return g;
}

std::optional<Rational> valid_e(const Lattice& x, const BoundaryDivisor& b, const DivisorClass& m) {
  for (const Rational e : {Rational(1, 2), Rational(2, 3), Rational(3, 4), Rational(4, 5), Rational(9, 10)}) {
    if (is_big(x, x.canonical() + e * (boundary_class(x, b) + m))) return e;
  }
  return std::nullopt;
}

// mobile/fixed split of G, or nullopt when |H| would not be birational
using Splitter = std::optional<std::pair<DivisorClass, BoundaryDivisor>> (*)(const Lattice&, const DivisorClass&);

std::optional<std::pair<DivisorClass, BoundaryDivisor>> split_p2(const Lattice& x, const DivisorClass& g) {
  if (g[0] < 1) return std::nullopt;
  return std::pair{g, BoundaryDivisor{}};
}

std::optional<std::pair<DivisorClass, BoundaryDivisor>> split_blp2(const Lattice& x, const DivisorClass& g) {
  // g = a·π^*L + c·e with the exceptional curve E = e
  const Rational a = g[0];
  const Rational c = g[1];
  if (c > 0) {
    if (a < 1) return std::nullopt;
    Vector h(2);
    h << a, 0;
    return std::pair{x.make(h), BoundaryDivisor{{"E", c}}};
  }
  if (a < 1 || (c < 0 && a < -c + 1)) return std::nullopt;
  return std::pair{g, BoundaryDivisor{}};
}

std::optional<std::pair<DivisorClass, BoundaryDivisor>> split_fn(const Lattice& x, const DivisorClass& g) {
  const Rational n = -x.gram()(0, 0);
  if (g[0] < 1 || g[1] < n * g[0] + 1) return std::nullopt;
  return std::pair{g, BoundaryDivisor{}};
}

void add(std::vector<CuratedInstance>& out, std::string label, const Lattice& x, BoundaryDivisor b,
         DivisorClass m, Splitter split) {
  const Rational vol = volume(x, x.canonical() + boundary_class(x, b) + m);
  if (vol <= 0) return;
  for (int m0 = 1; m0 <= 12; ++m0) {
    const auto parts = split(x, round_down(x, b, m, m0));
    if (!parts) continue;
    const Rational delta = least_coefficient(b);
    const Rational e = valid_e(x, b, m).value_or(Rational(0));
    out.push_back({std::move(label),
                   BoundInstance{x, std::move(b), std::move(m), parts->first, parts->second, m0, delta, e, true}});
    return;
  }
}

}  // namespace

bool has_valid_e(const BoundInstance& instance) { return instance.e_param > 0; }

std::vector<CuratedInstance> curated_instances() {
  std::vector<CuratedInstance> out;

  const Vector one = Vector::Constant(1, Rational(1));
  const BaseSurface p2 = with_curves(projective_plane(), {{"L2", one}, {"L3", one}});
  const Lattice p2x = build_model(p2, {}).lattice();
  const std::vector<BoundaryDivisor> p2_boundaries = {
      {},
      {{"L", Rational(1, 2)}},
      {{"L", 1}, {"L2", 1}},
      {{"L", Rational(1, 3)}, {"L2", Rational(2, 3)}, {"L3", 1}},
      {{"L", Rational(1, 2)}, {"L2", Rational(1, 2)}},
      {{"L", Rational(3, 4)}},
  };
  for (int d : {3, 4, 5, 7, 9}) {
    for (std::size_t i = 0; i < p2_boundaries.size(); ++i) {
      add(out, "P2 d=" + std::to_string(d) + " B#" + std::to_string(i), p2x, p2_boundaries[i],
          Rational(d) * p2x.curve_class("L"), split_p2);
    }
  }

  // two lines through the blown-up point
  const SurfaceModel blp2 = build_model(with_curves(projective_plane(), {{"L2", one}}), {{{{"L", 1}, {"L2", 1}}, "E"}});
  const Lattice& bx = blp2.lattice();
  const std::vector<BoundaryDivisor> bl_boundaries = {
      {}, {{"L", 1}, {"L2", 1}, {"E", 1}}, {{"L", Rational(1, 2)}, {"E", Rational(1, 2)}}, {{"E", 1}}};
  for (auto [a, c] : std::vector<std::pair<int, int>>{{4, 0}, {5, 1}, {6, 2}, {8, 3}}) {
    for (std::size_t i = 0; i < bl_boundaries.size(); ++i) {
      Vector mv(2);
      mv << a, -c;
      add(out, "BlpP2 M=" + std::to_string(a) + "l-" + std::to_string(c) + "e B#" + std::to_string(i), bx,
          bl_boundaries[i], bx.make(mv), split_blp2);
    }
  }

  for (int n : {0, 1, 2}) {
    const Lattice fx = build_model(hirzebruch(n), {}).lattice();
    const std::vector<BoundaryDivisor> f_boundaries = {{}, {{"C0", 1}, {"f", Rational(1, 2)}}};
    for (auto [alpha, beta] : std::vector<std::pair<int, int>>{{3, 3 * n + 5}, {4, 4 * n + 6}}) {
      for (std::size_t i = 0; i < f_boundaries.size(); ++i) {
        Vector mv(2);
        mv << alpha, beta;
        add(out, "F" + std::to_string(n) + " M=(" + std::to_string(alpha) + "," + std::to_string(beta) + ") B#" +
                     std::to_string(i),
            fx, f_boundaries[i], fx.make(mv), split_fn);
      }
    }
  }
  return out;
}

}  // namespace bgeom::testing
