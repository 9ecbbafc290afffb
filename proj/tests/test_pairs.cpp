#include <doctest.h>

#include "properties.hpp"
#include "random_models.hpp"

#include "bgeom/error.hpp"
#include "bgeom/pairs.hpp"
#include "bgeom/positivity.hpp"

using namespace bgeom;
using namespace bgeom::testing;

namespace {
Vector vec(std::initializer_list<Rational> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const Rational& x : xs) v[i++] = x;
  return v;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InternalConsistency;
}

SurfaceModel blp2_on_line() { return build_model(projective_plane(), {{{{"L", 1}}}}); }

Rational half() { return Rational(1, 2); }
}  // namespace

TEST_CASE("reduced trace M_B") {
  const SurfaceModel y = blp2_on_line();
  const TowerDivisor m = trace_MB(y, {{"L", half()}});
  CHECK(m.cls.coefficients() == vec({half(), half()}));
  CHECK(m.coefficients.at("L") == half());
  CHECK(m.coefficients.at("E1") == 1);

  CHECK(trace_MB(y, {}).cls.coefficients() == vec({0, 1}));

  const SurfaceModel near = build_model(projective_plane(), {{{{"L", 1}}}, {{{"L", 1}, {"E1", 1}}}});
  const TowerDivisor two = trace_MB(near, {{"L", 1}});
  CHECK(two.coefficients.at("L") == 1);
  CHECK(two.coefficients.at("E1") == 1);
  CHECK(two.coefficients.at("E2") == 1);
  const Lattice& l = near.lattice();
  CHECK(two.cls == l.curve_class("L") + l.curve_class("E1") + l.curve_class("E2"));
}

TEST_CASE("log pullback and its effective part") {
  const SurfaceModel y = blp2_on_line();
  const TowerDivisor by = log_pullback(y, {{"L", half()}});
  CHECK(by.coefficients.at("L") == half());
  CHECK(by.coefficients.at("E1") == -half());
  CHECK(trace_LB(y, {{"L", half()}}).cls == half() * y.lattice().curve_class("L"));

  const TowerDivisor full = log_pullback(y, {{"L", 1}});
  CHECK(full.coefficients.at("E1") == 0);
  CHECK(trace_LB(y, {{"L", 1}}).cls == y.lattice().curve_class("L"));

  CHECK(log_pullback(y, {}).coefficients.at("E1") == -1);
  CHECK(trace_LB(y, {}).cls.is_zero());

  // K_Y + B_Y = π^*(K + B)
  const Lattice& l = y.lattice();
  CHECK(l.canonical() + by.cls == y.include(vec({Rational(-5, 2)})));
  CHECK(code_of([&] { log_pullback(y, {{"E1", 1}}); }) == ErrorCode::UnknownCurveName);
}

TEST_CASE("discrepancies of simple contractions") {
  const SurfaceModel y = blp2_on_line();
  const Contraction f = contract_tower(y);
  const auto a = discrepancies(f, {}, y.lattice().zero());
  REQUIRE(a.size() == 1);
  CHECK(a[0].first == "E1");
  CHECK(a[0].second == 1);
  CHECK(discrepancies(f, {{"L", 1}}, y.lattice().zero())[0].second == 0);

  for (int n = 1; n <= 5; ++n) {
    const Lattice cone = build_model(elliptic_ruled(n), {}).lattice();
    const Contraction g(cone, {"C0"}, true);
    CHECK(discrepancies(g, {}, cone.zero())[0].second == -1);
  }
  CHECK(code_of([&] { discrepancies(f, {{"E1", 1}}, y.lattice().zero()); }) == ErrorCode::InvalidPair);
}

TEST_CASE("discrepancies are affine in the boundary") {
  Rng rng(41);
  for (int t = 0; t < 80; ++t) {
    const SurfaceModel m = random_tower(rng, random_base(rng), 4);
    if (m.depth() == 0) continue;
    const Contraction f = contract_tower(m);
    BoundaryDivisor b1 = random_boundary(rng, m.base());
    BoundaryDivisor b2 = random_boundary(rng, m.base());
    BoundaryDivisor sum = b1;
    for (const auto& [name, c] : b2) sum[name] += c;
    const auto a0 = discrepancies(f, {}, m.lattice().zero());
    const auto a1 = discrepancies(f, b1, m.lattice().zero());
    const auto a2 = discrepancies(f, b2, m.lattice().zero());
    const auto a12 = discrepancies(f, sum, m.lattice().zero());
    for (std::size_t j = 0; j < a0.size(); ++j) {
      CHECK(a12[j].second - a0[j].second == (a1[j].second - a0[j].second) + (a2[j].second - a0[j].second));
    }
    // a nef part pulled back from the base does not change discrepancies
    const DivisorClass pulled = f.pullback_of_pushforward(random_nef(rng, m));
    const auto with_m = discrepancies(f, b1, pulled);
    for (std::size_t j = 0; j < a1.size(); ++j) CHECK(with_m[j].second == a1[j].second);
  }
}

TEST_CASE("classification") {
  const Lattice cone = build_model(elliptic_ruled(2), {}).lattice();
  CHECK(classify(GenPair(Contraction(cone, {"C0"}, true), {}, cone.zero())) == Singularity::glc);
  CHECK(code_of([&] { classify(GenPair(Contraction(cone, {"C0"}), {}, cone.zero())); }) ==
        ErrorCode::NotLogResolution);

  const Lattice p2 = build_model(projective_plane(), {}).lattice();
  CHECK(classify(GenPair(p2, {{"L", half()}}, p2.zero())) == Singularity::gklt);
  CHECK(classify(GenPair(p2, {{"L", 1}}, p2.zero())) == Singularity::glc);
  CHECK(classify(GenPair(p2, {{"L", Rational(3, 2)}}, p2.zero())) == Singularity::not_glc);

  const SurfaceModel node =
      build_model(with_curves(projective_plane(), {{"L2", vec({1})}}), {{{{"L", 1}, {"L2", 1}}}});
  const GenPair lines(contract_tower(node, true), {{"L", 1}, {"L2", 1}}, node.lattice().zero());
  CHECK(discrepancies(lines.contraction(), lines.boundary(), lines.nef_part())[0].second == -1);
  CHECK(classify(lines) == Singularity::glc);
  CHECK(to_string(Singularity::not_glc) == "not_glc");
}

TEST_CASE("pair validation") {
  const Lattice p2 = build_model(projective_plane(), {}).lattice();
  CHECK(code_of([&] { GenPair(p2, {{"L", -half()}}, p2.zero()); }) == ErrorCode::InvalidPair);
  CHECK(code_of([&] { GenPair(p2, {}, p2.zero(), 0); }) == ErrorCode::InvalidPair);
  CHECK(code_of([&] { GenPair(p2, {}, p2.make(vec({half()}))); }) == ErrorCode::InvalidPair);
  CHECK_NOTHROW(GenPair(p2, {}, p2.make(vec({half()})), 2));
  CHECK(code_of([&] { GenPair(p2, {}, p2.make(vec({-1}))); }) == ErrorCode::NotNef);
  CHECK(code_of([&] { GenPair(p2, {{"Q", 1}}, p2.zero()); }) == ErrorCode::UnknownCurveName);
  const SurfaceModel y = blp2_on_line();
  CHECK(code_of([&] { GenPair(contract_tower(y), {{"E1", 1}}, y.lattice().zero()); }) == ErrorCode::InvalidPair);
}

TEST_CASE("pair volumes") {
  const Lattice p2 = build_model(projective_plane(), {}).lattice();
  CHECK(pair_volume(GenPair(p2, {}, p2.make(vec({4})))) == 1);
  CHECK(pair_volume(GenPair(p2, {}, p2.zero())) == 0);

  const SurfaceModel y = build_model(projective_plane(), {{{}, "E"}});
  const Lattice& l = y.lattice();
  CHECK(pair_volume(GenPair(l, {}, l.make(vec({4, 0})))) == 1);
  const GenPair down(contract_tower(y), {}, l.make(vec({4, 0})));
  CHECK(pair_volume(down) == 1);
  CHECK(pair_volume_on_target(down) == 1);

  for (int n = 1; n <= 5; ++n) {
    const Lattice cone = build_model(elliptic_ruled(n), {}).lattice();
    const DivisorClass m = cone.make(vec({3, Rational(3 * n)}));
    const GenPair p(Contraction(cone, {"C0"}, true), {}, m);
    CHECK(pair_volume(p) == pair_volume_on_target(p));
  }
}

TEST_CASE("pair volume agrees on random contractions") {
  Rng rng(42);
  int nonzero = 0;
  for (int t = 0; t < 80; ++t) {
    const SurfaceModel m = random_tower(rng, random_base(rng), 4);
    if (m.depth() == 0) continue;
    const Contraction f = contract_tower(m, true);
    BoundaryDivisor b;
    for (const auto& [name, c] : random_boundary(rng, m.base())) b[name] = std::min(c, Rational(1));
    const DivisorClass nef = f.pullback_of_pushforward(random_nef(rng, m));
    const GenPair pair(f, b, nef, 4);
    if (classify(pair) == Singularity::not_glc) continue;
    const Rational v = pair_volume(pair);
    CHECK(v == pair_volume_on_target(pair));
    nonzero += v > 0 ? 1 : 0;
  }
  CHECK(nonzero > 5);
}

TEST_CASE("DCC set membership") {
  CHECK(in_dcc_set(0, 5));
  CHECK(in_dcc_set(half(), 5));
  CHECK(in_dcc_set(Rational(4, 5), 5));
  CHECK_FALSE(in_dcc_set(Rational(5, 6), 5));
  CHECK_FALSE(in_dcc_set(1, 100));
  CHECK_FALSE(in_dcc_set(Rational(1, 3), 10));
  CHECK(in_dcc_set(Rational(1, 3), 10, {Rational(1, 3)}));
  CHECK_FALSE(in_dcc_set(-half(), 10));
}
