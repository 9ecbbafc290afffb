#include <doctest.h>

#include "properties.hpp"
#include "random_models.hpp"

#include "bgeom/descent.hpp"
#include "bgeom/error.hpp"
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
}  // namespace

TEST_CASE("blow-up nef criterion examples") {
  const SurfaceModel p2 = build_model(projective_plane(), {});
  CHECK(blowup_nef_criterion(p2, p2.lattice().make(vec({2})), {{{"L", 1}}}));

  const SurfaceModel conic = build_model(with_curves(projective_plane(), {{"Q", vec({2})}}), {});
  CHECK(blowup_nef_criterion(conic, conic.lattice().make(vec({1})), {{{"Q", 1}, {"L", 1}}}));

  const SurfaceModel y = build_model(projective_plane(), {{{{"L", 1}}}});
  CHECK_FALSE(blowup_nef_criterion(y, y.lattice().curve_class("L"), {{{"L", 1}}}));
  // a point off every tracked curve
  CHECK(blowup_nef_criterion(y, y.lattice().curve_class("L"), {}));
}

TEST_CASE("contracting (-1)-curves") {
  const SurfaceModel y = build_model(projective_plane(), {{}});
  const Contraction c = contract_minus_one_curve(y.lattice(), "E1");
  CHECK(c.target().rank() == 1);
  CHECK(c.target().canonical().coefficients() == vec({-3}));
  const DivisorClass l = c.pushforward(y.lattice().make(vec({1, 0})));
  CHECK(l.coefficients() == vec({1}));
  CHECK(c.target().intersect(l, l) == 1);

  const SurfaceModel near = build_model(projective_plane(), {{}, {{{"E1", 1}}}});
  const Lattice& top = near.lattice();
  CHECK(top.intersect(top.curve_class("E1"), top.curve_class("E1")) == -2);
  const Contraction d = contract_minus_one_curve(top, "E2");
  CHECK(d.target().rank() == 2);
  const DivisorClass e1 = d.target().curve_class("E1");
  CHECK(d.target().intersect(e1, e1) == -1);
  CHECK(code_of([&] { contract_minus_one_curve(top, "E1"); }) == ErrorCode::NotMinusOneCurve);
  CHECK(code_of([&] { contract_minus_one_curve(top, "L"); }) == ErrorCode::NotMinusOneCurve);
}

TEST_CASE("descent examples") {
  const SurfaceModel y = build_model(projective_plane(), {{}});
  const DescentResult full = descend_nef(y, y.lattice().make(vec({2, 0})));
  CHECK(full.intermediate.rank() == 1);
  CHECK(full.m_prime.coefficients() == vec({2}));
  CHECK(full.blowup_count == 0);
  CHECK(full.bound == 0);

  const DivisorClass tight = y.lattice().make(vec({2, -1}));
  const DescentResult none = descend_nef(y, tight);
  CHECK(none.contracted.empty());
  CHECK(none.blowup_count == 1);
  CHECK(none.bound == 1);
  CHECK_FALSE(descent_defect(y, tight, none));

  const SurfaceModel two = build_model(projective_plane(), {{}, {}});
  const DivisorClass m = two.lattice().make(vec({2, -1, 0}));
  const DescentResult partial = descend_nef(two, m);
  CHECK(partial.contracted == std::vector<std::string>{"E2"});
  CHECK(partial.blowup_count == 1);
  CHECK(partial.bound == 1);
  CHECK(partial.pull_back_to_top(partial.m_prime) == m);
  CHECK_FALSE(descent_defect(two, m, partial));

  CHECK(code_of([&] { descend_nef(y, y.lattice().make(vec({1, 1}))); }) == ErrorCode::NotNef);
  CHECK(code_of([&] {
          descend_nef(two, two.lattice().make(vec({2, 0, 0})), [](const auto& e) { return e.size(); });
        }) == ErrorCode::InternalConsistency);
}

TEST_CASE("pushforwards of nef classes") {
  const SurfaceModel y = build_model(projective_plane(), {{}});
  const Contraction f = contract_tower(y);
  CHECK(check_pushforward_nef(f, y.lattice().make(vec({2, -1}))));
  CHECK(check_pushforward_nef(f, y.lattice().zero()));
  CHECK(check_pushforward_nef(y, 0, y.lattice().make(vec({1, 0}))));
  CHECK(code_of([&] { check_pushforward_nef(f, y.lattice().make(vec({1, 1}))); }) == ErrorCode::PreconditionUnmet);
}

TEST_CASE("trivial blow-ups over a curve orthogonal to M") {
  const SurfaceModel f0 = build_model(hirzebruch(0), {{{{"f", 1}}}, {{{"f", 1}, {"E1", 1}}}});
  const Vector m = vec({0, 1});
  const DivisorClass lifted = f0.include(m);
  const TrivialBlowupCheck ok = check_trivial_blowup(f0, "f", m, lifted);
  CHECK(ok.holds);
  CHECK_FALSE(ok.witness);

  const DivisorClass minus = lifted - f0.lattice().make(vec({0, 0, 1, 0}));
  CHECK(code_of([&] { check_trivial_blowup(f0, "f", m, minus); }) == ErrorCode::PreconditionUnmet);
  CHECK(code_of([&] { check_trivial_blowup(f0, "C0", m, lifted); }) == ErrorCode::PreconditionUnmet);

  const SurfaceModel off = build_model(hirzebruch(0), {{{{"f", 1}}}, {}});
  CHECK(code_of([&] { check_trivial_blowup(off, "f", m, off.include(m)); }) == ErrorCode::PreconditionUnmet);
}

TEST_CASE("random descents") {
  Rng rng(51);
  for (int t = 0; t < 60; ++t) {
    const SurfaceModel m = random_tower(rng, random_base(rng), 4);
    const auto f = descent(rng, m, m.depth() <= 3);
    CHECK_MESSAGE(!f, f.value_or(""));
  }
}

TEST_CASE("random blow-up criteria and pushforwards") {
  Rng rng(52);
  for (int t = 0; t < 80; ++t) {
    const SurfaceModel m = random_tower(rng, random_base(rng), 4);
    auto f = blowup_criterion(rng, m);
    CHECK_MESSAGE(!f, f.value_or(""));
    f = push_nef(rng, m);
    CHECK_MESSAGE(!f, f.value_or(""));
  }
}
