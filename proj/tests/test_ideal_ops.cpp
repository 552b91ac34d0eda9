#include "doctest.h"
#include "segre/ideal_ops.hpp"

using namespace segre;

namespace {

const PrimeField kField(2147483647);

struct P3 {
  RingPtr R = make_ring(4, kField, MonomialOrder::degrevlex(), {"x", "y", "z", "t"});
  Polynomial x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1), z = Polynomial::variable(R, 2),
             t = Polynomial::variable(R, 3);
  Polynomial one = Polynomial::constant(R, Fp{1});
  Ideal I(std::vector<Polynomial> g) const { return Ideal(R, std::move(g)); }
};

}  // namespace

TEST_CASE("sum and intersection") {
  P3 p;
  Ideal a = p.I({p.x * p.x - p.y * p.z, p.x * p.y - p.z * p.t});
  CHECK(intersect_ideals(a, a).same_as(a));
  CHECK(intersect_ideals(p.I({p.x}), p.I({p.y})).same_as(p.I({p.x * p.y})));
  CHECK(intersect_ideals(a, p.I({p.one})).same_as(a));
  CHECK(ideal_sum(p.I({p.x}), p.I({p.z})).gens.size() == 2);
}

TEST_CASE("colon and saturation by a polynomial") {
  P3 p;
  CHECK(colon_by_poly(p.I({p.x * p.x}), p.x).same_as(p.I({p.x})));
  CHECK(saturate_by_poly(p.I({p.x * p.x}), p.x).basis().is_unit());
  CHECK(saturate_by_poly(p.I({p.x}), p.y).same_as(p.I({p.x})));
  // <xy, xz> = <x> cap <y, z>; saturating by y removes the line
  Ideal mixed = p.I({p.x * p.y, p.x * p.z});
  CHECK(saturate_by_poly(mixed, p.y).same_as(p.I({p.x})));
  CHECK(saturate_by_poly_iterated(mixed, p.y).same_as(p.I({p.x})));
}

TEST_CASE("saturation by an ideal") {
  P3 p;
  Ideal mixed = p.I({p.x * p.y, p.x * p.z});
  CHECK(saturate_by_ideal(mixed, p.I({p.y, p.z})).same_as(p.I({p.x})));
  // the unit ideal has empty zero set, so saturating by it changes nothing
  CHECK(saturate_by_ideal(mixed, p.I({p.one})).same_as(mixed));
  CHECK(saturate_by_ideal(p.I({p.one}), p.I({p.x, p.y})).basis().is_unit());
  Ideal cone_pt = p.I({p.x * p.y - p.z * p.z, p.x * p.t});
  GroebnerBasis sat = saturate_by_ideal(cone_pt, p.I({p.x, p.z})).basis();
  for (const Polynomial& g : cone_pt.gens) CHECK(sat.contains(g));
}

TEST_CASE("Rabinowitsch and iterated-colon saturation agree") {
  P3 p;
  Rng rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    Polynomial l = random_form(p.R, 1, rng);
    Polynomial q = random_form(p.R, 2, rng);
    // embedded and isolated components along V(l)
    Ideal a = p.I({l * l * p.x, l * q, l * p.y * p.z + p.t * p.t * l});
    Polynomial f = (trial % 2 == 0) ? l : l * p.x + p.y * p.t;
    Ideal s1 = saturate_by_poly(a, f);
    Ideal s2 = saturate_by_poly_iterated(a, f);
    CHECK(s1.same_as(s2));
    // idempotence
    CHECK(saturate_by_poly(s1, f).same_as(s1));
  }
}

TEST_CASE("saturating generators times a power of f lie in the original ideal") {
  P3 p;
  Rng rng(5);
  Polynomial l = random_form(p.R, 1, rng);
  Ideal a = p.I({l * p.x * p.x, l * l * p.y, p.z * p.t * l});
  Polynomial f = l;
  Ideal sat = saturate_by_poly(a, f);
  GroebnerBasis gb = a.basis();
  for (const Polynomial& g : sat.gens) {
    bool found = false;
    Polynomial h = g;
    for (int m = 0; m <= 4 && !found; ++m) {
      found = gb.contains(h);
      h = h * f;
    }
    CHECK(found);
  }
  Ideal k = p.I({p.x, p.y});
  CHECK(saturate_by_ideal(saturate_by_ideal(a, k), k).same_as(saturate_by_ideal(a, k)));
}

TEST_CASE("singularity subschemes") {
  P3 p;
  ProjectiveScheme vertex = singularity_subscheme(p.x * p.y - p.z * p.z);
  CHECK(vertex.ideal().same_as(p.I({p.x, p.y, p.z})));
  ProjectiveScheme smooth = singularity_subscheme(p.x * p.x + p.y * p.y + p.z * p.z + p.t * p.t);
  CHECK(smooth.is_empty());
  const PrimeField& F = p.R->field;
  Polynomial cayley = pow(p.x, 3) - p.x * p.y * p.y - p.x * p.z * p.z + (p.y * p.z * p.t).scaled(F.from_int(2)) -
                      p.x * p.t * p.t;
  ProjectiveScheme j = singularity_subscheme(cayley);
  CHECK(j.dimension() == 0);
}

TEST_CASE("padding to a common degree") {
  P3 p;
  std::vector<Polynomial> a{p.x, p.z};
  CHECK(pad_to_degree(a, 1).size() == 2);
  std::vector<Polynomial> b{p.x};
  auto pb = pad_to_degree(b, 2);
  REQUIRE(pb.size() == 4);
  CHECK(pb[0] == p.x * p.x);
  CHECK(pb[1] == p.x * p.y);
  CHECK(pb[2] == p.x * p.z);
  CHECK(pb[3] == p.x * p.t);
  std::vector<Polynomial> c{p.x * p.y - p.z * p.z, p.x};
  auto pc = pad_to_degree(c, 2);
  CHECK(pc.size() == 5);
  for (const Polynomial& g : pc) CHECK(g.degree() == 2);
  // padded and original generators define the same scheme
  Ideal sat_orig = saturate_irrelevant(p.I(c));
  Ideal sat_pad = saturate_irrelevant(p.I(pc));
  CHECK(sat_orig.same_as(sat_pad));
}

TEST_CASE("generic hyperplane slices") {
  P3 p;
  Rng rng(77);
  std::vector<ProjectiveScheme> pair{ProjectiveScheme(p.R, {p.x, p.z}), ProjectiveScheme(p.R, {p.x * p.y - p.z * p.z})};
  auto sliced = generic_hyperplane_slice(pair, rng);
  REQUIRE(sliced.size() == 2);
  CHECK(sliced[0].dimension() == 0);
  CHECK(sliced[0].degree() == 1);
  CHECK(sliced[1].dimension() == 1);
  CHECK(sliced[1].degree() == 2);
  CHECK(sliced[0].gens().back() == sliced[1].gens().back());
  CHECK(sliced[0].ambient_dimension() == 3);
}

TEST_CASE("generic projections") {
  P3 p;
  Rng rng(12);
  // twisted cubic: 2x2 minors of [[x y z],[y z t]]
  std::vector<std::vector<Polynomial>> m{{p.x, p.y, p.z}, {p.y, p.z, p.t}};
  ProjectiveScheme cubic(p.R, minors_ideal(m, 2));
  CHECK(cubic.dimension() == 1);
  CHECK(cubic.degree() == 3);
  ProjectiveScheme plane_cubic = generic_projection_image(cubic, rng);
  CHECK(plane_cubic.ambient_dimension() == 2);
  CHECK(plane_cubic.dimension() == 1);
  CHECK(plane_cubic.degree() == 3);
  CHECK(hypersurface_equation(plane_cubic).degree() == 3);

  ProjectiveScheme line = generic_projection_image(ProjectiveScheme(p.R, {p.x, p.z}), rng);
  CHECK(line.degree() == 1);
  ProjectiveScheme conic = generic_projection_image(ProjectiveScheme(p.R, {p.x * p.y - p.z * p.z, p.t}), rng);
  CHECK(conic.degree() == 2);
  CHECK_THROWS_AS(generic_projection_image(ProjectiveScheme(p.R, {p.x * p.y - p.z * p.z}), rng), std::invalid_argument);
}

TEST_CASE("minors and rank loci") {
  RingPtr R9 = make_ring(9, kField);
  ProjectiveScheme det = rank_locus(R9, 3, 2);
  CHECK(det.gens().size() == 1);
  CHECK(det.dimension() == 7);
  CHECK(det.degree() == 3);
  ProjectiveScheme segre_var = rank_locus(R9, 3, 1);
  CHECK(segre_var.gens().size() == 9);
  CHECK(segre_var.dimension() == 4);
  CHECK(segre_var.degree() == 6);

  RingPtr R4 = make_ring(4, kField);
  ProjectiveScheme quad = rank_locus(R4, 2, 1);
  REQUIRE(quad.gens().size() == 1);
  Polynomial a = Polynomial::variable(R4, 0), b = Polynomial::variable(R4, 1), c = Polynomial::variable(R4, 2),
             d = Polynomial::variable(R4, 3);
  CHECK(quad.gens()[0] == a * d - b * c);
  CHECK(minors_ideal(generic_matrix(R4, 2), 1).size() == 4);
}
