#include "test_main.hpp"

#include "fixtures.hpp"
#include "hv/expr.hpp"
#include "hv/rings.hpp"

using namespace hv;
using hvtest::sorted_polys;
using hvtest::split_poly;
using hvtest::vars_product;

namespace {

template <class K>
PolyList<K> tds1_a_relations() {
  return sorted_polys<K>({split_poly<K>(5, {2, 3}, {}), split_poly<K>(5, {1, 4}, {2}),
                          split_poly<K>(5, {1, 3, 4}, {})});
}

template <class K>
PolyList<K> tds1_b_relations() {
  return sorted_polys<K>({split_poly<K>(5, {3}, {2}), split_poly<K>(5, {1, 2, 4}, {}),
                          split_poly<K>(5, {1, 3, 4}, {})});
}

template <class K>
PolyList<K> tds1_c_relations() {
  return sorted_polys<K>({split_poly<K>(5, {2, 3}, {}), split_poly<K>(5, {2}, {1, 4}),
                          split_poly<K>(5, {1, 3, 4}, {})});
}

std::vector<std::string> uvars_x(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("u" + std::to_string(i));
  v.push_back("x");
  return v;
}

}  // namespace

TEST_CASE("ring name flags and metadata") {
  CHECK(ring_name_string(RingName::TD) == "TD");
  CHECK(ring_name_string(RingName::ORDINARY) == "ORDINARY");
  CHECK(ring_name_string(RingName::TDS1) == "TDS1");
  CHECK(ring_name_string(RingName::S1) == "S1");
  CHECK(ring_name_string(RingName::OS2) == "OS2");
  CHECK(ring_name_string(RingName::Z2OS) == "Z2OS");
  CHECK(ring_name_string(RingName::LAWRENCE) == "LAWRENCE");

  CHECK(ring_name_from_flag("td") == RingName::TD);
  CHECK(ring_name_from_flag("h") == RingName::ORDINARY);
  CHECK(ring_name_from_flag("tds1") == RingName::TDS1);
  CHECK(ring_name_from_flag("s1") == RingName::S1);
  CHECK(ring_name_from_flag("os2") == RingName::OS2);
  CHECK(ring_name_from_flag("z2os") == RingName::Z2OS);
  CHECK(ring_name_from_flag("lawrence") == RingName::LAWRENCE);
  CHECK_FALSE(ring_name_from_flag("bogus").has_value());
  CHECK_FALSE(ring_name_from_flag("TD").has_value());

  CHECK_FALSE(ring_has_x(RingName::TD));
  CHECK_FALSE(ring_has_x(RingName::ORDINARY));
  CHECK(ring_has_x(RingName::TDS1));
  CHECK(ring_has_x(RingName::S1));
  CHECK_FALSE(ring_has_x(RingName::OS2));
  CHECK(ring_has_x(RingName::Z2OS));
  CHECK_FALSE(ring_has_x(RingName::LAWRENCE));

  CHECK(ring_supports_q(RingName::TDS1));
  CHECK_FALSE(ring_supports_q(RingName::OS2));
  CHECK_FALSE(ring_supports_q(RingName::Z2OS));
  CHECK(ring_supports_q(RingName::LAWRENCE));
  CHECK(ring_supports_f2(RingName::TDS1));
  CHECK(ring_supports_f2(RingName::OS2));
  CHECK_FALSE(ring_supports_f2(RingName::LAWRENCE));
  CHECK(ring_defaults_f2(RingName::OS2));
  CHECK(ring_defaults_f2(RingName::Z2OS));
  CHECK_FALSE(ring_defaults_f2(RingName::TDS1));
}

TEST_CASE("tds1 presentations carry the split-circuit relations") {
  auto a = present_tds1<Rational>(hvtest::fig2a());
  CHECK(a.name == RingName::TDS1);
  CHECK(a.vars == uvars_x(4));
  CHECK(a.x_index == 4);
  CHECK(a.warning.empty());
  CHECK(a.relations == tds1_a_relations<Rational>());

  auto b = present_tds1<Rational>(hvtest::fig2b());
  CHECK(b.relations == tds1_b_relations<Rational>());

  auto c = present_tds1<Rational>(hvtest::fig2c());
  CHECK(c.relations == tds1_c_relations<Rational>());

  auto a2 = present_tds1<GF2>(hvtest::fig2a());
  CHECK(a2.relations == tds1_a_relations<GF2>());
  auto c2 = present_tds1<GF2>(hvtest::fig2c());
  CHECK(c2.relations == tds1_c_relations<GF2>());
}

TEST_CASE("td is the x-free circuit ring and ordinary adds the kernel forms") {
  auto td = present_td<Rational>(hvtest::fig2a());
  CHECK(td.vars == std::vector<std::string>{"u1", "u2", "u3", "u4"});
  CHECK(td.x_index == -1);
  CHECK(td.relations ==
        sorted_polys<Rational>({vars_product<Rational>(4, {2, 3}),
                                vars_product<Rational>(4, {1, 2, 4}),
                                vars_product<Rational>(4, {1, 3, 4})}));

  auto ord = present_ordinary<Rational>(hvtest::fig2a());
  CHECK(ord.x_index == -1);
  auto k1 = parse_linear_expression("u1+u2-u3", td.vars);
  auto k2 = parse_linear_expression("u1-u4", td.vars);
  CHECK(ord.relations == sorted_polys<Rational>({vars_product<Rational>(4, {2, 3}),
                                                 vars_product<Rational>(4, {1, 2, 4}),
                                                 vars_product<Rational>(4, {1, 3, 4}), k1, k2}));
}

TEST_CASE("ordinary ring dimensions count the arrangement vertices") {
  auto ord = present_ordinary<Rational>(hvtest::fig2a());
  auto dims = dims_by_degree(ord.relations, 4, 4);
  CHECK(dims == std::vector<Integer>{1, 2, 2, 0, 0});
  // 1 + 2 + 2 = 5 = number of vertices of the arrangement.
}

TEST_CASE("s1 ring adds kernel forms to tds1 and detects the cube memberships") {
  auto sa = present_s1<Rational>(hvtest::fig2a());
  CHECK(sa.vars == uvars_x(4));
  auto k1 = parse_linear_expression("u1+u2-u3", sa.vars);
  auto k2 = parse_linear_expression("u1-u4", sa.vars);
  {
    auto expected = tds1_a_relations<Rational>();
    expected.push_back(k1);
    expected.push_back(k2);
    CHECK(sa.relations == sorted_polys<Rational>(expected));
  }

  auto gb_a = buchberger(sa.relations);
  auto u3cubed = vars_product<Rational>(5, {3, 3, 3});
  CHECK(ideal_member(u3cubed, gb_a));

  auto sb = present_s1<Rational>(hvtest::fig2b());
  auto gb_b = buchberger(sb.relations);
  CHECK_FALSE(ideal_member(u3cubed, gb_b));
  auto xminusu2 = poly_var<Rational>(4, 5) - poly_var<Rational>(1, 5);
  CHECK_FALSE(ideal_member(xminusu2 * xminusu2 * xminusu2, gb_b));
}

TEST_CASE("os2 ring counts regions through its graded dimensions") {
  auto p = present_os2(hvtest::fig2a());
  CHECK(p.name == RingName::OS2);
  CHECK(p.vars == std::vector<std::string>{"e1", "e2", "e3", "e4"});
  CHECK(p.x_index == -1);
  CHECK(p.relations ==
        sorted_polys<GF2>({vars_product<GF2>(4, {2, 3}), vars_product<GF2>(4, {1, 2, 4}),
                           vars_product<GF2>(4, {1, 3, 4}), vars_product<GF2>(4, {1, 1}),
                           vars_product<GF2>(4, {2, 2}), vars_product<GF2>(4, {3, 3}),
                           vars_product<GF2>(4, {4, 4})}));

  auto dims = dims_by_degree(p.relations, 4, 4);
  CHECK(dims == std::vector<Integer>{1, 4, 5, 0, 0});
  // 1 + 4 + 5 = 10 = number of nonempty regions.

  auto h = hilbert_series(p.relations, 4, 6);
  CHECK(h.truncation == std::vector<Integer>{1, 4, 5, 0, 0, 0, 0});
}

TEST_CASE("z2os presentations on the five-line fixtures") {
  auto a5 = present_z2os(hvtest::fig2a5());
  CHECK(a5.vars == uvars_x(5));
  CHECK(a5.x_index == 5);
  {
    std::vector<Poly<GF2>> expected = {
        split_poly<GF2>(6, {5}, {1}),       split_poly<GF2>(6, {2, 3}, {}),
        split_poly<GF2>(6, {1, 4}, {2}),    split_poly<GF2>(6, {1, 3, 4}, {}),
        split_poly<GF2>(6, {4, 5}, {2}),    split_poly<GF2>(6, {3, 4, 5}, {})};
    for (int i = 1; i <= 5; ++i) expected.push_back(split_poly<GF2>(6, {i}, {i}));
    CHECK(a5.relations == sorted_polys<GF2>(expected));
    CHECK(a5.relations.size() == 11);
  }

  auto c5 = present_z2os(hvtest::fig2c5());
  {
    std::vector<Poly<GF2>> expected = {
        split_poly<GF2>(6, {5}, {1}),       split_poly<GF2>(6, {2, 3}, {}),
        split_poly<GF2>(6, {2}, {1, 4}),    split_poly<GF2>(6, {1, 3, 4}, {}),
        split_poly<GF2>(6, {4, 5}, {2}),    split_poly<GF2>(6, {3, 4, 5}, {})};
    for (int i = 1; i <= 5; ++i) expected.push_back(split_poly<GF2>(6, {i}, {i}));
    CHECK(c5.relations == sorted_polys<GF2>(expected));
    CHECK(c5.relations.size() == 11);
  }
}

TEST_CASE("setting x to zero collapses each S1 ring onto its plain partner") {
  auto a = hvtest::fig2a();

  auto tds1 = present_tds1<Rational>(a);
  auto td = present_td<Rational>(a);
  CHECK(ideal_equal(ideal_drop_var_zero(tds1.relations, tds1.x_index), td.relations));

  auto s1 = present_s1<Rational>(a);
  auto ord = present_ordinary<Rational>(a);
  CHECK(ideal_equal(ideal_drop_var_zero(s1.relations, s1.x_index), ord.relations));

  auto z2os = present_z2os(a);
  auto os2 = present_os2(a);
  CHECK(ideal_equal(ideal_drop_var_zero(z2os.relations, z2os.x_index), os2.relations));
}

TEST_CASE("lawrence presentation and its specialization onto tds1") {
  auto p = present_lawrence(hvtest::fig2a());
  CHECK(p.vars == std::vector<std::string>{"u1", "u2", "u3", "u4", "v1", "v2", "v3", "v4"});
  CHECK(p.x_index == -1);
  // v_j is overall variable 4 + j.
  CHECK(p.relations ==
        sorted_polys<Rational>({vars_product<Rational>(8, {2, 3}),
                                vars_product<Rational>(8, {1, 4, 6}),
                                vars_product<Rational>(8, {1, 3, 4})}));

  CHECK(lawrence_specialize(hvtest::fig2a()));
  CHECK(lawrence_specialize(hvtest::fig2b()));
  CHECK(lawrence_specialize(hvtest::fig2c()));
}

TEST_CASE("annihilator profile of u2 in the rational tds1 ring") {
  auto a = present_tds1<Rational>(hvtest::fig2a());
  auto u2 = poly_var<Rational>(1, 5);

  auto prof = annihilator_profile(a, u2);
  CHECK(prof.degrees == std::vector<int>{1});
  CHECK(prof.generators == std::vector<std::string>{"u3"});
  CHECK(format_degree_multiset(prof.degrees) == "{1}");

  // (I : u2) equals I + (u3) as an ideal.
  auto augmented = a.relations;
  augmented.push_back(poly_var<Rational>(2, 5));
  CHECK(ideal_equal(ideal_quotient(a.relations, u2), augmented));
}

TEST_CASE("annihilator profile of u2 in the five-line Z2OS ring") {
  auto a5 = present_z2os(hvtest::fig2a5());
  auto u2 = poly_var<GF2>(1, 6);
  auto prof = annihilator_profile(a5, u2);
  CHECK(prof.degrees == std::vector<int>{1, 1});
  CHECK(prof.generators == std::vector<std::string>{"u3", "x+u2"});
  CHECK(format_degree_multiset(prof.degrees) == "{1,1}");
}

TEST_CASE("annihilator profile rejects bad classes and flags in-ideal ones") {
  auto a = present_tds1<Rational>(hvtest::fig2a());
  CHECK_THROWS_AS(annihilator_profile(a, Poly<Rational>(5)), input_error);
  CHECK_THROWS_AS(annihilator_profile(a, vars_product<Rational>(5, {2, 2})), input_error);
  CHECK_THROWS_AS(
      annihilator_profile(a, poly_var<Rational>(1, 5) + poly_const<Rational>(5, Rational(1))),
      input_error);

  // A class lying in the ideal annihilates everything: degree-0 witness "1".
  Presentation<Rational> tiny;
  tiny.name = RingName::TD;
  tiny.vars = {"a", "b"};
  tiny.relations = {poly_var<Rational>(0, 2)};
  auto prof = annihilator_profile(tiny, poly_var<Rational>(0, 2));
  CHECK(prof.degrees == std::vector<int>{0});
  CHECK(prof.generators == std::vector<std::string>{"1"});
  CHECK(format_degree_multiset(prof.degrees) == "{0}");
}

TEST_CASE("x acts regularly on the S1 rings") {
  CHECK(x_regular(present_tds1<Rational>(hvtest::fig2a())));
  CHECK(x_regular(present_s1<Rational>(hvtest::fig2a())));
  CHECK(x_regular(present_tds1<GF2>(hvtest::fig2a())));
  CHECK(x_regular(present_z2os(hvtest::fig2a())));
  CHECK_THROWS_AS(x_regular(present_td<Rational>(hvtest::fig2a())), internal_error);
}

TEST_CASE("class_from_mask builds the F2 form named by the bits") {
  CHECK(render_poly(class_from_mask(5, 2), uvars_x(4)) == "u2");
  CHECK(render_poly(class_from_mask(5, 3), uvars_x(4)) == "u2+u1");
  CHECK(render_poly(class_from_mask(5, 16), uvars_x(4)) == "x");
  CHECK(class_from_mask(5, 1) == poly_var<GF2>(0, 5));
}

TEST_CASE("annihilator scan walks every nonzero class in mask order") {
  auto a = present_tds1<GF2>(hvtest::fig2a());
  auto scan = scan_annihilators(a);
  REQUIRE(scan.size() == 31);
  for (size_t i = 0; i < scan.size(); ++i) CHECK(scan[i].mask == i + 1);

  CHECK(scan[0].element == "u1");
  CHECK(scan[1].element == "u2");
  CHECK(scan[1].ann.degrees == std::vector<int>{1});
  CHECK(scan[1].ann.generators == std::vector<std::string>{"u3"});
  CHECK(scan[30].element == "x+u4+u3+u2+u1");

  // x is regular, so its class contributes nothing beyond the ideal.
  CHECK(scan[15].element == "x");
  CHECK(scan[15].ann.degrees.empty());
}

TEST_CASE("annihilator scan is capped at sixteen variables") {
  Presentation<GF2> big;
  big.name = RingName::OS2;
  for (int i = 1; i <= 17; ++i) big.vars.push_back("e" + std::to_string(i));
  CHECK_THROWS_AS(scan_annihilators(big), resource_error);
}

TEST_CASE("fingerprint fields for the F2 rings") {
  auto td = fingerprint(present_td<GF2>(hvtest::fig2a()));
  CHECK_FALSE(td.has_x);
  CHECK(td.scanned);
  CHECK(td.profiles.size() == 15);

  auto tds1 = fingerprint(present_tds1<GF2>(hvtest::fig2a()));
  CHECK(tds1.has_x);
  CHECK(tds1.x_regular);
  CHECK(tds1.scanned);
  CHECK(tds1.profiles.size() == 31);

  auto q = fingerprint(present_tds1<Rational>(hvtest::fig2a()));
  CHECK(q.has_x);
  CHECK(q.x_regular);
  CHECK_FALSE(q.scanned);
  CHECK(q.profiles.empty());
  CHECK(q.hilbert_numerator == tds1.hilbert_numerator);
  CHECK(q.hilbert_truncation == tds1.hilbert_truncation);
}

TEST_CASE("equal fingerprints: self and hyperplane relabeling") {
  auto fa = fingerprint(present_os2(hvtest::fig2a()));
  auto self = compare_fingerprints(fa, fa);
  CHECK_FALSE(self.distinguished);
  CHECK(self.message == "EQUAL_FINGERPRINT");

  // Same arrangement with hyperplanes 1 and 2 swapped: the class table is
  // permuted, but the profile multiset cannot tell relabelings apart.
  auto swapped = hvtest::make_arr(2, {{1, 0}, {1, 1}, {-1, 0}, {0, -1}}, {"0", "1", "-2", "-2"});
  auto fs = fingerprint(present_os2(swapped));
  auto cmp = compare_fingerprints(fa, fs);
  CHECK_FALSE(cmp.distinguished);
  CHECK(cmp.message == "EQUAL_FINGERPRINT");
}

TEST_CASE("distinguishing tds1 of the two smooth fixtures over F2") {
  auto fa = fingerprint(present_tds1<GF2>(hvtest::fig2a()));
  auto fc = fingerprint(present_tds1<GF2>(hvtest::fig2c()));
  CHECK(fa.hilbert_truncation == fc.hilbert_truncation);

  auto cmp = compare_fingerprints(fa, fc);
  CHECK(cmp.distinguished);
  CHECK(cmp.message == "DISTINGUISHED: annihilator profile {1} at class u2 present only in A");

  // No class of the translated arrangement has the bare profile {1}.
  bool c_has_profile_1 = false;
  for (const auto& p : fc.profiles)
    if (p.ann.degrees == std::vector<int>{1}) c_has_profile_1 = true;
  CHECK_FALSE(c_has_profile_1);
}

TEST_CASE("distinguishing s1 of the two smooth fixtures over F2") {
  auto fa = fingerprint(present_s1<GF2>(hvtest::fig2a()));
  auto fc = fingerprint(present_s1<GF2>(hvtest::fig2c()));
  auto cmp = compare_fingerprints(fa, fc);
  CHECK(cmp.distinguished);
  CHECK(cmp.message.rfind("DISTINGUISHED:", 0) == 0);
}

TEST_CASE("graded dimension mismatch is reported at the first degree") {
  auto fa = fingerprint(present_os2(hvtest::fig2a()));
  auto fa5 = fingerprint(present_os2(hvtest::fig2a5()));
  auto cmp = compare_fingerprints(fa, fa5);
  CHECK(cmp.distinguished);
  CHECK(cmp.message == "DISTINGUISHED: graded dimensions differ at degree 1 (4 in A, 5 in B)");
}

TEST_CASE("x-regularity mismatch is reported when hilbert data agrees") {
  // k[u,x]/(ux) and k[u,x]/(u^2) share graded dimensions 1,2,2,2,... but x
  // kills u in the first and nothing in the second.
  Presentation<Rational> torsion;
  torsion.name = RingName::TDS1;
  torsion.vars = {"u", "x"};
  torsion.x_index = 1;
  torsion.relations = {vars_product<Rational>(2, {1, 2})};

  Presentation<Rational> regular;
  regular.name = RingName::TDS1;
  regular.vars = {"u", "x"};
  regular.x_index = 1;
  regular.relations = {vars_product<Rational>(2, {1, 1})};

  auto ft = fingerprint(torsion);
  auto fr = fingerprint(regular);
  CHECK_FALSE(ft.x_regular);
  CHECK(fr.x_regular);
  auto cmp = compare_fingerprints(ft, fr);
  CHECK(cmp.distinguished);
  CHECK(cmp.message == "DISTINGUISHED: x-regularity differs (torsion in A, regular in B)");
}

TEST_CASE("numerator mismatch beyond the truncation window is still caught") {
  Presentation<Rational> nine;
  nine.vars = {"t"};
  nine.relations = {vars_product<Rational>(1, std::vector<int>(9, 1))};
  Presentation<Rational> ten;
  ten.vars = {"t"};
  ten.relations = {vars_product<Rational>(1, std::vector<int>(10, 1))};

  auto f9 = fingerprint(nine);
  auto f10 = fingerprint(ten);
  CHECK(f9.hilbert_truncation == f10.hilbert_truncation);
  auto cmp = compare_fingerprints(f9, f10);
  CHECK(cmp.distinguished);
  CHECK(cmp.message == "DISTINGUISHED: hilbert series numerators differ");
}

TEST_CASE("substitution isomorphism between the F2 equivariant rings") {
  auto a = present_z2os(hvtest::fig2a());
  auto c = present_z2os(hvtest::fig2c());

  auto images_q = parse_variable_map("u1->u1+u2, u2->u2+u3+x, u4->u2+u4", a.vars, c.vars);
  auto images = images_from_rational<GF2>(images_q);
  std::string reason;
  CHECK(verify_substitution_iso(a, c, images, &reason));
  CHECK(reason.empty());

  // The identity is not an isomorphism between these two rings.
  auto ident = images_from_rational<GF2>(parse_variable_map("", a.vars, c.vars));
  CHECK_FALSE(verify_substitution_iso(a, c, ident, &reason));
  CHECK(reason == "image of a relation is not in the target ideal");
}

TEST_CASE("substitution isomorphism between the reflected rational rings") {
  auto a = present_tds1<Rational>(hvtest::fig2a());
  auto b = present_tds1<Rational>(hvtest::fig2b());
  auto images = parse_variable_map("u2->x-u2", a.vars, b.vars);
  std::string reason;
  CHECK(verify_substitution_iso(a, b, images, &reason));
}

TEST_CASE("substitution verification rejects malformed maps") {
  auto a = present_z2os(hvtest::fig2a());
  auto c = present_z2os(hvtest::fig2c());

  // x must be fixed.
  auto moves_x = images_from_rational<GF2>(
      parse_variable_map("x->u1+x", a.vars, c.vars));
  CHECK_THROWS_AS(verify_substitution_iso(a, c, moves_x), input_error);

  // Every variable needs an image.
  std::vector<Poly<GF2>> short_images(4, poly_var<GF2>(0, 5));
  CHECK_THROWS_AS(verify_substitution_iso(a, c, short_images), input_error);

  // Ambient variables must agree.
  auto td = present_td<GF2>(hvtest::fig2a());
  std::vector<Poly<GF2>> ident4;
  for (int i = 0; i < 4; ++i) ident4.push_back(poly_var<GF2>(i, 4));
  CHECK_THROWS_AS(verify_substitution_iso(td, a, ident4), input_error);

  // Singular degree-1 matrix.
  auto singular = images_from_rational<GF2>(
      parse_variable_map("u1->u1+u2, u2->u1+u2", a.vars, a.vars));
  std::string reason;
  CHECK_FALSE(verify_substitution_iso(a, a, singular, &reason));
  CHECK(reason == "degree-1 matrix is not invertible");
}

TEST_CASE("native rendering is deterministic line-oriented text") {
  auto a = present_tds1<Rational>(hvtest::fig2a());
  CHECK(render_native(a) ==
        "ring TDS1 field Q vars u1,u2,u3,u4,x\n"
        "u2*u3\n"
        "u1*u3*u4\n"
        "u1*u4*x-u1*u2*u4\n");

  auto z = present_z2os(hvtest::fig2a());
  CHECK(render_native(z) ==
        "ring Z2OS field F2 vars u1,u2,u3,u4,x\n"
        "# over F2 each x-u form is rendered x+u\n"
        "u1*x+u1^2\n"
        "u2*u3\n"
        "u2*x+u2^2\n"
        "u3*x+u3^2\n"
        "u4*x+u4^2\n"
        "u1*u3*u4\n"
        "u1*u4*x+u1*u2*u4\n");
}

TEST_CASE("cas rendering emits a ring line and an ideal line") {
  auto td = present_td<Rational>(hvtest::fig2a());
  CHECK(render_cas(td) ==
        "R = QQ[u1,u2,u3,u4];\n"
        "I = ideal(u2*u3, u1*u2*u4, u1*u3*u4);\n");

  auto os2 = present_os2(hvtest::fig2a());
  CHECK(render_cas(os2).rfind("R = ZZ/2[e1,e2,e3,e4];\n", 0) == 0);

  Presentation<Rational> empty;
  empty.vars = {"t"};
  CHECK(render_cas(empty) == "R = QQ[t];\nI = ideal(0_R);\n");
}

TEST_CASE("presentation dispatch enforces each ring's coefficient field") {
  auto a = hvtest::fig2a();
  CHECK_THROWS_AS(build_presentation<Rational>(a, RingName::OS2), input_error);
  CHECK_THROWS_AS(build_presentation<Rational>(a, RingName::Z2OS), input_error);
  CHECK_THROWS_AS(build_presentation<GF2>(a, RingName::LAWRENCE), input_error);
  CHECK(build_presentation<GF2>(a, RingName::OS2).name == RingName::OS2);
  CHECK(build_presentation<Rational>(a, RingName::LAWRENCE).name == RingName::LAWRENCE);
}

TEST_CASE("simple but not smooth arrangements carry the advisory warning") {
  auto arr = hvtest::make_arr(2, {{1, 0}, {1, 2}}, {"0", "1"});
  auto rep = validate(arr);
  REQUIRE(rep.is_simple);
  REQUIRE_FALSE(rep.is_smooth);
  auto p = present_td<Rational>(arr);
  CHECK(p.warning == kNonSmoothWarning);
  CHECK(present_tds1<Rational>(hvtest::fig2a()).warning.empty());
}

TEST_CASE("rational coefficients reduce mod 2 only with odd denominators") {
  CHECK(gf2_from_rational(Rational(3)) == GF2(1));
  CHECK(gf2_from_rational(Rational(2, 3)) == GF2(0));
  CHECK(gf2_from_rational(Rational(1, 3)) == GF2(1));
  CHECK_THROWS_AS(gf2_from_rational(Rational(1, 2)), input_error);

  auto p = parse_linear_expression("1/3*u1-u2", uvars_x(4));
  auto q = poly_from_rational<GF2>(p);
  CHECK(render_poly(q, uvars_x(4)) == "u2+u1");
}

TEST_CASE("linear expression parser") {
  auto vars = uvars_x(4);
  CHECK(render_poly(parse_linear_expression("u1+2*u2-x", vars), vars) == "-x+2*u2+u1");
  CHECK(render_poly(parse_linear_expression("3/2*u1 - u4", vars), vars) == "-u4+3/2*u1");
  CHECK(render_poly(parse_linear_expression("-u2", vars), vars) == "-u2");
  CHECK(render_poly(parse_linear_expression("u1+u1", vars), vars) == "2*u1");
  CHECK(parse_linear_expression("2", vars) == poly_const<Rational>(5, Rational(2)));

  CHECK_THROWS_AS(parse_linear_expression("u9", vars), input_error);
  CHECK_THROWS_AS(parse_linear_expression("u1*u2", vars), input_error);
  CHECK_THROWS_AS(parse_linear_expression("u1 u2", vars), input_error);
  CHECK_THROWS_AS(parse_linear_expression("u1+%", vars), input_error);
}

TEST_CASE("variable map parser defaults unmentioned variables to namesakes") {
  auto vars = uvars_x(4);
  auto images = parse_variable_map("u1->u1+u2, u2->u2+u3+x", vars, vars);
  REQUIRE(images.size() == 5);
  CHECK(render_poly(images[0], vars) == "u2+u1");
  CHECK(render_poly(images[1], vars) == "x+u3+u2");
  CHECK(images[2] == poly_var<Rational>(2, 5));
  CHECK(images[3] == poly_var<Rational>(3, 5));
  CHECK(images[4] == poly_var<Rational>(4, 5));

  CHECK_THROWS_AS(parse_variable_map("u1->u2, u1->u3", vars, vars), input_error);
  CHECK_THROWS_AS(parse_variable_map("u1: u2", vars, vars), input_error);
  // No namesake for x on a target without it.
  CHECK_THROWS_AS(parse_variable_map("", vars, {"u1", "u2", "u3", "u4"}), input_error);
}
