#include "doctest.h"
#include "towercoh/builtin.hpp"
#include "towercoh/delta_complex.hpp"

using namespace towercoh;

TEST_CASE("standard complexes validate") {
  for (const DeltaComplex& c : {make_circle_complex(), make_torus_complex(), make_cylinder_complex()}) {
    CHECK(validate_complex(c).ok);
    CHECK(euler_characteristic(c) == 0);
    CHECK(component_count(c) == 1);
  }
  CHECK(euler_characteristic(make_solid_triangle()) == 1);
}

TEST_CASE("validation catches malformed complexes") {
  DeltaComplex bad = make_circle_complex();
  bad.faces[1][0][1] = 3;  // dangling vertex reference
  Validation v = validate_complex(bad);
  CHECK(!v.ok);
  CHECK(v.message.find("missing cell") != std::string::npos);

  // Triangle whose faces cannot come from a consistent vertex ordering.
  DeltaComplex twist;
  twist.counts = {2, 2, 1};
  twist.faces.resize(3);
  twist.faces[1] = {{1, 0}, {0, 1}};  // a: x->y, b: y->x
  twist.faces[2] = {{0, 0, 0}};
  Validation tv = validate_complex(twist);
  CHECK(!tv.ok);
  CHECK(tv.message.find("face identity") != std::string::npos);
}

TEST_CASE("vertex and edge resolution") {
  DeltaComplex cyl = make_cylinder_complex();
  // T1 spans (x, x, y); T2 spans (x, y, y).
  CHECK(cell_vertices(cyl, 2, 0) == std::vector<int>{0, 0, 1});
  CHECK(cell_vertices(cyl, 2, 1) == std::vector<int>{0, 1, 1});
  CHECK(edge_01(cyl, 2, 0) == 0);           // a
  CHECK(edge_between(cyl, 2, 0, 0, 2) == 3);  // d
  CHECK(edge_between(cyl, 2, 0, 1, 2) == 2);  // m
  CHECK(edge_01(cyl, 2, 1) == 2);           // m
  CHECK(vertex_of(cyl, 1, 2, 0) == 0);
  CHECK(vertex_of(cyl, 1, 2, 1) == 1);
}

TEST_CASE("components") {
  DeltaComplex two;
  two.counts = {2, 2};
  two.faces.resize(2);
  two.faces[1] = {{0, 0}, {1, 1}};
  CHECK(component_count(two) == 2);
  auto ids = vertex_components(two);
  CHECK(ids[0] == 0);
  CHECK(ids[1] == 1);
}

TEST_CASE("subcomplexes") {
  DeltaComplex cyl = make_cylinder_complex();
  Subcomplex z = cylinder_boundary(cyl);
  CHECK(validate_subcomplex(cyl, z).ok);
  CHECK(z.count(0) == 2);
  CHECK(z.count(1) == 2);
  CHECK(z.count(2) == 0);
  CHECK(z.has(1, 0));
  CHECK(z.has(1, 1));
  CHECK(!z.has(1, 2));

  Subcomplex open = make_empty_subcomplex(cyl);
  open.selected[1][0] = 1;  // edge without its vertex
  Validation v = validate_subcomplex(cyl, open);
  CHECK(!v.ok);
  CHECK(v.message.find("closed under faces") != std::string::npos);

  CHECK(validate_subcomplex(cyl, make_full_subcomplex(cyl)).ok);
  CHECK(make_empty_subcomplex(cyl).empty());
}

TEST_CASE("simplicial construction from tuples") {
  DeltaComplex solid = make_solid_triangle();
  CHECK(solid.counts == std::vector<int>{3, 3, 1});
  CHECK(validate_complex(solid).ok);
  CHECK(check_strict_simplicial(solid).ok);
  CHECK(cell_vertices(solid, 2, 0) == std::vector<int>{0, 1, 2});

  DeltaComplex hollow = make_hollow_triangle();
  CHECK(hollow.counts == std::vector<int>{3, 3});
  CHECK(euler_characteristic(hollow) == 0);
  CHECK(check_strict_simplicial(hollow).ok);
}

TEST_CASE("strictness gate rejects identifications") {
  CHECK(!check_strict_simplicial(make_torus_complex()).ok);

  DeltaComplex doubled;  // two distinct edges on the same two vertices
  doubled.counts = {2, 2};
  doubled.faces.resize(2);
  doubled.faces[1] = {{1, 0}, {1, 0}};
  Validation v = check_strict_simplicial(doubled);
  CHECK(!v.ok);
  CHECK(v.message.find("share the vertex set") != std::string::npos);
}

TEST_CASE("quotient of the square is the torus") {
  // Square: vertices bl=0, br=1, tl=2, tr=3.
  DeltaComplex sq = simplicial_from_tuples(4, {{0, 1, 3}, {0, 2, 3}});
  CHECK(validate_complex(sq).ok);
  // Edge ids are lexicographic: 01=0, 02=1, 03=2, 13=3, 23=4.
  QuotientResult q = quotient_complex(sq, {{{1, 0}, {1, 4}}, {{1, 1}, {1, 3}}});
  CHECK(q.complex.counts == std::vector<int>{1, 3, 2});
  CHECK(euler_characteristic(q.complex) == 0);
  CHECK(validate_complex(q.complex).ok);
  for (int v = 0; v < 4; ++v) CHECK(q.cell_map[0][v] == 0);
  CHECK(q.cell_map[1][0] == q.cell_map[1][4]);
  CHECK(q.cell_map[1][1] == q.cell_map[1][3]);
}

TEST_CASE("heisenberg cube quotient") {
  DeltaComplex h = make_heisenberg_complex();
  CHECK(h.counts == std::vector<int>{1, 7, 12, 6});
  CHECK(euler_characteristic(h) == 0);
  CHECK(validate_complex(h).ok);
  CHECK(component_count(h) == 1);
}

TEST_CASE("barycentric subdivision") {
  DeltaComplex circle = make_circle_complex();
  SubdivisionResult sd = barycentric_subdivision(circle);
  CHECK(sd.complex.counts == std::vector<int>{2, 2});
  CHECK(euler_characteristic(sd.complex) == 0);
  CHECK(!check_strict_simplicial(sd.complex).ok);
  SubdivisionResult sd2 = barycentric_subdivision(sd.complex);
  CHECK(sd2.complex.counts == std::vector<int>{4, 4});
  CHECK(check_strict_simplicial(sd2.complex).ok);

  SubdivisionResult st = barycentric_subdivision(make_torus_complex());
  CHECK(st.complex.counts == std::vector<int>{6, 18, 12});
  CHECK(euler_characteristic(st.complex) == 0);
  CHECK(validate_complex(st.complex).ok);

  SubdivisionResult ss = barycentric_subdivision(make_solid_triangle());
  CHECK(ss.complex.counts == std::vector<int>{7, 12, 6});
  CHECK(euler_characteristic(ss.complex) == 1);
  CHECK(check_strict_simplicial(ss.complex).ok);
}

TEST_CASE("subdivision transports subcomplexes") {
  DeltaComplex solid = make_solid_triangle();
  Subcomplex boundary = close_under_faces(solid, {{1, 0}, {1, 1}, {1, 2}});
  SubdivisionResult sd = barycentric_subdivision(solid);
  Subcomplex sdz = subdivide_subcomplex(sd, boundary);
  CHECK(validate_subcomplex(sd.complex, sdz).ok);
  CHECK(sdz.count(0) == 6);
  CHECK(sdz.count(1) == 6);
  CHECK(sdz.count(2) == 0);
}

TEST_CASE("complex text parsing") {
  const std::string torus_text = R"(
# square torus
dim 0
v
dim 1
a 0 0
b 0 0
d 0 0
dim 2
T1 1 2 0
T2 0 2 1
subcomplex
0 v
1 a
)";
  ParsedComplex p = parse_complex_text(torus_text);
  CHECK(p.complex.counts == std::vector<int>{1, 3, 2});
  CHECK(validate_complex(p.complex).ok);
  CHECK(p.has_subcomplex);
  CHECK(p.subcomplex.has(1, 0));
  CHECK(p.subcomplex.count(1) == 1);
  CHECK(p.complex.cell_name(1, 2) == "d");

  CHECK_THROWS_WITH_AS(parse_complex_text("dim 1\n"), "line 1: dimension blocks must appear in order 0,1,2,...; expected dim 0",
                       ParseError);
  CHECK_THROWS_AS(parse_complex_text("dim 0\n12\n"), ParseError);
  CHECK_THROWS_AS(parse_complex_text("dim 0\nv\ndim 1\ne 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_complex_text("dim 0\nv\nv\n"), ParseError);
  CHECK_THROWS_AS(parse_complex_text("dim 0\nv\ndim 1\ne 0 0\nsubcomplex\n1 e\n"), ParseError);
  CHECK_THROWS_AS(parse_complex_text("dim 0\nv\nsubcomplex\n0 w\n"), ParseError);

  try {
    parse_complex_text("dim 0\nv\ndim 1\ne 0 2\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
  }
}

TEST_CASE("unnamed cells") {
  ParsedComplex p = parse_complex_text("dim 0\n_\n_\ndim 1\n_ 0 1\n");
  CHECK(p.complex.counts == std::vector<int>{2, 1});
  CHECK(p.complex.cell_name(0, 1) == "0:1");
}
