#include "towercoh/limits.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace towercoh {

namespace {

std::string chain_dump(const std::vector<ModuleShape>& shapes) {
  std::ostringstream os;
  for (size_t r = 0; r < shapes.size(); ++r)
    os << (r ? ", " : "") << "r=" << r << ": " << shapes[r].to_string();
  return os.str();
}

// Every column of a inside the submodule spanned by b.
bool submodule_leq(const ModuleShape& ambient, const MatZ& a, const MatZ& b) {
  LatticeTester t(submodule_lattice(ambient, b));
  std::vector<bigint> col(ambient.rank());
  for (int j = 0; j < a.cols; ++j) {
    for (int r = 0; r < a.rows; ++r) col[r] = a.at(r, j);
    if (!t.contains(col)) return false;
  }
  return true;
}

void pad_to_dimension(CochainComplex& cx, int dim) {
  while (cx.dim() < dim) {
    int top_rank = cx.cochain_rank(cx.dim());
    cx.d_int.push_back(MatZ(0, top_rank));
    cx.d.push_back(MatMod(0, top_rank));
    cx.active.push_back({});
  }
}

}  // namespace

ColimitResult stabilize_chain(int degree, const Zps& ring, std::vector<ModuleShape> shapes,
                              std::vector<ModuleMap> maps) {
  if (shapes.empty() || maps.size() + 1 != shapes.size())
    throw std::invalid_argument("stabilize_chain: need shapes for levels 0..R and R maps");
  int R = static_cast<int>(maps.size());
  for (int r = 0; r < R; ++r)
    if (!(maps[r].src == shapes[r]) || !(maps[r].tgt == shapes[r + 1]))
      throw std::invalid_argument("stabilize_chain: map endpoints do not match the shapes");

  ColimitResult out;
  out.degree = degree;
  out.ring = ring;
  out.R = R;
  out.shapes = std::move(shapes);
  out.maps = std::move(maps);
  out.value.p = ring.p;

  bool all_trivial = true;
  for (const ModuleShape& sh : out.shapes) all_trivial = all_trivial && sh.trivial();
  if (all_trivial) {
    out.flag = "certified-iso";
    out.r0 = 0;
    return out;
  }

  // Composites into the top level; their images can only grow with r.
  std::vector<ModuleMap> comp(R + 1);
  comp[R] = ModuleMap{out.shapes[R], out.shapes[R], MatZ::identity(out.shapes[R].rank())};
  for (int r = R - 1; r >= 0; --r) comp[r] = map_compose(comp[r + 1], out.maps[r]);
  for (int r = 0; r < R; ++r)
    if (!submodule_leq(out.shapes[R], comp[r].f, comp[r + 1].f))
      throw std::logic_error("stabilize_chain: image chain is not ascending, degree " +
                             std::to_string(degree) + ", level " + std::to_string(r));

  for (int r0 = 0; r0 + 2 <= R; ++r0) {
    if (!map_is_iso(out.maps[r0]) || !map_is_iso(out.maps[r0 + 1])) continue;
    for (int r = r0; r < R; ++r)
      if (!map_is_iso(out.maps[r])) {
        std::ostringstream os;
        os << "stabilization soundness violated in degree " << degree << ": transitions "
           << r0 << " and " << r0 + 1 << " are isomorphisms but transition " << r
           << " is not; chain " << chain_dump(out.shapes);
        throw std::logic_error(os.str());
      }
    out.flag = "certified-iso";
    out.r0 = r0;
    out.value = out.shapes[r0];
    return out;
  }

  for (int r0 = 0; r0 + 2 <= R; ++r0) {
    if (!submodule_equal(out.shapes[R], comp[r0].f, comp[r0 + 1].f)) continue;
    out.flag = "certified-image";
    out.r0 = r0;
    out.value = image_decomposition(comp[r0]);
    return out;
  }

  if (R >= 2 && map_is_zero(comp[0])) {
    out.flag = "certified-zero";
    out.r0 = 0;
    return out;
  }

  return out;
}

ColimitResult colimit_cohomology(const FlatDescriptor& fd, int n, const Zps& ring, int R,
                                 const Subcomplex* rel) {
  if (n < 0) throw std::invalid_argument("colimit_cohomology: negative degree");
  if (R < 0) throw std::invalid_argument("colimit_cohomology: negative level bound");
  if (R > fd.tower.depth)
    throw std::invalid_argument("colimit_cohomology: level bound " + std::to_string(R) +
                                " exceeds the tower depth " + std::to_string(fd.tower.depth));
  std::vector<ModuleShape> shapes;
  std::vector<ModuleMap> maps;
  if (n > fd.complex.dim()) {
    ModuleShape t{ring.p, {}};
    shapes.assign(R + 1, t);
    maps.assign(R, ModuleMap{t, t, MatZ(0, 0)});
  } else {
    std::vector<CohomologyResult> h;
    h.reserve(R + 1);
    for (int r = 0; r <= R; ++r) {
      h.push_back(cohomology(twisted_complex(fd, r, ring, rel), n));
      shapes.push_back(h.back().shape);
    }
    for (int r = 0; r < R; ++r)
      maps.push_back(induced_map(h[r], h[r + 1], transition_matrix(fd, r, ring, n, rel)));
  }
  return stabilize_chain(n, ring, std::move(shapes), std::move(maps));
}

std::string DegreeReport::reconstruction() const {
  if (confidence == "not-stabilized") return "not-stabilized";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z_" << p;
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (int b : torsion) {
    if (!first) os << " + ";
    long long q = 1;
    for (int k = 0; k < b; ++k) q *= p;
    os << "Z/" << q;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

const DegreeReport* CompletedReport::find(int degree) const {
  for (const DegreeReport& d : degrees)
    if (d.degree == degree) return &d;
  return nullptr;
}

CompletedReport completed_cohomology(const FlatDescriptor& fd, const std::vector<int>& degrees,
                                     int S, int R, const Subcomplex* rel) {
  if (S < 1) throw std::invalid_argument("completed_cohomology: need S >= 1");
  CompletedReport rep;
  rep.p = fd.tower.p;
  rep.S = S;
  rep.R = R;
  for (int n : degrees) {
    DegreeReport dr;
    dr.degree = n;
    dr.p = rep.p;
    bool all_certified = true;
    for (int s = 1; s <= S; ++s) {
      dr.per_s.push_back(colimit_cohomology(fd, n, Zps(rep.p, s), R, rel));
      all_certified = all_certified && dr.per_s.back().certified();
    }
    if (all_certified) {
      for (int e : dr.per_s[S - 1].value.exps) {
        if (e >= S)
          ++dr.free_rank;
        else
          dr.torsion.push_back(e);
      }
      // The guess must reduce to the stabilized value at every precision.
      bool consistent = true;
      for (int s = 1; s <= S && consistent; ++s) {
        std::vector<int> want;
        for (int i = 0; i < dr.free_rank; ++i) want.push_back(s);
        for (int b : dr.torsion) want.push_back(std::min(b, s));
        std::sort(want.begin(), want.end());
        consistent = (want == dr.per_s[s - 1].value.exps);
      }
      dr.confidence = consistent ? "certified" : "inconsistent";
    }
    rep.degrees.push_back(std::move(dr));
  }
  return rep;
}

namespace {

void check_les_node(LesReport& rep, int level, int degree, const char* column,
                    const ModuleShape& middle, const ModuleMap& in, const ModuleMap& out) {
  MatZ ker = kernel_generators(out);
  LesNodeCheck c;
  c.level = level;
  c.degree = degree;
  c.column = column;
  c.exact = submodule_equal(middle, in.f, ker);
  if (!c.exact) {
    std::ostringstream os;
    os << "image " << submodule_decomposition(middle, in.f).to_string() << " != kernel "
       << submodule_decomposition(middle, ker).to_string() << " inside " << middle.to_string();
    c.detail = os.str();
    rep.all_exact = false;
  }
  rep.checks.push_back(std::move(c));
}

}  // namespace

LesReport les_check(const FlatDescriptor& fd, const Subcomplex& z, const Zps& ring, int R) {
  Validation zv = validate_subcomplex(fd.complex, z);
  if (!zv.ok) throw std::invalid_argument("les_check: " + zv.message);
  if (R < 0 || R > fd.tower.depth)
    throw std::invalid_argument("les_check: level bound out of range");

  LesReport rep;
  rep.ring = ring;
  rep.R = R;
  rep.connecting.resize(R + 1);

  int D = fd.complex.dim();
  ExtractResult ex = extract_subcomplex(fd.complex, z);
  FlatDescriptor bfd;
  bfd.complex = ex.complex;
  bfd.tower = fd.tower;
  if (ex.complex.dim() >= 1)
    for (int e : ex.cell_of[1]) bfd.labels.push_back(fd.labels[e]);

  ModuleShape trivial{ring.p, {}};
  std::vector<std::vector<ModuleShape>> shR(D + 1), shA(D + 1), shB(D + 1);
  std::vector<std::vector<ModuleMap>> mpR(D + 1), mpA(D + 1), mpB(D + 1);
  std::vector<CohomologyResult> prevR, prevA, prevB;

  for (int r = 0; r <= R; ++r) {
    CochainComplex cxA = twisted_complex(fd, r, ring);
    CochainComplex cxR = twisted_complex(fd, r, ring, &z);
    CochainComplex cxB = twisted_complex(bfd, r, ring);
    pad_to_dimension(cxB, D);
    int B = cxA.block;

    // Extension fills relative cochains into absolute coordinates;
    // restriction keeps the subcomplex coordinates. Both commute with the
    // differentials because the subcomplex is closed under faces.
    std::vector<MatMod> E(D + 1), Rm(D + 1);
    for (int n = 0; n <= D; ++n) {
      E[n] = MatMod(cxA.cochain_rank(n), cxR.cochain_rank(n));
      for (int i = 0; i < static_cast<int>(cxR.active[n].size()); ++i) {
        int c = cxR.active[n][i];
        for (int x = 0; x < B; ++x) E[n].at(c * B + x, i * B + x) = 1;
      }
      Rm[n] = MatMod(cxB.cochain_rank(n), cxA.cochain_rank(n));
      int bcells = n < static_cast<int>(ex.cell_of.size())
                       ? static_cast<int>(ex.cell_of[n].size())
                       : 0;
      for (int k = 0; k < bcells; ++k) {
        int c = ex.cell_of[n][k];
        for (int x = 0; x < B; ++x) Rm[n].at(k * B + x, c * B + x) = 1;
      }
    }
    Validation ve = check_chain_map(cxR, cxA, E);
    if (!ve.ok) throw std::logic_error("les_check: extension is not a chain map: " + ve.message);
    Validation vr = check_chain_map(cxA, cxB, Rm);
    if (!vr.ok) throw std::logic_error("les_check: restriction is not a chain map: " + vr.message);

    std::vector<CohomologyResult> hR, hA, hB;
    for (int n = 0; n <= D; ++n) {
      hR.push_back(cohomology(cxR, n));
      hA.push_back(cohomology(cxA, n));
      hB.push_back(cohomology(cxB, n));
      shR[n].push_back(hR[n].shape);
      shA[n].push_back(hA[n].shape);
      shB[n].push_back(hB[n].shape);
    }

    std::vector<ModuleMap> Estar(D + 1), Rstar(D + 1), delta(D + 1);
    for (int n = 0; n <= D; ++n) {
      Estar[n] = induced_map(hR[n], hA[n], E[n]);
      Rstar[n] = induced_map(hA[n], hB[n], Rm[n]);
    }
    for (int n = 0; n <= D; ++n) {
      if (n == D) {
        delta[n] = ModuleMap{hB[n].shape, trivial, MatZ(0, hB[n].shape.rank())};
        continue;
      }
      // Connecting map: extend a boundary cocycle by zero, differentiate in
      // the absolute complex, land in relative coordinates.
      ModuleMap dm;
      dm.src = hB[n].shape;
      dm.tgt = hR[n + 1].shape;
      dm.f = MatZ(dm.tgt.rank(), dm.src.rank());
      int bcells = n < static_cast<int>(ex.cell_of.size())
                       ? static_cast<int>(ex.cell_of[n].size())
                       : 0;
      for (int t = 0; t < static_cast<int>(hB[n].generators.size()); ++t) {
        std::vector<long long> zext(cxA.cochain_rank(n), 0);
        for (int k = 0; k < bcells; ++k)
          for (int x = 0; x < B; ++x)
            zext[ex.cell_of[n][k] * B + x] = hB[n].generators[t][k * B + x];
        std::vector<long long> y = mat_apply(cxA.d[n], zext, ring);
        std::vector<long long> yrel(cxR.cochain_rank(n + 1), 0);
        for (int i = 0; i < static_cast<int>(cxR.active[n + 1].size()); ++i) {
          int c = cxR.active[n + 1][i];
          for (int x = 0; x < B; ++x) yrel[i * B + x] = y[c * B + x];
        }
        std::vector<long long> coords = project_cocycle(hR[n + 1], yrel);
        for (size_t i = 0; i < coords.size(); ++i)
          dm.f.at(static_cast<int>(i), t) = coords[i];
      }
      if (!map_well_defined(dm))
        throw std::logic_error("les_check: connecting map not well defined at degree " +
                               std::to_string(n) + ", level " + std::to_string(r));
      delta[n] = std::move(dm);
    }
    rep.connecting[r] = delta;

    for (int n = 0; n <= D; ++n) {
      ModuleMap zero_in{trivial, hR[n].shape, MatZ(hR[n].shape.rank(), 0)};
      check_les_node(rep, r, n, "relative", hR[n].shape, n == 0 ? zero_in : delta[n - 1],
                     Estar[n]);
      check_les_node(rep, r, n, "absolute", hA[n].shape, Estar[n], Rstar[n]);
      check_les_node(rep, r, n, "boundary", hB[n].shape, Rstar[n], delta[n]);
    }

    if (r >= 1) {
      for (int n = 0; n <= D; ++n) {
        mpA[n].push_back(induced_map(prevA[n], hA[n], transition_matrix(fd, r - 1, ring, n)));
        mpR[n].push_back(induced_map(prevR[n], hR[n], transition_matrix(fd, r - 1, ring, n, &z)));
        MatMod tb = n <= ex.complex.dim() ? transition_matrix(bfd, r - 1, ring, n) : MatMod(0, 0);
        mpB[n].push_back(induced_map(prevB[n], hB[n], tb));
      }
    }
    prevR = std::move(hR);
    prevA = std::move(hA);
    prevB = std::move(hB);
  }

  for (int n = 0; n <= D; ++n) {
    rep.relative.push_back(stabilize_chain(n, ring, shR[n], mpR[n]));
    rep.absolute.push_back(stabilize_chain(n, ring, shA[n], mpA[n]));
    rep.boundary.push_back(stabilize_chain(n, ring, shB[n], mpB[n]));
  }
  return rep;
}

ExciseResult excise_reduce(const FlatDescriptor& fd, int S, int R) {
  Validation v = validate_descriptor(fd);
  if (!v.ok) throw std::invalid_argument("excise_reduce: " + v.message);
  if (S < 1 || R < 0 || R > fd.tower.depth)
    throw std::invalid_argument("excise_reduce: bounds out of range");

  ExciseResult out;
  out.sub = label_closure(fd);
  out.sub_tower = subtower_as_tower(fd.tower, out.sub);
  out.identity = subtower_is_full(fd.tower, out.sub);
  out.reduced.complex = fd.complex;
  out.reduced.tower = out.sub_tower;
  for (const TowerElement& e : fd.labels)
    out.reduced.labels.push_back(element_in_subtower(fd.tower, out.sub, e));

  for (int s = 1; s <= S; ++s) {
    Zps ring(fd.tower.p, s);
    for (int r = 0; r <= R; ++r) {
      long long index = subtower_index(fd.tower, out.sub, r);
      CochainComplex cf = twisted_complex(fd, r, ring);
      CochainComplex cr = twisted_complex(out.reduced, r, ring);
      for (int n = 0; n <= fd.complex.dim(); ++n) {
        ExciseEntry e;
        e.degree = n;
        e.r = r;
        e.s = s;
        e.index = index;
        e.full = cohomology(cf, n).shape;
        e.reduced = cohomology(cr, n).shape;
        std::vector<int> want;
        for (int b : e.reduced.exps)
          for (long long t = 0; t < index; ++t) want.push_back(b);
        e.match = (want == e.full.exps);
        out.certified = out.certified && e.match;
        out.certificate.push_back(std::move(e));
      }
    }
  }
  return out;
}

CollapseVerdict nilpotent_collapse_check(const FlatDescriptor& fd, const SubTower& normal,
                                         const FlatDescriptor& quotient_fd,
                                         const std::vector<int>& degrees, int S, int R) {
  Validation nv = check_normal(fd.tower, normal);
  if (!nv.ok) throw std::invalid_argument("nilpotent_collapse_check: " + nv.message);
  int depth = std::min(fd.tower.depth, quotient_fd.tower.depth);
  for (int r = 0; r <= depth; ++r) {
    long long sub_order = static_cast<long long>(normal.members[r].size());
    if (quotient_fd.tower.order(r) * sub_order != fd.tower.order(r))
      throw std::invalid_argument(
          "nilpotent_collapse_check: quotient tower order mismatch at level " + std::to_string(r));
  }

  CollapseVerdict out;
  out.full = completed_cohomology(fd, degrees, S, R);
  out.quotient = completed_cohomology(quotient_fd, degrees, S, R);
  for (size_t i = 0; i < degrees.size(); ++i) {
    const DegreeReport& a = out.full.degrees[i];
    const DegreeReport& b = out.quotient.degrees[i];
    CollapseDegree cd;
    cd.degree = degrees[i];
    cd.full_reconstruction = a.reconstruction();
    cd.quotient_reconstruction = b.reconstruction();
    for (int s = 1; s <= S; ++s) {
      const ColimitResult& ca = a.per_s[s - 1];
      const ColimitResult& cb = b.per_s[s - 1];
      if (!ca.certified() || !cb.certified()) {
        out.complete = false;
        continue;
      }
      cd.compared_s.push_back(s);
      if (!(ca.value == cb.value)) cd.equal = false;
    }
    if (!cd.equal) out.equal = false;
    out.degrees.push_back(std::move(cd));
  }
  return out;
}

DefectReport defect_estimate(const FlatDescriptor& fd, const std::vector<int>& generator_edges,
                             int tower_rank, int S, int R) {
  if (R < 1 || R > fd.tower.depth)
    throw std::invalid_argument("defect_estimate: level bound out of range");
  int d = static_cast<int>(generator_edges.size());
  if (d < 1) throw std::invalid_argument("defect_estimate: need the circle directions");
  if (tower_rank < 1) throw std::invalid_argument("defect_estimate: need the tower rank");

  DefectReport out;
  Zps ring(fd.tower.p, R);
  MatMod lm(tower_rank, d);
  for (int j = 0; j < d; ++j) {
    int e = generator_edges[j];
    if (e < 0 || e >= fd.complex.count(1))
      throw std::invalid_argument("defect_estimate: edge index out of range");
    long long x = fd.label_at(e, R);
    // lexicographic base-p^R digits, first coordinate highest
    std::vector<long long> coords(tower_rank);
    long long rest = x;
    for (int i = tower_rank - 1; i >= 0; --i) {
      coords[i] = rest % ring.q;
      rest /= ring.q;
    }
    if (abelian_element(fd.tower, coords).level_index[R] != fd.label_at(e, R))
      throw std::invalid_argument("defect_estimate: tower is not abelian of the declared rank");
    for (int i = 0; i < tower_rank; ++i) lm.at(i, j) = coords[i];
  }
  SmithZps sm = smith_zps(lm, ring, false);
  int rank = 0;
  for (int a : sm.diag_val) {
    out.label_valuations.push_back(a);
    if (a < R) ++rank;
  }
  out.algebraic = d - rank;

  std::vector<int> degs;
  for (int n = 0; n <= fd.complex.dim(); ++n) degs.push_back(n);
  out.completed = completed_cohomology(fd, degs, S, R);
  out.all_certified = true;
  for (const DegreeReport& dr : out.completed.degrees) {
    if (!dr.certified()) {
      out.all_certified = false;
      continue;
    }
    if (dr.nonzero()) out.cohomological = std::max(out.cohomological, dr.degree);
  }
  out.lower_bound = !out.all_certified;
  if (out.all_certified) {
    out.agree = (out.cohomological == out.algebraic);
    out.defect = out.cohomological;
  } else {
    out.agree = false;
    out.defect = out.algebraic;
  }
  return out;
}

std::vector<TransferCheck> top_degree_transfer(const FlatDescriptor& fd, const Zps& ring, int R) {
  if (R < 1 || R > fd.tower.depth)
    throw std::invalid_argument("top_degree_transfer: level bound out of range");
  int n = fd.complex.dim();
  std::vector<TransferCheck> out;
  CohomologyResult prev = cohomology(twisted_complex(fd, 0, ring), n);
  for (int r = 0; r < R; ++r) {
    CohomologyResult next = cohomology(twisted_complex(fd, r + 1, ring), n);
    std::vector<int> cyclic{ring.s};
    if (prev.shape.exps != cyclic || next.shape.exps != cyclic)
      throw std::invalid_argument(
          "top_degree_transfer: top cohomology is not cyclic of full precision");
    ModuleMap m = induced_map(prev, next, transition_matrix(fd, r, ring, n));
    TransferCheck t;
    t.r = r;
    t.index = fd.tower.order(r + 1) / fd.tower.order(r);
    long long idx = t.index;
    int vi = 0;
    while (idx % ring.p == 0) {
      idx /= ring.p;
      ++vi;
    }
    t.expected = std::min(ring.s, vi);
    bigint e = m.f.at(0, 0) % ring.q;
    if (e < 0) e += ring.q;
    t.entry_valuation = ring.valuation(static_cast<long long>(e));
    t.ok = (t.entry_valuation == t.expected);
    out.push_back(t);
    prev = std::move(next);
  }
  return out;
}

}  // namespace towercoh
