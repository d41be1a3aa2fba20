#include "towercoh/delta_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace towercoh {

std::string DeltaComplex::cell_name(int d, int cell) const {
  if (d < static_cast<int>(labels.size()) && cell < static_cast<int>(labels[d].size()) &&
      !labels[d][cell].empty())
    return labels[d][cell];
  return std::to_string(d) + ":" + std::to_string(cell);
}

long long DeltaComplex::total_cells() const {
  long long t = 0;
  for (int n : counts) t += n;
  return t;
}

Validation validate_complex(const DeltaComplex& c) {
  if (c.faces.size() != c.counts.size())
    return {false, "face table has " + std::to_string(c.faces.size()) + " dimensions, counts have " +
                       std::to_string(c.counts.size())};
  for (int d = 0; d <= c.dim(); ++d) {
    if (c.counts[d] < 0) return {false, "negative cell count in dimension " + std::to_string(d)};
    if (d == 0) continue;
    if (static_cast<int>(c.faces[d].size()) != c.counts[d])
      return {false, "dimension " + std::to_string(d) + ": face table size mismatch"};
    for (int cell = 0; cell < c.counts[d]; ++cell) {
      const auto& f = c.faces[d][cell];
      if (static_cast<int>(f.size()) != d + 1)
        return {false, "cell " + c.cell_name(d, cell) + ": expected " + std::to_string(d + 1) +
                           " faces, got " + std::to_string(f.size())};
      for (int i = 0; i <= d; ++i)
        if (f[i] < 0 || f[i] >= c.counts[d - 1])
          return {false, "cell " + c.cell_name(d, cell) + ": face " + std::to_string(i) +
                             " references missing cell " + std::to_string(f[i])};
    }
  }
  for (int d = 2; d <= c.dim(); ++d)
    for (int cell = 0; cell < c.counts[d]; ++cell)
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j <= d; ++j) {
          int a = c.face(d - 1, c.face(d, cell, i), j - 1);
          int b = c.face(d - 1, c.face(d, cell, j), i);
          if (a != b)
            return {false, "cell " + c.cell_name(d, cell) + ": face identity fails at (i,j)=(" +
                               std::to_string(i) + "," + std::to_string(j) + "): " +
                               c.cell_name(d - 2, a) + " != " + c.cell_name(d - 2, b)};
        }
  return {};
}

long long euler_characteristic(const DeltaComplex& c) {
  long long chi = 0;
  for (int d = 0; d <= c.dim(); ++d) chi += (d % 2 == 0) ? c.counts[d] : -c.counts[d];
  return chi;
}

int vertex_of(const DeltaComplex& c, int d, int cell, int i) {
  while (d > 0) {
    if (i < d) {
      cell = c.face(d, cell, d);  // drop the last vertex
    } else {
      cell = c.face(d, cell, 0);  // drop vertex 0, positions shift down
      i -= 1;
    }
    --d;
  }
  return cell;
}

std::vector<int> cell_vertices(const DeltaComplex& c, int d, int cell) {
  std::vector<int> v(d + 1);
  for (int i = 0; i <= d; ++i) v[i] = vertex_of(c, d, cell, i);
  return v;
}

int edge_between(const DeltaComplex& c, int d, int cell, int i, int j) {
  if (!(0 <= i && i < j && j <= d)) throw std::invalid_argument("edge_between: need 0 <= i < j <= dim");
  while (d > 1) {
    int drop = d;  // drop the largest position not in {i, j}
    while (drop == i || drop == j) --drop;
    cell = c.face(d, cell, drop);
    if (i > drop) --i;
    if (j > drop) --j;
    --d;
  }
  return cell;
}

int edge_01(const DeltaComplex& c, int d, int cell) { return edge_between(c, d, cell, 0, 1); }

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep the smaller index as representative
    parent[b] = a;
    return true;
  }
};

}  // namespace

std::vector<int> vertex_components(const DeltaComplex& c) {
  int nv = c.count(0);
  Dsu dsu(nv);
  for (int e = 0; e < c.count(1); ++e) dsu.unite(c.face(1, e, 0), c.face(1, e, 1));
  std::vector<int> id(nv, -1);
  int next = 0;
  for (int v = 0; v < nv; ++v) {
    int r = dsu.find(v);
    if (id[r] < 0) id[r] = next++;
    id[v] = id[r];
  }
  return id;
}

int component_count(const DeltaComplex& c) {
  const auto id = vertex_components(c);
  int m = 0;
  for (int x : id) m = std::max(m, x + 1);
  return m;
}

bool Subcomplex::empty() const {
  for (const auto& dim : selected)
    for (char s : dim)
      if (s) return false;
  return true;
}

int Subcomplex::count(int d) const {
  if (d < 0 || d >= static_cast<int>(selected.size())) return 0;
  int n = 0;
  for (char s : selected[d]) n += s ? 1 : 0;
  return n;
}

Subcomplex make_empty_subcomplex(const DeltaComplex& c) {
  Subcomplex z;
  z.selected.resize(c.counts.size());
  for (int d = 0; d <= c.dim(); ++d) z.selected[d].assign(c.counts[d], 0);
  return z;
}

Subcomplex make_full_subcomplex(const DeltaComplex& c) {
  Subcomplex z = make_empty_subcomplex(c);
  for (auto& dim : z.selected) std::fill(dim.begin(), dim.end(), 1);
  return z;
}

Validation validate_subcomplex(const DeltaComplex& c, const Subcomplex& z) {
  if (z.selected.size() != c.counts.size()) return {false, "subcomplex not sized to the complex"};
  for (int d = 0; d <= c.dim(); ++d)
    if (static_cast<int>(z.selected[d].size()) != c.counts[d])
      return {false, "subcomplex not sized to the complex in dimension " + std::to_string(d)};
  for (int d = 1; d <= c.dim(); ++d)
    for (int cell = 0; cell < c.counts[d]; ++cell) {
      if (!z.selected[d][cell]) continue;
      for (int i = 0; i <= d; ++i) {
        int f = c.face(d, cell, i);
        if (!z.selected[d - 1][f])
          return {false, "subcomplex not closed under faces: " + c.cell_name(d, cell) +
                             " is selected but its face " + c.cell_name(d - 1, f) + " is not"};
      }
    }
  return {};
}

ExtractResult extract_subcomplex(const DeltaComplex& c, const Subcomplex& z) {
  Validation v = validate_subcomplex(c, z);
  if (!v.ok) throw std::invalid_argument("extract_subcomplex: " + v.message);
  int top = -1;
  for (int d = 0; d <= c.dim(); ++d)
    if (z.count(d) > 0) top = d;
  ExtractResult out;
  out.complex.counts.assign(top + 1, 0);
  out.complex.faces.resize(top + 1);
  out.complex.labels.resize(top + 1);
  out.cell_of.resize(top + 1);
  std::vector<std::vector<int>> new_id(top + 1);
  for (int d = 0; d <= top; ++d) {
    new_id[d].assign(c.counts[d], -1);
    for (int cell = 0; cell < c.counts[d]; ++cell) {
      if (!z.selected[d][cell]) continue;
      new_id[d][cell] = out.complex.counts[d]++;
      out.cell_of[d].push_back(cell);
      out.complex.labels[d].push_back(c.cell_name(d, cell));
      if (d >= 1) {
        std::vector<int> f(d + 1);
        // closure guarantees every face is selected, so new_id is set
        for (int i = 0; i <= d; ++i) f[i] = new_id[d - 1][c.face(d, cell, i)];
        out.complex.faces[d].push_back(std::move(f));
      }
    }
  }
  Validation w = validate_complex(out.complex);
  if (!w.ok) throw std::logic_error("extract_subcomplex produced an invalid complex: " + w.message);
  return out;
}

Subcomplex close_under_faces(const DeltaComplex& c, const std::vector<CellRef>& cells) {
  Subcomplex z = make_empty_subcomplex(c);
  std::vector<CellRef> stack(cells);
  while (!stack.empty()) {
    CellRef r = stack.back();
    stack.pop_back();
    if (r.dim < 0 || r.dim > c.dim() || r.index < 0 || r.index >= c.counts[r.dim])
      throw std::invalid_argument("close_under_faces: cell reference out of range");
    if (z.selected[r.dim][r.index]) continue;
    z.selected[r.dim][r.index] = 1;
    for (int i = 0; r.dim >= 1 && i <= r.dim; ++i)
      stack.push_back({r.dim - 1, c.face(r.dim, r.index, i)});
  }
  return z;
}

DeltaComplex simplicial_from_tuples(int num_vertices, const std::vector<std::vector<int>>& cells) {
  int dim = 0;
  for (const auto& t : cells) dim = std::max(dim, static_cast<int>(t.size()) - 1);
  // Collect every face of every cell, keyed by vertex tuple.
  std::vector<std::set<std::vector<int>>> tuples(dim + 1);
  std::vector<std::vector<int>> work(cells);
  for (auto& t : work) {
    if (t.empty()) throw std::invalid_argument("simplicial_from_tuples: empty cell");
    for (size_t i = 0; i + 1 < t.size(); ++i)
      if (t[i] >= t[i + 1]) throw std::invalid_argument("simplicial_from_tuples: vertices must ascend");
    if (t.front() < 0 || t.back() >= num_vertices)
      throw std::invalid_argument("simplicial_from_tuples: vertex out of range");
  }
  while (!work.empty()) {
    std::vector<int> t = work.back();
    work.pop_back();
    int d = static_cast<int>(t.size()) - 1;
    if (!tuples[d].insert(t).second) continue;
    for (int i = 0; d >= 1 && i <= d; ++i) {
      std::vector<int> f = t;
      f.erase(f.begin() + i);
      work.push_back(f);
    }
  }
  for (int v = 0; v < num_vertices; ++v) tuples[0].insert({v});

  std::vector<std::map<std::vector<int>, int>> index(dim + 1);
  DeltaComplex c;
  c.counts.resize(dim + 1);
  c.faces.resize(dim + 1);
  c.labels.resize(dim + 1);
  for (int d = 0; d <= dim; ++d) {
    int next = 0;
    for (const auto& t : tuples[d]) index[d][t] = next++;  // set order is lexicographic
    c.counts[d] = next;
  }
  for (int d = 1; d <= dim; ++d) {
    c.faces[d].resize(c.counts[d]);
    for (const auto& [t, id] : index[d]) {
      auto& f = c.faces[d][id];
      f.resize(d + 1);
      for (int i = 0; i <= d; ++i) {
        std::vector<int> sub = t;
        sub.erase(sub.begin() + i);
        f[i] = index[d - 1].at(sub);
      }
    }
  }
  return c;
}

QuotientResult quotient_complex(const DeltaComplex& c,
                                const std::vector<std::pair<CellRef, CellRef>>& glued) {
  Validation v = validate_complex(c);
  if (!v.ok) throw std::invalid_argument("quotient_complex: invalid input: " + v.message);
  std::vector<Dsu> dsu;
  dsu.reserve(c.counts.size());
  for (int d = 0; d <= c.dim(); ++d) dsu.emplace_back(c.counts[d]);

  std::vector<std::pair<CellRef, CellRef>> work(glued);
  for (const auto& [a, b] : work)
    if (a.dim != b.dim) throw std::invalid_argument("quotient_complex: glued cells differ in dimension");
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    if (a.dim < 0 || a.dim > c.dim() || a.index >= c.counts[a.dim] || b.index >= c.counts[b.dim])
      throw std::invalid_argument("quotient_complex: glued cell out of range");
    if (!dsu[a.dim].unite(a.index, b.index)) continue;
    for (int i = 0; a.dim >= 1 && i <= a.dim; ++i)
      work.push_back({{a.dim - 1, c.face(a.dim, a.index, i)}, {a.dim - 1, c.face(b.dim, b.index, i)}});
  }

  QuotientResult out;
  out.cell_map.resize(c.counts.size());
  out.complex.counts.resize(c.counts.size());
  out.complex.faces.resize(c.counts.size());
  out.complex.labels.resize(c.counts.size());
  for (int d = 0; d <= c.dim(); ++d) {
    // Representatives are minimal old indices; new ids follow old order.
    std::vector<int> reps;
    for (int i = 0; i < c.counts[d]; ++i)
      if (dsu[d].find(i) == i) reps.push_back(i);
    std::vector<int> new_id(c.counts[d], -1);
    for (int t = 0; t < static_cast<int>(reps.size()); ++t) new_id[reps[t]] = t;
    out.cell_map[d].resize(c.counts[d]);
    for (int i = 0; i < c.counts[d]; ++i) out.cell_map[d][i] = new_id[dsu[d].find(i)];
    out.complex.counts[d] = static_cast<int>(reps.size());
    if (d >= 1) {
      out.complex.faces[d].resize(reps.size());
      for (int t = 0; t < static_cast<int>(reps.size()); ++t) {
        auto& f = out.complex.faces[d][t];
        f.resize(d + 1);
        for (int i = 0; i <= d; ++i) f[i] = out.cell_map[d - 1][c.face(d, reps[t], i)];
      }
    }
    if (d < static_cast<int>(c.labels.size()) && !c.labels[d].empty()) {
      out.complex.labels[d].resize(reps.size());
      for (int t = 0; t < static_cast<int>(reps.size()); ++t)
        if (reps[t] < static_cast<int>(c.labels[d].size()))
          out.complex.labels[d][t] = c.labels[d][reps[t]];
    }
  }
  v = validate_complex(out.complex);
  if (!v.ok) throw std::logic_error("quotient_complex: result invalid: " + v.message);
  return out;
}

namespace {

// Iterated face of (d, cell) keeping only the vertex positions in keep.
CellRef subcell(const DeltaComplex& c, int d, int cell, std::vector<int> keep) {
  while (static_cast<int>(keep.size()) < d + 1) {
    int drop = d;
    while (std::find(keep.begin(), keep.end(), drop) != keep.end()) --drop;
    cell = c.face(d, cell, drop);
    --d;
    for (int& k : keep)
      if (k > drop) --k;
  }
  return {d, cell};
}

const std::vector<std::vector<int>> kEdgeSubsets = {{0}, {1}};
const std::vector<std::vector<int>> kTriangleSubsets = {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}};

}  // namespace

SubdivisionResult barycentric_subdivision(const DeltaComplex& c) {
  if (c.dim() > 2)
    throw std::invalid_argument("barycentric_subdivision: only dimensions <= 2 are supported");
  Validation v = validate_complex(c);
  if (!v.ok) throw std::invalid_argument("barycentric_subdivision: invalid input: " + v.message);

  SubdivisionResult out;
  const int dim = c.dim();
  const int nv = c.count(0), ne = c.count(1), nt = c.count(2);

  // One new vertex per old cell, ordered by (dimension, index).
  std::vector<int> vbase(dim + 1, 0);
  for (int d = 1; d <= dim; ++d) vbase[d] = vbase[d - 1] + c.counts[d - 1];
  auto bary = [&](CellRef r) { return vbase[r.dim] + r.index; };

  out.complex.counts.assign(std::max(dim, 1) + 1, 0);
  out.complex.faces.resize(out.complex.counts.size());
  out.complex.labels.resize(out.complex.counts.size());
  out.carrier.resize(out.complex.counts.size());
  out.complex.counts[0] = nv + ne + nt;
  for (int d = 0; d <= dim; ++d)
    for (int i = 0; i < c.counts[d]; ++i) out.carrier[0].push_back({d, i});

  // Edges: chains (A0 < full) carried on an old edge or triangle.
  auto& edges = out.complex.faces[1];
  for (int e = 0; e < ne; ++e)
    for (const auto& a0 : kEdgeSubsets) {
      edges.push_back({bary({1, e}), bary(subcell(c, 1, e, a0))});
      out.carrier[1].push_back({1, e});
    }
  for (int t = 0; t < nt; ++t)
    for (const auto& a0 : kTriangleSubsets) {
      edges.push_back({bary({2, t}), bary(subcell(c, 2, t, a0))});
      out.carrier[1].push_back({2, t});
    }
  out.complex.counts[1] = static_cast<int>(edges.size());

  // Triangles: chains (A0 < A1 < {0,1,2}) carried on an old triangle.
  if (dim >= 2) {
    auto& tris = out.complex.faces[2];
    auto tri_edge = [&](int t, int subset_index) { return 2 * ne + 6 * t + subset_index; };
    for (int t = 0; t < nt; ++t)
      for (int pair_idx = 3; pair_idx < 6; ++pair_idx) {
        const auto& a1 = kTriangleSubsets[pair_idx];
        for (int which = 0; which < 2; ++which) {
          int a0 = a1[which];
          CellRef mid = subcell(c, 2, t, a1);  // old edge under A1
          tris.push_back({tri_edge(t, pair_idx), tri_edge(t, a0), 2 * mid.index + which});
          out.carrier[2].push_back({2, t});
        }
      }
    out.complex.counts[2] = static_cast<int>(tris.size());
  }

  v = validate_complex(out.complex);
  if (!v.ok) throw std::logic_error("barycentric_subdivision: result invalid: " + v.message);
  return out;
}

Subcomplex subdivide_subcomplex(const SubdivisionResult& sd, const Subcomplex& z) {
  Subcomplex out = make_empty_subcomplex(sd.complex);
  for (int d = 0; d <= sd.complex.dim(); ++d)
    for (int i = 0; i < sd.complex.counts[d]; ++i) {
      CellRef carrier = sd.carrier[d][i];
      if (z.has(carrier.dim, carrier.index)) out.selected[d][i] = 1;
    }
  return out;
}

Validation check_strict_simplicial(const DeltaComplex& c) {
  for (int d = 1; d <= c.dim(); ++d) {
    std::set<std::vector<int>> seen;
    for (int cell = 0; cell < c.counts[d]; ++cell) {
      std::vector<int> verts = cell_vertices(c, d, cell);
      std::vector<int> sorted = verts;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return {false, "cell " + c.cell_name(d, cell) + " has repeated vertices"};
      if (!seen.insert(sorted).second)
        return {false, "two cells of dimension " + std::to_string(d) +
                           " share the vertex set of " + c.cell_name(d, cell)};
    }
  }
  return {};
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string stripped = line.substr(0, line.find('#'));
  std::istringstream is(stripped);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

bool is_number(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

int to_int(const std::string& s, int line) {
  if (!is_number(s)) throw ParseError(line, "expected an integer, got '" + s + "'");
  return std::stoi(s);
}

}  // namespace

ParsedComplex parse_complex_text(const std::string& text) {
  ParsedComplex out;
  DeltaComplex& c = out.complex;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  int cur_dim = -1;
  bool in_subcomplex = false;
  int subcomplex_line = 0;
  std::vector<std::map<std::string, int>> label_index;
  std::vector<std::vector<int>> cell_lines;  // for late validation messages
  std::vector<std::pair<CellRef, int>> selections;

  while (std::getline(is, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "dim") {
      if (in_subcomplex) throw ParseError(lineno, "dimension block after subcomplex block");
      if (toks.size() != 2) throw ParseError(lineno, "usage: dim <d>");
      int d = to_int(toks[1], lineno);
      if (d != cur_dim + 1)
        throw ParseError(lineno, "dimension blocks must appear in order 0,1,2,...; expected dim " +
                                     std::to_string(cur_dim + 1));
      cur_dim = d;
      c.counts.push_back(0);
      c.faces.emplace_back();
      c.labels.emplace_back();
      label_index.emplace_back();
      cell_lines.emplace_back();
      continue;
    }
    if (toks[0] == "subcomplex") {
      if (toks.size() != 1) throw ParseError(lineno, "the subcomplex line takes no arguments");
      if (in_subcomplex) throw ParseError(lineno, "duplicate subcomplex block");
      in_subcomplex = true;
      subcomplex_line = lineno;
      continue;
    }
    if (in_subcomplex) {
      if (toks.size() != 2) throw ParseError(lineno, "usage: <dim> <cell label or index>");
      int d = to_int(toks[0], lineno);
      if (d < 0 || d > cur_dim) throw ParseError(lineno, "subcomplex dimension out of range");
      int idx;
      if (is_number(toks[1])) {
        idx = to_int(toks[1], lineno);
        if (idx < 0 || idx >= c.counts[d]) throw ParseError(lineno, "cell index out of range");
      } else {
        auto it = label_index[d].find(toks[1]);
        if (it == label_index[d].end())
          throw ParseError(lineno, "unknown cell label '" + toks[1] + "' in dimension " +
                                       std::to_string(d));
        idx = it->second;
      }
      selections.push_back({{d, idx}, lineno});
      continue;
    }
    if (cur_dim < 0) throw ParseError(lineno, "cell line before any 'dim' block");
    // Cell line: label then cur_dim+1 face indices (none for vertices).
    const std::string& label = toks[0];
    int expected = (cur_dim == 0) ? 0 : cur_dim + 1;
    if (static_cast<int>(toks.size()) != 1 + expected)
      throw ParseError(lineno, "cell in dimension " + std::to_string(cur_dim) + " needs " +
                                   std::to_string(expected) + " face indices");
    if (label != "_") {
      if (is_number(label)) throw ParseError(lineno, "cell labels must not be numeric");
      if (!label_index[cur_dim].insert({label, c.counts[cur_dim]}).second)
        throw ParseError(lineno, "duplicate cell label '" + label + "'");
    }
    std::vector<int> f;
    for (int i = 0; i < expected; ++i) {
      int ref = to_int(toks[1 + i], lineno);
      if (ref < 0 || ref >= c.counts[cur_dim - 1])
        throw ParseError(lineno, "face index " + std::to_string(ref) +
                                     " out of range for dimension " + std::to_string(cur_dim - 1));
      f.push_back(ref);
    }
    if (cur_dim >= 1) c.faces[cur_dim].push_back(f);
    c.labels[cur_dim].push_back(label == "_" ? "" : label);
    cell_lines[cur_dim].push_back(lineno);
    c.counts[cur_dim] += 1;
  }

  Validation v = validate_complex(c);
  if (!v.ok) {
    // Attribute the failure to the last cell line if we cannot do better.
    int where = lineno;
    if (!cell_lines.empty() && !cell_lines.back().empty()) where = cell_lines.back().back();
    throw ParseError(where, v.message);
  }
  if (in_subcomplex) {
    out.subcomplex = make_empty_subcomplex(c);
    for (const auto& [ref, ln] : selections) out.subcomplex.selected[ref.dim][ref.index] = 1;
    Validation sv = validate_subcomplex(c, out.subcomplex);
    if (!sv.ok) throw ParseError(subcomplex_line, sv.message);
    out.has_subcomplex = true;
  } else {
    out.subcomplex = make_empty_subcomplex(c);
  }
  return out;
}

}  // namespace towercoh
