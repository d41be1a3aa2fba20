#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace towercoh {

struct CellRef {
  int dim = 0;
  int index = 0;
  bool operator==(const CellRef&) const = default;
};

// Cells are dense integers per dimension. For an n-cell (n >= 1) the face
// list has n+1 entries; entry i is the (n-1)-cell opposite vertex i.
struct DeltaComplex {
  std::vector<int> counts;                           // counts[d]
  std::vector<std::vector<std::vector<int>>> faces;  // faces[d][cell][i], d >= 1
  std::vector<std::vector<std::string>> labels;      // optional names per cell

  int dim() const { return static_cast<int>(counts.size()) - 1; }
  int count(int d) const { return (d >= 0 && d <= dim()) ? counts[d] : 0; }
  int face(int d, int cell, int i) const { return faces[d][cell][i]; }
  std::string cell_name(int d, int cell) const;
  long long total_cells() const;
};

struct Validation {
  bool ok = true;
  std::string message;
};

Validation validate_complex(const DeltaComplex& c);
long long euler_characteristic(const DeltaComplex& c);

// Vertex i of a cell, resolved through iterated faces.
int vertex_of(const DeltaComplex& c, int d, int cell, int i);
std::vector<int> cell_vertices(const DeltaComplex& c, int d, int cell);
// The edge of a cell spanned by vertices i < j of that cell.
int edge_between(const DeltaComplex& c, int d, int cell, int i, int j);
int edge_01(const DeltaComplex& c, int d, int cell);

std::vector<int> vertex_components(const DeltaComplex& c);  // dense ids from 0
int component_count(const DeltaComplex& c);

struct Subcomplex {
  std::vector<std::vector<char>> selected;  // sized like the owning complex

  bool has(int d, int cell) const {
    return d >= 0 && d < static_cast<int>(selected.size()) && selected[d][cell] != 0;
  }
  bool empty() const;
  int count(int d) const;
};

Subcomplex make_empty_subcomplex(const DeltaComplex& c);
Subcomplex make_full_subcomplex(const DeltaComplex& c);
Validation validate_subcomplex(const DeltaComplex& c, const Subcomplex& z);
Subcomplex close_under_faces(const DeltaComplex& c, const std::vector<CellRef>& cells);

// Build a strict simplicial complex from cells given as ascending vertex
// tuples; all faces are generated and deduplicated by vertex set. Cells are
// ordered lexicographically by vertex tuple within each dimension.
DeltaComplex simplicial_from_tuples(int num_vertices,
                                    const std::vector<std::vector<int>>& cells);

// Quotient by identifying same-dimension cell pairs position-compatibly:
// the i-th faces of identified cells are identified recursively.
struct QuotientResult {
  DeltaComplex complex;
  std::vector<std::vector<int>> cell_map;  // old (d, index) -> new index
};
QuotientResult quotient_complex(const DeltaComplex& c,
                                const std::vector<std::pair<CellRef, CellRef>>& glued);

// The marked cells as a standalone complex, trimmed to the top selected
// dimension. cell_of[d][new index] is the original cell id.
struct ExtractResult {
  DeltaComplex complex;
  std::vector<std::vector<int>> cell_of;
};
ExtractResult extract_subcomplex(const DeltaComplex& c, const Subcomplex& z);

// Barycentric subdivision for complexes of dimension <= 2. carrier[d][cell]
// is the cell of the input whose interior contains the new cell.
struct SubdivisionResult {
  DeltaComplex complex;
  std::vector<std::vector<CellRef>> carrier;
};
SubdivisionResult barycentric_subdivision(const DeltaComplex& c);
Subcomplex subdivide_subcomplex(const SubdivisionResult& sd, const Subcomplex& z);

// Strict means: every cell has distinct vertices and no two cells of the same
// dimension share a vertex set. Required by the star-cover comparison.
Validation check_strict_simplicial(const DeltaComplex& c);

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Text grammar (docs/formats.md): "dim <d>" opens a dimension block; each
// cell line is "<label> <face indices...>"; an optional "subcomplex" block
// lists "<dim> <label-or-index>" lines and must be closed under faces.
struct ParsedComplex {
  DeltaComplex complex;
  Subcomplex subcomplex;
  bool has_subcomplex = false;
};
ParsedComplex parse_complex_text(const std::string& text);

}  // namespace towercoh
