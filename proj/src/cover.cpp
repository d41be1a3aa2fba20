#include "towercoh/cover.hpp"

#include <stdexcept>

namespace towercoh {

CoverComplex build_cover(const FlatDescriptor& fd, int r) {
  Validation v = validate_descriptor(fd);
  if (!v.ok) throw std::invalid_argument("build_cover: " + v.message);
  if (r < 0 || r > fd.tower.depth)
    throw std::invalid_argument("build_cover: level " + std::to_string(r) + " out of range");
  const DeltaComplex& base = fd.complex;
  const LevelGroup& g = fd.tower.level(r);
  int B = g.order;

  CoverComplex out;
  out.sheets = B;
  out.level = r;
  DeltaComplex& c = out.complex;
  c.counts.resize(base.dim() + 1);
  c.faces.resize(base.dim() + 1);
  c.labels.resize(base.dim() + 1);
  for (int d = 0; d <= base.dim(); ++d) {
    c.counts[d] = base.count(d) * B;
    c.labels[d].resize(c.counts[d]);
    for (int s = 0; s < base.count(d); ++s)
      for (int x = 0; x < B; ++x)
        c.labels[d][s * B + x] = base.cell_name(d, s) + "@" + fd.tower.element_name(r, x);
    if (d == 0) continue;
    c.faces[d].resize(c.counts[d], std::vector<int>(d + 1));
    for (int s = 0; s < base.count(d); ++s) {
      int e01 = edge_between(base, d, s, 0, 1);
      int shift = g.inverse(fd.label_at(e01, r));
      for (int x = 0; x < B; ++x) {
        std::vector<int>& f = c.faces[d][s * B + x];
        f[0] = base.face(d, s, 0) * B + g.times(shift, x);
        for (int i = 1; i <= d; ++i) f[i] = base.face(d, s, i) * B + x;
      }
    }
  }
  Validation cv = validate_complex(c);
  if (!cv.ok) throw std::logic_error("build_cover produced an invalid complex: " + cv.message);
  return out;
}

Subcomplex lift_subcomplex(const CoverComplex& cov, const Subcomplex& base) {
  Subcomplex out;
  out.selected.resize(base.selected.size());
  for (size_t d = 0; d < base.selected.size(); ++d) {
    out.selected[d].resize(base.selected[d].size() * cov.sheets, false);
    for (size_t s = 0; s < base.selected[d].size(); ++s)
      if (base.selected[d][s])
        for (int x = 0; x < cov.sheets; ++x) out.selected[d][s * cov.sheets + x] = true;
  }
  return out;
}

std::vector<int> deck_cell_map(const FlatDescriptor& fd, const CoverComplex& cov, int h, int dim) {
  const LevelGroup& g = fd.tower.level(cov.level);
  int n = cov.complex.count(dim);
  std::vector<int> out(n);
  for (int s = 0; s * cov.sheets < n; ++s)
    for (int x = 0; x < cov.sheets; ++x) out[s * cov.sheets + x] = s * cov.sheets + g.times(x, h);
  return out;
}

std::vector<std::vector<int>> cover_projection(const FlatDescriptor& fd, const CoverComplex& hi,
                                               const CoverComplex& lo) {
  if (hi.level != lo.level + 1)
    throw std::invalid_argument("cover_projection: levels must be adjacent");
  std::vector<std::vector<int>> out(hi.complex.dim() + 1);
  for (int d = 0; d <= hi.complex.dim(); ++d) {
    out[d].resize(hi.complex.count(d));
    for (int s = 0; s * hi.sheets < hi.complex.count(d); ++s)
      for (int y = 0; y < hi.sheets; ++y)
        out[d][s * hi.sheets + y] = s * lo.sheets + fd.tower.project(hi.level, y);
  }
  return out;
}

}  // namespace towercoh
