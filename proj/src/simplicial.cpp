#include "lcpol/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace lcpol {

int face_dimension(FaceMask f) { return std::popcount(f) - 1; }

std::vector<std::size_t> face_vertices(FaceMask f) {
  std::vector<std::size_t> out;
  while (f) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(f)));
    f &= f - 1;
  }
  return out;
}

FaceMask face_from_vertices(const std::vector<std::size_t>& vertices) {
  FaceMask f = 0;
  for (auto v : vertices) {
    if (v >= kMaxVertices) throw std::out_of_range("vertex index too large");
    f |= FaceMask{1} << v;
  }
  return f;
}

namespace {

bool face_order(FaceMask a, FaceMask b) {
  int da = std::popcount(a), db = std::popcount(b);
  return da != db ? da < db : a < b;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t n, std::vector<FaceMask> faces)
    : n_(n), faces_(std::move(faces)) {
  if (n_ > kMaxVertices) throw std::invalid_argument("too many vertices");
  std::sort(faces_.begin(), faces_.end(), face_order);
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
}

SimplicialComplex SimplicialComplex::void_complex(std::size_t n_vertices) {
  return SimplicialComplex(n_vertices, {});
}

SimplicialComplex SimplicialComplex::irrelevant(std::size_t n_vertices) {
  return SimplicialComplex(n_vertices, {FaceMask{0}});
}

SimplicialComplex SimplicialComplex::from_faces(std::size_t n_vertices,
                                                const std::vector<FaceMask>& faces) {
  if (n_vertices > kMaxVertices) throw std::invalid_argument("too many vertices");
  const FaceMask all = n_vertices == 0 ? 0 : (FaceMask{1} << n_vertices) - 1;
  std::unordered_set<FaceMask> closed;
  std::vector<FaceMask> stack;
  for (FaceMask f : faces) {
    if (f & ~all) throw std::out_of_range("face uses a vertex outside the vertex set");
    if (closed.insert(f).second) stack.push_back(f);
  }
  while (!stack.empty()) {
    FaceMask f = stack.back();
    stack.pop_back();
    for (FaceMask rest = f; rest; rest &= rest - 1) {
      FaceMask sub = f & ~(rest & -rest);
      if (closed.insert(sub).second) stack.push_back(sub);
    }
  }
  return SimplicialComplex(n_vertices, std::vector<FaceMask>(closed.begin(), closed.end()));
}

SimplicialComplex SimplicialComplex::from_closed_faces(std::size_t n_vertices,
                                                       std::vector<FaceMask> faces) {
  SimplicialComplex out(n_vertices, std::move(faces));
  for (FaceMask f : out.faces_)
    for (FaceMask rest = f; rest; rest &= rest - 1)
      if (!out.contains(f & ~(rest & -rest)))
        throw std::invalid_argument("from_closed_faces: family is not closed under subsets");
  return out;
}

SimplicialComplex SimplicialComplex::from_facets(
    std::size_t n_vertices, const std::vector<std::vector<std::size_t>>& facets) {
  std::vector<FaceMask> masks;
  for (const auto& f : facets) {
    for (auto v : f)
      if (v >= n_vertices) throw std::out_of_range("facet vertex outside the vertex set");
    masks.push_back(face_from_vertices(f));
  }
  return from_faces(n_vertices, masks);
}

bool SimplicialComplex::contains(FaceMask f) const {
  return std::binary_search(faces_.begin(), faces_.end(), f, face_order);
}

std::vector<FaceMask> SimplicialComplex::faces_of_dimension(int d) const {
  std::vector<FaceMask> out;
  for (FaceMask f : faces_)
    if (face_dimension(f) == d) out.push_back(f);
  return out;
}

std::vector<FaceMask> SimplicialComplex::facets() const {
  std::vector<FaceMask> out;
  for (FaceMask f : faces_) {
    bool maximal = true;
    for (std::size_t v = 0; v < n_ && maximal; ++v) {
      FaceMask bit = FaceMask{1} << v;
      if (!(f & bit) && contains(f | bit)) maximal = false;
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

int SimplicialComplex::dimension() const {
  return faces_.empty() ? -2 : face_dimension(faces_.back());
}

SparseMatrix coboundary_matrix(const SimplicialComplex& complex, int d) {
  auto lower = complex.faces_of_dimension(d);
  auto upper = complex.faces_of_dimension(d + 1);
  SparseMatrix m(upper.size(), lower.size());
  std::unordered_map<FaceMask, std::size_t> col_of;
  for (std::size_t c = 0; c < lower.size(); ++c) col_of.emplace(lower[c], c);
  for (std::size_t r = 0; r < upper.size(); ++r) {
    FaceMask tau = upper[r];
    int position = 0;
    for (FaceMask rest = tau; rest; rest &= rest - 1, ++position) {
      FaceMask v = rest & -rest;
      m.set(r, col_of.at(tau & ~v), position % 2 == 0 ? 1 : -1);
    }
  }
  return m;
}

std::map<int, std::size_t> reduced_cohomology_dims(const SimplicialComplex& complex,
                                                   const FieldSpec& field) {
  std::map<int, std::size_t> dims;
  if (complex.is_void()) return dims;
  const int top = complex.dimension();
  // ranks[d + 1] = rank of the coboundary C^d -> C^{d+1}
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
  for (int d = -1; d < top; ++d)
    ranks[static_cast<std::size_t>(d + 1)] = rank(coboundary_matrix(complex, d), field);
  for (int d = -1; d <= top; ++d) {
    std::size_t cd = complex.faces_of_dimension(d).size();
    std::size_t out = ranks[static_cast<std::size_t>(d + 1)];
    std::size_t in = d > -1 ? ranks[static_cast<std::size_t>(d)] : 0;
    std::size_t h = cd - out - in;
    if (h) dims[d] = h;
  }
  return dims;
}

bool is_cone(const SimplicialComplex& complex, std::size_t v) {
  if (complex.is_void()) throw std::domain_error("is_cone: void complex has no apex");
  if (v >= complex.n_vertices()) throw std::out_of_range("is_cone: vertex outside the vertex set");
  const FaceMask bit = FaceMask{1} << v;
  return std::all_of(complex.faces().begin(), complex.faces().end(),
                     [&](FaceMask f) { return complex.contains(f | bit); });
}

long euler_characteristic_reduced(const SimplicialComplex& complex) {
  long chi = 0;
  for (FaceMask f : complex.faces()) chi += face_dimension(f) % 2 == 0 ? 1 : -1;
  return chi;
}

std::string format_complex(const SimplicialComplex& complex,
                           const std::vector<std::string>& vertex_names) {
  if (complex.is_void()) return "void";
  auto facets = complex.facets();
  if (facets.size() == 1 && facets.front() == 0) return "{∅}";
  std::string out;
  for (FaceMask f : facets) {
    if (!out.empty()) out += ", ";
    out += '{';
    bool first = true;
    for (auto v : face_vertices(f)) {
      if (!first) out += ',';
      out += v < vertex_names.size() ? vertex_names[v] : std::to_string(v + 1);
      first = false;
    }
    out += '}';
  }
  return out;
}

}  // namespace lcpol
