#include "wallkit/lattice.hpp"

#include <cstdlib>

namespace wallkit {

// Implemented in json_io.cpp; reads {"label":..., "gram":[[...]]}.
IntMat load_gram_fixture(const std::string& filename);

IntegralLattice::IntegralLattice(IntMat gram, std::string label)
    : gram_(std::move(gram)), label_(std::move(label)) {
  require(gram_.rows() == gram_.cols() && gram_.is_symmetric(), ErrorCode::NotSymmetric,
          "Gram matrix must be square and symmetric: " + label_);
  det_ = det(gram_);
  require(det_ != 0, ErrorCode::Degenerate, "Gram matrix is degenerate: " + label_);
  even_ = true;
  for (int i = 0; i < gram_.rows(); ++i)
    if (!wallkit::is_even(gram_.at(i, i))) even_ = false;
  sig_ = signature_of(RatMat(gram_));
}

LatticePtr IntegralLattice::create(IntMat gram, std::string label) {
  return LatticePtr(new IntegralLattice(std::move(gram), std::move(label)));
}

LatticePtr make_lattice(const IntMat& gram, const std::string& label) {
  return IntegralLattice::create(gram, label);
}

bool same_lattice(const LatticePtr& a, const LatticePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->gram() == b->gram();
}

LatticeVector Sublattice::to_ambient(const IntVec& sub_coords) const {
  return LatticeVector{ambient, basis.apply(sub_coords)};
}

namespace {

IntMat u_gram() { return IntMat{{0, 1}, {1, 0}}; }

IntMat block_diag(const std::vector<IntMat>& blocks) {
  int n = 0;
  for (const IntMat& b : blocks) n += b.rows();
  IntMat g(n, n);
  int off = 0;
  for (const IntMat& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) g.at(off + i, off + j) = b.at(i, j);
    off += b.rows();
  }
  return g;
}

IntMat negate(IntMat m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
  return m;
}

IntMat e8_gram_checked() {
  IntMat g = load_gram_fixture("e8_gram.json");
  require(g.rows() == 8 && g.is_symmetric(), ErrorCode::FixtureInvalid, "E8 fixture shape");
  for (int i = 0; i < 8; ++i)
    require(is_even(g.at(i, i)), ErrorCode::FixtureInvalid, "E8 fixture not even");
  require(det(g) == 1, ErrorCode::FixtureInvalid, "E8 fixture determinant");
  require(signature_of(RatMat(g)) == std::make_pair(8, 0), ErrorCode::FixtureInvalid,
          "E8 fixture not positive definite");
  return g;
}

// Mukai pairing basis order: (r; three U pairs; [two E8(-1) blocks]; s).
// (r,s) block is [[0,-1],[-1,0]], placed at the first and last coordinate.
IntMat mukai_gram(bool with_e8_blocks) {
  std::vector<IntMat> middle{u_gram(), u_gram(), u_gram()};
  if (with_e8_blocks) {
    IntMat e8m = negate(e8_gram_checked());
    middle.push_back(e8m);
    middle.push_back(e8m);
  }
  IntMat mid = block_diag(middle);
  int n = mid.rows() + 2;
  IntMat g(n, n);
  for (int i = 0; i < mid.rows(); ++i)
    for (int j = 0; j < mid.cols(); ++j) g.at(1 + i, 1 + j) = mid.at(i, j);
  g.at(0, n - 1) = -1;
  g.at(n - 1, 0) = -1;
  return g;
}

// "name(arg)" -> arg, or nullopt.
std::optional<long> parse_int_arg(const std::string& name, const std::string& prefix) {
  if (name.size() < prefix.size() + 3) return std::nullopt;
  if (name.compare(0, prefix.size(), prefix) != 0 || name[prefix.size()] != '(' ||
      name.back() != ')')
    return std::nullopt;
  std::string inner = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
  try {
    size_t pos = 0;
    long v = std::stol(inner, &pos);
    if (pos != inner.size()) return std::nullopt;
    return v;
  } catch (...) {
    return std::nullopt;
  }
}

}  // namespace

LatticePtr standard_lattice(const std::string& name) {
  if (name == "U") return make_lattice(u_gram(), "U");
  if (name == "A2") return make_lattice(IntMat{{2, -1}, {-1, 2}}, "A2");
  if (name == "A2(-1)") return make_lattice(IntMat{{-2, 1}, {1, -2}}, "A2(-1)");
  if (name == "E8") return make_lattice(e8_gram_checked(), "E8");
  if (name == "E8(-1)") return make_lattice(negate(e8_gram_checked()), "E8(-1)");
  if (name == "mukai_k3") return make_lattice(mukai_gram(true), "mukai_k3");
  if (name == "mukai_abelian") return make_lattice(mukai_gram(false), "mukai_abelian");
  if (auto m = parse_int_arg(name, "rank1")) {
    require(*m != 0 && *m % 2 == 0, ErrorCode::BadParam, "rank1(m) needs nonzero even m");
    IntMat g(1, 1);
    g.at(0, 0) = *m;
    return make_lattice(g, name);
  }
  if (auto n = parse_int_arg(name, "kummer")) {
    require(*n >= 1, ErrorCode::BadParam, "kummer(n) needs n >= 1");
    IntMat tail(1, 1);
    tail.at(0, 0) = -2 * *n - 2;
    IntMat g = block_diag({u_gram(), u_gram(), u_gram(), tail});
    return make_lattice(g, "kummer(" + std::to_string(*n) + ")");
  }
  fail(ErrorCode::BadParam, "unknown standard lattice: " + name);
}

LatticePtr direct_sum(const std::vector<LatticePtr>& parts, const std::string& label) {
  std::vector<IntMat> grams;
  grams.reserve(parts.size());
  for (const LatticePtr& p : parts) grams.push_back(p->gram());
  return make_lattice(block_diag(grams), label);
}

namespace {

void check_pair(const LatticeVector& x, const LatticeVector& y) {
  require(x.lattice && y.lattice, ErrorCode::BadParam, "vector without lattice");
  require(same_lattice(x.lattice, y.lattice), ErrorCode::LatticeMismatch,
          "vectors from different lattices");
  require(static_cast<int>(x.coords.size()) == x.lattice->rank() &&
              static_cast<int>(y.coords.size()) == y.lattice->rank(),
          ErrorCode::BadParam, "coordinate length");
}

}  // namespace

Int inner(const LatticeVector& x, const LatticeVector& y) {
  check_pair(x, y);
  IntVec gy = x.lattice->gram().apply(y.coords);
  Int s = 0;
  for (size_t i = 0; i < gy.size(); ++i) s += x.coords[i] * gy[i];
  return s;
}

Int norm(const LatticeVector& x) { return inner(x, x); }

Rat inner(const RationalVector& x, const RationalVector& y) {
  require(same_lattice(x.lattice, y.lattice), ErrorCode::LatticeMismatch,
          "vectors from different lattices");
  RatVec gy = x.lattice->gram().apply(y.coords);
  Rat s = 0;
  for (size_t i = 0; i < gy.size(); ++i) s += x.coords[i] * gy[i];
  return s;
}

Rat norm(const RationalVector& x) { return inner(x, x); }

bool is_zero(const LatticeVector& x) {
  for (const Int& c : x.coords)
    if (c != 0) return false;
  return true;
}

bool is_primitive(const LatticeVector& x) { return gcd_of(x.coords) == 1; }

Int divisibility(const LatticeVector& x) {
  require(!is_zero(x), ErrorCode::ZeroVector, "divisibility of zero vector");
  return gcd_of(x.lattice->gram().apply(x.coords));
}

RationalVector dual_class(const LatticeVector& x) {
  Int d = divisibility(x);
  RatVec c(x.coords.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = Rat(x.coords[i]) / Rat(d);
  return RationalVector{x.lattice, c};
}

Int divisibility_in(const Sublattice& s, const LatticeVector& x) {
  require(same_lattice(s.ambient, x.lattice), ErrorCode::LatticeMismatch,
          "vector not in the sublattice's ambient lattice");
  require(!is_zero(x), ErrorCode::ZeroVector, "divisibility of zero vector");
  IntVec gx = x.lattice->gram().apply(x.coords);
  Int g = 0;
  for (int j = 0; j < s.basis.cols(); ++j) {
    Int p = 0;
    for (int i = 0; i < s.basis.rows(); ++i) p += s.basis.at(i, j) * gx[i];
    g = gcd(g, p);
  }
  require(g != 0, ErrorCode::ZeroVector, "vector pairs to zero with the whole sublattice");
  return g;
}

namespace {

Sublattice sublattice_from_basis(const LatticePtr& ambient, const IntMat& basis) {
  IntMat gram = basis.transposed() * ambient->gram() * basis;
  return Sublattice{ambient, basis, gram};
}

IntMat vectors_as_columns(const std::vector<LatticeVector>& vectors) {
  require(!vectors.empty(), ErrorCode::BadParam, "no vectors given");
  const LatticePtr& l = vectors.front().lattice;
  for (const LatticeVector& v : vectors)
    require(same_lattice(v.lattice, l), ErrorCode::LatticeMismatch,
            "vectors from different lattices");
  IntMat b(l->rank(), static_cast<int>(vectors.size()));
  for (size_t j = 0; j < vectors.size(); ++j) b.set_column(static_cast<int>(j), vectors[j].coords);
  return b;
}

}  // namespace

Sublattice saturation(const std::vector<LatticeVector>& vectors) {
  const LatticePtr& l = vectors.front().lattice;
  IntMat b = vectors_as_columns(vectors);
  // Saturation = double kernel under the standard dot product: the kernel of
  // B^T is the standard complement of span(B); its own kernel transpose-wise
  // recovers span(B) intersected with Z^n, already saturated.
  IntMat c = integer_kernel(b.transposed());
  IntMat sat = integer_kernel(c.transposed());
  require(sat.cols() == b.cols(), ErrorCode::DependentInput, "input vectors are dependent");
  return sublattice_from_basis(l, sat);
}

Sublattice orthogonal_complement(const LatticePtr& lattice,
                                 const std::vector<LatticeVector>& vectors) {
  IntMat b = vectors_as_columns(vectors);
  for (const LatticeVector& v : vectors)
    require(same_lattice(v.lattice, lattice), ErrorCode::LatticeMismatch,
            "vector not in the given lattice");
  // Rows of B^T G are the pairing functionals; their kernel is saturated.
  IntMat pairings = b.transposed() * lattice->gram();
  IntMat k = integer_kernel(pairings);
  return sublattice_from_basis(lattice, k);
}

std::pair<int, int> signature(const LatticePtr& lattice) { return lattice->signature(); }

std::optional<RatVec> coords_in(const Sublattice& s, const LatticeVector& x) {
  require(same_lattice(s.ambient, x.lattice), ErrorCode::LatticeMismatch,
          "vector not in the sublattice's ambient lattice");
  RatVec xr(x.coords.size());
  for (size_t i = 0; i < xr.size(); ++i) xr[i] = Rat(x.coords[i]);
  return solve_in_span(s.basis, xr);
}

void require_uu_split(const IntegralLattice& lattice) {
  const IntMat& g = lattice.gram();
  require(lattice.rank() >= 4, ErrorCode::NoSplitDeclared, "rank < 4, no U+U split");
  require(lattice.is_even(), ErrorCode::NoSplitDeclared, "lattice must be even");
  auto plane_ok = [&](int o) {
    return g.at(o, o) == 0 && g.at(o + 1, o + 1) == 0 && g.at(o, o + 1) == 1 &&
           g.at(o + 1, o) == 1;
  };
  bool ok = plane_ok(0) && plane_ok(2);
  for (int i = 0; i < 4 && ok; ++i)
    for (int j = 0; j < lattice.rank() && ok; ++j) {
      if (i / 2 == j / 2 && j < 4) continue;  // same plane handled above
      if (j < 4 && i / 2 != j / 2 && g.at(i, j) != 0) ok = false;
      if (j >= 4 && g.at(i, j) != 0) ok = false;
    }
  require(ok, ErrorCode::NoSplitDeclared,
          "the first four basis vectors must split off as U + U");
}

std::string fixture_dir() {
  if (const char* env = std::getenv("WALLKIT_FIXTURES")) return env;
#ifdef WALLKIT_DATA_DIR
  return WALLKIT_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace wallkit
