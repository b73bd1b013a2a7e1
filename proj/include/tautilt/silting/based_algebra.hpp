#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "tautilt/arith/charpoly.hpp"
#include "tautilt/arith/finite_field.hpp"
#include "tautilt/arith/matrix.hpp"
#include "tautilt/arith/poly.hpp"
#include "tautilt/perm/group.hpp"
#include "tautilt/skew/skew_algebra.hpp"

namespace tautilt {

using FFVec = Vec<FiniteField>;

struct StructureConstant {
  std::uint32_t i, j, k;
  FiniteField::value_type c;
};

/// A finite-dimensional algebra over F_q given by structure constants on a
/// basis, together with a complete set of orthogonal primitive idempotents
/// e_1..e_t whose projectives A e_i are pairwise non-isomorphic.
///
/// Homomorphisms A e_i -> A e_j are right multiplications by elements of
/// the corner e_i A e_j; composing f then g corresponds to the product f g.
/// Each corner carries an echelon basis, and products between corners are
/// tabulated in corner coordinates.
class BasedAlgebra {
 public:
  BasedAlgebra(FiniteField field, std::size_t dim, std::vector<std::string> labels,
               const std::vector<StructureConstant>& mult, std::vector<FFVec> idempotents)
      : field_(std::move(field)), d_(dim), labels_(std::move(labels)), mult_(dim * dim), idem_(std::move(idempotents)) {
    if (labels_.size() != d_) throw InvalidArgument("basis label count differs from dimension");
    for (const auto& s : mult) {
      if (s.i >= d_ || s.j >= d_ || s.k >= d_) throw InvalidArgument("structure constant index out of range");
      if (s.c >= field_.order()) throw InvalidArgument("structure constant is not a field element");
      if (!field_.is_zero(s.c)) mult_[s.i * d_ + s.j].emplace_back(s.k, s.c);
    }
    for (auto& cell : mult_) {
      std::sort(cell.begin(), cell.end());
      for (std::size_t a = 1; a < cell.size(); ++a)
        if (cell[a].first == cell[a - 1].first) throw InvalidArgument("duplicate structure constant");
    }
    for (const auto& e : idem_)
      if (e.size() != d_) throw InvalidArgument("idempotent vector has wrong length");
    if (idem_.empty()) throw InvalidArgument("at least one idempotent is required");
    validate_and_tabulate();
  }

  const FiniteField& field() const { return field_; }
  std::size_t dimension() const { return d_; }
  std::size_t vertex_count() const { return idem_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<FFVec>& idempotents() const { return idem_; }
  const std::vector<std::pair<std::uint32_t, FiniteField::value_type>>& product_of_basis(std::size_t i, std::size_t j) const {
    return mult_[i * d_ + j];
  }

  FFVec zero() const { return FFVec(d_, field_.zero()); }
  FFVec basis_vector(std::size_t b) const {
    auto v = zero();
    v.at(b) = field_.one();
    return v;
  }
  FFVec one() const {
    auto v = zero();
    for (const auto& e : idem_) v = add(v, e);
    return v;
  }
  FFVec add(const FFVec& a, const FFVec& b) const {
    FFVec r(d_);
    for (std::size_t i = 0; i < d_; ++i) r[i] = field_.add(a[i], b[i]);
    return r;
  }
  FFVec multiply(const FFVec& a, const FFVec& b) const {
    FFVec r = zero();
    for (std::size_t i = 0; i < d_; ++i) {
      if (field_.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < d_; ++j) {
        if (field_.is_zero(b[j])) continue;
        const auto ab = field_.mul(a[i], b[j]);
        for (const auto& [k, c] : mult_[i * d_ + j]) r[k] = field_.add(r[k], field_.mul(ab, c));
      }
    }
    return r;
  }
  bool is_zero(const FFVec& a) const {
    return std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; });
  }

  // -- corners --------------------------------------------------------------

  std::size_t corner_dim(std::size_t i, std::size_t j) const { return corner_[i * t() + j].dim(); }
  const Subspace<FiniteField>& corner(std::size_t i, std::size_t j) const { return corner_[i * t() + j]; }
  /// Corner coordinates of an element of e_i A e_j.
  FFVec to_corner(std::size_t i, std::size_t j, const FFVec& x) const {
    if (!corner(i, j).contains(x)) throw InvalidArgument("element does not lie in the corner e_i A e_j");
    return corner(i, j).coordinates(x);
  }
  FFVec from_corner(std::size_t i, std::size_t j, const FFVec& c) const {
    FFVec r = zero();
    const auto& basis = corner(i, j).basis();
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (field_.is_zero(c[a])) continue;
      for (std::size_t k = 0; k < d_; ++k) r[k] = field_.add(r[k], field_.mul(c[a], basis[a][k]));
    }
    return r;
  }
  /// Product e_i A e_j x e_j A e_k -> e_i A e_k in corner coordinates.
  FFVec corner_multiply(std::size_t i, std::size_t j, std::size_t k, const FFVec& x, const FFVec& y) const {
    const std::size_t cij = corner_dim(i, j), cjk = corner_dim(j, k), cik = corner_dim(i, k);
    FFVec r(cik, field_.zero());
    const auto& tab = cmul_[(i * t() + j) * t() + k];
    for (std::size_t a = 0; a < cij; ++a) {
      if (field_.is_zero(x[a])) continue;
      for (std::size_t b = 0; b < cjk; ++b) {
        if (field_.is_zero(y[b])) continue;
        const auto xy = field_.mul(x[a], y[b]);
        for (const auto& [c, v] : tab[a * cjk + b]) r[c] = field_.add(r[c], field_.mul(xy, v));
      }
    }
    return r;
  }
  /// Coordinates of e_i in the corner (i, i).
  const FFVec& corner_unit(std::size_t i) const { return unit_[i]; }
  /// The residue of x in e_i A e_i / rad = k; x is invertible iff nonzero.
  FiniteField::value_type augmentation(std::size_t i, const FFVec& x) const {
    auto s = field_.zero();
    for (std::size_t a = 0; a < x.size(); ++a) s = field_.add(s, field_.mul(x[a], aug_[i][a]));
    return s;
  }
  /// Inverse of a unit of the local corner e_i A e_i.
  FFVec corner_inverse(std::size_t i, const FFVec& x) const {
    const std::size_t c = corner_dim(i, i);
    Matrix<FiniteField> l(field_, c, c);
    for (std::size_t b = 0; b < c; ++b) {
      FFVec eb(c, field_.zero());
      eb[b] = field_.one();
      const auto col = corner_multiply(i, i, i, x, eb);
      for (std::size_t a = 0; a < c; ++a) l(a, b) = col[a];
    }
    const auto inv = inverse(l);
    if (!inv) throw InvalidArgument("corner element is not invertible");
    return inv->apply(unit_[i]);
  }

  /// Cartan matrix: entry (i, j) = dim Hom(P_i, P_j) = dim e_i A e_j.
  std::vector<std::vector<std::int64_t>> cartan_matrix() const {
    std::vector<std::vector<std::int64_t>> c(t(), std::vector<std::int64_t>(t()));
    for (std::size_t i = 0; i < t(); ++i)
      for (std::size_t j = 0; j < t(); ++j) c[i][j] = static_cast<std::int64_t>(corner_dim(i, j));
    return c;
  }

  /// Basis of rad A: off-diagonal corners plus the augmentation kernels.
  std::vector<FFVec> radical_basis() const {
    std::vector<FFVec> out;
    for (std::size_t i = 0; i < t(); ++i)
      for (std::size_t j = 0; j < t(); ++j) {
        const std::size_t c = corner_dim(i, j);
        if (i != j) {
          for (const auto& b : corner(i, j).basis()) out.push_back(b);
          continue;
        }
        // Kernel of the augmentation functional.
        Matrix<FiniteField> row(field_, 1, c);
        for (std::size_t a = 0; a < c; ++a) row(0, a) = aug_[i][a];
        const auto ker = nullspace(row);
        for (std::size_t r = 0; r < ker.rows(); ++r) out.push_back(from_corner(i, i, ker.row(r)));
      }
    return out;
  }

 private:
  std::size_t t() const { return idem_.size(); }

  void validate_and_tabulate() {
    const FFVec one_v = one();
    for (std::size_t b = 0; b < d_; ++b) {
      const auto eb = basis_vector(b);
      if (multiply(one_v, eb) != eb || multiply(eb, one_v) != eb)
        throw InvalidArgument("idempotents do not sum to the identity");
    }
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = 0; j < d_; ++j) {
        const auto ij = multiply(basis_vector(i), basis_vector(j));
        for (std::size_t k = 0; k < d_; ++k) {
          const auto lhs = multiply(ij, basis_vector(k));
          const auto rhs = multiply(basis_vector(i), multiply(basis_vector(j), basis_vector(k)));
          if (lhs != rhs) throw InvalidArgument("structure constants are not associative");
        }
      }
    for (std::size_t i = 0; i < t(); ++i)
      for (std::size_t j = 0; j < t(); ++j) {
        const auto p = multiply(idem_[i], idem_[j]);
        if (i == j ? p != idem_[i] : !is_zero(p)) throw NotIdempotent("idempotents are not orthogonal idempotents");
      }
    corner_.clear();
    for (std::size_t i = 0; i < t(); ++i)
      for (std::size_t j = 0; j < t(); ++j) {
        Subspace<FiniteField> s(field_, d_);
        for (std::size_t b = 0; b < d_; ++b) s.insert(multiply(multiply(idem_[i], basis_vector(b)), idem_[j]));
        corner_.push_back(std::move(s));
      }
    cmul_.assign(t() * t() * t(), {});
    for (std::size_t i = 0; i < t(); ++i)
      for (std::size_t j = 0; j < t(); ++j)
        for (std::size_t k = 0; k < t(); ++k) {
          auto& tab = cmul_[(i * t() + j) * t() + k];
          for (const auto& x : corner(i, j).basis())
            for (const auto& y : corner(j, k).basis()) {
              const auto c = corner(i, k).coordinates(multiply(x, y));
              std::vector<std::pair<std::uint32_t, FiniteField::value_type>> sparse;
              for (std::size_t a = 0; a < c.size(); ++a)
                if (!field_.is_zero(c[a])) sparse.emplace_back(static_cast<std::uint32_t>(a), c[a]);
              tab.push_back(std::move(sparse));
            }
        }
    unit_.clear();
    aug_.clear();
    for (std::size_t i = 0; i < t(); ++i) {
      unit_.push_back(corner(i, i).coordinates(idem_[i]));
      aug_.push_back(local_residues(i));
    }
    // P_i and P_j are not isomorphic: e_i A e_j A e_i lies in the radical.
    for (std::size_t i = 0; i < t(); ++i)
      for (std::size_t j = 0; j < t(); ++j) {
        if (i == j) continue;
        for (std::size_t a = 0; a < corner_dim(i, j); ++a)
          for (std::size_t b = 0; b < corner_dim(j, i); ++b) {
            FFVec x(corner_dim(i, j), field_.zero()), y(corner_dim(j, i), field_.zero());
            x[a] = y[b] = field_.one();
            if (augmentation(i, corner_multiply(i, j, i, x, y)) != 0)
              throw InvalidArgument("projectives " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                    " are isomorphic; the algebra is not basic");
          }
      }
  }

  /// For each corner basis element b of e_i A e_i the unique lambda with
  /// b - lambda e_i nilpotent; then checks that the kernel of the induced
  /// functional is a nilpotent ideal, so e_i A e_i is local with residue field k.
  FFVec local_residues(std::size_t i) const {
    const std::size_t c = corner_dim(i, i);
    FFVec lam(c);
    for (std::size_t b = 0; b < c; ++b) {
      Matrix<FiniteField> l(field_, c, c);
      FFVec eb(c, field_.zero());
      eb[b] = field_.one();
      for (std::size_t a = 0; a < c; ++a) {
        FFVec ea(c, field_.zero());
        ea[a] = field_.one();
        const auto col = corner_multiply(i, i, i, eb, ea);
        for (std::size_t r = 0; r < c; ++r) l(r, a) = col[r];
      }
      const auto factors = factor_univariate(charpoly(l));
      if (factors.size() != 1 || factors[0].first.degree() != 1)
        throw InvalidArgument("idempotent " + std::to_string(i + 1) + " is not primitive (corner algebra is not local)");
      lam[b] = field_.neg(factors[0].first.coeff(0));
    }
    // Nilpotency of the kernel.
    Matrix<FiniteField> row(field_, 1, c);
    for (std::size_t a = 0; a < c; ++a) row(0, a) = lam[a];
    const auto ker = nullspace(row);
    std::vector<FFVec> rad;
    for (std::size_t r = 0; r < ker.rows(); ++r) rad.push_back(ker.row(r));
    std::vector<FFVec> power = rad;
    for (std::size_t step = 0; step <= c && !power.empty(); ++step) {
      Subspace<FiniteField> next(field_, c);
      for (const auto& x : power)
        for (const auto& y : rad) next.insert(corner_multiply(i, i, i, x, y));
      power = next.basis();
    }
    if (!power.empty()) throw InvalidArgument("corner algebra at vertex " + std::to_string(i + 1) + " is not local");
    return lam;
  }

  FiniteField field_;
  std::size_t d_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::pair<std::uint32_t, FiniteField::value_type>>> mult_;
  std::vector<FFVec> idem_;
  std::vector<Subspace<FiniteField>> corner_;
  std::vector<std::vector<std::vector<std::pair<std::uint32_t, FiniteField::value_type>>>> cmul_;
  std::vector<FFVec> unit_;
  std::vector<FFVec> aug_;
};

// ---------------------------------------------------------------------------
// Builders

struct Arrow {
  std::string name;
  std::size_t source = 0, target = 0;  // 0-indexed vertices
};

namespace detail {

/// A path as arrows in the order they are traversed.
using Path = std::vector<std::uint32_t>;

struct RelationTerm {
  std::int64_t coeff;
  Path path;
};

/// Parses "a*a - d1*b1" or "a*a = d1*b1". Words are written right to left:
/// "d1*b1" traverses b1 first.
inline std::vector<RelationTerm> parse_relation(const std::string& text, const std::vector<Arrow>& arrows) {
  std::map<std::string, std::uint32_t> by_name;
  for (std::uint32_t a = 0; a < arrows.size(); ++a) by_name[arrows[a].name] = a;
  std::vector<RelationTerm> out;
  std::size_t i = 0;
  int side = 1;
  bool expect_term = true;
  int sign = 1;
  auto ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    ws();
    if (i == text.size()) break;
    const char ch = text[i];
    if (ch == '=') {
      if (side == -1 || expect_term) throw ParseError("misplaced '=' in relation: " + text);
      side = -1;
      ++i;
      expect_term = true;
      sign = 1;
      continue;
    }
    if (ch == '+' || ch == '-') {
      expect_term = true;
      if (ch == '-') sign = -sign;
      ++i;
      continue;
    }
    if (!expect_term) throw ParseError("expected '+', '-' or '=' in relation: " + text);
    std::int64_t coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      coeff = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) coeff = coeff * 10 + (text[i++] - '0');
      ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
      } else {
        if (coeff != 0) throw ParseError("constant terms are not allowed in relations: " + text);
      }
    }
    std::vector<std::uint32_t> written;
    while (true) {
      ws();
      std::size_t s = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      if (s == i) throw ParseError("expected an arrow name in relation: " + text);
      const std::string name = text.substr(s, i - s);
      const auto it = by_name.find(name);
      if (it == by_name.end()) throw ParseError("unknown arrow '" + name + "' in relation: " + text);
      written.push_back(it->second);
      ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    Path p(written.rbegin(), written.rend());
    for (std::size_t k = 1; k < p.size(); ++k)
      if (arrows[p[k - 1]].target != arrows[p[k]].source) throw InvalidArgument("non-composable word in relation: " + text);
    out.push_back({coeff * sign * side, std::move(p)});
    sign = 1;
    expect_term = false;
  }
  if (out.empty() || expect_term) throw ParseError("incomplete relation: " + text);
  for (const auto& term : out) {
    if (term.path.size() != out[0].path.size()) throw InvalidArgument("relation is not homogeneous: " + text);
    if (arrows[term.path.front()].source != arrows[out[0].path.front()].source ||
        arrows[term.path.back()].target != arrows[out[0].path.back()].target)
      throw InvalidArgument("relation terms have different endpoints: " + text);
  }
  return out;
}

}  // namespace detail

/// Path algebra of a quiver modulo homogeneous relations, computed degree
/// by degree: I_L = arrows * I_{L-1} + I_{L-1} * arrows + R_L, and the
/// non-pivot paths of I_L form the basis in length L.
inline BasedAlgebra from_quiver(const FiniteField& f, std::size_t vertices, const std::vector<Arrow>& arrows,
                                const std::vector<std::string>& relations, std::size_t bound) {
  using detail::Path;
  if (vertices == 0) throw InvalidArgument("quiver needs at least one vertex");
  for (const auto& a : arrows)
    if (a.source >= vertices || a.target >= vertices) throw InvalidArgument("arrow endpoint out of range: " + a.name);
  std::vector<std::vector<detail::RelationTerm>> rels;
  for (const auto& r : relations) rels.push_back(detail::parse_relation(r, arrows));

  struct Level {
    std::vector<Path> paths;
    std::map<Path, std::size_t> index;
    Subspace<FiniteField> ideal;
    std::vector<std::size_t> basis_cols;
  };
  std::vector<Level> levels;
  // Length 1.
  {
    Level l1{{}, {}, Subspace<FiniteField>(f, arrows.size()), {}};
    for (std::uint32_t a = 0; a < arrows.size(); ++a) {
      l1.index[{a}] = l1.paths.size();
      l1.paths.push_back({a});
    }
    levels.push_back(std::move(l1));
  }
  auto term_vector = [&](const Level& lv, const std::vector<detail::RelationTerm>& r) {
    FFVec v(lv.paths.size(), f.zero());
    for (const auto& t : r) v[lv.index.at(t.path)] = f.add(v[lv.index.at(t.path)], f.from_int(t.coeff));
    return v;
  };
  for (std::size_t len = 1;; ++len) {
    Level& cur = levels.back();
    if (len > 1) {
      const Level& prev = levels[levels.size() - 2];
      for (const auto& row : prev.ideal.basis())
        for (std::uint32_t a = 0; a < arrows.size(); ++a) {
          FFVec pre(cur.paths.size(), f.zero()), post(cur.paths.size(), f.zero());
          bool any_pre = false, any_post = false;
          for (std::size_t c = 0; c < row.size(); ++c) {
            if (f.is_zero(row[c])) continue;
            const Path& p = prev.paths[c];
            if (arrows[p.back()].target == arrows[a].source) {
              Path q = p;
              q.push_back(a);
              pre[cur.index.at(q)] = row[c];
              any_pre = true;
            }
            if (arrows[a].target == arrows[p.front()].source) {
              Path q{a};
              q.insert(q.end(), p.begin(), p.end());
              post[cur.index.at(q)] = row[c];
              any_post = true;
            }
          }
          if (any_pre) cur.ideal.insert(pre);
          if (any_post) cur.ideal.insert(post);
        }
    }
    for (const auto& r : rels)
      if (r.front().path.size() == len) cur.ideal.insert(term_vector(cur, r));
    cur.basis_cols = cur.ideal.free_columns();
    if (cur.basis_cols.empty()) break;
    if (len >= bound)
      throw InfiniteDimensional("paths of length " + std::to_string(len) + " survive the relations; raise the bound");
    Level next{{}, {}, Subspace<FiniteField>(f, 0), {}};
    for (const auto& p : cur.paths)
      for (std::uint32_t a = 0; a < arrows.size(); ++a)
        if (arrows[p.back()].target == arrows[a].source) {
          Path q = p;
          q.push_back(a);
          next.index[q] = next.paths.size();
          next.paths.push_back(std::move(q));
        }
    next.ideal = Subspace<FiniteField>(f, next.paths.size());
    levels.push_back(std::move(next));
  }

  // Basis: trivial paths, then surviving paths by length.
  struct BasisPath {
    std::size_t level;  // 0 = trivial
    std::size_t col;    // path index within level, or vertex
  };
  std::vector<BasisPath> basis;
  std::vector<std::string> labels;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pos;
  for (std::size_t v = 0; v < vertices; ++v) {
    pos[{0, v}] = basis.size();
    basis.push_back({0, v});
    labels.push_back("e" + std::to_string(v + 1));
  }
  for (std::size_t L = 0; L < levels.size(); ++L)
    for (auto c : levels[L].basis_cols) {
      pos[{L + 1, c}] = basis.size();
      basis.push_back({L + 1, c});
      std::string s;
      const Path& p = levels[L].paths[c];
      for (auto it = p.rbegin(); it != p.rend(); ++it) s += (s.empty() ? "" : "*") + arrows[*it].name;
      labels.push_back(s);
    }
  const std::size_t d = basis.size();
  auto path_of = [&](const BasisPath& b) -> const Path& { return levels[b.level - 1].paths[b.col]; };
  auto src = [&](const BasisPath& b) { return b.level == 0 ? b.col : arrows[path_of(b).front()].source; };
  auto tgt = [&](const BasisPath& b) { return b.level == 0 ? b.col : arrows[path_of(b).back()].target; };

  std::vector<StructureConstant> mult;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      // x * y traverses y first.
      const auto& bx = basis[x];
      const auto& by = basis[y];
      if (tgt(by) != src(bx)) continue;
      if (bx.level == 0) {
        mult.push_back({static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(y), f.one()});
        continue;
      }
      if (by.level == 0) {
        mult.push_back({static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(x), f.one()});
        continue;
      }
      Path q = path_of(by);
      const Path& px = path_of(bx);
      q.insert(q.end(), px.begin(), px.end());
      const std::size_t L = q.size();
      if (L > levels.size()) continue;
      const Level& lv = levels[L - 1];
      FFVec v(lv.paths.size(), f.zero());
      v[lv.index.at(q)] = f.one();
      const auto r = lv.ideal.reduce(v);
      for (auto c : lv.basis_cols)
        if (!f.is_zero(r[c]))
          mult.push_back({static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y),
                          static_cast<std::uint32_t>(pos.at({L, c})), r[c]});
    }
  std::vector<FFVec> idem;
  for (std::size_t v = 0; v < vertices; ++v) {
    FFVec e(d, f.zero());
    e[v] = f.one();
    idem.push_back(std::move(e));
  }
  return BasedAlgebra(f, d, std::move(labels), mult, std::move(idem));
}

/// kH with the built-in idempotents (abelian p'-groups, p-groups).
inline BasedAlgebra from_group_algebra(const PermutationGroup& h, const FiniteField& f) {
  const auto es = group_algebra_idempotents(h, f);
  std::vector<StructureConstant> mult;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < h.order(); ++a) {
    labels.push_back(h.element(a).to_cycle_string());
    for (std::size_t b = 0; b < h.order(); ++b)
      mult.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                      static_cast<std::uint32_t>(h.product_index(a, b)), f.one()});
  }
  return BasedAlgebra(f, h.order(), std::move(labels), mult, es);
}

/// C x| H over the splitting field for H in characteristic p, with the
/// primitive idempotents of kH.
inline BasedAlgebra from_skew_coinvariant(std::size_t n, const PermutationGroup& h, std::uint32_t p) {
  const FiniteField f = splitting_field_for(h.exponent(), p);
  const SkewAlgebra<FiniteField> a(n, h, f);
  const std::size_t d = a.dimension();
  std::vector<StructureConstant> mult;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) {
    labels.push_back(a.to_string(a.basis_vector(i)));
    for (std::size_t j = 0; j < d; ++j) {
      const auto prod = a.multiply(a.basis_vector(i), a.basis_vector(j));
      for (std::size_t k = 0; k < d; ++k)
        if (!f.is_zero(prod[k]))
          mult.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k), prod[k]});
    }
  }
  std::vector<FFVec> idem;
  for (const auto& e : group_algebra_idempotents(h, f)) idem.push_back(a.from_group_algebra(e));
  return BasedAlgebra(f, d, std::move(labels), mult, std::move(idem));
}

/// k[x]/(x^2) and friends: one vertex, one loop x with x^k = 0.
inline BasedAlgebra truncated_polynomial_algebra(const FiniteField& f, std::size_t k) {
  if (k == 0) throw InvalidArgument("truncation degree must be positive");
  std::string rel = "x";
  for (std::size_t i = 1; i < k; ++i) rel += "*x";
  return from_quiver(f, 1, {{"x", 0, 0}}, {rel}, k + 1);
}

/// The quiver algebra with vertices 1, 2, loops a, c, arrows b_i: 1 -> 2 and
/// d_i: 2 -> 1 (i = 1..3), and relations a^2 = d_i b_i, c^2 = b_i d_i,
/// a d_i = b_i a = b_i d_j = c b_i = d_i b_j = d_i c = 0 for i != j.
inline BasedAlgebra two_loop_counterexample_algebra(const FiniteField& f) {
  std::vector<Arrow> arrows{{"a", 0, 0}, {"c", 1, 1}};
  for (int i = 1; i <= 3; ++i) arrows.push_back({"b" + std::to_string(i), 0, 1});
  for (int i = 1; i <= 3; ++i) arrows.push_back({"d" + std::to_string(i), 1, 0});
  std::vector<std::string> rel;
  for (int i = 1; i <= 3; ++i) {
    const std::string s = std::to_string(i);
    rel.push_back("a*a = d" + s + "*b" + s);
    rel.push_back("c*c = b" + s + "*d" + s);
    rel.push_back("a*d" + s);
    rel.push_back("b" + s + "*a");
    rel.push_back("c*b" + s);
    rel.push_back("d" + s + "*c");
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      const std::string t = std::to_string(j);
      rel.push_back("b" + s + "*d" + t);
      rel.push_back("d" + s + "*b" + t);
    }
  }
  return from_quiver(f, 2, arrows, rel, 8);
}

}  // namespace tautilt
