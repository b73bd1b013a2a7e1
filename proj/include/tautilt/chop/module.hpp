#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "tautilt/arith/charpoly.hpp"
#include "tautilt/arith/finite_field.hpp"
#include "tautilt/arith/matrix.hpp"
#include "tautilt/arith/poly.hpp"
#include "tautilt/perm/group.hpp"

namespace tautilt {

using FFMatrix = Matrix<FiniteField>;
using FFVec = Vec<FiniteField>;

/// A module over a group algebra over a finite field, given by one matrix
/// per group generator acting on column vectors.
class MatModule {
 public:
  MatModule() = default;
  MatModule(FiniteField field, std::size_t dim, std::vector<FFMatrix> gens)
      : field_(std::move(field)), dim_(dim), gens_(std::move(gens)) {
    for (const auto& g : gens_) {
      if (g.rows() != dim_ || g.cols() != dim_) throw InvalidArgument("generator matrix has wrong size");
      if (!(g.field() == field_)) throw FieldMismatch("generator matrix over a different field");
    }
  }

  /// Builds the module and checks that the generator assignment extends to
  /// a homomorphism H -> GL_d by comparing along every edge of the Cayley graph.
  static MatModule from_group(const PermutationGroup& h, FiniteField field, std::vector<FFMatrix> gens) {
    if (gens.size() != h.generators().size()) throw InvalidArgument("one matrix per group generator required");
    const std::size_t d = gens.empty() ? 0 : gens.front().rows();
    MatModule m(field, d, std::move(gens));
    if (!m.gens_.empty()) m.element_matrices(h);
    return m;
  }

  const FiniteField& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<FFMatrix>& generators() const { return gens_; }

  /// Matrix of every group element, indexed like h.elements(); throws if
  /// the generator matrices do not satisfy the relations of h.
  std::vector<FFMatrix> element_matrices(const PermutationGroup& h) const {
    std::vector<std::optional<FFMatrix>> rep(h.order());
    rep[0] = FFMatrix::identity(field_, dim_);
    std::vector<std::size_t> queue{0};
    const auto gi = h.generator_indices();
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::size_t e = queue[q];
      for (std::size_t k = 0; k < gi.size(); ++k) {
        const std::size_t t = h.product_index(gi[k], e);
        FFMatrix m = gens_[k] * *rep[e];
        if (!rep[t]) {
          rep[t] = std::move(m);
          queue.push_back(t);
        } else if (!(*rep[t] == m)) {
          throw InvalidArgument("generator matrices do not define a representation of the group");
        }
      }
    }
    std::vector<FFMatrix> out;
    for (auto& r : rep) out.push_back(std::move(*r));
    return out;
  }

  bool is_trivial() const {
    if (dim_ != 1) return false;
    for (const auto& g : gens_)
      if (g(0, 0) != field_.one()) return false;
    return true;
  }

  friend bool operator==(const MatModule& a, const MatModule& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.gens_ == b.gens_;
  }

 private:
  FiniteField field_;
  std::size_t dim_ = 0;
  std::vector<FFMatrix> gens_;
};

// ---------------------------------------------------------------------------
// Standard constructions

inline MatModule trivial_module(const PermutationGroup& h, const FiniteField& f) {
  std::vector<FFMatrix> g(h.generators().size(), FFMatrix::identity(f, 1));
  return MatModule(f, 1, std::move(g));
}

inline MatModule sign_module(const PermutationGroup& h, const FiniteField& f) {
  std::vector<FFMatrix> g;
  for (const auto& s : h.generators()) {
    FFMatrix m(f, 1, 1);
    m(0, 0) = f.from_int(s.sign());
    g.push_back(std::move(m));
  }
  return MatModule(f, 1, std::move(g));
}

/// kH acting on itself by left multiplication, basis = h.elements().
inline MatModule regular_module(const PermutationGroup& h, const FiniteField& f) {
  std::vector<FFMatrix> g;
  for (std::size_t gi : h.generator_indices()) {
    FFMatrix m(f, h.order(), h.order());
    for (std::size_t e = 0; e < h.order(); ++e) m(h.product_index(gi, e), e) = f.one();
    g.push_back(std::move(m));
  }
  return MatModule(f, h.order(), std::move(g));
}

/// Natural permutation action on k^n.
inline MatModule permutation_module(const PermutationGroup& h, const FiniteField& f) {
  std::vector<FFMatrix> g;
  for (const auto& s : h.generators()) {
    FFMatrix m(f, h.degree(), h.degree());
    for (std::size_t i = 0; i < h.degree(); ++i) m(s(i), i) = f.one();
    g.push_back(std::move(m));
  }
  return MatModule(f, h.degree(), std::move(g));
}

inline FFMatrix kronecker(const FFMatrix& a, const FFMatrix& b) {
  FFMatrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  const auto& f = a.field();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (f.is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = f.mul(a(i, j), b(k, l));
    }
  return r;
}

/// Diagonal action on the tensor product.
inline MatModule tensor(const MatModule& a, const MatModule& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("tensor: modules over different fields");
  if (a.generators().size() != b.generators().size()) throw InvalidArgument("tensor: generator counts differ");
  std::vector<FFMatrix> g;
  for (std::size_t k = 0; k < a.generators().size(); ++k) g.push_back(kronecker(a.generators()[k], b.generators()[k]));
  return MatModule(a.field(), a.dim() * b.dim(), std::move(g));
}

inline MatModule direct_sum(const MatModule& a, const MatModule& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("direct_sum: modules over different fields");
  std::vector<FFMatrix> g;
  const std::size_t d = a.dim() + b.dim();
  for (std::size_t k = 0; k < a.generators().size(); ++k) {
    FFMatrix m(a.field(), d, d);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = a.generators()[k](i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) m(a.dim() + i, a.dim() + j) = b.generators()[k](i, j);
    g.push_back(std::move(m));
  }
  return MatModule(a.field(), d, std::move(g));
}

// ---------------------------------------------------------------------------
// Submodules

/// Smallest submodule containing the given vectors.
inline Subspace<FiniteField> spin(const std::vector<FFMatrix>& gens, const FiniteField& f, std::size_t dim,
                                  const std::vector<FFVec>& seeds) {
  Subspace<FiniteField> s(f, dim);
  std::vector<FFVec> todo;
  for (const auto& v : seeds)
    if (s.insert(v)) todo.push_back(v);
  while (!todo.empty()) {
    FFVec v = std::move(todo.back());
    todo.pop_back();
    for (const auto& g : gens) {
      FFVec w = g.apply(v);
      if (s.insert(w)) todo.push_back(std::move(w));
    }
  }
  return s;
}

inline Subspace<FiniteField> spin(const MatModule& m, const std::vector<FFVec>& seeds) {
  return spin(m.generators(), m.field(), m.dim(), seeds);
}

/// Action on a submodule, in the echelon basis of `sub`.
inline MatModule submodule(const MatModule& m, const Subspace<FiniteField>& sub) {
  std::vector<FFMatrix> g;
  for (const auto& gm : m.generators()) {
    FFMatrix r(m.field(), sub.dim(), sub.dim());
    for (std::size_t j = 0; j < sub.dim(); ++j) {
      const auto img = gm.apply(sub.basis()[j]);
      if (!sub.contains(img)) throw InvalidArgument("subspace is not a submodule");
      const auto c = sub.coordinates(img);
      for (std::size_t i = 0; i < sub.dim(); ++i) r(i, j) = c[i];
    }
    g.push_back(std::move(r));
  }
  return MatModule(m.field(), sub.dim(), std::move(g));
}

/// Action on m / sub, basis = images of unit vectors at the free columns.
inline MatModule quotient(const MatModule& m, const Subspace<FiniteField>& sub) {
  const auto freecols = sub.free_columns();
  const std::size_t q = freecols.size();
  std::vector<FFMatrix> g;
  for (const auto& gm : m.generators()) {
    FFMatrix r(m.field(), q, q);
    for (std::size_t j = 0; j < q; ++j) {
      const auto img = sub.reduce(gm.col(freecols[j]));
      for (std::size_t i = 0; i < q; ++i) r(i, j) = img[freecols[i]];
    }
    g.push_back(std::move(r));
  }
  return MatModule(m.field(), q, std::move(g));
}

// ---------------------------------------------------------------------------
// Homomorphisms

/// Dimension of Hom_{kH}(m, n): kernel of X -> (N_g X - X M_g)_g.
inline std::size_t hom_dimension(const MatModule& m, const MatModule& n) {
  if (!(m.field() == n.field())) throw FieldMismatch("hom_dimension: different fields");
  if (m.generators().size() != n.generators().size()) throw InvalidArgument("hom_dimension: generator counts differ");
  const auto& f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim(), vars = dm * dn;
  if (vars == 0) return 0;
  FFMatrix eq(f, 0, vars);
  for (std::size_t k = 0; k < m.generators().size(); ++k) {
    const auto& mg = m.generators()[k];
    const auto& ng = n.generators()[k];
    for (std::size_t i = 0; i < dn; ++i)
      for (std::size_t j = 0; j < dm; ++j) {
        FFVec row(vars, f.zero());
        for (std::size_t a = 0; a < dn; ++a) row[a * dm + j] = f.add(row[a * dm + j], ng(i, a));
        for (std::size_t b = 0; b < dm; ++b) row[i * dm + b] = f.sub(row[i * dm + b], mg(b, j));
        eq.append_row(row);
      }
  }
  return vars - rank(eq);
}

// ---------------------------------------------------------------------------
// MeatAxe

struct IrreducibilityCertificate {
  bool irreducible = false;
  /// Proper nonzero submodule when reducible.
  std::optional<Subspace<FiniteField>> submodule;
  /// For irreducible modules: the algebra element, the factor of its
  /// characteristic polynomial and the nullspace vector that was spun.
  FFMatrix element;
  std::vector<std::uint32_t> factor;
  FFVec null_vector;
  std::size_t attempts = 0;
};

class MeatAxe {
 public:
  static constexpr std::size_t kDefaultAttempts = 256;

  explicit MeatAxe(std::uint64_t seed, std::size_t max_attempts = kDefaultAttempts)
      : rng_(seed), max_attempts_(max_attempts) {}

  IrreducibilityCertificate test(const MatModule& m) {
    if (m.dim() == 0) throw InvalidArgument("is_irreducible: zero module");
    const auto& f = m.field();
    IrreducibilityCertificate cert;
    if (m.dim() == 1) {
      cert.irreducible = true;
      cert.element = FFMatrix::identity(f, 1);
      cert.null_vector = {f.one()};
      return cert;
    }
    std::vector<FFMatrix> pool = m.generators();
    pool.push_back(FFMatrix::identity(f, m.dim()));
    std::vector<FFMatrix> transposed;
    for (const auto& g : m.generators()) transposed.push_back(g.transpose());
    std::uniform_int_distribution<std::uint32_t> coef(0, f.order() - 1);
    for (std::size_t attempt = 1; attempt <= max_attempts_; ++attempt) {
      cert.attempts = attempt;
      if (pool.size() < 24) {
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        pool.push_back(pool[pick(rng_)] * pool[pick(rng_)]);
      }
      FFMatrix a(f, m.dim(), m.dim());
      for (const auto& p : pool) a = a + p.scaled(coef(rng_));
      for (const auto& [fac, mult] : factor_univariate(charpoly(a))) {
        const FFMatrix fa = evaluate(fac, a);
        const FFMatrix ns = nullspace(fa);
        const FFVec v = ns.row(0);
        const auto s = spin(m, {v});
        if (s.dim() < m.dim()) {
          cert.submodule = s;
          return cert;
        }
        if (ns.rows() != static_cast<std::size_t>(fac.degree())) continue;
        const FFMatrix nst = nullspace(fa.transpose());
        const auto ds = spin(transposed, f, m.dim(), {nst.row(0)});
        if (ds.dim() < m.dim()) {
          // The annihilator of an invariant subspace of the dual.
          const FFMatrix ann = nullspace(ds.as_matrix());
          std::vector<FFVec> rows;
          for (std::size_t i = 0; i < ann.rows(); ++i) rows.push_back(ann.row(i));
          cert.submodule = spin(m, rows);
          return cert;
        }
        cert.irreducible = true;
        cert.element = a;
        for (const auto& c : fac.coeffs()) cert.factor.push_back(c);
        cert.null_vector = v;
        return cert;
      }
    }
    throw RandomBudgetExhausted("MeatAxe: no decisive random element found; retry with another seed");
  }

  std::uint64_t next_seed() { return rng_(); }

 private:
  std::mt19937_64 rng_;
  std::size_t max_attempts_;
};

inline IrreducibilityCertificate is_irreducible(const MatModule& m, std::uint64_t seed = 0) {
  return MeatAxe(seed).test(m);
}

/// For irreducible modules over a splitting field: isomorphic iff a
/// nonzero homomorphism exists.
inline bool are_isomorphic(const MatModule& a, const MatModule& b, std::uint64_t seed = 0) {
  if (!is_irreducible(a, seed).irreducible || !is_irreducible(b, seed).irreducible)
    throw NotIrreducible("are_isomorphic expects irreducible modules");
  return a.dim() == b.dim() && hom_dimension(a, b) > 0;
}

struct Constituent {
  MatModule module;
  std::size_t multiplicity = 0;
};

namespace detail {

inline std::vector<std::uint32_t> module_key(const MatModule& m) {
  std::vector<std::uint32_t> key{m.is_trivial() ? 0u : 1u, static_cast<std::uint32_t>(m.dim())};
  const auto& f = m.field();
  auto trace = [&](const FFMatrix& x) {
    auto t = f.zero();
    for (std::size_t i = 0; i < x.rows(); ++i) t = f.add(t, x(i, i));
    return t;
  };
  for (const auto& g : m.generators()) key.push_back(trace(g));
  for (const auto& g : m.generators())
    for (const auto& h : m.generators()) key.push_back(trace(g * h));
  for (const auto& g : m.generators()) key.insert(key.end(), g.data().begin(), g.data().end());
  return key;
}

inline void composition_factors(const MatModule& m, MeatAxe& axe, std::vector<MatModule>& out) {
  if (m.dim() == 0) return;
  const auto cert = axe.test(m);
  if (cert.irreducible) {
    out.push_back(m);
    return;
  }
  composition_factors(submodule(m, *cert.submodule), axe, out);
  composition_factors(quotient(m, *cert.submodule), axe, out);
}

}  // namespace detail

/// Composition factors with multiplicities, merged up to isomorphism and
/// sorted canonically (trivial module first, then by dimension and
/// generator traces). Each factor is checked to be absolutely irreducible.
inline std::vector<Constituent> constituents(const MatModule& m, std::uint64_t seed = 0) {
  MeatAxe axe(seed);
  std::vector<MatModule> factors;
  detail::composition_factors(m, axe, factors);
  std::vector<Constituent> out;
  for (auto& s : factors) {
    bool merged = false;
    for (auto& c : out)
      if (c.module.dim() == s.dim() && hom_dimension(s, c.module) > 0) {
        ++c.multiplicity;
        merged = true;
        break;
      }
    if (merged) continue;
    if (hom_dimension(s, s) != 1)
      throw NotSplit("constituent is not absolutely irreducible; use splitting_field_for to choose the field");
    out.push_back({std::move(s), 1});
  }
  std::vector<std::pair<std::vector<std::uint32_t>, std::size_t>> keys;
  for (std::size_t i = 0; i < out.size(); ++i) keys.emplace_back(detail::module_key(out[i].module), i);
  std::sort(keys.begin(), keys.end());
  std::vector<Constituent> sorted;
  for (const auto& [k, i] : keys) sorted.push_back(std::move(out[i]));
  return sorted;
}

/// Simple kH-modules over f, from the regular module, in canonical order.
inline std::vector<MatModule> simple_modules(const PermutationGroup& h, const FiniteField& f, std::uint64_t seed = 0) {
  std::vector<MatModule> out;
  for (auto& c : constituents(regular_module(h, f), seed)) out.push_back(std::move(c.module));
  return out;
}

/// Index of the simple in `simples` isomorphic to the irreducible s.
inline std::size_t identify_simple(const MatModule& s, const std::vector<MatModule>& simples) {
  for (std::size_t i = 0; i < simples.size(); ++i)
    if (simples[i].dim() == s.dim() && hom_dimension(s, simples[i]) > 0) return i;
  throw NotIrreducible("module is not isomorphic to any listed simple");
}

/// The involution lambda -> lambda* given by tensoring with the sign module.
inline std::vector<std::size_t> sign_twist(const std::vector<MatModule>& simples, const PermutationGroup& h) {
  if (simples.empty()) return {};
  const MatModule sgn = sign_module(h, simples.front().field());
  std::vector<std::size_t> table;
  for (const auto& s : simples) table.push_back(identify_simple(tensor(s, sgn), simples));
  return table;
}

}  // namespace tautilt
