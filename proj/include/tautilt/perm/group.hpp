#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "tautilt/arith/number_theory.hpp"
#include "tautilt/error.hpp"
#include "tautilt/perm/permutation.hpp"

namespace tautilt {

/// Rank data of the p-hyperfocal subgroup R of (Z/mZ)^n x| H for a
/// p'-group H: R and the H-fixed points C(H) have ranks summing to n.
struct HyperfocalReport {
  std::uint32_t p = 0;
  unsigned l = 0;               // v_p(m)
  std::size_t orbit_count = 0;  // H-orbits on {1..n} = rank of C(H)
  std::size_t rank = 0;         // rank of R
  bool semisimple_case = false; // l == 0: Sylow p-subgroup trivial, R = 1
};

/// A subgroup of S_n materialised by breadth-first closure. Element 0 is
/// the identity; the order of elements depends only on the generator list.
class PermutationGroup {
 public:
  static constexpr std::size_t kDefaultOrderCap = 1'000'000;

  PermutationGroup(std::size_t n, std::vector<Permutation> generators, std::size_t order_cap = kDefaultOrderCap)
      : n_(n) {
    for (auto& g : generators) {
      if (g.degree() != n) throw InvalidArgument("generator degree differs from n");
      if (!g.is_identity()) gens_.push_back(std::move(g));
    }
    add(Permutation::identity(n));
    for (std::size_t head = 0; head < elems_.size(); ++head) {
      for (const auto& g : gens_) {
        Permutation y = g * elems_[head];
        if (index_.contains(y)) continue;
        if (elems_.size() >= order_cap)
          throw OrderBudgetExceeded("group order exceeds cap " + std::to_string(order_cap));
        add(std::move(y));
      }
    }
  }

  static PermutationGroup symmetric(std::size_t n) {
    std::vector<Permutation> gens;
    if (n >= 2) {
      std::vector<std::uint16_t> t(n), c(n);
      std::iota(t.begin(), t.end(), 0);
      std::swap(t[0], t[1]);
      for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::uint16_t>((i + 1) % n);
      gens.emplace_back(t);
      gens.emplace_back(c);
    }
    return PermutationGroup(n, gens);
  }

  std::size_t degree() const { return n_; }
  std::size_t order() const { return elems_.size(); }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::vector<Permutation>& elements() const { return elems_; }
  const Permutation& element(std::size_t i) const { return elems_[i]; }

  bool contains(const Permutation& p) const { return index_.contains(p); }
  std::size_t index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw InvalidArgument("permutation " + p.to_cycle_string() + " not in group");
    return it->second;
  }
  std::size_t product_index(std::size_t i, std::size_t j) const { return index_of(elems_[i] * elems_[j]); }
  std::size_t inverse_index(std::size_t i) const { return index_of(elems_[i].inverse()); }
  std::vector<std::size_t> generator_indices() const {
    std::vector<std::size_t> out;
    for (const auto& g : gens_) out.push_back(index_of(g));
    return out;
  }

  bool is_abelian() const {
    for (std::size_t a = 0; a < gens_.size(); ++a)
      for (std::size_t b = a + 1; b < gens_.size(); ++b)
        if (gens_[a] * gens_[b] != gens_[b] * gens_[a]) return false;
    return true;
  }

  std::uint64_t exponent() const {
    std::uint64_t e = 1;
    for (const auto& x : elems_) e = std::lcm(e, x.order());
    return e;
  }

  bool is_p_prime(std::uint64_t p) const { return order() % p != 0; }

  /// (S_n : H) = n! / |H|.
  std::uint64_t index_in_symmetric() const { return factorial(static_cast<unsigned>(n_)) / order(); }

  /// Conjugacy classes as sorted lists of element indices, ordered by
  /// their smallest member (so the identity class comes first).
  std::vector<std::vector<std::size_t>> conjugacy_classes() const {
    std::vector<int> cls(order(), -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t x = 0; x < order(); ++x) {
      if (cls[x] >= 0) continue;
      std::vector<std::size_t> members{x};
      cls[x] = static_cast<int>(out.size());
      for (std::size_t head = 0; head < members.size(); ++head) {
        for (const auto& g : gens_) {
          const std::size_t y = index_of(g * elems_[members[head]] * g.inverse());
          if (cls[y] >= 0) continue;
          cls[y] = static_cast<int>(out.size());
          members.push_back(y);
        }
      }
      std::sort(members.begin(), members.end());
      out.push_back(std::move(members));
    }
    return out;
  }

  /// Number of conjugacy classes of p-regular elements. By Brauer's
  /// theorem this equals the number of simple kH-modules over a splitting
  /// field of characteristic p, i.e. #IBr H.
  std::size_t p_regular_class_count(std::uint64_t p) const {
    if (!is_prime(p)) throw InvalidArgument("p must be prime");
    std::size_t c = 0;
    for (const auto& cl : conjugacy_classes())
      if (elems_[cl.front()].order() % p != 0) ++c;
    return c;
  }

  /// Orbits of the natural action on {0..n-1}, each sorted, ordered by minimum.
  std::vector<std::vector<std::size_t>> orbits() const {
    std::vector<std::size_t> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : gens_)
      for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t a = find(i), b = find(g(i));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    std::vector<std::vector<std::size_t>> out;
    std::vector<int> slot(n_, -1);
    for (std::size_t i = 0; i < n_; ++i) {
      const std::size_t r = find(i);
      if (slot[r] < 0) {
        slot[r] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[static_cast<std::size_t>(slot[r])].push_back(i);
    }
    return out;
  }

  /// Rank of the p-hyperfocal subgroup of (Z/mZ)^n x| H, H a p'-group:
  /// n minus the number of orbits, since fixed vectors are constant on
  /// orbits. For p not dividing m the Sylow p-subgroup is trivial and the
  /// rank is 0.
  HyperfocalReport hyperfocal_rank(std::uint32_t p, std::uint64_t m) const {
    if (!is_prime(p)) throw InvalidArgument("p must be prime");
    if (m == 0) throw InvalidArgument("m must be >= 1");
    for (const auto& x : elems_)
      if (x.order() % p == 0)
        throw NotPPrimeGroup("H contains " + x.to_cycle_string() + " of order divisible by " + std::to_string(p));
    HyperfocalReport r;
    r.p = p;
    r.l = p_valuation(m, p);
    r.orbit_count = orbits().size();
    if (r.l == 0) {
      r.semisimple_case = true;
      r.rank = 0;
    } else {
      r.rank = n_ - r.orbit_count;
    }
    return r;
  }

  std::string generators_string() const {
    if (gens_.empty()) return "()";
    std::string s;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ", ";
      s += gens_[i].to_cycle_string();
    }
    return s;
  }

 private:
  void add(Permutation p) {
    index_.emplace(p, elems_.size());
    elems_.push_back(std::move(p));
  }

  std::size_t n_;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elems_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

inline PermutationGroup closure(const std::vector<Permutation>& generators, std::size_t n,
                                std::size_t order_cap = PermutationGroup::kDefaultOrderCap) {
  return PermutationGroup(n, generators, order_cap);
}

/// Every subgroup of S_n generated by at most two elements, as distinct
/// element sets. For n <= 4 this is every subgroup of S_n.
inline std::vector<PermutationGroup> two_generated_subgroups(std::size_t n) {
  const PermutationGroup s = PermutationGroup::symmetric(n);
  std::set<std::vector<Permutation>> seen;
  std::vector<PermutationGroup> out;
  auto consider = [&](std::vector<Permutation> gens) {
    PermutationGroup g(n, std::move(gens));
    std::vector<Permutation> key = g.elements();
    std::sort(key.begin(), key.end());
    if (seen.insert(key).second) out.push_back(std::move(g));
  };
  consider({});
  for (std::size_t a = 0; a < s.order(); ++a)
    for (std::size_t b = a; b < s.order(); ++b) consider({s.element(a), s.element(b)});
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.order() < y.order(); });
  return out;
}

/// One representative per S_n-conjugacy class of the given subgroups.
inline std::vector<PermutationGroup> up_to_conjugacy(const std::vector<PermutationGroup>& groups) {
  if (groups.empty()) return {};
  const std::size_t n = groups.front().degree();
  const PermutationGroup s = PermutationGroup::symmetric(n);
  std::set<std::vector<Permutation>> seen;
  std::vector<PermutationGroup> out;
  for (const auto& g : groups) {
    std::vector<Permutation> key = g.elements();
    std::sort(key.begin(), key.end());
    if (seen.contains(key)) continue;
    out.push_back(g);
    for (const auto& c : s.elements()) {
      std::vector<Permutation> conj;
      for (const auto& x : g.elements()) conj.push_back(c * x * c.inverse());
      std::sort(conj.begin(), conj.end());
      seen.insert(std::move(conj));
    }
  }
  return out;
}

}  // namespace tautilt
