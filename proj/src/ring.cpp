#include "srk/ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace srk {

namespace {

std::string triple_msg(const char* what, Elem a, Elem b, Elem c) {
  return std::string("ring axiom violated (") + what + ") at elements " + std::to_string(a) +
         ", " + std::to_string(b) + ", " + std::to_string(c);
}

}  // namespace

CommRing ring_from_tables(AbelianGroup add, std::vector<int> mul, int one) {
  int n = add.order;
  if (n > 4096) throw invalid_input("ring order too large for the table representation");
  if (mul.size() != (size_t)n * n) throw invalid_input("multiplication table has wrong size");
  for (int v : mul)
    if (v < 0 || v >= n) throw invalid_input("multiplication table entry out of range");
  if (one < 0 || one >= n) throw invalid_input("identity index out of range");
  CommRing R;
  R.add = std::move(add);
  R.mul = std::move(mul);
  R.one = one;
  for (Elem a = 0; a < n; ++a) {
    if (R.mul_at(R.one, a) != a) throw invalid_input(triple_msg("identity", R.one, a, a));
    for (Elem b = a; b < n; ++b) {
      if (R.mul_at(a, b) != R.mul_at(b, a))
        throw invalid_input(triple_msg("commutativity", a, b, 0));
    }
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (R.mul_at(R.mul_at(a, b), c) != R.mul_at(a, R.mul_at(b, c)))
          throw invalid_input(triple_msg("associativity", a, b, c));
        if (R.mul_at(a, R.add.add(b, c)) != R.add.add(R.mul_at(a, b), R.mul_at(a, c)))
          throw invalid_input(triple_msg("distributivity", a, b, c));
      }
  return R;
}

CommRing make_zn(int n) {
  if (n < 1) throw invalid_input("modulus must be >= 1");
  if (n > 4096) throw invalid_input("ring order too large for the table representation");
  AbelianGroup G = make_group({n});
  std::vector<int> mul((size_t)n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[(size_t)a * n + b] = (a * b) % n;
  return ring_from_tables(G, std::move(mul), n == 1 ? 0 : 1);
}

namespace {

// polynomials over Z_p, coefficients ascending, no trailing zeros enforced
using Poly = std::vector<int>;

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

// remainder of a mod m, m monic
Poly poly_mod(Poly a, const Poly& m, int p) {
  while (a.size() >= m.size()) {
    int lead = a.back();
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      a[i + shift] = ((a[i + shift] - lead * m[i]) % p + p) % p;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

bool poly_irreducible(const Poly& f, int p) {
  int k = (int)f.size() - 1;
  // trial division by every monic polynomial of degree 1..k/2
  for (int d = 1; 2 * d <= k; ++d) {
    int count = ipow(p, d);
    for (int idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      int v = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = v % p;
        v /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

CommRing make_gf(int p, int k) {
  if (!is_prime(p) || k < 1) throw invalid_input("GF(p^k) needs a prime p and k >= 1");
  long long ord = 1;
  for (int i = 0; i < k; ++i) {
    ord *= p;
    if (ord > 4096) throw invalid_input("ring order too large for the table representation");
  }
  // smallest irreducible monic polynomial, ordered by the mixed-radix index
  // of its non-leading coefficients
  Poly f;
  int count = ipow(p, k);
  for (int idx = 0; idx < count; ++idx) {
    Poly cand(k + 1, 0);
    int v = idx;
    for (int i = 0; i < k; ++i) {
      cand[i] = v % p;
      v /= p;
    }
    cand[k] = 1;
    if (k == 1 || poly_irreducible(cand, p)) {
      f = cand;
      break;
    }
  }
  if (f.empty()) throw internal_error("no irreducible polynomial found");
  AbelianGroup G = make_group(std::vector<int>(k, p));
  int n = G.order;
  std::vector<int> mul((size_t)n * n);
  for (Elem a = 0; a < n; ++a) {
    Poly pa;
    for (int r : G.decode(a)) pa.push_back(r);
    while (!pa.empty() && pa.back() == 0) pa.pop_back();
    for (Elem b = 0; b < n; ++b) {
      Poly pb;
      for (int r : G.decode(b)) pb.push_back(r);
      while (!pb.empty() && pb.back() == 0) pb.pop_back();
      Poly prod = poly_mod(poly_mul(pa, pb, p), f, p);
      prod.resize(k, 0);
      std::vector<int> residues(prod.begin(), prod.end());
      mul[(size_t)a * n + b] = G.encode(residues);
    }
  }
  std::vector<int> one_res(k, 0);
  one_res[0] = 1;
  return ring_from_tables(G, std::move(mul), G.encode(one_res));
}

CommRing make_dual_numbers(int p) {
  if (!is_prime(p)) throw invalid_input("dual numbers need a prime modulus");
  AbelianGroup G = make_group({p, p});
  int n = G.order;
  std::vector<int> mul((size_t)n * n);
  for (Elem x = 0; x < n; ++x) {
    auto rx = G.decode(x);
    for (Elem y = 0; y < n; ++y) {
      auto ry = G.decode(y);
      int a = rx[0] * ry[0] % p;
      int b = (rx[0] * ry[1] + rx[1] * ry[0]) % p;
      mul[(size_t)x * n + y] = G.encode({a, b});
    }
  }
  return ring_from_tables(G, std::move(mul), G.encode({1, 0}));
}

CommRing make_product(const CommRing& a, const CommRing& b) {
  if ((long long)a.order() * b.order() > 4096)
    throw invalid_input("ring order too large for the table representation");
  std::vector<int> factors = a.add.factors;
  factors.insert(factors.end(), b.add.factors.begin(), b.add.factors.end());
  AbelianGroup G = make_group(factors);
  int n = G.order, na = a.order();
  std::vector<int> mul((size_t)n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem xa = x % na, xb = x / na;
      Elem ya = y % na, yb = y / na;
      mul[(size_t)x * n + y] = a.mul_at(xa, ya) + na * b.mul_at(xb, yb);
    }
  return ring_from_tables(G, std::move(mul), a.one + na * b.one);
}

UnitGroup units(const CommRing& R) {
  UnitGroup U;
  U.inv.assign(R.order(), -1);
  for (Elem x = 0; x < R.order(); ++x)
    for (Elem y = 0; y < R.order(); ++y)
      if (R.mul_at(x, y) == R.one) {
        U.inv[x] = y;
        U.units.push_back(x);
        break;
      }
  return U;
}

bool is_field(const CommRing& R) {
  return (int)units(R).units.size() == R.order() - 1;
}

AutGroup k_r(const CommRing& R) {
  UnitGroup U = units(R);
  std::vector<Endo> elems;
  for (Elem u : U.units) {
    Endo t(R.order());
    for (Elem x = 0; x < R.order(); ++x) t[x] = R.mul_at(u, x);
    elems.push_back(std::move(t));
  }
  std::sort(elems.begin(), elems.end());
  AutGroup K;
  K.elems = std::move(elems);
  K.gens = K.elems;
  return K;
}

Subset ring_radical(const CommRing& R) {
  Subset rad;
  for (Elem x = 0; x < R.order(); ++x) {
    Elem pw = x;
    bool nil = false;
    for (int j = 1; j <= R.order(); ++j) {
      if (pw == 0) {
        nil = true;
        break;
      }
      pw = R.mul_at(pw, x);
    }
    if (nil) rad.push_back(x);
  }
  // the nilpotent set of a finite commutative ring is an ideal
  for (Elem a : rad) {
    for (Elem b : rad)
      if (!set_contains(rad, R.add.add(a, b))) throw internal_error("radical not additively closed");
    for (Elem r = 0; r < R.order(); ++r)
      if (!set_contains(rad, R.mul_at(r, a))) throw internal_error("radical not an ideal");
  }
  return rad;
}

bool is_local(const CommRing& R) {
  UnitGroup U = units(R);
  Subset nonunits = set_difference(R.add.all_elements(), U.units);
  for (Elem a : nonunits)
    for (Elem b : nonunits)
      if (!set_contains(nonunits, R.add.add(a, b))) return false;
  return true;
}

namespace {

long long mod_inverse(long long a, long long m) {
  long long t = 0, newt = 1, r = m, newr = a % m;
  while (newr != 0) {
    long long q = r / newr;
    std::swap(t, newt);
    newt -= q * t;
    std::swap(r, newr);
    newr -= q * r;
  }
  if (r != 1) throw internal_error("mod_inverse of non-unit");
  return ((t % m) + m) % m;
}

}  // namespace

std::vector<CommRing> primary_components(const CommRing& R) {
  std::vector<CommRing> comps;
  int chr = R.add.elem_order(R.one);
  for (int p : prime_divisors(R.order())) {
    int a = valuation(chr, p);
    long long pa = ipow(p, a);
    long long m = chr / pa;
    long long c = (m == 1) ? 1 : m * mod_inverse(m % pa, pa);
    Elem ep = R.add.scalar(c, R.one);
    Subset S = sylow_subgroup(R.add, p);
    SubgroupDecomposition dec = decompose_subgroup(R.add, S);
    std::vector<int> back(R.order(), -1);
    for (Elem i = 0; i < dec.group.order; ++i) back[dec.embed[i]] = i;
    int np = dec.group.order;
    std::vector<int> mul((size_t)np * np);
    for (Elem i = 0; i < np; ++i)
      for (Elem j = 0; j < np; ++j) {
        Elem prod = R.mul_at(dec.embed[i], dec.embed[j]);
        if (back[prod] < 0) throw internal_error("component not multiplicatively closed");
        mul[(size_t)i * np + j] = back[prod];
      }
    if (back[ep] < 0) throw internal_error("component identity outside component");
    comps.push_back(ring_from_tables(dec.group, std::move(mul), back[ep]));
  }
  // cross-check: x -> (e_p x)_p is injective, hence a bijection onto the
  // product of the components by counting
  if (!comps.empty()) {
    std::vector<Elem> idems;
    for (int p : prime_divisors(R.order())) {
      int a = valuation(chr, p);
      long long pa = ipow(p, a);
      long long m = chr / pa;
      long long c = (m == 1) ? 1 : m * mod_inverse(m % pa, pa);
      idems.push_back(R.add.scalar(c, R.one));
    }
    std::set<std::vector<Elem>> images;
    for (Elem x = 0; x < R.order(); ++x) {
      std::vector<Elem> tup;
      for (Elem ep : idems) tup.push_back(R.mul_at(ep, x));
      if (!images.insert(tup).second) throw internal_error("primary decomposition not injective");
    }
  }
  return comps;
}

bool generated_by_units(const CommRing& R) {
  return (int)generated_subgroup(R.add, units(R).units).size() == R.order();
}

bool ring_identical(const CommRing& a, const CommRing& b) {
  return a.add == b.add && a.mul == b.mul && a.one == b.one;
}

bool ring_isomorphic(const CommRing& a, const CommRing& b, const Caps& caps) {
  if (a.order() != b.order()) return false;
  if (a.order() > caps.group) throw cap_exceeded("ring isomorphism search exceeds cap");
  if (a.add.canonical_form() != b.add.canonical_form()) return false;
  if (units(a).units.size() != units(b).units.size()) return false;
  if (ring_radical(a).size() != ring_radical(b).size()) return false;
  bool found = false;
  for_each_isomorphism(a.add, b.add, [&](const Endo& f) {
    if (f[a.one] != b.one) return true;
    for (Elem x = 0; x < a.order(); ++x)
      for (Elem y = x; y < a.order(); ++y)
        if (f[a.mul_at(x, y)] != b.mul_at(f[x], f[y])) return true;
    found = true;
    return false;
  });
  return found;
}

std::optional<LocalPair> is_local_pair(const AbelianGroup& P, const AutGroup& K, Elem e) {
  if (P.order < 2 || prime_divisors(P.order).size() != 1)
    throw invalid_input("local pairs are defined on nontrivial p-groups");
  if (e < 0 || e >= P.order) throw invalid_input("base point out of range");
  if (K.degree() != P.order) throw invalid_input("automorphism group degree mismatch");
  if (!K.is_abelian()) throw invalid_input("local pair requires an abelian automorphism group");
  Subset O = orbit_of(K, e);
  Subset C = set_difference(P.all_elements(), O);
  if (C.empty() || !is_subgroup(P, C)) return std::nullopt;
  // regular and faithful action on the orbit is forced once the complement
  // is a subgroup
  if ((int)O.size() != K.order()) throw internal_error("action on orbit is not regular");
  LocalPair pair;
  pair.P = P;
  pair.K = K;
  pair.e = e;
  pair.orbit = std::move(O);
  pair.complement = std::move(C);
  return pair;
}

namespace {

Endo table_add(const AbelianGroup& P, const Endo& f, const Endo& g) {
  Endo t(f.size());
  for (size_t i = 0; i < f.size(); ++i) t[i] = P.add(f[i], g[i]);
  return t;
}

}  // namespace

CommRing ring_from_local_pair(const LocalPair& pair) {
  const AbelianGroup& P = pair.P;
  int n = P.order;
  // close K inside End(P) under composition and pointwise addition
  std::set<Endo> E(pair.K.elems.begin(), pair.K.elems.end());
  std::vector<Endo> work(E.begin(), E.end());
  for (size_t i = 0; i < work.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      for (const Endo& t : {compose(work[i], work[j]), table_add(P, work[i], work[j])}) {
        if (E.insert(t).second) {
          work.push_back(t);
          if ((int)E.size() > n)
            throw internal_error("endomorphism ring closure larger than the group");
        }
      }
    }
  }
  // T -> T(e) must be an additive isomorphism onto P
  if ((int)E.size() != n) throw internal_error("endomorphism ring has wrong size");
  std::vector<Endo> of_elem(n);
  std::vector<char> hit(n, 0);
  for (const Endo& T : E) {
    Elem v = T[pair.e];
    if (hit[v]) throw internal_error("evaluation at the base point is not injective");
    hit[v] = 1;
    of_elem[v] = T;
  }
  std::vector<int> mul((size_t)n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) mul[(size_t)x * n + y] = of_elem[x][y];
  CommRing R;
  try {
    R = ring_from_tables(P, std::move(mul), pair.e);
  } catch (const invalid_input& ex) {
    throw internal_error(std::string("transported multiplication is not a ring: ") + ex.what());
  }
  if (!is_local(R)) throw internal_error("constructed ring is not local");
  if (units(R).units != pair.orbit) throw internal_error("constructed units differ from the orbit");
  if (ring_radical(R) != pair.complement)
    throw internal_error("constructed radical differs from the complement");
  if (k_r(R).elems != pair.K.elems)
    throw internal_error("unit multiplications differ from the given group");
  return R;
}

LocalPair local_pair_from_ring(const CommRing& R) {
  if (R.order() < 2 || prime_divisors(R.order()).size() != 1)
    throw invalid_input("local pair extraction needs a ring of prime power order >= 2");
  if (!is_local(R)) throw invalid_input("ring is not local");
  auto pair = is_local_pair(R.add, k_r(R), R.one);
  if (!pair) throw internal_error("local ring did not yield a local pair");
  return *pair;
}

namespace {

struct AbelianSubgroupNode {
  std::vector<Endo> elems;  // sorted
  std::vector<Endo> gens;
};

}  // namespace

std::vector<std::vector<LocalPair>> enumerate_local_pairs(const AbelianGroup& P,
                                                          const Caps& caps) {
  if (P.order > caps.sring_enum)
    throw cap_exceeded("local pair search capped at order " + std::to_string(caps.sring_enum));
  if (P.order < 2 || prime_divisors(P.order).size() != 1)
    throw invalid_input("local pairs are defined on nontrivial p-groups");
  AutGroup aut = automorphism_group(P, caps);
  std::vector<Subset> subs = all_subgroups(P, caps);

  std::map<std::vector<Endo>, AutGroup> found;  // keyed by element list
  for (const Subset& P0 : subs) {
    if ((int)P0.size() == P.order) continue;
    Subset O = set_difference(P.all_elements(), P0);
    int nO = (int)O.size();
    // candidate elements: automorphisms stabilizing the complement, of order
    // dividing the required group size
    std::vector<Endo> pool;
    for (const Endo& t : aut.elems)
      if (nO % table_order(t) == 0 && apply_to_set(t, P0) == P0) pool.push_back(t);

    std::set<std::vector<Endo>> seen;
    std::vector<AbelianSubgroupNode> queue;
    AbelianSubgroupNode triv{{endo_identity(P.order)}, {}};
    seen.insert(triv.elems);
    queue.push_back(triv);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      AbelianSubgroupNode node = queue[qi];
      if ((int)node.elems.size() == nO) {
        if (orbit_of(AutGroup::from_elements(node.elems), O[0]) == O) {
          AutGroup K;
          K.elems = node.elems;
          K.gens = node.gens.empty() ? std::vector<Endo>{endo_identity(P.order)} : node.gens;
          found.emplace(K.elems, K);
        }
        continue;
      }
      for (const Endo& t : pool) {
        if (std::binary_search(node.elems.begin(), node.elems.end(), t)) continue;
        bool commutes = true;
        for (const Endo& g : node.gens)
          if (compose(t, g) != compose(g, t)) {
            commutes = false;
            break;
          }
        if (!commutes) continue;
        std::vector<Endo> gens = node.gens;
        gens.push_back(t);
        std::vector<Endo> closed;
        try {
          closed = close_tables(gens, P.order, nO);
        } catch (const cap_exceeded&) {
          continue;
        }
        if (nO % (int)closed.size() != 0) continue;
        if (seen.insert(closed).second) queue.push_back({closed, gens});
      }
    }
  }

  // group the found K by conjugacy under Aut(P)
  std::vector<AutGroup> Ks;
  for (auto& kv : found) Ks.push_back(kv.second);
  std::vector<int> cls(Ks.size(), -1);
  std::map<std::vector<Endo>, int> index;
  for (size_t i = 0; i < Ks.size(); ++i) index[Ks[i].elems] = (int)i;
  int nclasses = 0;
  for (size_t i = 0; i < Ks.size(); ++i) {
    if (cls[i] >= 0) continue;
    int id = nclasses++;
    for (const Endo& s : aut.elems) {
      AutGroup C = conjugate(Ks[i], s);
      auto it = index.find(C.elems);
      if (it == index.end()) throw internal_error("conjugate of a local pair group not found");
      cls[it->second] = id;
    }
  }
  std::vector<std::vector<LocalPair>> classes(nclasses);
  for (size_t i = 0; i < Ks.size(); ++i) {
    Subset O = orbit_of(Ks[i], [&] {
      // any point of the regular orbit: the unique orbit whose complement is
      // a subgroup
      for (Elem x = 1; x < P.order; ++x) {
        Subset o = orbit_of(Ks[i], x);
        if ((int)o.size() == Ks[i].order() &&
            is_subgroup(P, set_difference(P.all_elements(), o)))
          return x;
      }
      throw internal_error("regular orbit lost");
    }());
    for (Elem e : O) {
      auto pair = is_local_pair(P, Ks[i], e);
      if (!pair) throw internal_error("recorded group stopped being a local pair");
      classes[cls[i]].push_back(*pair);
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](const std::vector<LocalPair>& a, const std::vector<LocalPair>& b) {
              if (a[0].K.order() != b[0].K.order()) return a[0].K.order() < b[0].K.order();
              return a[0].K.elems < b[0].K.elems;
            });
  return classes;
}

}  // namespace srk
