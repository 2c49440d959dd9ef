#include "srk/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace srk {

Elem AbelianGroup::add(Elem a, Elem b) const {
  Elem out = 0, base = 1;
  for (int d : factors) {
    int ra = a % d, rb = b % d;
    a /= d;
    b /= d;
    out += ((ra + rb) % d) * base;
    base *= d;
  }
  return out;
}

Elem AbelianGroup::neg(Elem a) const {
  Elem out = 0, base = 1;
  for (int d : factors) {
    int ra = a % d;
    a /= d;
    out += ((d - ra) % d) * base;
    base *= d;
  }
  return out;
}

Elem AbelianGroup::scalar(long long m, Elem a) const {
  Elem out = 0, base = 1;
  for (int d : factors) {
    int ra = a % d;
    a /= d;
    long long r = (m % d) * ra % d;
    if (r < 0) r += d;
    out += (int)r * base;
    base *= d;
  }
  return out;
}

int AbelianGroup::elem_order(Elem a) const {
  int ord = 1;
  for (int d : factors) {
    int ra = a % d;
    a /= d;
    int o = d / std::gcd(d, ra == 0 ? d : ra);
    ord = std::lcm(ord, o);
  }
  return ord;
}

std::vector<int> AbelianGroup::decode(Elem a) const {
  std::vector<int> r(factors.size());
  for (size_t i = 0; i < factors.size(); ++i) {
    r[i] = a % factors[i];
    a /= factors[i];
  }
  return r;
}

Elem AbelianGroup::encode(const std::vector<int>& residues) const {
  if (residues.size() != factors.size())
    throw invalid_input("element tuple has wrong length");
  Elem out = 0, base = 1;
  for (size_t i = 0; i < factors.size(); ++i) {
    int r = residues[i] % factors[i];
    if (r < 0) r += factors[i];
    out += r * base;
    base *= factors[i];
  }
  return out;
}

Elem AbelianGroup::unit_vector(int i) const {
  Elem base = 1;
  for (int j = 0; j < i; ++j) base *= factors[j];
  return factors[i] == 1 ? 0 : base;
}

Subset AbelianGroup::all_elements() const {
  Subset s(order);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

std::vector<int> AbelianGroup::canonical_form() const {
  std::vector<int> pows;
  for (int d : factors) {
    int rest = d;
    for (int p = 2; p <= rest; ++p) {
      if (rest % p == 0) {
        int q = 1;
        while (rest % p == 0) {
          rest /= p;
          q *= p;
        }
        pows.push_back(q);
      }
    }
  }
  std::sort(pows.begin(), pows.end());
  return pows;
}

AbelianGroup make_group(std::vector<int> factors) {
  AbelianGroup G;
  long long order = 1;
  for (int d : factors) {
    if (d <= 0) throw invalid_input("cyclic factor must be >= 1");
    order *= d;
    if (order > 65536) throw invalid_input("group order too large for this representation");
    G.exponent = std::lcm(G.exponent, d);
  }
  G.order = (int)order;
  G.factors = std::move(factors);
  return G;
}

Subset generated_subgroup(const AbelianGroup& G, const Subset& X) {
  std::vector<char> in(G.order, 0);
  Subset span{0};
  in[0] = 1;
  for (Elem x : X) {
    if (in[x]) continue;
    // extend span by all multiples of x
    Subset grown = span;
    int o = G.elem_order(x);
    Elem m = 0;
    for (int r = 1; r < o; ++r) {
      m = G.add(m, x);
      for (Elem s : span) {
        Elem t = G.add(s, m);
        if (!in[t]) {
          in[t] = 1;
          grown.push_back(t);
        }
      }
    }
    span = std::move(grown);
  }
  std::sort(span.begin(), span.end());
  return span;
}

Subset subset_radical(const AbelianGroup& G, const Subset& X) {
  if (X.empty()) throw invalid_input("radical of the empty set is undefined");
  Subset rad;
  for (Elem g = 0; g < G.order; ++g) {
    Subset shifted(X.size());
    for (size_t i = 0; i < X.size(); ++i) shifted[i] = G.add(g, X[i]);
    std::sort(shifted.begin(), shifted.end());
    if (shifted == X) rad.push_back(g);
  }
  return rad;
}

bool is_subgroup(const AbelianGroup& G, const Subset& S) {
  if (S.empty() || !set_contains(S, 0)) return false;
  for (Elem a : S)
    for (Elem b : S)
      if (!set_contains(S, G.add(a, b))) return false;
  return true;
}

std::vector<Subset> all_subgroups(const AbelianGroup& G, const Caps& caps) {
  if (G.order > caps.group)
    throw cap_exceeded("group order " + std::to_string(G.order) +
                       " exceeds subgroup enumeration cap " + std::to_string(caps.group));
  std::set<Subset> subs;
  for (Elem x = 0; x < G.order; ++x) subs.insert(generated_subgroup(G, {x}));
  // close under pairwise joins
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subset> cur(subs.begin(), subs.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        Subset join = generated_subgroup(G, set_union(cur[i], cur[j]));
        if (subs.insert(join).second) grew = true;
      }
  }
  std::vector<Subset> out(subs.begin(), subs.end());
  std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

Subset sylow_subgroup(const AbelianGroup& G, int p) {
  if (!is_prime(p)) throw invalid_input("sylow subgroup needs a prime");
  Subset s;
  for (Elem x = 0; x < G.order; ++x) {
    int o = G.elem_order(x);
    while (o % p == 0) o /= p;
    if (o == 1) s.push_back(x);
  }
  return s;
}

Endo endo_identity(int n) {
  Endo t(n);
  std::iota(t.begin(), t.end(), 0);
  return t;
}

Endo compose(const Endo& f, const Endo& g) {
  Endo t(g.size());
  for (size_t i = 0; i < g.size(); ++i) t[i] = f[g[i]];
  return t;
}

Endo inverse_table(const Endo& f) {
  Endo t(f.size());
  for (size_t i = 0; i < f.size(); ++i) t[f[i]] = (int)i;
  return t;
}

int table_order(const Endo& t) {
  Endo id = endo_identity((int)t.size());
  Endo cur = t;
  int o = 1;
  while (cur != id) {
    cur = compose(cur, t);
    ++o;
  }
  return o;
}

bool is_endomorphism(const AbelianGroup& G, const Endo& t) {
  if ((int)t.size() != G.order) return false;
  for (Elem a = 0; a < G.order; ++a) {
    if (t[a] < 0 || t[a] >= G.order) return false;
    for (Elem b = a; b < G.order; ++b)
      if (t[G.add(a, b)] != G.add(t[a], t[b])) return false;
  }
  return t.empty() || t[0] == 0;
}

bool is_automorphism(const AbelianGroup& G, const Endo& t) {
  if (!is_endomorphism(G, t)) return false;
  std::vector<char> seen(G.order, 0);
  for (Elem x : t) {
    if (seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

Endo scalar_endo(const AbelianGroup& G, long long m) {
  Endo t(G.order);
  for (Elem x = 0; x < G.order; ++x) t[x] = G.scalar(m, x);
  return t;
}

Subset apply_to_set(const Endo& t, const Subset& X) {
  Subset out(X.size());
  for (size_t i = 0; i < X.size(); ++i) out[i] = t[X[i]];
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
struct TableHash {
  size_t operator()(const Endo& t) const {
    size_t h = t.size();
    for (int v : t) h = h * 1000003u + (size_t)v;
    return h;
  }
};
}  // namespace

std::vector<Endo> close_tables(const std::vector<Endo>& gens, int degree, long cap) {
  std::unordered_set<Endo, TableHash> seen;
  std::vector<Endo> elems;
  auto push = [&](const Endo& t) {
    if (seen.insert(t).second) {
      elems.push_back(t);
      if ((long)elems.size() > cap) throw cap_exceeded("table closure exceeds cap");
      return true;
    }
    return false;
  };
  push(endo_identity(degree));
  for (const Endo& g : gens) push(g);
  for (size_t i = 0; i < elems.size(); ++i) {
    // copy: elems may reallocate while growing
    Endo a = elems[i];
    for (size_t j = 0; j < elems.size(); ++j) {
      Endo b = elems[j];
      push(compose(a, b));
      push(compose(b, a));
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool AutGroup::contains(const Endo& t) const {
  return std::binary_search(elems.begin(), elems.end(), t);
}

bool AutGroup::is_abelian() const {
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = i + 1; j < elems.size(); ++j)
      if (compose(elems[i], elems[j]) != compose(elems[j], elems[i])) return false;
  return true;
}

AutGroup AutGroup::trivial(int n) {
  AutGroup K;
  K.elems = {endo_identity(n)};
  K.gens = K.elems;
  return K;
}

AutGroup AutGroup::from_generators(const AbelianGroup& G, std::vector<Endo> generators,
                                   long cap) {
  for (const Endo& t : generators)
    if (!is_automorphism(G, t)) throw invalid_input("generator table is not an automorphism");
  AutGroup K;
  K.elems = close_tables(generators, G.order, cap);
  K.gens = generators.empty() ? std::vector<Endo>{endo_identity(G.order)} : std::move(generators);
  return K;
}

AutGroup AutGroup::from_elements(std::vector<Endo> elements) {
  AutGroup K;
  std::sort(elements.begin(), elements.end());
  K.elems = elements;
  K.gens = std::move(elements);
  return K;
}

namespace {

// Depth-first choice of images in G2 for the canonical generators of G1; a
// partial choice survives only while it stays injective on the subgroup
// spanned so far.
bool iso_search(const AbelianGroup& G1, const AbelianGroup& G2, size_t depth,
                std::vector<Elem>& images, const std::function<bool(const Endo&)>& visit) {
  if (depth == G1.factors.size()) {
    Endo t(G1.order);
    for (Elem x = 0; x < G1.order; ++x) {
      auto r = G1.decode(x);
      Elem img = 0;
      for (size_t j = 0; j < r.size(); ++j) img = G2.add(img, G2.scalar(r[j], images[j]));
      t[x] = img;
    }
    return visit(t);
  }
  int d = G1.factors[depth];
  for (Elem a = 0; a < G2.order; ++a) {
    if (G2.scalar(d, a) != 0) continue;
    images.push_back(a);
    std::vector<char> seen(G2.order, 0);
    bool ok = true;
    long span = 1;
    for (size_t j = 0; j <= depth; ++j) span *= G1.factors[j];
    for (long idx = 0; idx < span && ok; ++idx) {
      long v = idx;
      Elem img = 0;
      for (size_t j = 0; j <= depth; ++j) {
        int r = (int)(v % G1.factors[j]);
        v /= G1.factors[j];
        img = G2.add(img, G2.scalar(r, images[j]));
      }
      if (seen[img])
        ok = false;
      else
        seen[img] = 1;
    }
    bool keep_going = true;
    if (ok) keep_going = iso_search(G1, G2, depth + 1, images, visit);
    images.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

void for_each_isomorphism(const AbelianGroup& G1, const AbelianGroup& G2,
                          const std::function<bool(const Endo&)>& visit) {
  if (G1.order != G2.order) return;
  if (G1.canonical_form() != G2.canonical_form()) return;
  std::vector<Elem> images;
  iso_search(G1, G2, 0, images, visit);
}

AutGroup automorphism_group(const AbelianGroup& G, const Caps& caps) {
  if (G.order > caps.group)
    throw cap_exceeded("group order " + std::to_string(G.order) +
                       " exceeds automorphism enumeration cap " + std::to_string(caps.group));
  std::vector<Endo> elems;
  for_each_isomorphism(G, G, [&](const Endo& t) {
    elems.push_back(t);
    return true;
  });
  std::sort(elems.begin(), elems.end());
  AutGroup K;
  K.elems = std::move(elems);
  K.gens = K.elems;
  return K;
}

AutGroup multiplier_group(const AbelianGroup& G) {
  std::set<Endo> maps;
  for (int m = 1; m <= G.exponent; ++m)
    if (std::gcd(m, G.order) == 1) maps.insert(scalar_endo(G, m));
  AutGroup K;
  K.elems.assign(maps.begin(), maps.end());
  K.gens = K.elems;
  return K;
}

Subset orbit_of(const AutGroup& K, Elem x) {
  Subset o;
  o.reserve(K.elems.size());
  for (const Endo& t : K.elems) o.push_back(t[x]);
  std::sort(o.begin(), o.end());
  o.erase(std::unique(o.begin(), o.end()), o.end());
  return o;
}

std::vector<Subset> orbits(const AutGroup& K, const AbelianGroup& G) {
  if (K.degree() != G.order) throw invalid_input("automorphism group degree mismatch");
  std::vector<char> done(G.order, 0);
  std::vector<Subset> out;
  for (Elem x = 0; x < G.order; ++x) {
    if (done[x]) continue;
    Subset o = orbit_of(K, x);
    for (Elem y : o) done[y] = 1;
    out.push_back(std::move(o));
  }
  return out;
}

AutGroup conjugate(const AutGroup& K, const Endo& sigma) {
  Endo inv = inverse_table(sigma);
  std::vector<Endo> elems;
  elems.reserve(K.elems.size());
  for (const Endo& k : K.elems) elems.push_back(compose(inv, compose(k, sigma)));
  std::sort(elems.begin(), elems.end());
  AutGroup C;
  C.elems = std::move(elems);
  C.gens = C.elems;
  return C;
}

bool conjugate_in(const AutGroup& ambient, const AutGroup& K1, const AutGroup& K2) {
  if (K1.order() != K2.order()) return false;
  for (const Endo& s : ambient.elems)
    if (conjugate(K1, s).elems == K2.elems) return true;
  return false;
}

std::vector<AutGroup> subgroups_of(const AutGroup& K) {
  int n = K.degree();
  std::set<std::vector<Endo>> subs;
  for (const Endo& t : K.elems) subs.insert(close_tables({t}, n, (long)K.order()));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Endo>> cur(subs.begin(), subs.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        std::vector<Endo> gens = cur[i];
        gens.insert(gens.end(), cur[j].begin(), cur[j].end());
        if (subs.insert(close_tables(gens, n, (long)K.order())).second) grew = true;
      }
  }
  std::vector<AutGroup> out;
  for (auto& s : subs) out.push_back(AutGroup::from_elements(s));
  std::sort(out.begin(), out.end(), [](const AutGroup& a, const AutGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elems < b.elems;
  });
  return out;
}

namespace {

// Isomorphism type of an abelian p-group from the sizes of its p^j-torsion
// layers, as exponents lambda_1 >= lambda_2 >= ...
std::vector<int> p_group_type(const AbelianGroup& G, const Subset& S, int p) {
  std::vector<int> torsion_log;  // log_p #{x : p^j x = 0}
  long long pj = 1;
  while (true) {
    int cnt = 0;
    for (Elem x : S)
      if (G.scalar(pj, x) == 0) ++cnt;
    int lg = 0;
    while (cnt > 1) {
      cnt /= p;
      ++lg;
    }
    torsion_log.push_back(lg);
    if (ipow(p, lg) == (int)S.size() || torsion_log.size() > 30) break;
    pj *= p;
  }
  // c_j = #{i : lambda_i >= j}
  std::vector<int> c;
  for (size_t j = 1; j < torsion_log.size(); ++j)
    c.push_back(torsion_log[j] - torsion_log[j - 1]);
  std::vector<int> lambda;
  for (int i = 1; !c.empty() && i <= c[0]; ++i) {
    int cnt = 0;
    for (int cj : c)
      if (cj >= i) ++cnt;
    lambda.push_back(cnt);
  }
  return lambda;  // descending by construction
}

bool pick_generators(const AbelianGroup& G, const Subset& S, int p,
                     const std::vector<int>& lambda, size_t i, Subset& span,
                     std::vector<Elem>& gens) {
  if (i == lambda.size()) return true;
  int q = ipow(p, lambda[i]);
  for (Elem g : S) {
    if (G.elem_order(g) != q) continue;
    bool meets = false;
    Elem m = 0;
    for (int r = 1; r < q && !meets; ++r) {
      m = G.add(m, g);
      if (set_contains(span, m)) meets = true;
    }
    if (meets) continue;
    Subset saved = span;
    Subset grown = span;
    m = 0;
    for (int r = 1; r < q; ++r) {
      m = G.add(m, g);
      for (Elem s : saved) grown.push_back(G.add(s, m));
    }
    std::sort(grown.begin(), grown.end());
    span = std::move(grown);
    gens.push_back(g);
    if (pick_generators(G, S, p, lambda, i + 1, span, gens)) return true;
    gens.pop_back();
    span = std::move(saved);
  }
  return false;
}

}  // namespace

SubgroupDecomposition decompose_subgroup(const AbelianGroup& G, const Subset& S) {
  if (!is_subgroup(G, S)) throw invalid_input("decompose_subgroup needs a subgroup");
  std::vector<int> factors;
  std::vector<Elem> gens;
  for (int p : prime_divisors((int)S.size())) {
    Subset Sp;
    for (Elem x : S) {
      int o = G.elem_order(x);
      while (o % p == 0) o /= p;
      if (o == 1) Sp.push_back(x);
    }
    std::vector<int> lambda = p_group_type(G, Sp, p);
    Subset span{0};
    std::vector<Elem> pgens;
    if (!pick_generators(G, Sp, p, lambda, 0, span, pgens))
      throw internal_error("abelian group decomposition failed");
    for (int l : lambda) factors.push_back(ipow(p, l));
    gens.insert(gens.end(), pgens.begin(), pgens.end());
  }
  SubgroupDecomposition out;
  out.group = make_group(factors);
  out.embed.resize(out.group.order);
  std::vector<char> hit(G.order, 0);
  for (Elem idx = 0; idx < out.group.order; ++idx) {
    auto r = out.group.decode(idx);
    Elem x = 0;
    for (size_t j = 0; j < gens.size(); ++j) x = G.add(x, G.scalar(r[j], gens[j]));
    if (hit[x]) throw internal_error("subgroup decomposition is not injective");
    hit[x] = 1;
    out.embed[idx] = x;
  }
  return out;
}

}  // namespace srk
