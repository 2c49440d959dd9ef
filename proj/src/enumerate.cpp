#include "srk/enumerate.hpp"

#include <algorithm>

namespace srk {

namespace {

// Backtracking over inverse-closed partitions. Classes are completed one at
// a time, least uncovered element first; the negation of a finished class is
// forced immediately. Whenever a class completes, its products with all
// finished classes are convolved: coefficients must be constant on finished
// classes, and the coefficient profile splits the remaining elements into
// cells that future classes may not straddle.
struct DirectScan {
  const AbelianGroup& G;
  const std::function<void(const SRing&)>& emit;
  int n;
  std::vector<int> addt, negt;
  std::vector<int> cls;                   // class id per element, -1 open
  std::vector<Subset> classes;            // finished classes
  std::vector<std::vector<int>> sig;      // coefficient profile per element
  int sig_len = 0;

  DirectScan(const AbelianGroup& g, const std::function<void(const SRing&)>& e)
      : G(g), emit(e), n(g.order) {
    addt.resize((size_t)n * n);
    negt.resize(n);
    for (Elem a = 0; a < n; ++a) {
      negt[a] = G.neg(a);
      for (Elem b = 0; b < n; ++b) addt[(size_t)a * n + b] = G.add(a, b);
    }
    cls.assign(n, -1);
    sig.assign(n, {});
  }

  struct Undo {
    size_t classes_before;
    int sig_before;
  };

  // Install new classes and run the product checks. On failure the caller
  // must still unwind with the returned undo record.
  bool install(const std::vector<Subset>& fresh, Undo& u) {
    u.classes_before = classes.size();
    u.sig_before = sig_len;
    for (const Subset& C : fresh) {
      int id = (int)classes.size();
      for (Elem x : C) cls[x] = id;
      classes.push_back(C);
    }
    std::vector<int> conv(n);
    for (size_t k = u.classes_before; k < classes.size(); ++k) {
      for (size_t i = 0; i <= k; ++i) {
        std::fill(conv.begin(), conv.end(), 0);
        for (Elem a : classes[i])
          for (Elem b : classes[k]) ++conv[addt[(size_t)a * n + b]];
        for (const Subset& Z : classes) {
          int v = conv[Z[0]];
          for (Elem z : Z)
            if (conv[z] != v) return false;
        }
        for (Elem e = 0; e < n; ++e)
          if (cls[e] < 0) sig[e].push_back(conv[e]);
        ++sig_len;
      }
    }
    return true;
  }

  void unwind(const Undo& u) {
    while (classes.size() > u.classes_before) {
      for (Elem x : classes.back()) cls[x] = -1;
      classes.pop_back();
    }
    sig_len = u.sig_before;
    for (Elem e = 0; e < n; ++e)
      if (cls[e] < 0 && (int)sig[e].size() > sig_len) sig[e].resize(sig_len);
  }

  void run() {
    Undo u;
    bool ok = install({{0}}, u);
    if (ok) rec();
    unwind(u);
  }

  void rec() {
    Elem x = -1;
    for (Elem e = 0; e < n; ++e)
      if (cls[e] < 0) {
        x = e;
        break;
      }
    if (x < 0) {
      std::vector<Subset> parts = classes;
      std::sort(parts.begin(), parts.end());
      emit(validate_sring(G, parts));
      return;
    }
    std::vector<Elem> mates;
    for (Elem e = x + 1; e < n; ++e)
      if (cls[e] < 0 && sig[e] == sig[x]) mates.push_back(e);
    if (mates.size() > 25) throw cap_exceeded("partition scan cell too large");
    long total = 1L << mates.size();
    for (long mask = 0; mask < total; ++mask) {
      Subset C{x};
      for (size_t i = 0; i < mates.size(); ++i)
        if (mask & (1L << i)) C.push_back(mates[i]);
      Subset D(C.size());
      for (size_t i = 0; i < C.size(); ++i) D[i] = negt[C[i]];
      std::sort(D.begin(), D.end());
      std::vector<Subset> fresh;
      if (D == C) {
        fresh = {C};
      } else {
        bool ok = set_intersect(C, D).empty();
        for (size_t i = 0; ok && i < D.size(); ++i)
          if (cls[D[i]] >= 0 || sig[D[i]] != sig[D[0]]) ok = false;
        if (!ok) continue;
        fresh = {C, D};
      }
      Undo u;
      if (install(fresh, u)) rec();
      unwind(u);
    }
  }
};

void canonical_sort(std::vector<SRing>& rings) {
  std::sort(rings.begin(), rings.end(), [](const SRing& a, const SRing& b) {
    if (a.rank() != b.rank()) return a.rank() > b.rank();
    return a.basic_sets < b.basic_sets;
  });
}

}  // namespace

void for_each_sring(const AbelianGroup& G, const std::function<void(const SRing&)>& fn,
                    const Caps& caps) {
  if (G.order > caps.sring_enum)
    throw cap_exceeded("S-ring enumeration capped at order " + std::to_string(caps.sring_enum));
  DirectScan scan(G, fn);
  scan.run();
}

std::vector<SRing> enumerate_all_srings(const AbelianGroup& G, const Caps& caps) {
  std::vector<SRing> out;
  for_each_sring(G, [&](const SRing& A) { out.push_back(A); }, caps);
  canonical_sort(out);
  return out;
}

std::vector<SRing> enumerate_k_invariant_srings(const AbelianGroup& G, const AutGroup& K,
                                                const Caps& caps) {
  std::vector<Subset> blocks = orbits(K, G);
  int B = (int)blocks.size();
  if (B > caps.orbit_blocks)
    throw cap_exceeded("orbit count " + std::to_string(B) + " exceeds merge-scan cap " +
                       std::to_string(caps.orbit_blocks));
  // negation permutes the blocks
  std::vector<int> negblock(B);
  {
    std::vector<int> block_of(G.order);
    for (int i = 0; i < B; ++i)
      for (Elem x : blocks[i]) block_of[x] = i;
    for (int i = 0; i < B; ++i) negblock[i] = block_of[G.neg(blocks[i][0])];
  }
  std::vector<SRing> out;
  std::vector<int> assign(B, -1);
  assign[0] = 0;  // the identity orbit is always a class of its own

  auto leaf = [&]() {
    int nc = 1 + *std::max_element(assign.begin(), assign.end());
    // the induced partition of blocks must be stable under negation
    std::vector<int> image(nc, -1);
    for (int i = 0; i < B; ++i) {
      int c = assign[i], d = assign[negblock[i]];
      if (image[c] == -1)
        image[c] = d;
      else if (image[c] != d)
        return;
    }
    std::vector<Subset> parts(nc);
    for (int i = 0; i < B; ++i)
      for (Elem x : blocks[i]) parts[assign[i]].push_back(x);
    for (auto& p : parts) std::sort(p.begin(), p.end());
    try {
      out.push_back(validate_sring(G, parts));
    } catch (const sring_invalid&) {
    }
  };

  // restricted-growth scan over merge patterns of blocks 1..B-1
  auto rec = [&](auto&& self, int b, int maxc) -> void {
    if (b == B) {
      leaf();
      return;
    }
    for (int c = 1; c <= maxc + 1; ++c) {
      assign[b] = c;
      self(self, b + 1, std::max(maxc, c));
    }
    assign[b] = -1;
  };
  if (B == 1)
    leaf();
  else
    rec(rec, 1, 0);
  canonical_sort(out);
  return out;
}

}  // namespace srk
