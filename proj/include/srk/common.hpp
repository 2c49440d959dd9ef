#ifndef SRK_COMMON_HPP
#define SRK_COMMON_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace srk {

// Group elements are identified by their mixed-radix index.
using Elem = int;

// A set of elements, kept sorted ascending. Subsets and subgroups share this
// representation; operations that need an actual subgroup check for one.
using Subset = std::vector<Elem>;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed arguments or input data. CLI exit code 2.
struct invalid_input : error {
  using error::error;
};

// A configured size limit was exceeded. CLI exit code 3.
struct cap_exceeded : error {
  using error::error;
};

// A condition guaranteed by theory failed. Always a bug, never bad input.
struct internal_error : error {
  using error::error;
};

struct Caps {
  int group = 64;          // max |G| for subgroup and automorphism scans
  int sring_enum = 16;     // max |G| for full S-ring enumeration
  int orbit_blocks = 14;   // max number of orbit blocks in the merge scan
  long closure = 1000000;  // max size of table closures
};

Subset set_union(const Subset& a, const Subset& b);
Subset set_intersect(const Subset& a, const Subset& b);
Subset set_difference(const Subset& a, const Subset& b);
bool set_contains(const Subset& a, Elem x);
bool is_subset_of(const Subset& a, const Subset& b);

bool is_prime(int n);
std::vector<int> prime_divisors(int n);
int valuation(int n, int p);
int ipow(int b, int e);

}  // namespace srk

#endif
