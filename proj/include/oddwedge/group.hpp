#pragma once

// Small finite groups as explicit multiplication tables, plus their
// conjugacy-class and power-map combinatorics.  Everything here is exact
// integer bookkeeping; all groups of interest have order <= 255.

#include <memory>
#include <string>
#include <vector>

namespace oddwedge {

struct FiniteGroup {
  std::string name;
  int order = 0;
  int identity = 0;
  std::vector<int> mul;  // row-major order x order table of element indices
  std::vector<int> inv;  // inverse per element

  int at(int a, int b) const { return mul[static_cast<size_t>(a) * order + b]; }
  int pow(int g, long long n) const;
  int element_order(int g) const;

  // Exhaustive axiom check (associativity only for order <= 64); throws
  // std::logic_error on failure.
  void validate() const;
};

FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

// C7 x| C3, the smallest non-abelian group of odd order.  Realized on pairs
// (a,b) in Z7 x Z3 with (a,b)*(a',b') = (a + 2^b a' mod 7, b + b' mod 3);
// 2 has multiplicative order 3 mod 7.  Element index = 3*a + b.
FiniteGroup frobenius21();

// Accepts "cN", "cNxcM" (any depth, e.g. "c3xc3"), "frobenius21".
FiniteGroup group_by_name(const std::string& name);

bool is_odd_order(const FiniteGroup& g);

// Conjugacy classes in canonical order: identity class first, then by
// descending representative order, ties broken by smallest representative
// element index.  power_table(n, c) is the class of g^n for g in class c,
// n = 1..k (k = group order); well-definedness is verified exhaustively.
struct ClassStructure {
  std::string group_name;
  int group_order = 0;  // k
  int num_classes = 0;  // c
  std::vector<int> class_of;         // element -> class
  std::vector<int> representatives;  // class -> smallest element index
  std::vector<int> sizes;
  std::vector<int> rep_orders;
  std::vector<std::string> labels;  // "1", "7A", "7B", "3A", "3B", ...
  std::vector<int> power_table;     // (n-1)*num_classes + cls, n = 1..k

  // n is reduced to 1..k (residue k when n == 0 mod k).
  int power_class(long long n, int cls) const;
  int inverse_class(int cls) const;
  int label_index(const std::string& label) const;  // -1 if unknown
  bool compatible_with(const ClassStructure& other) const;
};

using ClassStructurePtr = std::shared_ptr<const ClassStructure>;

ClassStructurePtr conjugacy_classes(const FiniteGroup& g);

}  // namespace oddwedge
