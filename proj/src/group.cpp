#include "oddwedge/group.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace oddwedge {

int FiniteGroup::pow(int g, long long n) const {
  if (order <= 0) throw std::logic_error("empty group");
  long long m = n % order;
  if (m < 0) m += order;  // g^order = e for every element of a finite group
  int acc = identity;
  for (long long i = 0; i < m; ++i) acc = at(acc, g);
  return acc;
}

int FiniteGroup::element_order(int g) const {
  int acc = g;
  int m = 1;
  while (acc != identity) {
    acc = at(acc, g);
    ++m;
    if (m > order) throw std::logic_error("element order exceeds group order");
  }
  return m;
}

void FiniteGroup::validate() const {
  const int n = order;
  if (n <= 0 || static_cast<int>(mul.size()) != n * n ||
      static_cast<int>(inv.size()) != n)
    throw std::logic_error("malformed group tables");
  for (int a = 0; a < n; ++a) {
    if (at(identity, a) != a || at(a, identity) != a)
      throw std::logic_error("identity is not neutral");
    if (at(a, inv[a]) != identity || at(inv[a], a) != identity)
      throw std::logic_error("inverse table is wrong");
    for (int b = 0; b < n; ++b)
      if (at(a, b) < 0 || at(a, b) >= n)
        throw std::logic_error("multiplication leaves the index set");
  }
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            throw std::logic_error("multiplication is not associative");
  }
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: order must be >= 1");
  if (n > 255) throw std::invalid_argument("cyclic_group: order > 255");
  FiniteGroup g;
  g.name = "c" + std::to_string(n);
  g.order = n;
  g.identity = 0;
  g.mul.resize(static_cast<size_t>(n) * n);
  g.inv.resize(n);
  for (int a = 0; a < n; ++a) {
    g.inv[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) g.mul[static_cast<size_t>(a) * n + b] = (a + b) % n;
  }
  g.validate();
  return g;
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  FiniteGroup p;
  p.name = g.name + "x" + h.name;
  p.order = g.order * h.order;
  if (p.order > 255) throw std::invalid_argument("direct_product: order > 255");
  const int n = p.order, hn = h.order;
  p.identity = g.identity * hn + h.identity;
  p.mul.resize(static_cast<size_t>(n) * n);
  p.inv.resize(n);
  for (int a = 0; a < n; ++a) {
    const int a1 = a / hn, a2 = a % hn;
    p.inv[a] = g.inv[a1] * hn + h.inv[a2];
    for (int b = 0; b < n; ++b) {
      const int b1 = b / hn, b2 = b % hn;
      p.mul[static_cast<size_t>(a) * n + b] = g.at(a1, b1) * hn + h.at(a2, b2);
    }
  }
  p.validate();
  return p;
}

FiniteGroup frobenius21() {
  FiniteGroup g;
  g.name = "frobenius21";
  g.order = 21;
  g.identity = 0;
  g.mul.resize(21 * 21);
  g.inv.assign(21, -1);
  const int twopow[3] = {1, 2, 4};
  auto idx = [](int a, int b) { return 3 * a + b; };
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 3; ++b)
      for (int a2 = 0; a2 < 7; ++a2)
        for (int b2 = 0; b2 < 3; ++b2)
          g.mul[static_cast<size_t>(idx(a, b)) * 21 + idx(a2, b2)] =
              idx((a + twopow[b] * a2) % 7, (b + b2) % 3);
  for (int x = 0; x < 21; ++x)
    for (int y = 0; y < 21; ++y)
      if (g.at(x, y) == 0) g.inv[x] = y;
  g.validate();
  return g;
}

FiniteGroup group_by_name(const std::string& name) {
  std::string s;
  for (char ch : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (s == "frobenius21" || s == "f21") return frobenius21();
  // cN or cNxcM... chains
  std::vector<FiniteGroup> factors;
  size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 'c') throw std::invalid_argument("unknown group name: " + name);
    size_t end = s.find('x', pos);
    std::string num = s.substr(pos + 1, end == std::string::npos ? std::string::npos : end - pos - 1);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("unknown group name: " + name);
    factors.push_back(cyclic_group(std::stoi(num)));
    pos = (end == std::string::npos) ? s.size() : end + 1;
    if (pos == s.size() && end != std::string::npos)
      throw std::invalid_argument("unknown group name: " + name);
  }
  if (factors.empty()) throw std::invalid_argument("unknown group name: " + name);
  FiniteGroup g = factors[0];
  for (size_t i = 1; i < factors.size(); ++i) g = direct_product(g, factors[i]);
  return g;
}

bool is_odd_order(const FiniteGroup& g) { return g.order % 2 == 1; }

int ClassStructure::power_class(long long n, int cls) const {
  long long r = n % group_order;
  if (r <= 0) r += group_order;
  return power_table[static_cast<size_t>(r - 1) * num_classes + cls];
}

int ClassStructure::inverse_class(int cls) const {
  return power_class(group_order - 1 == 0 ? group_order : group_order - 1, cls);
}

int ClassStructure::label_index(const std::string& label) const {
  for (int c = 0; c < num_classes; ++c)
    if (labels[c] == label) return c;
  return -1;
}

bool ClassStructure::compatible_with(const ClassStructure& other) const {
  if (this == &other) return true;
  return group_order == other.group_order && num_classes == other.num_classes &&
         power_table == other.power_table && sizes == other.sizes;
}

ClassStructurePtr conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order;
  auto cs = std::make_shared<ClassStructure>();
  cs->group_name = g.name;
  cs->group_order = n;

  // Orbit partition under conjugation.
  std::vector<int> raw_class(n, -1);
  std::vector<std::vector<int>> members;
  for (int x = 0; x < n; ++x) {
    if (raw_class[x] >= 0) continue;
    const int id = static_cast<int>(members.size());
    std::vector<int> orbit;
    for (int h = 0; h < n; ++h) {
      const int y = g.at(g.at(h, x), g.inv[h]);
      if (raw_class[y] < 0) {
        raw_class[y] = id;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    members.push_back(std::move(orbit));
  }
  const int c = static_cast<int>(members.size());

  // Canonical order: identity first, then descending element order,
  // ties by smallest member index.
  std::vector<int> ord(c);
  for (int i = 0; i < c; ++i) ord[i] = g.element_order(members[i][0]);
  std::vector<int> perm(c);
  for (int i = 0; i < c; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    const bool ia = members[a][0] == g.identity, ib = members[b][0] == g.identity;
    if (ia != ib) return ia;
    if (ord[a] != ord[b]) return ord[a] > ord[b];
    return members[a][0] < members[b][0];
  });

  cs->num_classes = c;
  cs->class_of.assign(n, -1);
  cs->representatives.resize(c);
  cs->sizes.resize(c);
  cs->rep_orders.resize(c);
  for (int k = 0; k < c; ++k) {
    const auto& mem = members[perm[k]];
    cs->representatives[k] = mem[0];
    cs->sizes[k] = static_cast<int>(mem.size());
    cs->rep_orders[k] = ord[perm[k]];
    for (int x : mem) cs->class_of[x] = k;
  }

  // Labels: "1" for the identity class, else "<order><letter>" with letters
  // assigned in canonical class order within each element order.
  {
    std::vector<int> seen(n + 1, 0);
    cs->labels.resize(c);
    for (int k = 0; k < c; ++k) {
      if (cs->representatives[k] == g.identity) {
        cs->labels[k] = "1";
        continue;
      }
      const int o = cs->rep_orders[k];
      cs->labels[k] = std::to_string(o) + static_cast<char>('A' + seen[o]++);
    }
  }

  // Power map, verified independent of the representative.
  cs->power_table.assign(static_cast<size_t>(n) * c, -1);
  for (int e = 1; e <= n; ++e)
    for (int k = 0; k < c; ++k)
      cs->power_table[static_cast<size_t>(e - 1) * c + k] =
          cs->class_of[g.pow(cs->representatives[k], e)];
  for (int x = 0; x < n; ++x) {
    int acc = g.identity;
    for (int e = 1; e <= n; ++e) {
      acc = g.at(acc, x);
      if (cs->class_of[acc] !=
          cs->power_table[static_cast<size_t>(e - 1) * c + cs->class_of[x]])
        throw std::logic_error("power map depends on the class representative");
    }
  }
  return cs;
}

}  // namespace oddwedge
