#include "glab/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "glab/error.hpp"

namespace glab {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  std::size_t const n = table_.size();
  if (n == 0) throw SpecError("group: empty Cayley table");
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[a].size() != n) throw SpecError("group: Cayley table row " + std::to_string(a) + " has wrong length");
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] >= n) {
        throw SpecError("group: product " + std::to_string(a) + "*" + std::to_string(b) + " out of range");
      }
    }
  }
  if (names_.empty()) {
    for (std::size_t a = 0; a < n; ++a) names_.push_back("g" + std::to_string(a));
  } else if (names_.size() != n) {
    throw SpecError("group: " + std::to_string(names_.size()) + " names for " + std::to_string(n) + " elements");
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw SpecError("group: no two-sided identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw SpecError("group: not associative at (" + names_[a] + ", " + names_[b] + ", " + names_[c] + ")");
        }
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] == n) throw SpecError("group: element " + names_[a] + " has no inverse");
  }
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw SpecError("cyclic group of order 0");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "e" : "r" + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  FiniteGroup g(std::move(t), std::move(names));
  g.family_ = "cyclic(" + std::to_string(n) + ")";
  return g;
}

FiniteGroup FiniteGroup::dihedral(std::size_t k) {
  if (k == 0) throw SpecError("dihedral group of a 0-gon");
  // Element (s, i) = s^s r^i encoded as s*k + i; r^i s = s r^{-i}.
  std::size_t const n = 2 * k;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t const sa = a / k;
    std::size_t const ia = a % k;
    if (sa == 0) {
      names.push_back(ia == 0 ? "e" : "r" + std::to_string(ia));
    } else {
      names.push_back(ia == 0 ? "s" : "sr" + std::to_string(ia));
    }
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t const sb = b / k;
      std::size_t const ib = b % k;
      // (s^sa r^ia)(s^sb r^ib) = s^(sa+sb) r^(±ia + ib)
      std::size_t const i = sb == 0 ? (ia + ib) % k : (k - ia + ib) % k;
      t[a][b] = ((sa + sb) % 2) * k + i;
    }
  }
  FiniteGroup g(std::move(t), std::move(names));
  g.family_ = "dihedral(" + std::to_string(k) + ")";
  return g;
}

FiniteGroup FiniteGroup::symmetric(std::size_t k) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  std::size_t const n = perms.size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    std::string nm = "[";
    for (std::size_t i = 0; i < k; ++i) nm += (i ? " " : "") + std::to_string(perms[a][i]);
    names.push_back(nm + "]");
    for (std::size_t b = 0; b < n; ++b) {
      // (a*b)(i) = a(b(i))
      std::vector<std::size_t> c(k);
      for (std::size_t i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = index.at(c);
    }
  }
  FiniteGroup g(std::move(t), std::move(names));
  g.family_ = "symmetric(" + std::to_string(k) + ")";
  return g;
}

std::vector<std::vector<std::size_t>> FiniteGroup::conjugacy_classes() const {
  std::size_t const n = order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t a = 0; a < n; ++a) {
    if (seen[a]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t g = 0; g < n; ++g) {
      std::size_t const c = multiply(multiply(g, a), inverse(g));
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<std::size_t> FiniteGroup::generated_subgroup(std::vector<std::size_t> const& gens) const {
  std::vector<bool> in(order(), false);
  std::vector<std::size_t> members{identity_};
  in[identity_] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto g : gens) {
      std::size_t const c = multiply(members[i], g);
      if (!in[c]) {
        in[c] = true;
        members.push_back(c);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace glab
