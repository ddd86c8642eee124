#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "repdescend/error.hpp"

namespace repdescend {

/// A finite group as a multiplication table: table[i][j] is the index of g_i g_j.
class GroupTable {
 public:
  GroupTable() = default;

  GroupTable(std::vector<std::vector<std::size_t>> table, std::size_t identity)
      : table_(std::move(table)), identity_(identity) {
    validate();
  }

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  std::size_t element_order(std::size_t g) const {
    std::size_t k = 1, x = g;
    while (x != identity_) {
      x = mul(x, g);
      ++k;
    }
    return k;
  }

  bool is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
      for (std::size_t b = 0; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

 private:
  void validate() const {
    const std::size_t n = table_.size();
    ensure(n >= 1, ErrorKind::InvalidGroup, "group must have at least one element");
    ensure(identity_ < n, ErrorKind::InvalidGroup, "identity index out of range");
    for (const auto& row : table_) {
      ensure(row.size() == n, ErrorKind::InvalidGroup, "table is not square");
      for (auto x : row) ensure(x < n, ErrorKind::InvalidGroup, "table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a) {
      ensure(table_[identity_][a] == a && table_[a][identity_] == a, ErrorKind::InvalidGroup,
             "identity element does not act trivially");
      bool has_inverse = false;
      for (std::size_t b = 0; b < n && !has_inverse; ++b)
        has_inverse = table_[a][b] == identity_ && table_[b][a] == identity_;
      ensure(has_inverse, ErrorKind::InvalidGroup, "element " + std::to_string(a) + " has no inverse");
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          ensure(table_[table_[a][b]][c] == table_[a][table_[b][c]], ErrorKind::InvalidGroup,
                 "multiplication is not associative");
  }

  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
};

namespace detail {

inline GroupTable permutation_group(std::vector<std::vector<std::size_t>> perms) {
  std::sort(perms.begin(), perms.end());
  const std::size_t n = perms.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // (g_i g_j)(x) = g_i(g_j(x))
      std::vector<std::size_t> c(perms[i].size());
      for (std::size_t x = 0; x < c.size(); ++x) c[x] = perms[i][perms[j][x]];
      table[i][j] = static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return GroupTable(std::move(table), 0);
}

inline bool is_even(const std::vector<std::size_t>& perm) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0;
}

}  // namespace detail

inline GroupTable cyclic_group(std::size_t n) {
  ensure(n >= 1, ErrorKind::InvalidGroup, "cyclic group order must be positive");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return GroupTable(std::move(t), 0);
}

/// Builtin groups: cyclic(n) (also "c<n>"), klein4, s3, d4, q8, a4.
inline GroupTable builtin_group(const std::string& name) {
  if (name.rfind("cyclic(", 0) == 0 && name.back() == ')') {
    return cyclic_group(std::stoul(name.substr(7, name.size() - 8)));
  }
  if (name.size() > 1 && (name[0] == 'c' || name[0] == 'C') &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return cyclic_group(std::stoul(name.substr(1)));
  }
  if (name == "klein4") {
    std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) t[i][j] = i ^ j;
    return GroupTable(std::move(t), 0);
  }
  if (name == "s3" || name == "a4") {
    const std::size_t k = name == "s3" ? 3 : 4;
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::size_t>> perms;
    do {
      if (name == "s3" || detail::is_even(perm)) perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return detail::permutation_group(std::move(perms));
  }
  if (name == "d4") {
    // r^a s^b at index a + 4b; s r s = r^{-1}
    std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
    for (std::size_t x = 0; x < 8; ++x) {
      for (std::size_t y = 0; y < 8; ++y) {
        std::size_t a = x % 4, b = x / 4, c = y % 4, d = y / 4;
        std::size_t rot = b == 0 ? (a + c) % 4 : (a + 4 - c) % 4;
        t[x][y] = rot + 4 * ((b + d) % 2);
      }
    }
    return GroupTable(std::move(t), 0);
  }
  if (name == "q8") {
    // index = 2*u + s for unit u in {1, i, j, k} and sign s (0 = +, 1 = -)
    // unit product table: u*v = sign * w
    static const std::array<std::array<std::pair<int, int>, 4>, 4> units = {{
        {{{0, 0}, {1, 0}, {2, 0}, {3, 0}}},
        {{{1, 0}, {0, 1}, {3, 0}, {2, 1}}},
        {{{2, 0}, {3, 1}, {0, 1}, {1, 0}}},
        {{{3, 0}, {2, 0}, {1, 1}, {0, 1}}},
    }};
    std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
    for (std::size_t x = 0; x < 8; ++x) {
      for (std::size_t y = 0; y < 8; ++y) {
        auto [w, s] = units[x / 2][y / 2];
        std::size_t sign = (x % 2 + y % 2 + std::size_t(s)) % 2;
        t[x][y] = 2 * std::size_t(w) + sign;
      }
    }
    return GroupTable(std::move(t), 0);
  }
  fail(ErrorKind::UnknownGroup, "unknown builtin group '" + name + "'");
}

/// Whether the Sylow p-subgroups are cyclic: some element has order equal to
/// the full p-part of |G|.
inline bool sylow_cyclic(const GroupTable& g, unsigned p) {
  std::size_t p_part = 1, rest = g.order();
  while (rest % p == 0) {
    p_part *= p;
    rest /= p;
  }
  if (p_part == 1) return true;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.element_order(x) == p_part) return true;
  return false;
}

}  // namespace repdescend
