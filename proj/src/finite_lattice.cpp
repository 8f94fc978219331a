#include "latsort/finite_lattice.hpp"

#include <algorithm>
#include <unordered_map>

namespace latsort {
namespace {

using Matrix = std::vector<char>;

std::size_t at(int a, int b, int n) {
  return static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b);
}

/** Transitive closure by repeated squaring of the boolean reachability
    matrix: T <- T ∪ T·T until fixpoint. */
Matrix transitive_closure(Matrix adj, int n) {
  for (;;) {
    Matrix next = adj;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (adj[at(i, k, n)])
          for (int j = 0; j < n; ++j)
            if (adj[at(k, j, n)]) next[at(i, j, n)] = 1;
    if (next == adj) return adj;
    adj = std::move(next);
  }
}

std::optional<int> unique_bound(const Matrix& leq, int n, bool bottom) {
  for (int candidate = 0; candidate < n; ++candidate) {
    bool ok = true;
    for (int other = 0; other < n && ok; ++other) {
      ok = bottom ? leq[at(candidate, other, n)] != 0 : leq[at(other, candidate, n)] != 0;
    }
    if (ok) return candidate;  // unique by antisymmetry
  }
  return std::nullopt;
}

/** Greatest lower bound of (a, b) under leq, or nullopt if none exists.
    Uniqueness is automatic under antisymmetry. */
std::optional<int> glb(const Matrix& leq, int n, int a, int b) {
  for (int g = 0; g < n; ++g) {
    if (!leq[at(g, a, n)] || !leq[at(g, b, n)]) continue;
    bool greatest = true;
    for (int c = 0; c < n && greatest; ++c)
      if (leq[at(c, a, n)] && leq[at(c, b, n)] && !leq[at(c, g, n)]) greatest = false;
    if (greatest) return g;
  }
  return std::nullopt;
}

std::optional<int> lub(const Matrix& leq, int n, int a, int b) {
  for (int g = 0; g < n; ++g) {
    if (!leq[at(a, g, n)] || !leq[at(b, g, n)]) continue;
    bool least = true;
    for (int c = 0; c < n && least; ++c)
      if (leq[at(a, c, n)] && leq[at(b, c, n)] && !leq[at(g, c, n)]) least = false;
    if (least) return g;
  }
  return std::nullopt;
}

}  // namespace

FiniteLattice FiniteLattice::from_tables(std::vector<std::string> names, std::vector<char> leq,
                                         std::vector<int> meet_table,
                                         std::vector<int> join_table) {
  const int n = static_cast<int>(names.size());
  const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (n == 0) throw std::invalid_argument("finite lattice needs at least one element");
  if (leq.size() != cells || meet_table.size() != cells || join_table.size() != cells)
    throw std::invalid_argument("finite lattice tables must be n×n");
  {
    std::vector<std::string> sorted_names = names;
    std::sort(sorted_names.begin(), sorted_names.end());
    if (std::adjacent_find(sorted_names.begin(), sorted_names.end()) != sorted_names.end())
      throw std::invalid_argument("finite lattice element names must be unique");
  }

  FiniteLattice lat;
  lat.n_ = n;
  lat.names_ = std::move(names);
  lat.leq_ = std::move(leq);
  lat.meet_ = std::move(meet_table);
  lat.join_ = std::move(join_table);

  auto bottom = unique_bound(lat.leq_, n, true);
  if (!bottom) throw NoBoundsError("bottom");
  auto top = unique_bound(lat.leq_, n, false);
  if (!top) throw NoBoundsError("top");
  lat.bot_ = *bottom;
  lat.top_ = *top;
  return lat;
}

std::optional<int> FiniteLattice::find(std::string_view name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[static_cast<std::size_t>(i)] == name) return i;
  return std::nullopt;
}

FiniteLattice from_cover_relation(const std::vector<std::string>& names,
                                  const std::vector<std::pair<std::string, std::string>>& covers) {
  const int n = static_cast<int>(names.size());
  if (n == 0) throw std::invalid_argument("from_cover_relation: names must be nonempty");
  std::unordered_map<std::string_view, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(names[static_cast<std::size_t>(i)], i).second)
      throw std::invalid_argument("from_cover_relation: duplicate name '" +
                                  names[static_cast<std::size_t>(i)] + "'");
  }

  Matrix strict(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (const auto& [lower, upper] : covers) {
    auto lo = index.find(lower);
    auto hi = index.find(upper);
    if (lo == index.end() || hi == index.end())
      throw std::invalid_argument("from_cover_relation: cover references undeclared name '" +
                                  (lo == index.end() ? lower : upper) + "'");
    if (lo->second == hi->second) throw CycleError(lower);
    strict[at(lo->second, hi->second, n)] = 1;
  }

  strict = transitive_closure(std::move(strict), n);
  for (int i = 0; i < n; ++i)
    if (strict[at(i, i, n)]) throw CycleError(names[static_cast<std::size_t>(i)]);

  Matrix leq = strict;
  for (int i = 0; i < n; ++i) leq[at(i, i, n)] = 1;

  if (!unique_bound(leq, n, true)) throw NoBoundsError("bottom");
  if (!unique_bound(leq, n, false)) throw NoBoundsError("top");

  std::vector<int> meet_table(leq.size()), join_table(leq.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      auto m = glb(leq, n, a, b);
      if (!m)
        throw NotALatticeError("meet", names[static_cast<std::size_t>(a)],
                               names[static_cast<std::size_t>(b)]);
      meet_table[at(a, b, n)] = *m;
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      auto j = lub(leq, n, a, b);
      if (!j)
        throw NotALatticeError("join", names[static_cast<std::size_t>(a)],
                               names[static_cast<std::size_t>(b)]);
      join_table[at(a, b, n)] = *j;
    }
  }

  return FiniteLattice::from_tables(names, std::move(leq), std::move(meet_table),
                                    std::move(join_table));
}

FiniteLattice canonical_n5() {
  return from_cover_relation({"a", "b", "c", "d", "e"},
                             {{"a", "b"}, {"b", "d"}, {"d", "e"}, {"a", "c"}, {"c", "e"}});
}

FiniteLattice canonical_m3() {
  return from_cover_relation({"a", "b", "c", "d", "e"},
                             {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "e"}, {"c", "e"}, {"d", "e"}});
}

FiniteLattice adjoin_bounds(const FiniteLattice& lat, const std::string& bot_name,
                            const std::string& top_name) {
  if (lat.find(bot_name) || lat.find(top_name) || bot_name == top_name)
    throw std::invalid_argument("adjoin_bounds: fresh bound names must be new and distinct");
  const int old_n = lat.size();
  const int n = old_n + 2;
  const int fresh_bot = old_n;
  const int fresh_top = old_n + 1;

  std::vector<std::string> names = lat.names();
  names.push_back(bot_name);
  names.push_back(top_name);

  Matrix leq(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  std::vector<int> meet_table(leq.size()), join_table(leq.size());
  auto is_old = [&](int e) { return e < old_n; };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const std::size_t cell = at(a, b, n);
      if (is_old(a) && is_old(b)) {
        leq[cell] = lat.less_equal(a, b) ? 1 : 0;
        meet_table[cell] = lat.meet(a, b);
        join_table[cell] = lat.join(a, b);
      } else if (a == fresh_bot || b == fresh_top) {
        leq[cell] = 1;
        meet_table[cell] = a;
        join_table[cell] = b;
      } else {  // a == fresh_top above b, or b == fresh_bot below a
        leq[cell] = 0;
        meet_table[cell] = b;
        join_table[cell] = a;
      }
    }
  }
  return FiniteLattice::from_tables(std::move(names), std::move(leq), std::move(meet_table),
                                    std::move(join_table));
}

bool LawReport::all_ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.ok; });
}

const LawCheck* LawReport::first_failure() const {
  for (const auto& check : checks)
    if (!check.ok) return &check;
  return nullptr;
}

LawReport verify_lattice_laws(const FiniteLattice& lat) {
  const int n = lat.size();
  LawReport report;

  auto check1 = [&](const std::string& law, auto&& predicate) {
    LawCheck result{law, true, {}};
    for (int a = 0; a < n && result.ok; ++a)
      if (!predicate(a)) result = {law, false, {a}};
    report.checks.push_back(std::move(result));
  };
  auto check2 = [&](const std::string& law, auto&& predicate) {
    LawCheck result{law, true, {}};
    for (int a = 0; a < n && result.ok; ++a)
      for (int b = 0; b < n && result.ok; ++b)
        if (!predicate(a, b)) result = {law, false, {a, b}};
    report.checks.push_back(std::move(result));
  };
  auto check3 = [&](const std::string& law, auto&& predicate) {
    LawCheck result{law, true, {}};
    for (int a = 0; a < n && result.ok; ++a)
      for (int b = 0; b < n && result.ok; ++b)
        for (int c = 0; c < n && result.ok; ++c)
          if (!predicate(a, b, c)) result = {law, false, {a, b, c}};
    report.checks.push_back(std::move(result));
  };

  check2("meet commutativity", [&](int a, int b) { return lat.meet(a, b) == lat.meet(b, a); });
  check2("join commutativity", [&](int a, int b) { return lat.join(a, b) == lat.join(b, a); });
  check3("meet associativity", [&](int a, int b, int c) {
    return lat.meet(lat.meet(a, b), c) == lat.meet(a, lat.meet(b, c));
  });
  check3("join associativity", [&](int a, int b, int c) {
    return lat.join(lat.join(a, b), c) == lat.join(a, lat.join(b, c));
  });
  check1("meet idempotence", [&](int a) { return lat.meet(a, a) == a; });
  check1("join idempotence", [&](int a) { return lat.join(a, a) == a; });
  check2("absorption meet-join",
         [&](int a, int b) { return lat.meet(a, lat.join(a, b)) == a; });
  check2("absorption join-meet",
         [&](int a, int b) { return lat.join(a, lat.meet(a, b)) == a; });
  check1("bot join-neutrality", [&](int a) { return lat.join(lat.bot(), a) == a; });
  check1("top meet-neutrality", [&](int a) { return lat.meet(lat.top(), a) == a; });

  return report;
}

}  // namespace latsort
