#include <algorithm>
#include <bit>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

#include "zkfabric/errors.hpp"
#include "zkfabric/syntax.hpp"

namespace zkfabric::syntax {

std::size_t Implicant::literal_count() const { return static_cast<std::size_t>(std::popcount(care)); }

std::string Implicant::to_string(std::size_t n_vars) const {
  std::string out;
  for (std::size_t i = 0; i < n_vars; ++i) {
    std::uint8_t bit = static_cast<std::uint8_t>(1u << (n_vars - 1 - i));
    out.push_back((care & bit) == 0 ? '-' : ((value & bit) != 0 ? '1' : '0'));
  }
  return out;
}

Implicant Implicant::from_string(std::string_view pattern) {
  if (pattern.empty() || pattern.size() > kMaxVariables) throw std::invalid_argument("bad implicant pattern");
  Implicant imp;
  for (char c : pattern) {
    imp.care = static_cast<std::uint8_t>(imp.care << 1);
    imp.value = static_cast<std::uint8_t>(imp.value << 1);
    if (c == '-') continue;
    if (c != '0' && c != '1') throw std::invalid_argument("bad implicant pattern");
    imp.care |= 1;
    if (c == '1') imp.value |= 1;
  }
  return imp;
}

bool MinimizedExpr::evaluate(std::uint64_t assignment) const {
  return std::any_of(implicants.begin(), implicants.end(), [&](const auto& imp) { return imp.covers(assignment); });
}

std::size_t MinimizedExpr::literal_count() const {
  std::size_t n = 0;
  for (const auto& imp : implicants) n += imp.literal_count();
  return n;
}

std::string MinimizedExpr::to_string() const {
  if (implicants.empty()) return "0";
  std::string out;
  for (const auto& imp : implicants) {
    if (!out.empty()) out += " + ";
    out += imp.to_string(n_vars);
  }
  return out;
}

std::string MinimizedExpr::to_literal_string() const {
  if (implicants.empty()) return "0";
  std::string out;
  for (const auto& imp : implicants) {
    if (!out.empty()) out += " + ";
    std::string term;
    for (std::size_t i = 0; i < n_vars; ++i) {
      std::uint8_t bit = static_cast<std::uint8_t>(1u << (n_vars - 1 - i));
      if ((imp.care & bit) == 0) continue;
      if (!term.empty()) term += "*";
      term += ((imp.value & bit) != 0 ? "v" : "~v") + std::to_string(i);
    }
    out += term.empty() ? "1" : term;
  }
  return out;
}

namespace {

// Pairwise reduction, left to right, one tree level at a time.
template <typename Combine>
Expr balanced(std::vector<Expr> items, Combine combine) {
  while (items.size() > 1) {
    std::vector<Expr> next;
    for (std::size_t i = 0; i + 1 < items.size(); i += 2) next.push_back(combine(items[i], items[i + 1]));
    if (items.size() % 2 == 1) next.push_back(items.back());
    items = std::move(next);
  }
  return items.front();
}

}  // namespace

Expr MinimizedExpr::to_expr() const {
  if (implicants.empty()) return Expr::constant(false);
  std::vector<Expr> products;
  for (const auto& imp : implicants) {
    std::vector<Expr> literals;
    for (std::size_t i = 0; i < n_vars; ++i) {
      std::uint8_t bit = static_cast<std::uint8_t>(1u << (n_vars - 1 - i));
      if ((imp.care & bit) == 0) continue;
      literals.push_back((imp.value & bit) != 0 ? Expr::var(i) : Expr::negate(Expr::var(i)));
    }
    if (literals.empty()) return Expr::constant(true);
    products.push_back(balanced(std::move(literals), Expr::conj));
  }
  return balanced(std::move(products), Expr::disj);
}

namespace {

std::vector<Implicant> prime_implicants(const TruthTable& table) {
  const auto n = table.n_vars;
  const std::uint8_t full = static_cast<std::uint8_t>((1u << n) - 1);
  std::set<std::pair<std::uint8_t, std::uint8_t>> current;  // (care, value)
  for (std::uint64_t a = 0; a < table.outputs.size(); ++a) {
    if (table[a]) current.insert({full, static_cast<std::uint8_t>(a)});
  }
  std::vector<Implicant> primes;
  while (!current.empty()) {
    std::set<std::pair<std::uint8_t, std::uint8_t>> next;
    std::set<std::pair<std::uint8_t, std::uint8_t>> merged;
    for (auto i = current.begin(); i != current.end(); ++i) {
      for (auto j = std::next(i); j != current.end(); ++j) {
        if (i->first != j->first) continue;
        auto diff = static_cast<std::uint8_t>(i->second ^ j->second);
        if (std::popcount(diff) != 1) continue;
        next.insert({static_cast<std::uint8_t>(i->first & ~diff), static_cast<std::uint8_t>(i->second & ~diff)});
        merged.insert(*i);
        merged.insert(*j);
      }
    }
    for (const auto& t : current) {
      if (!merged.count(t)) primes.push_back({t.first, t.second});
    }
    current = std::move(next);
  }
  return primes;
}

std::uint64_t coverage(const Implicant& imp, std::size_t n_vars) {
  std::uint64_t mask = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n_vars); ++a) {
    if (imp.covers(a)) mask |= std::uint64_t{1} << a;
  }
  return mask;
}

// Fixed-capacity set of candidate-prime indices.
class PrimeSet {
 public:
  explicit PrimeSet(std::size_t capacity) : words_((capacity + 63) / 64, 0) {}

  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool intersects(const PrimeSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((words_[w] & o.words_[w]) != 0) return true;
    }
    return false;
  }
  bool subset_of(const PrimeSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((words_[w] & ~o.words_[w]) != 0) return false;
    }
    return true;
  }
  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (auto bits = words_[w]; bits != 0; bits &= bits - 1) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
    return out;
  }
  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;
  friend auto operator<=>(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

// Drops duplicates and any product that is a superset of another.
std::vector<PrimeSet> absorb(std::vector<PrimeSet> products) {
  std::sort(products.begin(), products.end(), [](const PrimeSet& a, const PrimeSet& b) {
    auto sa = a.size(), sb = b.size();
    return sa != sb ? sa < sb : a < b;
  });
  products.erase(std::unique(products.begin(), products.end()), products.end());
  std::vector<PrimeSet> kept;
  for (auto& p : products) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](const PrimeSet& k) { return k.subset_of(p); });
    if (!dominated) kept.push_back(std::move(p));
  }
  return kept;
}

struct CoverCost {
  std::size_t count;
  std::size_t literals;
  std::vector<std::string> patterns;  // sorted

  friend auto operator<=>(const CoverCost&, const CoverCost&) = default;
};

CoverCost cost_of(const std::vector<Implicant>& cover, std::size_t n_vars) {
  CoverCost c{cover.size(), 0, {}};
  for (const auto& imp : cover) {
    c.literals += imp.literal_count();
    c.patterns.push_back(imp.to_string(n_vars));
  }
  std::sort(c.patterns.begin(), c.patterns.end());
  return c;
}

}  // namespace

MinimizedExpr minimize(const TruthTable& table) {
  const auto n = table.n_vars;
  if (n == 0 || n > kMaxVariables || table.outputs.size() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::TooManyVariables, "truth table must have 1..6 variables");
  }
  MinimizedExpr result;
  result.n_vars = n;

  auto primes = prime_implicants(table);
  if (primes.empty()) return result;

  std::vector<std::uint64_t> cov;
  for (const auto& p : primes) cov.push_back(coverage(p, n));

  std::uint64_t target = 0;
  for (std::uint64_t a = 0; a < table.outputs.size(); ++a) {
    if (table[a]) target |= std::uint64_t{1} << a;
  }

  // Essential primes: sole cover of some minterm.
  std::vector<bool> chosen(primes.size(), false);
  for (std::uint64_t a = 0; a < table.outputs.size(); ++a) {
    if (!table[a]) continue;
    std::size_t hits = 0, last = 0;
    for (std::size_t p = 0; p < primes.size(); ++p) {
      if ((cov[p] >> a) & 1u) {
        ++hits;
        last = p;
      }
    }
    if (hits == 1) chosen[last] = true;
  }
  std::vector<Implicant> essentials;
  std::uint64_t covered = 0;
  for (std::size_t p = 0; p < primes.size(); ++p) {
    if (chosen[p]) {
      essentials.push_back(primes[p]);
      covered |= cov[p];
    }
  }
  std::uint64_t remaining = target & ~covered;

  std::vector<Implicant> best = essentials;
  if (remaining != 0) {
    std::vector<std::size_t> candidates;
    for (std::size_t p = 0; p < primes.size(); ++p) {
      if (!chosen[p] && (cov[p] & remaining) != 0) candidates.push_back(p);
    }

    // Greedy cover size bounds the Petrick expansion; no minimum cover is larger.
    std::size_t bound = 0;
    for (std::uint64_t left = remaining; left != 0; ++bound) {
      std::size_t pick = candidates.front();
      int best_gain = -1;
      for (auto c : candidates) {
        int gain = std::popcount(cov[c] & left);
        if (gain > best_gain) {
          best_gain = gain;
          pick = c;
        }
      }
      left &= ~cov[pick];
    }

    struct Clause {
      std::uint64_t minterm;
      PrimeSet options;
      std::size_t width;
    };
    std::vector<Clause> clauses;
    for (std::uint64_t a = 0; a < table.outputs.size(); ++a) {
      if (((remaining >> a) & 1u) == 0) continue;
      PrimeSet opts(candidates.size());
      std::size_t width = 0;
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        if ((cov[candidates[c]] >> a) & 1u) {
          opts.insert(c);
          ++width;
        }
      }
      clauses.push_back({a, std::move(opts), width});
    }
    std::stable_sort(clauses.begin(), clauses.end(), [](const Clause& x, const Clause& y) { return x.width < y.width; });

    // Petrick: multiply out the product of sums, absorbing as we go.
    std::vector<PrimeSet> products{PrimeSet(candidates.size())};
    for (const auto& clause : clauses) {
      std::vector<PrimeSet> next;
      for (const auto& prod : products) {
        if (prod.intersects(clause.options)) {
          next.push_back(prod);
          continue;
        }
        if (prod.size() + 1 > bound) continue;
        for (auto c : clause.options.members()) {
          PrimeSet extended = prod;
          extended.insert(c);
          next.push_back(std::move(extended));
        }
      }
      products = absorb(std::move(next));
    }

    std::optional<CoverCost> best_cost;
    for (const auto& prod : products) {
      std::vector<Implicant> cover = essentials;
      for (auto c : prod.members()) cover.push_back(primes[candidates[c]]);
      auto cost = cost_of(cover, n);
      if (!best_cost || cost < *best_cost) {
        best_cost = std::move(cost);
        best = std::move(cover);
      }
    }
  }

  std::sort(best.begin(), best.end(),
            [n](const Implicant& a, const Implicant& b) { return a.to_string(n) < b.to_string(n); });
  result.implicants = std::move(best);
  return result;
}

}  // namespace zkfabric::syntax
