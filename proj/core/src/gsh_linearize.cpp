#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

#include "parikhseq/gsh.hpp"

namespace parikhseq {

namespace {

// Interleavings of m P-factors and n Q-factors; true marks a P-factor.
void for_each_interleaving(std::size_t m, std::size_t n, const std::function<void(const std::vector<bool>&)>& visit) {
  std::vector<bool> tags;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
    if (i == m && j == n) {
      visit(tags);
      return;
    }
    if (i < m) {
      tags.push_back(true);
      rec(i + 1, j);
      tags.pop_back();
    }
    if (j < n) {
      tags.push_back(false);
      rec(i, j + 1);
      tags.pop_back();
    }
  };
  rec(0, 0);
}

bool overlaps(std::size_t a, std::size_t len_a, std::size_t b, std::size_t len_b) {
  return a < b + len_b && b < a + len_a;
}

bool bridged(const Monomial& u, const Placement& alpha, const Monomial& v, const Placement& beta) {
  for (std::size_t k = 0; k + 1 < u.size(); ++k) {
    bool found = false;
    for (std::size_t l = 0; l < v.size() && !found; ++l) {
      found = overlaps(beta[l], v[l].size(), alpha[k], u[k].size()) &&
              overlaps(beta[l], v[l].size(), alpha[k + 1], u[k + 1].size());
    }
    if (!found) return false;
  }
  return true;
}

class PlacementSearch {
 public:
  PlacementSearch(const Monomial& u, const Monomial& v)
      : u_(u), v_(v), limit_(u.flat_length() + v.flat_length() - 1), line_(limit_ + 1, '\0'), cover_(limit_ + 1, 0) {}

  std::vector<JointPlacement> run() {
    alpha_.assign(u_.size(), 0);
    beta_.assign(v_.size(), 0);
    place(0, 1);
    std::sort(out_.begin(), out_.end(), [](const JointPlacement& a, const JointPlacement& b) {
      return std::tie(a.word, a.u, a.v) < std::tie(b.word, b.u, b.v);
    });
    return std::move(out_);
  }

 private:
  const Monomial& u_;
  const Monomial& v_;
  std::size_t limit_;  // last usable position
  std::string line_;
  std::vector<int> cover_;
  Placement alpha_;
  Placement beta_;
  std::vector<JointPlacement> out_;

  bool stamp(std::size_t start, const std::string& f) {
    for (std::size_t t = 0; t < f.size(); ++t) {
      const std::size_t p = start + t;
      if (cover_[p] > 0 && line_[p] != f[t]) {
        for (std::size_t r = 0; r < t; ++r) --cover_[start + r];
        return false;
      }
      line_[p] = f[t];
      ++cover_[p];
    }
    return true;
  }

  void unstamp(std::size_t start, std::size_t len) {
    for (std::size_t t = 0; t < len; ++t) --cover_[start + t];
  }

  // k indexes u's factors, then v's (k - |u|).
  void place(std::size_t k, std::size_t min_start) {
    const std::size_t m = u_.size();
    if (k == m + v_.size()) {
      finish();
      return;
    }
    const bool in_u = k < m;
    const std::string& f = in_u ? u_[k] : v_[k - m];
    std::size_t rest = 0;
    if (in_u) {
      for (std::size_t r = k + 1; r < m; ++r) rest += u_[r].size();
    } else {
      for (std::size_t r = k - m + 1; r < v_.size(); ++r) rest += v_[r].size();
    }
    if (f.size() + rest > limit_) return;
    const std::size_t last = limit_ - f.size() - rest + 1;
    for (std::size_t s = min_start; s <= last; ++s) {
      if (!stamp(s, f)) continue;
      (in_u ? alpha_[k] : beta_[k - m]) = s;
      const bool next_starts_v = k + 1 == m;
      place(k + 1, next_starts_v ? 1 : s + f.size());
      unstamp(s, f.size());
    }
  }

  void finish() {
    if (std::min(alpha_.front(), beta_.front()) != 1) return;
    const std::size_t end =
        std::max(alpha_.back() + u_[u_.size() - 1].size(), beta_.back() + v_[v_.size() - 1].size()) - 1;
    for (std::size_t p = 1; p <= end; ++p) {
      if (cover_[p] == 0) return;
    }
    if (!is_interleaved(u_, alpha_, v_, beta_)) return;
    out_.push_back({alpha_, beta_, line_.substr(1, end)});
  }
};

LinearGsh single(const std::string& f) { return LinearGsh::of(Monomial(std::vector<std::string>{f})); }

using RedCache = std::map<std::pair<Monomial, Monomial>, LinearGsh>;

const LinearGsh& cached_red(RedCache& cache, Monomial u, Monomial v) {
  auto key = std::make_pair(std::move(u), std::move(v));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, reduce_pair(key.first, key.second)).first;
  return it->second;
}

LinearGsh merge_schemes(const Monomial& p, const Monomial& q) {
  const std::size_t m = p.size();
  const std::size_t n = q.size();
  RedCache red;
  std::vector<std::optional<LinearGsh>> memo((m + 1) * (n + 1));
  std::function<const LinearGsh&(std::size_t, std::size_t)> suffix = [&](std::size_t i,
                                                                         std::size_t j) -> const LinearGsh& {
    auto& slot = memo[i * (n + 1) + j];
    if (slot) return *slot;
    LinearGsh out;
    if (i == m && j == n) out = LinearGsh::of(Monomial());
    if (i < m) out += single(p[i]).then(suffix(i + 1, j));
    if (j < n) out += single(q[j]).then(suffix(i, j + 1));
    for (std::size_t i2 = i + 1; i2 <= m; ++i2) {
      for (std::size_t j2 = j + 1; j2 <= n; ++j2) {
        const LinearGsh& r = cached_red(red, p.slice(i, i2), q.slice(j, j2));
        if (!r.is_zero()) out += r.then(suffix(i2, j2));
      }
    }
    slot = std::move(out);
    return *slot;
  };
  return suffix(0, 0);
}

LinearGsh literal_runs(const Monomial& p, const Monomial& q) {
  RedCache red;
  LinearGsh total;
  for_each_interleaving(p.size(), q.size(), [&](const std::vector<bool>& tags) {
    // Maximal runs as (is_p, first, last) over each side's factor indices.
    struct Run {
      bool is_p;
      std::size_t first;
      std::size_t last;
    };
    std::vector<Run> runs;
    std::size_t i = 0;
    std::size_t j = 0;
    for (bool t : tags) {
      std::size_t& idx = t ? i : j;
      if (runs.empty() || runs.back().is_p != t) runs.push_back({t, idx, idx});
      runs.back().last = ++idx;
    }
    LinearGsh acc = LinearGsh::of(Monomial());
    for (std::size_t k = 0; k < runs.size();) {
      const Run& r = runs[k];
      const Monomial first = (r.is_p ? p : q).slice(r.first, r.last);
      if (r.is_p && k + 1 < runs.size()) {
        const Run& s = runs[k + 1];
        const Monomial second = q.slice(s.first, s.last);
        acc = acc.then(LinearGsh::of(first.then(second)) + cached_red(red, first, second));
        k += 2;
      } else {
        acc = acc.then(LinearGsh::of(first));
        ++k;
      }
    }
    total += acc;
  });
  return total;
}

}  // namespace

std::vector<Monomial> ground_shuffle(const Monomial& p, const Monomial& q) {
  std::vector<Monomial> out;
  for_each_interleaving(p.size(), q.size(), [&](const std::vector<bool>& tags) {
    std::vector<std::string> f;
    std::size_t i = 0;
    std::size_t j = 0;
    for (bool t : tags) f.push_back(t ? p[i++] : q[j++]);
    out.emplace_back(std::move(f));
  });
  return out;
}

bool is_interleaved(const Monomial& u, const Placement& alpha, const Monomial& v, const Placement& beta) {
  if (alpha.size() != u.size() || beta.size() != v.size()) throw std::invalid_argument("placement size mismatch");
  return bridged(u, alpha, v, beta) && bridged(v, beta, u, alpha);
}

std::vector<JointPlacement> joint_placements(const Monomial& u, const Monomial& v) {
  if (u.is_epsilon() || v.is_epsilon()) return {};
  return PlacementSearch(u, v).run();
}

LinearGsh reduce_pair(const Monomial& u, const Monomial& v) {
  LinearGsh out;
  for (const auto& jp : joint_placements(u, v)) out.add(Monomial(std::vector<std::string>{jp.word}), 1);
  return out;
}

LinearGsh linearize_product(const Monomial& p, const Monomial& q, ProductRule rule) {
  if (p.is_epsilon()) return LinearGsh::of(q);
  if (q.is_epsilon()) return LinearGsh::of(p);
  return rule == ProductRule::MergeSchemes ? merge_schemes(p, q) : literal_runs(p, q);
}

LinearGsh linearize(const GshExpr& e, ProductRule rule) {
  switch (e.kind()) {
    case GshExpr::Kind::Leaf: return LinearGsh::of(e.monomial());
    case GshExpr::Kind::Scale: {
      LinearGsh g = linearize(e.lhs(), rule);
      g *= e.factor();
      return g;
    }
    case GshExpr::Kind::Negate: {
      LinearGsh g = linearize(e.lhs(), rule);
      g *= -1;
      return g;
    }
    case GshExpr::Kind::Sum: return linearize(e.lhs(), rule) + linearize(e.rhs(), rule);
    case GshExpr::Kind::Product: {
      const LinearGsh a = linearize(e.lhs(), rule);
      const LinearGsh b = linearize(e.rhs(), rule);
      LinearGsh out;
      for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
          LinearGsh t = linearize_product(ma, mb, rule);
          t *= ca * cb;
          out += t;
        }
      }
      return out;
    }
  }
  return {};
}

bool equivalent(const GshExpr& a, const GshExpr& b) { return linearize(a) == linearize(b); }

BoundedVerdict equivalent_bounded(const GshExpr& a, const GshExpr& b, const Alphabet& alphabet, std::size_t max_len) {
  BoundedVerdict v;
  for_each_word(alphabet, max_len, [&](std::string_view w) {
    ++v.words_checked;
    BigInt x = evaluate(a, w);
    BigInt y = evaluate(b, w);
    if (x == y) return true;
    v.equal = false;
    v.counterexample = std::string(w);
    v.lhs = std::move(x);
    v.rhs = std::move(y);
    return false;
  });
  return v;
}

}  // namespace parikhseq
