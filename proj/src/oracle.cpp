// Copyright 2026 The sparsezt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sparsezt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "sparsezt/interval.hpp"
#include "sparsezt/kernels.hpp"
#include "sparsezt/tester.hpp"

namespace sparsezt {

namespace {

constexpr long double kMargin = 1e-9L;
constexpr std::size_t kScanBatch = 4096;

void check_cap(const RectangularDomain& q) {
  if (q.size() > kEnumerationCap) {
    throw std::invalid_argument("domain has " + to_string(q.size()) + " points, above the enumeration cap");
  }
}

void check_match(const SparsePoly& f, const RectangularDomain& q) {
  if (&f.field() != &q.field() || f.nvars() != q.dimension()) {
    throw std::invalid_argument("polynomial and domain do not match");
  }
}

// Visits every grid point accepted by `keep`, in grid order, and calls
// `on_nonzero` for each with f != 0. Stops early when on_nonzero returns false.
void scan(const SparsePoly& f, const RectangularDomain& q, const std::function<bool(const Point&)>& keep,
          const std::function<bool(const Point&)>& on_nonzero) {
  check_match(f, q);
  check_cap(q);
  kernels::BatchEvaluator eval(f, kernels::KernelKind::kScalar);
  std::vector<Point> batch;
  std::vector<std::uint32_t> out;
  batch.reserve(kScanBatch);
  auto flush = [&]() {
    out.resize(batch.size());
    eval.evaluate(batch, out);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (out[i] != 0 && !on_nonzero(batch[i])) return false;
    }
    batch.clear();
    return true;
  };
  GridEnumerator grid(q);
  while (grid.next()) {
    if (!keep(grid.current())) continue;
    batch.push_back(grid.current());
    if (batch.size() == kScanBatch && !flush()) return;
  }
  if (!batch.empty()) flush();
}

bool shares_coordinate(const Point& x, const Point& a) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == a[i]) return true;
  }
  return false;
}

bool any_nonzero(const SparsePoly& f, const RectangularDomain& q) {
  bool found = false;
  scan(f, q, [](const Point&) { return true; }, [&](const Point&) {
    found = true;
    return false;
  });
  return found;
}

void require(bool condition, const std::string& what) {
  if (!condition) throw HypothesisError(what);
}

void require_absorbing(const SparsePoly& f, const Point& a, const RectangularDomain& q) {
  require(q.contains(a), "absorption point is not in the domain");
  require(is_absorbing(f, a, q), "polynomial is not absorbing at the given point");
}

BigInt monomials(const SparsePoly& f) { return BigInt(f.monomial_count()); }

// Enclosure of H_b(x) for x in [lo, hi] within [0, (b-1)/b], where H_b increases.
Interval entropy_interval(std::uint64_t b, Interval x) {
  const long double top = static_cast<long double>(b - 1) / static_cast<long double>(b);
  auto h = [b](long double v) -> long double {
    if (v <= 0.0L) return 0.0L;
    const long double lb = std::log(static_cast<long double>(b));
    return (v * std::log(static_cast<long double>(b - 1)) - v * std::log(v) - (1.0L - v) * std::log1p(-v)) / lb;
  };
  const long double lo = std::clamp(x.lo, 0.0L, top);
  const long double hi = std::clamp(x.hi, 0.0L, top);
  return Interval{Interval::around(h(lo), 16).lo, Interval::around(h(hi), 16).hi};
}

// M^b (r-1)^{N(b-1)} <= r^{N(b-1)}, i.e. log_t M <= N (b-1)/b.
bool entropy_hypothesis(const BigInt& m, std::uint64_t b, std::uint64_t r, std::size_t n) {
  const std::uint64_t e = n * (b - 1);
  return big_pow(m, b) * big_pow(BigInt(r - 1), e) <= big_pow(BigInt(r), e);
}

}  // namespace

std::vector<Point> nonzero_set(const SparsePoly& f, const RectangularDomain& q) {
  std::vector<Point> w;
  scan(f, q, [](const Point&) { return true; }, [&](const Point& x) {
    w.push_back(x);
    return true;
  });
  return w;
}

std::uint64_t count_nonzeros(const SparsePoly& f, const RectangularDomain& q) {
  std::uint64_t count = 0;
  scan(f, q, [](const Point&) { return true; }, [&](const Point&) {
    ++count;
    return true;
  });
  return count;
}

bool is_absorbing(const SparsePoly& f, const Point& a, const RectangularDomain& q) {
  check_match(f, q);
  if (!q.contains(a)) throw std::invalid_argument("absorption point is not in the domain");
  bool absorbing = true;
  scan(f, q, [&](const Point& x) { return shares_coordinate(x, a); }, [&](const Point&) {
    absorbing = false;
    return false;
  });
  return absorbing;
}

SparsePoly make_absorbing(const SparsePoly& g, const Point& a, const RectangularDomain& q) {
  check_match(g, q);
  if (!q.contains(a)) throw std::invalid_argument("absorption point is not in the domain");
  const Field& field = g.field();
  SparsePoly f = g;
  for (std::size_t i = 0; i < a.size(); ++i) {
    f = f * (SparsePoly::variable(field, g.nvars(), i) - SparsePoly::constant(field, g.nvars(), a[i]));
  }
  return reduce_mod_domain(f, q);
}

bool verify_coeffs_bound(const AbsorbingInstance& inst, std::span<const std::uint64_t> r) {
  const std::size_t n = inst.q.dimension();
  require(inst.b.has_value(), "instance needs the opposite point b");
  const Point& a = inst.a;
  const Point& b = *inst.b;
  require(a.size() == n && b.size() == n && r.size() == n, "dimension mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    require(!a[i].is_zero() && !b[i].is_zero(), "coordinates must be nonzero");
    require(a[i] != b[i], "a_i and b_i must differ");
    require(inst.q.set(i).size() == 2 && inst.q.set(i) == std::vector<FieldElement>{std::min(a[i], b[i]),
                                                                                     std::max(a[i], b[i])},
            "domain must be {a_i, b_i} in every coordinate");
    require(r[i] >= 1 && a[i].pow(r[i]) == b[i].pow(r[i]), "a_i^r_i must equal b_i^r_i");
  }
  require_absorbing(inst.f, a, inst.q);
  require(!inst.f.evaluate(b).is_zero(), "f(b) must be nonzero");
  BigInt lhs = monomials(inst.f);
  BigInt rhs = 1;
  for (auto ri : r) {
    lhs *= ri - 1;
    rhs *= ri;
  }
  return lhs >= rhs;
}

bool verify_coeffs_bound(const AbsorbingInstance& inst) {
  require(inst.b.has_value(), "instance needs the opposite point b");
  require(inst.a.size() == inst.b->size(), "dimension mismatch");
  std::vector<std::uint64_t> r;
  for (std::size_t i = 0; i < inst.a.size(); ++i) {
    require(!inst.a[i].is_zero() && !(*inst.b)[i].is_zero(), "coordinates must be nonzero");
    r.push_back(mul_order((*inst.b)[i] / inst.a[i]));
  }
  return verify_coeffs_bound(inst, r);
}

bool verify_kw_bound(const SparsePoly& f, const std::vector<FieldElement>& s, const Point& a) {
  require(!s.empty(), "subgroup must be nonempty");
  const Field& field = f.field();
  const std::uint64_t d = s.size();
  require(field.group_order() % d == 0, "|S| must divide q - 1");
  std::vector<FieldElement> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  require(sorted == subgroup_of_order(field, d), "S is not a multiplicative subgroup");
  const RectangularDomain q = RectangularDomain::power(field, sorted, f.nvars());
  require_absorbing(f, a, q);
  require(any_nonzero(f, q), "f vanishes on S^N");
  const std::size_t n = f.nvars();
  return monomials(f) * big_pow(BigInt(d - 1), n) >= big_pow(BigInt(d), n);
}

bool verify_2elements_density(const SparsePoly& f, const RectangularDomain& q, std::uint64_t r) {
  check_match(f, q);
  require(r >= 2, "common order must be at least 2");
  require(!q.contains_zero(), "domain must be zero-free");
  for (std::size_t i = 0; i < q.dimension(); ++i) {
    require(q.set(i).size() == 2, "every coordinate set needs exactly two elements");
    require(q.set(i)[0].pow(r) == q.set(i)[1].pow(r), "a_i^r must equal b_i^r");
  }
  const std::uint64_t w = count_nonzeros(f, q);
  require(w > 0, "f vanishes on Q");
  // log2|W| >= N - log2 M / log2 t
  const Interval log2t = log2_interval(BigInt(r)) - log2_interval(BigInt(r - 1));
  const Interval rhs = Interval::point(static_cast<long double>(q.dimension())) - log2_interval(monomials(f)) / log2t;
  return certainly_geq(log2_interval(BigInt(w)), rhs, kMargin);
}

DensityCheck verify_density_bounds(const SparsePoly& f, const std::vector<FieldElement>& s, std::size_t n) {
  require(s.size() >= 2, "S needs at least two elements");
  const Field& field = f.field();
  const RectangularDomain q = RectangularDomain::power(field, s, n);
  require(!q.contains_zero(), "S must be zero-free");
  require(f.nvars() == n, "dimension mismatch");
  DensityCheck out;
  out.nonzeros = count_nonzeros(f, q);
  require(out.nonzeros > 0, "f vanishes on S^N");
  out.monomials = f.monomial_count();
  out.ratio_order = max_ratio_order(q.sets());
  const std::uint64_t r = out.ratio_order;
  const std::uint64_t ss = s.size();
  const BigInt m = monomials(f);
  out.k = radius_general(m, r);

  // |W| >= s^N / Vol_s(N, k), cross-multiplied.
  out.volume_form = BigInt(out.nonzeros) * vol(ss, n, static_cast<double>(out.k)) >= big_pow(BigInt(ss), n);

  const Interval log2w = log2_interval(BigInt(out.nonzeros));
  const Interval log2s = log2_interval(BigInt(ss));
  const Interval log2t = log2_interval(BigInt(r)) - log2_interval(BigInt(r - 1));
  const Interval logt_m = log2_interval(m) / log2t;
  const Interval nn = Interval::point(static_cast<long double>(n));

  // |W| >= s^N / (N s)^{log_t M}
  if (n == 0) {
    out.power_form = out.nonzeros >= 1;
  } else {
    const Interval rhs = nn * log2s - logt_m * log2_interval(BigInt(n * ss));
    out.power_form = certainly_geq(log2w, rhs, kMargin);
  }

  // |W| >= s^{N (1 - H_b(log_t M / N))} for b in {q, s}
  auto entropy_form = [&](std::uint64_t b) -> std::optional<bool> {
    if (n == 0 || b < 2 || !entropy_hypothesis(m, b, r, n)) return std::nullopt;
    const Interval h = entropy_interval(b, logt_m / nn);
    const Interval rhs = nn * (Interval::point(1.0L) - h) * log2s;
    return certainly_geq(log2w, rhs, kMargin);
  };
  out.entropy_q = entropy_form(field.order());
  out.entropy_s = entropy_form(ss);
  return out;
}

bool verify_redcoeffs(const SparsePoly& f, const RectangularDomain& q, const Point& a) {
  check_match(f, q);
  for (std::size_t i = 0; i < q.dimension(); ++i) {
    require(f.degree_in_variable(i) < static_cast<int>(q.set(i).size()), "deg_{X_i} f must be below |A_i|");
    require(a.size() == q.dimension() && !a[i].is_zero(), "absorption point must be zero-free");
  }
  require_absorbing(f, a, q);
  require(any_nonzero(f, q), "f vanishes on Q");
  return monomials(f) >= big_pow(BigInt(2), q.dimension());
}

bool verify_coeffs2(const SparsePoly& f, const RectangularDomain& q, const Point& a) {
  check_match(f, q);
  require(q.is_zero_pair_domain(), "domain must be {a_1,0} x ... x {a_N,0}");
  require(a.size() == q.dimension(), "dimension mismatch");
  for (std::size_t i = 0; i < q.dimension(); ++i) {
    require(a[i] == q.set(i)[1], "absorption point must be the nonzero corner");
  }
  require_absorbing(f, a, q);
  const Point origin(q.dimension(), f.field().zero());
  require(!f.evaluate(origin).is_zero(), "f(0) must be nonzero");
  return monomials(f) >= big_pow(BigInt(2), q.dimension());
}

FieldElement alternating_difference(const SparsePoly& p, const Point& a, const Point& b) {
  const std::size_t n = p.nvars();
  if (a.size() != n || b.size() != n) throw std::invalid_argument("alternating_difference: length mismatch");
  if (n > 24) throw std::invalid_argument("alternating_difference: too many variables");
  FieldElement total = p.field().zero();
  Point c(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::size_t size = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool in = ((mask >> i) & 1U) != 0;
      c[i] = in ? b[i] : a[i];
      size += in ? 1 : 0;
    }
    const FieldElement v = p.evaluate(c);
    total = ((n - size) % 2 == 0) ? total + v : total - v;
  }
  return total;
}

std::optional<std::vector<std::uint32_t>> find_covering_tuple(const std::vector<std::vector<std::uint32_t>>& s,
                                                              std::span<const std::uint32_t> r) {
  const std::size_t n = r.size();
  for (const auto& t : s) {
    if (t.size() != n) throw std::invalid_argument("find_covering_tuple: tuple length mismatch");
  }
  if (std::any_of(r.begin(), r.end(), [](std::uint32_t v) { return v == 0; })) return std::nullopt;
  std::vector<std::uint32_t> cur(n, 0);
  while (true) {
    const bool covers = std::all_of(s.begin(), s.end(), [&](const std::vector<std::uint32_t>& t) {
      for (std::size_t i = 0; i < n; ++i) {
        if (t[i] == cur[i]) return true;
      }
      return false;
    });
    if (covers) return cur;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++cur[i] < r[i]) break;
      cur[i] = 0;
      if (i == 0) return std::nullopt;
    }
    if (n == 0) return std::nullopt;
  }
}

bool covering_guaranteed(std::size_t s_size, std::span<const std::uint32_t> r) {
  BigInt lhs = s_size;
  BigInt rhs = 1;
  for (auto ri : r) {
    if (ri == 0) return false;
    lhs *= ri - 1;
    rhs *= ri;
  }
  return lhs < rhs;
}

CombCheck check_comb_property(const std::vector<std::vector<std::uint32_t>>& e,
                              const std::vector<std::vector<std::uint32_t>>& a) {
  const std::size_t n = a.size();
  std::vector<std::set<std::uint32_t>> sets;
  for (const auto& ai : a) sets.emplace_back(ai.begin(), ai.end());
  const std::set<std::vector<std::uint32_t>> unique(e.begin(), e.end());
  for (const auto& t : unique) {
    if (t.size() != n) throw std::invalid_argument("check_comb_property: tuple length mismatch");
    for (std::size_t i = 0; i < n; ++i) {
      if (!sets[i].count(t[i])) throw std::invalid_argument("check_comb_property: E is not inside the grid");
    }
  }
  CombCheck out;
  out.property = !unique.empty();
  // Tuples that differ only in coordinate j share the key (t with t_j blanked).
  for (std::size_t j = 0; j < n && out.property; ++j) {
    std::map<std::vector<std::uint32_t>, std::size_t> lines;
    for (auto t : unique) {
      t[j] = 0;
      ++lines[t];
    }
    for (auto t : unique) {
      t[j] = 0;
      if (lines[t] < 2) {
        out.property = false;
        break;
      }
    }
  }
  out.bound = BigInt(unique.size()) >= big_pow(BigInt(2), n);
  return out;
}

}  // namespace sparsezt
