#include "nashtoric/semigroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace nashtoric {

namespace {

// --------------------------------------------------------------------------
// Pointedness via exact Fourier-Motzkin elimination.
//
// We look for a rational covector x with x . g >= 1 for every generator g,
// then scale to integers. Constraints are kept as integer rows a . x >= b.

struct FmRow {
  std::vector<Int> a;
  Int b;
};

// Scales the row down by the gcd of all its entries; returns false when the
// row degenerates to 0 >= b with b > 0 (infeasible system).
bool normalize_row(FmRow& row, bool& tautology) {
  Int g(0);
  bool all_zero = true;
  for (const Int& v : row.a) {
    if (v != 0) all_zero = false;
    g = gcd_int(g, v);
  }
  if (all_zero) {
    tautology = true;
    return row.b <= 0;
  }
  tautology = false;
  g = gcd_int(g, row.b);
  if (g > 1)
  {
    for (Int& v : row.a) v = exact_div(v, g);
    row.b = exact_div(row.b, g);
  }
  return true;
}

// Inserts with dominance pruning: identical coefficient vectors keep only the
// strongest right-hand side.
void insert_row(std::map<std::vector<Int>, Int>& rows, FmRow row) {
  auto [it, fresh] = rows.emplace(std::move(row.a), row.b);
  if (!fresh && row.b > it->second) it->second = row.b;
}

std::optional<std::vector<Rat>> fm_solve(const Mat& gens) {
  const Index d = gens.rows();
  std::map<std::vector<Int>, Int> current;
  for (Index j = 0; j < gens.cols(); ++j) {
    FmRow row;
    row.a.resize(static_cast<std::size_t>(d));
    for (Index i = 0; i < d; ++i) row.a[static_cast<std::size_t>(i)] = gens(i, j);
    row.b = 1;
    bool taut = false;
    if (!normalize_row(row, taut)) return std::nullopt;
    if (!taut) insert_row(current, std::move(row));
  }

  // levels[v] holds the system right before variable v is eliminated.
  std::vector<std::vector<FmRow>> levels(static_cast<std::size_t>(d));
  for (Index v = 0; v + 1 < d; ++v) {
    auto& level = levels[static_cast<std::size_t>(v)];
    std::vector<FmRow> pos, neg;
    std::map<std::vector<Int>, Int> next;
    for (const auto& [a, b] : current) {
      FmRow row{a, b};
      level.push_back(row);
      const Int& c = a[static_cast<std::size_t>(v)];
      if (c > 0)
        pos.push_back(std::move(row));
      else if (c < 0)
        neg.push_back(std::move(row));
      else
        insert_row(next, std::move(row));
    }
    for (const FmRow& p : pos) {
      const Int cp = p.a[static_cast<std::size_t>(v)];
      for (const FmRow& n : neg) {
        const Int cn = -n.a[static_cast<std::size_t>(v)];
        FmRow row;
        row.a.resize(static_cast<std::size_t>(d));
        for (std::size_t i = 0; i < row.a.size(); ++i)
          row.a[i] = cn * p.a[i] + cp * n.a[i];
        row.b = cn * p.b + cp * n.b;
        bool taut = false;
        if (!normalize_row(row, taut)) return std::nullopt;
        if (!taut) insert_row(next, std::move(row));
      }
    }
    current.swap(next);
  }
  for (const auto& [a, b] : current)
    levels[static_cast<std::size_t>(d - 1)].push_back(FmRow{a, b});

  // Back-substitution, tightest lower bound first.
  std::vector<Rat> x(static_cast<std::size_t>(d), Rat(0));
  for (Index v = d - 1; v >= 0; --v) {
    std::optional<Rat> lower, upper;
    for (const FmRow& row : levels[static_cast<std::size_t>(v)]) {
      const Int& c = row.a[static_cast<std::size_t>(v)];
      if (c == 0) continue;  // enforced at a later level
      Rat tail(0);
      for (Index j = v + 1; j < d; ++j)
        tail += Rat(row.a[static_cast<std::size_t>(j)]) * x[static_cast<std::size_t>(j)];
      Rat bound = (Rat(row.b) - tail) / Rat(c);
      bound.canonicalize();
      if (c > 0) {
        if (!lower || bound > *lower) lower = bound;
      } else {
        if (!upper || bound < *upper) upper = bound;
      }
    }
    if (lower && upper && *lower > *upper) return std::nullopt;
    Rat value(0);
    if (lower)
      value = *lower;
    else if (upper && *upper < 0)
      value = *upper;
    x[static_cast<std::size_t>(v)] = value;
  }
  return x;
}

// --------------------------------------------------------------------------
// Membership search.

struct MemoLess {
  bool operator()(const std::pair<Index, Vec>& a,
                  const std::pair<Index, Vec>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return lex_compare(a.second, b.second) < 0;
  }
};

class MemberSearch {
 public:
  MemberSearch(const Mat& gens, const Covec& cert, const SearchLimits& limits)
      : limits_(limits) {
    const Index n = gens.cols();
    order_.resize(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) order_[static_cast<std::size_t>(i)] = i;
    std::vector<Int> cost(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) cost[static_cast<std::size_t>(i)] = cert.dot(gens.col(i));
    // Try expensive generators first; certificates bound their multiplicity
    // tightly, which keeps the branching shallow.
    std::stable_sort(order_.begin(), order_.end(), [&](Index a, Index b) {
      return cost[static_cast<std::size_t>(a)] > cost[static_cast<std::size_t>(b)];
    });
    cols_.reserve(static_cast<std::size_t>(n));
    cost_.reserve(static_cast<std::size_t>(n));
    for (Index i : order_) {
      cols_.push_back(gens.col(i));
      cost_.push_back(cost[static_cast<std::size_t>(i)]);
    }
    min_tail_.assign(static_cast<std::size_t>(n) + 1, Int(0));
    if (n > 0) {
      min_tail_[static_cast<std::size_t>(n - 1)] = cost_.back();
      for (Index i = n - 2; i >= 0; --i)
        min_tail_[static_cast<std::size_t>(i)] =
            std::min(min_tail_[static_cast<std::size_t>(i + 1)],
                     cost_[static_cast<std::size_t>(i)]);
    }
  }

  std::optional<Representation> run(const Vec& target, const Int& budget) {
    counts_.assign(cols_.size(), Int(0));
    if (!dfs(0, target, budget)) return std::nullopt;
    Representation rep;
    for (std::size_t i = 0; i < cols_.size(); ++i)
      if (counts_[i] > 0) rep.terms.emplace_back(order_[i], counts_[i]);
    std::sort(rep.terms.begin(), rep.terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return rep;
  }

 private:
  bool dfs(Index i, const Vec& residual, const Int& budget) {
    if (is_zero(residual)) return true;
    const Index n = static_cast<Index>(cols_.size());
    if (i >= n) return false;
    if (budget < min_tail_[static_cast<std::size_t>(i)]) return false;
    if ((++steps_ & 0x3ff) == 0) limits_.check();
    const auto key = std::make_pair(i, residual);
    if (failed_.count(key)) return false;

    const Vec& g = cols_[static_cast<std::size_t>(i)];
    const Int& c = cost_[static_cast<std::size_t>(i)];
    if (i == n - 1) {
      // Last generator: residual must be an exact nonnegative multiple.
      Index j = 0;
      while (g(j) == 0) ++j;
      if (divides(g(j), residual(j))) {
        Int k = exact_div(residual(j), g(j));
        if (k >= 0 && equal(Vec(k * g), residual)) {
          counts_[static_cast<std::size_t>(i)] = k;
          return true;
        }
      }
      failed_.insert(key);
      return false;
    }

    Int maxc = floor_div(budget, c);
    Vec r = residual - maxc * g;
    for (Int k = maxc; k >= 0; --k) {
      if (dfs(i + 1, r, budget - k * c)) {
        counts_[static_cast<std::size_t>(i)] = k;
        return true;
      }
      r += g;
    }
    failed_.insert(key);
    return false;
  }

  std::vector<Index> order_;
  std::vector<Vec> cols_;
  std::vector<Int> cost_;
  std::vector<Int> min_tail_;
  std::vector<Int> counts_;
  std::set<std::pair<Index, Vec>, MemoLess> failed_;
  const SearchLimits& limits_;
  long long steps_ = 0;
};

void require_valid_certificate(const Mat& gens, const Covec& cert) {
  if (cert.size() != gens.rows())
    throw DimensionError("certificate dimension mismatch");
  for (Index j = 0; j < gens.cols(); ++j)
    if (cert.dot(gens.col(j)) < 1)
      throw InvalidCertificateError(
          "certificate is not >= 1 on generator " + std::to_string(j));
}

}  // namespace

Vec Representation::evaluate(const Mat& gens) const {
  Vec sum = Vec::Zero(gens.rows());
  for (const auto& [idx, mult] : terms) sum += mult * gens.col(idx);
  return sum;
}

AffineSemigroup::AffineSemigroup(Mat basis, Covec cert)
    : basis_(std::move(basis)), cert_(std::move(cert)) {
  if (basis_.cols() == 0)
    throw DegenerateInputError("semigroup needs at least one generator");
  require_valid_certificate(basis_, cert_);
  for (Index j = 0; j + 1 < basis_.cols(); ++j)
    if (lex_compare(basis_.col(j), basis_.col(j + 1)) >= 0)
      throw Error("Hilbert basis must be strictly lex-sorted");
  if (!spans_full_lattice(basis_))
    throw LatticeSpanError("Hilbert basis does not span the full lattice");
}

std::optional<Covec> pointedness_certificate(const Mat& gens) {
  if (gens.cols() == 0 || gens.rows() == 0)
    throw DegenerateInputError("pointedness_certificate: empty input");
  for (Index j = 0; j < gens.cols(); ++j)
    if (is_zero(gens.col(j)))
      throw DegenerateInputError(
          "pointedness_certificate: zero generator at column " +
          std::to_string(j));
  std::optional<std::vector<Rat>> x = fm_solve(gens);
  if (!x) return std::nullopt;
  Int scale(1);
  for (const Rat& q : *x) scale = lcm_int(scale, q.get_den());
  Covec cert(gens.rows());
  for (Index i = 0; i < gens.rows(); ++i) {
    const Rat& q = (*x)[static_cast<std::size_t>(i)];
    cert(i) = q.get_num() * exact_div(scale, q.get_den());
  }
  require_valid_certificate(gens, cert);
  return cert;
}

std::optional<Representation> is_member(const Vec& target, const Mat& gens,
                                        const Covec& cert,
                                        const SearchLimits& limits) {
  if (target.size() != gens.rows())
    throw DimensionError("is_member: target dimension mismatch");
  limits.check();
  require_valid_certificate(gens, cert);
  if (is_zero(target)) return Representation{};
  if (gens.cols() == 0) return std::nullopt;
  const Int budget = cert.dot(target);
  if (budget < 1) return std::nullopt;
  MemberSearch search(gens, cert, limits);
  return search.run(target, budget);
}

std::optional<Representation> is_member(const Vec& target, const Mat& gens) {
  std::optional<Covec> cert = pointedness_certificate(gens);
  if (!cert) throw NotPointedError("is_member: generators are not pointed");
  return is_member(target, gens, *cert);
}

namespace detail {

Mat sieve_with_certificate(const Mat& gens, int depth, const Covec& cert,
                           const SearchLimits& limits) {
  limits.check();
  if (depth < 2 || gens.cols() == 0) return gens;
  Int max_cost(0);
  std::vector<Vec> values;
  {
    VecSet distinct;
    for (Index j = 0; j < gens.cols(); ++j) {
      Int c = cert.dot(gens.col(j));
      if (c > max_cost) max_cost = c;
      if (distinct.insert(gens.col(j)).second) values.push_back(gens.col(j));
    }
  }
  VecSet sums;
  std::vector<Vec> frontier = values;
  long long steps = 0;
  for (int level = 2; level <= depth && !frontier.empty(); ++level) {
    std::vector<Vec> next;
    for (const Vec& s : frontier) {
      for (const Vec& g : values) {
        if ((++steps & 0xff) == 0) limits.check();
        Vec t = s + g;
        // Sums only grow in certificate value, so anything past the largest
        // generator can never knock a generator out.
        if (cert.dot(t) > max_cost) continue;
        if (sums.insert(t).second && level < depth) next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Vec> keep;
  for (Index j = 0; j < gens.cols(); ++j)
    if (!sums.count(gens.col(j))) keep.push_back(gens.col(j));
  return from_columns(gens.rows(), keep);
}

AffineSemigroup hilbert_basis_with_certificate(const Mat& stripped_gens,
                                               int sieve_depth,
                                               const Covec& cert,
                                               const SearchLimits& limits) {
  const Mat sieved =
      sieve_with_certificate(stripped_gens, sieve_depth, cert, limits);
  std::vector<Vec> pool = columns_of(sieved);
  std::vector<bool> removed(pool.size(), false);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    std::vector<Vec> others;
    others.reserve(pool.size());
    for (std::size_t j = 0; j < pool.size(); ++j)
      if (j != i && !removed[j]) others.push_back(pool[j]);
    if (others.empty()) continue;
    if (is_member(pool[i], from_columns(sieved.rows(), others), cert, limits))
      removed[i] = true;
  }
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (!removed[i]) basis.push_back(pool[i]);
  std::sort(basis.begin(), basis.end(), LexLess{});
  return AffineSemigroup(from_columns(sieved.rows(), basis), cert);
}

}  // namespace detail

Mat sieve(const Mat& gens, int depth, const SearchLimits& limits) {
  std::optional<Covec> cert = pointedness_certificate(gens);
  if (!cert) throw NotPointedError("sieve: generators are not pointed");
  return detail::sieve_with_certificate(gens, depth, *cert, limits);
}

AffineSemigroup hilbert_basis(const Mat& gens, int sieve_depth,
                              const SearchLimits& limits) {
  const Mat stripped = strip_zero_and_duplicate_columns(gens);
  if (stripped.cols() == 0)
    throw DegenerateInputError("hilbert_basis: no nonzero generators");
  std::optional<Covec> cert = pointedness_certificate(stripped);
  if (!cert)
    throw NotPointedError("hilbert_basis: generators are not pointed");
  if (!spans_full_lattice(stripped))
    throw LatticeSpanError(
        "hilbert_basis: generators do not span the full lattice");
  return detail::hilbert_basis_with_certificate(stripped, sieve_depth, *cert,
                                                limits);
}

bool semigroup_equals(const Mat& a, const Mat& b, const SearchLimits& limits) {
  if (a.rows() != b.rows())
    throw DimensionError("semigroup_equals: rank mismatch");
  const Mat sa = strip_zero_and_duplicate_columns(a);
  const Mat sb = strip_zero_and_duplicate_columns(b);
  if (sa.cols() == 0 || sb.cols() == 0) return sa.cols() == sb.cols();
  std::optional<Covec> ca = pointedness_certificate(sa);
  std::optional<Covec> cb = pointedness_certificate(sb);
  if (!ca || !cb)
    throw NotPointedError("semigroup_equals: input is not pointed");
  for (Index j = 0; j < sa.cols(); ++j)
    if (!is_member(sa.col(j), sb, *cb, limits)) return false;
  for (Index j = 0; j < sb.cols(); ++j)
    if (!is_member(sb.col(j), sa, *ca, limits)) return false;
  return true;
}

bool is_smooth(const AffineSemigroup& s) {
  return s.size() == s.rank() && is_unimodular(s.basis());
}

std::optional<Vec> saturation_witness(const AffineSemigroup& s,
                                      const Int& search_bound,
                                      const Int& multiplier_bound) {
  if (search_bound < 1) return std::nullopt;
  const Index d = s.rank();
  const Mat& basis = s.basis();
  const Covec& cert = s.certificate();
  // Any cone point of certificate value <= bound is a nonnegative real
  // combination with coefficient sum <= bound, hence lives in this box.
  std::vector<Int> box(static_cast<std::size_t>(d), Int(0));
  for (Index i = 0; i < d; ++i) {
    Int m(0);
    for (Index j = 0; j < basis.cols(); ++j) {
      Int v = abs(basis(i, j));
      if (v > m) m = v;
    }
    box[static_cast<std::size_t>(i)] = m * search_bound;
  }
  Vec u(d);
  for (Index i = 0; i < d; ++i) u(i) = -box[static_cast<std::size_t>(i)];
  while (true) {
    const Int value = cert.dot(u);
    if (value >= 1 && value <= search_bound && !is_member(u, basis, cert)) {
      Vec multiple = u;
      for (Int lambda(2); lambda <= multiplier_bound; ++lambda) {
        multiple += u;
        if (is_member(multiple, basis, cert)) return u;
      }
    }
    // Odometer step through the box in lexicographic order.
    Index i = d - 1;
    while (i >= 0) {
      if (u(i) < box[static_cast<std::size_t>(i)]) {
        u(i) += 1;
        break;
      }
      u(i) = -box[static_cast<std::size_t>(i)];
      --i;
    }
    if (i < 0) break;
  }
  return std::nullopt;
}

bool relation_holds(const BinomialRelation& rel, const Mat& gens) {
  Vec lhs = Vec::Zero(gens.rows());
  Vec rhs = Vec::Zero(gens.rows());
  for (Index i : rel.lhs) {
    if (i < 0 || i >= gens.cols())
      throw IndexError("relation index " + std::to_string(i) + " out of range");
    lhs += gens.col(i);
  }
  for (Index i : rel.rhs) {
    if (i < 0 || i >= gens.cols())
      throw IndexError("relation index " + std::to_string(i) + " out of range");
    rhs += gens.col(i);
  }
  return equal(lhs, rhs);
}

}  // namespace nashtoric
