#include "nashtoric/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace nashtoric {

bool verify_witness(const IsomorphismWitness& w, const AffineSemigroup& src,
                    const AffineSemigroup& dst) {
  const Index d = src.rank();
  if (dst.rank() != d || w.map.rows() != d || w.map.cols() != d) return false;
  if (src.size() != dst.size()) return false;
  if (static_cast<Index>(w.permutation.size()) != src.size()) return false;
  if (!is_unimodular(w.map)) return false;
  std::vector<bool> hit(static_cast<std::size_t>(dst.size()), false);
  for (Index i = 0; i < src.size(); ++i) {
    const Index p = w.permutation[static_cast<std::size_t>(i)];
    if (p < 0 || p >= dst.size() || hit[static_cast<std::size_t>(p)])
      return false;
    hit[static_cast<std::size_t>(p)] = true;
    if (!equal(Vec(w.map * src.element(i)), dst.element(p))) return false;
  }
  return true;
}

std::optional<IsomorphismWitness> find_isomorphism(
    const AffineSemigroup& src, const AffineSemigroup& dst) {
  const Index d = src.rank();
  if (dst.rank() != d)
    throw DimensionError("find_isomorphism: rank mismatch");
  const Index n = src.size();
  if (n != dst.size()) return std::nullopt;

  // Lexicographically first linearly independent d-subset of the source.
  std::vector<Index> anchor;
  Int anchor_det(0);
  for (const std::vector<Index>& subset : index_subsets(n, d)) {
    const Int dv = det(select_columns(src.basis(), subset));
    if (dv != 0) {
      anchor = subset;
      anchor_det = abs(dv);
      break;
    }
  }
  const Mat anchor_t = select_columns(src.basis(), anchor).transpose();

  std::map<Vec, Index, LexLess> dst_index;
  for (Index j = 0; j < n; ++j) dst_index.emplace(dst.element(j), j);

  // All ordered d-tuples of distinct target indices, lexicographic order.
  std::vector<Index> tuple(static_cast<std::size_t>(d));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::optional<IsomorphismWitness> found;

  auto try_tuple = [&]() -> bool {
    Mat images(d, d);
    for (Index j = 0; j < d; ++j)
      images.col(j) = dst.element(tuple[static_cast<std::size_t>(j)]);
    if (abs(det(images)) != anchor_det) return false;
    // Row i of the map solves anchor^T x = images row i.
    Mat map(d, d);
    for (Index i = 0; i < d; ++i) {
      const std::optional<Vec> row =
          solve_integer_columns(anchor_t, Vec(images.row(i).transpose()));
      if (!row) return false;
      map.row(i) = row->transpose();
    }
    if (!is_unimodular(map)) return false;
    std::vector<Index> perm(static_cast<std::size_t>(n));
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (Index i = 0; i < n; ++i) {
      const Vec image = map * src.element(i);
      const auto it = dst_index.find(image);
      if (it == dst_index.end() || hit[static_cast<std::size_t>(it->second)])
        return false;
      perm[static_cast<std::size_t>(i)] = it->second;
      hit[static_cast<std::size_t>(it->second)] = true;
    }
    found = IsomorphismWitness{std::move(map), std::move(perm)};
    return true;
  };

  auto search = [&](auto&& self, Index pos) -> bool {
    if (pos == d) return try_tuple();
    for (Index j = 0; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      used[static_cast<std::size_t>(j)] = true;
      tuple[static_cast<std::size_t>(pos)] = j;
      if (self(self, pos + 1)) return true;
      used[static_cast<std::size_t>(j)] = false;
    }
    return false;
  };
  search(search, 0);
  return found;
}

Fingerprint fingerprint(const AffineSemigroup& s) {
  Fingerprint fp;
  fp.rank = s.rank();
  fp.basis_size = s.size();
  for (const std::vector<Index>& subset : index_subsets(s.size(), s.rank()))
    fp.subset_dets.push_back(abs(det(select_columns(s.basis(), subset))));
  std::sort(fp.subset_dets.begin(), fp.subset_dets.end());
  for (Index i = 0; i < s.size(); ++i) {
    Index count = 0;
    for (Index j = 0; j < s.size(); ++j) {
      if (i == j) continue;
      const Vec diff = s.element(i) - s.element(j);
      if (is_member(diff, s.basis(), s.certificate())) ++count;
    }
    fp.membership_counts.push_back(count);
  }
  std::sort(fp.membership_counts.begin(), fp.membership_counts.end());
  return fp;
}

}  // namespace nashtoric
