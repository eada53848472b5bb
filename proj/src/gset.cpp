#include "fusionforge/gset.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>

namespace fusionforge {

namespace {

constexpr std::uint16_t unassigned16 = 0xFFFFu;
constexpr pt unassigned_pt = 0xFFFFFFFFu;

} // namespace

CosetTable left_cosets(PermGroup const &G, Subgroup const &H)
{
  assert(H.parent().same_group(G));

  CosetTable ct;
  ct.coset_of.assign(G.order(), unassigned16);

  for (el e = 0u; e < G.order(); ++e) {
    if (ct.coset_of[e] != unassigned16)
      continue;
    auto cid = static_cast<std::uint16_t>(ct.rep.size());
    ct.rep.push_back(e);
    for (el h : H.indices())
      ct.coset_of[G.mul(e, h)] = cid;
  }

  return ct;
}

std::vector<el> double_coset_reps(PermGroup const &G, Subgroup const &K, Subgroup const &H)
{
  assert(K.parent().same_group(G) && H.parent().same_group(G));

  std::vector<el> kgens = K.generating_set();
  std::vector<el> hgens = H.generating_set();

  std::vector<bool> seen(G.order(), false);
  std::vector<el> reps;

  for (el g = 0u; g < G.order(); ++g) {
    if (seen[g])
      continue;
    reps.push_back(g);

    std::deque<el> queue{g};
    seen[g] = true;
    while (!queue.empty()) {
      el x = queue.front();
      queue.pop_front();
      for (el k : kgens) {
        el y = G.mul(k, x);
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
      for (el h : hgens) {
        el y = G.mul(x, h);
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
  }

  return reps;
}

// --- TransitiveDecomposition ---------------------------------------------------------------

TransitiveDecomposition TransitiveDecomposition::from_parts(PermGroup const &G,
                                                            std::vector<Subgroup> parts)
{
  std::map<std::vector<el>, unsigned> counts;
  for (auto const &S : parts) {
    assert(S.parent().same_group(G));
    counts[canonical_conjugate(G, S).indices()] += 1u;
  }

  TransitiveDecomposition d;
  for (auto const &[idx, mult] : counts)
    d._parts.emplace_back(Subgroup(G, idx), mult);

  std::sort(d._parts.begin(), d._parts.end(), [](auto const &a, auto const &b) {
    if (a.first.order() != b.first.order())
      return a.first.order() < b.first.order();
    return a.first.indices() < b.first.indices();
  });

  return d;
}

unsigned TransitiveDecomposition::total_points(PermGroup const &G) const
{
  unsigned total = 0u;
  for (auto const &[S, mult] : _parts)
    total += (G.order() / S.order()) * mult;
  return total;
}

bool TransitiveDecomposition::operator==(TransitiveDecomposition const &other) const
{
  if (_parts.size() != other._parts.size())
    return false;
  for (std::size_t i = 0u; i < _parts.size(); ++i) {
    if (_parts[i].second != other._parts[i].second ||
        !(_parts[i].first == other._parts[i].first))
      return false;
  }
  return true;
}

Subgroup const &ClassKeyCache::representative(Subgroup const &S)
{
  assert(S.parent().same_group(_group));

  auto it = _memo.find(S.indices());
  if (it != _memo.end())
    return it->second;

  Subgroup rep = canonical_conjugate(_group, S);
  return _memo.emplace(S.indices(), std::move(rep)).first->second;
}

// --- GSet ----------------------------------------------------------------------------------

GSet::GSet(PermGroup group, pt size, std::vector<pt> table)
  : _group(std::move(group)),
    _size(size),
    _table(std::move(table))
{
  assert(_table.size() == static_cast<std::size_t>(_group.order()) * _size);
#ifndef NDEBUG
  for (pt x = 0u; x < _size; ++x)
    assert(apply(0u, x) == x && "identity acts trivially");
  if (static_cast<std::size_t>(_group.order()) * _group.generator_indices().size() * _size <=
      1u << 22)
    validate();
#endif
}

void GSet::validate() const
{
  for (pt x = 0u; x < _size; ++x)
    if (apply(0u, x) != x)
      throw InvalidData("identity must act trivially");

  // generator rows against every element row pin down the whole table by induction over
  // generator words
  for (el g : _group.generator_indices()) {
    for (el h = 0u; h < _group.order(); ++h) {
      el gh = _group.mul(g, h);
      for (pt x = 0u; x < _size; ++x)
        if (apply(gh, x) != apply(g, apply(h, x)))
          throw InvalidData("action table is not associative");
    }
  }
}

GSet GSet::cosets(PermGroup const &G, Subgroup const &H)
{
  CosetTable ct = left_cosets(G, H);
  auto m = static_cast<pt>(ct.rep.size());

  std::vector<pt> table(static_cast<std::size_t>(G.order()) * m);
  for (el g = 0u; g < G.order(); ++g)
    for (pt c = 0u; c < m; ++c)
      table[static_cast<std::size_t>(g) * m + c] = ct.coset_of[G.mul(g, ct.rep[c])];

  return GSet(G, m, std::move(table));
}

GSet GSet::single_point(PermGroup const &G)
{
  return GSet(G, 1u, std::vector<pt>(G.order(), 0u));
}

GSet GSet::regular(PermGroup const &G)
{
  auto n = static_cast<pt>(G.order());
  std::vector<pt> table(static_cast<std::size_t>(n) * n);
  for (el g = 0u; g < n; ++g)
    for (el x = 0u; x < n; ++x)
      table[static_cast<std::size_t>(g) * n + x] = G.mul(g, static_cast<el>(x));
  return GSet(G, n, std::move(table));
}

GSet GSet::disjoint_union(GSet const &A, GSet const &B)
{
  assert(A._group.same_group(B._group));

  pt size = A._size + B._size;
  std::vector<pt> table(static_cast<std::size_t>(A._group.order()) * size);
  for (el g = 0u; g < A._group.order(); ++g) {
    for (pt x = 0u; x < A._size; ++x)
      table[static_cast<std::size_t>(g) * size + x] = A.apply(g, x);
    for (pt x = 0u; x < B._size; ++x)
      table[static_cast<std::size_t>(g) * size + A._size + x] = A._size + B.apply(g, x);
  }

  return GSet(A._group, size, std::move(table));
}

std::vector<std::vector<pt>> GSet::orbits() const
{
  std::vector<pt> orbit_of(_size, unassigned_pt);
  pt count = 0u;

  for (pt x = 0u; x < _size; ++x) {
    if (orbit_of[x] != unassigned_pt)
      continue;
    pt id = count++;
    orbit_of[x] = id;

    std::deque<pt> queue{x};
    while (!queue.empty()) {
      pt y = queue.front();
      queue.pop_front();
      for (el g : _group.generator_indices()) {
        pt z = apply(g, y);
        if (orbit_of[z] == unassigned_pt) {
          orbit_of[z] = id;
          queue.push_back(z);
        }
      }
    }
  }

  std::vector<std::vector<pt>> res(count);
  for (pt x = 0u; x < _size; ++x)
    res[orbit_of[x]].push_back(x);
  return res;
}

Subgroup GSet::stabilizer(pt x) const
{
  std::vector<el> idx;
  for (el g = 0u; g < _group.order(); ++g)
    if (apply(g, x) == x)
      idx.push_back(g);
  return Subgroup(_group, std::move(idx));
}

TransitiveDecomposition GSet::decomposition() const
{
  std::vector<Subgroup> parts;
  for (auto const &orbit : orbits())
    parts.push_back(stabilizer(orbit.front()));
  return TransitiveDecomposition::from_parts(_group, std::move(parts));
}

TransitiveDecomposition GSet::decomposition(ClassKeyCache &cache) const
{
  assert(cache.group().same_group(_group));

  std::vector<Subgroup> reps;
  for (auto const &orbit : orbits())
    reps.push_back(cache.representative(stabilizer(orbit.front())));

  // already canonical, so from_parts only counts and sorts
  return TransitiveDecomposition::from_parts(_group, std::move(reps));
}

bool GSet::is_isomorphic_to(GSet const &other) const
{
  if (!_group.same_group(other._group) || _size != other._size)
    return false;
  return decomposition() == other.decomposition();
}

GSet GSet::restricted(Subgroup const &K) const
{
  assert(K.parent().same_group(_group));

  PermGroup Kg = K.as_group();

  std::vector<pt> table(static_cast<std::size_t>(Kg.order()) * _size);
  for (unsigned l = 0u; l < K.order(); ++l) {
    el g = K.indices()[l];
    for (pt x = 0u; x < _size; ++x)
      table[static_cast<std::size_t>(l) * _size + x] = apply(g, x);
  }

  return GSet(Kg, _size, std::move(table));
}

GSet GSet::transported(GroupMorphism const &iso) const
{
  assert(iso.source().parent().same_group(_group));
  assert(iso.source().order() == _group.order() && "defined on the whole acting group");
  assert(iso.is_bijective());

  PermGroup const &B = iso.target().parent();
  assert(iso.target().order() == B.order() && "onto the whole new acting group");

  std::vector<pt> table(static_cast<std::size_t>(B.order()) * _size);
  for (el a = 0u; a < _group.order(); ++a) {
    el b = iso.apply(a);
    for (pt x = 0u; x < _size; ++x)
      table[static_cast<std::size_t>(b) * _size + x] = apply(a, x);
  }

  return GSet(B, _size, std::move(table));
}

// --- induction / Mackey / deflation --------------------------------------------------------

GSet induce(PermGroup const &G, Subgroup const &H, GSet const &X)
{
  assert(H.parent().same_group(G));
  assert(X.group().same_group(H.as_group()));

  CosetTable ct = left_cosets(G, H);
  auto m = static_cast<pt>(ct.rep.size());
  pt size = m * X.size();

  std::vector<pt> table(static_cast<std::size_t>(G.order()) * size);
  for (el g = 0u; g < G.order(); ++g) {
    for (pt c = 0u; c < m; ++c) {
      el t = G.mul(g, ct.rep[c]);
      pt c2 = ct.coset_of[t];
      el h = G.mul(G.inv(ct.rep[c2]), t); // the carry g r_c = r_c2 h
      auto h_local = static_cast<el>(H.local_index(h));
      for (pt x = 0u; x < X.size(); ++x)
        table[static_cast<std::size_t>(g) * size + c * X.size() + x] =
          c2 * X.size() + X.apply(h_local, x);
    }
  }

  return GSet(G, size, std::move(table));
}

GSet conjugated_slice(PermGroup const &G, Subgroup const &H, GSet const &X, el t,
                      Subgroup const &L)
{
  assert(H.parent().same_group(G) && L.parent().same_group(G));
  assert(X.group().same_group(H.as_group()));

  PermGroup Lg = L.as_group();

  std::vector<pt> table(static_cast<std::size_t>(Lg.order()) * X.size());
  for (unsigned l = 0u; l < L.order(); ++l) {
    el u = L.indices()[l];
    el h = G.mul(G.mul(G.inv(t), u), t);
    auto h_local = static_cast<el>(H.local_index(h)); // asserts t^-1 u t lies in H
    for (pt x = 0u; x < X.size(); ++x)
      table[static_cast<std::size_t>(l) * X.size() + x] = X.apply(h_local, x);
  }

  return GSet(Lg, X.size(), std::move(table));
}

MackeyComparison mackey_comparison(PermGroup const &G, Subgroup const &H, Subgroup const &K,
                                   GSet const &X)
{
  MackeyComparison cmp;

  GSet lhs_set = induce(G, H, X).restricted(K);

  cmp.reps = double_coset_reps(G, K, H);

  PermGroup Kg = K.as_group();
  GSet rhs_set(Kg, 0u, {});
  for (el t : cmp.reps) {
    Subgroup L = intersection(K, H.conjugated_by(t));
    GSet slice = conjugated_slice(G, H, X, t, L);

    // L inside K's standalone group: same permutations, same canonical order
    std::vector<el> local;
    local.reserve(L.order());
    for (el u : L.indices())
      local.push_back(static_cast<el>(K.local_index(u)));
    Subgroup L_in_K(Kg, std::move(local));

    rhs_set = GSet::disjoint_union(rhs_set, induce(Kg, L_in_K, slice));
  }

  cmp.lhs = lhs_set.decomposition();
  cmp.rhs = rhs_set.decomposition();
  cmp.isomorphic = cmp.lhs == cmp.rhs;
  return cmp;
}

GSet deflate(GSet const &X, QuotientGroup const &q, Subgroup const &N)
{
  assert(N.parent().same_group(X.group()));
  assert(q.projection.source().parent().same_group(X.group()));

  // N-orbits become the points, in ascending order of their minimal member
  std::vector<el> ngens = N.generating_set();

  std::vector<pt> orbit_of(X.size(), unassigned_pt);
  std::vector<pt> orbit_min;
  for (pt x = 0u; x < X.size(); ++x) {
    if (orbit_of[x] != unassigned_pt)
      continue;
    pt id = static_cast<pt>(orbit_min.size());
    orbit_min.push_back(x);
    orbit_of[x] = id;

    std::deque<pt> queue{x};
    while (!queue.empty()) {
      pt y = queue.front();
      queue.pop_front();
      for (el g : ngens) {
        pt z = X.apply(g, y);
        if (orbit_of[z] == unassigned_pt) {
          orbit_of[z] = id;
          queue.push_back(z);
        }
      }
    }
  }

  auto size = static_cast<pt>(orbit_min.size());
  std::vector<pt> table(static_cast<std::size_t>(q.group.order()) * size);
  for (el e = 0u; e < q.group.order(); ++e) {
    el g = q.preimage[e];
    for (pt o = 0u; o < size; ++o)
      table[static_cast<std::size_t>(e) * size + o] = orbit_of[X.apply(g, orbit_min[o])];
  }

  return GSet(q.group, size, std::move(table));
}

// --- bisets --------------------------------------------------------------------------------

Biset biset_from_subgroup(ProductGroup const &amb, Subgroup const &U)
{
  assert(U.parent().same_group(amb.group));
  return Biset{amb, GSet::cosets(amb.group, U)};
}

Biset dualize(Biset const &B)
{
  ProductGroup amb2 = direct_product(B.amb.right, B.amb.left);

  pt size = B.carrier.size();
  std::vector<pt> table(static_cast<std::size_t>(amb2.group.order()) * size);
  for (el e2 = 0u; e2 < amb2.group.order(); ++e2) {
    el r = amb2.left_of(e2);
    el l = amb2.right_of(e2);
    el e = B.amb.pair_index(l, r);
    for (pt x = 0u; x < size; ++x)
      table[static_cast<std::size_t>(e2) * size + x] = B.carrier.apply(e, x);
  }

  GSet carrier(amb2.group, size, std::move(table));
  return Biset{std::move(amb2), std::move(carrier)};
}

namespace {

struct UnionFind {
  std::vector<pt> parent;

  explicit UnionFind(std::size_t n) : parent(n)
  {
    std::iota(parent.begin(), parent.end(), 0u);
  }

  pt find(pt x)
  {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(pt a, pt b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return;
    if (a > b)
      std::swap(a, b); // keep the smaller id as root so roots are orbit minima
    parent[b] = a;
  }
};

} // namespace

Biset compose(Biset const &B1, Biset const &B2)
{
  return compose(B1, B2, direct_product(B1.amb.left, B2.amb.right));
}

Biset compose(Biset const &B1, Biset const &B2, ProductGroup const &amb_in)
{
  assert(B1.amb.right.same_group(B2.amb.left));
  assert(amb_in.left.same_group(B1.amb.left) && amb_in.right.same_group(B2.amb.right));

  PermGroup const &H = B1.amb.right;
  pt n1 = B1.carrier.size();
  pt n2 = B2.carrier.size();
  std::size_t pairs = static_cast<std::size_t>(n1) * n2;

  UnionFind uf(pairs);
  for (el h : H.generator_indices()) {
    el e1 = B1.amb.pair_index(0u, h); // (1, h) on the left factor
    el e2 = B2.amb.pair_index(h, 0u); // (h, 1) on the right factor
    for (pt a = 0u; a < n1; ++a) {
      pt a2 = B1.carrier.apply(e1, a);
      for (pt b = 0u; b < n2; ++b)
        uf.unite(a * n2 + b, a2 * n2 + B2.carrier.apply(e2, b));
    }
  }

  std::vector<pt> class_of(pairs, unassigned_pt);
  std::vector<pt> rep;
  for (std::size_t p = 0u; p < pairs; ++p) {
    pt root = uf.find(static_cast<pt>(p));
    if (class_of[root] == unassigned_pt) {
      class_of[root] = static_cast<pt>(rep.size());
      rep.push_back(root);
    }
    class_of[p] = class_of[root];
  }

  ProductGroup amb = amb_in;

  auto size = static_cast<pt>(rep.size());
  std::vector<pt> table(static_cast<std::size_t>(amb.group.order()) * size);
  for (el e = 0u; e < amb.group.order(); ++e) {
    el g = amb.left_of(e);
    el k = amb.right_of(e);
    el eg = B1.amb.pair_index(g, 0u);
    el ek = B2.amb.pair_index(0u, k);
    for (pt c = 0u; c < size; ++c) {
      pt a = rep[c] / n2;
      pt b = rep[c] % n2;
      table[static_cast<std::size_t>(e) * size + c] =
        class_of[static_cast<std::size_t>(B1.carrier.apply(eg, a)) * n2 +
                 B2.carrier.apply(ek, b)];
    }
  }

  GSet carrier(amb.group, size, std::move(table));
  return Biset{std::move(amb), std::move(carrier)};
}

} // namespace fusionforge
