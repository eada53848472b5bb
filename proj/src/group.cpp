#include "fusionforge/group.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <iterator>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace fusionforge {

namespace {

// elements are indexed by uint16, so no group may exceed this order
constexpr std::uint32_t index_space_limit = 65535u;

// multiplication tables are materialized up to this order, index ops fall back to
// compose-and-hash beyond it
constexpr std::uint32_t mult_table_threshold = 2048u;

} // namespace

struct PermGroup::Data {
  unsigned degree = 1u;
  std::vector<Perm> generators;
  std::vector<el> generator_indices;
  std::vector<Perm> elements;
  std::unordered_map<Perm, el, PermHash> index;
  std::vector<el> inverses;
  std::vector<el> mult;
};

std::shared_ptr<PermGroup::Data const> PermGroup::build_data(unsigned degree,
                                                             std::vector<Perm> elements,
                                                             std::vector<Perm> generators)
{
  assert(degree >= 1u && "positive degree");

  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  assert(!elements.empty() && "nonempty element list");
  assert(elements.size() <= index_space_limit && "order within element index space");
  assert(elements.front().is_identity() &&
         "identity is lexicographically minimal, so it sits at index 0");

  auto d = std::make_shared<PermGroup::Data>();
  d->degree = degree;
  d->elements = std::move(elements);

  auto const n = static_cast<el>(d->elements.size());

  d->index.reserve(n);
  for (el i = 0u; i < n; ++i) {
    assert(d->elements[i].degree() == degree && "all elements have the group's degree");
    d->index.emplace(d->elements[i], i);
  }

  d->inverses.resize(n);
  for (el i = 0u; i < n; ++i) {
    auto it = d->index.find(d->elements[i].inverse());
    assert(it != d->index.end() && "closed under inversion");
    d->inverses[i] = it->second;
  }

  if (n <= mult_table_threshold) {
    d->mult.resize(static_cast<std::size_t>(n) * n);
    for (el i = 0u; i < n; ++i) {
      for (el j = 0u; j < n; ++j) {
        auto it = d->index.find(d->elements[i] * d->elements[j]);
        assert(it != d->index.end() && "closed under multiplication");
        d->mult[static_cast<std::size_t>(i) * n + j] = it->second;
      }
    }
  }
#ifndef NDEBUG
  else {
    // spot-check closure for large groups
    for (el i = 0u; i < n; i += 97u)
      for (el j = 1u; j < n; j += 101u)
        assert(d->index.count(d->elements[i] * d->elements[j]) && "closed under multiplication");
  }
#endif

  if (generators.empty())
    generators = d->elements;

  d->generators = std::move(generators);
  d->generator_indices.reserve(d->generators.size());
  for (auto const &g : d->generators) {
    auto it = d->index.find(g);
    assert(it != d->index.end() && "generators are elements");
    d->generator_indices.push_back(it->second);
  }

  return d;
}

std::shared_ptr<PermGroup::Data const> const &PermGroup::trivial_data()
{
  static std::shared_ptr<Data const> d = build_data(1u, {Perm(1u)}, {});
  return d;
}

PermGroup::PermGroup() : _d(trivial_data()) {}

PermGroup PermGroup::from_generators(unsigned degree, std::vector<Perm> const &generators,
                                     Config const &cfg)
{
  cfg.validate();

  std::uint32_t cap = std::min(cfg.closure_cap, index_space_limit);

  Perm id(degree);

  std::unordered_set<Perm, PermHash> seen{id};
  std::deque<Perm> queue{id};

  while (!queue.empty()) {
    Perm q = std::move(queue.front());
    queue.pop_front();

    for (auto const &g : generators) {
      assert(g.degree() == degree && "generator degrees match");

      Perm r = q * g;
      if (seen.insert(r).second) {
        if (seen.size() > cap) {
          std::ostringstream msg;
          msg << "closure exceeds cap " << cap;
          throw CapExceeded(msg.str());
        }
        queue.push_back(std::move(r));
      }
    }
  }

  std::vector<Perm> elements(seen.begin(), seen.end());
  return PermGroup(build_data(degree, std::move(elements), generators));
}

PermGroup PermGroup::from_elements(unsigned degree, std::vector<Perm> elements,
                                   std::vector<Perm> generators)
{
  return PermGroup(build_data(degree, std::move(elements), std::move(generators)));
}

PermGroup PermGroup::trivial(unsigned degree)
{
  if (degree == 1u)
    return PermGroup();
  return from_elements(degree, {Perm(degree)});
}

PermGroup PermGroup::symmetric(unsigned n)
{
  assert(n >= 1u);
  if (n == 1u)
    return trivial(1u);

  std::vector<point> transp(n);
  std::vector<point> cycle(n);
  for (unsigned x = 0u; x < n; ++x) {
    transp[x] = static_cast<point>(x);
    cycle[x] = static_cast<point>((x + 1u) % n);
  }
  std::swap(transp[0], transp[1]);

  return from_generators(n, {Perm(transp), Perm(cycle)});
}

PermGroup PermGroup::alternating(unsigned n)
{
  assert(n >= 1u);
  if (n <= 2u)
    return trivial(n);

  std::vector<Perm> gens;
  for (unsigned i = 2u; i < n; ++i) {
    std::vector<point> img(n);
    for (unsigned x = 0u; x < n; ++x)
      img[x] = static_cast<point>(x);
    img[0] = 1u;
    img[1] = static_cast<point>(i);
    img[i] = 0u;
    gens.emplace_back(std::move(img));
  }

  return from_generators(n, gens);
}

PermGroup PermGroup::cyclic(unsigned n)
{
  assert(n >= 1u);
  if (n == 1u)
    return trivial(1u);

  std::vector<point> cycle(n);
  for (unsigned x = 0u; x < n; ++x)
    cycle[x] = static_cast<point>((x + 1u) % n);

  return from_generators(n, {Perm(cycle)});
}

PermGroup PermGroup::dihedral(unsigned order)
{
  assert(order >= 4u && order % 2u == 0u && "dihedral groups have even order >= 4");

  unsigned n = order / 2u;
  if (n == 2u)
    return from_generators(4u, {Perm({1, 0, 2, 3}), Perm({0, 1, 3, 2})});

  std::vector<point> rot(n);
  std::vector<point> refl(n);
  for (unsigned x = 0u; x < n; ++x) {
    rot[x] = static_cast<point>((x + 1u) % n);
    refl[x] = static_cast<point>((n - x) % n);
  }

  return from_generators(n, {Perm(rot), Perm(refl)});
}

unsigned PermGroup::degree() const { return _d->degree; }

unsigned PermGroup::order() const { return static_cast<unsigned>(_d->elements.size()); }

std::vector<Perm> const &PermGroup::elements() const { return _d->elements; }

std::vector<Perm> const &PermGroup::generators() const { return _d->generators; }

std::vector<el> const &PermGroup::generator_indices() const { return _d->generator_indices; }

Perm const &PermGroup::element(el i) const
{
  assert(i < order());
  return _d->elements[i];
}

el PermGroup::index_of(Perm const &p) const
{
  auto it = _d->index.find(p);
  if (it == _d->index.end())
    throw InvalidData("permutation is not a group element");
  return it->second;
}

bool PermGroup::contains(Perm const &p) const
{
  return p.degree() == degree() && _d->index.count(p) > 0u;
}

el PermGroup::mul(el a, el b) const
{
  assert(a < order() && b < order());
  if (!_d->mult.empty())
    return _d->mult[static_cast<std::size_t>(a) * order() + b];
  return _d->index.at(_d->elements[a] * _d->elements[b]);
}

el PermGroup::inv(el a) const
{
  assert(a < order());
  return _d->inverses[a];
}

el PermGroup::conj(el g, el x) const { return mul(mul(g, x), inv(g)); }

unsigned PermGroup::element_order(el a) const { return element(a).order(); }

bool PermGroup::same_group(PermGroup const &other) const
{
  if (_d == other._d)
    return true;
  return degree() == other.degree() && _d->elements == other._d->elements;
}

Subgroup PermGroup::full_subgroup() const
{
  std::vector<el> idx(order());
  for (el i = 0u; i < order(); ++i)
    idx[i] = i;
  return Subgroup(*this, std::move(idx));
}

Subgroup PermGroup::trivial_subgroup() const { return Subgroup(*this, {0u}); }

// --- Subgroup ------------------------------------------------------------------------------

Subgroup::Subgroup(PermGroup parent, std::vector<el> sorted_indices)
  : _parent(std::move(parent)),
    _idx(std::move(sorted_indices))
{
  assert(std::is_sorted(_idx.begin(), _idx.end()) && "canonical index order");
  assert(std::adjacent_find(_idx.begin(), _idx.end()) == _idx.end() && "indices unique");
  assert(!_idx.empty() && _idx.front() == 0u && "contains the identity");
  assert(_idx.back() < _parent.order());

#ifndef NDEBUG
  if (_idx.size() <= 128u) {
    for (el a : _idx)
      for (el b : _idx)
        assert(std::binary_search(_idx.begin(), _idx.end(), _parent.mul(a, b)) &&
               "closed under multiplication");
  }
#endif
}

Subgroup Subgroup::generated(PermGroup const &parent, std::vector<el> const &generator_indices)
{
  std::vector<bool> in(parent.order(), false);
  in[0] = true;

  std::deque<el> queue{0u};
  while (!queue.empty()) {
    el x = queue.front();
    queue.pop_front();

    for (el g : generator_indices) {
      el y = parent.mul(x, g);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }

  std::vector<el> idx;
  for (el i = 0u; i < parent.order(); ++i)
    if (in[i])
      idx.push_back(i);

  return Subgroup(parent, std::move(idx));
}

Subgroup Subgroup::generated_perms(PermGroup const &parent, std::vector<Perm> const &generators)
{
  std::vector<el> gi;
  gi.reserve(generators.size());
  for (auto const &g : generators)
    gi.push_back(parent.index_of(g));
  return generated(parent, gi);
}

bool Subgroup::contains(el global) const
{
  return std::binary_search(_idx.begin(), _idx.end(), global);
}

bool Subgroup::contains_perm(Perm const &p) const
{
  return _parent.contains(p) && contains(_parent.index_of(p));
}

unsigned Subgroup::local_index(el global) const
{
  auto it = std::lower_bound(_idx.begin(), _idx.end(), global);
  assert(it != _idx.end() && *it == global && "element of the subgroup");
  return static_cast<unsigned>(it - _idx.begin());
}

std::vector<Perm> Subgroup::elements() const
{
  std::vector<Perm> res;
  res.reserve(_idx.size());
  for (el i : _idx)
    res.push_back(_parent.element(i));
  return res;
}

std::vector<el> Subgroup::generating_set() const
{
  std::vector<el> gens;

  std::vector<bool> in(_parent.order(), false);
  in[0] = true;
  unsigned covered = 1u;

  for (el e : _idx) {
    if (in[e])
      continue;

    gens.push_back(e);

    // grow the closed set by the new generator
    std::deque<el> queue;
    for (el x = 0u; x < _parent.order(); ++x)
      if (in[x])
        queue.push_back(x);
    while (!queue.empty()) {
      el x = queue.front();
      queue.pop_front();
      for (el g : gens) {
        el y = _parent.mul(x, g);
        if (!in[y]) {
          in[y] = true;
          ++covered;
          queue.push_back(y);
        }
      }
    }

    if (covered == _idx.size())
      break;
  }

  return gens;
}

PermGroup Subgroup::as_group() const
{
  std::vector<Perm> gens;
  for (el g : generating_set())
    gens.push_back(_parent.element(g));
  if (gens.empty())
    gens.push_back(Perm(_parent.degree())); // trivial subgroup

  return PermGroup::from_elements(_parent.degree(), elements(), std::move(gens));
}

Subgroup Subgroup::conjugated_by(el g) const
{
  std::vector<el> idx;
  idx.reserve(_idx.size());
  for (el x : _idx)
    idx.push_back(_parent.conj(g, x));
  std::sort(idx.begin(), idx.end());
  return Subgroup(_parent, std::move(idx));
}

bool Subgroup::is_subgroup_of(Subgroup const &other) const
{
  assert(_parent.same_group(other._parent));
  return std::includes(other._idx.begin(), other._idx.end(), _idx.begin(), _idx.end());
}

bool Subgroup::operator==(Subgroup const &other) const
{
  return _parent.same_group(other._parent) && _idx == other._idx;
}

// --- GroupMorphism -------------------------------------------------------------------------

GroupMorphism::GroupMorphism(Subgroup source, Subgroup target, std::vector<el> images)
  : _source(std::move(source)),
    _target(std::move(target)),
    _images(std::move(images))
{
  assert(_images.size() == _source.order() && "one image per source element");
#ifndef NDEBUG
  for (el i : _images)
    assert(_target.contains(i) && "images lie in the target");
  assert(_images[_source.local_index(0u)] == 0u && "identity maps to identity");
#endif
}

el GroupMorphism::apply(el source_global) const
{
  return _images[_source.local_index(source_global)];
}

Perm const &GroupMorphism::apply_perm(Perm const &p) const
{
  return _target.parent().element(apply(_source.parent().index_of(p)));
}

bool GroupMorphism::is_homomorphism() const
{
  auto const &sp = _source.parent();
  auto const &tp = _target.parent();

  for (unsigned i = 0u; i < _source.order(); ++i) {
    for (unsigned j = 0u; j < _source.order(); ++j) {
      el prod = sp.mul(_source.indices()[i], _source.indices()[j]);
      if (!_source.contains(prod))
        return false; // not even a subgroup-consistent table
      if (apply(prod) != tp.mul(_images[i], _images[j]))
        return false;
    }
  }
  return true;
}

bool GroupMorphism::is_injective() const
{
  std::vector<el> imgs(_images);
  std::sort(imgs.begin(), imgs.end());
  return std::adjacent_find(imgs.begin(), imgs.end()) == imgs.end();
}

bool GroupMorphism::is_bijective() const
{
  if (_source.order() != _target.order())
    return false;
  return is_injective();
}

Subgroup GroupMorphism::image() const
{
  std::vector<el> imgs(_images);
  std::sort(imgs.begin(), imgs.end());
  imgs.erase(std::unique(imgs.begin(), imgs.end()), imgs.end());
  return Subgroup(_target.parent(), std::move(imgs));
}

GroupMorphism GroupMorphism::compose(GroupMorphism const &inner) const
{
  assert(inner._target.parent().same_group(_source.parent()));

  std::vector<el> images;
  images.reserve(inner._source.order());
  for (el i : inner._images)
    images.push_back(apply(i));

  return GroupMorphism(inner._source, _target, std::move(images));
}

GroupMorphism GroupMorphism::inverse() const
{
  if (!is_bijective())
    throw NotIsomorphism("inverse of a non-bijective morphism");

  std::vector<el> images(_target.order());
  for (unsigned i = 0u; i < _source.order(); ++i)
    images[_target.local_index(_images[i])] = _source.indices()[i];

  return GroupMorphism(_target, _source, std::move(images));
}

GroupMorphism GroupMorphism::restricted(Subgroup const &sub) const
{
  assert(sub.is_subgroup_of(_source));

  std::vector<el> images;
  images.reserve(sub.order());
  for (el i : sub.indices())
    images.push_back(apply(i));

  return GroupMorphism(sub, _target, std::move(images));
}

GroupMorphism GroupMorphism::corestricted() const
{
  return GroupMorphism(_source, image(), _images);
}

bool GroupMorphism::operator==(GroupMorphism const &other) const
{
  return _source == other._source && _target == other._target && _images == other._images;
}

// --- closure / subgroup enumeration --------------------------------------------------------

PermGroup closure(std::vector<Perm> const &generators, unsigned degree, Config const &cfg)
{
  return PermGroup::from_generators(degree, generators, cfg);
}

namespace {

using BS = std::vector<std::uint64_t>;

struct BSHash {
  std::size_t operator()(BS const &b) const
  {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t w : b) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline bool bs_test(BS const &b, unsigned i) { return (b[i >> 6] >> (i & 63u)) & 1u; }
inline void bs_set(BS &b, unsigned i) { b[i >> 6] |= std::uint64_t{1} << (i & 63u); }

inline bool bs_subset(BS const &a, BS const &b)
{
  for (std::size_t w = 0u; w < a.size(); ++w)
    if (a[w] & ~b[w])
      return false;
  return true;
}

std::vector<el> bs_indices(BS const &b, unsigned n)
{
  std::vector<el> idx;
  for (unsigned i = 0u; i < n; ++i)
    if (bs_test(b, i))
      idx.push_back(static_cast<el>(i));
  return idx;
}

} // namespace

std::vector<Subgroup> all_subgroups(PermGroup const &G, Config const &cfg)
{
  cfg.validate();

  unsigned n = G.order();
  if (n > cfg.subgroup_cap) {
    std::ostringstream msg;
    msg << "subgroup enumeration of a group of order " << n << " exceeds cap "
        << cfg.subgroup_cap;
    throw CapExceeded(msg.str());
  }

  unsigned W = (n + 63u) / 64u;

  std::unordered_map<BS, unsigned, BSHash> known;
  std::vector<BS> subs;
  std::vector<std::vector<el>> gens;

  std::vector<el> stack;

  auto close_from = [&](std::vector<el> const &gen_list) {
    BS bs(W, 0u);
    bs_set(bs, 0u);
    stack.clear();
    stack.push_back(0u);
    while (!stack.empty()) {
      el x = stack.back();
      stack.pop_back();
      for (el g : gen_list) {
        el y = G.mul(x, g);
        if (!bs_test(bs, y)) {
          bs_set(bs, y);
          stack.push_back(y);
        }
      }
    }
    return bs;
  };

  auto add = [&](BS bs, std::vector<el> gen_list) {
    if (known.count(bs))
      return;
    known.emplace(bs, static_cast<unsigned>(subs.size()));
    subs.push_back(std::move(bs));
    std::sort(gen_list.begin(), gen_list.end());
    gen_list.erase(std::unique(gen_list.begin(), gen_list.end()), gen_list.end());
    gens.push_back(std::move(gen_list));
  };

  // every cyclic subgroup
  for (el e = 0u; e < n; ++e)
    add(close_from({e}), {e});

  // closure under pairwise joins; the outer loop runs over the growing list, so every
  // unordered pair is processed exactly once
  for (std::size_t i = 1u; i < subs.size(); ++i) {
    for (std::size_t j = 0u; j < i; ++j) {
      if (bs_subset(subs[j], subs[i]) || bs_subset(subs[i], subs[j]))
        continue;

      std::vector<el> g(gens[i]);
      g.insert(g.end(), gens[j].begin(), gens[j].end());
      BS joined = close_from(g); // sequenced before g is moved from
      add(std::move(joined), std::move(g));
    }
  }

  std::vector<std::vector<el>> lists;
  lists.reserve(subs.size());
  for (auto const &bs : subs)
    lists.push_back(bs_indices(bs, n));

  std::sort(lists.begin(), lists.end(), [](auto const &a, auto const &b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  });

  std::vector<Subgroup> res;
  res.reserve(lists.size());
  for (auto &l : lists)
    res.emplace_back(G, std::move(l));
  return res;
}

// --- Sylow / conjugacy ---------------------------------------------------------------------

Subgroup sylow(PermGroup const &G, unsigned p)
{
  assert(is_prime(p));

  unsigned target = p_part(G.order(), p);

  Subgroup S = G.trivial_subgroup();
  while (S.order() < target) {
    Subgroup N = normalizer(G, S);

    bool grew = false;
    for (el g : N.indices()) {
      if (S.contains(g) || !is_p_power(G.element_order(g), p))
        continue;

      // a p-element normalizing the p-group S always generates a larger p-group with it
      std::vector<el> gen = S.generating_set();
      gen.push_back(g);
      Subgroup T = Subgroup::generated(G, gen);

      if (is_p_power(T.order(), p) && T.order() > S.order()) {
        S = T;
        grew = true;
        break;
      }
    }

    assert(grew && "Sylow growth step always succeeds below the Sylow order");
    if (!grew)
      break;
  }

  return S;
}

std::optional<Perm> conjugate_test(PermGroup const &G, Subgroup const &A, Subgroup const &B)
{
  assert(A.parent().same_group(G) && B.parent().same_group(G));

  if (A.order() != B.order())
    return std::nullopt;

  for (el g = 0u; g < G.order(); ++g) {
    bool ok = true;
    for (el a : A.indices()) {
      if (!B.contains(G.conj(g, a))) {
        ok = false;
        break;
      }
    }
    if (ok)
      return G.element(g);
  }
  return std::nullopt;
}

Subgroup canonical_conjugate(PermGroup const &G, Subgroup const &S)
{
  assert(S.parent().same_group(G));

  std::vector<el> best(S.indices());
  std::vector<el> cur(S.order());

  for (el g = 1u; g < G.order(); ++g) {
    for (unsigned i = 0u; i < S.order(); ++i)
      cur[i] = G.conj(g, S.indices()[i]);
    std::sort(cur.begin(), cur.end());
    if (cur < best)
      best = cur;
  }

  return Subgroup(G, std::move(best));
}

Subgroup intersection(Subgroup const &A, Subgroup const &B)
{
  assert(A.parent().same_group(B.parent()));

  std::vector<el> idx;
  std::set_intersection(A.indices().begin(), A.indices().end(), B.indices().begin(),
                        B.indices().end(), std::back_inserter(idx));
  return Subgroup(A.parent(), std::move(idx));
}

Subgroup normalizer(PermGroup const &G, Subgroup const &S)
{
  return normalizer_in(G.full_subgroup(), S);
}

Subgroup centralizer(PermGroup const &G, Subgroup const &S)
{
  return centralizer_in(G.full_subgroup(), S);
}

bool is_normal(PermGroup const &G, Subgroup const &S)
{
  assert(S.parent().same_group(G));

  for (el g : G.generator_indices())
    for (el x : S.indices())
      if (!S.contains(G.conj(g, x)))
        return false;
  return true;
}

Subgroup normalizer_in(Subgroup const &U, Subgroup const &S)
{
  assert(U.parent().same_group(S.parent()));

  auto const &G = U.parent();

  std::vector<el> idx;
  for (el g : U.indices()) {
    bool ok = true;
    for (el x : S.indices()) {
      if (!S.contains(G.conj(g, x))) {
        ok = false;
        break;
      }
    }
    if (ok)
      idx.push_back(g);
  }
  return Subgroup(G, std::move(idx));
}

Subgroup centralizer_in(Subgroup const &U, Subgroup const &S)
{
  assert(U.parent().same_group(S.parent()));

  auto const &G = U.parent();

  std::vector<el> idx;
  for (el g : U.indices()) {
    bool ok = true;
    for (el x : S.indices()) {
      if (G.mul(g, x) != G.mul(x, g)) {
        ok = false;
        break;
      }
    }
    if (ok)
      idx.push_back(g);
  }
  return Subgroup(G, std::move(idx));
}

bool is_normal_in(Subgroup const &U, Subgroup const &S)
{
  return normalizer_in(U, S).order() == U.order();
}

// --- automorphisms -------------------------------------------------------------------------

namespace {

// node budget for the pruned generator-image search; exceeding it raises CapExceeded rather
// than running away on pathological inputs (e.g. large elementary abelian groups)
constexpr std::uint64_t automorphism_search_budget = 50'000'000ull;

} // namespace

std::vector<GroupMorphism> automorphisms(PermGroup const &P, Config const &cfg)
{
  cfg.validate();

  unsigned n = P.order();
  if (n > cfg.automorphism_cap) {
    std::ostringstream msg;
    msg << "automorphism search on a group of order " << n << " exceeds cap "
        << cfg.automorphism_cap;
    throw CapExceeded(msg.str());
  }

  Subgroup full = P.full_subgroup();

  // deterministic greedy generating sequence
  std::vector<el> gens;
  {
    Subgroup cur = P.trivial_subgroup();
    for (el e = 0u; e < n && cur.order() < n; ++e) {
      if (cur.contains(e))
        continue;
      gens.push_back(e);
      cur = Subgroup::generated(P, gens);
    }
  }

  unsigned k = static_cast<unsigned>(gens.size());

  std::vector<GroupMorphism> res;

  if (k == 0u) { // trivial group
    res.emplace_back(full, full, std::vector<el>{0u});
    return res;
  }

  // element lists of the chain <g_0>, <g_0, g_1>, ...
  std::vector<std::vector<el>> level(k);
  for (unsigned j = 0u; j < k; ++j)
    level[j] =
      Subgroup::generated(P, std::vector<el>(gens.begin(), gens.begin() + j + 1)).indices();

  // candidate images, filtered by element order
  std::vector<std::vector<el>> cands(k);
  for (unsigned j = 0u; j < k; ++j) {
    unsigned o = P.element_order(gens[j]);
    for (el e = 0u; e < n; ++e)
      if (P.element_order(e) == o)
        cands[j].push_back(e);
  }

  std::vector<el> imgs(k);
  std::vector<el> f(n);
  std::vector<unsigned> visited(n, 0u);
  std::vector<unsigned> hit(n, 0u);
  unsigned stamp = 0u;
  std::vector<el> stack;
  std::uint64_t budget = automorphism_search_budget;

  // Builds the map determined by gens[0..j] -> imgs[0..j] on the level-j subgroup and checks
  // it is a well-defined injective homomorphism. Every (element, generator) edge is checked,
  // which is the full homomorphism condition on that subgroup.
  auto valid_partial = [&](unsigned j) -> bool {
    ++stamp;

    f[0] = 0u;
    visited[0] = stamp;
    hit[0] = stamp;

    stack.clear();
    stack.push_back(0u);

    std::size_t seen = 1u;
    while (!stack.empty()) {
      el x = stack.back();
      stack.pop_back();

      if (budget-- == 0u)
        throw CapExceeded("automorphism search frontier exhausted the node budget");

      for (unsigned i = 0u; i <= j; ++i) {
        el y = P.mul(x, gens[i]);
        el fy = P.mul(f[x], imgs[i]);
        if (visited[y] != stamp) {
          if (hit[fy] == stamp)
            return false; // not injective
          visited[y] = stamp;
          hit[fy] = stamp;
          f[y] = fy;
          stack.push_back(y);
          ++seen;
        } else if (f[y] != fy) {
          return false; // not well-defined
        }
      }
    }

    return seen == level[j].size();
  };

  auto dfs = [&](auto &&self, unsigned j) -> void {
    for (el u : cands[j]) {
      imgs[j] = u;
      if (!valid_partial(j))
        continue;
      if (j + 1u == k)
        res.emplace_back(full, full, f);
      else
        self(self, j + 1u);
    }
  };
  dfs(dfs, 0u);

  std::sort(res.begin(), res.end(), [](GroupMorphism const &a, GroupMorphism const &b) {
    return a.images() < b.images();
  });

  return res;
}

// --- quotients -----------------------------------------------------------------------------

QuotientGroup quotient_group(PermGroup const &G, Subgroup const &N)
{
  assert(N.parent().same_group(G));

  if (!is_normal(G, N))
    throw NotNormal("quotient by a non-normal subgroup");

  unsigned n = G.order();
  constexpr std::uint16_t unassigned = 0xFFFFu;

  std::vector<std::uint16_t> coset_of(n, unassigned);
  std::vector<el> coset_rep;

  for (el e = 0u; e < n; ++e) {
    if (coset_of[e] != unassigned)
      continue;
    auto cid = static_cast<std::uint16_t>(coset_rep.size());
    coset_rep.push_back(e);
    for (el x : N.indices())
      coset_of[G.mul(e, x)] = cid;
  }

  auto m = static_cast<unsigned>(coset_rep.size());

  // the permutation of cosets each element induces by left translation
  std::vector<Perm> action(n);
  for (el g = 0u; g < n; ++g) {
    std::vector<point> img(m);
    for (unsigned c = 0u; c < m; ++c)
      img[c] = coset_of[G.mul(g, coset_rep[c])];
    action[g] = Perm(std::move(img));
  }

  std::vector<Perm> elements(action);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  std::vector<Perm> qgens;
  for (el g : G.generator_indices())
    if (!action[g].is_identity())
      qgens.push_back(action[g]);
  if (qgens.empty())
    qgens.push_back(Perm(m));

  PermGroup Q = PermGroup::from_elements(m, std::move(elements), std::move(qgens));

  std::vector<el> proj(n);
  for (el g = 0u; g < n; ++g)
    proj[g] = Q.index_of(action[g]);

  std::vector<el> preimage(Q.order(), 0u);
  std::vector<bool> have(Q.order(), false);
  for (el g = 0u; g < n; ++g) {
    if (!have[proj[g]]) {
      have[proj[g]] = true;
      preimage[proj[g]] = g;
    }
  }

  QuotientGroup res{Q,
                    GroupMorphism(G.full_subgroup(), Q.full_subgroup(), std::move(proj)),
                    std::move(preimage),
                    std::move(coset_rep),
                    std::move(coset_of)};
  return res;
}

QuotientGroup quotient_group(Subgroup const &P, Subgroup const &R)
{
  assert(R.parent().same_group(P.parent()));
  assert(R.is_subgroup_of(P));

  PermGroup Pg = P.as_group();

  std::vector<el> ridx;
  ridx.reserve(R.order());
  for (el g : R.indices())
    ridx.push_back(static_cast<el>(P.local_index(g)));

  return quotient_group(Pg, Subgroup(Pg, std::move(ridx)));
}

GroupMorphism quotient_embedding(QuotientGroup const &inner, Subgroup const &H,
                                 QuotientGroup const &outer)
{
  assert(inner.projection.source().parent().same_group(H.as_group()));
  assert(outer.projection.source().parent().same_group(H.parent()));

  std::vector<el> images;
  images.reserve(inner.group.order());
  for (el e = 0u; e < inner.group.order(); ++e) {
    el local = inner.preimage[e];             // element of H's standalone group
    el global = H.indices()[local];           // the same element inside H's parent
    images.push_back(outer.projection.apply(global));
  }

  GroupMorphism m(inner.group.full_subgroup(), outer.group.full_subgroup(),
                  std::move(images));
  assert(m.is_homomorphism() && m.is_injective());
  return m;
}

// --- direct products -----------------------------------------------------------------------

el ProductGroup::pair_index(el a, el b) const
{
  return static_cast<el>(static_cast<std::uint32_t>(a) * right.order() + b);
}

el ProductGroup::left_of(el e) const { return static_cast<el>(e / right.order()); }

el ProductGroup::right_of(el e) const { return static_cast<el>(e % right.order()); }

ProductGroup direct_product(PermGroup const &G1, PermGroup const &G2)
{
  unsigned d1 = G1.degree();
  unsigned d2 = G2.degree();
  unsigned o1 = G1.order();
  unsigned o2 = G2.order();

  if (static_cast<std::uint64_t>(o1) * o2 > index_space_limit)
    throw CapExceeded("product order exceeds the element index space");

  auto combine = [&](Perm const &a, Perm const &b) {
    std::vector<point> img(d1 + d2);
    for (unsigned x = 0u; x < d1; ++x)
      img[x] = a[static_cast<point>(x)];
    for (unsigned x = 0u; x < d2; ++x)
      img[d1 + x] = static_cast<point>(b[static_cast<point>(x)] + d1);
    return Perm(std::move(img));
  };

  // nested ascending loops agree with the lexicographic element order of the product, so the
  // index of (a, b) is a * |G2| + b
  std::vector<Perm> elements;
  elements.reserve(static_cast<std::size_t>(o1) * o2);
  Perm const id1(d1);
  Perm const id2(d2);
  for (auto const &a : G1.elements())
    for (auto const &b : G2.elements())
      elements.push_back(combine(a, b));

  assert(std::is_sorted(elements.begin(), elements.end()));

  std::vector<Perm> gens;
  for (auto const &a : G1.generators())
    gens.push_back(combine(a, id2));
  for (auto const &b : G2.generators())
    gens.push_back(combine(id1, b));

  PermGroup prod = PermGroup::from_elements(d1 + d2, std::move(elements), std::move(gens));

  assert(prod.order() == o1 * o2);

  std::vector<el> pl(prod.order()), pr(prod.order());
  for (std::uint32_t e = 0u; e < prod.order(); ++e) {
    pl[e] = static_cast<el>(e / o2);
    pr[e] = static_cast<el>(e % o2);
  }

  std::vector<el> il(o1), ir(o2);
  for (el a = 0u; a < o1; ++a)
    il[a] = static_cast<el>(static_cast<std::uint32_t>(a) * o2);
  for (el b = 0u; b < o2; ++b)
    ir[b] = b;

  ProductGroup res{prod,
                   G1,
                   G2,
                   GroupMorphism(prod.full_subgroup(), G1.full_subgroup(), std::move(pl)),
                   GroupMorphism(prod.full_subgroup(), G2.full_subgroup(), std::move(pr)),
                   GroupMorphism(G1.full_subgroup(), prod.full_subgroup(), std::move(il)),
                   GroupMorphism(G2.full_subgroup(), prod.full_subgroup(), std::move(ir))};
  return res;
}

// --- number helpers ------------------------------------------------------------------------

unsigned p_part(unsigned n, unsigned p)
{
  assert(n >= 1u && p >= 2u);
  unsigned res = 1u;
  while (n % p == 0u) {
    n /= p;
    res *= p;
  }
  return res;
}

bool is_p_power(unsigned n, unsigned p)
{
  assert(n >= 1u && p >= 2u);
  while (n % p == 0u)
    n /= p;
  return n == 1u;
}

bool is_prime(unsigned n)
{
  if (n < 2u)
    return false;
  for (unsigned d = 2u; d * d <= n; ++d)
    if (n % d == 0u)
      return false;
  return true;
}

std::vector<unsigned> prime_divisors(unsigned n)
{
  std::vector<unsigned> res;
  for (unsigned d = 2u; d * d <= n; ++d) {
    if (n % d == 0u) {
      res.push_back(d);
      while (n % d == 0u)
        n /= d;
    }
  }
  if (n > 1u)
    res.push_back(n);
  return res;
}

bool is_p_group(Subgroup const &S, unsigned p)
{
  return is_p_power(S.order(), p);
}

} // namespace fusionforge
