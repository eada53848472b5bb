#include "fusionforge/fusion.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

namespace fusionforge {

namespace {

// position of `x` in a sorted index list
unsigned pos_in(std::vector<el> const &sorted, el x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  assert(it != sorted.end() && *it == x && "element not in subgroup");
  return static_cast<unsigned>(it - sorted.begin());
}

bool member(std::vector<el> const &sorted, el x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

std::vector<el> sorted_values(std::vector<el> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// conjugation table x -> g x g^-1 on the index list `src` (aligned with it)
std::vector<el> conj_table(PermGroup const &G, el g, std::vector<el> const &src) {
  std::vector<el> t(src.size());
  for (unsigned i = 0; i < src.size(); ++i)
    t[i] = G.conj(g, src[i]);
  return t;
}

} // namespace

// --- SubgroupAtlas -------------------------------------------------------------------------

SubgroupAtlas::SubgroupAtlas(PermGroup g, Config const &cfg)
    : group(std::move(g)), subs(all_subgroups(group, cfg)) {
  normalizers.reserve(subs.size());
  centralizers.reserve(subs.size());
  for (auto const &s : subs) {
    normalizers.push_back(normalizer(group, s));
    centralizers.push_back(centralizer(group, s));
  }
  for (unsigned i = 0; i < subs.size(); ++i)
    ids.emplace(subs[i].indices(), i);
  contained.resize(subs.size());
  for (unsigned i = 0; i < subs.size(); ++i)
    for (unsigned j = 0; j < subs.size(); ++j)
      if (subs[j].order() <= subs[i].order() && subs[j].is_subgroup_of(subs[i]))
        contained[i].push_back(j);
}

unsigned SubgroupAtlas::id_of(std::vector<el> const &indices) const {
  auto it = ids.find(indices);
  if (it == ids.end())
    throw InvalidData("index list is not a subgroup of the atlas group");
  return it->second;
}

// --- FusionSystem construction -------------------------------------------------------------

FusionSystem::FusionSystem(std::shared_ptr<SubgroupAtlas const> atlas, unsigned p)
    : _atlas(std::move(atlas)), _p(p) {
  if (!is_prime(_p))
    throw InvalidData("fusion prime must be prime");
  if (!is_p_group(_atlas->group.full_subgroup(), _p))
    throw InvalidData("fusion group must be a p-group for the given prime");
  _tables.resize(_atlas->subs.size());
  _targets.resize(_atlas->subs.size());
  _aut_p.resize(_atlas->subs.size());
}

void FusionSystem::fill_targets() {
  for (unsigned s = 0; s < _tables.size(); ++s) {
    _targets[s].clear();
    _targets[s].reserve(_tables[s].size());
    for (auto const &t : _tables[s])
      _targets[s].push_back(_atlas->id_of(sorted_values(t)));
  }
}

FusionSystem FusionSystem::ambient(PermGroup const &G, Subgroup const &P, unsigned p,
                                   Config const &cfg) {
  assert(P.parent().same_group(G) && "P must be a subgroup of G");
  if (!is_p_group(P, p))
    throw InvalidData("ambient fusion requires a p-subgroup");
  PermGroup Pg = P.as_group();
  auto atlas = std::make_shared<SubgroupAtlas const>(Pg, cfg);
  FusionSystem F(atlas, p);

  std::vector<el> const &pidx = P.indices();
  for (unsigned s = 0; s < atlas->subs.size(); ++s) {
    std::vector<el> const &loc = atlas->subs[s].indices();
    std::vector<el> glob(loc.size());
    for (unsigned i = 0; i < loc.size(); ++i)
      glob[i] = pidx[loc[i]];
    std::set<std::vector<el>> seen;
    std::vector<el> t(loc.size());
    for (el g = 0; g < G.order(); ++g) {
      bool ok = true;
      for (unsigned i = 0; i < glob.size() && ok; ++i) {
        el y = G.conj(g, glob[i]);
        if (!member(pidx, y)) {
          ok = false;
          break;
        }
        t[i] = static_cast<el>(pos_in(pidx, y));
      }
      if (ok)
        seen.insert(t);
    }
    F._tables[s].assign(seen.begin(), seen.end());
  }
  F.fill_targets();
  return F;
}

FusionSystem FusionSystem::inner(PermGroup const &P, unsigned p, Config const &cfg) {
  return ambient(P, P.full_subgroup(), p, cfg);
}

FusionSystem FusionSystem::generated(PermGroup const &P, unsigned p,
                                     std::vector<GroupMorphism> const &seeds,
                                     Config const &cfg) {
  auto atlas = std::make_shared<SubgroupAtlas const>(P, cfg);
  FusionSystem F(atlas, p);
  unsigned nsubs = static_cast<unsigned>(atlas->subs.size());

  std::vector<std::set<std::vector<el>>> store(nsubs);
  std::deque<std::pair<unsigned, std::vector<el>>> work;
  std::size_t total = 0;

  auto insert = [&](unsigned src, std::vector<el> t) {
    if (store[src].insert(t).second) {
      if (++total > cfg.closure_cap)
        throw CapExceeded("fusion closure exceeds closure_cap");
      work.emplace_back(src, std::move(t));
    }
  };

  // conjugation by every element of P, on the full group
  unsigned full_id = atlas->id_of(P.full_subgroup().indices());
  std::vector<el> all(P.order());
  for (el x = 0; x < P.order(); ++x)
    all[x] = x;
  for (el g = 0; g < P.order(); ++g)
    insert(full_id, conj_table(P, g, all));

  for (auto const &m : seeds) {
    if (!m.source().parent().same_group(P) || !m.target().parent().same_group(P))
      throw InvalidData("seed morphism is not defined over the fusion group");
    if (!m.is_homomorphism() || !m.is_injective())
      throw InvalidData("seed morphism must be an injective homomorphism");
    insert(atlas->id_of(m.source().indices()), m.images());
  }

  while (!work.empty()) {
    auto [src, t] = std::move(work.front());
    work.pop_front();
    std::vector<el> const &sidx = atlas->subs[src].indices();
    std::vector<el> timg = sorted_values(t);
    unsigned tgt = atlas->id_of(timg);

    // inverse
    std::vector<el> ti(t.size());
    for (unsigned i = 0; i < t.size(); ++i)
      ti[pos_in(timg, t[i])] = sidx[i];
    insert(tgt, std::move(ti));

    // restrictions to proper subgroups of the source
    for (unsigned c : atlas->contained[src]) {
      if (c == src)
        continue;
      std::vector<el> const &cidx = atlas->subs[c].indices();
      std::vector<el> tc(cidx.size());
      for (unsigned i = 0; i < cidx.size(); ++i)
        tc[i] = t[pos_in(sidx, cidx[i])];
      insert(c, std::move(tc));
    }

    // compose on the left with everything out of the target
    for (auto const &u : store[tgt]) {
      std::vector<el> comp(t.size());
      for (unsigned i = 0; i < t.size(); ++i)
        comp[i] = u[pos_in(timg, t[i])];
      insert(src, std::move(comp));
    }
    // compose on the right with everything landing in the source
    for (unsigned s2 = 0; s2 < nsubs; ++s2)
      for (auto const &u : store[s2]) {
        if (sorted_values(u) != sidx)
          continue;
        std::vector<el> comp(u.size());
        for (unsigned i = 0; i < u.size(); ++i)
          comp[i] = t[pos_in(sidx, u[i])];
        insert(s2, std::move(comp));
      }
  }

  for (unsigned s = 0; s < nsubs; ++s)
    F._tables[s].assign(store[s].begin(), store[s].end());
  F.fill_targets();
  return F;
}

FusionSystem FusionSystem::from_tables(std::shared_ptr<SubgroupAtlas const> atlas,
                                       unsigned p,
                                       std::vector<std::vector<std::vector<el>>> tables) {
  FusionSystem F(std::move(atlas), p);
  if (tables.size() != F._tables.size())
    throw InvalidData("table list does not match the atlas");
  for (unsigned s = 0; s < tables.size(); ++s) {
    std::sort(tables[s].begin(), tables[s].end());
    tables[s].erase(std::unique(tables[s].begin(), tables[s].end()), tables[s].end());
    F._tables[s] = std::move(tables[s]);
  }
  F.fill_targets();
  return F;
}

// --- queries -------------------------------------------------------------------------------

unsigned FusionSystem::table_count() const {
  std::size_t n = 0;
  for (auto const &v : _tables)
    n += v.size();
  return static_cast<unsigned>(n);
}

std::vector<GroupMorphism> FusionSystem::isos_from(Subgroup const &Q) const {
  unsigned s = _atlas->id_of(Q.indices());
  std::vector<GroupMorphism> out;
  out.reserve(_tables[s].size());
  for (unsigned k = 0; k < _tables[s].size(); ++k)
    out.emplace_back(_atlas->subs[s], _atlas->subs[_targets[s][k]], _tables[s][k]);
  return out;
}

std::vector<GroupMorphism> FusionSystem::hom_set(Subgroup const &Q,
                                                 Subgroup const &T) const {
  unsigned s = _atlas->id_of(Q.indices());
  unsigned tid = _atlas->id_of(T.indices());
  auto const &inside = _atlas->contained[tid];
  std::vector<GroupMorphism> out;
  for (unsigned k = 0; k < _tables[s].size(); ++k)
    if (std::binary_search(inside.begin(), inside.end(), _targets[s][k]))
      out.emplace_back(_atlas->subs[s], _atlas->subs[tid], _tables[s][k]);
  return out;
}

std::vector<GroupMorphism> FusionSystem::automorphisms_of(Subgroup const &Q) const {
  unsigned s = _atlas->id_of(Q.indices());
  std::vector<GroupMorphism> out;
  for (unsigned k = 0; k < _tables[s].size(); ++k)
    if (_targets[s][k] == s)
      out.emplace_back(_atlas->subs[s], _atlas->subs[s], _tables[s][k]);
  return out;
}

std::vector<Subgroup> FusionSystem::isomorphism_class(Subgroup const &Q) const {
  unsigned s = _atlas->id_of(Q.indices());
  std::vector<unsigned> ids(_targets[s]);
  ids.push_back(s);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Subgroup> out;
  out.reserve(ids.size());
  for (unsigned i : ids)
    out.push_back(_atlas->subs[i]);
  return out;
}

std::vector<std::vector<el>> const &FusionSystem::aut_p_tables(unsigned id) const {
  if (!_aut_p[id]) {
    std::set<std::vector<el>> seen;
    std::vector<el> const &sidx = _atlas->subs[id].indices();
    for (el n : _atlas->normalizers[id].indices())
      seen.insert(conj_table(_atlas->group, n, sidx));
    _aut_p[id].emplace(seen.begin(), seen.end());
  }
  return *_aut_p[id];
}

namespace {

unsigned aut_count(FusionSystem const &F, unsigned id) {
  unsigned n = 0;
  for (unsigned t : F.targets_from(id))
    if (t == id)
      ++n;
  return n;
}

std::vector<unsigned> class_ids(FusionSystem const &F, unsigned id) {
  std::vector<unsigned> ids(F.targets_from(id));
  ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

} // namespace

bool FusionSystem::fully_normalized(Subgroup const &Q) const {
  unsigned s = _atlas->id_of(Q.indices());
  unsigned mine = _atlas->normalizers[s].order();
  for (unsigned i : class_ids(*this, s))
    if (_atlas->normalizers[i].order() > mine)
      return false;
  return true;
}

bool FusionSystem::fully_centralized(Subgroup const &Q) const {
  unsigned s = _atlas->id_of(Q.indices());
  unsigned mine = _atlas->centralizers[s].order();
  for (unsigned i : class_ids(*this, s))
    if (_atlas->centralizers[i].order() > mine)
      return false;
  return true;
}

bool FusionSystem::fully_automized(Subgroup const &Q) const {
  unsigned s = _atlas->id_of(Q.indices());
  unsigned full = aut_count(*this, s);
  unsigned inner = static_cast<unsigned>(aut_p_tables(s).size());
  assert(full % inner == 0 && "P-conjugations must sit inside the self-morphisms");
  return (full / inner) % _p != 0;
}

namespace {

// the transported table psi . c_n . psi^-1 : Q -> Q, or empty if n does not
// normalize the source
std::vector<el> transported_conjugation(PermGroup const &P, std::vector<el> const &S,
                                        std::vector<el> const &Q,
                                        std::vector<el> const &psi, el n) {
  std::vector<unsigned> inv_psi(Q.size());
  for (unsigned i = 0; i < S.size(); ++i)
    inv_psi[pos_in(Q, psi[i])] = i;
  std::vector<el> out(Q.size());
  for (unsigned j = 0; j < Q.size(); ++j) {
    el y = P.conj(n, S[inv_psi[j]]);
    if (!member(S, y))
      return {};
    out[j] = psi[pos_in(S, y)];
  }
  return out;
}

} // namespace

bool FusionSystem::receptive(Subgroup const &Q) const {
  unsigned qid = _atlas->id_of(Q.indices());
  std::vector<el> const &qidx = _atlas->subs[qid].indices();
  auto const &autp = aut_p_tables(qid);
  for (unsigned s = 0; s < _tables.size(); ++s) {
    std::vector<el> const &sidx = _atlas->subs[s].indices();
    for (unsigned k = 0; k < _tables[s].size(); ++k) {
      if (_targets[s][k] != qid)
        continue;
      std::vector<el> const &psi = _tables[s][k];
      // the part of N_P(source) that psi transports into P-conjugation of Q
      std::vector<el> extension_domain;
      for (el n : _atlas->normalizers[s].indices()) {
        std::vector<el> moved =
            transported_conjugation(_atlas->group, sidx, qidx, psi, n);
        assert(!moved.empty() && "normalizer element must stabilize the source");
        if (std::binary_search(autp.begin(), autp.end(), moved))
          extension_domain.push_back(n);
      }
      std::sort(extension_domain.begin(), extension_domain.end());
      unsigned nid = _atlas->id_of(extension_domain);
      std::vector<el> const &nidx = _atlas->subs[nid].indices();
      bool extended = false;
      for (auto const &tau : _tables[nid]) {
        bool match = true;
        for (unsigned i = 0; i < sidx.size() && match; ++i)
          match = tau[pos_in(nidx, sidx[i])] == psi[i];
        if (match) {
          extended = true;
          break;
        }
      }
      if (!extended)
        return false;
    }
  }
  return true;
}

bool FusionSystem::weakly_closed(Subgroup const &R) const {
  unsigned s = _atlas->id_of(R.indices());
  for (unsigned t : _targets[s])
    if (t != s)
      return false;
  return true;
}

bool FusionSystem::strongly_closed(Subgroup const &R) const {
  std::vector<el> const &ridx = R.indices();
  for (unsigned s = 0; s < _tables.size(); ++s) {
    std::vector<el> const &sidx = _atlas->subs[s].indices();
    for (auto const &t : _tables[s])
      for (unsigned i = 0; i < sidx.size(); ++i)
        if (member(ridx, sidx[i]) && !member(ridx, t[i]))
          return false;
  }
  return true;
}

bool FusionSystem::normal_in_system(Subgroup const &R) const {
  if (!is_normal(_atlas->group, R))
    return false;
  std::vector<el> const &ridx = R.indices();
  for (unsigned s = 0; s < _tables.size(); ++s) {
    std::vector<el> const &sidx = _atlas->subs[s].indices();
    // S R as an index list (a subgroup, since R is normal)
    std::vector<el> sr;
    for (el x : sidx)
      for (el r : ridx)
        sr.push_back(_atlas->group.mul(x, r));
    sr = sorted_values(sr);
    unsigned srid = _atlas->id_of(sr);
    for (auto const &t : _tables[s]) {
      bool found = false;
      for (auto const &tau : _tables[srid]) {
        bool match = true;
        for (unsigned i = 0; i < sidx.size() && match; ++i)
          match = tau[pos_in(sr, sidx[i])] == t[i];
        if (match) {
          // tau must map R onto R
          for (unsigned i = 0; i < sr.size() && match; ++i)
            if (member(ridx, sr[i]) != member(ridx, tau[i]))
              match = false;
        }
        if (match) {
          found = true;
          break;
        }
      }
      if (!found)
        return false;
    }
  }
  return true;
}

FusionSystem::SaturationReport FusionSystem::saturation_check(Config const &cfg) const {
  if (_atlas->group.order() > cfg.saturation_cap)
    throw CapExceeded("group too large for saturation check");
  SaturationReport rep;
  std::vector<bool> seen(_tables.size(), false);
  for (unsigned s = 0; s < _tables.size(); ++s) {
    if (seen[s])
      continue;
    for (unsigned m : class_ids(*this, s)) {
      seen[m] = true;
      Subgroup const &Q = _atlas->subs[m];
      if (!fully_normalized(Q))
        continue;
      if (!fully_automized(Q)) {
        rep.saturated = false;
        rep.witness_subgroup = Q;
        rep.axiom = "sylow";
        return rep;
      }
      if (!receptive(Q)) {
        rep.saturated = false;
        rep.witness_subgroup = Q;
        rep.axiom = "extension";
        // recover a morphism with no extension for the certificate
        unsigned qid = m;
        auto const &autp = aut_p_tables(qid);
        std::vector<el> const &qidx = _atlas->subs[qid].indices();
        for (unsigned s2 = 0; s2 < _tables.size() && !rep.witness_morphism; ++s2) {
          std::vector<el> const &sidx = _atlas->subs[s2].indices();
          for (unsigned k = 0; k < _tables[s2].size(); ++k) {
            if (_targets[s2][k] != qid)
              continue;
            auto const &psi = _tables[s2][k];
            std::vector<el> dom;
            for (el n : _atlas->normalizers[s2].indices())
              if (std::binary_search(
                      autp.begin(), autp.end(),
                      transported_conjugation(_atlas->group, sidx, qidx, psi, n)))
                dom.push_back(n);
            std::sort(dom.begin(), dom.end());
            unsigned nid = _atlas->id_of(dom);
            std::vector<el> const &nidx = _atlas->subs[nid].indices();
            bool extended = false;
            for (auto const &tau : _tables[nid]) {
              bool match = true;
              for (unsigned i = 0; i < sidx.size() && match; ++i)
                match = tau[pos_in(nidx, sidx[i])] == psi[i];
              if (match) {
                extended = true;
                break;
              }
            }
            if (!extended) {
              rep.witness_morphism =
                  GroupMorphism(_atlas->subs[s2], _atlas->subs[qid], psi);
              break;
            }
          }
        }
        return rep;
      }
    }
  }
  return rep;
}

FusionSystem::ClosureReport FusionSystem::closure_report() const {
  ClosureReport rep;
  PermGroup const &P = _atlas->group;
  unsigned nsubs = static_cast<unsigned>(_tables.size());

  for (unsigned s = 0; s < nsubs && rep.contains_inner; ++s) {
    std::vector<el> const &sidx = _atlas->subs[s].indices();
    for (el g = 0; g < P.order() && rep.contains_inner; ++g)
      rep.contains_inner = std::binary_search(_tables[s].begin(), _tables[s].end(),
                                              conj_table(P, g, sidx));
  }

  for (unsigned s = 0; s < nsubs && rep.restriction_closed; ++s) {
    std::vector<el> const &sidx = _atlas->subs[s].indices();
    for (auto const &t : _tables[s])
      for (unsigned c : _atlas->contained[s]) {
        if (c == s)
          continue;
        std::vector<el> const &cidx = _atlas->subs[c].indices();
        std::vector<el> tc(cidx.size());
        for (unsigned i = 0; i < cidx.size(); ++i)
          tc[i] = t[pos_in(sidx, cidx[i])];
        if (!std::binary_search(_tables[c].begin(), _tables[c].end(), tc)) {
          rep.restriction_closed = false;
          break;
        }
      }
  }

  for (unsigned s = 0; s < nsubs && rep.composition_closed; ++s)
    for (unsigned k = 0; k < _tables[s].size() && rep.composition_closed; ++k) {
      auto const &t = _tables[s][k];
      std::vector<el> timg = sorted_values(t);
      for (auto const &u : _tables[_targets[s][k]]) {
        std::vector<el> comp(t.size());
        for (unsigned i = 0; i < t.size(); ++i)
          comp[i] = u[pos_in(timg, t[i])];
        if (!std::binary_search(_tables[s].begin(), _tables[s].end(), comp)) {
          rep.composition_closed = false;
          break;
        }
      }
    }

  for (unsigned s = 0; s < nsubs && rep.inverse_closed; ++s)
    for (unsigned k = 0; k < _tables[s].size() && rep.inverse_closed; ++k) {
      auto const &t = _tables[s][k];
      std::vector<el> const &sidx = _atlas->subs[s].indices();
      std::vector<el> timg = sorted_values(t);
      std::vector<el> ti(t.size());
      for (unsigned i = 0; i < t.size(); ++i)
        ti[pos_in(timg, t[i])] = sidx[i];
      unsigned tgt = _targets[s][k];
      rep.inverse_closed =
          std::binary_search(_tables[tgt].begin(), _tables[tgt].end(), ti);
    }

  return rep;
}

bool FusionSystem::same_system(FusionSystem const &other) const {
  return _p == other._p && _atlas->group.same_group(other._atlas->group) &&
         _tables == other._tables;
}

bool FusionSystem::subsystem_of(FusionSystem const &other) const {
  if (_p != other._p || !_atlas->group.same_group(other._atlas->group))
    return false;
  if (_tables.size() != other._tables.size())
    return false;
  for (unsigned s = 0; s < _tables.size(); ++s)
    if (!std::includes(other._tables[s].begin(), other._tables[s].end(),
                       _tables[s].begin(), _tables[s].end()))
      return false;
  return true;
}

} // namespace fusionforge
