#include "glab/ideal_structure.hpp"

#include <algorithm>
#include <cmath>

#include "glab/error.hpp"

namespace glab {

namespace {

bool subset(UnitSubset const& a, UnitSubset const& b) { return a.is_subset_of(b); }

void fail(TheoremVerdict& v, std::string witness) {
  v.pass = false;
  if (v.witnesses.size() < 16) v.witnesses.push_back(std::move(witness));
}

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](TheoremVerdict const& v) { return v.pass; });
}

std::string format_units(FiniteGroupoid const& g, UnitSubset const& u) {
  std::string s = "{";
  bool first = true;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (!u.test(k)) continue;
    if (!first) s += ",";
    s += g.name(g.unit(k));
    first = false;
  }
  return s + "}";
}

std::string format_blocks(BlockSet const& b) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!b.test(i)) continue;
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

CMatrix orbit_representation(AlgebraElement const& f) {
  auto const& G = *f.groupoid();
  CMatrix m(G.unit_count(), G.unit_count());
  for (Index gamma = 0; gamma < G.size(); ++gamma) m(G.range_pos(gamma), G.source_pos(gamma)) += f[gamma];
  return m;
}

IdealStructure::IdealStructure(std::shared_ptr<CStarAlgebra const> algebra)
    : algebra_(std::move(algebra)), lattice_(algebra_->groupoid()) {}

IdealStructure::IdealStructure(GroupoidPtr g, AlgebraOptions const& opts)
    : IdealStructure(std::make_shared<CStarAlgebra const>(std::move(g), opts)) {}

SandwichPair IdealStructure::sandwich(Ideal const& ideal) const {
  return {algebra_->diagonal_support(ideal), algebra_->source_of_support(ideal)};
}

UnitSubset IdealStructure::noneffective_units() const { return ~effective_units(groupoid()); }

Ideal IdealStructure::obstruction_ideal() const { return algebra_->dynamical_ideal_of(noneffective_units()); }

Ideal IdealStructure::collapse_kernel() const {
  auto const& A = *algebra_;
  Ideal k = A.zero_ideal();
  double const eps = A.tolerance().zero_eps;
  for (std::size_t i = 0; i < A.block_count(); ++i)
    if (orbit_representation(A.decomposition().blocks[i].idempotent).max_abs() <= eps) k.blocks.set(i);
  return k;
}

IdealStructure::Subquotient const& IdealStructure::subquotient(UnitSubset const& w) const {
  std::size_t const key = lattice_.index_of(w);
  std::lock_guard lock(mutex_);
  auto it = subquotients_.find(key);
  if (it != subquotients_.end()) return *it->second;

  auto sq = std::make_unique<Subquotient>();
  sq->reduction = reduce(groupoid(), w);
  auto sub = std::make_shared<FiniteGroupoid const>(sq->reduction.groupoid);
  auto sub_opts = algebra_->options();
  sub_opts.wedderburn.matrix_units = false;
  sq->algebra = std::make_shared<CStarAlgebra const>(sub, sub_opts);
  auto const& A = *algebra_;
  auto const& B = *sq->algebra;
  auto const& part = lattice_.partition();
  double const eps = A.tolerance().zero_eps;
  sq->block_map.assign(A.block_count(), npos);
  for (std::size_t i = 0; i < A.block_count(); ++i) {
    if (!w.test(part.orbits[A.block_orbit(i)].front())) continue;
    auto const r = restrict_element(A.decomposition().blocks[i].idempotent, *sq);
    for (std::size_t j = 0; j < B.block_count(); ++j) {
      auto const d = r - B.decomposition().blocks[j].idempotent;
      if (d.coefficient_norm() <= 1e3 * eps * std::max(1.0, r.coefficient_norm())) {
        sq->block_map[i] = j;
        break;
      }
    }
    if (sq->block_map[i] == npos)
      throw DecompositionError("subquotient: block " + std::to_string(i) + " has no counterpart over " +
                               format_units(groupoid(), w));
  }
  if (B.block_count() > 0) {
    auto const full = ElementSubset(sub->size()).set();
    for (auto const& j : B.all_ideals()) {
      if (j.is_zero() || !B.diagonal_part(j).empty()) continue;
      if (B.support(j) != full) continue;
      sq->admissible.push_back(j.blocks);
    }
  }
  auto const& ref = *sq;
  subquotients_.emplace(key, std::move(sq));
  return ref;
}

AlgebraElement IdealStructure::restrict_element(AlgebraElement const& a, Subquotient const& sq) const {
  auto sub = sq.algebra->groupoid_ptr();
  AlgebraElement out(sub);
  for (Index c = 0; c < sub->size(); ++c) out[c] = a[sq.reduction.to_parent[c]];
  return out;
}

void IdealStructure::check_triple(SandwichTriple const& t) const {
  auto const& G = groupoid();
  if (t.lower.size() != G.unit_count() || t.upper.size() != G.unit_count())
    throw PreconditionError("triple: unit sets have the wrong size");
  if (!is_invariant(G, t.lower)) throw PreconditionError("triple: U is not invariant");
  if (!is_invariant(G, t.upper)) throw PreconditionError("triple: V is not invariant");
  if (!subset(t.lower, t.upper)) throw PreconditionError("triple: U is not contained in V");
  auto const w = t.upper - t.lower;
  auto const& sq = subquotient(w);
  auto const& B = *sq.algebra;
  if (t.j.size() != B.block_count())
    throw PreconditionError("triple: J has " + std::to_string(t.j.size()) + " blocks, subquotient has " +
                            std::to_string(B.block_count()));
  if (w.none()) return;
  Ideal const j{t.j};
  if (j.is_zero()) throw PreconditionError("triple: J is zero for V != U");
  if (!B.diagonal_part(j).empty()) throw PreconditionError("triple: J meets the diagonal");
  if (B.support(j) != ElementSubset(B.groupoid().size()).set())
    throw PreconditionError("triple: J does not have full support");
}

Ideal IdealStructure::theta(SandwichTriple const& t) const {
  check_triple(t);
  auto out = algebra_->dynamical_ideal_of(t.lower);
  auto const& sq = subquotient(t.upper - t.lower);
  for (std::size_t i = 0; i < sq.block_map.size(); ++i)
    if (sq.block_map[i] != npos && t.j.test(sq.block_map[i])) out.blocks.set(i);
  return out;
}

SandwichTriple IdealStructure::theta_inverse(Ideal const& ideal) const {
  auto const [u, v] = sandwich(ideal);
  auto const& sq = subquotient(v - u);
  SandwichTriple t{u, v, BlockSet(sq.algebra->block_count())};
  for (std::size_t i = 0; i < sq.block_map.size(); ++i)
    if (sq.block_map[i] != npos && ideal.blocks.test(i)) t.j.set(sq.block_map[i]);
  return t;
}

std::vector<SandwichTriple> IdealStructure::enumerate_triples() const {
  auto const& A = *algebra_;
  if (A.block_count() > A.options().max_blocks)
    throw CapExceeded("enumerate_triples: " + std::to_string(A.block_count()) + " blocks exceed the cap of " +
                      std::to_string(A.options().max_blocks));
  std::vector<SandwichTriple> out;
  std::size_t const n = lattice_.size();
  for (std::size_t iv = 0; iv < n; ++iv) {
    for (std::size_t iu = 0; iu < n; ++iu) {
      if ((iu & iv) != iu) continue;
      auto const& u = lattice_[iu];
      auto const& v = lattice_[iv];
      auto const& sq = subquotient(lattice_[iv & ~iu]);
      if (iu == iv) {
        out.push_back({u, v, BlockSet(0)});
        continue;
      }
      for (auto const& j : sq.admissible) out.push_back({u, v, j});
    }
  }
  return out;
}

AlgebraElement IdealStructure::exel_witness(std::size_t unit_pos, std::vector<Index> const& bisection,
                                            AlgebraElement const& f) const {
  auto const& G = groupoid();
  if (unit_pos >= G.unit_count()) throw PreconditionError("exel_witness: unit out of range");
  if (!is_bisection(G, bisection)) throw PreconditionError("exel_witness: B is not a bisection");
  ElementSubset in_b(G.size());
  for (Index e : bisection) {
    if (G.source_pos(e) == unit_pos && G.range_pos(e) == unit_pos)
      throw PreconditionError("exel_witness: B meets the isotropy at " + G.name(G.unit(unit_pos)));
    in_b.set(e);
  }
  double const eps = algebra_->tolerance().zero_eps;
  for (Index e = 0; e < G.size(); ++e)
    if (!in_b.test(e) && std::abs(f[e]) > eps) throw PreconditionError("exel_witness: f is not supported on B");
  auto const h = AlgebraElement::delta(algebra_->groupoid_ptr(), G.unit(unit_pos));
  auto const hfh = convolve(convolve(h, f), h);
  if (algebra_->norm(hfh) > eps) throw std::logic_error("exel_witness: |hfh| exceeds zero_eps");
  return h;
}

std::vector<IdealStructure::IdealProfile> const& IdealStructure::profiles() const {
  {
    std::lock_guard lock(mutex_);
    if (have_profiles_) return profiles_;
  }
  std::vector<IdealProfile> out;
  for (auto const& ideal : algebra_->all_ideals()) {
    IdealProfile p;
    auto const diag = algebra_->diagonal_part(ideal);
    p.diagonal_dimension = diag.size();
    p.diagonal_support = algebra_->diagonal_support(ideal);
    p.support = algebra_->support(ideal);
    p.source_of_support = algebra_->source_of_support(ideal);
    out.push_back(std::move(p));
  }
  std::lock_guard lock(mutex_);
  if (!have_profiles_) {
    profiles_ = std::move(out);
    have_profiles_ = true;
  }
  return profiles_;
}

std::vector<Ideal> const& IdealStructure::dynamical_ideals() const {
  {
    std::lock_guard lock(mutex_);
    if (have_dynamical_) return dynamical_;
  }
  std::vector<Ideal> out;
  for (auto const& u : lattice_.members()) out.push_back(algebra_->dynamical_ideal_of(u));
  std::lock_guard lock(mutex_);
  if (!have_dynamical_) {
    dynamical_ = std::move(out);
    have_dynamical_ = true;
  }
  return dynamical_;
}

TheoremVerdict IdealStructure::verify_sandwich() const {
  TheoremVerdict v{"sandwich", true, 0, {}, {}};
  auto const& G = groupoid();
  auto const& A = *algebra_;
  auto const& prof = profiles();
  auto const& dyn = dynamical_ideals();
  auto const ideals = A.all_ideals();
  for (std::size_t m = 0; m < ideals.size(); ++m) {
    auto const& I = ideals[m];
    auto const& u = prof[m].diagonal_support;
    auto const& w = prof[m].source_of_support;
    ++v.checked;
    std::string const tag = "ideal " + format_blocks(I.blocks) + ": ";
    if (!is_invariant(G, u) || !is_invariant(G, w)) {
      fail(v, tag + "sandwich sets not invariant");
      continue;
    }
    auto const iu = A.dynamical_ideal_of(u);
    auto const iv = A.dynamical_ideal_of(w);
    if (!iu.contained_in(I)) fail(v, tag + "I_U not contained in I");
    if (!I.contained_in(iv)) fail(v, tag + "I not contained in I_V");
    for (std::size_t k = 0; k < lattice_.size(); ++k) {
      if (dyn[k].contained_in(I) && !dyn[k].contained_in(iu))
        fail(v, tag + "I_U not maximal, larger I_W for W=" + format_units(G, lattice_[k]));
      if (I.contained_in(dyn[k]) && !iv.contained_in(dyn[k]))
        fail(v, tag + "I_V not minimal, smaller I_W for W=" + format_units(G, lattice_[k]));
    }
  }
  v.detail = std::to_string(v.checked) + " ideals checked against " + std::to_string(lattice_.size()) +
             " dynamical ideals";
  return v;
}

TheoremVerdict IdealStructure::verify_bijection() const {
  TheoremVerdict v{"bijection", true, 0, {}, {}};
  auto const& A = *algebra_;
  auto const ideals = A.all_ideals();
  auto const triples = enumerate_triples();
  std::size_t const expected = std::size_t{1} << A.block_count();
  if (ideals.size() != expected || triples.size() != expected)
    fail(v, "counts: ideals " + std::to_string(ideals.size()) + ", triples " + std::to_string(triples.size()) +
                ", 2^blocks " + std::to_string(expected));
  std::vector<bool> hit(expected, false);
  for (auto const& t : triples) {
    ++v.checked;
    auto const I = theta(t);
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < I.blocks.size(); ++i)
      if (I.blocks.test(i)) mask |= std::uint64_t{1} << i;
    if (hit[mask]) fail(v, "theta not injective at " + format_blocks(I.blocks));
    hit[mask] = true;
    if (!(theta_inverse(I) == t))
      fail(v, "theta_inverse(theta(t)) != t for U=" + format_units(groupoid(), t.lower) +
                  " V=" + format_units(groupoid(), t.upper) + " J=" + format_blocks(t.j));
  }
  for (auto const& I : ideals) {
    ++v.checked;
    SandwichTriple t;
    try {
      t = theta_inverse(I);
      check_triple(t);
    } catch (PreconditionError const& e) {
      fail(v, "theta_inverse(" + format_blocks(I.blocks) + ") invalid: " + e.what());
      continue;
    }
    if (!(theta(t) == I)) fail(v, "theta(theta_inverse(I)) != I for " + format_blocks(I.blocks));
  }
  v.detail = std::to_string(triples.size()) + " triples, " + std::to_string(ideals.size()) + " ideals";
  return v;
}

TheoremVerdict IdealStructure::verify_obstruction() const {
  TheoremVerdict v{"obstruction", true, 0, {}, {}};
  auto const& G = groupoid();
  auto const& A = *algebra_;
  auto const& prof = profiles();
  auto const noneff = noneffective_units();
  auto const job = obstruction_ideal();

  if (noneff != isotropy_sources(G)) fail(v, "non-effective units differ from s(I(G) \\ G0)");
  if (!is_invariant(G, noneff)) fail(v, "non-effective units not invariant");
  for (std::size_t k = 0; k < G.unit_count(); ++k) {
    if (is_jointly_effective_at(G, k) != is_effective_at(G, k))
      fail(v, "joint effectiveness differs from effectiveness at " + G.name(G.unit(k)));
  }
  auto const job_support = A.support(job);
  if (job_support != A.reduction_elements(noneff)) fail(v, "supp(J^ob) differs from G restricted to non-effective units");

  auto const ideals = A.all_ideals();
  std::size_t pnd = 0;
  for (std::size_t m = 0; m < ideals.size(); ++m) {
    ++v.checked;
    if (ideals[m].is_zero() || prof[m].diagonal_dimension != 0) continue;
    ++pnd;
    if (!ideals[m].contained_in(job))
      fail(v, "purely non-dynamical ideal " + format_blocks(ideals[m].blocks) + " not contained in J^ob");
  }
  auto const kernel = collapse_kernel();
  if (!A.diagonal_part(kernel).empty()) fail(v, "collapse kernel meets the diagonal");
  auto const ksupp = A.support(kernel);
  if (!job_support.is_subset_of(ksupp)) fail(v, "supp(J^ob) not contained in supp(ker pi)");
  if (!job.is_zero()) {
    if (!A.is_purely_non_dynamical(kernel)) fail(v, "collapse kernel not purely non-dynamical");
    if (ksupp != job_support) fail(v, "supp(ker pi) differs from supp(J^ob)");
  }
  v.detail = "J^ob=" + format_blocks(job.blocks) + " over " + format_units(G, noneff) + "; " +
             std::to_string(pnd) + " purely non-dynamical ideals; ker pi=" + format_blocks(kernel.blocks);
  return v;
}

TheoremVerdict IdealStructure::verify_lattice_iso() const {
  TheoremVerdict v{"lattice", true, 0, {}, {}};
  auto const& G = groupoid();
  auto const& A = *algebra_;
  auto const& dyn = dynamical_ideals();
  std::size_t const n = lattice_.size();
  for (std::size_t a = 0; a < n; ++a) {
    auto const& u = lattice_[a];
    std::string const tag = "U=" + format_units(G, u) + ": ";
    if (A.diagonal_support(dyn[a]) != u || A.diagonal_part(dyn[a]).size() != u.count())
      fail(v, tag + "I_U meet C(G0) differs from C(U)");
    if (A.support(dyn[a]) != A.reduction_elements(u)) fail(v, tag + "supp(I_U) differs from G|_U");
    if (!A.is_dynamical(dyn[a])) fail(v, tag + "I_U not dynamical");
    for (std::size_t b = 0; b < n; ++b) {
      ++v.checked;
      if (a != b && dyn[a] == dyn[b]) fail(v, tag + "not injective");
      if ((a & b) == a && !dyn[a].contained_in(dyn[b])) fail(v, tag + "not order preserving");
      if (!(dyn[a & b] == (dyn[a] & dyn[b]))) fail(v, tag + "I_{U meet V} != I_U meet I_V");
      if (!(dyn[a | b] == (dyn[a] | dyn[b]))) fail(v, tag + "I_{U join V} != I_U + I_V");
    }
  }
  std::size_t dynamical = 0;
  for (auto const& I : A.all_ideals()) dynamical += A.is_dynamical(I) ? 1 : 0;
  if (dynamical != n)
    fail(v, std::to_string(dynamical) + " dynamical ideals for " + std::to_string(n) + " invariant sets");
  v.detail = std::to_string(n) + " invariant sets, " + std::to_string(dynamical) + " dynamical ideals";
  return v;
}

TheoremVerdict IdealStructure::verify_support_invariance() const {
  TheoremVerdict v{"support", true, 0, {}, {}};
  auto const& G = groupoid();
  auto const& prof = profiles();
  auto const ideals = algebra_->all_ideals();
  for (std::size_t m = 0; m < ideals.size(); ++m) {
    ++v.checked;
    auto const& s = prof[m].support;
    bool ok = true;
    for (Index a = 0; a < G.size() && ok; ++a) {
      if (!s.test(a)) continue;
      if (!s.test(G.inverse(a))) ok = false;
      for (Index b = 0; b < G.size() && ok; ++b) {
        if (!s.test(b)) continue;
        Index const c = G.compose(a, b);
        if (c != npos && !s.test(c)) ok = false;
      }
    }
    if (!ok) fail(v, "supp of ideal " + format_blocks(ideals[m].blocks) + " not closed");
  }
  v.detail = std::to_string(v.checked) + " supports closed under composition and inversion";
  return v;
}

TheoremVerdict IdealStructure::verify_effective_uniqueness() const {
  TheoremVerdict v{"effective", true, 0, {}, {}};
  auto const& G = groupoid();
  if (effective_units(G).count() != G.unit_count()) {
    v.detail = "not effective; nothing to check";
    return v;
  }
  auto const& prof = profiles();
  auto const ideals = algebra_->all_ideals();
  for (std::size_t m = 0; m < ideals.size(); ++m) {
    ++v.checked;
    if (!ideals[m].is_zero() && prof[m].diagonal_dimension == 0)
      fail(v, "nonzero ideal " + format_blocks(ideals[m].blocks) + " misses the diagonal");
  }
  v.detail = "effective; " + std::to_string(v.checked) + " ideals meet the diagonal or are zero";
  return v;
}

VerificationReport IdealStructure::verify(std::string const& theorem) const {
  auto const& names = theorem_names();
  if (theorem != "all" && std::find(names.begin(), names.end(), theorem) == names.end())
    throw PreconditionError("unknown theorem '" + theorem + "'");
  VerificationReport r;
  auto want = [&](char const* t) { return theorem == "all" || theorem == t; };
  if (want("sandwich")) r.verdicts.push_back(verify_sandwich());
  if (want("bijection")) r.verdicts.push_back(verify_bijection());
  if (want("obstruction")) r.verdicts.push_back(verify_obstruction());
  if (want("lattice")) r.verdicts.push_back(verify_lattice_iso());
  if (want("support")) r.verdicts.push_back(verify_support_invariance());
  if (want("effective")) r.verdicts.push_back(verify_effective_uniqueness());
  return r;
}

}  // namespace glab
