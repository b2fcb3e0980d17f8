#include "bezout/koszul.hpp"

#include <algorithm>
#include <bit>

namespace bezout {

namespace {

struct BlockProduct {
  std::size_t col_block;
  std::size_t row_block;
  const Polynomial* f;
  bool negate;
};

BlockLinearMap assemble(const Field& field, std::vector<IndexBlock> rows, std::vector<IndexBlock> cols,
                        const std::vector<BlockProduct>& parts) {
  BlockLinearMap map(field, std::move(rows), std::move(cols));
  for (auto& p : parts) {
    const auto& mons = map.col_blocks()[p.col_block].monomials;
    std::size_t off = map.col_offset(p.col_block);
    for (std::size_t k = 0; k < mons.size(); ++k)
      for (auto& [e, c] : p.f->terms()) map.add_entry(off + k, p.row_block, mons[k] + e, p.negate ? -c : c);
  }
  return map;
}

std::string subset_label(unsigned s, int r) {
  std::string out = "{";
  for (int i = 0; i < r; ++i)
    if (s & (1u << i)) out += (out.size() > 1 ? "," : "") + std::to_string(i + 1);
  return out + "}";
}

std::vector<Polynomial> system_polys(const SystemSpec& sys, const ElimConfig& cfg, int replica) {
  return random_system(sys, cfg.prime, seed_for(cfg, replica));
}

}  // namespace

KoszulComplex::KoszulComplex(const SystemSpec& sys, std::vector<Polynomial> polys, const SpeciesSpec& base)
    : sys_(sys.closure()), base_(closure_spec(base)), polys_(std::move(polys)) {
  sys_.check(false);
  const int r = static_cast<int>(sys_.equations.size());
  if (static_cast<int>(polys_.size()) != r) fail(Errc::mismatch, "one polynomial per equation spec is required");
  if (r > 16) fail(Errc::size_cap, "too many equations for a subset-indexed complex");
  if (!base_.same_shape(sys_.equations.front())) fail(Errc::mismatch, "base parameters do not match the system");
  auto bv = validate_spec(base_);
  if (!bv.valid) fail(Errc::invalid_spec, "base spec is not valid: " + (bv.violations.empty() ? "" : bv.violations.front()));
  levels_.resize(static_cast<std::size_t>(r) + 1);
  std::vector<std::size_t> index_of(1u << r);
  std::vector<unsigned> order(1u << r);
  for (unsigned s = 0; s < order.size(); ++s) order[s] = s;
  std::stable_sort(order.begin(), order.end(), [](unsigned x, unsigned y) { return std::popcount(x) < std::popcount(y); });
  for (unsigned s : order) {
    SpeciesSpec spec = base_;
    for (int i = 0; i < r; ++i)
      if (s & (1u << i)) spec = spec + sys_.equations[static_cast<std::size_t>(i)];
    auto v = validate_spec(spec);
    if (!v.valid)
      fail(Errc::invalid_spec, "composite spec " + spec.to_string() + " for subset " + subset_label(s, r) + " is not valid");
    index_of[s] = terms_.size();
    levels_[static_cast<std::size_t>(std::popcount(s))].push_back(terms_.size());
    terms_.push_back({s, spec, enumerate_support(spec)});
  }
  const Field field = polys_.front().field();
  for (int k = 0; k < r; ++k) {
    std::vector<IndexBlock> cols, rows;
    std::vector<std::size_t> row_pos(terms_.size());
    for (auto t : levels_[static_cast<std::size_t>(k)]) cols.push_back({subset_label(terms_[t].subset, r), terms_[t].monomials});
    for (std::size_t q = 0; q < levels_[static_cast<std::size_t>(k) + 1].size(); ++q) {
      auto t = levels_[static_cast<std::size_t>(k) + 1][q];
      row_pos[t] = q;
      rows.push_back({subset_label(terms_[t].subset, r), terms_[t].monomials});
    }
    std::vector<BlockProduct> parts;
    const auto& lv = levels_[static_cast<std::size_t>(k)];
    for (std::size_t cb = 0; cb < lv.size(); ++cb) {
      unsigned s = terms_[lv[cb]].subset;
      for (int i = 0; i < r; ++i) {
        if (s & (1u << i)) continue;
        int below = std::popcount(s & ((1u << i) - 1));
        parts.push_back({cb, row_pos[index_of[s | (1u << i)]], &polys_[static_cast<std::size_t>(i)], below % 2 == 1});
      }
    }
    maps_.push_back(assemble(field, std::move(rows), std::move(cols), parts));
  }
}

std::size_t KoszulComplex::level_dim(int k) const {
  std::size_t d = 0;
  for (auto t : level(k)) d += terms_[t].monomials.size();
  return d;
}

KoszulComplex build_complex(const SystemSpec& sys, std::span<const Polynomial> polys, const SpeciesSpec& base) {
  return KoszulComplex(sys, std::vector<Polynomial>(polys.begin(), polys.end()), base);
}

bool composition_is_zero(const BlockLinearMap& first, const BlockLinearMap& second) {
  if (first.rows() != second.cols()) fail(Errc::mismatch, "maps are not composable");
  const Field& field = first.field();
  std::vector<FieldElement> acc(second.rows(), FieldElement::zero(field));
  for (std::size_t j = 0; j < first.cols(); ++j) {
    std::fill(acc.begin(), acc.end(), FieldElement::zero(field));
    for (auto& [r, c] : first.column(j))
      for (auto& [r2, c2] : second.column(r)) acc[r2] = acc[r2] + c * c2;
    for (auto& v : acc)
      if (!v.is_zero()) return false;
  }
  return true;
}

namespace {

// Ranks of a chain of maps between spaces dims[0] -> dims[1] -> ... ; fills positions and coker.
void chain_report(const std::vector<std::int64_t>& dims, const std::vector<std::int64_t>& ranks, ExactnessReport& rep) {
  const std::size_t L = dims.size();
  rep.positions.clear();
  for (std::size_t k = 0; k + 1 < L; ++k) {
    ExactnessPosition p;
    p.level = static_cast<int>(k);
    p.dim = dims[k];
    p.rank_in = k == 0 ? 0 : ranks[k - 1];
    p.rank_out = ranks[k];
    p.defect = p.dim - p.rank_in - p.rank_out;
    rep.positions.push_back(p);
  }
  rep.top_dim = dims.back();
  rep.coker = dims.back() - ranks.back();
  rep.alternating_sum = 0;
  for (std::size_t k = 0; k < L; ++k) rep.alternating_sum += ((L - 1 - k) % 2 == 0 ? 1 : -1) * dims[k];
  rep.exact = std::all_of(rep.positions.begin(), rep.positions.end(), [](auto& p) { return p.defect == 0; });
  rep.euler_holds = !rep.exact || rep.alternating_sum == rep.coker;
}

std::int64_t max_defect(const ExactnessReport& rep) {
  std::int64_t m = 0;
  for (auto& p : rep.positions) m = std::max(m, p.defect);
  return m;
}

}  // namespace

ExactnessReport exactness_check(const KoszulComplex& cx) {
  ExactnessReport rep;
  std::vector<std::int64_t> dims, ranks;
  for (int k = 0; k <= cx.r(); ++k) dims.push_back(static_cast<std::int64_t>(cx.level_dim(k)));
  for (int k = 0; k < cx.r(); ++k) ranks.push_back(static_cast<std::int64_t>(map_rank(cx.d(k))));
  rep.d_squared_zero = true;
  for (int k = 0; k + 1 < cx.r(); ++k)
    if (!composition_is_zero(cx.d(k), cx.d(k + 1))) rep.d_squared_zero = false;
  chain_report(dims, ranks, rep);
  rep.pass = rep.exact && rep.d_squared_zero && rep.euler_holds;
  return rep;
}

ExactnessReport exactness_stabilized(const SystemSpec& sys, std::optional<SpeciesSpec> base, const ElimConfig& cfg) {
  sys.check(false);
  if (cfg.seeds < 1 || cfg.margin_cap < 1) fail(Errc::invalid_argument, "at least one seed and one margin step are required");
  SystemSpec cl = sys.closure();
  SpeciesSpec pi = base ? closure_spec(*base) : base_spec(cl);
  ExactnessReport last;
  std::vector<MarginStep> trace;
  int run = 0;
  for (int m = 1; m <= cfg.margin_cap + 1; ++m) {
    MarginStep step;
    step.m = m;
    step.top = cl.sum() + pi.scaled(m);
    ExactnessReport rep;
    bool agree = true;
    for (int k = 0; k < cfg.seeds; ++k) {
      auto polys = system_polys(sys, cfg, k);
      KoszulComplex cx(sys, polys, pi.scaled(m));
      auto r = exactness_check(cx);
      step.per_seed.push_back(r.coker);
      step.max_defect = std::max(step.max_defect, max_defect(r));
      if (k == 0) {
        rep = r;
      } else {
        if (r.coker != rep.coker || max_defect(r) != max_defect(rep)) agree = false;
        rep.d_squared_zero = rep.d_squared_zero && r.d_squared_zero;
        rep.exact = rep.exact && r.exact;
      }
    }
    step.coker = rep.coker;
    trace.push_back(step);
    if (!agree) rep.notes.push_back("seeds disagree at margin " + std::to_string(m));
    // Non-square systems have a growing cokernel; only the defects must settle.
    bool square = cl.equations.size() == static_cast<std::size_t>(cl.n());
    bool stable = agree && rep.exact && trace.size() > 1 && trace[trace.size() - 2].max_defect == 0 &&
                  (!square || trace[trace.size() - 2].coker == step.coker);
    run = stable ? run + 1 : 1;
    last = rep;
    if (run >= cfg.window) break;
  }
  last.trace = trace;
  last.pass = last.exact && last.d_squared_zero && last.euler_holds;
  if (run < cfg.window) {
    last.notes.push_back("margin loop reached its cap without stabilizing");
    last.pass = false;
  }
  return last;
}

namespace {

std::int64_t sum_of(const SystemSpec& s, std::size_t coord) {
  std::int64_t v = 0;
  for (auto& e : s.equations) v += coord == 0 ? e.t : e.a[coord - 1];
  return v;
}

void require_first_triple(const SystemSpec& sys) {
  sys.check(true);
  if (sys.kind() != SpeciesKind::first || sys.n() != 3) fail(Errc::invalid_argument, "resolution check needs three First equations in three variables");
  for (auto& e : sys.equations) {
    auto v = validate_spec(e);
    if (!v.valid) fail(Errc::invalid_spec, "equation " + e.to_string() + " is not valid");
  }
}

}  // namespace

bool resolution_target_ok(const SystemSpec& sys, const SpeciesSpec& target, std::string* why) {
  require_first_triple(sys);
  auto set = [&](std::string s) {
    if (why) *why = std::move(s);
    return false;
  };
  if (!target.same_shape(sys.equations.front())) return set("target shape differs from the system");
  auto v = validate_spec(target);
  if (!v.valid) return set("target " + target.to_string() + " is not a valid First spec");
  std::int64_t slack_t = target.t - sum_of(sys, 0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = i + 1; k < 3; ++k) {
      std::int64_t si = target.a[i] - sum_of(sys, i + 1), sk = target.a[k] - sum_of(sys, k + 1);
      if (slack_t > si + sk)
        return set("T - sum t = " + std::to_string(slack_t) + " exceeds (A" + std::to_string(i + 1) + " - sum a) + (A" +
                   std::to_string(k + 1) + " - sum a) = " + std::to_string(si + sk));
    }
  return true;
}

ExactnessReport first_species_resolution_check(const SystemSpec& sys, std::optional<SpeciesSpec> target,
                                               const ElimConfig& cfg) {
  require_first_triple(sys);
  if (cfg.seeds < 1) fail(Errc::invalid_argument, "at least one seed is required");
  SpeciesSpec tg = target ? *target : sys.sum() + base_spec(sys);
  std::string why;
  if (!resolution_target_ok(sys, tg, &why)) fail(Errc::invalid_argument, "target refused: " + why);
  const auto& eq = sys.equations;
  SpeciesSpec all = sys.sum();
  SpeciesSpec c0 = tg - all;
  std::vector<SpeciesSpec> psi, phi;
  for (std::size_t i = 0; i < 3; ++i) {
    psi.push_back(c0 + eq[i]);
    phi.push_back(tg - eq[i]);
  }
  auto blocks = [](const std::string& name, const std::vector<SpeciesSpec>& specs) {
    std::vector<IndexBlock> b;
    for (std::size_t i = 0; i < specs.size(); ++i) b.push_back({name + std::to_string(i + 1), enumerate_support(specs[i])});
    return b;
  };
  std::int64_t expected = 1;
  for (auto& e : eq) expected *= e.t;
  for (std::size_t i = 0; i < 3; ++i) {
    std::int64_t p = 1;
    for (auto& e : eq) p *= e.t - e.a[i];
    expected -= p;
  }
  ExactnessReport out;
  out.d_squared_zero = true;
  bool first = true;
  for (int k = 0; k < cfg.seeds; ++k) {
    auto f = system_polys(sys, cfg, k);
    const Field field = f.front().field();
    auto L = blocks("lambda", {c0});
    auto P = blocks("psi", psi);
    auto F = blocks("phi", phi);
    auto T = blocks("target", {tg});
    // h(L) = (L f1, L f2, L f3)
    auto h = assemble(field, P, L, {{0, 0, &f[0], false}, {0, 1, &f[1], false}, {0, 2, &f[2], false}});
    // g(psi) = (psi3 f2 - psi2 f3, psi1 f3 - psi3 f1, psi2 f1 - psi1 f2)
    auto g = assemble(field, F, P,
                      {{2, 0, &f[1], false}, {1, 0, &f[2], true}, {0, 1, &f[2], false}, {2, 1, &f[0], true},
                       {1, 2, &f[0], false}, {0, 2, &f[1], true}});
    auto fm = assemble(field, T, F, {{0, 0, &f[0], false}, {1, 0, &f[1], false}, {2, 0, &f[2], false}});
    std::vector<std::int64_t> dims{static_cast<std::int64_t>(h.cols()), static_cast<std::int64_t>(h.rows()),
                                   static_cast<std::int64_t>(g.rows()), static_cast<std::int64_t>(fm.rows())};
    std::vector<std::int64_t> ranks{static_cast<std::int64_t>(map_rank(h)), static_cast<std::int64_t>(map_rank(g)),
                                    static_cast<std::int64_t>(map_rank(fm))};
    ExactnessReport rep;
    chain_report(dims, ranks, rep);
    bool dd = composition_is_zero(h, g) && composition_is_zero(g, fm);
    MarginStep st;
    st.m = k;
    st.top = tg;
    st.coker = rep.coker;
    st.max_defect = max_defect(rep);
    if (first) {
      out.positions = rep.positions;
      out.top_dim = rep.top_dim;
      out.coker = rep.coker;
      out.alternating_sum = rep.alternating_sum;
      out.exact = rep.exact;
      out.euler_holds = rep.euler_holds;
      first = false;
    } else {
      if (rep.coker != out.coker) out.notes.push_back("seed " + std::to_string(k) + " gives a different cokernel");
      out.exact = out.exact && rep.exact && rep.coker == out.coker;
      out.euler_holds = out.euler_holds && rep.euler_holds;
    }
    out.d_squared_zero = out.d_squared_zero && dd;
    out.trace.push_back(st);
  }
  out.expected = expected;
  out.pass = out.exact && out.d_squared_zero && out.euler_holds && out.coker == expected;
  return out;
}

}  // namespace bezout
