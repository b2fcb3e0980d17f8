#include "bezout/sum_equation.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "bezout/linalg.hpp"
#include "bezout/rng.hpp"

namespace bezout {

BlockLinearMap::BlockLinearMap(Field field, std::vector<IndexBlock> row_blocks, std::vector<IndexBlock> col_blocks)
    : field_(field), row_blocks_(std::move(row_blocks)), col_blocks_(std::move(col_blocks)) {
  for (auto& b : row_blocks_) {
    row_off_.push_back(nrows_);
    std::map<MultiIndex, std::size_t, GrlexLess> idx;
    for (std::size_t k = 0; k < b.monomials.size(); ++k) idx.emplace(b.monomials[k], k);
    row_index_.push_back(std::move(idx));
    nrows_ += b.monomials.size();
  }
  std::size_t ncols = 0;
  for (auto& b : col_blocks_) {
    col_off_.push_back(ncols);
    ncols += b.monomials.size();
  }
  columns_.resize(ncols);
}

std::optional<std::size_t> BlockLinearMap::find_row(std::size_t block, const MultiIndex& m) const {
  auto& idx = row_index_.at(block);
  auto it = idx.find(m);
  if (it == idx.end()) return std::nullopt;
  return row_off_[block] + it->second;
}

void BlockLinearMap::add_entry(std::size_t col, std::size_t row_block, const MultiIndex& m, const FieldElement& c) {
  auto r = find_row(row_block, m);
  if (!r) fail(Errc::internal, "entry " + to_string(m) + " falls outside row block '" + row_blocks_.at(row_block).label + "'");
  auto& column = columns_.at(col);
  auto row = static_cast<std::uint32_t>(*r);
  for (auto& e : column) {
    if (e.first == row) {
      e.second = e.second + c;
      return;
    }
  }
  column.emplace_back(row, c);
}

void BlockLinearMap::write_matrix_market(std::ostream& os) const {
  std::size_t nnz = 0;
  std::vector<std::vector<Entry>> sorted(columns_.size());
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (auto& e : columns_[j])
      if (!e.second.is_zero()) sorted[j].push_back(e);
    std::sort(sorted[j].begin(), sorted[j].end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });
    nnz += sorted[j].size();
  }
  os << "%%MatrixMarket matrix coordinate " << (field_.is_rational() ? "rational" : "integer") << " general\n";
  os << "% field " << field_.name();
  if (field_.is_prime()) os << " p=" << field_.characteristic();
  os << "\n";
  for (std::size_t b = 0; b < row_blocks_.size(); ++b)
    os << "% row block " << row_blocks_[b].label << " offset " << row_off_[b] << " size " << row_blocks_[b].monomials.size() << "\n";
  for (std::size_t b = 0; b < col_blocks_.size(); ++b)
    os << "% col block " << col_blocks_[b].label << " offset " << col_off_[b] << " size " << col_blocks_[b].monomials.size() << "\n";
  os << nrows_ << " " << columns_.size() << " " << nnz << "\n";
  for (std::size_t j = 0; j < sorted.size(); ++j)
    for (auto& [r, c] : sorted[j]) os << (r + 1) << " " << (j + 1) << " " << c.to_string() << "\n";
}

BlockLinearMap build_map(std::span<const Polynomial> polys, const std::vector<std::vector<MultiIndex>>& multipliers,
                         const std::vector<MultiIndex>& target) {
  if (polys.empty()) fail(Errc::invalid_argument, "no polynomials");
  if (multipliers.size() != polys.size()) fail(Errc::mismatch, "one multiplier list per polynomial is required");
  Field field = polys.front().field();
  for (auto& f : polys)
    if (!(f.field() == field) || f.nvars() != polys.front().nvars()) fail(Errc::mismatch, "polynomials differ in field or arity");
  bool any = std::any_of(multipliers.begin(), multipliers.end(), [](auto& m) { return !m.empty(); });
  if (!any) fail(Errc::invalid_argument, "target is too small: every multiplier block is empty");
  std::vector<IndexBlock> cols;
  for (std::size_t i = 0; i < polys.size(); ++i) cols.push_back({"f" + std::to_string(i + 1), multipliers[i]});
  BlockLinearMap map(field, {{"target", target}}, std::move(cols));
  for (std::size_t i = 0; i < polys.size(); ++i) {
    std::size_t off = map.col_offset(i);
    for (std::size_t k = 0; k < multipliers[i].size(); ++k)
      for (auto& [e, c] : polys[i].terms()) map.add_entry(off + k, 0, multipliers[i][k] + e, c);
  }
  return map;
}

namespace {

SpeciesSpec as_closed(const SpeciesSpec& s) { return closure_spec(s); }

}  // namespace

BlockLinearMap build_map(const SystemSpec& sys, std::span<const Polynomial> polys, const SpeciesSpec& target) {
  sys.check(false);
  if (polys.size() != sys.equations.size()) fail(Errc::mismatch, "number of polynomials differs from number of specs");
  SystemSpec cl = sys.closure();
  SpeciesSpec tg = as_closed(target);
  if (!tg.same_shape(cl.equations.front())) fail(Errc::mismatch, "target parameters do not match the system");
  std::vector<std::vector<MultiIndex>> mult;
  for (auto& e : cl.equations) mult.push_back(enumerate_support(tg - e));
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (auto& [m, c] : polys[i].terms())
      if (!in_support(cl.equations[i], m))
        fail(Errc::mismatch, "polynomial " + std::to_string(i + 1) + " has term " + to_string(m) + " outside its spec");
  return build_map(polys, mult, enumerate_support(tg));
}

namespace {

template <class Ops>
typename Ops::T convert(const FieldElement& c);
template <>
std::uint64_t convert<PrimeOps>(const FieldElement& c) {
  return c.residue();
}
template <>
Rational convert<RationalOps>(const FieldElement& c) {
  return c.rational();
}

template <class Ops>
FieldElement back(const typename Ops::T& v, const Field& f);
template <>
FieldElement back<PrimeOps>(const std::uint64_t& v, const Field& f) {
  return FieldElement(v, f.characteristic());
}
template <>
FieldElement back<RationalOps>(const Rational& v, const Field&) {
  return FieldElement(v);
}

template <class Ops>
std::vector<typename Ops::T> dense_column(const BlockLinearMap& map, std::size_t j, const Ops& ops,
                                          const std::vector<std::size_t>* perm = nullptr) {
  std::vector<typename Ops::T> v(map.rows(), ops.zero());
  for (auto& [r, c] : map.column(j)) {
    std::size_t i = perm ? (*perm)[r] : r;
    v[i] = ops.add(v[i], convert<Ops>(c));
  }
  return v;
}

template <class Ops>
Echelon<Ops> column_echelon(const BlockLinearMap& map, Ops ops, bool track = false) {
  Echelon<Ops> ech(map.rows(), ops, track);
  for (std::size_t j = 0; j < map.cols(); ++j) {
    auto v = dense_column(map, j, ops);
    ech.insert(v);
  }
  return ech;
}

std::size_t rational_rank(const BlockLinearMap& map) {
  std::vector<std::vector<mpz_class>> m(map.rows(), std::vector<mpz_class>(map.cols()));
  for (std::size_t j = 0; j < map.cols(); ++j) {
    mpz_class l = 1;
    for (auto& [r, c] : map.column(j)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
    for (auto& [r, c] : map.column(j)) {
      Rational q = c.rational() * l;
      m[r][j] += q.get_num();
    }
  }
  return bareiss_rank(std::move(m));
}

}  // namespace

std::size_t map_rank(const BlockLinearMap& map) {
  if (map.field().is_rational()) return rational_rank(map);
  return column_echelon(map, PrimeOps(map.field().characteristic())).rank();
}

std::int64_t cokernel_dim(const BlockLinearMap& map) {
  return static_cast<std::int64_t>(map.rows()) - static_cast<std::int64_t>(map_rank(map));
}

std::vector<Polynomial> random_system(const SystemSpec& sys, std::uint64_t prime, std::uint64_t seed) {
  sys.check(false);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < sys.equations.size(); ++i)
    out.push_back(random_generic(sys.equations[i], prime, derive_seed(seed, i)));
  return out;
}

std::uint64_t seed_for(const ElimConfig& cfg, int replica) {
  return derive_seed(cfg.seed, 0x100 + static_cast<std::uint64_t>(replica));
}

namespace {

const std::uint64_t kFallbackPrimes[] = {(std::uint64_t{1} << 62) - 57, (std::uint64_t{1} << 63) - 25};

void check_config(const ElimConfig& cfg) {
  if (!is_prime_u64(cfg.prime)) fail(Errc::invalid_argument, "configured modulus is not prime");
  if (cfg.seeds < 1) fail(Errc::invalid_argument, "at least one seed is required");
  if (cfg.margin_cap < 1) fail(Errc::invalid_argument, "margin cap must be positive");
  if (cfg.window < 2) fail(Errc::invalid_argument, "stabilization window must be at least 2");
}

}  // namespace

CokernelStep generic_cokernel(const SystemSpec& sys, const SpeciesSpec& target, const ElimConfig& cfg) {
  check_config(cfg);
  CokernelStep step;
  step.target = target;
  std::vector<std::uint64_t> primes{cfg.prime};
  for (auto p : kFallbackPrimes)
    if (p != cfg.prime) primes.push_back(p);
  for (auto p : primes) {
    step.per_seed.clear();
    step.prime = p;
    for (int k = 0; k < cfg.seeds; ++k) {
      auto polys = random_system(sys, p, seed_for(cfg, k));
      auto map = build_map(sys, polys, target);
      if (map.rows() > cfg.max_rows) fail(Errc::size_cap, "matrix has " + std::to_string(map.rows()) + " rows, above the cap");
      step.rows = static_cast<std::int64_t>(map.rows());
      step.cols = static_cast<std::int64_t>(map.cols());
      step.per_seed.push_back(cokernel_dim(map));
    }
    if (std::all_of(step.per_seed.begin(), step.per_seed.end(), [&](auto v) { return v == step.per_seed.front(); })) {
      step.coker = step.per_seed.front();
      return step;
    }
  }
  std::string msg = "seeds disagree on the cokernel at " + target.to_string() + " for every prime tried:";
  for (auto v : step.per_seed) msg += " " + std::to_string(v);
  fail(Errc::math_failure, msg);
}

CokernelTrace stabilized_cokernel(const SystemSpec& sys, const ElimConfig& cfg) {
  check_config(cfg);
  sys.check(false);
  CokernelTrace tr;
  SystemSpec cl = sys.closure();
  tr.base = base_spec(cl);
  SpeciesSpec start = cl.sum();
  int run = 0;
  for (int m = 0; m <= cfg.margin_cap; ++m) {
    tr.steps.push_back(generic_cokernel(sys, start + tr.base.scaled(m), cfg));
    auto& cur = tr.steps.back();
    if (cur.prime != cfg.prime) tr.notes.push_back("prime " + std::to_string(cur.prime) + " used at step " + std::to_string(m));
    run = (tr.steps.size() > 1 && tr.steps[tr.steps.size() - 2].coker == cur.coker) ? run + 1 : 1;
    if (run >= cfg.window) {
      tr.stabilized = true;
      break;
    }
  }
  tr.coker = tr.steps.back().coker;
  if (!tr.stabilized) tr.notes.push_back("cokernel did not stabilize within the margin cap");
  return tr;
}

namespace {

std::vector<MultiIndex> complete_monomials(std::size_t n, std::int64_t T) {
  if (T < 0) return {};
  return enumerate_support(SpeciesSpec::complete(static_cast<int>(n), T));
}

template <class Ops>
std::optional<Polynomial> min_univariate(const BlockLinearMap& map, std::size_t var, std::int64_t T, Ops ops) {
  const auto& rows = map.row_blocks().front().monomials;
  const std::size_t n = rows.front().size();
  // Univariate monomials x_var^k sit at coordinate k; everything else above, so it is eliminated first.
  std::vector<std::size_t> perm(rows.size());
  std::size_t next = static_cast<std::size_t>(T) + 1;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    bool uni = true;
    for (std::size_t v = 0; v < n; ++v)
      if (v != var && rows[r][v] != 0) uni = false;
    perm[r] = uni ? static_cast<std::size_t>(rows[r][var]) : next++;
  }
  Echelon<Ops> ech(map.rows(), ops);
  for (std::size_t j = 0; j < map.cols(); ++j) {
    auto v = dense_column(map, j, ops, &perm);
    ech.insert(v);
  }
  for (std::size_t k = 0; k <= static_cast<std::size_t>(T); ++k) {
    auto r = ech.row_with_pivot(k);
    if (!r) continue;
    Polynomial p(n, map.field());
    MultiIndex m(n);
    m[var] = static_cast<int>(k);
    p.add_term(m, FieldElement::one(map.field()));
    for (auto& [j, c] : ech.rows()[*r].entries) {
      MultiIndex e(n);
      e[var] = static_cast<int>(j);
      p.add_term(e, back<Ops>(c, map.field()));
    }
    return p;
  }
  return std::nullopt;
}

}  // namespace

EliminandResult eliminand_extract(std::span<const Polynomial> polys, std::size_t var, const ElimConfig& cfg) {
  check_config(cfg);
  if (polys.empty()) fail(Errc::invalid_argument, "no polynomials");
  const std::size_t n = polys.front().nvars();
  if (var >= n) fail(Errc::invalid_argument, "variable index out of range");
  if (polys.size() != n) fail(Errc::mismatch, "eliminand extraction needs a square system");
  std::int64_t T0 = 0;
  for (auto& f : polys) {
    if (f.is_zero()) fail(Errc::invalid_argument, "zero polynomial in system");
    T0 += f.degree();
  }
  EliminandResult res;
  int run = 0;
  for (int m = 0; m <= cfg.margin_cap; ++m) {
    std::int64_t T = T0 + m;
    std::vector<std::vector<MultiIndex>> mult;
    for (auto& f : polys) mult.push_back(complete_monomials(n, T - f.degree()));
    auto target = complete_monomials(n, T);
    if (target.size() > cfg.max_rows) fail(Errc::size_cap, "target space exceeds the row cap");
    auto map = build_map(polys, mult, target);
    std::optional<Polynomial> p = map.field().is_rational()
                                      ? min_univariate(map, var, T, RationalOps{})
                                      : min_univariate(map, var, T, PrimeOps(map.field().characteristic()));
    EliminandStep st{T, static_cast<std::int64_t>(map.rows()), static_cast<std::int64_t>(map.cols()), p ? p->degree() : -1};
    bool same = !res.steps.empty() && res.steps.back().degree == st.degree && st.degree >= 0;
    run = same ? run + 1 : 1;
    res.steps.push_back(st);
    if (p) res.eliminand = p;
    if (p && run >= cfg.window) {
      res.stabilized = true;
      break;
    }
  }
  return res;
}

namespace {

template <class Ops>
StatementReport statement_impl(std::span<const Polynomial> polys, const SystemSpec& specs, const SpeciesSpec& target, Ops ops) {
  StatementReport rep;
  rep.r = static_cast<int>(polys.size());
  rep.target = target;
  SystemSpec cl = specs.closure();
  SpeciesSpec tg = closure_spec(target);
  auto map = build_map(specs, polys, tg);
  const Field field = map.field();
  const std::size_t w1 = map.col_blocks().front().monomials.size();

  // Membership test space: image of (f_2..f_r) in C over target - spec_1.
  SpeciesSpec t1 = tg - cl.equations.front();
  auto rows1 = enumerate_support(t1);
  std::optional<Echelon<Ops>> sub;
  if (polys.size() > 1 && !rows1.empty()) {
    std::vector<std::vector<MultiIndex>> mult;
    for (std::size_t i = 1; i < polys.size(); ++i) mult.push_back(enumerate_support(t1 - cl.equations[i]));
    if (std::any_of(mult.begin(), mult.end(), [](auto& m) { return !m.empty(); })) {
      auto m2 = build_map(polys.subspan(1), mult, rows1);
      sub.emplace(column_echelon(m2, ops));
    }
  }

  Echelon<Ops> ech(map.rows(), ops, true);
  for (std::size_t j = 0; j < map.cols(); ++j) {
    auto v = dense_column(map, j, ops);
    if (ech.insert(v)) continue;
    ++rep.kernel_dim;
    std::vector<typename Ops::T> phi1(rows1.size(), ops.zero());
    for (auto& [k, c] : ech.last_relation())
      if (k < w1) phi1[k] = c;
    bool zero = std::all_of(phi1.begin(), phi1.end(), [&](auto& c) { return ops.is_zero(c); });
    bool ok = zero || (sub && sub->in_span(phi1));
    ++rep.checked;
    if (!ok) {
      ++rep.failures;
      if (rep.counterexamples.size() < 5) {
        Polynomial p(polys.front().nvars(), field);
        for (std::size_t k = 0; k < phi1.size(); ++k)
          if (!ops.is_zero(phi1[k])) p.add_term(rows1[k], back<Ops>(phi1[k], field));
        rep.counterexamples.push_back(to_text(p));
      }
    }
  }
  if (polys.size() == 2) rep.predicted_kernel_dim = count_enumerated(tg - cl.equations[0] - cl.equations[1]);
  rep.pass = rep.failures == 0 && (!rep.predicted_kernel_dim || *rep.predicted_kernel_dim == rep.kernel_dim);
  return rep;
}

}  // namespace

StatementReport statement_check(std::span<const Polynomial> polys, const SystemSpec& specs, const SpeciesSpec& target) {
  if (polys.empty()) fail(Errc::invalid_argument, "no polynomials");
  const Field& f = polys.front().field();
  if (f.is_rational()) return statement_impl(polys, specs, target, RationalOps{});
  return statement_impl(polys, specs, target, PrimeOps(f.characteristic()));
}

std::vector<StatementReport> statement_check_generic(const SystemSpec& sys, std::optional<SpeciesSpec> target,
                                                     const ElimConfig& cfg) {
  check_config(cfg);
  sys.check(false);
  SystemSpec cl = sys.closure();
  SpeciesSpec tg = target ? closure_spec(*target) : cl.sum() + base_spec(cl);
  std::vector<StatementReport> out;
  for (int k = 0; k < cfg.seeds; ++k) {
    auto polys = random_system(sys, cfg.prime, seed_for(cfg, k));
    out.push_back(statement_check(polys, sys, tg));
  }
  return out;
}

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

// Descending degree; pure powers before mixed terms; then lexicographic.
std::string display_text(const Polynomial& f) {
  std::vector<std::pair<MultiIndex, FieldElement>> terms(f.terms().begin(), f.terms().end());
  auto support = [](const MultiIndex& m) { return std::count_if(m.exponents().begin(), m.exponents().end(), [](int e) { return e > 0; }); };
  std::stable_sort(terms.begin(), terms.end(), [&](auto& p, auto& q) {
    if (p.first.total() != q.first.total()) return p.first.total() > q.first.total();
    if (support(p.first) != support(q.first)) return support(p.first) < support(q.first);
    return p.first.exponents() > q.first.exponents();
  });
  std::string out;
  for (auto& [m, c] : terms) {
    Polynomial one(f.nvars(), f.field());
    one.add_term(m, c);
    std::string t = to_compact_text(one, kXYZ);
    if (!out.empty() && t.front() != '-') out += "+";
    out += t;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::vector<Polynomial> superfluous_demo_system() {
  Field q = Field::rationals();
  return {parse_polynomial("-x^2+y^2+z^2-2yz-2x-1", kXYZ, q), parse_polynomial("z+x+y-1", kXYZ, q),
          parse_polynomial("z-x+y+1", kXYZ, q)};
}

DemoTrace sequential_elim_demo() {
  Field q = Field::rationals();
  auto sys = superfluous_demo_system();
  DemoTrace tr{{}, Polynomial(3, q), Polynomial(3, q), Polynomial(3, q), {}};
  tr.steps.push_back({"eq1", display_text(sys[0]) + "=0"});
  tr.steps.push_back({"eq2", display_text(sys[1]) + "=0"});
  tr.steps.push_back({"eq3", display_text(sys[2]) + "=0"});
  Polynomial z2 = parse_polynomial("1-x-y", kXYZ, q);
  Polynomial z3 = parse_polynomial("x-y-1", kXYZ, q);
  tr.steps.push_back({"z from eq2", "z=" + display_text(z2)});
  Polynomial eq4 = sys[0].substitute(2, z2);
  tr.steps.push_back({"eq4", display_text(eq4) + "=0"});
  tr.steps.push_back({"z from eq3", "z=" + display_text(z3)});
  Polynomial eq5 = sys[0].substitute(2, z3);
  tr.steps.push_back({"eq5", display_text(eq5) + "=0"});
  Polynomial sum = eq4 + eq5;
  tr.steps.push_back({"eq4+eq5", display_text(sum) + "=0"});
  // sum = 8y^2 - 8x gives x = y^2.
  Polynomial xval = parse_polynomial("y^2", kXYZ, q);
  if (sum != parse_polynomial("8y^2-8x", kXYZ, q)) fail(Errc::internal, "demo sum differs from 8y^2-8x");
  tr.steps.push_back({"x from eq4+eq5", "x=" + display_text(xval)});
  tr.final_equation = eq4.substitute(0, xval);
  tr.steps.push_back({"final", display_text(tr.final_equation) + "=0"});
  ElimConfig cfg;
  auto elim = eliminand_extract(sys, 1, cfg);
  if (!elim.eliminand) fail(Errc::math_failure, "no eliminand found for the demo system");
  tr.eliminand = *elim.eliminand;
  tr.superfluous = tr.final_equation.divide_exact(tr.eliminand);
  std::string factored = display_text(tr.superfluous) + "(" + display_text(tr.eliminand) + ")";
  tr.steps.push_back({"factored", factored + "=0"});
  tr.summary = "eliminand: " + display_text(tr.eliminand) + "; superfluous factor: " + display_text(tr.superfluous);
  return tr;
}

Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, std::size_t var) {
  if (f.nvars() != g.nvars() || !(f.field() == g.field())) fail(Errc::mismatch, "polynomials differ in field or arity");
  if (var >= f.nvars()) fail(Errc::invalid_argument, "variable index out of range");
  if (f.is_zero() || g.is_zero()) fail(Errc::invalid_argument, "zero polynomial");
  const int m = f.degree_in(var), n = g.degree_in(var);
  if (m == 0 && n == 0) fail(Errc::invalid_argument, "both polynomials are constant in the variable");
  auto cf = f.coefficients_in(var), cg = g.coefficients_in(var);
  const std::size_t N = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Polynomial>> M(N, std::vector<Polynomial>(N, Polynomial(f.nvars(), f.field())));
  // Row r of a block holds the coefficients in descending powers, shifted right by r.
  auto fill = [&](std::size_t row0, int rows, const std::vector<Polynomial>& c, int deg) {
    for (int r = 0; r < rows; ++r)
      for (int k = 0; k <= deg; ++k) M[row0 + static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = c[static_cast<std::size_t>(deg - k)];
  };
  fill(0, m, cg, n);
  fill(static_cast<std::size_t>(m), n, cf, m);
  return polynomial_determinant(std::move(M), f.nvars(), f.field());
}

FieldElement sylvester_three_quadrics(const Polynomial& U, const Polynomial& V, const Polynomial& W) {
  const Polynomial* q[3] = {&U, &V, &W};
  for (auto* p : q) {
    if (p->nvars() != 3) fail(Errc::invalid_argument, "three-quadrics input must be ternary");
    if (p->is_zero() || p->degree() != 2 || !p->is_homogeneous()) fail(Errc::invalid_argument, "three-quadrics input must be homogeneous quadrics");
    if (!(p->field() == U.field())) fail(Errc::mismatch, "quadrics differ in field");
  }
  const Field field = U.field();
  if (field.characteristic() == 2) fail(Errc::invalid_argument, "characteristic 2 is not supported");
  std::vector<MultiIndex> cubics;
  for (auto& m : enumerate_support(SpeciesSpec::complete(3, 3)))
    if (m.total() == 3) cubics.push_back(m);
  std::vector<Polynomial> rows;
  for (auto* p : q)
    for (std::size_t v = 0; v < 3; ++v) rows.push_back(p->shifted(MultiIndex(std::vector<int>{v == 0, v == 1, v == 2})));
  std::vector<std::vector<Polynomial>> jac(3, std::vector<Polynomial>(3, Polynomial(3, field)));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) jac[i][j] = q[i]->derivative(j);
  Polynomial J = polynomial_determinant(jac, 3, field);
  rows.push_back(J.scale(FieldElement::from_int(8, field).inverse()));
  std::vector<std::vector<FieldElement>> M;
  for (auto& r : rows) {
    std::vector<FieldElement> row;
    for (auto& m : cubics) row.push_back(r.coefficient(m));
    M.push_back(std::move(row));
  }
  return determinant(std::move(M), field);
}

namespace {

std::vector<MultiIndex> quadratic_monomials() {
  std::vector<MultiIndex> out;
  for (auto& m : enumerate_support(SpeciesSpec::complete(3, 2)))
    if (m.total() == 2) out.push_back(m);
  return out;
}

Polynomial random_quadric(const Field& f, Rng& rng) {
  Polynomial q(3, f);
  for (auto& m : quadratic_monomials()) q.add_term(m, FieldElement(1 + rng.below(f.characteristic() - 1), f.characteristic()));
  return q;
}

}  // namespace

std::vector<Polynomial> random_quadrics(std::uint64_t p, std::uint64_t seed) {
  Field f = Field::prime(p);
  Rng rng(derive_seed(seed, 0x3a));
  return {random_quadric(f, rng), random_quadric(f, rng), random_quadric(f, rng)};
}

std::vector<Polynomial> quadrics_through_point(std::uint64_t p, std::uint64_t seed, std::vector<FieldElement>* point) {
  Field f = Field::prime(p);
  Rng rng(derive_seed(seed, 0x3b));
  std::vector<FieldElement> P;
  for (int i = 0; i < 3; ++i) P.emplace_back(rng.below(p), p);
  if (std::all_of(P.begin(), P.end(), [](auto& c) { return c.is_zero(); })) P[2] = FieldElement::one(f);
  // A monomial that does not vanish at P absorbs the correction.
  MultiIndex pivot(3);
  for (std::size_t i = 0; i < 3; ++i)
    if (!P[i].is_zero()) {
      pivot[i] = 2;
      break;
    }
  std::vector<Polynomial> out;
  for (int k = 0; k < 3; ++k) {
    Polynomial q = random_quadric(f, rng);
    Polynomial m = Polynomial::monomial(pivot, FieldElement::one(f));
    q = q - m.scale(q.evaluate(P) / m.evaluate(P));
    out.push_back(q);
  }
  if (point) *point = P;
  return out;
}

}  // namespace bezout
