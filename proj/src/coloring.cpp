#include "nullcolor/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "nullcolor/error.hpp"

namespace nullcolor::coloring {

ListAssignment ListAssignment::full(const Field& field, int n) {
  return ListAssignment(std::vector<std::vector<FieldElement>>(static_cast<std::size_t>(n), field.elements()));
}

std::vector<std::size_t> ListAssignment::sizes() const {
  std::vector<std::size_t> s;
  for (const auto& l : lists_) s.push_back(l.size());
  return s;
}

void ListAssignment::validate(const Field& field, int n) const {
  if (lists_.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::MalformedInput,
                "expected " + std::to_string(n) + " lists, got " + std::to_string(lists_.size()));
  for (std::size_t i = 0; i < lists_.size(); ++i) {
    const auto& l = lists_[i];
    if (l.empty()) throw Error(ErrorCode::MalformedInput, "list " + std::to_string(i) + " is empty");
    for (const auto& x : l)
      if (!field.contains(x)) throw Error(ErrorCode::FieldMismatch, "list " + std::to_string(i) + " has a foreign element");
    std::set<FieldElement> seen(l.begin(), l.end());
    if (seen.size() != l.size()) throw Error(ErrorCode::MalformedInput, "list " + std::to_string(i) + " repeats an element");
  }
}

// ---------------------------------------------------------------------------

AbelianGroup::AbelianGroup(std::vector<std::uint32_t> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw Error(ErrorCode::MalformedInput, "group needs at least one cyclic factor");
  for (auto m : orders_) {
    if (m < 2) throw Error(ErrorCode::MalformedInput, "cyclic factor orders must be at least 2");
    order_ *= m;
    if (order_ > (std::uint64_t{1} << 32)) throw Error(ErrorCode::MalformedInput, "group too large");
  }
}

std::vector<std::uint32_t> AbelianGroup::residues(std::uint64_t index) const {
  std::vector<std::uint32_t> r(orders_.size());
  for (std::size_t j = orders_.size(); j-- > 0;) {
    r[j] = static_cast<std::uint32_t>(index % orders_[j]);
    index /= orders_[j];
  }
  return r;
}

std::uint64_t AbelianGroup::index(const std::vector<std::uint32_t>& residues) const {
  if (residues.size() != orders_.size()) throw Error(ErrorCode::MalformedInput, "residue vector has wrong length");
  std::uint64_t idx = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    if (residues[j] >= orders_[j]) throw Error(ErrorCode::LabelOutOfRange, "residue out of range");
    idx = idx * orders_[j] + residues[j];
  }
  return idx;
}

std::uint64_t AbelianGroup::add(std::uint64_t a, std::uint64_t b) const {
  auto ra = residues(a), rb = residues(b);
  for (std::size_t j = 0; j < ra.size(); ++j) ra[j] = (ra[j] + rb[j]) % orders_[j];
  return index(ra);
}

std::uint64_t AbelianGroup::sub(std::uint64_t a, std::uint64_t b) const {
  auto ra = residues(a), rb = residues(b);
  for (std::size_t j = 0; j < ra.size(); ++j) ra[j] = (ra[j] + orders_[j] - rb[j]) % orders_[j];
  return index(ra);
}

GroupLists full_group_lists(const AbelianGroup& group, int n) {
  std::vector<std::uint64_t> all(group.order());
  std::iota(all.begin(), all.end(), std::uint64_t{0});
  return GroupLists(static_cast<std::size_t>(n), all);
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t grid_size(const std::vector<std::size_t>& sizes) {
  std::uint64_t total = 1;
  for (auto s : sizes) {
    if (s == 0) return 0;
    if (total > UINT64_MAX / s) return UINT64_MAX;
    total *= s;
  }
  return total;
}

void check_budget(std::uint64_t size, std::uint64_t budget, const char* what) {
  if (size > budget)
    throw Error(ErrorCode::BudgetExceeded, std::string(what) + " of " + std::to_string(size) + " exceeds budget " +
                                               std::to_string(budget));
}

// Weighted grid sums for the interpolation formula
//   c_t(f) = sum_{c in B} f(c) / prod_i prod_{a in B_i, a != c_i} (c_i - a).
class Interpolator {
 public:
  Interpolator(const FactorList& f, std::vector<std::vector<FieldElement>> grid)
      : f_(f), field_(f.field()), grid_(std::move(grid)), point_(grid_.size()) {
    for (const auto& b : grid_) {
      std::vector<FieldElement> w;
      for (const auto& c : b) {
        FieldElement prod = field_.one();
        for (const auto& a : b)
          if (!(a == c)) prod = field_.mul(prod, field_.sub(c, a));
        w.push_back(field_.inv(prod));
      }
      weights_.push_back(std::move(w));
    }
  }

  std::vector<FieldElement>& point() { return point_; }
  const std::vector<std::vector<FieldElement>>& grid() const { return grid_; }

  /// Sum over the free positions from..n-1 with earlier positions fixed in point().
  FieldElement suffix_sum(std::size_t from) {
    if (from == grid_.size()) return f_.evaluate(point_);
    FieldElement total = field_.zero();
    for (std::size_t i = 0; i < grid_[from].size(); ++i) {
      point_[from] = grid_[from][i];
      total = field_.add(total, field_.mul(weights_[from][i], suffix_sum(from + 1)));
    }
    return total;
  }

 private:
  const FactorList& f_;
  const Field& field_;
  std::vector<std::vector<FieldElement>> grid_;
  std::vector<std::vector<FieldElement>> weights_;
  std::vector<FieldElement> point_;
};

std::optional<std::vector<FieldElement>> first_nonzero_point(const FactorList& f,
                                                             const std::vector<std::vector<FieldElement>>& grid) {
  const std::size_t n = grid.size();
  std::vector<std::size_t> idx(n, 0);
  std::vector<FieldElement> point(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) point[i] = grid[i][idx[i]];
    if (!f.field().is_zero(f.evaluate(point))) return point;
    std::size_t i = 0;
    while (i < n && ++idx[i] == grid[i].size()) idx[i++] = 0;
    if (i == n) return std::nullopt;
  }
}

}  // namespace

CnSolution cn_solve(const FactorList& f, const ListAssignment& lists, const std::optional<ExponentVector>& witness,
                    std::uint64_t budget) {
  const Field& field = f.field();
  const int n = f.num_vars();
  if (lists.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::MalformedInput, "one list per variable required");
  for (std::size_t i = 0; i < lists.size(); ++i)
    if (lists[i].empty()) throw Error(ErrorCode::ListTooSmall, "list " + std::to_string(i) + " is empty");
  lists.validate(field, n);

  FactorList top(field, n);
  try {
    top = f.top_degree_part();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ZeroPolynomial) throw;
    throw Error(ErrorCode::NoWitnessMonomial, "the polynomial is identically zero");
  }
  unsigned degree = 0;
  for (const auto& fac : top.factors())
    if (!field.is_zero(fac.a) || !field.is_zero(fac.b)) ++degree;
  std::vector<unsigned> caps(static_cast<std::size_t>(n));
  std::size_t slack = 0;
  for (int i = 0; i < n; ++i) {
    caps[i] = static_cast<unsigned>(lists[i].size() - 1);
    slack += caps[i];
  }
  if (slack < degree)
    throw Error(ErrorCode::ListTooSmall, "lists allow total degree " + std::to_string(slack) + " but the polynomial has degree " +
                                             std::to_string(degree));

  ExponentVector t;
  if (witness) {
    t = *witness;
    if (static_cast<int>(t.size()) != n) throw Error(ErrorCode::MalformedInput, "witness has wrong length");
    for (int i = 0; i < n; ++i)
      if (t[i] > caps[i]) throw Error(ErrorCode::ListTooSmall, "list " + std::to_string(i) + " is too small for the witness");
    if (t.total_degree() != degree || field.is_zero(polys::coeff_of_monomial(top, t)))
      throw Error(ErrorCode::NoWitnessMonomial, "supplied witness vanishes in the top-degree part");
  } else {
    const auto poly = polys::expand_capped(top, caps, static_cast<std::size_t>(std::min<std::uint64_t>(budget, SIZE_MAX)));
    if (poly.empty()) throw Error(ErrorCode::NoWitnessMonomial, "no top-degree monomial fits the list sizes");
    t = poly.terms().begin()->first;
  }

  std::vector<std::vector<FieldElement>> grid(static_cast<std::size_t>(n));
  std::vector<std::size_t> sizes;
  for (int i = 0; i < n; ++i) {
    grid[i].assign(lists[i].begin(), lists[i].begin() + t[i] + 1);
    sizes.push_back(grid[i].size());
  }
  check_budget(grid_size(sizes), budget, "interpolation grid");

  // Fix variables one at a time, keeping the restricted coefficient nonzero.
  Interpolator interp(f, grid);
  bool greedy_ok = true;
  for (int i = 0; i < n && greedy_ok; ++i) {
    bool fixed = false;
    for (const auto& c : grid[i]) {
      interp.point()[i] = c;
      if (!field.is_zero(interp.suffix_sum(static_cast<std::size_t>(i) + 1))) {
        fixed = true;
        break;
      }
    }
    greedy_ok = fixed;
  }
  std::vector<FieldElement> point = interp.point();
  if (!greedy_ok || field.is_zero(f.evaluate(point))) {
    auto found = first_nonzero_point(f, grid);
    if (!found) found = first_nonzero_point(f, lists.lists());
    if (!found) throw Error(ErrorCode::InvariantViolation, "nonzero coefficient but no nonzero grid point");
    point = std::move(*found);
  }
  return {std::move(point), std::move(t)};
}

kernels::GridProblem factor_grid(const FactorList& f, const ListAssignment& lists) {
  const Field& field = f.field();
  const std::size_t n = static_cast<std::size_t>(f.num_vars());
  if (lists.size() != n) throw Error(ErrorCode::MalformedInput, "one list per variable required");
  kernels::GridProblem p;
  for (std::size_t i = 0; i < n; ++i) p.domain.push_back(static_cast<std::uint32_t>(lists[i].size()));
  for (const auto& fac : f.factors()) {
    const bool hu = !field.is_zero(fac.a), hv = !field.is_zero(fac.b);
    if (hu && hv && fac.u != fac.v) {
      const auto& lu = lists[fac.u];
      const auto& lv = lists[fac.v];
      kernels::PairConstraint c{fac.u, fac.v, std::vector<char>(lu.size() * lv.size())};
      for (std::size_t i = 0; i < lu.size(); ++i) {
        const FieldElement au = field.add(field.mul(fac.a, lu[i]), fac.c);
        for (std::size_t j = 0; j < lv.size(); ++j)
          c.allowed[i * lv.size() + j] = !field.is_zero(field.add(au, field.mul(fac.b, lv[j])));
      }
      p.pairs.push_back(std::move(c));
    } else if (hu || hv) {
      const int w = hu ? fac.u : fac.v;
      const FieldElement& k = hu ? fac.a : fac.b;
      if (p.unary.empty()) {
        p.unary.resize(n);
        for (std::size_t i = 0; i < n; ++i) p.unary[i].assign(lists[i].size(), 1);
      }
      for (std::size_t i = 0; i < lists[w].size(); ++i)
        if (field.is_zero(field.add(field.mul(k, lists[w][i]), fac.c))) p.unary[w][i] = 0;
    } else if (field.is_zero(fac.c)) {
      p.infeasible = true;
    }
  }
  return p;
}

std::uint64_t count_colorings(const Field& field, const Graph& g, const polys::Decoration& dec,
                              const polys::EdgeLabeling& lab, const ListAssignment& lists, std::uint64_t budget,
                              Backend backend) {
  lists.validate(field, g.order());
  check_budget(grid_size(lists.sizes()), budget, "coloring grid");
  const FactorList f = polys::decorated_factors(field, g, dec, &lab);
  return kernels::count(factor_grid(f, lists), backend);
}

// ---------------------------------------------------------------------------

namespace {

void validate_group_lists(const AbelianGroup& group, const GroupLists& lists, int n) {
  if (lists.size() != static_cast<std::size_t>(n)) throw Error(ErrorCode::MalformedInput, "one list per vertex required");
  for (const auto& l : lists) {
    if (l.empty()) throw Error(ErrorCode::MalformedInput, "empty list");
    for (auto x : l)
      if (x >= group.order()) throw Error(ErrorCode::LabelOutOfRange, "list element outside the group");
    std::set<std::uint64_t> seen(l.begin(), l.end());
    if (seen.size() != l.size()) throw Error(ErrorCode::MalformedInput, "list repeats an element");
  }
}

// Allowed-pair table of edge i for label `label`, indexed [tail value][head value].
std::vector<char> group_table(const AbelianGroup& group, const std::vector<std::uint64_t>& tail_list,
                              const std::vector<std::uint64_t>& head_list, std::uint64_t label) {
  std::vector<char> t(tail_list.size() * head_list.size());
  for (std::size_t i = 0; i < tail_list.size(); ++i)
    for (std::size_t j = 0; j < head_list.size(); ++j)
      t[i * head_list.size() + j] = group.sub(head_list[j], tail_list[i]) != label;
  return t;
}

kernels::GridProblem group_problem_shell(const GroupLists& lists) {
  kernels::GridProblem p;
  for (const auto& l : lists) p.domain.push_back(static_cast<std::uint32_t>(l.size()));
  return p;
}

}  // namespace

std::uint64_t count_group_colorings(const Graph& g, const polys::Orientation& orient, const AbelianGroup& group,
                                    const std::vector<std::uint64_t>& labels, const GroupLists& lists,
                                    std::uint64_t budget, Backend backend) {
  validate_group_lists(group, lists, g.order());
  if (labels.size() != g.size()) throw Error(ErrorCode::MalformedInput, "one label per edge required");
  std::vector<std::size_t> sizes;
  for (const auto& l : lists) sizes.push_back(l.size());
  check_budget(grid_size(sizes), budget, "coloring grid");
  kernels::GridProblem p = group_problem_shell(lists);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (labels[i] >= group.order()) throw Error(ErrorCode::LabelOutOfRange, "edge label outside the group");
    const int tail = orient.tail(g, i), head = orient.head(g, i);
    p.pairs.push_back({tail, head, group_table(group, lists[tail], lists[head], labels[i])});
  }
  return kernels::count(p, backend);
}

AdversaryResult adversarial_min(const Graph& g, const polys::Orientation& orient, const AbelianGroup& group,
                                const GroupLists& lists, std::uint64_t labeling_budget, std::uint64_t grid_budget,
                                Backend backend) {
  validate_group_lists(group, lists, g.order());
  std::vector<std::size_t> sizes;
  for (const auto& l : lists) sizes.push_back(l.size());
  check_budget(grid_size(sizes), grid_budget, "coloring grid");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (total > labeling_budget / group.order() + 1) {
      total = UINT64_MAX;
      break;
    }
    total *= group.order();
  }
  check_budget(total, labeling_budget, "labeling space");

  // tables[i][l]: allowed pairs on edge i under label l.
  const std::size_t m = g.size();
  std::vector<std::vector<std::vector<char>>> tables(m);
  std::vector<int> tails(m), heads(m);
  for (std::size_t i = 0; i < m; ++i) {
    tails[i] = orient.tail(g, i);
    heads[i] = orient.head(g, i);
    for (std::uint64_t l = 0; l < group.order(); ++l)
      tables[i].push_back(group_table(group, lists[tails[i]], lists[heads[i]], l));
  }
  const kernels::GridProblem shell = group_problem_shell(lists);
  auto decode = [&](std::uint64_t code) {
    std::vector<std::uint64_t> labels(m);
    for (std::size_t i = 0; i < m; ++i) {
      labels[i] = code % group.order();
      code /= group.order();
    }
    return labels;
  };
  auto evaluate = [&](std::uint64_t code, bool reference) {
    kernels::GridProblem p = shell;
    const auto labels = decode(code);
    for (std::size_t i = 0; i < m; ++i) p.pairs.push_back({tails[i], heads[i], tables[i][labels[i]]});
    return reference ? kernels::count_reference(p) : kernels::count_backtrack(p);
  };
  const kernels::ArgMin best =
      backend == Backend::Reference
          ? kernels::argmin_reference(total, [&](std::uint64_t c) { return evaluate(c, true); })
          : kernels::argmin_parallel(total, [&](std::uint64_t c) { return evaluate(c, false); });
  return {decode(best.index), best.value, total};
}

// ---------------------------------------------------------------------------

CyclicEmbedding cyclic_embed(std::uint64_t m, bool use_totient) {
  if (m < 2) throw Error(ErrorCode::MalformedInput, "group order must be at least 2");
  std::uint32_t p = 2;
  while (!algebra::is_prime(p) || algebra::gcd(p, m) != 1) ++p;
  CyclicEmbedding emb;
  emb.m = m;
  emb.p = p;
  emb.totient = algebra::euler_phi(m);
  const std::uint64_t k = use_totient ? emb.totient : algebra::multiplicative_order_mod(p, m);
  std::uint64_t q = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    q *= p;
    if (q > algebra::kMaxFieldSize)
      throw Error(ErrorCode::FieldTooLarge, "F_" + std::to_string(p) + "^" + std::to_string(k) + " exceeds " +
                                                std::to_string(algebra::kMaxFieldSize) + " elements");
  }
  emb.degree = static_cast<unsigned>(k);
  emb.field = Field::make(algebra::FieldSpec{p, emb.degree, {}});
  emb.generator = algebra::find_element_of_order(emb.field, m);
  return emb;
}

FactorList multiplicative_instance(const Graph& g, const polys::Orientation& orient,
                                   const std::vector<std::uint64_t>& labels, const CyclicEmbedding& emb) {
  if (labels.size() != g.size()) throw Error(ErrorCode::MalformedInput, "one label per edge required");
  const Field& field = emb.field;
  FactorList f(field, g.order());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (labels[i] >= emb.m)
      throw Error(ErrorCode::LabelOutOfRange, "label " + std::to_string(labels[i]) + " is not a residue mod " +
                                                  std::to_string(emb.m));
    const FieldElement shift = field.pow(emb.generator, labels[i]);
    f.add(polys::AffineFactor{orient.head(g, i), field.one(), orient.tail(g, i), field.neg(shift), field.zero()});
  }
  return f;
}

ListAssignment subgroup_lists(const CyclicEmbedding& emb, const GroupLists& residues) {
  std::vector<std::vector<FieldElement>> out;
  for (const auto& l : residues) {
    std::vector<FieldElement> row;
    for (auto r : l) {
      if (r >= emb.m) throw Error(ErrorCode::LabelOutOfRange, "residue out of range");
      row.push_back(emb.field.pow(emb.generator, r));
    }
    out.push_back(std::move(row));
  }
  return ListAssignment(std::move(out));
}

std::uint64_t subgroup_log(const CyclicEmbedding& emb, const FieldElement& x) {
  FieldElement acc = emb.field.one();
  for (std::uint64_t r = 0; r < emb.m; ++r) {
    if (acc == x) return r;
    acc = emb.field.mul(acc, emb.generator);
  }
  throw Error(ErrorCode::MalformedInput, "element is outside the embedded subgroup");
}

FactorList additive_instance(const Field& field, const Graph& g, const polys::Orientation& orient,
                             const polys::EdgeLabeling& labels) {
  FactorList f(field, g.order());
  const FieldElement one = field.one(), minus_one = field.neg(field.one());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& e = g.edges()[i];
    const int head = orient.head(g, i);
    f.add(polys::AffineFactor{e.u, e.u == head ? one : minus_one, e.v, e.v == head ? one : minus_one,
                              field.neg(labels.at(e))});
  }
  return f;
}

}  // namespace nullcolor::coloring
