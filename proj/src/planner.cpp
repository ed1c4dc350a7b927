#include "gencover/planner.hpp"

#include <algorithm>
#include <set>

namespace gencover {

namespace {

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

void check_shapes(const Matrix& H, const std::vector<Vec>& syndromes) {
  if (syndromes.empty()) throw Error(Errc::DimensionMismatch, "syndrome batch is empty");
  for (const auto& s : syndromes) {
    if (s.size() != H.rows())
      throw Error(Errc::DimensionMismatch, "syndrome length must equal n - k");
    for (Elem e : s)
      if (!H.f().contains(e)) throw Error(Errc::DomainError, "syndrome entry outside the field");
  }
}

// Distinct nonzero syndromes in first-seen order.
std::vector<Vec> distinct_nonzero(const std::vector<Vec>& syndromes) {
  std::vector<Vec> out;
  std::set<Vec> seen;
  for (const auto& s : syndromes)
    if (!is_zero(s) && seen.insert(s).second) out.push_back(s);
  return out;
}

BatchPlan build_plan(const Matrix& H, const std::vector<Vec>& syndromes,
                     std::vector<std::size_t> columns, PlanMethod method) {
  std::sort(columns.begin(), columns.end());
  const Matrix HI = H.select_columns(columns);
  Matrix coeff(H.field(), syndromes.size(), columns.size());
  for (std::size_t i = 0; i < syndromes.size(); ++i) {
    auto c = in_span(HI, syndromes[i]);
    if (!c) throw Error(Errc::Infeasible, "plan columns do not span a syndrome");
    std::copy(c->begin(), c->end(), coeff.row(i).begin());
  }
  BatchPlan plan{std::move(columns), std::move(coeff), method};
  if (!verify_plan(H, syndromes, plan))
    throw Error(Errc::Infeasible, "plan failed reconstruction check");
  return plan;
}

void require_feasible(const Matrix& H, const std::vector<Vec>& targets) {
  std::vector<std::size_t> all(H.cols());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  if (!columns_span(H, all, targets))
    throw Error(Errc::Infeasible, "a syndrome lies outside the column space of H");
}

std::size_t batch_rank(const FieldPtr& field, std::size_t dim, const std::vector<Vec>& vs) {
  EchelonBasis b(field, dim);
  for (const auto& v : vs) b.insert(v);
  return b.rank();
}

}  // namespace

const char* plan_method_name(PlanMethod m) noexcept {
  return m == PlanMethod::Exact ? "exact" : "greedy";
}

bool columns_span(const Matrix& H, std::span<const std::size_t> columns,
                  const std::vector<Vec>& targets) {
  EchelonBasis basis(H.field(), H.rows());
  for (auto c : columns) basis.insert(H.column(c));
  return std::all_of(targets.begin(), targets.end(),
                     [&](const Vec& t) { return basis.contains(t); });
}

BatchPlan plan_exact(const Matrix& H, const std::vector<Vec>& syndromes, const PlanLimits& limits) {
  check_shapes(H, syndromes);
  const auto targets = distinct_nonzero(syndromes);
  if (targets.empty()) return build_plan(H, syndromes, {}, PlanMethod::Exact);
  require_feasible(H, targets);

  const std::size_t start = batch_rank(H.field(), H.rows(), targets);
  std::uint64_t examined = 0;
  for (std::size_t r = start; r <= H.cols(); ++r) {
    const std::uint64_t level = binomial(H.cols(), r);
    if (level > limits.subset_cap - std::min(examined, limits.subset_cap))
      throw Error(Errc::SearchTooLarge,
                  "exact plan search exceeds " + std::to_string(limits.subset_cap) + " subsets");
    examined += level;
    std::vector<std::size_t> found;
    for_each_combination(H.cols(), r, [&](std::span<const std::size_t> I) {
      if (!columns_span(H, I, targets)) return true;
      found.assign(I.begin(), I.end());
      return false;
    });
    if (!found.empty() || r == 0) return build_plan(H, syndromes, std::move(found), PlanMethod::Exact);
  }
  throw Error(Errc::Infeasible, "no column subset spans the batch");
}

BatchPlan plan_greedy(const Matrix& H, const std::vector<Vec>& syndromes) {
  check_shapes(H, syndromes);
  const auto targets = distinct_nonzero(syndromes);
  if (targets.empty()) return build_plan(H, syndromes, {}, PlanMethod::Greedy);
  require_feasible(H, targets);

  const std::size_t dim = H.rows();
  std::vector<std::size_t> chosen;
  std::vector<bool> used(H.cols(), false);
  EchelonBasis span_I(H.field(), dim);

  auto deficiency = [&](const EchelonBasis& base) {
    EchelonBasis with = base;
    for (const auto& t : targets) with.insert(t);
    return with.rank() - base.rank();
  };

  std::size_t current = deficiency(span_I);
  while (current > 0) {
    std::size_t best_col = H.cols();
    std::size_t best_def = current + 1;
    for (std::size_t j = 0; j < H.cols(); ++j) {
      if (used[j]) continue;
      EchelonBasis trial = span_I;
      trial.insert(H.column(j));
      const std::size_t d = deficiency(trial);
      if (d < best_def) {
        best_def = d;
        best_col = j;
      }
    }
    if (best_col == H.cols()) throw Error(Errc::Infeasible, "greedy ran out of columns");
    used[best_col] = true;
    chosen.push_back(best_col);
    span_I.insert(H.column(best_col));
    current = best_def;
  }
  return build_plan(H, syndromes, std::move(chosen), PlanMethod::Greedy);
}

bool verify_plan(const Matrix& H, const std::vector<Vec>& syndromes, const BatchPlan& plan) {
  const auto& cols = plan.columns;
  if (!std::is_sorted(cols.begin(), cols.end())) return false;
  if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) return false;
  if (std::any_of(cols.begin(), cols.end(), [&](std::size_t c) { return c >= H.cols(); }))
    return false;
  if (plan.coefficients.rows() != syndromes.size() || plan.coefficients.cols() != cols.size())
    return false;
  if (!same_field(plan.coefficients.field(), H.field())) return false;
  const Field& f = H.f();
  for (std::size_t i = 0; i < syndromes.size(); ++i) {
    if (syndromes[i].size() != H.rows()) return false;
    Vec acc(H.rows(), 0);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Elem a = plan.coefficients(i, j);
      if (a == 0) continue;
      for (std::size_t r = 0; r < H.rows(); ++r) acc[r] = f.add(acc[r], f.mul(a, H(r, cols[j])));
    }
    if (acc != syndromes[i]) return false;
  }
  return true;
}

}  // namespace gencover
