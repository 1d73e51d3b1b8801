#include "qweyl/census.hpp"

#include <algorithm>
#include <thread>

#include "qweyl/burnside.hpp"

namespace qweyl {

namespace {

// x-sweep size p^(n^2), or nullopt on overflow.
std::optional<std::uint64_t> sweep_size(std::int64_t p, std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < n * n; ++k) {
    if (total > UINT64_MAX / static_cast<std::uint64_t>(p)) return std::nullopt;
    total *= static_cast<std::uint64_t>(p);
  }
  return total;
}

Mat x_from_index(const FieldCtx& ctx, std::size_t n, std::uint64_t index) {
  Mat x(ctx, n, n);
  auto p = static_cast<std::uint64_t>(ctx.p());
  for (std::size_t k = 0; k < n * n; ++k) {
    x.set(k / n, k % n, ctx.from_residue(static_cast<std::int64_t>(index % p)));
    index /= p;
  }
  return x;
}

// All y with y*x - gamma*x*y = 1 for this x, in coefficient-counter order.
void emit_partners(const FieldCtx& ctx, const Mat& x,
                   const std::function<void(const Solution&)>& emit) {
  std::size_t n = x.rows();
  Mat a(ctx, n * n, n * n);
  std::vector<FieldElem> rhs;
  rhs.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t row = i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t ca = i * n + k;
        a.set(row, ca, a.at(row, ca) + x.at(k, j));
        std::size_t cb = k * n + j;
        a.set(row, cb, a.at(row, cb) - ctx.gamma() * x.at(i, k));
      }
      rhs.push_back(i == j ? ctx.one() : ctx.zero());
    }
  AffineSolveResult sol = solve_linear(a, rhs);
  if (!sol.feasible) return;
  auto p = static_cast<std::uint64_t>(ctx.p());
  std::vector<std::uint64_t> counter(sol.basis.size(), 0);
  while (true) {
    std::vector<FieldElem> v = sol.particular;
    for (std::size_t i = 0; i < counter.size(); ++i) {
      if (counter[i] == 0) continue;
      FieldElem c = ctx.from_residue(static_cast<std::int64_t>(counter[i]));
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += c * sol.basis[i][k];
    }
    emit({ctx, x, unflatten(ctx, n, v)});
    std::size_t pos = 0;
    while (pos < counter.size() && counter[pos] == p - 1) counter[pos++] = 0;
    if (pos == counter.size()) break;
    ++counter[pos];
  }
}

bool keep_under_prune(const FieldCtx& ctx, const Mat& x) {
  return is_scalar(x.pow(static_cast<unsigned long>(ctx.l()))).has_value();
}

}  // namespace

std::uint64_t enumerate_solutions(const FieldCtx& ctx, std::size_t n,
                                  const std::function<void(const Solution&)>& emit,
                                  const CensusOptions& opts) {
  if (ctx.kind() != FieldKind::prime)
    fail(Errc::unsupported_over_this_field, "the census sweeps finite fields only");
  auto total = sweep_size(ctx.p(), n);
  if (!total || *total > opts.budget)
    fail(Errc::budget_exceeded,
         "x-sweep of size p^(n^2) exceeds the configured budget");

  std::uint64_t count = 0;
  auto run_range = [&](std::uint64_t lo, std::uint64_t hi,
                       const std::function<void(const Solution&)>& sink) {
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      Mat x = x_from_index(ctx, n, idx);
      if (opts.prune && !keep_under_prune(ctx, x)) continue;
      emit_partners(ctx, x, sink);
    }
  };

  unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1 || *total < jobs) {
    run_range(0, *total, [&](const Solution& s) {
      ++count;
      emit(s);
    });
    return count;
  }

  // Disjoint index ranges, collected per worker and replayed in range order,
  // so the emission sequence matches the single-job sweep exactly.
  std::vector<std::vector<Solution>> partial(jobs);
  std::vector<std::thread> workers;
  std::uint64_t chunk = *total / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    std::uint64_t lo = chunk * w;
    std::uint64_t hi = (w + 1 == jobs) ? *total : chunk * (w + 1);
    workers.emplace_back([&, w, lo, hi] {
      run_range(lo, hi, [&partial, w](const Solution& s) { partial[w].push_back(s); });
    });
  }
  for (auto& t : workers) t.join();
  for (const auto& bucket : partial)
    for (const auto& s : bucket) {
      ++count;
      emit(s);
    }
  return count;
}

std::vector<CanonicalForm> predicted_forms(const FieldCtx& ctx) {
  std::vector<CanonicalForm> forms;
  for (std::int64_t b = 0; b < ctx.p(); ++b)
    forms.push_back(CanonicalForm::singular(ctx.from_residue(b)));
  std::vector<FieldElem> reps;
  for (std::int64_t r = 1; r < ctx.p(); ++r) {
    FieldElem rep = orbit_representative(ctx.from_residue(r));
    if (std::find(reps.begin(), reps.end(), rep) == reps.end()) reps.push_back(rep);
  }
  for (const auto& rep : reps)
    for (std::int64_t e = 1; e < ctx.p(); ++e)
      forms.push_back(CanonicalForm::nonsingular(rep, ctx.from_residue(e)));
  return forms;
}

CensusReport classify_bruteforce(const FieldCtx& ctx, std::size_t n,
                                 const CensusOptions& opts) {
  CensusReport report{ctx, n, opts.prune, 0, 0, {}, {}};

  report.total_solutions = enumerate_solutions(
      ctx, n,
      [&](const Solution& s) {
        RelationReport rel = verify_relation(s);
        if (rel.commutes || !is_irreducible(s)) return;
        ++report.irreducible_count;
        for (auto& cls : report.classes)
          if (are_equivalent(s, cls.representative)) {
            ++cls.size;
            return;
          }
        report.classes.push_back({std::nullopt, 1, s, 0});
      },
      opts);

  for (std::size_t k = 0; k < report.classes.size(); ++k) {
    try {
      report.classes[k].canonical = canonicalize(report.classes[k].representative).canonical;
    } catch (const Error& e) {
      report.anomalies.push_back("class " + std::to_string(k) +
                                 ": canonicalize failed: " + e.what());
    }
  }

  // Locate every predicted canonical pair among the classes; each class must
  // absorb exactly one, and canonicalize must agree with the grouping.
  if (n == static_cast<std::size_t>(ctx.l())) {
    for (const auto& form : predicted_forms(ctx)) {
      Solution canon = realize(ctx, form);
      for (std::size_t k = 0; k < report.classes.size(); ++k)
        if (are_equivalent(canon, report.classes[k].representative)) {
          ++report.classes[k].canonical_members;
          if (report.classes[k].canonical && *report.classes[k].canonical != form)
            report.anomalies.push_back("class " + std::to_string(k) +
                                       ": canonicalize names a different canonical form "
                                       "than the grouping");
          break;
        }
    }
    for (std::size_t k = 0; k < report.classes.size(); ++k) {
      if (report.classes[k].canonical_members == 0)
        report.anomalies.push_back("class " + std::to_string(k) + " (size " +
                                   std::to_string(report.classes[k].size) +
                                   ") contains no canonical-family member");
      if (report.classes[k].canonical_members > 1)
        report.anomalies.push_back("class " + std::to_string(k) + " contains " +
                                   std::to_string(report.classes[k].canonical_members) +
                                   " canonical-family members");
    }
  }
  return report;
}

CrossValidation cross_validate(const CensusReport& report) {
  CrossValidation out;
  out.anomalies = report.anomalies;
  if (report.n != static_cast<std::size_t>(report.ctx.l())) {
    // away from size l the classification predicts no irreducible pairs
    for (std::size_t k = 0; k < report.classes.size(); ++k)
      out.unexpected.push_back("class " + std::to_string(k) + " (size " +
                               std::to_string(report.classes[k].size) +
                               ") at size other than l");
    out.bijection = out.unexpected.empty() && out.anomalies.empty();
    return out;
  }
  std::vector<CanonicalForm> forms = predicted_forms(report.ctx);
  std::vector<bool> matched(report.classes.size(), false);
  for (const auto& form : forms) {
    Solution canon = realize(report.ctx, form);
    bool found = false;
    for (std::size_t k = 0; k < report.classes.size(); ++k)
      if (are_equivalent(canon, report.classes[k].representative)) {
        matched[k] = true;
        found = true;
        break;
      }
    if (!found) out.missing.push_back(form);
  }
  for (std::size_t k = 0; k < report.classes.size(); ++k)
    if (!matched[k])
      out.unexpected.push_back("class " + std::to_string(k) + " (size " +
                               std::to_string(report.classes[k].size) +
                               ") matches no predicted canonical form");
  out.bijection = out.missing.empty() && out.unexpected.empty() &&
                  report.classes.size() == forms.size() && out.anomalies.empty();
  return out;
}

}  // namespace qweyl
