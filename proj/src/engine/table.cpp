#include "pmzv/engine/table.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

namespace pmzv {

long default_n_max(long p) {
  if (p == 2) {
    return 6;
  }
  if (p == 3) {
    return 4;
  }
  if (p <= 7) {
    return 3;
  }
  return 2;
}

long levels_for_depth(const TableOptions& options, int depth) {
  auto it = options.levels_by_depth.find(depth);
  if (it != options.levels_by_depth.end()) {
    return it->second;
  }
  return options.n_max > 0 ? options.n_max : default_n_max(options.p);
}

long working_precision(const TableOptions& options) {
  long levels = levels_for_depth(options, 1);
  for (const auto& [d, n] : options.levels_by_depth) {
    levels = std::max(levels, n);
  }
  long guard = options.guard >= 0 ? options.guard : 4 * options.weight * levels + 16;
  return options.target_precision + guard;
}

namespace {

unsigned thread_count(const TableOptions& options, std::size_t jobs) {
  unsigned n = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

// Fills every index accepted by `want`, depth by depth up to max_depth.
TableResult build_layers(const TableOptions& options, int max_weight, int max_depth,
                         const std::function<bool(const Index&)>& want) {
  auto start = std::chrono::steady_clock::now();
  if (!is_prime(options.p)) {
    throw std::invalid_argument("p must be prime");
  }
  if (max_weight < 1) {
    throw std::invalid_argument("weight must be >= 1");
  }
  PadicField field{options.p, working_precision(options)};
  TableResult result{MzvTable<PadicField>(field, options.p), {}, options.sign, field.precision, 0};
  auto bmhs = std::make_shared<BmhsCache<PadicField>>(field);
  auto logs = std::make_shared<RestrictedLogPowers<PadicField>>(field, options.p);

  std::map<int, std::vector<Index>> layers;
  for (const Index& idx : indices_up_to_weight(static_cast<std::size_t>(max_weight))) {
    int d = static_cast<int>(idx.size());
    if (d <= max_depth && want(idx)) {
      layers[d].push_back(idx);
    }
  }

  for (const auto& [depth, indices] : layers) {
    const MzvTable<PadicField> frozen = result.table;
    AdjointCache<PadicField> adjoint(frozen);
    LimitOptions lopt;
    lopt.n_max = levels_for_depth(options, depth);
    lopt.grid = options.grid;
    lopt.sign = options.sign;

    std::vector<std::optional<LimitReport>> done(indices.size());
    std::vector<std::exception_ptr> errors(indices.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < indices.size(); i = next++) {
        try {
          TriangleEvaluator<PadicField> ev(
              field, options.p, [&adjoint](const Word& w) { return adjoint(w); }, bmhs, logs);
          done[i] = mzv_limit(ev, indices[i], lopt);
          if (options.progress) {
            options.progress(*done[i]);
          }
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    unsigned n = thread_count(options, indices.size());
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) {
      pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
      t.join();
    }
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (errors[i]) {
        std::rethrow_exception(errors[i]);
      }
      result.table.set(indices[i], done[i]->value);
      result.reports.emplace(indices[i], std::move(*done[i]));
    }
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

TableResult build_table(const TableOptions& options) {
  return build_layers(options, options.weight, options.weight, [](const Index&) { return true; });
}

LimitReport compute_mzv(const Index& idx, const TableOptions& options) {
  const int d = static_cast<int>(idx.size());
  const int w = index_weight(idx);
  TableOptions opt = options;
  opt.weight = w;
  TableResult r = build_layers(opt, w, d, [&](const Index& j) { return static_cast<int>(j.size()) < d || j == idx; });
  return r.reports.at(idx);
}

SignConvention resolve_sign(const TableOptions& options) {
  for (SignConvention s : {SignConvention::mahler, SignConvention::literal}) {
    TableOptions opt = options;
    opt.weight = std::min(options.weight, 4);
    opt.sign = s;
    TableResult r = build_table(opt);
    auto phi = phi_from_table(r.table, static_cast<std::size_t>(opt.weight));
    if (is_grouplike(phi).grouplike) {
      return s;
    }
  }
  throw std::runtime_error("no sign convention passes the shuffle check");
}

}  // namespace pmzv
