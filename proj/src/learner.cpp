#include "learner.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "error.hpp"
#include "stats.hpp"

namespace xtruct {

void EarlyStop::observe(double score) {
  if (done) return;
  latest.push_back(score);
  if (latest.size() < kGroupSize) return;
  all.push_back(mean(latest));
  latest.clear();
  double sd = sample_stdev(all);
  double needed = kZ * sd / kPrecision;
  auto needed_groups = std::size_t(needed * needed);
  if (all.size() > needed_groups) done = true;
}

namespace {

void reservoir_add(Branch& b, const std::string& word, std::size_t cap, Rng& rng) {
  if (b.sample_words.size() < cap) {
    b.sample_words.push_back(word);
    return;
  }
  uint64_t j = rng.below(b.support);
  if (j < cap) b.sample_words[j] = word;
}

double directional_fit(const Xtructure& x, const Branch& from, const Branch& to,
                       const ScoringConfig& cfg) {
  double acc = 0;
  for (const std::string& w : from.sample_words) {
    Tokenized t = tokenize(w, x.params().delimiter_set);
    acc += normalize_distance(branch_distance(t, to, cfg), w.size());
  }
  return from.sample_words.empty() ? 0.0 : acc / double(from.sample_words.size());
}

// Merges branch j into i (structure replay, support sum, sample top-up).
void subsume(Xtructure& x, std::size_t i, std::size_t j) {
  auto& branches = x.branches_mut();
  Branch& keep = branches[i];
  Branch& gone = branches[j];
  for (const std::string& w : gone.sample_words)
    keep.absorb(tokenize(w, x.params().delimiter_set));
  keep.support += gone.support;
  for (const std::string& w : gone.sample_words) {
    if (keep.sample_words.size() >= x.params().sample_cap) break;
    keep.sample_words.push_back(w);
  }
  branches.erase(branches.begin() + long(j));
}

struct ClosestPair {
  std::size_t i = 0, j = 0;
  double fit = 0;
};

ClosestPair find_closest_pair(const Xtructure& x) {
  ScoringConfig cfg = ScoringConfig::from(x.params());
  ClosestPair best;
  bool first = true;
  const auto& branches = x.branches();
  for (std::size_t i = 0; i < branches.size(); ++i) {
    for (std::size_t j = i + 1; j < branches.size(); ++j) {
      double f = 0.5 * (directional_fit(x, branches[i], branches[j], cfg) +
                        directional_fit(x, branches[j], branches[i], cfg));
      if (first || f < best.fit) {
        best = {i, j, f};
        first = false;
      }
    }
  }
  return best;
}

// The lower-support branch folds into the higher; the threshold only rises.
void merge_pair(Xtructure& x, const ClosestPair& p) {
  std::size_t keep = p.i, gone = p.j;
  if (x.branches()[gone].support > x.branches()[keep].support) std::swap(keep, gone);
  subsume(x, keep, gone);
  x.set_branching_threshold(std::max(x.branching_threshold(), p.fit));
}

double learn_sanitized(Xtructure& x, const std::string& clean) {
  Tokenized t = tokenize(clean, x.params().delimiter_set);
  auto& branches = x.branches_mut();

  double score = 1.0;
  if (branches.empty()) {
    Branch b;
    b.seed(t);
    b.support = 1;
    b.sample_words.push_back(clean);
    branches.push_back(std::move(b));
    return score;
  }

  BranchFit best = best_branch_fit(x, t, clean.size());
  score = best.normalized;
  if (best.normalized < x.branching_threshold()) {
    Branch& b = branches[best.branch];
    b.absorb(t);
    b.support += 1;
    reservoir_add(b, clean, x.params().sample_cap, x.rng());
  } else {
    Branch b;
    b.seed(t);
    b.support = 1;
    b.sample_words.push_back(clean);
    branches.push_back(std::move(b));
  }

  while (branches.size() > std::size_t(std::max(1, x.params().max_branches)))
    merge_pair(x, find_closest_pair(x));
  return score;
}

} // namespace

double learn_tuple(Xtructure& x, std::string_view tuple) {
  if (tuple.empty()) fail(Errc::empty_tuple, "learn_tuple on empty string");
  std::string clean(tuple);
  sanitize_ascii(clean);
  return learn_sanitized(x, clean);
}

LearnResult learn_column(const std::vector<std::string>& tuples, const Hyperparams& params,
                         bool early_stop) {
  LearnResult r{Xtructure(params)};
  EarlyStop stop;
  for (const std::string& raw : tuples) {
    if (early_stop && stop.done) break;
    if (raw.empty()) {
      ++r.skipped_empty;
      continue;
    }
    std::string clean = raw;
    r.non_ascii += sanitize_ascii(clean);
    double score = learn_sanitized(r.model, clean);
    ++r.consumed;
    if (early_stop) stop.observe(score);
  }
  r.model.freeze();
  return r;
}

Xtructure merge_xtructures(const std::vector<Xtructure>& xs) {
  if (xs.empty()) fail(Errc::empty_sequence, "merge of zero models");
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!xs[0].params().merge_compatible(xs[i].params()))
      fail(Errc::hyperparameter_mismatch, "models disagree on hyperparameters");

  Xtructure out(xs[0].params());
  double threshold = 0;
  for (const Xtructure& x : xs) {
    threshold = std::max(threshold, x.branching_threshold());
    for (const Branch& b : x.branches()) out.branches_mut().push_back(b);
  }
  out.set_branching_threshold(threshold);

  while (out.branches().size() > 1) {
    ClosestPair p = find_closest_pair(out);
    bool over_cap = out.branches().size() > std::size_t(std::max(1, out.params().max_branches));
    if (!over_cap && p.fit >= out.branching_threshold()) break;
    merge_pair(out, p);
  }
  out.freeze();
  return out;
}

LearnResult learn_column_parallel(const std::vector<std::string>& tuples,
                                  const Hyperparams& params, int workers, bool early_stop) {
  std::size_t n = tuples.size();
  if (workers <= 1 || n < std::size_t(workers) * 2) {
    return learn_column(tuples, params, early_stop);
  }

  std::size_t w = std::size_t(workers);
  std::vector<LearnResult> parts(w, LearnResult{Xtructure(params)});
  std::vector<std::thread> threads;
  threads.reserve(w);
  std::size_t base = n / w, extra = n % w, begin = 0;
  for (std::size_t k = 0; k < w; ++k) {
    std::size_t len = base + (k < extra ? 1 : 0);
    std::size_t from = begin, to = begin + len;
    begin = to;
    Hyperparams wp = params;
    wp.rng_seed = mix64(params.rng_seed + k + 1);
    threads.emplace_back([&tuples, &parts, k, from, to, wp, early_stop] {
      std::vector<std::string> chunk(tuples.begin() + long(from), tuples.begin() + long(to));
      parts[k] = learn_column(chunk, wp, early_stop);
    });
  }
  for (auto& t : threads) t.join();

  std::vector<Xtructure> models;
  models.reserve(w);
  LearnResult r{Xtructure(params)};
  for (auto& p : parts) {
    models.push_back(std::move(p.model));
    r.consumed += p.consumed;
    r.skipped_empty += p.skipped_empty;
    r.non_ascii += p.non_ascii;
  }
  r.model = merge_xtructures(models);
  r.model.set_rng_seed(params.rng_seed); // workers ran offset streams
  return r;
}

double pairwise_branch_fit(const Xtructure& x, std::size_t i, std::size_t j) {
  ScoringConfig cfg = ScoringConfig::from(x.params());
  return 0.5 * (directional_fit(x, x.branches()[i], x.branches()[j], cfg) +
                directional_fit(x, x.branches()[j], x.branches()[i], cfg));
}

} // namespace xtruct
