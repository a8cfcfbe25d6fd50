#include "gapmatch/generator.hpp"

#include <algorithm>
#include <random>

namespace gapmatch {

namespace {

int32_t geometric_len(std::mt19937_64& rng, int32_t cap) {
  std::bernoulli_distribution again(0.6);
  int32_t len = 1;
  while (len < cap && again(rng)) ++len;
  return len;
}

std::string random_string(std::mt19937_64& rng, int32_t len, int32_t sigma) {
  std::uniform_int_distribution<int32_t> sym(0, sigma - 1);
  std::string s(static_cast<size_t>(len), 'a');
  for (auto& c : s) c = static_cast<char>('a' + sym(rng));
  return s;
}

}  // namespace

std::string Instance::describe() const {
  return "seed=" + std::to_string(seed) + " sigma=" + std::to_string(sigma) +
         " alpha=" + std::to_string(dict.bounds.alpha) + " beta=" + std::to_string(dict.bounds.beta) +
         " lines=" + std::to_string(dict.original_count) + " d=" + std::to_string(dict.d()) +
         " n=" + std::to_string(text.size()) + " planted=" + std::to_string(planted ? 1 : 0) +
         " nested=" + std::to_string(nested_pool ? 1 : 0);
}

Instance generate_instance(uint64_t seed, const GenLimits& lim) {
  Instance inst;
  inst.seed = seed;
  inst.planted = static_cast<int32_t>(seed % 10) < lim.plant_per_ten;
  inst.nested_pool = static_cast<int32_t>((seed / 10) % 10) < lim.nested_per_ten;

  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
  const int32_t sigmas[3] = {2, 4, 26};
  inst.sigma = sigmas[seed % 3];

  std::uniform_int_distribution<int32_t> alpha_dist(0, lim.max_beta);
  const int32_t alpha = alpha_dist(rng);
  std::uniform_int_distribution<int32_t> beta_dist(alpha, lim.max_beta);
  const int32_t beta = beta_dist(rng);

  std::uniform_int_distribution<int32_t> line_dist(1, lim.max_d);
  const int32_t lines = line_dist(rng);

  // Nested flavor: draw subpatterns from a prefix-closed pool so loci share
  // and include one another; otherwise every subpattern is fresh.
  std::vector<std::string> pool;
  if (inst.nested_pool) {
    const int32_t bases = std::max(2, lines / 2);
    for (int32_t b = 0; b < bases; ++b) {
      const std::string base = random_string(rng, geometric_len(rng, lim.max_len), inst.sigma);
      for (size_t len = 1; len <= base.size(); ++len) pool.push_back(base.substr(0, len));
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  }
  auto draw_subpattern = [&]() {
    if (!pool.empty()) {
      std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
      return pool[pick(rng)];
    }
    return random_string(rng, geometric_len(rng, lim.max_len), inst.sigma);
  };

  std::vector<std::pair<std::string, std::string>> entries;
  std::bernoulli_distribution dup(0.15);
  for (int32_t i = 0; i < lines; ++i) {
    if (!entries.empty() && dup(rng)) {
      std::uniform_int_distribution<size_t> pick(0, entries.size() - 1);
      entries.push_back(entries[pick(rng)]);
    } else {
      entries.push_back({draw_subpattern(), draw_subpattern()});
    }
  }

  inst.dict_text = std::to_string(alpha) + " " + std::to_string(beta) + "\n";
  for (const auto& [p1, p2] : entries) inst.dict_text += p1 + "\t" + p2 + "\n";
  inst.dict = parse_dictionary(inst.dict_text);

  std::uniform_int_distribution<int32_t> n_dist(1, lim.max_n);
  const int32_t n = n_dist(rng);
  inst.text = random_string(rng, n, inst.sigma);

  if (inst.planted) {
    std::uniform_int_distribution<int32_t> plants(1, 5);
    std::uniform_int_distribution<size_t> which(0, inst.dict.patterns.size() - 1);
    std::uniform_int_distribution<int32_t> gap_dist(alpha, beta);
    const int32_t k = plants(rng);
    for (int32_t q = 0; q < k; ++q) {
      const auto& p = inst.dict.patterns[which(rng)];
      const int32_t gap = gap_dist(rng);
      const int64_t span = static_cast<int64_t>(p.p1.size() + p.p2.size()) + gap;
      if (span > n) continue;
      std::uniform_int_distribution<int64_t> pos_dist(0, n - span);
      const int64_t pos = pos_dist(rng);
      inst.text.replace(static_cast<size_t>(pos), p.p1.size(), p.p1);
      inst.text.replace(static_cast<size_t>(pos) + p.p1.size() + static_cast<size_t>(gap), p.p2.size(), p.p2);
    }
  }
  return inst;
}

}  // namespace gapmatch
