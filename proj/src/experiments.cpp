#include "qmap/experiments.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qmap/bijection.hpp"
#include "qmap/blossom.hpp"
#include "qmap/densities.hpp"
#include "qmap/planar_map.hpp"
#include "qmap/shape.hpp"

namespace qmap {

using nlohmann::json;

namespace {

constexpr std::size_t kChunk = 16;

std::string format_number(double pos_x) {
  std::ostringstream out;
  out << std::setprecision(12) << pos_x;
  return out.str();
}

}  // namespace

ExperimentFailure::ExperimentFailure(const std::string& what, std::uint64_t start)
    : std::runtime_error(what + " (seed " + std::to_string(start) + ")"), seed(start) {}

void parallel_chunks(std::size_t count, std::size_t jobs,
                     const std::function<void(std::size_t, std::size_t)>& body) {
  jobs = std::max<std::size_t>(1, jobs);
  if (jobs == 1 || count <= kChunk) {
    for (std::size_t rhs = 0; rhs < count; rhs += kChunk) body(rhs, std::min(count, rhs + kChunk));
    return;
  }
  std::atomic<std::size_t> cursor{0};
  std::mutex mutex;
  std::size_t failed_at = count;
  std::exception_ptr failure;
  auto worker = [&] {
    for (;;) {
      const auto hit = cursor.fetch_add(kChunk);
      if (hit >= count) return;
      try {
        body(hit, std::min(count, hit + kChunk));
      } catch (...) {
        // Keep the failure with the smallest index so the report does not
        // depend on scheduling.
        std::lock_guard lock(mutex);
        if (hit < failed_at) {
          failed_at = hit;
          failure = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < jobs; ++i) threads.emplace_back(worker);
  for (auto& step : threads) step.join();
  if (failure) std::rethrow_exception(failure);
}

bool coupling_inequalities_hold(const LabelDistribution& well_dist, const LabelDistribution& embedded_dist) {
  const auto top = static_cast<std::int64_t>(std::max(well_dist.counts.size(), embedded_dist.counts.size())) + 2;
  for (std::int64_t level = 1; level <= top; ++level) {
    const auto lw = well_dist.cumulative(level);
    if (embedded_dist.cumulative(level - 2) > lw || lw > embedded_dist.cumulative(level + 2)) return false;
  }
  return true;
}

std::vector<RadiusSample> radius_samples(std::size_t size, std::size_t samples, std::uint64_t seed,
                                         std::size_t jobs) {
  std::vector<RadiusSample> out(samples);
  parallel_chunks(samples, jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      RadiusSample& start = out[i];
      start.size = size;
      start.seed = derive_seed(seed, size, i);
      Rng rng(start.seed);
      const auto pair = sample_well_labelled_coupled(size, rng);
      const auto lu = label_distribution(pair.embedded);
      const auto lw = label_distribution(pair.well_labelled);
      start.min_label = lu.min_label - pair.embedded.root_label;
      start.max_label = lu.max_label - pair.embedded.root_label;
      start.max_well_label = lw.max_label;
      try {
        start.radius = bfs_profile(tree_to_quad(pair.well_labelled)).radius();
      } catch (const std::exception& err) {
        throw ExperimentFailure(err.what(), start.seed);
      }
      if (start.radius != start.max_well_label) {
        throw ExperimentFailure("radius " + std::to_string(start.radius) + " != max label " +
                                    std::to_string(start.max_well_label),
                                start.seed);
      }
      if (std::abs(start.max_well_label - (start.max_label - start.min_label)) > 3) {
        throw ExperimentFailure("coupling bound |mu - (M - m)| <= 3 violated", start.seed);
      }
      if (!coupling_inequalities_hold(lw, lu)) {
        throw ExperimentFailure("coupling inequalities violated", start.seed);
      }
      start.scaled = static_cast<double>(start.radius) / std::pow(static_cast<double>(size), 0.25);
    }
  });
  return out;
}

std::vector<double> scaled_profile(const LabelDistribution& labels, std::size_t size,
                                   const std::vector<double>& x_grid) {
  std::vector<double> curve;
  curve.reserve(x_grid.size());
  const double scale = label_scale(size);
  for (auto pos_x : x_grid) {
    const auto level = static_cast<std::int64_t>(std::floor(scale * pos_x));
    curve.push_back(static_cast<double>(labels.cumulative(level)) / static_cast<double>(size + 1));
  }
  return curve;
}

std::vector<double> averaged_profile(std::size_t size, std::size_t samples, std::uint64_t seed,
                                     std::size_t jobs, const std::vector<double>& x_grid) {
  // Integer sums merge identically whatever the worker layout.
  std::vector<std::int64_t> total(x_grid.size(), 0);
  std::mutex mutex;
  const double scale = label_scale(size);
  std::vector<std::int64_t> levels;
  for (auto pos_x : x_grid) levels.push_back(static_cast<std::int64_t>(std::floor(scale * pos_x)));
  parallel_chunks(samples, jobs, [&](std::size_t begin, std::size_t end) {
    std::vector<std::int64_t> local(x_grid.size(), 0);
    for (std::size_t i = begin; i < end; ++i) {
      Rng rng(derive_seed(seed, size, i));
      const auto pair = sample_well_labelled_coupled(size, rng);
      const auto dist = label_distribution(pair.well_labelled);
      for (std::size_t slot = 0; slot < levels.size(); ++slot) local[slot] += dist.cumulative(levels[slot]);
    }
    std::lock_guard lock(mutex);
    for (std::size_t slot = 0; slot < local.size(); ++slot) total[slot] += local[slot];
  });
  std::vector<double> curve;
  for (auto step : total) {
    curve.push_back(static_cast<double>(step) /
                (static_cast<double>(samples) * static_cast<double>(size + 1)));
  }
  return curve;
}

CouplingReport coupling_check(std::size_t size, std::size_t samples, std::uint64_t seed,
                              std::size_t jobs, bool check_pairs) {
  CouplingReport report;
  report.size = size;
  report.pairs = samples;
  std::mutex mutex;
  std::uint64_t first_bad_index = samples;
  parallel_chunks(samples, jobs, [&](std::size_t begin, std::size_t end) {
    CouplingReport local;
    std::uint64_t local_first = samples;
    for (std::size_t i = begin; i < end; ++i) {
      Rng rng(derive_seed(seed, size, i));
      if (!check_pairs) {
        if (is_well_labelled(sample_embedded(size, rng, 1))) ++local.embedded_well_labelled;
        continue;
      }
      const auto pair = sample_well_labelled_coupled(size, rng);
      const auto lu = label_distribution(pair.embedded);
      const auto lw = label_distribution(pair.well_labelled);
      if (lu.min_label >= 1) ++local.embedded_well_labelled;
      bool bad = false;
      if (!coupling_inequalities_hold(lw, lu)) {
        ++local.inequality_violations;
        bad = true;
      }
      if (std::abs(lw.max_label - lu.span()) > 3) {
        ++local.bound_violations;
        bad = true;
      }
      if (bad && i < local_first) local_first = i;
    }
    std::lock_guard lock(mutex);
    report.inequality_violations += local.inequality_violations;
    report.bound_violations += local.bound_violations;
    report.embedded_well_labelled += local.embedded_well_labelled;
    first_bad_index = std::min(first_bad_index, local_first);
  });
  if (first_bad_index < samples) report.first_violation_seed = derive_seed(seed, size, first_bad_index);
  return report;
}

std::vector<TailPoint> tail_estimate(std::size_t size, std::size_t samples, std::uint64_t seed,
                                     std::size_t jobs, const std::vector<double>& y_grid) {
  std::vector<TailPoint> points;
  for (auto thresh : y_grid) points.push_back({size, thresh, 0, samples});
  std::mutex mutex;
  const double scale = label_scale(size);
  const double count = label_scale_constant();
  parallel_chunks(samples, jobs, [&](std::size_t begin, std::size_t end) {
    std::vector<std::size_t> local(y_grid.size(), 0);
    for (std::size_t i = begin; i < end; ++i) {
      Rng rng(derive_seed(seed, size, i));
      const auto embedded = sample_embedded(size, rng, 0);
      const auto labels = vertex_labels(embedded);
      const double sup = static_cast<double>(*std::max_element(labels.begin(), labels.end())) /
                         scale;
      for (std::size_t slot = 0; slot < y_grid.size(); ++slot) {
        if (sup > count * y_grid[slot]) ++local[slot];
      }
    }
    std::lock_guard lock(mutex);
    for (std::size_t slot = 0; slot < local.size(); ++slot) points[slot].exceed += local[slot];
  });
  return points;
}

double lattice_height_mass(std::size_t size, double tau, double lo, double hi) {
  const auto len = static_cast<std::int64_t>(2 * size);
  const auto step = static_cast<std::int64_t>(std::floor(static_cast<double>(len) * tau));
  if (step <= 0 || step >= len) throw std::domain_error("time must fall strictly inside the path");
  const double scale = height_scale(size);
  const double tl = static_cast<double>(step) / static_cast<double>(len);
  const std::array<double, 1> times{tl};
  const std::span<const double> none;
  double mass = 0.0;
  const auto parity = step % 2;
  auto first = std::max<std::int64_t>(parity == 0 ? 2 : 1,
                                      static_cast<std::int64_t>(std::floor(lo * scale)) - 1);
  if ((first - parity) % 2 != 0) ++first;
  const auto last = std::min<std::int64_t>(
      std::min(step, len - step), static_cast<std::int64_t>(std::ceil(std::min(hi, 1e9) * scale)) + 1);
  for (std::int64_t height = first; height <= last; height += 2) {
    const double pos_x = static_cast<double>(height) / scale;
    if (pos_x < lo || pos_x >= hi) continue;
    const std::array<double, 1> xs{pos_x};
    mass += limit_height_density(xs, none, times) / scale;
  }
  return mass;
}

FidisReport fidis_experiment(std::size_t size, std::size_t samples, std::uint64_t seed,
                             std::size_t jobs, const std::vector<double>& times, std::size_t bins,
                             double window_lo, double window_hi) {
  if (times.empty() || times.size() > 2) throw std::domain_error("fidis supports one or two times");
  if (bins == 0 || !(window_hi > window_lo)) throw std::domain_error("bad chi-square window");
  const auto probs = times.size();
  const auto len = 2 * size;
  std::vector<std::size_t> at;
  for (auto tau : times) at.push_back(static_cast<std::size_t>(std::floor(len * tau)));
  for (std::size_t i = 0; i < probs; ++i) {
    if (at[i] == 0 || at[i] >= len || (i > 0 && at[i] <= at[i - 1])) {
      throw std::domain_error("times must be increasing and fall strictly inside the path");
    }
  }

  // Per sample: heights and labels at the fixed times (and shape binarity).
  std::vector<std::int64_t> heights(samples * probs);
  std::vector<std::int64_t> labels(samples * probs);
  std::vector<char> binary(samples, 1);
  parallel_chunks(samples, jobs, [&](std::size_t begin, std::size_t end) {
    std::vector<std::int64_t> stack;
    std::uniform_int_distribution<int> step(-1, 1);
    for (std::size_t i = begin; i < end; ++i) {
      Rng rng(derive_seed(seed, size, i));
      // Only the contour up to the last fixed time matters.
      const auto walk = sample_dyck_prefix(size, at.back(), rng);
      stack.assign(1, 0);
      std::size_t next = 0;
      for (std::size_t tick = 0; tick < walk.size(); ++tick) {
        if (walk[tick] > 0) {
          stack.push_back(stack.back() + step(rng));
        } else {
          stack.pop_back();
        }
        if (tick + 1 == at[next]) {
          heights[i * probs + next] = static_cast<std::int64_t>(stack.size()) - 1;
          labels[i * probs + next] = stack.back();
          ++next;
        }
      }
      if (probs == 2 && stack.size() == 1) {
        binary[i] = 0;  // the second fixed vertex is the root
      } else if (probs == 2) {
        // Closing the prefix with down steps leaves the shape unchanged.
        std::vector<std::int8_t> closed(walk.steps().begin(), walk.steps().end());
        closed.resize(closed.size() + stack.size() - 1, -1);
        const LatticeWalk path(std::move(closed));
        const std::array<std::int64_t, 2> ts{static_cast<std::int64_t>(at[0]),
                                             static_cast<std::int64_t>(at[1])};
        binary[i] = extract_shape(dyck_to_tree(path), ts).is_binary() ? 1 : 0;
      }
    }
  });

  FidisReport report;
  report.size = size;
  report.samples = samples;
  report.binary_shapes = static_cast<std::size_t>(std::count(binary.begin(), binary.end(), 1));
  const double hs = height_scale(size);
  const double ls = label_scale(size);
  const double width = (window_hi - window_lo) / static_cast<double>(bins);
  for (std::size_t level = 0; level < probs; ++level) {
    FidisMarginal marginal;
    marginal.tau = times[level];
    std::vector<double> observed(bins + 1, 0.0);
    std::vector<double> expected(bins + 1, 0.0);
    std::vector<double> cond_labels;
    double cond_height = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
      const double pos_x = static_cast<double>(heights[i * probs + level]) / hs;
      if (pos_x >= window_lo && pos_x < window_hi) {
        auto rhs = static_cast<std::size_t>((pos_x - window_lo) / width);
        observed[std::min(rhs, bins - 1)] += 1.0;
      } else {
        observed[bins] += 1.0;
      }
      if (pos_x >= 0.9 && pos_x < 1.1) {
        cond_labels.push_back(static_cast<double>(labels[i * probs + level]) / ls);
        cond_height += pos_x;
      }
    }
    double inside = 0.0;
    for (std::size_t rhs = 0; rhs < bins; ++rhs) {
      const double lo = window_lo + width * static_cast<double>(rhs);
      const double hi = rhs + 1 == bins ? window_hi : lo + width;
      const double mass = lattice_height_mass(size, times[level], lo, hi);
      inside += mass;
      expected[rhs] = mass * static_cast<double>(samples);
      marginal.bins.push_back({lo, hi, observed[rhs], expected[rhs]});
    }
    expected[bins] = std::max(0.0, 1.0 - inside) * static_cast<double>(samples);
    marginal.bins.push_back({-INFINITY, INFINITY, observed[bins], expected[bins]});
    marginal.chi_square = chi_square_test(observed, expected);
    marginal.conditional_count = cond_labels.size();
    if (cond_labels.size() >= 2) {
      marginal.conditional_variance_ratio =
          variance(cond_labels) / (cond_height / static_cast<double>(cond_labels.size()));
    }
    report.marginals.push_back(std::move(marginal));
  }
  return report;
}

namespace {

const std::vector<std::string> kConfigKeys{"kind",  "sizes", "samples", "seed",
                                           "output", "jobs", "x_grid",  "y_grid",
                                           "times", "bins",  "window"};

// hi / per_unit and i / per_unit print without rounding noise.
std::vector<double> default_grid(int hi, int per_unit) {
  std::vector<double> grid;
  for (int i = 0; i <= hi * per_unit; ++i) grid.push_back(static_cast<double>(i) / per_unit);
  return grid;
}

json config_json(const ExperimentConfig& cfg, bool with_runtime) {
  json j{{"kind", cfg.kind},       {"sizes", cfg.sizes},   {"samples", cfg.samples},
         {"seed", cfg.seed},       {"x_grid", cfg.x_grid}, {"y_grid", cfg.y_grid},
         {"times", cfg.times},     {"bins", cfg.bins},
         {"window", {cfg.window_lo, cfg.window_hi}}};
  if (with_runtime) {
    j["jobs"] = cfg.jobs;
    j["output"] = cfg.output;
  }
  return j;
}

}  // namespace

ExperimentConfig parse_config(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& err) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + err.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(kConfigKeys.begin(), kConfigKeys.end(), key) == kConfigKeys.end()) {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
  ExperimentConfig cfg;
  try {
    cfg.kind = j.value("kind", cfg.kind);
    cfg.sizes = j.value("sizes", cfg.sizes);
    cfg.samples = j.value("samples", cfg.samples);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.output = j.value("output", cfg.output);
    cfg.jobs = j.value("jobs", cfg.jobs);
    cfg.x_grid = j.value("x_grid", cfg.x_grid);
    cfg.y_grid = j.value("y_grid", cfg.y_grid);
    cfg.times = j.value("times", cfg.times);
    cfg.bins = j.value("bins", cfg.bins);
    if (j.contains("window")) {
      const auto doc = j.at("window").get<std::vector<double>>();
      if (doc.size() != 2) throw std::invalid_argument("window must be [lo, hi]");
      cfg.window_lo = doc[0];
      cfg.window_hi = doc[1];
    }
  } catch (const json::exception& err) {
    throw std::invalid_argument(std::string("bad config value: ") + err.what());
  }
  const std::vector<std::string> kinds{"radius", "profile", "coupling", "tail", "fidis"};
  if (std::find(kinds.begin(), kinds.end(), cfg.kind) == kinds.end()) {
    throw std::invalid_argument("unknown experiment kind: '" + cfg.kind + "'");
  }
  if (cfg.sizes.empty()) throw std::invalid_argument("config needs at least one size");
  if (cfg.samples == 0) throw std::invalid_argument("samples must be positive");
  if (cfg.jobs == 0) throw std::invalid_argument("jobs must be positive");
  for (auto size : cfg.sizes) {
    if (size == 0) throw std::invalid_argument("sizes must be positive");
  }
  if (cfg.x_grid.empty()) cfg.x_grid = default_grid(4, 20);
  if (cfg.y_grid.empty()) cfg.y_grid = default_grid(5, 4);
  if (cfg.times.empty()) cfg.times = {0.5};
  return cfg;
}

std::string config_to_json(const ExperimentConfig& cfg) { return config_json(cfg, true).dump(2); }

std::string run_id(const ExperimentConfig& cfg) {
  const auto text = config_json(cfg, false).dump();
  std::uint64_t height = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    height ^= ch;
    height *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << height;
  return out.str();
}

namespace {

json radius_section(const ExperimentConfig& cfg, std::ostringstream& csv) {
  csv << "n,seed,r,m,M,mu,scaled\n";
  json per_size = json::array();
  for (auto size : cfg.sizes) {
    const auto samples = radius_samples(size, cfg.samples, cfg.seed, cfg.jobs);
    std::vector<double> scaled;
    for (const auto& start : samples) {
      csv << start.size << ',' << start.seed << ',' << start.radius << ',' << start.min_label << ',' << start.max_label
          << ',' << start.max_well_label << ',' << format_number(start.scaled) << '\n';
      scaled.push_back(start.scaled);
    }
    json doc;
    for (double level : {0.1, 0.25, 0.5, 0.75, 0.9}) {
      doc[format_number(level)] = quantile(scaled, level);
    }
    per_size.push_back({{"n", size},
                        {"samples", samples.size()},
                        {"mean_scaled_radius", mean(scaled)},
                        {"variance_scaled_radius", variance(scaled)},
                        {"quantiles", doc}});
  }
  return per_size;
}

json profile_section(const ExperimentConfig& cfg, std::ostringstream& csv) {
  csv << "n,x,F\n";
  json per_size = json::array();
  for (auto size : cfg.sizes) {
    const auto curve = averaged_profile(size, cfg.samples, cfg.seed, cfg.jobs, cfg.x_grid);
    for (std::size_t slot = 0; slot < curve.size(); ++slot) {
      csv << size << ',' << format_number(cfg.x_grid[slot]) << ',' << format_number(curve[slot]) << '\n';
    }
    per_size.push_back({{"n", size}, {"F", curve}});
  }
  return per_size;
}

json coupling_section(const ExperimentConfig& cfg, std::ostringstream& csv, ExperimentResult& report) {
  csv << "n,pairs,violations,well_labelled,p_hat,ci_lo,ci_hi,expected\n";
  json per_size = json::array();
  for (auto size : cfg.sizes) {
    const auto rep = coupling_check(size, cfg.samples, cfg.seed, cfg.jobs, true);
    const auto ci = wilson_interval(rep.embedded_well_labelled, rep.pairs);
    const double p_hat =
        static_cast<double>(rep.embedded_well_labelled) / static_cast<double>(rep.pairs);
    const auto violations = rep.inequality_violations + rep.bound_violations;
    csv << size << ',' << rep.pairs << ',' << violations << ',' << rep.embedded_well_labelled << ','
        << format_number(p_hat) << ',' << format_number(ci.lo) << ',' << format_number(ci.hi)
        << ',' << format_number(rep.expected_fraction()) << '\n';
    if (violations > 0 && report.ok) {
      report.ok = false;
      report.failure = "coupling violated at n = " + std::to_string(size) + " (seed " +
                  std::to_string(rep.first_violation_seed) + ")";
    }
    per_size.push_back(
        {{"n", size},
         {"pairs", rep.pairs},
         {"inequality_violations", rep.inequality_violations},
         {"bound_violations", rep.bound_violations},
         {"well_labelled_fraction", p_hat},
         {"expected_fraction", rep.expected_fraction()},
         {"within_3_sigma",
          within_sigma(rep.embedded_well_labelled, rep.pairs, rep.expected_fraction())}});
  }
  return per_size;
}

json tail_section(const ExperimentConfig& cfg, std::ostringstream& csv, ExperimentResult& report) {
  csv << "n,y,p_hat,ci_lo,ci_hi,exp_minus_y\n";
  json per_size = json::array();
  for (auto size : cfg.sizes) {
    const auto points = tail_estimate(size, cfg.samples, cfg.seed, cfg.jobs, cfg.y_grid);
    std::vector<double> ys, logs;
    for (std::size_t slot = 0; slot < points.size(); ++slot) {
      const auto& pt = points[slot];
      const auto ci = wilson_interval(pt.exceed, pt.samples);
      csv << size << ',' << format_number(pt.threshold) << ',' << format_number(pt.p_hat()) << ','
          << format_number(ci.lo) << ',' << format_number(ci.hi) << ','
          << format_number(std::exp(-pt.threshold)) << '\n';
      if (slot > 0 && pt.threshold >= points[slot - 1].threshold && pt.exceed > points[slot - 1].exceed && report.ok) {
        report.ok = false;
        report.failure = "tail estimate is not monotone in y at n = " + std::to_string(size);
      }
      if (pt.exceed > 0) {
        ys.push_back(pt.threshold);
        logs.push_back(std::log(pt.p_hat()));
      }
    }
    // Least-squares slope of log tail against y, reported only.
    double slope = 0.0;
    if (ys.size() >= 2) {
      const double my = mean(ys), ml = mean(logs);
      double sxy = 0.0, sxx = 0.0;
      for (std::size_t i = 0; i < ys.size(); ++i) {
        sxy += (ys[i] - my) * (logs[i] - ml);
        sxx += (ys[i] - my) * (ys[i] - my);
      }
      slope = sxx > 0 ? sxy / sxx : 0.0;
    }
    per_size.push_back({{"n", size}, {"log_tail_slope", slope}});
  }
  return per_size;
}

json fidis_section(const ExperimentConfig& cfg, std::ostringstream& csv) {
  csv << "n,tau,bin_lo,bin_hi,observed,expected\n";
  json per_size = json::array();
  for (auto size : cfg.sizes) {
    const auto rep = fidis_experiment(size, cfg.samples, cfg.seed, cfg.jobs, cfg.times, cfg.bins,
                                      cfg.window_lo, cfg.window_hi);
    json marginals = json::array();
    for (const auto& marginal : rep.marginals) {
      for (const auto& bin : marginal.bins) {
        csv << size << ',' << format_number(marginal.tau) << ',' << format_number(bin.lo) << ','
            << format_number(bin.hi) << ',' << format_number(bin.observed) << ','
            << format_number(bin.expected) << '\n';
      }
      marginals.push_back({{"tau", marginal.tau},
                           {"chi_square", marginal.chi_square.statistic},
                           {"dof", marginal.chi_square.degrees_of_freedom},
                           {"p_value", marginal.chi_square.p_value},
                           {"conditional_variance_ratio", marginal.conditional_variance_ratio},
                           {"conditional_count", marginal.conditional_count}});
    }
    per_size.push_back({{"n", size},
                        {"samples", rep.samples},
                        {"marginals", marginals},
                        {"binary_shape_fraction", static_cast<double>(rep.binary_shapes) /
                                                      static_cast<double>(rep.samples)}});
  }
  return per_size;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  ExperimentResult report;
  std::ostringstream csv;
  json results;
  try {
    if (cfg.kind == "radius") {
      results = radius_section(cfg, csv);
    } else if (cfg.kind == "profile") {
      results = profile_section(cfg, csv);
    } else if (cfg.kind == "coupling") {
      results = coupling_section(cfg, csv, report);
    } else if (cfg.kind == "tail") {
      results = tail_section(cfg, csv, report);
    } else if (cfg.kind == "fidis") {
      results = fidis_section(cfg, csv);
    } else {
      throw std::invalid_argument("unknown experiment kind: '" + cfg.kind + "'");
    }
  } catch (const ExperimentFailure& err) {
    report.ok = false;
    report.failure = err.what();
  }
  report.csv = csv.str();
  json summary{{"run_id", run_id(cfg)},
               {"config", config_json(cfg, true)},
               {"ok", report.ok},
               {"results", results}};
  if (!report.ok) summary["failure"] = report.failure;
  report.summary_json = summary.dump(2);

  if (!cfg.output.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.output);
    std::ofstream csv_file(fs::path(cfg.output) / (cfg.kind + ".csv"));
    std::ofstream json_file(fs::path(cfg.output) / (cfg.kind + "_summary.json"));
    if (!csv_file || !json_file) throw std::runtime_error("cannot write into " + cfg.output);
    csv_file << report.csv;
    json_file << report.summary_json << '\n';
  }
  return report;
}

}  // namespace qmap
