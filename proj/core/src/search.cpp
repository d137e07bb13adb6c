#include "holesat/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace holesat {

namespace {

std::uint64_t count_gons(const PointSet& s, int k) { return enumerate_gons(s, k).size(); }

bool collinear_with(const std::vector<Point>& pts, std::size_t moved) {
  const Point& p = pts[moved];
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i == moved) continue;
    if (pts[i] == p) return true;
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (j != moved && orient(pts[i], pts[j], p) == Orientation::Zero) return true;
  }
  return false;
}

std::uint64_t evaluate(const std::vector<Point>& pts, const SearchObjective& obj) {
  return objective_count(PointSet(pts), obj);
}

SearchResult anneal(int n, const SearchObjective& obj, const SearchParams& params,
                    const std::optional<PointSet>& start, const std::atomic<bool>* stop) {
  if (n < obj.largest()) throw std::invalid_argument("n must be at least the largest size");
  if (params.box < 16) throw std::invalid_argument("coordinate box too small");
  std::mt19937_64 rng(params.seed);
  std::uniform_int_distribution<Coord> coord(-params.box, params.box);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<Point> pts;
  if (start) {
    if (start->size() != static_cast<std::size_t>(n)) throw std::invalid_argument("start set has the wrong size");
    pts.assign(start->points().begin(), start->points().end());
  } else {
    while (static_cast<int>(pts.size()) < n) {
      pts.push_back({coord(rng), coord(rng)});
      if (collinear_with(pts, pts.size() - 1)) pts.pop_back();
    }
  }

  SearchResult result;
  result.seed = params.seed;
  std::uint64_t value = evaluate(pts, obj);
  result.evaluations = 1;
  result.best_value = value;
  const std::uint64_t epochs =
      std::max<std::uint64_t>(1, (params.budget + params.epoch_length - 1) / params.epoch_length);
  double temperature = params.initial_temperature;

  for (std::uint64_t epoch = 0; epoch < epochs && value > 0; ++epoch) {
    const double frac = epochs > 1 ? static_cast<double>(epoch) / static_cast<double>(epochs - 1) : 0;
    const double step = params.max_step * std::pow(params.min_step / params.max_step, frac);
    const auto max_d = std::max<Coord>(1, static_cast<Coord>(step));
    std::uniform_int_distribution<Coord> delta(-max_d, max_d);

    for (std::uint64_t it = 0; it < params.epoch_length && value > 0; ++it) {
      if (result.evaluations >= params.budget) break;
      if (stop && stop->load(std::memory_order_relaxed)) return result;
      const auto i = static_cast<std::size_t>(pick(rng));
      const Point old = pts[i];
      Point moved{std::clamp<Coord>(old.x + delta(rng), -params.box, params.box),
                  std::clamp<Coord>(old.y + delta(rng), -params.box, params.box)};
      if (moved == old) continue;
      pts[i] = moved;
      if (collinear_with(pts, i)) {
        pts[i] = old;
        continue;
      }
      const std::uint64_t candidate = evaluate(pts, obj);
      ++result.evaluations;
      const double diff = static_cast<double>(candidate) - static_cast<double>(value);
      if (diff <= 0 || unit(rng) < std::exp(-diff / temperature)) {
        value = candidate;
        result.best_value = std::min(result.best_value, value);
      } else {
        pts[i] = old;
      }
    }
    if (params.log)
      *params.log << "seed " << params.seed << " epoch " << epoch << " temperature " << temperature
                  << " step " << max_d << " value " << value << " best " << result.best_value
                  << '\n';
    temperature *= params.cooling;
    if (result.evaluations >= params.budget) break;
  }

  if (value == 0) {
    PointSet witness(pts);
    // Fresh re-check: general position is enforced by the constructor.
    if (objective_count(witness, obj) != 0) throw std::logic_error("search witness failed re-check");
    result.witness = std::move(witness);
  }
  return result;
}

}  // namespace

int SearchObjective::largest() const {
  if (sizes.empty()) throw std::invalid_argument("objective needs at least one size");
  return *std::max_element(sizes.begin(), sizes.end());
}

std::string SearchObjective::to_string() const {
  std::string s;
  switch (kind) {
    case ObjectiveKind::DisjointHoles: s = "disjoint-holes"; break;
    case ObjectiveKind::InteriorDisjointHoles: s = "interior-disjoint-holes"; break;
    case ObjectiveKind::Holes: s = "holes"; break;
    case ObjectiveKind::Gons: s = "gons"; break;
  }
  s += ':';
  for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "," : "") + std::to_string(sizes[i]);
  return s;
}

SearchObjective SearchObjective::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("objective must look like kind:sizes");
  const std::string kind = text.substr(0, colon);
  SearchObjective obj;
  if (kind == "disjoint-holes") obj.kind = ObjectiveKind::DisjointHoles;
  else if (kind == "interior-disjoint-holes") obj.kind = ObjectiveKind::InteriorDisjointHoles;
  else if (kind == "holes") obj.kind = ObjectiveKind::Holes;
  else if (kind == "gons") obj.kind = ObjectiveKind::Gons;
  else throw std::invalid_argument("unknown objective kind '" + kind + "'");
  obj.sizes.clear();
  std::istringstream in(text.substr(colon + 1));
  std::string part;
  while (std::getline(in, part, ',')) obj.sizes.push_back(std::stoi(part));
  const bool single = obj.kind == ObjectiveKind::Holes || obj.kind == ObjectiveKind::Gons;
  if (single ? obj.sizes.size() != 1 : obj.sizes.size() < 2)
    throw std::invalid_argument("wrong number of sizes in objective '" + text + "'");
  if (obj.kind == ObjectiveKind::InteriorDisjointHoles && obj.sizes.size() != 2)
    throw std::invalid_argument("interior-disjoint objective takes two sizes");
  for (int k : obj.sizes)
    if (k < 2 || k > 6) throw std::invalid_argument("objective sizes must be between 2 and 6");
  return obj;
}

std::uint64_t objective_count(const PointSet& s, const SearchObjective& obj) {
  switch (obj.kind) {
    case ObjectiveKind::DisjointHoles:
      return count_disjoint_tuples(s, obj.sizes, DisjointMode::Disjoint);
    case ObjectiveKind::InteriorDisjointHoles:
      return count_disjoint_tuples(s, obj.sizes, DisjointMode::InteriorDisjoint);
    case ObjectiveKind::Holes:
      return enumerate_holes(s, obj.sizes.front()).size();
    case ObjectiveKind::Gons:
      return count_gons(s, obj.sizes.front());
  }
  return 0;
}

SearchResult local_search(int n, const SearchObjective& objective, const SearchParams& params,
                          const std::optional<PointSet>& start) {
  return anneal(n, objective, params, start, nullptr);
}

SearchResult parallel_search(int n, const SearchObjective& objective, const SearchParams& params,
                             int restarts, int workers) {
  if (restarts < 1) throw std::invalid_argument("restarts must be positive");
  std::atomic<bool> stop{false};
  std::atomic<int> next{0};
  std::mutex mu;
  std::mutex log_mu;
  std::optional<SearchResult> winner;
  SearchResult best;
  best.best_value = UINT64_MAX;
  std::exception_ptr error;

  auto worker = [&] {
    while (!stop) {
      const int r = next++;
      if (r >= restarts) return;
      SearchParams p = params;
      p.seed = params.seed + static_cast<std::uint64_t>(r);
      std::ostringstream log;
      if (params.log) p.log = &log;
      SearchResult res;
      try {
        res = anneal(n, objective, p, std::nullopt, &stop);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        stop = true;
        return;
      }
      if (params.log) {
        std::lock_guard lock(log_mu);
        *params.log << log.str();
      }
      std::lock_guard lock(mu);
      if (res.witness) {
        if (!winner) winner = std::move(res);
        stop = true;
      } else if (res.best_value < best.best_value) {
        best = std::move(res);
      }
    }
  };
  const int count = std::clamp(workers, 1, restarts);
  std::vector<std::thread> threads;
  for (int t = 1; t < count; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return winner ? std::move(*winner) : best;
}

}  // namespace holesat
