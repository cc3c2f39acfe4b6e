#pragma once

// Tree-search driver shared by the Boolean-system and CNF solvers. A node
// either closes (conflict), emits solution cubes, or branches into
// independent children; children run on the work-stealing pool.

#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "boolalg.hpp"
#include "work_pool.hpp"

namespace onsat {

enum class SolveMode { Decide, Enumerate };
enum class SolveStatus { Sat, Unsat };

std::size_t default_workers();

struct SolverConfig {
  std::size_t n0 = 16;           // brute force at or below this many variables
  std::size_t split_depth = 3;   // literals per splitting chain
  std::size_t workers = default_workers();
  SolveMode mode = SolveMode::Decide;
  bool expand_dont_cares = false;
  bool verify_solutions = true;  // re-check every cube against the root problem
};

/// Throws InvalidArgument unless n0, split_depth and workers are all >= 1.
void validate(const SolverConfig& cfg);

/// Solution over the root variables: 0, 1, or -1 for don't-care.
struct SolutionCube {
  std::vector<std::int8_t> values;

  std::vector<VarId> dont_cares() const;
  /// Every total assignment the cube stands for.
  std::vector<SolutionCube> expanded() const;
  std::uint64_t count() const;

  friend bool operator==(const SolutionCube&, const SolutionCube&) = default;
  friend auto operator<=>(const SolutionCube&, const SolutionCube&) = default;
};

struct SolveStats {
  std::size_t nodes = 0;
  std::size_t leaves = 0;
  std::size_t conflicts = 0;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::Unsat;
  std::vector<SolutionCube> solutions;  // empty when a callback consumed them
  SolveStats stats;
};

/// Receives each solution; returning false stops the search.
using SolutionCallback = std::function<bool(const SolutionCube&)>;
/// Throws when a cube does not solve the root problem.
using CubeVerifier = std::function<void(const SolutionCube&)>;

namespace detail {

class SearchSink {
 public:
  SearchSink(const SolverConfig& cfg, SolutionCallback callback, CubeVerifier verifier,
             WorkStealingPool& pool)
      : cfg_(cfg), callback_(std::move(callback)), verifier_(std::move(verifier)), pool_(pool) {}

  /// False once the search should stop.
  bool emit(const SolutionCube& cube) {
    if (cfg_.verify_solutions && verifier_) verifier_(cube);
    std::lock_guard lk(m_);
    if (done_) return false;
    found_ = true;
    auto deliver = [&](const SolutionCube& c) {
      if (callback_) {
        if (!callback_(c)) done_ = true;
      } else {
        solutions_.push_back(c);
      }
    };
    if (cfg_.expand_dont_cares) {
      for (const auto& c : cube.expanded()) {
        deliver(c);
        if (done_) break;
      }
    } else {
      deliver(cube);
    }
    if (cfg_.mode == SolveMode::Decide) done_ = true;
    if (done_) pool_.cancel();
    return !done_;
  }

  bool stopped() const {
    std::lock_guard lk(m_);
    return done_;
  }

  bool found() const {
    std::lock_guard lk(m_);
    return found_;
  }
  std::vector<SolutionCube> take() { return std::move(solutions_); }

  std::atomic<std::size_t> nodes{0};
  std::atomic<std::size_t> leaves{0};
  std::atomic<std::size_t> conflicts{0};

 private:
  const SolverConfig& cfg_;
  SolutionCallback callback_;
  CubeVerifier verifier_;
  WorkStealingPool& pool_;
  mutable std::mutex m_;
  bool done_ = false;
  bool found_ = false;
  std::vector<SolutionCube> solutions_;
};

}  // namespace detail

/// What a node expansion may do.
template <class Node>
class Frontier {
 public:
  explicit Frontier(detail::SearchSink& sink) : sink_(sink) {}

  void branch(Node child) { children_.push_back(std::move(child)); }
  bool emit(const SolutionCube& cube) { return sink_.emit(cube); }
  void conflict() { sink_.conflicts.fetch_add(1, std::memory_order_relaxed); }
  void leaf() { sink_.leaves.fetch_add(1, std::memory_order_relaxed); }
  bool stopped() const { return sink_.stopped(); }

  std::vector<Node>& children() { return children_; }

 private:
  detail::SearchSink& sink_;
  std::vector<Node> children_;
};

/// Runs expand(Node&&, Frontier<Node>&) over the tree rooted at root. With one
/// worker, children run depth-first in the order they were branched.
template <class Node, class Expand>
SolveOutcome run_search(Node root, const SolverConfig& cfg, Expand expand,
                        const SolutionCallback& callback, CubeVerifier verifier) {
  validate(cfg);
  WorkStealingPool pool(cfg.workers);
  detail::SearchSink sink(cfg, callback, std::move(verifier), pool);

  std::function<void(Node)> process = [&](Node node) {
    sink.nodes.fetch_add(1, std::memory_order_relaxed);
    Frontier<Node> frontier(sink);
    expand(std::move(node), frontier);
    auto& kids = frontier.children();
    // The pool pops its own deque LIFO; submit in reverse for in-order visits.
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      pool.submit([&process, child = std::move(*it)]() mutable { process(std::move(child)); });
    }
  };
  pool.submit([&process, r = std::move(root)]() mutable { process(std::move(r)); });
  pool.wait();

  SolveOutcome out;
  out.status = sink.found() ? SolveStatus::Sat : SolveStatus::Unsat;
  out.solutions = sink.take();
  out.stats = {sink.nodes.load(), sink.leaves.load(), sink.conflicts.load()};
  return out;
}

}  // namespace onsat
