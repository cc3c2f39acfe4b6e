#include "search.hpp"

namespace onsat {

std::size_t default_workers() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

void validate(const SolverConfig& cfg) {
  if (cfg.n0 < 1) throw Error(ErrorCode::InvalidArgument, "n0 must be at least 1");
  if (cfg.split_depth < 1) throw Error(ErrorCode::InvalidArgument, "split depth must be at least 1");
  if (cfg.workers < 1) throw Error(ErrorCode::InvalidArgument, "workers must be at least 1");
}

std::vector<VarId> SolutionCube::dont_cares() const {
  std::vector<VarId> out;
  for (std::size_t v = 0; v < values.size(); ++v) {
    if (values[v] < 0) out.push_back(static_cast<VarId>(v));
  }
  return out;
}

std::uint64_t SolutionCube::count() const {
  const auto d = dont_cares().size();
  return d >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << d;
}

std::vector<SolutionCube> SolutionCube::expanded() const {
  const auto free = dont_cares();
  if (free.size() > 24) {
    throw Error(ErrorCode::TooManyVariables,
                "refusing to expand " + std::to_string(free.size()) + " don't-care variables");
  }
  std::vector<SolutionCube> out;
  out.reserve(std::size_t{1} << free.size());
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << free.size()); ++idx) {
    SolutionCube c = *this;
    for (std::size_t p = 0; p < free.size(); ++p) {
      c.values[free[p]] = static_cast<std::int8_t>((idx >> (free.size() - 1 - p)) & 1U);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace onsat
