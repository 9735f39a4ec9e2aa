#include "regcat/ybe_solver.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace regcat {

namespace {

constexpr std::uint8_t unset = 0xFF;

struct TripleSlots {
  std::uint8_t xy;  // index of (x, y)
  std::uint8_t yz;  // index of (y, z)
  std::uint8_t ex;  // e(x)
  std::uint8_t ez;  // e(z)
};

enum class Status { violated, open, settled };

struct Job {
  std::size_t e_index;
  std::uint8_t first;  // value of B(0, 0)
};

struct JobResult {
  std::vector<std::vector<Index>> tables;
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
};

// Depth-first assignment of B's table in index order. After each
// assignment every triple not yet settled is partially evaluated on both
// sides of R∘L∘R = L∘R∘L (L = e⊗B, R = B⊗e); a branch dies as soon as one
// component is known on both sides and differs.
class Search {
 public:
  Search(std::size_t n, const std::vector<Index>& e, const YbeProblem& problem,
         bool count_only, std::optional<std::uint64_t> cap)
      : n_(n), size_(n * n), e_(e.begin(), e.end()), bijective_(problem.require_bijective),
        symmetric_(problem.require_symmetric), count_only_(count_only), cap_(cap),
        table_(size_, unset), used_(size_, false) {
    for (std::size_t v = 0; v < size_; ++v) {
      hi_.push_back(static_cast<std::uint8_t>(v / n));
      lo_.push_back(static_cast<std::uint8_t>(v % n));
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          triples_.push_back({static_cast<std::uint8_t>(x * n + y),
                              static_cast<std::uint8_t>(y * n + z), e_[x], e_[z]});
        }
      }
    }
  }

  JobResult run(std::optional<std::uint8_t> first) {
    std::vector<std::uint16_t> active(triples_.size());
    for (std::size_t i = 0; i < active.size(); ++i) active[i] = static_cast<std::uint16_t>(i);
    if (size_ == 0) {
      record();
      return std::move(result_);
    }
    if (first) {
      try_value(0, *first, active);
    } else {
      descend(0, active);
    }
    return std::move(result_);
  }

 private:
  bool done() const { return cap_ && result_.count >= *cap_; }

  void record() {
    ++result_.count;
    if (!count_only_) result_.tables.emplace_back(table_.begin(), table_.end());
  }

  void descend(std::size_t pos, const std::vector<std::uint16_t>& active) {
    for (std::size_t v = 0; v < size_ && !done(); ++v) {
      try_value(pos, static_cast<std::uint8_t>(v), active);
    }
  }

  bool admissible(std::size_t pos, std::uint8_t v) const {
    if (bijective_ && used_[v]) return false;
    if (symmetric_) {
      // B(B(i)) = i for every i.
      if (v < pos && table_[v] != pos) return false;
      for (std::size_t i = 0; i < pos; ++i) {
        if (table_[i] == pos && v != i) return false;
      }
    }
    return true;
  }

  void try_value(std::size_t pos, std::uint8_t v, const std::vector<std::uint16_t>& active) {
    if (!admissible(pos, v)) return;
    ++result_.nodes;
    table_[pos] = v;
    used_[v] = true;
    std::vector<std::uint16_t> still_open;
    still_open.reserve(active.size());
    bool ok = true;
    for (auto t : active) {
      Status s = evaluate(triples_[t]);
      if (s == Status::violated) {
        ok = false;
        break;
      }
      if (s == Status::open) still_open.push_back(t);
    }
    if (ok) {
      if (pos + 1 == size_) {
        record();
      } else {
        descend(pos + 1, still_open);
      }
    }
    table_[pos] = unset;
    used_[v] = false;
  }

  Status evaluate(const TripleSlots& t) const {
    int l1 = -1, l2 = -1, l3 = -1, r1 = -1, r2 = -1, r3 = -1;
    // R∘L∘R: (x,y,z) → (a,b,ez) → (e a, c, d) → (B(e a, c), e d)
    const std::uint8_t v1 = table_[t.xy];
    if (v1 != unset) {
      const std::uint8_t v2 = table_[lo_[v1] * n_ + t.ez];
      if (v2 != unset) {
        l3 = e_[lo_[v2]];
        const std::uint8_t v3 = table_[e_[hi_[v1]] * n_ + hi_[v2]];
        if (v3 != unset) {
          l1 = hi_[v3];
          l2 = lo_[v3];
        }
      }
    }
    // L∘R∘L: (x,y,z) → (ex,p,q) → (r, s, e q) → (e r, B(s, e q))
    const std::uint8_t w1 = table_[t.yz];
    if (w1 != unset) {
      const std::uint8_t w2 = table_[t.ex * n_ + hi_[w1]];
      if (w2 != unset) {
        r1 = e_[hi_[w2]];
        const std::uint8_t w3 = table_[lo_[w2] * n_ + e_[lo_[w1]]];
        if (w3 != unset) {
          r2 = hi_[w3];
          r3 = lo_[w3];
        }
      }
    }
    if (l1 >= 0 && r1 >= 0 && l1 != r1) return Status::violated;
    if (l3 >= 0 && r3 >= 0 && l3 != r3) return Status::violated;
    if (l2 >= 0 && r2 >= 0 && l2 != r2) return Status::violated;
    return l1 >= 0 && r3 >= 0 ? Status::settled : Status::open;
  }

  std::size_t n_;
  std::size_t size_;
  std::vector<std::uint8_t> e_;
  bool bijective_;
  bool symmetric_;
  bool count_only_;
  std::optional<std::uint64_t> cap_;
  std::vector<std::uint8_t> hi_, lo_;
  std::vector<TripleSlots> triples_;
  std::vector<std::uint8_t> table_;
  std::vector<bool> used_;
  JobResult result_;
};

}  // namespace

YbeSolveResult solve_ybe(const YbeProblem& problem, const YbeSolverOptions& options) {
  const std::size_t n = problem.size;
  if (n > options.max_size) {
    throw Error(Errc::CarrierTooLarge,
                std::to_string(n) + " > " + std::to_string(options.max_size));
  }
  if (n * n > 0xFE) throw Error(Errc::CarrierTooLarge, std::to_string(n));

  YbeSolveResult out;
  out.carrier = FiniteSet::range("X", n);

  std::vector<std::vector<Index>> obstructors;
  switch (problem.obstructors) {
    case ObstructorChoice::identity:
      obstructors.push_back(identity(out.carrier).table());
      break;
    case ObstructorChoice::all:
      for (const auto& e : enumerate_idempotents(out.carrier)) obstructors.push_back(e.table());
      break;
    case ObstructorChoice::given: {
      FinMap e("e", out.carrier, out.carrier, problem.given_e);
      if (!is_idempotent(e)) throw Error(Errc::NotIdempotent, "e");
      obstructors.push_back(e.table());
      break;
    }
  }
  if (problem.mode == YbeMode::classical) {
    for (const auto& e : obstructors) {
      if (!is_identity(FinMap("e", out.carrier, out.carrier, e))) {
        throw Error(Errc::InvalidArgument, "classical mode needs the identity obstructor");
      }
    }
  }

  std::vector<Job> jobs;
  for (std::size_t i = 0; i < obstructors.size(); ++i) {
    if (n == 0) {
      jobs.push_back({i, unset});
      continue;
    }
    for (std::size_t v = 0; v < n * n; ++v) jobs.push_back({i, static_cast<std::uint8_t>(v)});
  }

  // Each job is capped one past the limit so the merge can tell whether
  // the limit truncated anything.
  std::optional<std::uint64_t> cap;
  if (options.limit) cap = *options.limit + 1;

  std::vector<JobResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
      const Job& job = jobs[j];
      Search search(n, obstructors[job.e_index], problem, options.count_only, cap);
      std::optional<std::uint8_t> first;
      if (n > 0) first = job.first;
      results[j] = search.run(first);
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(options.jobs,
                                                           static_cast<unsigned>(jobs.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (std::size_t j = 0; j < jobs.size(); ++j) {
    auto& r = results[j];
    out.nodes += r.nodes;
    for (std::uint64_t k = 0; k < r.count; ++k) {
      if (options.limit && out.count >= *options.limit) {
        out.truncated = true;
        break;
      }
      ++out.count;
      if (!options.count_only) {
        out.solutions.push_back({obstructors[jobs[j].e_index], std::move(r.tables[k])});
      }
    }
  }
  return out;
}

Braiding solution_braiding(const SetRef& carrier, const YbeSolution& s) {
  return Braiding::from_table("B", carrier, carrier, s.b);
}

FinMap solution_obstructor(const SetRef& carrier, const YbeSolution& s) {
  return FinMap("e", carrier, carrier, s.e);
}

}  // namespace regcat
