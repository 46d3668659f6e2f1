#include "davkit/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "davkit/bounds.hpp"

namespace davkit {

namespace {

using Clock = std::chrono::steady_clock;
using Path = std::vector<std::uint32_t>;


void or_shifted(std::uint64_t* dst, const std::uint64_t* src, std::size_t nw, i64 shift) {
  if (shift >= 0) {
    const auto ws = static_cast<std::size_t>(shift / 64);
    const unsigned bs = static_cast<unsigned>(shift % 64);
    for (std::size_t i = nw; i-- > ws;) {
      std::uint64_t v = src[i - ws] << bs;
      if (bs != 0 && i - ws > 0) v |= src[i - ws - 1] >> (64 - bs);
      dst[i] |= v;
    }
  } else {
    const auto ws = static_cast<std::size_t>(-shift / 64);
    const unsigned bs = static_cast<unsigned>(-shift % 64);
    for (std::size_t i = 0; i + ws < nw; ++i) {
      std::uint64_t v = src[i + ws] >> bs;
      if (bs != 0 && i + ws + 1 < nw) v |= src[i + ws + 1] << (64 - bs);
      dst[i] |= v;
    }
  }
}

struct BranchResult {
  bool complete = true;
  i64 best = 0;
  Path best_path;
  std::vector<Path> atoms;
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  std::uint64_t atoms_met = 0;
};

// The alphabet is sorted; a multiset is grown by appending elements of
// non-decreasing index, so every multiset is visited once and in
// lexicographic order. Each level keeps the set of nonempty sub-multiset sums
// of the current prefix: a zero-sum free prefix extended by x stays zero-sum
// free iff -x is not already a subsum and the total is nonzero, and it
// becomes an atom iff the total is zero.
//
// A sum is keyed by its group layer and its offset in the box of lattice sums
// reachable within the depth. Small boxes use a bitset per level, large ones
// a sorted vector of keys.
class Engine {
 public:
  enum class Mode { kLongest, kExactLength };

  Engine(const GroupSpec& group, std::vector<MixedElement> alphabet, i64 depth, Mode mode)
      : group_(group), alphabet_(std::move(alphabet)), depth_(depth), mode_(mode) {
    rank_ = group_.rank();
    dim_ = alphabet_.front().lattice.dim();
    const std::size_t n = alphabet_.size();

    std::vector<i64> amp(dim_, 0);
    for (const auto& e : alphabet_) {
      for (std::size_t j = 0; j < dim_; ++j) amp[j] = std::max(amp[j], checked_abs(e.lattice[j]));
    }
    reach_.resize(dim_);
    stride_.resize(dim_);
    unsigned __int128 width = 1;
    for (std::size_t j = dim_; j-- > 0;) {
      reach_[j] = checked_mul(depth_, amp[j]);
      stride_[j] = static_cast<i64>(width);
      width *= static_cast<unsigned __int128>(checked_add(checked_mul(2, reach_[j]), 1));
      if (width > kMaxKeySpace) too_large();
    }
    layers_ = static_cast<std::size_t>(group_.order());
    if (width * layers_ > kMaxKeySpace) too_large();
    width_ = static_cast<std::uint64_t>(width);
    layer_words_ = static_cast<std::size_t>((width + 63) / 64);
    dense_ = layers_ * layer_words_ <= kDenseWords;
    words_ = dense_ ? layers_ * layer_words_ : 0;

    const i64 origin = lattice_offset(std::vector<i64>(dim_, 0));
    offset_.resize(n);
    shift_.resize(n);
    own_key_.resize(n);
    neg_key_.resize(n);
    target_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& e = alphabet_[i];
      offset_[i] = lattice_offset(e.lattice.coords());
      shift_[i] = offset_[i] - origin;
      own_key_[i] = key(layer_index(e.group_part), offset_[i]);
      const MixedElement neg = negate(group_, e);
      neg_key_[i] = key(layer_index(neg.group_part), lattice_offset(neg.lattice.coords()));
      target_[i].resize(layers_);
      for (std::size_t h = 0; h < layers_; ++h) target_[i][h] = add_layers(h, e.group_part);
    }

    // Per-axis min and max over each alphabet suffix, for the completion test.
    suffix_min_.assign(n * dim_, 0);
    suffix_max_.assign(n * dim_, 0);
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = 0; j < dim_; ++j) {
        const i64 c = alphabet_[i].lattice[j];
        const bool last = i + 1 == n;
        suffix_min_[i * dim_ + j] = last ? c : std::min(c, suffix_min_[(i + 1) * dim_ + j]);
        suffix_max_[i * dim_ + j] = last ? c : std::max(c, suffix_max_[(i + 1) * dim_ + j]);
      }
    }
  }

  std::size_t size() const noexcept { return alphabet_.size(); }

  void set_limits(std::uint64_t max_nodes, std::optional<Clock::time_point> deadline,
                  std::atomic<bool>* stop) {
    max_nodes_ = max_nodes;
    deadline_ = deadline;
    stop_ = stop;
  }

  // Explores every multiset whose smallest element is alphabet_[root].
  BranchResult run_branch(std::size_t root) const {
    Worker w(*this);
    w.extend(0, root, root);
    return std::move(w.result);
  }

  Sequence to_sequence(const Path& path) const {
    Sequence s(group_, dim_);
    for (auto i : path) s.add(alphabet_[i]);
    return s;
  }

 private:
  static constexpr unsigned __int128 kMaxKeySpace = static_cast<unsigned __int128>(1) << 62;
  static constexpr std::size_t kDenseWords = 4096;

  [[noreturn]] static void too_large() {
    throw CapExceeded("subsum key space too large for this ground set and depth; lower the depth cap");
  }

  i64 lattice_offset(const std::vector<i64>& c) const {
    i64 off = 0;
    for (std::size_t j = 0; j < dim_; ++j) off += (c[j] + reach_[j]) * stride_[j];
    return off;
  }

  std::size_t layer_index(const std::vector<i64>& g) const {
    std::size_t h = 0;
    for (std::size_t t = 0; t < rank_; ++t) {
      h = h * static_cast<std::size_t>(group_.factors()[t]) + static_cast<std::size_t>(g[t]);
    }
    return h;
  }

  std::uint32_t add_layers(std::size_t h, const std::vector<i64>& g) const {
    std::vector<i64> res(rank_);
    for (std::size_t t = rank_; t-- > 0;) {
      const auto n = static_cast<std::size_t>(group_.factors()[t]);
      res[t] = static_cast<i64>(h % n);
      h /= n;
    }
    for (std::size_t t = 0; t < rank_; ++t) res[t] = (res[t] + g[t]) % group_.factors()[t];
    return static_cast<std::uint32_t>(layer_index(res));
  }

  // Bit index in the dense layout, sorted key in the sparse one.
  std::uint64_t key(std::size_t layer, i64 offset) const {
    const std::uint64_t base = dense_ ? layer_words_ * 64 : width_;
    return layer * base + static_cast<std::uint64_t>(offset);
  }

  // Can a multiset of size in [kmin, kmax] drawn from alphabet_[from..] cancel
  // the lattice part of `sum`? Each axis bounds the size through the suffix
  // minimum and maximum.
  bool completable(const i64* sum, std::size_t from, i64 kmin, i64 kmax) const {
    i64 lo = kmin;
    i64 hi = kmax;
    for (std::size_t j = 0; j < dim_ && lo <= hi; ++j) {
      const i64 t = -sum[j];
      const i64 mn = suffix_min_[from * dim_ + j];
      const i64 mx = suffix_max_[from * dim_ + j];
      if (mx > 0) {
        lo = std::max(lo, ceil_div(t, mx));
      } else if (mx == 0) {
        if (t > 0) return false;
      } else {
        hi = std::min(hi, floor_div(t, mx));
      }
      if (mn < 0) {
        lo = std::max(lo, ceil_div(t, mn));
      } else if (mn == 0) {
        if (t < 0) return false;
      } else {
        hi = std::min(hi, floor_div(t, mn));
      }
    }
    return lo <= hi;
  }

  struct Worker {
    explicit Worker(const Engine& engine)
        : e(engine),
          sums(static_cast<std::size_t>(engine.depth_ + 1) * engine.dim_, 0),
          group_sums(static_cast<std::size_t>(engine.depth_ + 1) * engine.rank_, 0) {
      levels.reserve(static_cast<std::size_t>(engine.depth_) + 1);
      levels.emplace_back(e.words_, 0);
    }

    bool out_of_budget() {
      if (e.max_nodes_ != 0 && result.nodes > e.max_nodes_) return true;
      // Sparse nodes can each cost a large set union, so they check every time.
      if (!e.dense_ || (result.nodes & 1023) == 0) {
        if (e.stop_ != nullptr && e.stop_->load(std::memory_order_relaxed)) return true;
        if (e.deadline_ && Clock::now() > *e.deadline_) {
          if (e.stop_ != nullptr) e.stop_->store(true);
          return true;
        }
      }
      return false;
    }

    void record(i64 length) {
      ++result.atoms_met;
      if (e.mode_ == Mode::kExactLength) {
        if (length == e.depth_) result.atoms.push_back(path);
        return;
      }
      if (length > result.best) {
        result.best = length;
        result.best_path = path;
      }
    }

    bool has_subsum(std::size_t k, std::uint64_t key) const {
      const auto& lv = levels[k];
      if (e.dense_) return ((lv[key / 64] >> (key % 64)) & 1U) != 0;
      return std::binary_search(lv.begin(), lv.end(), key);
    }

    // levels[k + 1] = levels[k] + (levels[k] shifted by x) + {x}.
    void push_subsums(std::size_t k, std::size_t i) {
      if (levels.size() <= k + 1) levels.emplace_back(e.words_, 0);
      const auto& cur = levels[k];
      auto& next = levels[k + 1];
      if (e.dense_) {
        std::copy(cur.begin(), cur.end(), next.begin());
        const std::size_t lw = e.layer_words_;
        for (std::size_t h = 0; h < e.layers_; ++h) {
          or_shifted(next.data() + e.target_[i][h] * lw, cur.data() + h * lw, lw, e.shift_[i]);
        }
        const std::uint64_t own = e.own_key_[i];
        next[own / 64] |= std::uint64_t{1} << (own % 64);
        return;
      }
      shifted.clear();
      for (std::uint64_t key : cur) {
        const std::uint64_t layer = key / e.width_;
        const std::uint64_t off = key % e.width_;
        shifted.push_back(e.target_[i][layer] * e.width_ + off + static_cast<std::uint64_t>(e.shift_[i]));
      }
      shifted.push_back(e.own_key_[i]);
      std::sort(shifted.begin(), shifted.end());
      next.clear();
      std::set_union(cur.begin(), cur.end(), shifted.begin(), shifted.end(), std::back_inserter(next));
    }

    // The prefix path[0..k) is zero-sum free with subsums in levels[k] and
    // lattice/group sums in slot k. Tries appending alphabet_[i] for i in
    // [from, to].
    void extend(i64 k, std::size_t from, std::size_t to) {
      const auto ku = static_cast<std::size_t>(k);
      const std::size_t dim = e.dim_;
      const std::size_t rank = e.rank_;
      for (std::size_t i = from; i <= to && i < e.alphabet_.size(); ++i) {
        if (!result.complete) return;
        ++result.nodes;
        if (out_of_budget()) {
          result.complete = false;
          return;
        }
        const MixedElement& x = e.alphabet_[i];
        path.push_back(static_cast<std::uint32_t>(i));
        if (x.is_zero()) {
          if (k == 0) record(1);
          else ++result.prunes;
          path.pop_back();
          continue;
        }
        const i64* cur = sums.data() + ku * dim;
        i64* nxt = sums.data() + (ku + 1) * dim;
        bool zero = true;
        for (std::size_t j = 0; j < dim; ++j) {
          nxt[j] = cur[j] + x.lattice[j];
          zero = zero && nxt[j] == 0;
        }
        const i64* gcur = group_sums.data() + ku * rank;
        i64* gnxt = group_sums.data() + (ku + 1) * rank;
        for (std::size_t t = 0; t < rank; ++t) {
          gnxt[t] = (gcur[t] + x.group_part[t]) % e.group_.factors()[t];
          zero = zero && gnxt[t] == 0;
        }
        if (zero) {
          record(k + 1);
          path.pop_back();
          continue;
        }
        if (k > 0 && has_subsum(ku, e.neg_key_[i])) {
          ++result.prunes;
          path.pop_back();
          continue;
        }
        // Sizes a completion may take: exactly the rest in the fixed-length
        // mode, otherwise enough to beat the best atom of this branch.
        const i64 len = k + 1;
        const i64 kmax = e.depth_ - len;
        const i64 kmin = e.mode_ == Mode::kExactLength ? kmax : std::max<i64>(1, result.best + 1 - len);
        if (kmax < 1 || kmin > kmax || !e.completable(nxt, i, kmin, kmax)) {
          ++result.prunes;
          path.pop_back();
          continue;
        }
        push_subsums(ku, i);
        extend(len, i, e.alphabet_.size() - 1);
        path.pop_back();
      }
    }

    const Engine& e;
    std::vector<std::vector<std::uint64_t>> levels;
    std::vector<std::uint64_t> shifted;
    std::vector<i64> sums;
    std::vector<i64> group_sums;
    Path path;
    BranchResult result;
  };

  GroupSpec group_;
  std::vector<MixedElement> alphabet_;
  i64 depth_;
  Mode mode_;
  std::size_t rank_ = 0;
  std::size_t dim_ = 1;
  std::vector<i64> reach_;
  std::vector<i64> stride_;
  std::size_t layers_ = 1;
  std::uint64_t width_ = 1;
  std::size_t layer_words_ = 1;
  bool dense_ = true;
  std::size_t words_ = 0;
  std::vector<i64> offset_;
  std::vector<i64> shift_;
  std::vector<std::uint64_t> own_key_;
  std::vector<std::uint64_t> neg_key_;
  std::vector<std::vector<std::uint32_t>> target_;
  std::vector<i64> suffix_min_;
  std::vector<i64> suffix_max_;
  std::uint64_t max_nodes_ = 0;
  std::optional<Clock::time_point> deadline_;
  std::atomic<bool>* stop_ = nullptr;
};

struct RunOutcome {
  std::vector<BranchResult> branches;
  bool complete = true;
  SearchStats stats;
};

std::optional<Clock::time_point> deadline_from(const SearchOptions& options, Clock::time_point start) {
  if (options.time_limit_seconds <= 0) return std::nullopt;
  return start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(options.time_limit_seconds));
}

RunOutcome run_engine(Engine& engine, const SearchOptions& options, std::optional<Clock::time_point> deadline) {
  const auto start = Clock::now();
  std::atomic<bool> stop{false};
  engine.set_limits(options.max_nodes, deadline, &stop);

  const std::size_t n = engine.size();
  RunOutcome out;
  out.branches.resize(n);
  unsigned threads = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));

  std::atomic<std::size_t> next{0};
  std::mutex progress_mutex;
  std::size_t done = 0;
  i64 best_so_far = 0;
  std::uint64_t nodes_so_far = 0;
  std::exception_ptr failure;

  auto work = [&] {
    try {
      for (std::size_t i = next++; i < n; i = next++) {
        out.branches[i] = engine.run_branch(i);
        std::lock_guard lock(progress_mutex);
        ++done;
        best_so_far = std::max(best_so_far, out.branches[i].best);
        nodes_so_far += out.branches[i].nodes;
        if (options.progress) options.progress({done, n, best_so_far, nodes_so_far});
      }
    } catch (...) {
      std::lock_guard lock(progress_mutex);
      if (!failure) failure = std::current_exception();
      stop = true;
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  for (const auto& b : out.branches) {
    out.complete = out.complete && b.complete;
    out.stats.nodes += b.nodes;
    out.stats.prunes += b.prunes;
    out.stats.atoms += b.atoms_met;
  }
  out.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

i64 sign_trivial_bound(const std::vector<Interval>& box, bool has_zero) {
  const auto& a = box.front();
  if (a.lo >= 0 || a.hi <= 0) return has_zero ? 1 : 0;
  return checked_sub(a.hi, a.lo);
}

i64 lattice_length_bound(const LatticeSet& x) {
  const auto box = bounding_box(x);
  if (box.size() == 1) return sign_trivial_bound(box, contains(x, Element::scalar(0)));
  const auto half = enclosing_half_widths(x);
  if (std::all_of(half.begin(), half.end(), [](i64 m) { return m == 0; })) return 1;
  return box_upper(half);
}

}  // namespace

i64 length_bound(const GroundSet& ground) {
  validate(ground);
  if (auto p = std::get_if<GroupProduct>(&ground)) {
    return checked_mul(group_davenport(p->group).upper, lattice_length_bound(p->base));
  }
  return lattice_length_bound(lattice_part(ground));
}

DavenportResult davenport(const GroundSet& ground, const SearchOptions& options) {
  const i64 bound = length_bound(ground);
  if (options.cap && *options.cap < 0) throw InvalidArgument("depth cap must be non-negative");
  const i64 depth = options.cap ? std::min(*options.cap, bound) : bound;
  const BoundReport closed = best_bounds(ground);
  const auto start = Clock::now();

  DavenportResult r;
  r.depth = depth;
  bool searched_all = true;
  if (depth > 0) {
    Engine engine(group_of(ground), enumerate(ground, options.element_cap), depth, Engine::Mode::kLongest);
    RunOutcome run = run_engine(engine, options, deadline_from(options, start));
    r.stats = run.stats;
    searched_all = run.complete;
    for (const auto& b : run.branches) {
      if (b.best > r.lower) {
        r.lower = b.best;
        r.witness = engine.to_sequence(b.best_path);
      }
    }
  }
  r.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.complete = searched_all && depth == bound;
  if (r.complete) {
    r.upper = r.lower;
    r.provenance = {"search.exhaustive"};
    if (r.lower < closed.lower || r.lower > closed.upper) {
      throw ConsistencyError("exhaustive search gives D = " + std::to_string(r.lower) +
                             " outside the closed-form bracket [" + std::to_string(closed.lower) + ", " +
                             std::to_string(closed.upper) + "]");
    }
  } else {
    r.upper = std::min(bound, closed.upper);
    if (r.lower > r.upper) {
      throw ConsistencyError("search found an atom of length " + std::to_string(r.lower) +
                             " above the proved upper bound " + std::to_string(r.upper));
    }
    r.provenance = {"search.partial"};
    r.provenance.insert(r.provenance.end(), closed.provenance.begin(), closed.provenance.end());
  }
  r.exact = r.lower == r.upper;
  return r;
}

std::vector<Sequence> atoms_of_length(const GroundSet& ground, i64 length, const SearchOptions& options) {
  if (length < 1) throw InvalidArgument("atom length must be >= 1");
  if (length > length_bound(ground)) return {};
  Engine engine(group_of(ground), enumerate(ground, options.element_cap), length, Engine::Mode::kExactLength);
  RunOutcome run = run_engine(engine, options, deadline_from(options, Clock::now()));
  if (!run.complete) throw CapExceeded("atom enumeration stopped by the node or time limit");
  std::vector<Sequence> out;
  for (const auto& b : run.branches) {
    for (const auto& p : b.atoms) out.push_back(engine.to_sequence(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Sequence> max_atoms(const GroundSet& ground, const SearchOptions& options) {
  SearchOptions full = options;
  full.cap.reset();
  const DavenportResult r = davenport(ground, full);
  if (!r.exact) throw CapExceeded("D is not settled, so the maximal atoms cannot be listed");
  if (r.lower == 0) return {};
  return atoms_of_length(ground, r.lower, full);
}

}  // namespace davkit
