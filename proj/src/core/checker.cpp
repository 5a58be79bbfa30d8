#include "checker.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "ncpoly.hpp"

namespace ringlab {

std::string to_string(TargetKind k) {
  switch (k) {
    case TargetKind::zero: return "armendariz";
    case TargetKind::nil: return "weak";
    case TargetKind::jac: return "j";
  }
  return "?";
}

std::string to_string(SearchMode m) {
  return m == SearchMode::exhaustive ? "exhaustive" : "sample";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::counterexample: return "counterexample";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

std::optional<TargetKind> target_from_string(const std::string& s) {
  if (s == "armendariz" || s == "zero") return TargetKind::zero;
  if (s == "weak" || s == "nil") return TargetKind::nil;
  if (s == "j" || s == "jac") return TargetKind::jac;
  return std::nullopt;
}

ElementSet resolve_target(const FiniteRing& ring, TargetKind kind) {
  switch (kind) {
    case TargetKind::zero: {
      ElementSet s;
      s.ring = ring;
      s.kind = SetKind::ideal;
      s.mask.assign(size_t(ring.table().count()), false);
      s.mask[0] = true;
      s.members = {0};
      return s;
    }
    case TargetKind::nil: return nilpotents(ring);
    case TargetKind::jac: return jacobson_radical(ring);
  }
  fail(Errc::internal, "unreachable");
}

std::vector<uint16_t> annihilator_fiber(const FiniteRing& ring, uint16_t a,
                                        uint16_t c) {
  const TableRing& t = ring.table();
  const uint32_t n = t.count();
  if (a >= n || c >= n) fail(Errc::bad_argument, "fiber arguments out of range");
  std::vector<uint16_t> out;
  for (uint32_t b = 0; b < n; ++b)
    if (t.muli(a, uint16_t(b)) == c) out.push_back(uint16_t(b));
  return out;
}

namespace {

uint64_t fnv64(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

uint64_t sat_pow(uint64_t base, int exp) {
  uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

// Fibers of left multiplication by one fixed element: fibers[c] lists every
// b with a*b = c, ascending.
std::vector<std::vector<uint16_t>> fiber_table(const TableRing& t, uint16_t a) {
  std::vector<std::vector<uint16_t>> fibers(t.count());
  for (uint32_t b = 0; b < t.count(); ++b)
    fibers[t.muli(a, uint16_t(b))].push_back(uint16_t(b));
  return fibers;
}

struct FoundWitness {
  uint64_t ordinal;  // f ordinal (exhaustive) or trial index (sampled)
  SearchWitness witness;
};

// Depth-first solver for one fixed f: enumerates coefficient tuples of g
// satisfying the convolution constraints, checks coefficient products
// against the target at every complete zero-product pair. Stops at the
// first offending pair.
class GSolver {
 public:
  GSolver(const TableRing& t, const std::vector<bool>& target_mask, int deg_g)
      : t_(t), target_(target_mask), dg_(deg_g), b_(size_t(deg_g) + 1, 0) {}

  // Returns the witness for this f, if any; accumulates the number of
  // complete zero-product pairs examined into pairs.
  std::optional<SearchWitness> search(const std::vector<uint16_t>& a,
                                      const std::vector<std::vector<uint16_t>>& fib_a0,
                                      uint64_t& pairs) {
    a_ = &a;
    fib_ = &fib_a0;
    pairs_ = 0;
    found_.reset();
    descend(0);
    pairs += pairs_;
    return found_;
  }

 private:
  // Chooses b_j for j = depth; constraint k = depth reads
  //   a_0*b_j = -(a_1*b_{j-1} + ... ).
  bool descend(int depth) {
    if (depth > dg_) return at_leaf();
    const int da = int(a_->size()) - 1;
    uint16_t rhs = 0;
    for (int i = 1; i <= std::min(depth, da); ++i)
      rhs = t_.addi(rhs, t_.muli((*a_)[size_t(i)], b_[size_t(depth - i)]));
    rhs = t_.negi(rhs);
    for (uint16_t cand : (*fib_)[rhs]) {
      b_[size_t(depth)] = cand;
      if (descend(depth + 1)) return true;
    }
    return false;
  }

  bool at_leaf() {
    const auto& a = *a_;
    const int da = int(a.size()) - 1;
    // Trailing convolution constraints k = dg+1 .. da+dg.
    for (int k = dg_ + 1; k <= da + dg_; ++k) {
      uint16_t sum = 0;
      for (int i = std::max(0, k - dg_); i <= std::min(k, da); ++i)
        sum = t_.addi(sum, t_.muli(a[size_t(i)], b_[size_t(k - i)]));
      if (sum != 0) return false;
    }
    int last = dg_;
    while (last >= 0 && b_[size_t(last)] == 0) --last;
    if (last < 0) return false;  // g = 0 is excluded by definition
    ++pairs_;
    for (int i = 0; i <= da; ++i)
      for (int j = 0; j <= last; ++j) {
        uint16_t p = t_.muli(a[size_t(i)], b_[size_t(j)]);
        if (!target_[p]) {
          SearchWitness w;
          w.f = a;
          w.g.assign(b_.begin(), b_.begin() + last + 1);
          w.i = i;
          w.j = j;
          w.product = p;
          found_ = std::move(w);
          return true;
        }
      }
    return false;
  }

  const TableRing& t_;
  const std::vector<bool>& target_;
  int dg_;
  std::vector<uint16_t> b_;
  const std::vector<uint16_t>* a_ = nullptr;
  const std::vector<std::vector<uint16_t>>* fib_ = nullptr;
  uint64_t pairs_ = 0;
  std::optional<SearchWitness> found_;
};

// Nonzero f tuples in (degree, lexicographic-by-tuple) order; a_0 is the
// most significant position and the leading coefficient is nonzero, so each
// polynomial of degree <= deg_f appears exactly once. There are n^(deg_f+1)-1
// ordinals in total.
std::vector<uint16_t> decode_f(uint64_t ordinal, uint32_t n, int deg_f) {
  for (int d = 0; d <= deg_f; ++d) {
    uint64_t block = sat_pow(n, d) * (n - 1);
    if (ordinal >= block) {
      ordinal -= block;
      continue;
    }
    std::vector<uint16_t> a(size_t(d) + 1, 0);
    a[size_t(d)] = uint16_t(1 + ordinal % (n - 1));
    uint64_t prefix = ordinal / (n - 1);
    for (int i = d - 1; i >= 0; --i) {
      a[size_t(i)] = uint16_t(prefix % n);
      prefix /= n;
    }
    return a;
  }
  fail(Errc::internal, "f ordinal out of range");
}

std::vector<uint16_t> sample_f(std::mt19937_64& rng, uint32_t n, int deg_f) {
  int d = int(rng() % uint64_t(deg_f + 1));
  std::vector<uint16_t> a(size_t(d) + 1);
  for (int i = 0; i < d; ++i) a[size_t(i)] = uint16_t(rng() % n);
  a[size_t(d)] = uint16_t(1 + rng() % (n - 1));
  return a;
}

std::vector<uint16_t> nil_trace(const TableRing& t, uint16_t p) {
  std::vector<uint16_t> trace;
  std::vector<bool> seen(t.count(), false);
  uint16_t y = p;
  while (y != 0 && !seen[y]) {
    seen[y] = true;
    trace.push_back(y);
    y = t.muli(y, p);
  }
  return trace;
}

}  // namespace

ClassificationReport classify(const FiniteRing& ring, const ClassifyOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const TableRing& t = ring.table();
  const uint32_t n = t.count();
  if (opt.deg_f < 0 || opt.deg_g < 0)
    fail(Errc::bad_argument, "degree bounds must be nonnegative");

  ElementSet target = resolve_target(ring, opt.target);

  ClassificationReport rep;
  rep.ring_expr = ring.describe();
  rep.ring_size = n;
  rep.target = opt.target;
  rep.deg_f = opt.deg_f;
  rep.deg_g = opt.deg_g;
  rep.mode = opt.mode;
  rep.target_size = uint32_t(target.count());

  uint64_t total;  // f ordinals (exhaustive) or trials (sampled)
  if (opt.mode == SearchMode::exhaustive) {
    uint64_t est = sat_pow(n, opt.deg_f + 1);
    if (est > opt.budget || est == UINT64_MAX)
      fail(Errc::budget_exceeded,
           "exhaustive search over " + ring.describe() + " needs " +
               std::to_string(est) + " f-tuples, above the budget " +
               std::to_string(opt.budget) + "; use sampled mode");
    total = est - 1;  // every nonzero tuple; zero for the one-element ring
  } else {
    rep.trials = opt.trials;
    // The one-element ring has no nonzero polynomials to sample.
    total = n == 1 ? 0 : opt.trials;
  }

  const uint64_t base_seed =
      fnv64(rep.ring_expr) ^ (uint64_t(opt.target) << 56) ^
      (uint64_t(uint32_t(opt.deg_f)) << 40) ^ (uint64_t(uint32_t(opt.deg_g)) << 24) ^
      opt.trials;

  const int workers = std::max(1, opt.workers);
  std::atomic<uint64_t> next{0};
  std::atomic<uint64_t> best{UINT64_MAX};
  std::vector<std::vector<std::pair<uint64_t, uint64_t>>> counts(
      static_cast<size_t>(workers));
  std::vector<std::vector<FoundWitness>> found(static_cast<size_t>(workers));

  auto run_worker = [&](int wi) {
    GSolver solver(t, target.mask, opt.deg_g);
    uint16_t cached_a0 = 0;
    std::vector<std::vector<uint16_t>> fibers;
    bool have_fibers = false;
    while (true) {
      uint64_t ord = next.fetch_add(1);
      if (ord >= total) break;
      if (ord > best.load(std::memory_order_relaxed)) continue;
      std::vector<uint16_t> a;
      if (opt.mode == SearchMode::exhaustive) {
        a = decode_f(ord, n, opt.deg_f);
      } else {
        std::mt19937_64 rng(base_seed ^ (0x9e3779b97f4a7c15ull * (ord + 1)));
        a = sample_f(rng, n, opt.deg_f);
      }
      if (!have_fibers || a[0] != cached_a0) {
        cached_a0 = a[0];
        fibers = fiber_table(t, cached_a0);
        have_fibers = true;
      }
      uint64_t pairs = 0;
      std::optional<SearchWitness> w = solver.search(a, fibers, pairs);
      if (w) {
        uint64_t prev = best.load();
        while (ord < prev && !best.compare_exchange_weak(prev, ord)) {
        }
        found[size_t(wi)].push_back({ord, std::move(*w)});
      }
      counts[size_t(wi)].push_back({ord, pairs});
    }
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
    for (auto& th : pool) th.join();
  }

  uint64_t best_ord = best.load();
  const FoundWitness* winner = nullptr;
  for (const auto& per_worker : found)
    for (const auto& fw : per_worker)
      if (fw.ordinal == best_ord) winner = &fw;

  uint64_t pairs_total = 0;
  for (const auto& per_worker : counts)
    for (const auto& [ord, cnt] : per_worker)
      if (ord <= best_ord) pairs_total += cnt;
  rep.pairs_examined = pairs_total;

  if (winner) {
    rep.verdict = Verdict::counterexample;
    SearchWitness w = winner->witness;
    if (opt.target == TargetKind::nil) w.nil_power_trace = nil_trace(t, w.product);
    rep.witness = std::move(w);
  } else {
    rep.verdict =
        opt.mode == SearchMode::exhaustive ? Verdict::verified : Verdict::unknown;
  }

  rep.elapsed_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

bool verify_certificate(const FiniteRing& ring, const ClassificationReport& report) {
  const TableRing& t = ring.table();
  const uint32_t n = t.count();
  if (!report.witness) fail(Errc::malformed_witness, "report carries no witness");
  const SearchWitness& w = *report.witness;

  auto as_poly = [&](const std::vector<uint16_t>& idx) {
    std::vector<Elem> coeffs;
    coeffs.reserve(idx.size());
    for (uint16_t i : idx) {
      if (i >= n) fail(Errc::malformed_witness, "witness index out of range");
      coeffs.push_back(Elem::of_int(i));
    }
    return NCPolynomial(ring, std::move(coeffs));
  };

  NCPolynomial f = as_poly(w.f);
  NCPolynomial g = as_poly(w.g);
  if (f.is_zero() || g.is_zero())
    fail(Errc::malformed_witness, "witness polynomials must be nonzero");
  if (w.i < 0 || w.i > f.degree() || w.j < 0 || w.j > g.degree())
    fail(Errc::malformed_witness, "witness product position out of range");

  if (!poly_mul(f, g).is_zero()) return false;
  uint16_t prod = t.muli(uint16_t(f.coeff(size_t(w.i)).as_int()),
                         uint16_t(g.coeff(size_t(w.j)).as_int()));
  if (prod != w.product) return false;
  ElementSet target = resolve_target(ring, report.target);
  return !target.mask[prod];
}

}  // namespace ringlab
