#include "tunnel_atlas/oracle.hpp"

#include "tunnel_atlas/errors.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <utility>

namespace tunnel_atlas {

namespace {

// (1 + sqrt 2)^n - (1 - sqrt 2)^n, divided by sqrt 2. The rational parts
// must cancel.
BigInt pell_difference(unsigned long n) {
  const QuadraticInteger<BigInt> silver{BigInt(1), BigInt(1)};
  const auto plus = silver.pow(n);
  const auto minus = silver.conjugate().pow(n);
  if (plus.x != minus.x) {
    throw std::logic_error("rational parts of conjugate powers differ");
  }
  return plus.y - minus.y;
}

} // namespace

BigInt min_bridge_closed_form(long depth) {
  detail::require_at_least(depth, 1, "depth");
  return pell_difference(static_cast<unsigned long>(depth));
}

BigInt torus_min_bridge_closed_form(long depth) {
  detail::require_at_least(depth, 1, "depth");
  const BigInt twice = pell_difference(static_cast<unsigned long>(depth) + 1);
  return twice / 2;
}

bool closed_form_check(long d_max) {
  detail::require_at_least(d_max, 1, "d_max");
  for (long d = 1; d <= d_max; ++d) {
    if (min_bridge(d) != min_bridge_closed_form(d)) {
      return false;
    }
  }
  return true;
}

bool torus_closed_form_check(long d_max) {
  detail::require_at_least(d_max, 1, "d_max");
  for (long d = 1; d <= d_max; ++d) {
    const BigInt t = torus_min_bridge(d);
    if (t != torus_min_bridge_closed_form(d) || 2 * t != min_bridge(d + 1)) {
      return false;
    }
  }
  return true;
}

BinaryWord word_at(std::size_t length, std::uint64_t index) {
  std::vector<std::uint8_t> bits(length);
  for (std::size_t i = 0; i < length; ++i) {
    bits[length - 1 - i] = static_cast<std::uint8_t>((index >> i) & 1U);
  }
  return BinaryWord(std::move(bits));
}

BinaryWord WordRange::iterator::operator*() const { return word_at(length_, index_); }

WordRange enumerate_words(std::size_t length, std::size_t cap) {
  if (length > cap) {
    throw SearchError("word length " + std::to_string(length) + " exceeds the enumeration cap " +
                      std::to_string(cap));
  }
  if (length >= 63) {
    throw SearchError("word length " + std::to_string(length) + " cannot be enumerated");
  }
  return WordRange(length);
}

std::string SeedPolicy::str() const {
  if (mode == Mode::admissible) {
    return "admissible";
  }
  return "(" + to_decimal(seed.a) + ", " + to_decimal(seed.b) + ")";
}

namespace {

enum class Goal { minimize, maximize };

// Extremum and witnesses of one contiguous slice of the enumeration.
class Accumulator {
public:
  explicit Accumulator(Goal goal) : goal_(goal) {}

  void offer(const BigInt& value, SearchWitness witness) {
    if (!best_ || improves(value, *best_)) {
      best_ = value;
      witnesses_.clear();
    } else if (value != *best_) {
      return;
    }
    witnesses_.push_back(std::move(witness));
  }

  // Appends other, which must cover a later slice.
  void merge(Accumulator&& other) {
    examined += other.examined;
    candidates += other.candidates;
    if (!other.best_) {
      return;
    }
    if (!best_ || improves(*other.best_, *best_)) {
      best_ = std::move(other.best_);
      witnesses_ = std::move(other.witnesses_);
    } else if (*other.best_ == *best_) {
      std::move(other.witnesses_.begin(), other.witnesses_.end(), std::back_inserter(witnesses_));
    }
  }

  const std::optional<BigInt>& best() const { return best_; }
  std::vector<SearchWitness>& witnesses() { return witnesses_; }

  std::uint64_t examined = 0;
  std::uint64_t candidates = 0;

private:
  bool improves(const BigInt& a, const BigInt& b) const {
    return goal_ == Goal::minimize ? a < b : a > b;
  }

  Goal goal_;
  std::optional<BigInt> best_;
  std::vector<SearchWitness> witnesses_;
};

struct Chunk {
  std::size_t length;
  std::uint64_t begin;
  std::uint64_t end;
};

constexpr std::uint64_t kChunkSize = 1U << 12;

std::vector<Chunk> make_chunks(std::size_t min_length, std::size_t max_length) {
  std::vector<Chunk> chunks;
  for (std::size_t len = min_length; len <= max_length; ++len) {
    const std::uint64_t count = std::uint64_t{1} << len;
    for (std::uint64_t begin = 0; begin < count; begin += kChunkSize) {
      chunks.push_back({len, begin, std::min(count, begin + kChunkSize)});
    }
  }
  return chunks;
}

// Workers claim chunks from a shared counter; results are merged in chunk
// order, so the report does not depend on the worker count.
template <class Visit>
Accumulator run_chunks(const std::vector<Chunk>& chunks, Goal goal, unsigned workers, Visit visit) {
  std::vector<Accumulator> results(chunks.size(), Accumulator(goal));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < chunks.size(); i = next++) {
      const Chunk& chunk = chunks[i];
      Accumulator& acc = results[i];
      for (std::uint64_t index = chunk.begin; index < chunk.end; ++index) {
        ++acc.examined;
        visit(word_at(chunk.length, index), acc);
      }
    }
  };

  if (workers == 0) {
    workers = std::max(1U, std::thread::hardware_concurrency());
  }
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, chunks.size()));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(work);
    }
  }

  Accumulator total(goal);
  for (auto& r : results) {
    total.merge(std::move(r));
  }
  return total;
}

void offer_word(const BinaryWord& word, const SeedPolicy& seeds, Accumulator& acc) {
  if (seeds.mode == SeedPolicy::Mode::fixed) {
    acc.offer(fibonacci_value(word, seeds.seed), {word, seeds.seed});
    return;
  }
  const auto m = static_cast<long>(semisimple_count(word));
  const LinearForm<BigInt> form = fibonacci_coefficients(word);
  for (long a = 2; a <= m; ++a) {
    for (long b = a; b <= a + 1; ++b) {
      acc.offer(form(BigInt(a), BigInt(b)), {word, SeedPair<BigInt>{BigInt(a), BigInt(b)}});
    }
  }
}

} // namespace

SearchReport min_bridge_search(std::size_t max_length, long depth, const SearchConfig& config,
                               const SeedPolicy& seeds) {
  if (depth < 2) {
    throw SearchError("minimum search needs depth >= 2; depth 1 tunnels are not regular");
  }
  if (max_length > config.length_cap) {
    throw SearchError("maximum length " + std::to_string(max_length) +
                      " exceeds the enumeration cap " + std::to_string(config.length_cap));
  }
  if (static_cast<long>(max_length) < 2 * depth - 3) {
    throw SearchError("no regular word of depth " + std::to_string(depth) + " has length <= " +
                      std::to_string(max_length) + " (need " + std::to_string(2 * depth - 3) + ")");
  }

  const auto target = static_cast<std::size_t>(depth);
  Accumulator total = run_chunks(make_chunks(1, max_length), Goal::minimize, config.workers,
                                 [&](const BinaryWord& word, Accumulator& acc) {
                                   if (!word.has_one() || depth_of_word(word) != target) {
                                     return;
                                   }
                                   ++acc.candidates;
                                   offer_word(word, seeds, acc);
                                 });

  SearchReport report;
  report.kind = SearchKind::min_by_depth;
  report.depth = depth;
  report.horizon = max_length;
  report.seeds = seeds;
  report.examined = total.examined;
  report.candidates = total.candidates;
  if (!total.best()) {
    throw SearchError("no regular word of depth " + std::to_string(depth) + " within length " +
                      std::to_string(max_length));
  }
  report.value = *total.best();
  report.witnesses = std::move(total.witnesses());
  return report;
}

SearchReport max_bridge_search(long cabling_count, long semisimple_count_target,
                               const SearchConfig& config, const SeedPolicy& seeds) {
  const long n = cabling_count;
  const long m = semisimple_count_target;
  if (m < 2 || m > n) {
    throw SearchError("infeasible constraint: need 2 <= m <= n, got n = " + std::to_string(n) +
                      ", m = " + std::to_string(m));
  }
  const auto length = static_cast<std::size_t>(n - 2);
  if (length > config.length_cap) {
    throw SearchError("word length " + std::to_string(length) + " exceeds the enumeration cap " +
                      std::to_string(config.length_cap));
  }

  const auto target = static_cast<std::size_t>(m);
  Accumulator total = run_chunks(make_chunks(length, length), Goal::maximize, config.workers,
                                 [&](const BinaryWord& word, Accumulator& acc) {
                                   if (semisimple_count(word) != target) {
                                     return;
                                   }
                                   ++acc.candidates;
                                   if (!word.has_one()) {
                                     acc.offer(semisimple_range(n).high, {word, std::nullopt});
                                     return;
                                   }
                                   offer_word(word, seeds, acc);
                                 });

  SearchReport report;
  report.kind = SearchKind::max_by_cablings;
  report.cabling_count = n;
  report.semisimple_count = m;
  report.horizon = length;
  report.seeds = seeds;
  report.examined = total.examined;
  report.candidates = total.candidates;
  if (!total.best()) {
    throw std::logic_error("no word of length n - 2 has the requested semisimple count");
  }
  report.value = *total.best();
  report.witnesses = std::move(total.witnesses());
  return report;
}

} // namespace tunnel_atlas
