#include "sclgap/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "sclgap/error.hpp"
#include "sclgap/quasimorphism.hpp"

namespace sclgap::oracle {

  char const* to_string(WordFilter f) {
    switch (f) {
      case WordFilter::All:
        return "all";
      case WordFilter::CyclicallyReduced:
        return "cyclically-reduced";
      case WordFilter::NonSelfOverlapping:
        return "non-self-overlapping";
    }
    return "?";
  }

  std::vector<Letter> alphabet(GroupSpec const& g) {
    std::vector<Letter> out;
    for (int i = 0; i < g.generator_count(); ++i) {
      if (g.is_free(i)) {
        out.push_back({i, 1});
        out.push_back({i, -1});
      } else {
        for (int e = 1; e < g.order(i); ++e) {
          out.push_back({i, e});
        }
      }
    }
    return out;
  }

  namespace {

    bool can_follow(GroupSpec const& g, Letter prev, Letter next) {
      if (prev.gen != next.gen) {
        return true;
      }
      return g.is_free(next.gen) && prev.exp == next.exp;
    }

    bool passes(GroupSpec const& g, WordFilter f, Word const& w) {
      switch (f) {
        case WordFilter::All:
          return true;
        case WordFilter::CyclicallyReduced:
          return cyclic_reduce(g, w).core.base == w;
        case WordFilter::NonSelfOverlapping:
          return !is_self_overlapping(w);
      }
      return false;
    }

    // Depth-first over words of exactly `remaining` more letters.
    bool extend(EnumerationPlan const&                   plan,
                std::vector<Letter> const&               letters,
                std::vector<Letter>&                     buf,
                int                                      remaining,
                std::function<bool(Word const&)> const& visit) {
      if (remaining == 0) {
        Word w(buf);
        return !passes(plan.group, plan.filter, w) || visit(w);
      }
      for (Letter l : letters) {
        if (!buf.empty() && !can_follow(plan.group, buf.back(), l)) {
          continue;
        }
        buf.push_back(l);
        bool const go_on = extend(plan, letters, buf, remaining - 1, visit);
        buf.pop_back();
        if (!go_on) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  void for_each_word(EnumerationPlan const& plan, std::function<bool(Word const&)> const& visit) {
    if (plan.max_length < 0) {
      throw DomainError("max_length must be non-negative");
    }
    validate(plan.group);
    auto const          letters = alphabet(plan.group);
    std::vector<Letter> buf;
    for (int len = 0; len <= plan.max_length; ++len) {
      if (!extend(plan, letters, buf, len, visit)) {
        return;
      }
    }
  }

  std::vector<Word> enumerate_words(EnumerationPlan const& plan) {
    std::vector<Word> out;
    for_each_word(plan, [&](Word const& w) {
      out.push_back(w);
      return true;
    });
    return out;
  }

  namespace {

    struct BlockResult {
      std::int64_t max   = 0;
      std::int64_t pairs = 0;
      std::size_t  i = 0, j = 0;
      bool         any = false;
    };

    // Larger coboundary wins; ties go to the earlier pair.
    void merge(BlockResult& into, BlockResult const& b) {
      into.pairs += b.pairs;
      if (!b.any) {
        return;
      }
      if (!into.any || b.max > into.max
          || (b.max == into.max && std::pair(b.i, b.j) < std::pair(into.i, into.j))) {
        into.max = b.max;
        into.i   = b.i;
        into.j   = b.j;
        into.any = true;
      }
    }

    std::string checkpoint_header(GroupSpec const& g, Word const& base, int L) {
      return "defect-checkpoint v1 | " + to_string(g) + " | " + to_string(g, base) + " | L="
             + std::to_string(L);
    }

    std::map<std::size_t, BlockResult> read_checkpoint(std::string const& path,
                                                       std::string const& header) {
      std::map<std::size_t, BlockResult> done;
      std::ifstream                      in(path);
      if (!in) {
        return done;
      }
      std::string line;
      if (!std::getline(in, line)) {
        return done;
      }
      if (line != header) {
        throw DomainError("checkpoint " + path + " belongs to a different run: " + line);
      }
      while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string        tag;
        std::size_t        block;
        BlockResult        r;
        if (ss >> tag >> block >> r.max >> r.pairs >> r.i >> r.j >> r.any && tag == "block") {
          done[block] = r;
        }
      }
      return done;
    }

  }  // namespace

  DefectReport brute_defect(GroupSpec const&   g,
                            Word const&        base,
                            int                L,
                            int                jobs,
                            std::string const& checkpoint) {
    if (auto why = counting_qm_obstruction(g, base); !why.empty()) {
      throw DomainError("ineligible base: " + why);
    }
    if (L < 0) {
      throw DomainError("L must be non-negative");
    }
    jobs = std::max(jobs, 1);

    auto const                words = enumerate_words({g, L, WordFilter::All});
    std::vector<std::int64_t> phis;
    phis.reserve(words.size());
    for (auto const& w : words) {
      phis.push_back(phi(g, base, w));
    }

    constexpr std::size_t block_size = 32;
    std::size_t const     blocks     = (words.size() + block_size - 1) / block_size;
    std::string const     header     = checkpoint_header(g, base, L);

    std::map<std::size_t, BlockResult> done;
    std::ofstream                      log;
    if (!checkpoint.empty()) {
      done = read_checkpoint(checkpoint, header);
      bool const fresh = done.empty();
      log.open(checkpoint, fresh ? std::ios::trunc : std::ios::app);
      if (!log) {
        throw DomainError("cannot write checkpoint " + checkpoint);
      }
      if (fresh) {
        log << header << '\n' << std::flush;
      }
    }
    int const resumed = static_cast<int>(done.size());

    std::vector<BlockResult> results(blocks);
    std::vector<char>        have(blocks, 0);
    for (auto const& [b, r] : done) {
      if (b < blocks) {
        results[b] = r;
        have[b]    = 1;
      }
    }

    std::atomic<std::size_t> next{0};
    std::mutex               log_mutex;
    auto                     worker = [&] {
      for (std::size_t b; (b = next.fetch_add(1)) < blocks;) {
        if (have[b]) {
          continue;
        }
        BlockResult r;
        std::size_t const end = std::min(words.size(), (b + 1) * block_size);
        for (std::size_t i = b * block_size; i < end; ++i) {
          for (std::size_t j = 0; j < words.size(); ++j) {
            std::int64_t const cob
                = std::abs(phis[i] + phis[j] - phi(g, base, multiply(g, words[i], words[j])));
            ++r.pairs;
            if (!r.any || cob > r.max) {
              r.max = cob;
              r.i   = i;
              r.j   = j;
              r.any = true;
            }
          }
        }
        results[b] = r;
        if (log.is_open()) {
          std::lock_guard lock(log_mutex);
          log << "block " << b << ' ' << r.max << ' ' << r.pairs << ' ' << r.i << ' ' << r.j << ' '
              << r.any << '\n'
              << std::flush;
        }
      }
    };

    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) {
      pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
      t.join();
    }

    BlockResult total;
    for (auto const& r : results) {
      merge(total, r);
    }
    DefectReport out;
    out.max_coboundary = total.max;
    out.pairs          = total.pairs;
    out.resumed_blocks = resumed;
    if (total.any) {
      out.worst_h1 = words[total.i];
      out.worst_h2 = words[total.j];
    }
    return out;
  }

  std::vector<Rational> homogenize_by_limit(GroupSpec const& g,
                                            Word const&      base,
                                            Word const&      h,
                                            int              n_max) {
    if (base.empty()) {
      throw DomainError("base must be non-empty");
    }
    std::vector<Rational> out;
    Word                  hn;
    for (int n = 1; n <= n_max; ++n) {
      hn = multiply(g, hn, h);
      out.emplace_back(phi(g, base, hn), n);
    }
    return out;
  }

  std::optional<Word> conjugator_search(GroupSpec const& g, Word const& w1, Word const& w2, int L) {
    std::optional<Word> found;
    for_each_word({g, L, WordFilter::All}, [&](Word const& u) {
      if (conjugate(g, u, w1) == w2) {
        found = u;
        return false;
      }
      return true;
    });
    return found;
  }

  std::set<Word> conjugates_in_ball(GroupSpec const& g, Word const& w, int L) {
    std::set<Word> out;
    for_each_word({g, L, WordFilter::All}, [&](Word const& u) {
      out.insert(conjugate(g, u, w));
      return true;
    });
    return out;
  }

}  // namespace sclgap::oracle
