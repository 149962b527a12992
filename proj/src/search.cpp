#include "hpdf/search.hpp"

#include "hpdf/error.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace hpdf {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  bool active;
  Clock::time_point at;

  explicit Deadline(std::chrono::milliseconds budget)
      : active(budget.count() > 0), at(Clock::now() + budget)
  {
  }
  bool passed() const { return active && Clock::now() >= at; }
};

class HdsWorker {
public:
  HdsWorker(const FiniteGroup &g, std::vector<Element> others, std::size_t k, std::uint64_t lambda,
            DiffConvention conv, const Deadline &deadline, std::atomic<bool> &timed_out)
      : g_(g), others_(std::move(others)), k_(k), lambda_(lambda), conv_(conv),
        deadline_(deadline), timed_out_(timed_out), counts_(g.order(), 0)
  {
  }

  // All solutions whose second element is others_[first].
  std::vector<std::vector<Element>> run(std::size_t first)
  {
    found_.clear();
    chosen_.assign(1, g_.identity());
    if (push(others_[first])) {
      extend(first + 1);
      pop();
    }
    return std::move(found_);
  }

  std::uint64_t nodes() const { return nodes_; }

private:
  bool push(Element x)
  {
    ++nodes_;
    bool ok = true;
    std::size_t done = 0;
    for (; done < chosen_.size(); ++done) {
      const auto s = chosen_[done];
      const auto a = g_.difference(x, s, conv_).index;
      const auto b = g_.difference(s, x, conv_).index;
      ++counts_[a];
      ++counts_[b];
      if (counts_[a] > lambda_ || counts_[b] > lambda_) {
        ++done;
        ok = false;
        break;
      }
    }
    if (!ok) {
      for (std::size_t i = 0; i < done; ++i) {
        --counts_[g_.difference(x, chosen_[i], conv_).index];
        --counts_[g_.difference(chosen_[i], x, conv_).index];
      }
      return false;
    }
    chosen_.push_back(x);
    return true;
  }

  void pop()
  {
    const auto x = chosen_.back();
    chosen_.pop_back();
    for (auto s : chosen_) {
      --counts_[g_.difference(x, s, conv_).index];
      --counts_[g_.difference(s, x, conv_).index];
    }
  }

  void extend(std::size_t from)
  {
    if (chosen_.size() == k_) {
      // counts never exceed lambda and sum to k(k-1) = lambda(v-1), so every
      // non-identity element is hit exactly lambda times.
      auto d = chosen_;
      std::sort(d.begin(), d.end());
      if (is_canonical(d))
        found_.push_back(std::move(d));
      return;
    }
    if ((nodes_ & 0xfff) == 0 && deadline_.passed())
      timed_out_ = true;
    if (timed_out_)
      return;
    const auto need = k_ - chosen_.size();
    for (std::size_t i = from; i + need <= others_.size(); ++i) {
      if (push(others_[i])) {
        extend(i + 1);
        pop();
      }
    }
  }

  // D must not exceed any translate of itself that contains the identity.
  bool is_canonical(const std::vector<Element> &d) const
  {
    std::vector<Element> t(d.size());
    for (auto pivot : d) {
      if (pivot == g_.identity())
        continue;
      for (std::size_t i = 0; i < d.size(); ++i)
        t[i] = g_.difference(d[i], pivot, conv_);
      std::sort(t.begin(), t.end());
      if (t < d)
        return false;
    }
    return true;
  }

  const FiniteGroup &g_;
  std::vector<Element> others_;
  std::size_t k_;
  std::uint64_t lambda_;
  DiffConvention conv_;
  const Deadline &deadline_;
  std::atomic<bool> &timed_out_;
  std::vector<std::uint64_t> counts_;
  std::vector<Element> chosen_;
  std::vector<std::vector<Element>> found_;
  std::uint64_t nodes_ = 0;
};

unsigned worker_count(unsigned requested, std::size_t tasks)
{
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(tasks, 1)));
}

} // namespace

HdsSearchResult search_hds(const FiniteGroup &g, unsigned u, const SearchBounds &bounds,
                           DiffConvention conv)
{
  const std::uint64_t v = 4ull * u * u;
  if (u == 0 || g.order() != v)
    throw Error(Errc::OrderMismatch, g.name() + " has order " + std::to_string(g.order()) +
                                         ", expected 4u^2 = " + std::to_string(v));
  const std::size_t k = 2ull * u * u - u;
  const std::uint64_t lambda = 1ull * u * u - u;

  std::vector<Element> others;
  for (auto e : g.elements())
    if (e != g.identity())
      others.push_back(e);

  HdsSearchResult result;
  std::vector<std::vector<Element>> sets;

  if (k == 1) {
    sets.push_back({g.identity()});
  } else {
    const Deadline deadline(bounds.time_budget);
    std::atomic<bool> timed_out{false};
    const std::size_t tasks = others.size() >= k - 1 ? others.size() - (k - 1) + 1 : 0;
    std::vector<std::vector<std::vector<Element>>> per_task(tasks);
    std::vector<std::uint64_t> per_worker_nodes(worker_count(bounds.workers, tasks), 0);
    std::atomic<std::size_t> next{0};

    auto work = [&](std::size_t slot) {
      HdsWorker worker(g, others, k, lambda, conv, deadline, timed_out);
      for (std::size_t t; (t = next.fetch_add(1)) < tasks;)
        per_task[t] = worker.run(t);
      per_worker_nodes[slot] = worker.nodes();
    };
    std::vector<std::thread> threads;
    for (std::size_t w = 1; w < per_worker_nodes.size(); ++w)
      threads.emplace_back(work, w);
    work(0);
    for (auto &t : threads)
      t.join();

    for (auto &batch : per_task)
      for (auto &s : batch)
        sets.push_back(std::move(s));
    for (auto n : per_worker_nodes)
      result.nodes += n;
    result.complete = !timed_out;
  }

  std::sort(sets.begin(), sets.end());
  if (sets.size() > bounds.max_results)
    sets.resize(bounds.max_results);
  for (auto &s : sets) {
    Multiset d(std::move(s));
    result.reports.push_back(verify(DesignFamily(g, {d}), conv));
    result.sets.push_back(std::move(d));
  }
  return result;
}

namespace {

class UnitYSearch {
public:
  UnitYSearch(const Ring &r, const Deadline &deadline) : r_(r), deadline_(deadline) {}

  bool compatible(RingElement a, RingElement b) const
  {
    return r_.is_unit(r_.sub(a, b)) && r_.is_unit(r_.add(a, b));
  }

  void expand(std::vector<RingElement> &y, const std::vector<RingElement> &cands)
  {
    ++nodes;
    if (y.size() > best.size())
      best = y;
    if ((nodes & 0xfff) == 0 && deadline_.passed())
      timed_out = true;
    for (std::size_t i = 0; i < cands.size() && !timed_out; ++i) {
      if (y.size() + (cands.size() - i) <= best.size())
        return;
      std::vector<RingElement> next;
      for (std::size_t j = i + 1; j < cands.size(); ++j)
        if (compatible(cands[i], cands[j]))
          next.push_back(cands[j]);
      y.push_back(cands[i]);
      expand(y, next);
      y.pop_back();
    }
  }

  std::vector<RingElement> best;
  std::uint64_t nodes = 0;
  bool timed_out = false;

private:
  const Ring &r_;
  const Deadline &deadline_;
};

} // namespace

UnitYSearchResult max_unit_y_search(const Ring &r, const SearchBounds &bounds)
{
  if (r.order() % 2 == 0)
    throw Error(Errc::EvenOrder, r.name() + " has even order");
  UnitYSearchResult result;
  if (r.order() < 3)
    return result;

  const Deadline deadline(bounds.time_budget);
  UnitYSearch search(r, deadline);
  const auto one = r.one();
  std::vector<RingElement> cands;
  for (auto x : starter_reps(r))
    if (x != one && r.is_unit(x) && r.is_unit(r.add(x, x)) && search.compatible(one, x))
      cands.push_back(x);

  std::vector<RingElement> y{one};
  search.expand(y, cands);
  result.max_size = search.best.size();
  result.witness = search.best;
  result.complete = !search.timed_out;
  result.nodes = search.nodes;
  return result;
}

} // namespace hpdf
