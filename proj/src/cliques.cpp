#include "rinclose/cliques.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rinclose {

UndirectedGraph::UndirectedGraph(std::size_t vertices)
    : n_(vertices), words_((vertices + 63) / 64), adj_(vertices * words_, 0) {}

void UndirectedGraph::add_edge(Index u, Index v) {
  if (u >= n_ || v >= n_) throw std::out_of_range("edge endpoint outside graph");
  if (u == v) return;
  adj_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  adj_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

std::size_t UndirectedGraph::edge_count() const noexcept {
  std::size_t bits = 0;
  for (auto w : adj_) bits += static_cast<std::size_t>(std::popcount(w));
  return bits / 2;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool none(const Bits& s) {
  return std::all_of(s.begin(), s.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t count_and(const Bits& s, const std::uint64_t* row) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < s.size(); ++w) c += std::popcount(s[w] & row[w]);
  return c;
}

Bits intersect(const Bits& s, const std::uint64_t* row) {
  Bits out(s.size());
  for (std::size_t w = 0; w < s.size(); ++w) out[w] = s[w] & row[w];
  return out;
}

template <typename F>
void for_each_bit(const Bits& s, F&& f) {
  for (std::size_t w = 0; w < s.size(); ++w) {
    for (std::uint64_t bits = s[w]; bits; bits &= bits - 1) {
      f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
}

class BronKerbosch {
 public:
  explicit BronKerbosch(const UndirectedGraph& g) : g_(g) {}

  std::vector<IndexList> run() {
    Bits p(g_.words(), 0);
    for (Index v = 0; v < g_.size(); ++v) p[v / 64] |= std::uint64_t{1} << (v % 64);
    Bits x(g_.words(), 0);
    IndexList r;
    if (g_.size() > 0) expand(r, p, x);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void expand(IndexList& r, Bits& p, Bits& x) {
    if (none(p)) {
      if (none(x)) {
        IndexList clique = r;
        std::sort(clique.begin(), clique.end());
        out_.push_back(std::move(clique));
      }
      return;
    }
    Index pivot = 0;
    std::size_t best = 0;
    bool found = false;
    auto consider = [&](Index u) {
      const std::size_t c = count_and(p, g_.row(u));
      if (!found || c > best) {
        best = c;
        pivot = u;
        found = true;
      }
    };
    for_each_bit(p, consider);
    for_each_bit(x, consider);

    Bits candidates(p.size());
    const std::uint64_t* pivot_row = g_.row(pivot);
    for (std::size_t w = 0; w < p.size(); ++w) candidates[w] = p[w] & ~pivot_row[w];
    for_each_bit(candidates, [&](Index v) {
      r.push_back(v);
      Bits np = intersect(p, g_.row(v));
      Bits nx = intersect(x, g_.row(v));
      expand(r, np, nx);
      r.pop_back();
      p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
      x[v / 64] |= std::uint64_t{1} << (v % 64);
    });
  }

  const UndirectedGraph& g_;
  std::vector<IndexList> out_;
};

}  // namespace

std::vector<IndexList> maximal_cliques(const UndirectedGraph& graph) {
  return BronKerbosch(graph).run();
}

}  // namespace rinclose
