#include "skewbrace/hom_search.hpp"

#include <algorithm>

namespace skewbrace {

namespace {

constexpr uint16_t kUnset = 0xFFFF;

struct State {
  std::vector<uint16_t> img;
  std::vector<char> used;
  std::vector<uint16_t> assigned;
};

class Searcher {
 public:
  Searcher(const std::vector<TablePair>& tables, const HomSearchOptions& opts)
      : tables_(tables), opts_(opts) {
    n_src_ = tables[0].src->order();
    n_dst_ = tables[0].dst->order();
    for (const auto& t : tables) {
      src_orders_.push_back(t.src->element_orders());
      dst_orders_.push_back(t.dst->element_orders());
      if (opts.injective) {
        std::vector<int> sc(n_src_), dc(n_dst_);
        for (int x = 0; x < n_src_; ++x) sc[x] = t.src->centralizer_size(x);
        for (int x = 0; x < n_dst_; ++x) dc[x] = t.dst->centralizer_size(x);
        src_cent_.push_back(std::move(sc));
        dst_cent_.push_back(std::move(dc));
      }
    }
    build_chain();
  }

  std::vector<std::vector<uint16_t>> run() {
    State state;
    state.img.assign(n_src_, kUnset);
    state.used.assign(n_dst_, 0);
    state.img[0] = 0;
    state.used[0] = 1;
    state.assigned.push_back(0);
    search(0, state);
    std::sort(results_.begin(), results_.end());
    return std::move(results_);
  }

 private:
  // Pick branch elements greedily: each new one is the smallest element not
  // yet generated by the previous ones under every table at once.
  void build_chain() {
    std::vector<char> in(n_src_, 0);
    std::vector<uint16_t> els{0};
    in[0] = 1;
    auto close = [&] {
      for (size_t i = 0; i < els.size(); ++i)
        for (size_t j = 0; j <= i; ++j)
          for (const auto& t : tables_)
            for (int p : {t.src->op(els[i], els[j]), t.src->op(els[j], els[i])})
              if (!in[p]) {
                in[p] = 1;
                els.push_back(static_cast<uint16_t>(p));
              }
    };
    close();
    for (int x = 0; x < n_src_; ++x)
      if (!in[x]) {
        chain_.push_back(x);
        in[x] = 1;
        els.push_back(static_cast<uint16_t>(x));
        close();
      }
  }

  bool candidate_ok(int x, int v) const {
    for (size_t t = 0; t < tables_.size(); ++t) {
      if (opts_.injective) {
        if (dst_orders_[t][v] != src_orders_[t][x]) return false;
        if (dst_cent_[t][v] != src_cent_[t][x]) return false;
      } else if (src_orders_[t][x] % dst_orders_[t][v] != 0) {
        return false;
      }
    }
    return true;
  }

  bool assign(State& s, std::vector<uint16_t>& queue, int x, int v) const {
    if (s.img[x] != kUnset) return s.img[x] == v;
    if (opts_.injective && s.used[v]) return false;
    s.img[x] = static_cast<uint16_t>(v);
    s.used[v] = 1;
    s.assigned.push_back(static_cast<uint16_t>(x));
    queue.push_back(static_cast<uint16_t>(x));
    return true;
  }

  bool propagate(State& s, std::vector<uint16_t>& queue) const {
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      for (size_t i = 0; i < s.assigned.size(); ++i) {
        int y = s.assigned[i];
        for (const auto& t : tables_) {
          if (!assign(s, queue, t.src->op(x, y), t.dst->op(s.img[x], s.img[y])))
            return false;
          if (!assign(s, queue, t.src->op(y, x), t.dst->op(s.img[y], s.img[x])))
            return false;
        }
      }
    }
    return true;
  }

  void search(size_t pos, const State& state) {
    if (results_.size() >= opts_.max_results) return;
    if (pos == chain_.size()) {
      results_.push_back(state.img);
      return;
    }
    int x = chain_[pos];
    if (state.img[x] != kUnset) {
      search(pos + 1, state);
      return;
    }
    for (int v = 0; v < n_dst_; ++v) {
      if (!candidate_ok(x, v)) continue;
      State next = state;
      std::vector<uint16_t> queue;
      if (!assign(next, queue, x, v)) continue;
      if (!propagate(next, queue)) continue;
      search(pos + 1, next);
      if (results_.size() >= opts_.max_results) return;
    }
  }

  const std::vector<TablePair>& tables_;
  HomSearchOptions opts_;
  int n_src_ = 0;
  int n_dst_ = 0;
  std::vector<int> chain_;
  std::vector<std::vector<int>> src_orders_, dst_orders_;
  std::vector<std::vector<int>> src_cent_, dst_cent_;
  std::vector<std::vector<uint16_t>> results_;
};

}  // namespace

std::vector<std::vector<uint16_t>> find_homomorphisms(
    const std::vector<TablePair>& tables, const HomSearchOptions& options) {
  if (tables.empty())
    throw error(errc::bad_parameters, "homomorphism search needs a table pair");
  int n_src = tables[0].src->order();
  int n_dst = tables[0].dst->order();
  for (const auto& t : tables)
    if (t.src->order() != n_src || t.dst->order() != n_dst)
      throw error(errc::bad_parameters, "table pair orders disagree");
  if (options.injective && n_src > n_dst) return {};
  return Searcher(tables, options).run();
}

}  // namespace skewbrace
