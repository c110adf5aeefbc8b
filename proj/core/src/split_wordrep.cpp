#include "wordrep/split_wordrep.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace wordrep {

std::optional<SplitPartition> split_partition(const Graph& g) {
  int n = g.n();
  if (n == 0) return SplitPartition{Bitset(0), Bitset(0)};
  // Degree-based split test: sort by degree descending (stable on vertex
  // order), take the largest prefix m with d_i >= i-1; the graph is split
  // iff that prefix carries all the edge weight of a clique plus the
  // remaining degrees, and then the prefix is a maximum clique.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  int m = 0;
  for (int i = 0; i < n; ++i)
    if (g.degree(order[i]) >= i) m = i + 1;
  long long head = 0, tail = 0;
  for (int i = 0; i < n; ++i)
    (i < m ? head : tail) += g.degree(order[i]);
  if (head != static_cast<long long>(m) * (m - 1) + tail) return std::nullopt;
  SplitPartition p{Bitset(n), Bitset(n)};
  for (int i = 0; i < n; ++i)
    (i < m ? p.clique : p.independent).set(order[i]);
  // Guard the classification: the prefix must induce a clique and the
  // rest an independent set.
  bool ok = true;
  p.clique.for_each([&](int u) {
    Bitset missing = p.clique;
    missing.reset(u);
    missing -= g.row(u);
    if (missing.any()) ok = false;
  });
  p.independent.for_each([&](int u) {
    if (g.row(u).intersects(p.independent)) ok = false;
  });
  if (!ok) return std::nullopt;
  return p;
}

std::string descriptor_to_string(const Descriptor& d) {
  std::ostringstream out;
  switch (d.kind) {
    case Descriptor::Kind::Empty: out << "empty"; break;
    case Descriptor::Kind::Interval: out << "interval " << d.lo << " " << d.hi; break;
    case Descriptor::Kind::Wrap: out << "wrap " << d.lo << " " << d.hi; break;
    case Descriptor::Kind::Invalid: out << "invalid"; break;
  }
  return out.str();
}

namespace {

Descriptor classify_labels(const std::vector<int>& labels, int k) {
  if (labels.empty()) return Descriptor::empty();
  std::vector<int> s = labels;
  std::sort(s.begin(), s.end());
  bool contiguous = s.back() - s.front() + 1 == static_cast<int>(s.size());
  if (contiguous) return Descriptor::interval(s.front(), s.back());
  if (s.front() != 1 || s.back() != k) return Descriptor::invalid();
  // Exactly one gap makes a prefix plus suffix.
  int gaps = 0, m = 0, nstart = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (s[i] != s[i - 1] + 1) {
      ++gaps;
      m = s[i - 1];
      nstart = s[i];
    }
  }
  if (gaps != 1) return Descriptor::invalid();
  return Descriptor::wrap(m, nstart);
}

}  // namespace

Descriptor descriptor_of(const Graph& g, const SplitPartition& p,
                         const std::map<std::string, int>& label_of,
                         const std::string& a) {
  int av = g.index_of(a);
  if (!p.independent.test(av))
    fail("invalid-argument", "'" + a + "' is not on the independent side");
  int k = p.clique.count();
  std::vector<int> labels;
  g.row(av).for_each([&](int u) {
    auto it = label_of.find(g.name_of(u));
    if (it == label_of.end())
      fail("invalid-argument", "neighbor '" + g.name_of(u) + "' carries no label");
    labels.push_back(it->second);
  });
  return classify_labels(labels, k);
}

bool violates_wrap_interval(const Descriptor& wrap, const Descriptor& interval) {
  return interval.lo <= wrap.lo && interval.hi >= wrap.hi;
}

bool violates_wrap_wrap(const Descriptor& w1, const Descriptor& w2) {
  return !(w2.lo < w1.hi && w1.lo < w2.hi);
}

LabelingReport validate_labeling(const Graph& g, const SplitPartition& p,
                                 const std::map<std::string, int>& label_of) {
  LabelingReport report;
  int k = p.clique.count();
  // Bijection onto 1..k over exactly the clique side.
  std::vector<bool> seen(k + 1, false);
  bool bijective = static_cast<int>(label_of.size()) == k;
  p.clique.for_each([&](int u) {
    auto it = label_of.find(g.name_of(u));
    if (it == label_of.end() || it->second < 1 || it->second > k ||
        seen[it->second])
      bijective = false;
    else
      seen[it->second] = true;
  });
  if (!bijective) {
    report.condition = "bijection";
    report.detail = "labels are not a bijection from the clique side onto 1.." +
                    std::to_string(k);
    return report;
  }
  std::vector<std::pair<std::string, Descriptor>> described;
  bool shape_ok = true;
  p.independent.for_each([&](int a) {
    if (!shape_ok) return;
    Descriptor d = descriptor_of(g, p, label_of, g.name_of(a));
    if (d.kind == Descriptor::Kind::Invalid) {
      report.condition = "shape";
      report.witness1 = g.name_of(a);
      report.detail = "neighborhood of '" + g.name_of(a) +
                      "' is neither an interval nor a prefix plus suffix";
      shape_ok = false;
      return;
    }
    described.emplace_back(g.name_of(a), d);
  });
  if (!shape_ok) return report;
  for (size_t i = 0; i < described.size(); ++i) {
    for (size_t j = 0; j < described.size(); ++j) {
      if (i == j) continue;
      const auto& [na, da] = described[i];
      const auto& [nb, db] = described[j];
      if (da.kind != Descriptor::Kind::Wrap) continue;
      if (db.kind == Descriptor::Kind::Interval && violates_wrap_interval(da, db)) {
        report.condition = "wrap-vs-interval";
        report.witness1 = na;
        report.witness2 = nb;
        report.detail = "wrap " + descriptor_to_string(da) + " of '" + na +
                        "' conflicts with " + descriptor_to_string(db) + " of '" + nb + "'";
        return report;
      }
      if (db.kind == Descriptor::Kind::Wrap && j > i && violates_wrap_wrap(da, db)) {
        report.condition = "wrap-vs-wrap";
        report.witness1 = na;
        report.witness2 = nb;
        report.detail = "wraps " + descriptor_to_string(da) + " of '" + na +
                        "' and " + descriptor_to_string(db) + " of '" + nb +
                        "' overlap across the seam";
        return report;
      }
    }
  }
  report.ok = true;
  return report;
}

namespace {

// Backtracking search over label sequences. Rows are the distinct
// independent-side neighborhoods as bitsets over clique positions; a
// partial assignment keeps, per row, a trace state that must stay
// extendable to an interval or a prefix-plus-suffix of 1..k.
class LabelingSearch {
 public:
  LabelingSearch(const Graph& g, const SplitPartition& p) : g_(g), p_(p) {
    clique_ = p.clique.to_indices();
    k_ = static_cast<int>(clique_.size());
    pos_in_clique_.assign(g.n(), -1);
    for (int i = 0; i < k_; ++i) pos_in_clique_[clique_[i]] = i;
    std::set<std::vector<int>> seen;
    p.independent.for_each([&](int a) {
      std::vector<int> row;
      g_.row(a).for_each([&](int u) { row.push_back(pos_in_clique_[u]); });
      if (row.empty()) return;  // empty neighborhoods are always compatible
      std::sort(row.begin(), row.end());
      if (seen.insert(row).second) {
        Bitset bits(k_);
        for (int c : row) bits.set(c);
        rows_.push_back(bits);
      }
    });
    states_.assign(rows_.size(), State{});
  }

  std::optional<std::map<std::string, int>> run() {
    assigned_.assign(std::max(k_, 1), -1);
    used_.assign(static_cast<size_t>(g_.n()), false);
    for (const auto& row : rows_)
      if (row.count() == k_) has_full_row_ = true;
    if (!place(0)) return std::nullopt;
    return result_;
  }

 private:
  enum class Phase : uint8_t {
    Empty,        // no members yet
    FullPrefix,   // members fill 1..p entirely
    PrefixDone,   // members are [1,a], a < p; may still grow into a wrap
    MidOpen,      // members are [lo, p], lo > 1
    MidDone,      // members are [lo, hi], closed interval; no more members
    WrapOpen      // members are [1,a] + [lo, p]; all later labels must join
  };

  struct State {
    Phase phase = Phase::Empty;
    int a = 0;          // prefix end
    int lo = 0;         // interval start / wrap suffix start
    int hi_closed = 0;  // closed interval end (MidDone)
  };

  bool place(int depth) {
    if (depth == k_) {
      // The state machine prunes only provably dead prefixes; the leaf is
      // accepted solely on the authoritative full validation.
      std::map<std::string, int> labels;
      for (int i = 0; i < k_; ++i) labels[g_.name_of(assigned_[i])] = i + 1;
      if (!validate_labeling(g_, p_, labels).ok) return false;
      result_ = std::move(labels);
      return true;
    }
    int label = depth + 1;
    for (int ci = 0; ci < k_; ++ci) {
      int v = clique_[ci];
      if (used_[v]) continue;
      if (try_assign(v, label)) {
        if (place(depth + 1)) return true;
        undo(v, label);
      }
    }
    return false;
  }

  bool try_assign(int v, int label) {
    std::vector<State> saved = states_;
    bool ok = true;
    for (size_t r = 0; r < rows_.size() && ok; ++r) {
      bool member = rows_[r].test(pos_in_clique_[v]);
      State& s = states_[r];
      switch (s.phase) {
        case Phase::Empty:
          if (member) {
            if (label == 1) {
              s.phase = Phase::FullPrefix;
              s.a = 1;
            } else {
              s.phase = Phase::MidOpen;
              s.lo = label;
            }
          }
          break;
        case Phase::FullPrefix:
          if (member)
            s.a = label;
          else
            s.phase = Phase::PrefixDone;
          break;
        case Phase::PrefixDone:
          if (member) {
            s.phase = Phase::WrapOpen;
            s.lo = label;
            ok = wrap_compatible(r, label);
          }
          break;
        case Phase::MidOpen:
          if (!member) {
            s.phase = Phase::MidDone;
            ok = interval_compatible(r, label - 1);
          }
          break;
        case Phase::MidDone:
          if (member) ok = false;
          break;
        case Phase::WrapOpen:
          if (!member) ok = false;
          break;
      }
    }
    if (!ok) {
      states_ = std::move(saved);
      return false;
    }
    trail_.push_back(std::move(saved));
    used_[v] = true;
    assigned_[label - 1] = v;
    return true;
  }

  void undo(int v, int label) {
    states_ = std::move(trail_.back());
    trail_.pop_back();
    used_[v] = false;
    assigned_[label - 1] = -1;
  }

  // Newly committed wrap [1, a] + [lo, k]: its parameters are final, so
  // it can be checked against the other final descriptors (committed
  // wraps and closed intervals). Rows that may still change shape are
  // left to the leaf validation.
  bool wrap_compatible(size_t row, int suffix_start) {
    if (has_full_row_) return false;  // a full neighborhood excludes all wraps
    const State& s = states_[row];
    Descriptor me = Descriptor::wrap(s.a, suffix_start);
    for (size_t r = 0; r < rows_.size(); ++r) {
      if (r == row) continue;
      const State& o = states_[r];
      if (o.phase == Phase::WrapOpen &&
          violates_wrap_wrap(me, Descriptor::wrap(o.a, o.lo)))
        return false;
      if (o.phase == Phase::MidDone &&
          violates_wrap_interval(me, Descriptor::interval(o.lo, o.hi_closed)))
        return false;
    }
    return true;
  }

  // Newly closed interval [lo, hi]: check against committed wraps.
  bool interval_compatible(size_t row, int hi) {
    State& s = states_[row];
    s.hi_closed = hi;
    Descriptor me = Descriptor::interval(s.lo, hi);
    for (size_t r = 0; r < rows_.size(); ++r) {
      if (r == row) continue;
      const State& o = states_[r];
      if (o.phase == Phase::WrapOpen &&
          violates_wrap_interval(Descriptor::wrap(o.a, o.lo), me))
        return false;
    }
    return true;
  }

  const Graph& g_;
  const SplitPartition& p_;
  std::vector<int> clique_;
  int k_ = 0;
  std::vector<int> pos_in_clique_;
  std::vector<Bitset> rows_;
  std::vector<State> states_;
  std::vector<std::vector<State>> trail_;
  std::vector<int> assigned_;
  std::vector<bool> used_;
  bool has_full_row_ = false;
  std::map<std::string, int> result_;
};

}  // namespace

std::optional<SplitLabeling> find_labeling(const Graph& g, const SplitPartition& p) {
  LabelingSearch search(g, p);
  auto labels = search.run();
  if (!labels) return std::nullopt;
  LabelingReport report = validate_labeling(g, p, *labels);
  if (!report.ok)
    fail("structure", "labeling search returned an invalid labeling: " + report.detail);
  SplitLabeling out;
  out.label_of = *labels;
  p.independent.for_each([&](int a) {
    out.descriptors[g.name_of(a)] = descriptor_of(g, p, *labels, g.name_of(a));
  });
  return out;
}

bool is_word_representable_split(const Graph& g) {
  auto p = split_partition(g);
  if (!p)
    fail("not-split",
         "input is not a split graph; route general graphs through the pipeline");
  return find_labeling(g, *p).has_value();
}

namespace {

// Two-block insertion word for wrap-free labelings: the clique is written
// twice in label order; each independent vertex is inserted once before
// its interval's first clique letter and once after its interval's last
// clique letter, both inside the first block. Verified by the caller.
std::optional<Word> interval_insertion_word(const Graph& g, const SplitPartition& p,
                                            const SplitLabeling& labeling) {
  int k = 0;
  for ([[maybe_unused]] const auto& kv : labeling.label_of) ++k;
  std::vector<std::string> by_label(k + 1);
  for (const auto& [name, label] : labeling.label_of) {
    if (label < 1 || label > k) return std::nullopt;
    by_label[label] = name;
  }
  // slot s (0..k): before clique letter s+1.
  std::vector<std::vector<std::string>> lefts(k + 1), rights(k + 1);
  std::vector<std::string> isolated;
  for (const auto& [name, d] : labeling.descriptors) {
    switch (d.kind) {
      case Descriptor::Kind::Empty:
        isolated.push_back(name);
        break;
      case Descriptor::Kind::Interval:
        lefts[d.lo - 1].push_back(name);
        rights[d.hi].push_back(name);
        break;
      default:
        return std::nullopt;  // wraps need the exhaustive fallback
    }
  }
  for (auto& v : lefts) std::sort(v.begin(), v.end());
  for (auto& v : rights) std::sort(v.rbegin(), v.rend());
  std::sort(isolated.begin(), isolated.end());
  Word w;
  for (const auto& name : isolated) {
    w.letters.push_back(name);
    w.letters.push_back(name);
  }
  for (int s = 0; s <= k; ++s) {
    for (const auto& name : rights[s]) w.letters.push_back(name);
    for (const auto& name : lefts[s]) w.letters.push_back(name);
    if (s < k) w.letters.push_back(by_label[s + 1]);
  }
  for (int l = 1; l <= k; ++l) w.letters.push_back(by_label[l]);
  return w;
}

}  // namespace

Word construct_word_for_split(const Graph& g, const SplitLabeling& labeling,
                              const OracleLimits& limits) {
  auto p = split_partition(g);
  if (!p) fail("not-split", "word construction requires a split graph");
  // Guided candidates, each verified before use.
  if (auto w = find_k_uniform_word(g, 1, limits)) return *w;
  if (auto w = interval_insertion_word(g, *p, labeling)) {
    if (represents(*w, g)) return *w;
  }
  if (g.n() <= limits.k2_max_n) {
    if (auto w = find_k_uniform_word(g, 2, limits)) return *w;
  }
  if (g.n() <= limits.k3_max_n) {
    if (auto w = find_k_uniform_word(g, 3, limits)) return *w;
    fail("construction-gap",
         "no uniform word of multiplicity at most three exists for this graph");
  }
  fail("construction-gap",
       "guided construction failed and the graph exceeds the exhaustive search bound");
}

std::string labeling_to_text(const SplitLabeling& labeling) {
  std::vector<std::pair<int, std::string>> by_label;
  for (const auto& [name, label] : labeling.label_of) by_label.emplace_back(label, name);
  std::sort(by_label.begin(), by_label.end());
  std::ostringstream out;
  for (const auto& [label, name] : by_label)
    out << "label " << name << " " << label << "\n";
  for (const auto& [name, d] : labeling.descriptors)
    out << "descriptor " << name << " " << descriptor_to_string(d) << "\n";
  return out.str();
}

}  // namespace wordrep
