#include "hecke/combinat.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hecke {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "0" || text == "()") return Partition{};
  std::vector<int> parts;
  for (auto piece : split(text, ',')) {
    piece = trim(piece);
    int v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (ec != std::errc{} || ptr != piece.data() + piece.size() || piece.empty())
      throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

bool Partition::is_rectangular() const {
  return std::all_of(parts_.begin(), parts_.end(), [&](int p) { return p == parts_.front(); });
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<int> out;
  for (int j = 0; j < p.part(0); ++j) {
    int count = 0;
    while (count < p.length() && p.part(count) > j) ++count;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool is_e_restricted(const Partition& p, std::optional<int> e) {
  if (!e) return true;
  for (int i = 0; i < p.length(); ++i)
    if (p.part(i) - p.part(i + 1) >= *e) return false;
  return true;
}

Partition e_core(const Partition& p, int e) {
  if (e < 1) throw std::invalid_argument("e_core needs e >= 1");
  const int len = p.length();
  std::vector<int> runner_beads(static_cast<std::size_t>(e), 0);
  for (int i = 0; i < len; ++i) {
    int beta = p.part(i) + (len - 1 - i);
    ++runner_beads[static_cast<std::size_t>(beta % e)];
  }
  std::vector<int> betas;
  for (int r = 0; r < e; ++r)
    for (int k = 0; k < runner_beads[static_cast<std::size_t>(r)]; ++k) betas.push_back(r + k * e);
  std::sort(betas.rbegin(), betas.rend());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    int part = betas[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

int hook_length(const Partition& p, int row, int col) {
  const Partition c = conjugate(p);
  return (p.part(row) - col - 1) + (c.part(col) - row - 1) + 1;
}

HookData hook_data(const Partition& p) {
  if (p.empty()) throw std::invalid_argument("hook_data of the empty partition");
  HookData h;
  h.largest_hook = p.part(0) + p.length() - 1;
  h.top_multiplicity = static_cast<int>(std::count(p.parts().begin(), p.parts().end(), p.part(0)));
  const bool rect_multi = p.is_rectangular() && h.top_multiplicity > 1;
  h.smallest_main_hook = h.largest_hook - h.top_multiplicity + (rect_multi ? 2 : 1);
  for (int k = h.smallest_main_hook; k <= h.largest_hook; ++k) h.main_hooks.push_back(k);
  return h;
}

// ----------------------------------------------------------- MultiPartition

MultiPartition::MultiPartition(std::vector<Partition> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("multipartition needs at least one component");
  for (const auto& c : components_) {
    offsets_.push_back(n_);
    n_ += c.size();
  }
}

MultiPartition::MultiPartition(const Partition& p) : MultiPartition(std::vector<Partition>{p}) {}

MultiPartition MultiPartition::parse(std::string_view text) {
  std::vector<Partition> comps;
  for (auto piece : split(text, '|')) comps.push_back(Partition::parse(piece));
  return MultiPartition(std::move(comps));
}

std::string MultiPartition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (k) out += '|';
    out += components_[k].to_string();
  }
  return out;
}

std::vector<MultiPartition> multipartitions_of(int n, int r) {
  std::vector<MultiPartition> out;
  std::vector<Partition> cur;
  std::function<void(int, int)> rec = [&](int remaining, int slots) {
    if (slots == 1) {
      for (auto& p : partitions_of(remaining)) {
        cur.push_back(p);
        out.emplace_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      for (auto& p : partitions_of(k)) {
        cur.push_back(p);
        rec(remaining - k, slots - 1);
        cur.pop_back();
      }
    }
  };
  rec(n, r);
  return out;
}

bool dominates(const MultiPartition& a, const MultiPartition& b) {
  if (a.size() != b.size() || a.level() != b.level())
    throw std::invalid_argument("dominance needs multipartitions of equal size and level");
  for (int k = 0; k < a.level(); ++k) {
    const auto& pa = a.component(k);
    const auto& pb = b.component(k);
    long sa = a.offsets()[static_cast<std::size_t>(k)];
    long sb = b.offsets()[static_cast<std::size_t>(k)];
    const int rows = std::max(pa.length(), pb.length());
    if (sa < sb) return false;
    for (int j = 0; j < rows; ++j) {
      sa += pa.part(j);
      sb += pb.part(j);
      if (sa < sb) return false;
    }
  }
  return true;
}

bool strictly_dominates(const MultiPartition& a, const MultiPartition& b) {
  return dominates(a, b) && !(a == b);
}

// ------------------------------------------------------------------ Tableau

Tableau::Tableau(MultiPartition shape, std::vector<int> reading_word)
    : shape_(std::move(shape)), word_(std::move(reading_word)) {
  const int n = shape_.size();
  if (static_cast<int>(word_.size()) != n) throw std::invalid_argument("tableau size does not match its shape");
  nodes_.assign(static_cast<std::size_t>(n), Node{-1, -1, -1});
  std::size_t pos = 0;
  for (int k = 0; k < shape_.level(); ++k) {
    const auto& comp = shape_.component(k);
    for (int r = 0; r < comp.length(); ++r)
      for (int c = 0; c < comp.part(r); ++c) {
        int v = word_[pos++];
        if (v < 1 || v > n || nodes_[static_cast<std::size_t>(v - 1)].comp != -1)
          throw std::invalid_argument("tableau entries must be a permutation of 1..n");
        nodes_[static_cast<std::size_t>(v - 1)] = Node{k, r, c};
      }
  }
}

int Tableau::entry(const Node& node) const {
  std::size_t pos = 0;
  for (int k = 0; k < node.comp; ++k) pos += static_cast<std::size_t>(shape_.component(k).size());
  const auto& comp = shape_.component(node.comp);
  for (int r = 0; r < node.row; ++r) pos += static_cast<std::size_t>(comp.part(r));
  return word_[pos + static_cast<std::size_t>(node.col)];
}

int Tableau::content(int k) const {
  const Node& nd = node_of(k);
  return nd.col - nd.row;
}

bool Tableau::is_row_standard() const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& nd = nodes_[i];
    if (nd.col > 0 && entry(Node{nd.comp, nd.row, nd.col - 1}) > static_cast<int>(i + 1)) return false;
  }
  return true;
}

bool Tableau::is_standard() const {
  if (!is_row_standard()) return false;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& nd = nodes_[i];
    if (nd.row > 0 && entry(Node{nd.comp, nd.row - 1, nd.col}) > static_cast<int>(i + 1)) return false;
  }
  return true;
}

Tableau Tableau::swapped(int i) const {
  std::vector<int> w = word_;
  for (int& v : w) {
    if (v == i) v = i + 1;
    else if (v == i + 1) v = i;
  }
  return Tableau(shape_, std::move(w));
}

std::string Tableau::to_string() const {
  std::string out;
  std::size_t pos = 0;
  for (int k = 0; k < shape_.level(); ++k) {
    if (k) out += '|';
    const auto& comp = shape_.component(k);
    for (int r = 0; r < comp.length(); ++r) {
      if (r) out += '/';
      for (int c = 0; c < comp.part(r); ++c) {
        if (c) out += ' ';
        out += std::to_string(word_[pos++]);
      }
    }
  }
  return out;
}

Tableau initial_tableau(const MultiPartition& shape) {
  std::vector<int> w(static_cast<std::size_t>(shape.size()));
  std::iota(w.begin(), w.end(), 1);
  return Tableau(shape, std::move(w));
}

std::vector<Tableau> tableaux(const MultiPartition& shape, TableauFlavor flavor) {
  // Place 1..n one at a time; for row-standard fillings a node is available
  // when its left neighbour is filled, for standard ones also the node above.
  const int n = shape.size();
  std::vector<std::vector<std::vector<int>>> fill;
  for (const auto& comp : shape.components()) {
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < comp.length(); ++r) rows.emplace_back(static_cast<std::size_t>(comp.part(r)), 0);
    fill.push_back(std::move(rows));
  }
  std::vector<int> row_fill;  // flattened index of the next free column per row
  std::vector<std::pair<int, int>> row_ids;
  for (int k = 0; k < shape.level(); ++k)
    for (int r = 0; r < shape.component(k).length(); ++r) row_ids.emplace_back(k, r);
  row_fill.assign(row_ids.size(), 0);

  std::vector<Tableau> out;
  std::function<void(int)> rec = [&](int next) {
    if (next > n) {
      std::vector<int> word;
      for (auto& comp : fill)
        for (auto& row : comp) word.insert(word.end(), row.begin(), row.end());
      out.emplace_back(shape, std::move(word));
      return;
    }
    for (std::size_t idx = 0; idx < row_ids.size(); ++idx) {
      auto [k, r] = row_ids[idx];
      int c = row_fill[idx];
      if (c >= shape.component(k).part(r)) continue;
      if (flavor == TableauFlavor::Standard && r > 0 && row_fill[idx - 1] <= c) continue;
      fill[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = next;
      ++row_fill[idx];
      rec(next + 1);
      --row_fill[idx];
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

// -------------------------------------------------------------- Permutation

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("not a permutation image list");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::from_word(int n, std::span<const int> word) {
  Permutation w(n);
  for (int i : word) w = w.times_generator(i);
  return w;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i + 1)) return false;
  return true;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> word;
  Permutation w = *this;
  while (!w.is_identity()) {
    for (int i = 1; i < degree(); ++i) {
      if (w.has_right_descent(i)) {
        word.push_back(i);
        w = w.times_generator(i);
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& v) const {
  if (v.degree() != degree()) throw std::invalid_argument("permutation degree mismatch");
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = v(images_[i]);
  return Permutation(std::move(out));
}

Permutation Permutation::times_generator(int i) const {
  Permutation w = *this;
  for (int& v : w.images_) {
    if (v == i) v = i + 1;
    else if (v == i + 1) v = i;
  }
  return w;
}

Permutation Permutation::generator_times(int i) const {
  Permutation w = *this;
  std::swap(w.images_[static_cast<std::size_t>(i - 1)], w.images_[static_cast<std::size_t>(i)]);
  return w;
}

bool Permutation::has_right_descent(int i) const {
  // l(w s_i) < l(w) iff i+1 occurs before i in the image list.
  for (int v : images_) {
    if (v == i) return false;
    if (v == i + 1) return true;
  }
  return false;
}

bool Permutation::has_left_descent(int i) const {
  return images_[static_cast<std::size_t>(i - 1)] > images_[static_cast<std::size_t>(i)];
}

std::uint32_t Permutation::rank() const {
  std::uint32_t r = 0;
  const int n = degree();
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (images_[static_cast<std::size_t>(j)] < images_[static_cast<std::size_t>(i)]) ++smaller;
    r = r * static_cast<std::uint32_t>(n - i) + static_cast<std::uint32_t>(smaller);
  }
  return r;
}

Permutation Permutation::unrank(int n, std::uint32_t rank) {
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint32_t>(n - i);
    digits[static_cast<std::size_t>(i)] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> images;
  for (int i = 0; i < n; ++i) {
    auto it = pool.begin() + digits[static_cast<std::size_t>(i)];
    images.push_back(*it);
    pool.erase(it);
  }
  return Permutation(std::move(images));
}

Permutation d_of(const Tableau& t) {
  if (!t.is_row_standard()) throw std::invalid_argument("d_of needs a row-standard tableau");
  return Permutation(t.reading_word());
}

std::set<int> young_subgroup_generators(const MultiPartition& shape) {
  std::set<int> gens;
  const Tableau t = initial_tableau(shape);
  for (int i = 1; i < shape.size(); ++i) {
    const Node a = t.node_of(i);
    const Node b = t.node_of(i + 1);
    if (a.comp == b.comp && a.row == b.row) gens.insert(i);
  }
  return gens;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

}  // namespace hecke
