#include "msres/index.hpp"

#include <algorithm>
#include <numeric>

namespace msres {

namespace {

std::string join(std::span<const unsigned> parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s;
}

void compositions(std::size_t t, unsigned sum, std::vector<unsigned>& prefix, std::vector<DeltaIndex>& out) {
  if (prefix.size() + 1 == t) {
    prefix.push_back(sum);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned first = sum + 1; first-- > 0;) {
    prefix.push_back(first);
    compositions(t, sum - first, prefix, out);
    prefix.pop_back();
  }
}

void partitions(std::size_t t, unsigned remaining, unsigned cap, std::vector<unsigned>& prefix,
                std::vector<DeltaIndex>& out) {
  if (remaining == 0) {
    std::vector<unsigned> full = prefix;
    full.resize(t, 0);
    out.emplace_back(std::move(full));
    return;
  }
  if (prefix.size() == t) return;
  for (unsigned part = std::min(remaining, cap); part >= 1; --part) {
    prefix.push_back(part);
    partitions(t, remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

DeltaIndex::DeltaIndex(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(Errc::invalid_argument, "delta index needs at least one entry");
}

unsigned DeltaIndex::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }
unsigned DeltaIndex::max() const { return *std::max_element(parts_.begin(), parts_.end()); }
std::string DeltaIndex::str() const { return "(" + join(parts_) + ")"; }
std::string DeltaIndex::csv() const { return join(parts_); }

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] > parts_[i - 1]) throw Error(Errc::invalid_argument, "partition must be weakly decreasing");
}

unsigned Partition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }
std::string Partition::str() const { return "(" + join(parts_) + ")"; }
std::string Partition::csv() const { return join(parts_); }

std::strong_ordering lex_cmp(const DeltaIndex& a, const DeltaIndex& b) {
  if (a.size() != b.size()) throw Error(Errc::length_mismatch, "comparing delta indices of different lengths");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::strong_ordering glex_cmp(const DeltaIndex& a, const DeltaIndex& b) {
  if (a.size() != b.size()) throw Error(Errc::length_mismatch, "comparing delta indices of different lengths");
  if (a.total() != b.total()) return a.total() <=> b.total();
  return lex_cmp(a, b);
}

std::vector<DeltaIndex> enumerate_deltas(std::size_t t, unsigned d0) {
  if (t == 0) throw Error(Errc::invalid_argument, "need t >= 1");
  std::vector<DeltaIndex> out;
  std::vector<unsigned> prefix;
  for (unsigned sum = d0 + 1; sum-- > 0;) compositions(t, sum, prefix, out);
  return out;
}

std::vector<DeltaIndex> enumerate_partition_indices(std::size_t t) {
  if (t == 0) throw Error(Errc::invalid_argument, "need t >= 1");
  std::vector<DeltaIndex> out;
  std::vector<unsigned> prefix;
  partitions(t, static_cast<unsigned>(t), static_cast<unsigned>(t), prefix, out);
  return out;
}

Partition conjugate(const DeltaIndex& delta) {
  const unsigned s = delta.max();
  std::vector<unsigned> conj(s, 0);
  for (unsigned i = 1; i <= s; ++i)
    conj[i - 1] = static_cast<unsigned>(
        std::count_if(delta.parts().begin(), delta.parts().end(), [i](unsigned d) { return d >= i; }));
  return Partition(std::move(conj));
}

Partition conjugate(const Partition& p) {
  if (p.size() == 0) return Partition();
  return conjugate(DeltaIndex(std::vector<unsigned>(p.parts().begin(), p.parts().end())));
}

}  // namespace msres
