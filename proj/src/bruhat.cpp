#include "korbit/bruhat.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "korbit/error.hpp"

namespace korbit {

PrefixProfile::PrefixProfile(const Permutation& p) : m_(p.size()) {
  data_.reserve(static_cast<std::size_t>(m_ * (m_ + 1) / 2));
  std::vector<std::uint8_t> prefix;
  prefix.reserve(static_cast<std::size_t>(m_));
  for (int i = 1; i <= m_; ++i) {
    const auto v = static_cast<std::uint8_t>(p(i));
    prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
    data_.insert(data_.end(), prefix.begin(), prefix.end());
  }
}

bool PrefixProfile::leq(const PrefixProfile& other) const {
  if (m_ != other.m_) {
    throw Error(ErrorKind::SizeMismatch, "Bruhat comparison of different sizes");
  }
  const std::size_t n = data_.size();
  const std::uint8_t* a = data_.data();
  const std::uint8_t* b = other.data_.data();
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) {
    throw Error(ErrorKind::SizeMismatch, "Bruhat comparison of different sizes");
  }
  return PrefixProfile(u).leq(PrefixProfile(v));
}

int max_rank(int m) { return m * m / 4; }

int rank(const Involution& pi) {
  const int m = pi.size();
  int sum = 0;
  for (int i = 1; i <= m; ++i) {
    const int j = pi(i);
    if (j <= i) continue;
    int crossing = 0;
    for (int k = i + 1; k < j; ++k) {
      if (pi(k) < i) ++crossing;
    }
    sum += j - i - crossing;
  }
  return max_rank(m) - sum;
}

int codim(const Involution& pi) { return max_rank(pi.size()) - rank(pi); }

Interval::Interval(Involution base, std::vector<Involution> members)
    : base_(std::move(base)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  codes_.reserve(members_.size());
  for (const auto& v : members_) codes_.insert(v.code());
}

std::map<int, int> Interval::rank_histogram() const {
  std::map<int, int> hist;
  for (const auto& v : members_) ++hist[rank(v)];
  return hist;
}

const InvolutionTable& involution_table(int m) {
  if (m < 0 || m > kMaxDeskM) {
    throw Error(ErrorKind::TooLarge,
                "m=" + std::to_string(m) + " exceeds the desk-scale limit " +
                    std::to_string(kMaxDeskM));
  }
  static std::mutex mutex;
  static std::unique_ptr<InvolutionTable> tables[kMaxDeskM + 1];
  std::lock_guard lock(mutex);
  auto& slot = tables[m];
  if (!slot) {
    auto table = std::make_unique<InvolutionTable>();
    table->m = m;
    table->involutions = enumerate_involutions(m);
    table->profiles.reserve(table->involutions.size());
    for (const auto& v : table->involutions) table->profiles.emplace_back(v);
    slot = std::move(table);
  }
  return *slot;
}

Interval interval(const Involution& pi) {
  const InvolutionTable& table = involution_table(pi.size());
  const PrefixProfile base(pi);
  std::vector<Involution> members;
  for (std::size_t k = 0; k < table.involutions.size(); ++k) {
    if (base.leq(table.profiles[k])) members.push_back(table.involutions[k]);
  }
  return Interval(pi, std::move(members));
}

}  // namespace korbit
