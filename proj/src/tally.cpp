#include "severi/tally.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace severi {

Tally::Tally(std::vector<int> entries, int origin) : entries_(std::move(entries)), origin_(origin) {
  if (origin_ < 1) throw std::invalid_argument("tally origin must be >= 1");
  for (int v : entries_)
    if (v < 0) throw std::invalid_argument("tally entries must be non-negative");
  trim();
}

Tally Tally::unit(int k, int origin) {
  if (k < origin) throw std::invalid_argument("unit tally index below origin");
  std::vector<int> e(static_cast<std::size_t>(k - origin + 1), 0);
  e.back() = 1;
  return Tally(std::move(e), origin);
}

void Tally::trim() {
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

int Tally::operator[](int k) const {
  int i = k - origin_;
  if (i < 0 || i >= static_cast<int>(entries_.size())) return 0;
  return entries_[static_cast<std::size_t>(i)];
}

int Tally::norm() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

int Tally::weight() const {
  int w = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) w += (origin_ + static_cast<int>(i)) * entries_[i];
  return w;
}

void Tally::require_same_origin(const Tally& other) const {
  if (origin_ != other.origin_) throw std::invalid_argument("tallies with different origins");
}

Tally Tally::operator+(const Tally& other) const {
  require_same_origin(other);
  std::vector<int> e(std::max(entries_.size(), other.entries_.size()), 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i < entries_.size()) e[i] += entries_[i];
    if (i < other.entries_.size()) e[i] += other.entries_[i];
  }
  return Tally(std::move(e), origin_);
}

Tally Tally::operator-(const Tally& other) const {
  require_same_origin(other);
  if (!other.below(*this)) throw std::domain_error("tally difference " + str() + " - " + other.str() + " is negative");
  std::vector<int> e = entries_;
  for (std::size_t i = 0; i < other.entries_.size(); ++i) e[i] -= other.entries_[i];
  return Tally(std::move(e), origin_);
}

bool Tally::below(const Tally& other) const {
  require_same_origin(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    int o = i < other.entries_.size() ? other.entries_[i] : 0;
    if (entries_[i] > o) return false;
  }
  return true;
}

std::strong_ordering Tally::operator<=>(const Tally& other) const {
  if (auto c = origin_ <=> other.origin_; c != 0) return c;
  return std::lexicographical_compare_three_way(entries_.begin(), entries_.end(), other.entries_.begin(),
                                                other.entries_.end());
}

std::string Tally::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s + "]";
}

std::size_t TallyHash::operator()(const Tally& t) const noexcept {
  std::size_t h = static_cast<std::size_t>(t.origin()) * 0x9e3779b97f4a7c15ULL;
  for (int v : t.entries()) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL + 0x7f4a7c15;
  return h;
}

Measures measures(const Tally& t) { return {t.norm(), t.weight()}; }

BigCount power(const Tally& t) {
  BigCount r = 1;
  for (int k = t.origin(); k < t.end_index(); ++k) {
    BigCount f;
    mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(t[k]));
    r *= f;
  }
  return r;
}

BigCount choose(const Tally& hi, const Tally& lo) {
  if (!lo.below(hi)) throw std::domain_error("choose: " + lo.str() + " is not below " + hi.str());
  BigCount r = 1;
  for (int k = hi.origin(); k < hi.end_index(); ++k) r *= binomial(hi[k], lo[k]);
  return r;
}

BigCount multinomial(const Tally& whole, std::span<const Tally> parts) {
  Tally total(std::vector<int>{}, whole.origin());
  for (const Tally& p : parts) total = total + p;
  if (total != whole) throw std::domain_error("multinomial: parts do not sum to " + whole.str());
  BigCount r = 1;
  std::vector<long> column(parts.size());
  for (int k = whole.origin(); k < whole.end_index(); ++k) {
    for (std::size_t i = 0; i < parts.size(); ++i) column[i] = parts[i][k];
    r *= multinomial(std::span<const long>(column));
  }
  return r;
}

namespace {

void enumerate_rec(int k, int w, int remaining, const Tally& floor, std::vector<int>& current,
                   std::vector<Tally>& out) {
  if (remaining == 0) {
    // Indices not yet visited stay zero, so their floor entries must be zero.
    for (int j = k; j <= w; ++j)
      if (floor[j] > 0) return;
    out.emplace_back(current);
    return;
  }
  if (k > w) return;
  int lo = floor[k];
  for (int c = remaining / k; c >= lo; --c) {
    current.push_back(c);
    enumerate_rec(k + 1, w, remaining - c * k, floor, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Tally> enumerate_with_weight(int w, const Tally& floor) {
  if (w < 0) throw std::invalid_argument("enumerate_with_weight: negative weight");
  if (floor.origin() != 1) throw std::invalid_argument("enumerate_with_weight: floor must have origin 1");
  std::vector<Tally> out;
  if (floor.weight() > w) return out;
  std::vector<int> current;
  enumerate_rec(1, w, w, floor, current, out);
  return out;
}

std::vector<Tally> sub_tallies(const Tally& bound) {
  std::vector<std::vector<int>> acc{{}};
  for (int limit : bound.entries()) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : acc)
      for (int c = limit; c >= 0; --c) {
        auto p = prefix;
        p.push_back(c);
        next.push_back(std::move(p));
      }
    acc = std::move(next);
  }
  std::vector<Tally> out;
  for (auto& e : acc) out.emplace_back(std::move(e), bound.origin());
  return out;
}

SheetProfile sheet_profile(std::span<const int> orders) {
  if (orders.empty()) throw std::invalid_argument("sheet_profile: empty order list");
  BigCount mu = 1;
  long lambda = 1;
  int max_order = 0;
  for (int m : orders) {
    if (m < 2) throw std::invalid_argument("sheet_profile: tacnode order " + std::to_string(m) + " < 2");
    mu *= m;
    lambda = std::lcm(lambda, static_cast<long>(m));
    max_order = std::max(max_order, m);
  }
  BigCount kappa = exact_div(mu, BigCount(lambda), "sheet_profile kappa");
  if (lambda % max_order != 0) throw InternalInconsistency("sheet_profile: lcm not divisible by max");
  return {mu, lambda, kappa, lambda / max_order};
}

TacnodeMeasures mu_nu(const Tally& tau) {
  if (tau.origin() != 2) throw std::invalid_argument("mu_nu: tacnode tally must start at order 2");
  TacnodeMeasures r{power(tau), 0};
  for (int m = 2; m < tau.end_index(); ++m) r.nu += (m - 1) * tau[m];
  return r;
}

Tally parse_tally(std::string_view text, int origin) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto fail = [&]() -> Tally {
    throw std::invalid_argument("invalid tally '" + std::string(text) + "' (expected k or [n1,n2,...])");
  };
  if (s.empty()) return fail();
  auto parse_entry = [&](std::string_view e) -> int {
    if (e.empty() || e.size() > 9) fail();
    for (char c : e)
      if (!std::isdigit(static_cast<unsigned char>(c))) fail();
    return std::stoi(std::string(e));
  };
  if (s.front() != '[') return Tally({parse_entry(s)}, origin);
  if (s.back() != ']') return fail();
  std::string_view body(s);
  body = body.substr(1, body.size() - 2);
  std::vector<int> entries;
  while (!body.empty()) {
    auto comma = body.find(',');
    entries.push_back(parse_entry(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) fail();
  }
  return Tally(std::move(entries), origin);
}

}  // namespace severi
