/* SPDX-License-Identifier: Apache-2.0 */

#include "koecher/summation.hpp"

#include <cmath>

namespace koecher {

namespace bmp = boost::multiprecision;

namespace {

constexpr std::size_t kWindow = 11;  // ten ratios
constexpr double kRatioLimit = 0.9;
constexpr std::int64_t kPatience = 1000;

}  // namespace

SeriesAccumulator::SeriesAccumulator(const PrecisionContext& ctx) : ctx_(ctx) {
  PrecisionScope scope(ctx_);
  small_ = pow10_neg(ctx_.target_digits + 2);
  target_tail_ = ctx_.tolerance() / 10;
  sum_ = BigReal(0L);
  magnitude_at_half_ = Real(0);
  tail_ = Real(0);
}

bool SeriesAccumulator::add(const BigReal& term) {
  PrecisionScope scope(ctx_);
  sum_ += term;
  ++count_;
  window_.push_back(term.value());
  if (window_.size() > kWindow) window_.pop_front();
  update_certificate();
  if (!certified_) check_hopeless();
  return certified_;
}

void SeriesAccumulator::update_certificate() {
  certified_ = false;
  if (window_.size() < kWindow) return;
  const Real last = bmp::abs(window_.back());
  if (last > small_) return;

  bool all_zero = true;
  for (const auto& t : window_)
    if (t != 0) all_zero = false;
  if (all_zero) {
    tail_ = 0;
    rule_ = "vanishing";
    certified_ = true;
    return;
  }

  Real rho(0);
  bool alternating = true;
  bool decreasing = true;
  for (std::size_t i = 1; i < window_.size(); ++i) {
    const Real prev = bmp::abs(window_[i - 1]);
    const Real cur = bmp::abs(window_[i]);
    if (prev == 0) {
      if (cur != 0) rho = Real(1);
    } else {
      const Real r = cur / prev;
      if (r > rho) rho = r;
    }
    if (bmp::signbit(window_[i]) == bmp::signbit(window_[i - 1]) || window_[i] == 0) alternating = false;
    if (cur > prev) decreasing = false;
  }

  if (rho < kRatioLimit) {
    tail_ = last * rho / (1 - rho);
    rule_ = "geometric";
  } else if (alternating && decreasing) {
    tail_ = last;
    rule_ = "alternating";
  } else {
    return;
  }
  certified_ = tail_ <= target_tail_;
}

void SeriesAccumulator::check_hopeless() {
  if (count_ >= ctx_.max_terms)
    throw AccuracyError("series: max_terms reached before the tail could be certified", sum_, count_);
  if (count_ < kPatience || (count_ & (count_ - 1)) != 0) return;

  // Power-of-two checkpoint: judge whether the remaining work is feasible.
  const Real magnitude = bmp::abs(window_.back());
  const Real previous = magnitude_at_half_;
  const std::int64_t previous_n = checkpoint_;
  magnitude_at_half_ = magnitude;
  checkpoint_ = count_;
  if (previous_n == 0 || magnitude == 0) return;

  bool alternating = true;
  Real rho(0);
  for (std::size_t i = 1; i < window_.size(); ++i) {
    if (bmp::signbit(window_[i]) == bmp::signbit(window_[i - 1])) alternating = false;
    if (window_[i - 1] != 0 && bmp::abs(window_[i] / window_[i - 1]) > rho) rho = bmp::abs(window_[i] / window_[i - 1]);
  }
  if (rho < kRatioLimit) return;
  if (!alternating)
    throw AccuracyError("series: term ratio persistently >= 0.9 without alternation; tail not certifiable", sum_,
                        count_);
  const double decay = bmp::log2(previous / magnitude).convert_to<double>() /
                       std::log2(static_cast<double>(count_) / static_cast<double>(previous_n));
  if (!(decay > 0))
    throw AccuracyError("series: alternating terms are not decreasing", sum_, count_);
  const double digits_short = bmp::log10(magnitude / small_).convert_to<double>();
  const double needed = static_cast<double>(count_) * std::pow(10.0, digits_short / decay);
  if (needed > static_cast<double>(ctx_.max_terms))
    throw AccuracyError("series: estimated " + std::to_string(static_cast<long long>(std::min(needed, 9e18))) +
                            " terms exceed max_terms",
                        sum_, count_);
}

SeriesValue SeriesAccumulator::result() const {
  if (!certified_) throw AccuracyError("series: tail not certified", sum_, count_);
  PrecisionScope scope(ctx_);
  BigReal v = sum_;
  v.widen(tail_);
  return {v, count_, tail_, rule_};
}

SeriesValue sum_series(const std::function<BigReal(std::int64_t)>& term, std::int64_t first,
                       const PrecisionContext& ctx) {
  SeriesAccumulator acc(ctx);
  for (std::int64_t k = first;; ++k)
    if (acc.add(term(k))) return acc.result();
}

}  // namespace koecher
