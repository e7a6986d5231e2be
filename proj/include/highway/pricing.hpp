#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "highway/instance.hpp"
#include "highway/rational.hpp"

namespace highway {

/// p_1..p_n, stored 0-based (prices[i-1] is the price of item i).
using PriceVector = std::vector<Rational>;

/// The four profit models. Only `coupon` is optimized by the algorithms; the
/// others are evaluators.
struct PriceModel {
  enum class Kind { positive, discount, bounded, coupon };

  Kind kind = Kind::coupon;
  std::int64_t bound = 0;  // B for Kind::bounded

  static PriceModel positive() { return {Kind::positive, 0}; }
  static PriceModel discount() { return {Kind::discount, 0}; }
  static PriceModel bounded(std::int64_t b) { return {Kind::bounded, b}; }
  static PriceModel coupon() { return {Kind::coupon, 0}; }

  /// "positive", "discount", "bounded:B" or "coupon".
  static PriceModel parse(const std::string& text);
  std::string str() const;
};

/// p(e_j): sum of the prices of the items in customer j's bundle.
Rational bundle_sum(const Instance& instance, std::size_t customer, const PriceVector& prices);

/// What customer j pays under `model`; zero when the customer declines.
Rational payment(const Instance& instance, std::size_t customer, const PriceVector& prices,
                 PriceModel model = PriceModel::coupon());

/// Total profit under `model`. Throws ConstraintError when the price vector
/// breaks the model's sign constraint, ValidationError on a length mismatch.
Rational profit(const Instance& instance, const PriceVector& prices, PriceModel model = PriceModel::coupon());

}  // namespace highway
