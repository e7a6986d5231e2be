#include "highway/pricing.hpp"

namespace highway {

PriceModel PriceModel::parse(const std::string& text) {
  if (text == "positive") return positive();
  if (text == "discount") return discount();
  if (text == "coupon") return coupon();
  if (text.rfind("bounded:", 0) == 0) {
    Rational b;
    try {
      b = Rational::parse(text.substr(8));
    } catch (const std::exception& e) {
      throw ValidationError("bounded model: " + std::string(e.what()));
    }
    if (!b.is_integer() || b.num() < 0) throw ValidationError("bounded model needs a nonnegative integer B");
    return bounded(b.num());
  }
  throw ValidationError("unknown price model '" + text + "'");
}

std::string PriceModel::str() const {
  switch (kind) {
    case Kind::positive: return "positive";
    case Kind::discount: return "discount";
    case Kind::bounded: return "bounded:" + std::to_string(bound);
    case Kind::coupon: return "coupon";
  }
  return "?";
}

Rational bundle_sum(const Instance& instance, std::size_t customer, const PriceVector& prices) {
  Rational sum;
  for (int item : instance.bundle(customer)) sum += prices[item - 1];
  return sum;
}

Rational payment(const Instance& instance, std::size_t customer, const PriceVector& prices, PriceModel model) {
  Rational sum = bundle_sum(instance, customer, prices);
  if (Rational(instance.customer(customer).valuation) < sum) return Rational(0);
  if (model.kind == PriceModel::Kind::coupon && sum < Rational(0)) return Rational(0);
  return sum;
}

Rational profit(const Instance& instance, const PriceVector& prices, PriceModel model) {
  if (prices.size() != static_cast<std::size_t>(instance.n())) {
    throw ValidationError("price vector has " + std::to_string(prices.size()) + " entries, instance has " +
                          std::to_string(instance.n()) + " items");
  }
  if (model.kind == PriceModel::Kind::positive || model.kind == PriceModel::Kind::bounded) {
    const Rational floor = model.kind == PriceModel::Kind::positive ? Rational(0) : Rational(-model.bound);
    for (std::size_t i = 0; i < prices.size(); ++i) {
      if (prices[i] < floor) {
        int item = static_cast<int>(i) + 1;
        throw ConstraintError("item " + std::to_string(item) + " priced " + prices[i].str() + " below " +
                                  floor.str() + " under the " + model.str() + " model",
                              item);
      }
    }
  }
  Rational total;
  for (std::size_t j = 0; j < instance.m(); ++j) total += payment(instance, j, prices, model);
  return total;
}

}  // namespace highway
