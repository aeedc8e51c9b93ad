#pragma once

#include <map>
#include <memory>

#include "semicurve/curve_model.hpp"
#include "semicurve/value_semigroup.hpp"

namespace semicurve {

// Uniform c / ell source for the series computations: either the ring model
// or the pure combinatorial semigroup (chain and path formulas).
class CProvider {
  public:
    virtual ~CProvider() = default;
    virtual int r() const = 0;
    virtual Expo delta() const = 0;
    virtual long long c(const Expo& v) const = 0;
    virtual int c_axis(const Expo& v, int i) const = 0;
    virtual long long ell(const Expo& v) const = 0;
    virtual const char* kind() const = 0;
};

class ModelProvider : public CProvider {
  public:
    ModelProvider(AlgebraModel model, ValueSemigroup semigroup)
        : model_(std::move(model)), delta_(semigroup.delta()) {}
    explicit ModelProvider(const BuiltModel& built)
        : model_(built.model), delta_(built.semigroup.delta()) {}

    int r() const override { return model_.r(); }
    Expo delta() const override { return delta_; }
    long long c(const Expo& v) const override { return model_.c(v); }
    int c_axis(const Expo& v, int i) const override { return model_.c_axis(v, i); }
    long long ell(const Expo& v) const override { return model_.ell(v); }
    const char* kind() const override { return "ring-model"; }

  private:
    AlgebraModel model_;
    Expo delta_;
};

class SemigroupProvider : public CProvider {
  public:
    explicit SemigroupProvider(ValueSemigroup s) : s_(std::move(s)) {}

    const ValueSemigroup& semigroup() const { return s_; }

    int r() const override { return s_.r(); }
    Expo delta() const override { return s_.delta(); }
    long long c(const Expo& v) const override { return s_.c_chain(v); }
    int c_axis(const Expo& v, int i) const override { return s_.c_axis(v, i); }
    long long ell(const Expo& v) const override {
        auto it = ell_memo_.find(v);
        if (it != ell_memo_.end()) return it->second;
        long long d = s_.ell(v);
        ell_memo_.emplace(v, d);
        return d;
    }
    const char* kind() const override { return "semigroup"; }

  private:
    ValueSemigroup s_;
    mutable std::map<Expo, long long> ell_memo_;
};

}  // namespace semicurve
