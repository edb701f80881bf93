#include "powsum/power_sum.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace powsum {

namespace {

struct SpecKey {
    Rational a0;
    Rational d;
    friend auto operator<=>(const SpecKey&, const SpecKey&) = default;
};

struct Derived {
    Polynomial formula;
    Rational constant;
};

// Per spec, entry m holds S_m. Entries are only ever appended.
class DerivationCache {
public:
    ClosedFormSum get(const ArithmeticSpec& spec, unsigned m) {
        const SpecKey key{spec.a0, spec.d};
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end() && it->second.size() > m)
                return make(spec, m, it->second[m]);
        }
        std::unique_lock lock(mutex_);
        auto& chain = table_[key];
        if (chain.empty())
            chain.push_back({Polynomial::identity(), Rational(1)});
        while (chain.size() <= m)
            chain.push_back(step(spec, static_cast<unsigned>(chain.size()), chain.back().formula));
        return make(spec, m, chain[m]);
    }

    void clear() {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

private:
    static ClosedFormSum make(const ArithmeticSpec& spec, unsigned m, const Derived& d) {
        return ClosedFormSum{spec, m, d.formula, d.constant};
    }

    // S_m = integral(m D S_{m-1}) + C n, with C fixed by S_m(1) = a0^m.
    static Derived step(const ArithmeticSpec& spec, unsigned m, const Polynomial& previous) {
        Polynomial formula = antidifferentiate(previous * (Rational(m) * spec.d));
        Rational c = pow(spec.a0, m) - evaluate(formula, Rational(1));
        formula += Polynomial::monomial(c, 1);
        return {std::move(formula), std::move(c)};
    }

    std::shared_mutex mutex_;
    std::map<SpecKey, std::vector<Derived>> table_;
};

DerivationCache& cache() {
    static DerivationCache instance;
    return instance;
}

}  // namespace

Polynomial ArithmeticSpec::term_polynomial() const {
    return Polynomial{a0 - d, d};
}

const Rational& ConstantTable::at(std::size_t i) const {
    if (i == 0 || i > values.size())
        throw std::out_of_range("constant index " + std::to_string(i) + " outside 1.." + std::to_string(values.size()));
    return values[i - 1];
}

ClosedFormSum derive_linear(const ArithmeticSpec& spec) {
    return derive(spec, 1);
}

ClosedFormSum derive(const ArithmeticSpec& spec, unsigned m) {
    return cache().get(spec, m);
}

ConstantTable constant_table(const ArithmeticSpec& spec, std::size_t max_index) {
    if (max_index == 0)
        throw std::invalid_argument("constant table needs max_index >= 1");
    ConstantTable table{spec, {}};
    table.values.reserve(max_index);
    for (std::size_t i = 1; i <= max_index; ++i)
        table.values.push_back(derive(spec, static_cast<unsigned>(i + 1)).constant);
    return table;
}

Rational bernoulli(unsigned k) {
    if (k < 2)
        throw std::invalid_argument("bernoulli(" + std::to_string(k) +
                                    "): only B_k for k >= 2 come out of the power-sum constants");
    return derive(ArithmeticSpec{Rational(1), Rational(1)}, k).constant;
}

void clear_power_sum_cache() {
    cache().clear();
}

}  // namespace powsum
