#ifndef EQUIMULT_TEST_HELPERS_HPP
#define EQUIMULT_TEST_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "equimult/parse.hpp"

namespace eqt {

using namespace equimult;

inline field_ctx<qq> Q() { return {}; }
inline field_ctx<fp> GF(std::uint32_t p) { return field_ctx<fp>(p); }

using names_t = std::vector<std::string>;

template <class K>
poly<K> P(const std::string& s, const names_t& names, field_ctx<K> ctx) {
    return parse_poly<K>(s, names, ctx);
}

inline qpoly qp(const std::string& s, const names_t& names) { return P<qq>(s, names, Q()); }

template <class K>
ideal<K> mkI(const std::vector<std::string>& gens, const names_t& names, field_ctx<K> ctx) {
    return parse_ideal<K>(gens, names, ctx);
}

inline ideal<qq> qi(const std::vector<std::string>& gens, const names_t& names) {
    return mkI<qq>(gens, names, Q());
}

// Seeded random polynomial for property tests.
template <class K>
poly<K> random_poly(std::mt19937_64& rng, unsigned nvars, field_ctx<K> ctx, unsigned max_deg,
                    unsigned nterms) {
    std::vector<typename poly<K>::term> ts;
    std::uniform_int_distribution<unsigned> dd(0, max_deg);
    std::uniform_int_distribution<long> dc(-5, 5);
    for (unsigned t = 0; t < nterms; ++t) {
        monomial m(nvars);
        unsigned budget = dd(rng);
        for (unsigned i = 0; i < nvars && budget; ++i) {
            std::uniform_int_distribution<unsigned> de(0, budget);
            unsigned e = de(rng);
            m[i] = e;
            budget -= e;
        }
        ts.push_back({m, ctx.from_long(dc(rng))});
    }
    return poly<K>::from_terms(nvars, ctx, std::move(ts));
}

}  // namespace eqt

#endif
