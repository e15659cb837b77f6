#pragma once

#include <random>

#include "qcong/fraction.hpp"

// Shared randomized-instance generators for the test and property suites.
namespace qcong::testgen {

inline Rat random_rat(std::mt19937_64& rng, long max_abs = 6) {
    std::uniform_int_distribution<long> num(-max_abs, max_abs);
    std::uniform_int_distribution<long> den(1, max_abs);
    return Rat(num(rng), den(rng));
}

inline Rat random_nonzero_rat(std::mt19937_64& rng, long max_abs = 6) {
    Rat r = random_rat(rng, max_abs);
    while (r.is_zero()) r = random_rat(rng, max_abs);
    return r;
}

inline QPoly random_qpoly(std::mt19937_64& rng, long max_deg = 8, long max_abs = 6) {
    std::uniform_int_distribution<long> deg(0, max_deg);
    const long d = deg(rng);
    std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = random_rat(rng, max_abs);
    return QPoly(std::move(c));
}

inline QPoly random_nonzero_qpoly(std::mt19937_64& rng, long max_deg = 8) {
    QPoly f = random_qpoly(rng, max_deg);
    while (f.is_zero()) f = random_qpoly(rng, max_deg);
    return f;
}

inline QLaurent random_qlaurent(std::mt19937_64& rng, long max_deg = 8) {
    std::uniform_int_distribution<long> sh(-5, 5);
    return QLaurent(random_qpoly(rng, max_deg), sh(rng));
}

inline BiPoly random_bipoly(std::mt19937_64& rng, long max_adeg = 3, long max_qdeg = 5) {
    std::uniform_int_distribution<long> adeg(0, max_adeg);
    std::uniform_int_distribution<long> ash(-2, 2);
    const long d = adeg(rng);
    std::vector<QLaurent> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = random_qlaurent(rng, max_qdeg);
    return BiPoly(std::move(c), ash(rng));
}

// small fraction with a Pochhammer-atom denominator
inline QRat random_qrat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> e(1, 5);
    std::uniform_int_distribution<int> pick(0, 2);
    FactorMap den;
    for (int i = 0, count = pick(rng); i < count; ++i)
        den.mul_atom(Atom{Rat(1), 0, e(rng)}, 1);
    QLaurent num = random_qlaurent(rng, 4);
    while (num.is_zero()) num = random_qlaurent(rng, 4);
    return QRat(std::move(num), std::move(den));
}

}  // namespace qcong::testgen
