#pragma once

#include <string>

#include "seqalg/rational.hpp"

namespace seqalg {

// Coefficient-field adapter used by the generic sequence engine.  A field
// with exact_zero_test==true has a decidable zero test; sequence-valued
// coefficients (used for the two-variable layer) do not, because an
// infinite sequence of zeros cannot be recognised in finite time.
template <class C>
struct field_traits;

template <>
struct field_traits<Rational> {
    static constexpr bool exact_zero_test = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_integer(const Integer& n) { return Rational(n); }
    static bool is_zero(const Rational& a) { return a.is_zero(); }
    static bool is_one(const Rational& a) { return a.is_one(); }
    static Integer to_whole(const Rational& a) { return a.to_whole(); }
    static std::string to_string(const Rational& a) { return a.str(); }
};

template <>
struct field_traits<Gaussian> {
    static constexpr bool exact_zero_test = true;
    static Gaussian zero() { return Gaussian(); }
    static Gaussian one() { return Gaussian(1); }
    static Gaussian from_integer(const Integer& n) { return Gaussian(Rational(n)); }
    static bool is_zero(const Gaussian& a) { return a.is_zero(); }
    static bool is_one(const Gaussian& a) { return a.is_one(); }
    static Integer to_whole(const Gaussian& a) { return a.to_whole(); }
    static std::string to_string(const Gaussian& a) { return a.str(); }
};

} // namespace seqalg
