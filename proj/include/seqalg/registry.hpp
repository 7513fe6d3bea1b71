#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqalg/bivariate.hpp"
#include "seqalg/species.hpp"

namespace seqalg {

// Univariate registry lookup, valid over any coefficient field.
template <class C>
std::optional<Seq<C>> lookup_univariate(const std::string& name) {
    using S = Seq<C>;
    if (name == "x") return S::x();
    if (name == "expx" || name == "exp") return expx<C>();
    if (name == "starx") return starx<C>();
    if (name == "lgnx") return lgnx<C>();
    if (name == "sinx" || name == "sin") return sinx<C>();
    if (name == "cosx" || name == "cos") return cosx<C>();
    if (name == "tanx" || name == "tan") return tanx<C>();
    if (name == "secx" || name == "sec") return secx<C>();
    if (name == "sinhx" || name == "sinh") return sinhx<C>();
    if (name == "coshx" || name == "cosh") return coshx<C>();
    if (name == "tanhx" || name == "tanh") return tanhx<C>();
    if (name == "gdx") return gdx<C>();
    if (name == "atanx") return atanx<C>();
    if (name == "asinx") return asinx<C>();
    if (name == "xcotx") return xcotx<C>();
    if (name == "xcothx") return xcothx<C>();
    if (name == "nats") return nats<C>();
    if (name == "pos") return pos<C>();
    if (name == "facs") return facs<C>();
    if (name == "list") return list_seq<C>();
    if (name == "set") return set_seq<C>();
    if (name == "cycle") return cycle_seq<C>();
    if (name == "perm") return starx<C>();
    if (name == "emptySet") return S::one();
    if (name == "singletonSet") return S::x();
    if (name == "singletonList") return S::x();
    if (name == "oneCycle") return S::x();
    if (name == "ordPair") return S::x() * S::x();
    if (name == "nonEmptyList") return nonEmptyList<C>();
    if (name == "pluralList") return pluralList<C>();
    if (name == "nonEmptySet") return nonEmptySet<C>();
    if (name == "pluralSet") return pluralSet<C>();
    if (name == "fibonacci" || name == "fib") return fibonacci<C>();
    if (name == "oneOrTwoCycle") return oneOrTwoCycle<C>();
    if (name == "involution") return involution<C>();
    if (name == "nonLoopCycle") return nonLoopCycle<C>();
    if (name == "derangement") return derangement<C>();
    if (name == "permutation") return permutation<C>();
    if (name == "setPartition") return setPartition<C>();
    if (name == "oddNumberOfParts") return oddNumberOfParts<C>();
    if (name == "evenSizedParts") return evenSizedParts<C>();
    if (name == "catalanTree") return catalanTree<C>();
    if (name == "cayleyTree") return cayleyTree<C>();
    if (name == "connectedAcyclicGraph") return connectedAcyclicGraph<C>();
    if (name == "acyclicGraph") return acyclicGraph<C>();
    if (name == "motzkinTree") return motzkinTree<C>();
    if (name == "hipparchusSchroeder") return hipparchusSchroeder<C>();
    if (name == "largeSchroeder") return largeSchroeder<C>();
    if (name == "connectedMapping") return connectedMapping<C>();
    if (name == "mapping") return mapping<C>();
    if (name == "fixedPointFree") return fixedPointFree<C>();
    if (name == "idempotent") return idempotent<C>();
    if (name == "partialMapping") return partialMapping<C>();
    if (name == "surjection") return surjection<C>();
    if (name == "zigzag") return zigzag<C>();
    if (name == "bernoulli") return bernoulli_seq<C>();
    if (name == "catalan") return catalan<C>();
    if (name == "fac") return fac_ode<C>();
    return std::nullopt;
}

// Bivariate registry lookup (diagonal representation, rational
// coefficients); univariate names are also resolvable here, instantiated
// with polynomial coefficients.
std::optional<Biv> lookup_bivariate(const std::string& name);

// All registry names with their defining expressions, for the name listing
// and for parser round-trip tests.  The expression strings are
// documentation (the sequences themselves are built in the library);
// self-referential entries name themselves on the right-hand side.
const std::vector<std::pair<std::string, std::string>>& registry_names();

} // namespace seqalg
