#include "seqalg/registry.hpp"

namespace seqalg {

std::optional<Biv> lookup_bivariate(const std::string& name) {
    if (name == "u") return biv_u();
    if (name == "z") return biv_z();
    if (name == "pascal") return pascal();
    if (name == "intComposition") return intComposition();
    if (name == "schroeder") return schroeder();
    if (name == "catalanLeaves") return catalanLeaves();
    if (name == "cayleyLeaves") return cayleyLeaves();
    if (name == "ebinom") return ebinom();
    if (name == "cycles") return cycles();
    if (name == "parts") return parts();
    if (name == "permFixedPts") return permFixedPts();
    if (name == "zigzags") return zigzags();
    if (name == "ascents") return ascents();
    if (name == "valleys") return valleys();
    if (name == "powerSums") return powerSums();
    if (name == "bernoulliPoly") return bernoulliPoly();
    if (name == "legendre") return legendre();
    if (name == "chebyshev") return chebyshev();
    if (name == "laguerre") return laguerre();
    if (name == "hermite") return hermite();
    if (name == "meixner") return meixner();
    return lookup_univariate<Poly>(name);
}

const std::vector<std::pair<std::string, std::string>>& registry_names() {
    static const std::vector<std::pair<std::string, std::string>> names = {
        {"x", "x"},
        {"expx", "1 + integ(expx)"},
        {"starx", "1/(1-x)"},
        {"lgnx", "integ(1/(1+x))"},
        {"sinx", "integ(cosx)"},
        {"cosx", "1 - integ(sinx)"},
        {"tanx", "integ(1 + tanx*tanx)"},
        {"secx", "1 + integ(secx*tanx)"},
        {"sinhx", "integ(coshx)"},
        {"coshx", "1 + integ(sinhx)"},
        {"tanhx", "integ(1 - tanhx*tanhx)"},
        {"gdx", "integ(1/coshx)"},
        {"atanx", "integ(1/(1+x^2))"},
        {"asinx", "integ(1/sqroot(1-x^2))"},
        {"xcotx", "x*cosx/sinx"},
        {"xcothx", "x*coshx/sinhx"},
        {"nats", "x/(1-x)^2"},
        {"pos", "1/(1-x)^2"},
        {"facs", "e2o(starx)"},
        {"list", "starx"},
        {"set", "expx"},
        {"cycle", "lg(starx)"},
        {"perm", "set o cycle"},
        {"emptySet", "1"},
        {"singletonSet", "x"},
        {"singletonList", "x"},
        {"oneCycle", "x"},
        {"ordPair", "x^2"},
        {"nonEmptyList", "list - 1"},
        {"pluralList", "list - singletonList - 1"},
        {"nonEmptySet", "set - emptySet"},
        {"pluralSet", "nonEmptySet - singletonSet"},
        {"fibonacci", "list o (singletonList + ordPair)"},
        {"fib", "fibonacci"},
        {"oneOrTwoCycle", "oneCycle + x^2/2"},
        {"involution", "set o oneOrTwoCycle"},
        {"nonLoopCycle", "cycle - singletonSet"},
        {"derangement", "set o nonLoopCycle"},
        {"permutation", "derangement * set"},
        {"setPartition", "set o nonEmptySet"},
        {"oddNumberOfParts", "sinhx o nonEmptySet"},
        {"evenSizedParts", "set o (coshx - 1)"},
        {"catalanTree", "x*(list o catalanTree)"},
        {"cayleyTree", "x*(set o cayleyTree)"},
        {"connectedAcyclicGraph", "cayleyTree - cayleyTree^2/2"},
        {"acyclicGraph", "set o connectedAcyclicGraph"},
        {"motzkinTree", "x*(1 + motzkinTree + motzkinTree^2)"},
        {"hipparchusSchroeder", "(1 + x - sqroot(1 - 6*x + x^2))/4"},
        {"largeSchroeder", "2*hipparchusSchroeder/x - 1"},
        {"connectedMapping", "cycle o cayleyTree"},
        {"mapping", "set o connectedMapping"},
        {"fixedPointFree", "set o nonLoopCycle o cayleyTree"},
        {"idempotent", "set o (oneCycle*set)"},
        {"partialMapping", "mapping*(set o cayleyTree)"},
        {"surjection", "list o nonEmptySet"},
        {"zigzag", "2*(tanx + secx)"},
        {"bernoulli", "x/(expx - 1)"},
        {"catalan", "1 + x*catalan^2"},
        {"fac", "1 + x*fac + x^2*deriv(fac)"},
        {"u", "u"},
        {"z", "z"},
        {"pascal", "starx o (u+z)"},
        {"intComposition", "list o (u*(nonEmptyList o z))"},
        {"schroeder", "z + u*(pluralList o schroeder)"},
        {"catalanLeaves", "u*z + z*(nonEmptyList o catalanLeaves)"},
        {"cayleyLeaves", "u*z + z*(nonEmptySet o cayleyLeaves)"},
        {"ebinom", "set o (z + u*z)"},
        {"cycles", "set o (u*(cycle o z))"},
        {"parts", "set o (u*(nonEmptySet o z))"},
        {"permFixedPts", "(derangement o z)*(set o (u*z))"},
        {"zigzags", "(sinx o u + cosx o u)/(cosx o (u+z))"},
        {"ascents", "list o (z + (pluralSet o (u*z - z))/(u - 1))"},
        {"valleys", "sqroot(1-u)/(sqroot(1-u) - tanhx o (z*sqroot(1-u)))"},
        {"powerSums", "(expx o (u*z) - 1)/(expx o z - 1)"},
        {"bernoulliPoly", "z*(expx o (u*z))/(expx o z - 1)"},
        {"legendre", "pow(1 - 2*u*z + z^2, -1/2)"},
        {"chebyshev", "(1 - u*z)/(z^2 - 2*u*z + 1)"},
        {"laguerre", "(1/(1-z))*(expx o (-(u*z)/(1-z)))"},
        {"hermite", "expx o (2*u*z - z^2)"},
        {"meixner", "pow(1 + z^2, -1/2)*(expx o (u*(atanx o z)))"},
    };
    return names;
}

} // namespace seqalg
