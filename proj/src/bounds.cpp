#include "kempe/bounds.hpp"

#include <string>

#include "kempe/errors.hpp"

namespace kempe {

int indicator_odd(int x)
{
    return x % 2 != 0 ? 1 : 0;
}

long binomial2(long x)
{
    return x < 2 ? 0 : x * (x - 1) / 2;
}

long f_bound(int x)
{
    if (x < 0) throw InputError("f_bound needs x >= 0");
    const long binomial_form = binomial2((x + 1) / 2) + binomial2(x / 2);
    const long lx = x;
    const long closed_form = (lx * lx - 2 * lx + indicator_odd(x)) / 4;
    if (binomial_form != closed_form) {
        throw InvariantViolation("f(" + std::to_string(x) + "): binomial and closed forms disagree");
    }
    return binomial_form;
}

long conjecture4_bound(int k)
{
    if (k < 4) throw InputError("conjecture4_bound needs k >= 4");
    const long lk = k;
    return (lk * lk + 8 * lk - 45 + indicator_odd(k - 1)) / 4;
}

} // namespace kempe
