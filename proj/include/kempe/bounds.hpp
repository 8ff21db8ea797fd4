#pragma once

namespace kempe {

/// x mod 2 for x >= 1.
int indicator_odd(int x);

/// C(ceil(x/2), 2) + C(floor(x/2), 2): the fewest edges inside the parts of
/// any split of K_x into two sides. Checked against (x^2 - 2x + odd(x)) / 4.
long f_bound(int x);

/// The revised edge threshold (k^2 + 8k - 45 + odd(k-1)) / 4.
long conjecture4_bound(int k);

long binomial2(long x);

} // namespace kempe
