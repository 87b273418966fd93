# Reference values for the alternating series sum (-1)^(n-1) n^(-s).
#
# The eta oracle accelerates the series and certifies an absolute error
# bound; zeta comes from eta through 1/(1 - 2^(1-s)).  Everything here
# runs in milliseconds.

import math

from etalab import DenominatorPole, eta, remainder, verify_zeros, zeta

# A value with a known closed form: eta(1) is the alternating harmonic
# series, ln 2.
v = eta(1.0 + 0.0j)
print("eta(1)              =", v.value.real)
print("ln 2                =", math.log(2.0))
print("certified bound     =", v.abs_error_bound)

# The pair of points featured throughout this package: mirrored about
# the critical line at height t = 147.
left = eta(0.404 + 147.0j)
right = eta(0.596 + 147.0j)
print("\neta(0.404 + 147i)   =", left.value)
print("eta(0.596 + 147i)   =", right.value)
print("modulus ratio       =", abs(right.value) / abs(left.value))

# zeta shares its strip zeros with eta.  The embedded table carries the
# first and sixth zero ordinates; both magnitudes sit at the rounding
# scale of the printed ordinates.
for check in verify_zeros():
    print(f"\nzero #{check.ordinal} at t = {check.t}")
    print("  |eta(1/2 + it)|   =", check.magnitude)
    print("  zero-like         =", check.is_zero_like)

# zeta has an excluded set where the conversion denominator vanishes.
print("\nzeta(2)             =", zeta(2.0 + 0.0j).value.real, "(pi^2/6 =", math.pi**2 / 6.0, ")")
try:
    zeta(1.0 + 0.0j)
except DenominatorPole as exc:
    print("zeta(1) refused     :", exc)

# Remainders R_n = eta - S_n decay like n^(-sigma); at sigma = 1 the
# thousand-term remainder is about 1/2000.
rec = remainder(1000, 1.0 + 0.0j)
print("\nR_1000 at sigma = 1 =", rec.value.real, "~ 1/2000")
