# The mirrored partial-sum ratio P_n and its limit.
#
# For s left of the critical line, P_n = S_n(mirror)/S_n(s) converges
# to the functional-equation ratio (or to 0 at a zero of eta).  The
# sequence jumps from one side of the limit modulus to the other at
# almost every step, so averaging the last odd/even pair converges
# dramatically faster than the raw sequence.


from etalab import (
    detect_zero_sums,
    envelope_diagnostics,
    eta,
    limit_estimate,
    sum_ratio_path,
)

s = 0.404 + 147.0j
limit = eta(0.596 + 147.0j).value / eta(0.404 + 147.0j).value
print("oracle limit:", limit, " modulus:", abs(limit))

ratios, mags, skipped = sum_ratio_path(s, 10**5)
print("\n      n     |P_n|        raw error      odd/even average error")
for n in (10**3, 10**4, 10**5):
    est = limit_estimate(s, n)
    print(f"{n:7d}   {abs(ratios[n - 1]):.6f}   {abs(ratios[n - 1] - limit):.2e}"
          f"       {abs(est.value - limit):.2e}")

# Side-of-limit statistics: the two-sided jumping is the rule.
report = envelope_diagnostics(s, 10**4, 10**4 + 300)
print("\nalternation rate over 300 consecutive n:", report.alternation_rate)
print("same-side run lengths:", report.run_lengths)

# Partial sums can vanish.  This point sits near a zero of eta itself
# (|eta| is about 0.012 here), so hundreds of sums pass within 1e-2 of
# the origin; only S_1516 gets within 4e-5, and none reaches the
# machine-zero threshold at the 5-decimal printed coordinates.
s_near = 0.50567 + 37.58631j
loose = detect_zero_sums(s_near, 2000, threshold=1e-2)
tight = detect_zero_sums(s_near, 2000, threshold=1e-9)
print("\nsums within 1e-2 of zero:", len(loose))
for e in sorted(loose, key=lambda e: e.magnitude)[:5]:
    print(f"  |S_{e.n}| = {e.magnitude:.2e}")
print("sums within 1e-9 of zero:", len(tight))
