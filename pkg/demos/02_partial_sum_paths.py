# The path drawn by the partial sums in the complex plane.
#
# Segment n joins S_{n-1} to S_n; its length is n^(-sigma) and its
# angle with the real axis is -t ln n, plus pi for even n.  Once the
# angle between consecutive segments drops below pi/2 the path settles
# into a tight star-shaped orbit around the limit.

import math

import numpy as np

from etalab import (
    angle_threshold,
    eta,
    partial_sum_path,
    segment,
    turn_angle,
)

s = 0.5 + 38.0j

# Where the orbit begins: beyond this index every turn angle is acute.
start = angle_threshold(38.0)
print("acute turns beyond n =", start)
print("turn angle at n = 24 :", turn_angle(24, 38.0), "rad")
print("turn angle at n = 300:", turn_angle(300, 38.0), "rad")

# The zoomed path segments: short, slowly rotating hops.
for n in (293, 303, 313):
    seg = segment(n, s)
    print(f"segment {n}: length {seg.length:.4f}, angle {seg.theta % (2 * math.pi):+.3f} rad")

# Distance from the path to the limit point, against the length of the
# last segment: same order of magnitude all along the orbit.
path = partial_sum_path(s, 2000)
limit = eta(s).value
for n in (300, 1000, 2000):
    print(f"n = {n:5d}: |S_n - eta| = {abs(path[n - 1] - limit):.5f}   n^(-1/2) = {n ** -0.5:.5f}")

# Mirrored points share every segment direction: the terms at sigma and
# 1 - sigma differ only by the real factor n^(2 sigma - 1).
pa = partial_sum_path(0.404 + 147.0j, 60)
pb = partial_sum_path(0.596 + 147.0j, 60)
va = np.diff(np.concatenate(([0.0 + 0.0j], pa)))
vb = np.diff(np.concatenate(([0.0 + 0.0j], pb)))
worst_cross = np.abs(np.imag(va * np.conj(vb))).max()
print("\nmirrored paths, largest cross product of segment pairs:", worst_cross)
print("(zero means every pair of segments is parallel)")
