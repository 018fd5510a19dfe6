"""Writing g = r·b with r in a pattern set R_w and b upper triangular."""

import random

from padic_bruhat import PMatrix, bruhat_cell, classify_Uw, in_UlwB, matches_Rw, rb_decompose
from padic_bruhat.decomp import rw_pattern
from padic_bruhat.sampling import sample_gl
from padic_bruhat.weyl import all_elements

p = 3

# %% The shape of each R_w at n = 3: "1" fixed one, "0" fixed zero,
# "o" any integer, "po" any multiple of p.
for w in all_elements(3):
    print(w, rw_pattern(w))

# %% A concrete matrix.
g = PMatrix.from_rationals([[9, 0, 1], [1, 0, 0], [3, 1, 0]], p)
d = rb_decompose(g)
print("w =", d.w)
print("r =", [[str(x) for x in row] for row in d.r.to_fractions()])
print("b =", [[str(x) for x in row] for row in d.b.to_fractions()])
print("r matches R_w:", matches_Rw(d.r, d.w), " r·b == g:", d.r @ d.b == g)
print("in U^(1) w B:", in_UlwB(g, d.w, 1), " Bruhat cell:", bruhat_cell(g))

# %% Random invertible matrices land in every piece.
rng = random.Random("demo")
counts = {}
for _ in range(300):
    w = classify_Uw(PMatrix.from_rationals(sample_gl(rng, 3, p), p))
    counts[str(w)] = counts.get(str(w), 0) + 1
print(dict(sorted(counts.items())))
