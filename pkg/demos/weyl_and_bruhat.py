"""Permutations as Weyl group elements and the strong Bruhat order."""

import time

from padic_bruhat import WeylElement, all_elements, bruhat_leq, bruhat_leq_chain, length, standard_ordering

# %% One-line notation "w(1),...,w(n)"; the matrix has a 1 at (w(j), j).
w = WeylElement.parse("2,3,1")
print(w, "length", length(w))
for row in w.matrix_rows():
    print("   ", row)

# %% The two orderings of S_3 used to filter by Bruhat cells.
for preset in ("default", "paper-n3"):
    print(preset, [str(u) for u in standard_ordering(3, preset)])

# %% The sorted-prefix test agrees with the closure of transposition chains.
for n in (3, 4, 5):
    start = time.perf_counter()
    elems = all_elements(n)
    agree = sum(bruhat_leq(u, v) == bruhat_leq_chain(u, v) for u in elems for v in elems)
    print(f"S_{n}: {agree}/{len(elems) ** 2} pairs agree ({time.perf_counter() - start:.2f}s)")
