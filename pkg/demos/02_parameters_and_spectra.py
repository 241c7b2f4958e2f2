"""
Strongly regular parameters, spectra and the clique bound
=========================================================

Builds G_n(q) for a few (n, q), counts its parameters pair by pair, and
derives the spectrum exactly.
"""
import time

import numpy as np

from polarsrg.cliques import delsarte_bound
from polarsrg.srg import (build_gn, build_no_plus, complement, printed_multiplicities,
                          spectrum_of, theoretical_params, trace_checks, verify_srg)

for n, q in [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (2, 4)]:
    t0 = time.perf_counter()
    g = build_gn(n, q)
    got = verify_srg(g)
    want = theoretical_params("gn", n, q)
    print(f"G_{n}({q}): counted {got.as_tuple()}  formula {want.as_tuple()}  "
          f"{'ok' if got == want else 'MISMATCH'}  ({time.perf_counter() - t0:.2f}s)")

for n in (1, 2, 3):
    print(f"NO+({2 * n + 2},2): {verify_srg(build_no_plus(n)).as_tuple()}")

# exact spectrum of srg(120, 63, 30, 36)
p = verify_srg(build_gn(3, 2))
s = spectrum_of(p)
print("\neigenvalues", [str(x) for x in s.eigenvalues],
      "multiplicities", [str(x) for x in s.multiplicities])
print("trace checks (sizes, trace):", trace_checks(s, p))
print("closed form with the other sign gives", [str(x) for x in printed_multiplicities(p)])
print("clique bound 1 - k/theta2 =", delsarte_bound(s))

# a floating point cross-check
ev = np.linalg.eigvalsh(build_gn(3, 2).adj.astype(float))
vals, counts = np.unique(np.round(ev).astype(int), return_counts=True)
print("numpy eigvalsh:", dict(zip(vals.tolist(), counts.tolist())))

print("\ncomplement of G_3(2):", verify_srg(complement(build_gn(3, 2))).as_tuple())
