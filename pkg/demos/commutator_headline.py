"""The commutator bound: homogeneity over a(abAB)^k for k = 1, 2, 6, then abAB.

Takes a few seconds.  Prints the float bound, its exact rational value, the
size of the certificate and its last few lines.
"""

import time

from freelength import ScheduleConfig, commutator_bound
from freelength.proofs import count_nodes, evaluate, render_text, verify

if __name__ == "__main__":
    start = time.perf_counter()
    value, proof = commutator_bound(ScheduleConfig(max_power=20, ks=(1, 2, 6)))
    elapsed = time.perf_counter() - start

    print(f"float bound     {value!r}  ({elapsed:.1f}s)")
    print(f"exact bound     {evaluate(proof, 'rational')}")
    print(f"certified       {verify(proof).certified}")
    # n = 1 ties with the stored bound for abAB; follow it to the real power
    origin = proof.origin
    while origin.exponent == 1 and getattr(origin.proof, "origin", None) is not None:
        origin = origin.proof.origin
    print(f"power used      n = {origin.exponent}")

    lines = render_text(proof, "rational")
    print(f"proof           {len(lines)} lines, {count_nodes(proof)} distinct nodes, "
          f"{count_nodes(proof, expanded=True)} when fully expanded")
    print()
    for line in lines[-4:]:
        print(line)

    for n in (10, 5):
        v, _ = commutator_bound(ScheduleConfig(max_power=n))
        print(f"\nmax power {n:>2}: {v!r}")
