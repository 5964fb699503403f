"""Shared memo versus fresh memo, step by step.

In shared mode every intermediate bound survives into later steps; in fresh
mode a step only sees the bounds derived by earlier steps.  Stale memo
entries can hide improvements, so fresh mode never does worse here.
"""

from freelength import MemoMode, ScheduleConfig, apply_schedule, build_schedule, commutator_bound

if __name__ == "__main__":
    cfg = ScheduleConfig(max_power=12, ks=(1, 2))
    shared, fresh = [], []
    apply_schedule(build_schedule(cfg), steps=shared)
    apply_schedule(build_schedule(ScheduleConfig(max_power=12, ks=(1, 2), mode=MemoMode.FRESH)), steps=fresh)

    better = 0
    for s, f in zip(shared, fresh):
        if f.value < s.value:
            better += 1
            print(f"{str(s.pair.element):>10}^{s.pair.exponent:<3} shared {s.value!r:<20} fresh {f.value!r}")
    print(f"\nfresh mode strictly better on {better} of {len(shared)} steps")

    for mode in MemoMode:
        value, _ = commutator_bound(ScheduleConfig(max_power=12, ks=(1, 2), mode=mode))
        print(f"{mode.value:>6}: |abAB| <= {value!r}")
