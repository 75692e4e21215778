"""
Swapping a critical independent set into a maximum one
======================================================

"""

from critsets import (
    enumerate_critical_independent_sets,
    enumerate_maximum_independent_sets,
    extend_to_maximum,
    generate_gnp,
    swap_decomposition,
)

g = generate_gnp(10, 0.3, seed=11)
print("edges:", g.sorted_edges())

crit = list(enumerate_critical_independent_sets(g))
omega = list(enumerate_maximum_independent_sets(g))
print(f"{len(crit)} critical independent sets, {len(omega)} maximum independent sets")

# C = I_c & I_M, A = I_c - C, B = N(A) & I_M, and |A| == |B| every time
i_c = crit[-1]
for i_m in omega[:5]:
    r = swap_decomposition(g, i_c, i_m)
    print(f"I_c={sorted(i_c)} I_M={sorted(i_m)} -> A={sorted(r.a)} B={sorted(r.b)} new={sorted(r.new_mis)}")

# every critical set sits inside some maximum independent set
for s in crit:
    big = extend_to_maximum(g, s)
    assert s <= big and len(big) == len(omega[0])
print("all", len(crit), "critical sets extend to maximum ones")
