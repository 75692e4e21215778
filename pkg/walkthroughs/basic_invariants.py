"""
Core, corona and the critical sets of a few small graphs
========================================================

"""

from critsets import analyze, complete_graph, cycle_graph, path_graph, star_graph

# a path, an odd cycle, a star and a complete graph
graphs = {
    "P4": path_graph(4),
    "C5": cycle_graph(5),
    "K1,3": star_graph(3),
    "K5": complete_graph(5),
}

for name, g in graphs.items():
    a = analyze(g)
    print(f"{name}: alpha={a.omega.alpha} core={sorted(a.omega.core)} corona={sorted(a.omega.corona)}")
    print(f"    d={a.critical.d} ker={sorted(a.critical.ker)} diadem={sorted(a.critical.diadem)}"
          f" nucleus={sorted(a.critical.nucleus)}")
    c = a.chain
    # nucleus + diadem <= 2 alpha <= corona + core <= 2 alpha + k
    print(f"    {c.lower} <= {c.mid} <= {c.upper} <= {c.bound}   tags={sorted(c.equality_tags)}")

# K5 is the standard strict example: only the empty set is critical,
# every vertex lies in some maximum independent set
k5 = analyze(complete_graph(5)).chain
assert (k5.lower, k5.mid, k5.upper) == (0, 2, 5)
