"""
Which parts of the chain are tight, over every graph on 6 vertices
==================================================================

Takes around ten seconds.
"""

from collections import Counter

import numpy as np

from critsets import chain_report, labeled_graphs

reports = [chain_report(g) for g in labeled_graphs(6)]
print(len(reports), "labeled graphs")

tags = Counter(t for r in reports for t in r.equality_tags)
for tag, count in sorted(tags.items()):
    print(f"{tag:15s} {count:6d}")

# gaps between consecutive terms of the chain
gaps = np.array([(r.mid - r.lower, r.upper - r.mid, r.bound - r.upper) for r in reports])
print("largest gaps (mid-lower, upper-mid, bound-upper):", gaps.max(axis=0))
print("mean gaps:", gaps.mean(axis=0).round(3))

# Koenig-Egervary graphs always have corona + core = 2 alpha
ke = np.array([r.is_ke for r in reports])
assert (gaps[ke, 1] == 0).all()
print(f"{ke.sum()} Koenig-Egervary graphs, all with upper == mid")
