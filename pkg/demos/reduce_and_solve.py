"""
Running a reduction chain and checking it with the exact solver
================================================================

"""

from hfree import Instance, apply_plan, plan, solve_branching
from hfree import graph as gr

# Start from a P3-free deletion instance: the 5-cycle needs three deletions
# to become a disjoint union of cliques, so budget 2 is a no and 3 is a yes.
target = gr.star(3)
p = plan(target)
for k in (2, 3):
    source = Instance(gr.cycle(5), k)
    reduced = apply_plan(p, source)
    before = solve_branching(source, p.base.pattern) is not None
    after = solve_branching(reduced, target) is not None
    print(f"k={k}: P3-free answer {before}, S3-free answer {after}, "
          f"reduced graph has {reduced.graph.n} vertices and {reduced.graph.m} edges")
