"""
Classifying forbidden graphs and planning reductions
=====================================================

"""

from hfree import classify, plan
from hfree import graph as gr
from hfree.graph import disjoint_union

# A star with four leaves sits in the star family; its chain starts from
# P3-free deletion and climbs one leaf at a time.
s4 = gr.star(4)
print(classify(s4).format())
print(plan(s4).format())

# The Petersen graph is 3-regular. The classifier reports a carving set:
# three vertices inducing a P3 whose removal leaves the rest connected.
print(classify(gr.petersen()).format())

# Disconnected patterns are handled through their largest component.
k3k2 = disjoint_union([gr.complete(3), gr.complete(2)])
c = classify(k3k2)
print(c.describe(), "->", c.format())
print(plan(k3k2).format())

# The paw (a triangle with a pendant) has no chain in this toolkit.
print(classify(gr.paw()).format())
