"""
Sweeping reductions against brute force, and catching broken gadgets
=====================================================================

"""

from hfree.verify import named_steps, verify_step_equivalence

# Every graph on up to five vertices, budgets 1 and 2: the source answer must
# equal the target answer after the step.
steps = named_steps()
for name in ("star-step", "copy-step"):
    print(verify_step_equivalence(steps[name], 5, 2).format(), end="")

# Damaged gadgets should not survive the same sweep. Only the first
# counterexample of each is printed.
for name, mutation in (("star-step", "drop-edge"), ("copy-step", "partial-join")):
    report = verify_step_equivalence(steps[name], 5, 2, mutation=mutation)
    print(report.format().splitlines()[0])
    print(" ", report.failures[0].format())
