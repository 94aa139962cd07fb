"""
Sampling character spheres
==========================

Sweep a grid of rays and tally verdicts, for a few catalog groups.
"""

from wreathsigma import catalog
from wreathsigma.engine import sample_sphere
from wreathsigma.omega import omega1, reidemeister_conclusions

for entry in (catalog.zwrz(), catalog.zwrz_mod(2), catalog.F2xZ()):
    s = sample_sphere(entry.expr, level=1, resolution=2)
    print(entry.name, s.dimension, dict(s.counts))
    for line in s.components:
        print("   ", line)

# sigma2 needs finite presentation; Z wr_{Z/2} Z has it
s = sample_sphere(catalog.zwrz_mod(2).expr, level=2, resolution=3)
print("Sigma^2 of Z wr_{Z/2} Z:", dict(s.counts))

###############################################################################
# Omega^1 and what it says about twisted conjugacy.
for entry in (catalog.zwrz(), catalog.lamplighter(2)):
    d = omega1(entry.expr)
    print(entry.name, d.region, d.cardinality and d.cardinality.value)
    for c in reidemeister_conclusions(entry.expr):
        print("   ", c.kind.value, "--", c.statement)
