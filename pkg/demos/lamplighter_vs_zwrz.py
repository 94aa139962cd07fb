"""
Lamplighter versus Z wr Z
=========================

Two wreath products over Z whose Sigma^1 pictures differ completely.
The rule engine gives the verdicts; brute force on Cayley balls
corroborates them.
"""

from wreathsigma import catalog
from wreathsigma.character import Character
from wreathsigma.engine import sigma1
from wreathsigma.lab.ball import ball, connectivity_evidence
from wreathsigma.lab.concrete import realize
from wreathsigma.lab.renz import find_renz_certificate, verify_renz_certificate
from wreathsigma.lab.words import format_word

L = catalog.lamplighter(2)
W = catalog.zwrz()

# The lamplighter has a single character up to scale (the base is torsion),
# and it is Out in both directions.
for values in ([1], [-1]):
    v = sigma1(L.expr, Character(L.expr, values))
    print("lamplighter", values, v.status.value, "--", v.trace[0].citation)

###############################################################################
# A ball of radius 8 shows the chi >= 0 part falling apart.
g = realize(L.expr, L.letters)
b = ball(g, 8)
e = connectivity_evidence(b, [1], margin=2)
print(len(b), "vertices;", e.kind, "between", " and ".join(format_word(w) for w in e.witness))

###############################################################################
# For Z wr Z only the two rays that vanish on the base are Out.
for values in ([1, 0], [1, 5], [0, 1], [0, -1]):
    v = sigma1(W.expr, Character(W.expr, values))
    print("Z wr Z", values, v.status.value)

# An In ray comes with a finite certificate that can be checked mechanically.
h = realize(W.expr, W.letters)
cert = find_renz_certificate(h, [1, 0], 3, 5)
print(cert.dumps())
print("verifies:", bool(verify_renz_certificate(h, [1, 0], cert)))

# The lamplighter search finds nothing. That is not a proof of Out,
# but it agrees with the engine.
print("lamplighter certificate:", find_renz_certificate(g, [1], 3, 6))
