"""Rule identifiers and the theorem each one applies.

Verdict traces and Reidemeister conclusions carry these strings so that a
report can be audited against the literature.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Rule:
    id: str
    citation: str
    statement: str


def _r(id, citation, statement):
    return Rule(id, citation, statement)


A1_ABELIAN = _r(
    "A1",
    "Thm ThmKochloukova (m = 1, N abelian)",
    "abelian normal N with chi(N) != 0 gives [chi] in Sigma^m; here N is the whole free abelian group",
)
A1_FREE = _r(
    "A1",
    "engine axiom: Sigma^1(F_k) is empty for k >= 2 (standard BNS theory)",
    "nonabelian free groups have empty Sigma^1",
)
A_ANNOTATED = _r("A-annotated", "user-supplied region", "membership read from the annotated atom")
A2_ABELIAN = _r(
    "A2",
    "Thm ThmKochloukova (m = 2, N abelian)",
    "abelian normal N with chi(N) != 0 gives [chi] in Sigma^2",
)
A2_FREE = _r("A2", "Sigma^2 is contained in Sigma^1", "Sigma^2(F_k) is empty for k >= 2")
A2_ANNOTATED = _r(
    "A-annotated",
    "user-supplied region, intersected with Sigma^1 (Sigma^2 is contained in Sigma^1)",
    "membership read from the annotated atom",
)

P1 = _r(
    "P1",
    "Thm GehrkeThm (Sigma^1)",
    "[chi] in Sigma^1(G1 x G2) iff chi_i != 0 for i = 1,2 or [chi_i] in Sigma^1(G_i) for some i",
)
P2 = _r(
    "P2",
    "Thm GehrkeThm (Sigma^2)",
    "[chi] in Sigma^2(G1 x G2) iff ([chi_1] in Sigma^1(G1) and chi_2 != 0) or "
    "([chi_2] in Sigma^1(G2) and chi_1 != 0) or [chi_i] in Sigma^2(G_i) for some i",
)

W1 = _r(
    "W1",
    "Thm 1.1(1)",
    "chi|_M = 0: [chi] in Sigma^1 iff [chi|_G] in Sigma^1(G) and chi|_{G_x} != 0 for all x",
)
W1_STAB = _r(
    "W1",
    "Thm 1.1(1) / Prop pro2",
    "[chi] in Sigma^1 and chi|_M = 0 force chi|_{G_x} != 0 for all x",
)
W2_ORBIT = _r(
    "W2",
    "Prop sigma1viarenz",
    "some x1 with G.x1 != {x1} and chi|_{H_x1} != 0 gives [chi] in Sigma^1",
)
W2_SINGLETONS = _r(
    "W2",
    "Thm reswreath2 / Thm 1.1(2)",
    "chi|_M != 0 with T a union of fixed points: In iff |T| >= 2, or T = {x1} and "
    "(chi|_G != 0 or [chi|_H_x1] in Sigma^1(H))",
)
GW1 = _r(
    "GW1",
    "Thm p1",
    "graph-wreath, chi|_M = 0: [chi] in Sigma^1 iff [chi|_G] in Sigma^1(G) and chi|_{G_x} != 0 for all x",
)
GW_GAP = _r(
    "GW-gap",
    "Thm p1 covers chi|_M = 0 only",
    "graph-wreath products with chi|_M != 0 are not classified",
)

W3 = _r(
    "W3",
    "Thm sigma2viarenz / Thm 1.2",
    "|T| >= 2: [chi] in Sigma^2 iff [chi|_H_x] in Sigma^1(H) for some x in T, or chi|_G != 0, "
    "or T has at least three elements",
)
W3_SINGLE = _r(
    "W3'",
    "Thm sigma2viarenz (T = {x1} splitting) + Thm GehrkeThm",
    "T = {x1}: Gamma = H_x1 x (H wr_{X - x1} G), apply the direct product formula",
)
W4 = _r(
    "W4",
    "Thm 1.3 / Prop suffcond",
    "chi|_M = 0: (1) [chi|_G] in Sigma^2(G), (2) [chi|_{G_x}] in Sigma^1(G_x) for all x, "
    "(3) chi|_{G_(x,y)} != 0 for all (x,y) together give [chi] in Sigma^2",
)
W4_RETRACT = _r(
    "W4",
    "Thm retractsthm / Thm 1.3 ('conditions (1) and (3) are necessary')",
    "G is a retract of Gamma, so [chi] in Sigma^2(Gamma) forces [chi|_G] in Sigma^2(G)",
)
W4_PAIRS = _r(
    "W4",
    "Prop condneces1",
    "chi|_M = 0 and chi|_{G_(x,y)} = 0 for some (x,y) give [chi] not in Sigma^2",
)
W4_STAB_NECESSARY = _r(
    "W4",
    "Thm 1.3 (H^ab infinite: condition (2) is necessary) / Thm BCKThm",
    "with H^ab infinite, [chi] in Sigma^2 forces [chi|_{G_x}] in Sigma^1(G_x) for all x",
)
W4_GAP = _r(
    "W4-gap",
    "Thm 1.3 gap: condition (2) fails, H^ab finite; no necessity result is available",
    "conditions (1) and (3) hold, condition (2) fails and H^ab is finite",
)

OMEGA_PROP1 = _r(
    "O1",
    "Prop prop1",
    "Sigma^1(Gamma) = {chi|_M != 0} implies Omega^1(Gamma) = {[chi] : chi|_G = 0}",
)
OMEGA_COND1 = _r("O1-cond1", "Prop prop1 hypothesis, condition 1", "(G_x)^ab is finite for some x, no fixed points")
OMEGA_COND2 = _r(
    "O1-cond2",
    "Prop prop1 hypothesis, condition 2",
    "{[chi] in Sigma^1(G) : chi|_{G_x} != 0} is empty for some x, no fixed points",
)
REID_INDEX_TWO = _r(
    "R-index2",
    "Cor crlr1 / Thm teoKW(2)",
    "R(phi) is infinite for every phi in some index-2 subgroup of Aut(Gamma)",
)
REID_FINITE_INDEX = _r(
    "R-finite-index",
    "Cor crlr2 / Thm teoGK1",
    "R(phi) is infinite for every phi in some finite-index subgroup of Aut(Gamma)",
)
REID_FULL = _r("R-full", "Thm teoKW(1)", "Omega^1 is a single discrete point, so G is of type R_infinity")
