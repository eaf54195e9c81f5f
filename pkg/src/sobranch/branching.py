"""Branching between irreducibles with trivial infinitesimal character.

For the pair SO(n+1,1) > SO(n,1), the Hom space between Pi_{i,delta} and
pi_{j,epsilon} is at most one-dimensional, and is nonzero exactly when
the (identification-adjusted) signs agree and j lies in {i-1, i}.  The
resulting graph has a vertical arrow (j = i) and a slanted arrow
(j = i-1) out of each big-side node, truncated at the range boundary.
"""

from __future__ import annotations

from dataclasses import dataclass

from .irreps import IrrepRho, ThetaParam, canonical_irrep, irreps_with_rho, theta_stable_parameter
from .scalars import Sign, require


def hom_dim(n: int, i: int, delta: Sign, j: int, epsilon: Sign) -> int:
    """Dimension (0 or 1) of the space of intertwiners from Pi_{i,delta}
    of SO(n+1,1) to pi_{j,epsilon} of SO(n,1).

    Both sides are canonicalized first, so degrees in the upper half of
    their range and middle-degree sign choices are handled uniformly.
    A middle-degree node matches either sign.
    """
    require(n >= 1, f"group parameter n must be >= 1, got {n}")
    big = canonical_irrep(n, i, delta)
    small = canonical_irrep(n - 1, j, epsilon)
    if small.ell not in (big.ell - 1, big.ell):
        return 0
    if big.middle_identified or small.middle_identified:
        return 1
    return 1 if big.sign is small.sign else 0


@dataclass(frozen=True)
class BranchingGraph:
    """Bipartite arrow diagram between the two rho-families."""

    n: int
    nodes_big: tuple[IrrepRho, ...]
    nodes_small: tuple[IrrepRho, ...]
    edges: tuple[tuple[IrrepRho, IrrepRho], ...]


def branching_graph(n: int) -> BranchingGraph:
    """All hom_dim = 1 pairs between the rho-families of SO(n+1,1) and
    SO(n,1), with one node per canonical (identified) representative."""
    require(n >= 1, f"group parameter n must be >= 1, got {n}")
    big = irreps_with_rho(n)
    small = irreps_with_rho(n - 1)
    edges = tuple(
        (b, s)
        for b in big
        for s in small
        if hom_dim(n, b.ell, b.sign, s.ell, s.sign) == 1
    )
    return BranchingGraph(n, tuple(big), tuple(small), edges)


def theta_arrow(
    n: int, i: int, delta: Sign, j: int, epsilon: Sign
) -> tuple[ThetaParam, ThetaParam] | None:
    """Theta-stable parameters of an interlacing pair, or None if the
    pair carries no intertwiner."""
    if hom_dim(n, i, delta, j, epsilon) == 0:
        return None
    big = canonical_irrep(n, i, delta)
    small = canonical_irrep(n - 1, j, epsilon)
    return (theta_stable_parameter(big), theta_stable_parameter(small))


def node_id(r: IrrepRho, small: bool = False) -> str:
    """Graph node identifier: Pi_<ell><sign> / pi_<ell><sign>, with the
    sign dropped on middle-degree (identified) nodes."""
    return r.label("pi" if small else "Pi")
