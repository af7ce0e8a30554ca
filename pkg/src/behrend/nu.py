"""Behrend numbers of plane fat points cut out by monomial ideals.

For each bounded edge of the Newton polygon (one normalization component per
edge), two integers are extracted from the generators of I:

  e  = min over generators g of <inward_ray, g>   (multiplicity of the
       pulled-back divisor along the component), and
  d  = gcd of the positions, in primitive steps along the edge, of the
       generators realizing that minimum (degree of the component over the
       exceptional curve; the endpoints always count, so d divides the
       edge's lattice length, and d = 1 whenever I is normal).

The Behrend number is the sum of d*e over the edges.  The gcd rule for d is
empirical: it reproduces every reference value in the test suite and is
pinned against the independent tower engine by the verify module.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DomainError
from .ideals import MonomialIdeal, complete_intersection
from .newton import Edge, is_normal, newton_polygon


@dataclass(frozen=True)
class ComponentRecord:
    """Per-edge data of the normalization component lying over it."""

    edge: Edge
    e: int
    d: int

    @property
    def contribution(self) -> int:
        return self.d * self.e


@dataclass(frozen=True)
class BehrendReport:
    nu: int
    length: int
    components: tuple[ComponentRecord, ...]
    normal: bool


def _edge_e(ideal: MonomialIdeal, edge: Edge) -> int:
    beta, alpha = edge.inward_ray
    return min(beta * a + alpha * b for a, b in ideal.generators)


def _edge_d(ideal: MonomialIdeal, edge: Edge, e: int) -> int:
    beta, alpha = edge.inward_ray
    d = 0
    for g in ideal.generators:
        if beta * g[0] + alpha * g[1] == e:
            d = gcd(d, edge.position_of(g))
    return d


def _validate_edge(ideal: MonomialIdeal, edge: Edge) -> None:
    if edge not in newton_polygon(ideal).edges:
        raise DomainError(f"{edge!r} is not an edge of the ideal's polygon")


def edge_multiplicity(ideal: MonomialIdeal, edge: Edge) -> int:
    """Least pairing of the edge's inward ray against the generators."""
    _validate_edge(ideal, edge)
    return _edge_e(ideal, edge)


def edge_degree(ideal: MonomialIdeal, edge: Edge) -> int:
    """gcd of the primitive-step positions of the generators lying on the edge."""
    _validate_edge(ideal, edge)
    return _edge_d(ideal, edge, _edge_e(ideal, edge))


def nu_monomial(ideal: MonomialIdeal) -> BehrendReport:
    """Behrend number, length and per-edge breakdown of a monomial fat point.

    Components are listed in polygon order (decreasing edge slope).  For
    non-normal ideals distinct edges are reported as distinct exceptional
    components, which is only an upper bound on their number; the total nu
    does not depend on that identification.
    """
    ideal.require_fat_point()
    components = []
    for edge in newton_polygon(ideal).edges:
        e = _edge_e(ideal, edge)
        d = _edge_d(ideal, edge, e)
        components.append(ComponentRecord(edge=edge, e=e, d=d))
    return BehrendReport(
        nu=sum(c.contribution for c in components),
        length=ideal.colength(),
        components=tuple(components),
        normal=is_normal(ideal),
    )


def nu_power_rule(ideal: MonomialIdeal, d: int) -> int:
    """nu(I^d) = d * nu(I); cross-checked against the edge formula on I^d."""
    if d < 1:
        raise DomainError("the power rule needs d >= 1")
    scaled = d * nu_monomial(ideal).nu
    direct = nu_monomial(ideal**d).nu
    if scaled != direct:
        raise AssertionError(
            f"power rule violated: d*nu = {scaled}, edge formula on I^d = {direct}"
        )
    return scaled


def nu_lci(a: int, b: int) -> int:
    """nu of the complete intersection (x^a, y^b): equals the length a*b."""
    if a < 1 or b < 1:
        raise DomainError("exponents must be positive")
    direct = nu_monomial(complete_intersection(a, b)).nu
    if direct != a * b:
        raise AssertionError(f"complete intersection rule violated: {direct} != {a * b}")
    return a * b
