"""Atomic factors of normal ideals and the toric fan of their blowups.

Every normal monomial ideal factors uniquely (up to order) as a product of
powers of the atoms n_ab(alpha, beta) = closure of (x^alpha, y^beta) with
alpha, beta coprime, one factor per polygon edge.  The blowup surface is the
toric surface whose fan refines the first quadrant by the rays beta*e1 +
alpha*e2 of those factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DomainError
from .ideals import MonomialIdeal, complete_intersection
from .newton import integral_closure, is_normal, newton_polygon


@dataclass(frozen=True)
class NabFactor:
    """One atom n_{alpha,beta} with multiplicity delta; gcd(alpha, beta) = 1."""

    alpha: int
    beta: int
    delta: int

    def __post_init__(self):
        if self.alpha < 1 or self.beta < 1 or self.delta < 1:
            raise DomainError("factor data must be positive")
        if gcd(self.alpha, self.beta) != 1:
            raise DomainError("alpha and beta must be coprime")

    @property
    def ray(self) -> tuple[int, int]:
        return (self.beta, self.alpha)

    def ideal(self) -> MonomialIdeal:
        return n_ab(self.alpha * self.delta, self.beta * self.delta)


def n_ab(alpha: int, beta: int) -> MonomialIdeal:
    """Integral closure of (x^alpha, y^beta): the normal ideal whose polygon
    is the single segment (alpha,0)-(0,beta)."""
    if alpha < 1 or beta < 1:
        raise DomainError("n_ab needs positive exponents")
    return integral_closure(complete_intersection(alpha, beta))


def factor_normal(ideal: MonomialIdeal) -> tuple[NabFactor, ...]:
    """Unique factorization of a normal ideal into n_ab powers.

    One factor per polygon edge; emitted with alpha/beta increasing, which is
    also the fan's ray order from e1 to e2.  The product of the factors'
    ideals reconstructs the input exactly.
    """
    ideal.require_fat_point()
    if not is_normal(ideal):
        raise DomainError("only normal ideals factor into n_ab atoms; normalize first")
    factors = []
    for edge in reversed(newton_polygon(ideal).edges):
        alpha = -edge.primitive_step[0]
        beta = edge.primitive_step[1]
        factors.append(NabFactor(alpha=alpha, beta=beta, delta=edge.lattice_length))
    return tuple(factors)


def reconstruct(factors) -> MonomialIdeal:
    """Product of n_ab(alpha, beta)^delta over the given factors."""
    result = None
    for f in factors:
        result = f.ideal() if result is None else result * f.ideal()
    if result is None:
        raise DomainError("empty factor list")
    return result


@dataclass(frozen=True)
class Cone:
    """A maximal cone of the fan, spanned by two consecutive rays."""

    rays: tuple[tuple[int, int], tuple[int, int]]
    index: int  # |det| of the spanning rays
    label: str  # "smooth", "A_n", or "index d"


@dataclass(frozen=True)
class Fan:
    """Complete fan of the first quadrant: rays from e1 to e2 by increasing slope."""

    rays: tuple[tuple[int, int], ...]
    cones: tuple[Cone, ...]


def _cone_weight(u: tuple[int, int], v: tuple[int, int]) -> tuple[int, int]:
    """Normal form of the cone <u, v> as the cyclic quotient 1/d(1, q)."""
    d = u[0] * v[1] - u[1] * v[0]
    if d <= 0:
        raise DomainError("rays must be ordered by increasing slope")
    # unimodular row (p, q0) completing u: p*u0 + q0*u1 = 1
    p, q0 = _bezout(u[0], u[1])
    y = p * v[0] + q0 * v[1]
    return d, (-y) % d


def _bezout(a: int, b: int) -> tuple[int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r != 1:
        raise DomainError("ray is not primitive")
    return old_s, old_t


def cone_label(u: tuple[int, int], v: tuple[int, int]) -> tuple[int, str]:
    """Index and singularity label of the cone <u, v>.

    d = 1 is smooth; 1/d(1, d-1) is the Kleinian A_{d-1} point; other cyclic
    quotients (never Gorenstein) are reported by their index only.
    """
    d, q = _cone_weight(u, v)
    if d == 1:
        return 1, "smooth"
    if q == d - 1:
        return d, f"A_{d - 1}"
    return d, f"index {d}"


def fan_of(ideal: MonomialIdeal) -> Fan:
    """Fan of the blowup surface of a normal ideal.

    Rays: e1, then beta*e1 + alpha*e2 per factor in factorization order, then
    e2; consecutive pairs span the maximal cones, annotated with their index
    and singularity type.
    """
    factors = factor_normal(ideal)
    rays = [(1, 0)] + [f.ray for f in factors] + [(0, 1)]
    cones = []
    for u, v in zip(rays, rays[1:]):
        index, label = cone_label(u, v)
        cones.append(Cone(rays=(u, v), index=index, label=label))
    return Fan(rays=tuple(rays), cones=tuple(cones))


def component_count(ideal: MonomialIdeal) -> tuple[int, bool]:
    """Number of irreducible exceptional components of the blowup.

    Exact for normal ideals (one component per polygon edge); otherwise the
    edge count of the normalization is only an upper bound, flagged by
    exact=False.
    """
    ideal.require_fat_point()
    t = len(newton_polygon(ideal).edges)
    return t, is_normal(ideal)
