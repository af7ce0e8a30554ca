"""Towers of curvilinear ideals and the leveled diagram engine for products.

A tower is a product of curvilinear factors sharing one branch and tangent,
    (x + g(y)) + m^{i_1} * ... * (x + g(y)) + m^{i_s},   i_1 < ... < i_s,
(or the transpose in y), with deg g < i_s.  Towers are normal; their blowups,
and the blowups of products of towers, are governed by a rooted leveled tree
whose nodes are exceptional curves.  The engine here builds that tree from
tangent-agreement classes level by level, computes the multiplicity of every
curve from per-factor contributions, and sums the surviving multiplicities
into the Behrend number.

The contribution of a factor whose own node is c_I to a node c is the level
of the deepest common ancestor of c and c_I (a node counts as its own
ancestor).  On trees whose only fork is at the root this reduces to the
familiar min(i, j) / constant-1 pattern; on deeper forks it is the value the
iterated-blowup order computation actually produces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate

from .errors import DomainError, UnsupportedError
from .ideals import MAXIMAL_IDEAL, MonomialIdeal

BRANCHES = ("x", "y")


def _as_coefficients(tangent) -> tuple[Fraction, ...]:
    coeffs = tuple(Fraction(c) for c in tangent)
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    return coeffs


@dataclass(frozen=True)
class Tower:
    """Validated tower; build through make_tower.

    tangent holds the coefficients of g at degrees 1, 2, ... with trailing
    zeros stripped; the empty tuple is the monomial tower g = 0.
    """

    branch: str
    tangent: tuple[Fraction, ...]
    exponents: tuple[int, ...]

    @property
    def height(self) -> int:
        return self.exponents[-1]

    @property
    def is_complete(self) -> bool:
        return self.exponents == tuple(range(1, len(self.exponents) + 1))

    @property
    def is_monomial(self) -> bool:
        return not self.tangent

    def tangent_order(self):
        """o(g), or None for the monomial tower."""
        for i, c in enumerate(self.tangent):
            if c != 0:
                return i + 1
        return None

    def tangent_prefix(self, r: int) -> tuple[Fraction, ...]:
        """Coefficients of g in degrees < r, zero-padded to length r - 1."""
        coeffs = self.tangent[: r - 1]
        return coeffs + (Fraction(0),) * (r - 1 - len(coeffs))

    def linear_coefficient(self) -> Fraction:
        return self.tangent[0] if self.tangent else Fraction(0)

    def completed(self) -> "Tower":
        return Tower(self.branch, self.tangent, tuple(range(1, self.height + 1)))

    def ideal(self) -> MonomialIdeal:
        """Minimal generators of a monomial tower: x^{s-k} y^{i_1+...+i_k}.

        Non-monomial towers are isomorphic to their monomial model by the
        shear (x, y) -> (x - g(y), y), which preserves every invariant
        computed in this package, but their literal generators are not
        monomials; asking for them is unsupported.
        """
        if not self.is_monomial:
            raise UnsupportedError(
                "non-monomial towers have no monomial generators; "
                "invariants are computed on the monomial model"
            )
        s = len(self.exponents)
        partial = [0, *accumulate(self.exponents)]
        gens = [(s - k, partial[k]) for k in range(s + 1)]
        if self.branch == "y":
            gens = [(b, a) for a, b in gens]
        return MonomialIdeal(gens)


def make_tower(branch: str, tangent, exponents) -> Tower:
    """Validate and build a tower; each broken precondition is its own error."""
    if branch not in BRANCHES:
        raise DomainError(f"branch must be 'x' or 'y', not {branch!r}")
    exps = tuple(int(e) for e in exponents)
    if not exps:
        raise DomainError("a tower needs at least one exponent")
    if exps[0] < 1:
        raise DomainError("tower exponents must be positive")
    if any(a >= b for a, b in zip(exps, exps[1:])):
        raise DomainError("tower exponents must be strictly increasing")
    coeffs = _as_coefficients(tangent)
    if len(coeffs) >= exps[-1]:
        raise DomainError(
            f"tangent degree {len(coeffs)} must be smaller than the height {exps[-1]}"
        )
    return Tower(branch=branch, tangent=coeffs, exponents=exps)


def tower_ideal(tower: Tower) -> MonomialIdeal:
    return tower.ideal()


def tower_length(tower: Tower) -> int:
    """Colength: sum over k of i_1 + ... + i_k."""
    partial = list(accumulate(tower.exponents))
    return sum(partial)


def tower_nu(tower: Tower) -> int:
    """Behrend number: length + sum_{j<s} i_j (s - j) = sum_{k,l} min(i_k, i_l)."""
    exps = tower.exponents
    s = len(exps)
    value = tower_length(tower) + sum(exps[j] * (s - 1 - j) for j in range(s - 1))
    min_sum = sum(min(a, b) for a in exps for b in exps)
    if value != min_sum:
        raise AssertionError("tower nu identity violated")  # pure arithmetic, cannot fail
    return value


def difference_order(t1: Tower, t2: Tower):
    """o(g1 - g2) for two same-branch towers; None when the tangents agree."""
    n = max(len(t1.tangent), len(t2.tangent))
    pad1 = t1.tangent + (Fraction(0),) * (n - len(t1.tangent))
    pad2 = t2.tangent + (Fraction(0),) * (n - len(t2.tangent))
    for i in range(n):
        if pad1[i] != pad2[i]:
            return i + 1
    return None


def _require_complete(tower: Tower, what: str):
    if not tower.is_complete:
        raise UnsupportedError(f"{what} needs complete towers; use noncomplete_product_nu")


def two_tower_nu(k1: Tower, k2: Tower) -> int:
    """Closed form for the Behrend number of a product of two complete towers.

    With d the tangent-agreement depth (d = 1 for distinct-direction
    cross-branch pairs, d = o(g1 - g2) for same-branch pairs, d <= min of the
    heights), the blowup tree is a shared chain of d nodes forking into two
    arms, and summing the ancestor-level contributions gives

        nu = nu1 + nu2 + (h1 + h2 - 2d) * d(d+1)/2 + 2d (h1 - d)(h2 - d).

    For d = 1 this is nu1 + nu2 + 2 h1 h2 - h1 - h2.
    """
    _require_complete(k1, "the two-tower closed form")
    _require_complete(k2, "the two-tower closed form")
    h1, h2 = k1.height, k2.height
    if k1.branch != k2.branch:
        if k1.linear_coefficient() * k2.linear_coefficient() == 1:
            raise UnsupportedError(
                "the tangent directions coincide; after a linear change of "
                "variables this is a same-branch pair"
            )
        d = 1
    else:
        d = difference_order(k1, k2)
        if d is None:
            raise UnsupportedError("identical towers form a power; use nu_power_rule")
        if d > min(h1, h2):
            raise UnsupportedError(
                "tangents agree beyond the smaller height; no two-tower closed "
                "form applies, use the diagram engine"
            )
    nu1, nu2 = tower_nu(k1), tower_nu(k2)
    return nu1 + nu2 + (h1 + h2 - 2 * d) * d * (d + 1) // 2 + 2 * d * (h1 - d) * (h2 - d)


def two_tower_length(kx: Tower, ky: Tower) -> int:
    """Length of a product of two cross-branch complete towers: l1 + l2 + hx*hy."""
    _require_complete(kx, "the two-tower length form")
    _require_complete(ky, "the two-tower length form")
    if kx.branch == ky.branch:
        raise UnsupportedError("the length closed form needs cross-branch towers")
    if kx.linear_coefficient() * ky.linear_coefficient() == 1:
        raise UnsupportedError("the tangent directions coincide")
    return tower_length(kx) + tower_length(ky) + kx.height * ky.height


# -- products ----------------------------------------------------------------


@dataclass(frozen=True)
class Factor:
    """A single curvilinear factor (f) + m^exponent.

    branch None marks a bare maximal-ideal factor (exponent 1, any f); such
    factors are placed into whichever tower lacks exponent 1, which does not
    change the ideal: (f) + m = m for every f.
    """

    branch: str | None
    tangent: tuple[Fraction, ...]
    exponent: int


def _tower_key(branch: str, tangent) -> tuple:
    return (branch, tangent)


class TowerProduct:
    """A finite product of pairwise tangent-distinct towers, canonically sorted."""

    __slots__ = ("towers",)

    def __init__(self, towers):
        towers = tuple(sorted(towers, key=lambda t: (t.branch, t.tangent, t.exponents)))
        if not towers:
            raise DomainError("a tower product needs at least one tower")
        keys = [_tower_key(t.branch, t.tangent) for t in towers]
        if len(set(keys)) != len(keys):
            raise DomainError(
                "towers sharing branch and tangent must be merged or rejected; "
                "build products through from_factors"
            )
        # cross-branch towers whose projectivized tangent directions coincide
        # (linear coefficients multiplying to 1) belong on a common branch
        # after a linear change of variables; the class machinery would
        # wrongly separate them, so they are rejected here.
        for i, t1 in enumerate(towers):
            for t2 in towers[i + 1 :]:
                if (
                    t1.branch != t2.branch
                    and t1.linear_coefficient() * t2.linear_coefficient() == 1
                ):
                    raise UnsupportedError(
                        "cross-branch towers with aligned tangent directions: "
                        "rewrite them on a common branch first"
                    )
        object.__setattr__(self, "towers", towers)

    def __setattr__(self, name, value):
        raise AttributeError("TowerProduct is immutable")

    def __repr__(self):
        return f"TowerProduct({list(self.towers)!r})"

    @classmethod
    def from_towers(cls, towers) -> "TowerProduct":
        return cls.from_factors(
            Factor(t.branch, t.tangent, k) for t in towers for k in t.exponents
        )

    @classmethod
    def from_factors(cls, factors) -> "TowerProduct":
        """Group raw factors into towers.

        Same-(branch, tangent) factors merge by exponent union; a repeated
        exponent within a group is a repeated ideal factor, i.e. a power,
        which the engine does not model.  Exponent-1 factors all cut out m
        and float to any group with a free slot.
        """
        floating = 0
        groups: dict[tuple, list[int]] = {}
        for f in factors:
            if f.exponent == 1:
                floating += 1
                continue
            if f.branch is None:
                raise DomainError("a bare maximal-ideal factor must have exponent 1")
            key = _tower_key(f.branch, _as_coefficients(f.tangent))
            exps = groups.setdefault(key, [])
            if f.exponent in exps:
                raise UnsupportedError(
                    "repeated tower factor: powers scale nu linearly "
                    "(nu of I^d is d times nu of I), so compute the base product"
                )
            exps.append(f.exponent)
        if not groups and not floating:
            raise DomainError("a tower product needs at least one factor")
        for _ in range(floating):
            for key in sorted(groups):
                if 1 not in groups[key]:
                    groups[key].append(1)
                    break
            else:
                if ("x", ()) not in groups:
                    groups[("x", ())] = [1]
                elif ("y", ()) not in groups:
                    groups[("y", ())] = [1]
                else:
                    raise UnsupportedError(
                        "no tower can absorb another maximal-ideal factor: "
                        "powers of m scale nu linearly, so factor them out first"
                    )
        return cls(
            make_tower(branch, tangent, sorted(exps))
            for (branch, tangent), exps in groups.items()
        )

    @property
    def all_monomial(self) -> bool:
        return all(t.is_monomial for t in self.towers)

    @property
    def all_complete(self) -> bool:
        return all(t.is_complete for t in self.towers)

    def expand(self) -> MonomialIdeal:
        """The product ideal, available for monomial products only."""
        if not self.all_monomial:
            raise UnsupportedError("only monomial tower products expand to monomial ideals")
        result = None
        for t in self.towers:
            result = t.ideal() if result is None else result * t.ideal()
        return result


def _partition_at(towers, r: int):
    """Non-excess classes (canonical order) and the excess pool at level r.

    Towers of height below r pool into the excess class; the rest partition
    by branch and tangent modulo degree < r.  At r = 1 everything is one
    class.  This partition is transitive by construction and agrees with the
    pairwise three-case relation, which equivalence_classes double-checks.
    """
    live = [i for i, t in enumerate(towers) if t.height >= r]
    excess = tuple(i for i, t in enumerate(towers) if t.height < r)
    if r == 1:
        return [tuple(range(len(towers)))], ()
    grouped: dict[tuple, list[int]] = {}
    for i in live:
        key = (towers[i].branch, towers[i].tangent_prefix(r))
        grouped.setdefault(key, []).append(i)
    classes = [tuple(grouped[key]) for key in sorted(grouped)]
    return classes, excess


def _pairwise_related(t1: Tower, t2: Tower, r: int) -> bool:
    if r == 1 or r > max(t1.height, t2.height):
        return True
    if 1 < r <= min(t1.height, t2.height):
        return t1.branch == t2.branch and t1.tangent_prefix(r) == t2.tangent_prefix(r)
    return False


def equivalence_classes(product: TowerProduct, r: int):
    """Tangent-agreement classes of complete towers at level r.

    Returns (classes, excess) as tuples of tower indices; the excess pool is
    the excluded class of towers shorter than r.  Raises if the pairwise
    relation ever disagrees with the computed partition (it cannot, but the
    relation's transitivity is asserted rather than assumed).
    """
    towers = product.towers
    for t in towers:
        _require_complete(t, "the class computation")
    if not 1 <= r <= max(t.height for t in towers):
        raise DomainError("level out of range")
    classes, excess = _partition_at(towers, r)
    lookup = {}
    for c, members in enumerate(classes):
        for i in members:
            lookup[i] = c
    for i in range(len(towers)):
        for j in range(i + 1, len(towers)):
            related = _pairwise_related(towers[i], towers[j], r)
            same = (
                lookup.get(i) == lookup.get(j)
                if i in lookup and j in lookup
                else i in excess and j in excess
            )
            if related != same:
                raise AssertionError(
                    f"tangent-agreement relation is not transitive at level {r}"
                )
    return classes, excess


@dataclass(frozen=True)
class DynkinNode:
    """One exceptional curve: its level, tangent-agreement class, attached
    original factors, self-intersection, multiplicity and survival flag."""

    index: int
    level: int
    members: tuple[int, ...]
    factors: tuple[tuple[int, int], ...]
    self_intersection: int
    multiplicity: int
    surviving: bool


@dataclass(frozen=True)
class DynkinDiagram:
    """Rooted leveled tree of exceptional curves of a tower-product blowup."""

    nodes: tuple[DynkinNode, ...]
    edges: tuple[tuple[int, int], ...]
    parents: tuple[int, ...]  # parent node index; -1 at the root

    def root(self) -> DynkinNode:
        return self.nodes[0]

    def meet_level(self, i: int, j: int) -> int:
        """Level of the deepest common ancestor of two nodes."""
        while self.nodes[i].level > self.nodes[j].level:
            i = self.parents[i]
        while self.nodes[j].level > self.nodes[i].level:
            j = self.parents[j]
        while i != j:
            i, j = self.parents[i], self.parents[j]
        return self.nodes[i].level

    def node_of_factor(self, tower_index: int, exponent: int) -> DynkinNode:
        for node in self.nodes:
            if (tower_index, exponent) in node.factors:
                return node
        raise DomainError(f"no node carries factor ({tower_index}, {exponent})")

    def nu(self) -> int:
        return sum(n.multiplicity for n in self.nodes if n.surviving)


def build_dynkin(product: TowerProduct) -> DynkinDiagram:
    """Build the leveled tree for a product of towers.

    Non-complete towers are completed with the same tangent; multiplicities
    are summed from the original factors only, and a node survives iff its
    level is an exponent of one of the original towers in its class (the
    completion's extra curves are contracted on the actual blowup).
    """
    towers = product.towers
    completed = [t.completed() for t in towers]
    height = max(t.height for t in completed)

    nodes_members: list[tuple[int, tuple[int, ...]]] = []  # (level, members)
    node_at: list[dict[int, int]] = [dict() for _ in range(height + 1)]
    parents: list[int] = []
    for r in range(1, height + 1):
        classes, _ = _partition_at(completed, r)
        for members in classes:
            index = len(nodes_members)
            nodes_members.append((r, members))
            for i in members:
                node_at[r][i] = index
            parents.append(node_at[r - 1][members[0]] if r > 1 else -1)

    edges = tuple((parents[i], i) for i in range(1, len(nodes_members)))
    degree = [0] * len(nodes_members)
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1

    factor_nodes: list[tuple[int, int, int]] = []  # (tower, exponent, node)
    attached: list[list[tuple[int, int]]] = [[] for _ in nodes_members]
    for i, t in enumerate(towers):
        for k in t.exponents:
            node = node_at[k][i]
            factor_nodes.append((i, k, node))
            attached[node].append((i, k))

    # multiplicity: ancestor-chain meets against every original factor
    ancestors: list[list[int]] = []
    for index in range(len(nodes_members)):
        chain = [index]
        while parents[chain[-1]] != -1:
            chain.append(parents[chain[-1]])
        ancestors.append(chain)

    def meet_level(i: int, j: int) -> int:
        seen = set(ancestors[i])
        for node in ancestors[j]:
            if node in seen:
                return nodes_members[node][0]
        raise AssertionError("disconnected diagram")  # tree by construction

    nodes = []
    for index, (level, members) in enumerate(nodes_members):
        multiplicity = sum(meet_level(index, node) for _, _, node in factor_nodes)
        surviving = any(level in towers[i].exponents for i in members)
        self_int = -degree[index] - (1 if level == 1 else 0)
        nodes.append(
            DynkinNode(
                index=index,
                level=level,
                members=members,
                factors=tuple(attached[index]),
                self_intersection=self_int,
                multiplicity=multiplicity,
                surviving=surviving,
            )
        )
    _check_contraction_degrees(nodes, edges)
    return DynkinDiagram(nodes=tuple(nodes), edges=edges, parents=tuple(parents))


def _check_contraction_degrees(nodes, edges) -> None:
    """Intersection-theoretic self-check of multiplicities and survival.

    On the completed (smooth) surface every curve E has E^2 = -1 - #children,
    which equals the stored self-intersection for the root and internal nodes
    alike.  The pulled-back divisor D = sum of multiplicity * curve restricts
    to degree m * E^2 + sum of adjacent multiplicities on E; this is <= 0
    everywhere, negative exactly on the curves the actual blowup keeps, and
    zero exactly on the contracted ones.  Any violation means the computed
    multiplicities or the survival flags are wrong, so fail loudly.
    """
    adjacency_sum = [0] * len(nodes)
    for a, b in edges:
        adjacency_sum[a] += nodes[b].multiplicity
        adjacency_sum[b] += nodes[a].multiplicity
    for node in nodes:
        degree = node.multiplicity * node.self_intersection + adjacency_sum[node.index]
        if degree > 0 or (degree < 0) != node.surviving:
            raise AssertionError(
                f"divisor degree {degree} on the level-{node.level} curve "
                f"contradicts multiplicity {node.multiplicity} / "
                f"survival {node.surviving}"
            )


def contribution(product: TowerProduct, factor: tuple[int, int], node_index: int,
                 diagram: DynkinDiagram | None = None) -> int:
    """Contribution of one factor (tower index, exponent) to one node's multiplicity.

    Equals the level of the deepest common ancestor of the node and the
    factor's own node; on the factor's own chain this is min(exponent, level).
    """
    tower_index, exponent = factor
    towers = product.towers
    if not 0 <= tower_index < len(towers):
        raise DomainError("no such tower")
    if exponent not in towers[tower_index].exponents:
        raise DomainError(
            f"exponent {exponent} is not a factor of tower {tower_index}"
        )
    if diagram is None:
        diagram = build_dynkin(product)
    c_i = diagram.node_of_factor(tower_index, exponent)
    return diagram.meet_level(c_i.index, node_index)


@dataclass(frozen=True)
class TowerNuSummary:
    """Behrend number of a tower product with its diagram; the length is
    filled in when an exact route exists (monomial expansion or a closed
    form), and left None otherwise."""

    nu: int
    length: int | None
    diagram: DynkinDiagram


def _summary_length(product: TowerProduct):
    if product.all_monomial:
        return product.expand().colength()
    towers = product.towers
    if len(towers) == 1:
        return tower_length(towers[0])
    if len(towers) == 2 and product.all_complete:
        try:
            return two_tower_length(*towers)
        except UnsupportedError:
            return None
    return None


def noncomplete_product_nu(product: TowerProduct) -> TowerNuSummary:
    """Behrend number of an arbitrary finite product of towers."""
    diagram = build_dynkin(product)
    return TowerNuSummary(nu=diagram.nu(), length=_summary_length(product), diagram=diagram)


def product_nu(product: TowerProduct) -> TowerNuSummary:
    """Behrend number of a product of complete towers, cross-checked against
    the closed forms for single towers and pairs."""
    for t in product.towers:
        _require_complete(t, "product_nu")
    summary = noncomplete_product_nu(product)
    towers = product.towers
    if len(towers) == 1 and summary.nu != tower_nu(towers[0]):
        raise AssertionError("diagram engine disagrees with the single-tower closed form")
    if len(towers) == 2:
        try:
            expected = two_tower_nu(*towers)
        except UnsupportedError:
            expected = None
        if expected is not None and summary.nu != expected:
            raise AssertionError("diagram engine disagrees with the two-tower closed form")
    return summary


def tower_times_m_power(tower: Tower, n: int) -> tuple[int, int]:
    """Length and Behrend number of K * m^n for a monomial tower K with i_1 > 1.

        length(K m^n) = length(K) + (n(n+1) + 2 n s) / 2
        nu(K m^n)     = nu(K) + s n + n + s

    Both values are cross-checked against the staircase count and the edge
    formula on the expanded monomial ideal; n = 0 degenerates to (length, nu)
    of the tower itself.
    """
    from .nu import nu_monomial

    if not tower.is_monomial:
        raise UnsupportedError("the m-power closed form needs a monomial tower")
    if tower.exponents[0] == 1:
        raise DomainError("the m-power closed form needs i_1 > 1")
    if n < 0:
        raise DomainError("m-power must be nonnegative")
    s = len(tower.exponents)
    length = tower_length(tower) + (n * (n + 1) + 2 * n * s) // 2
    nu = tower_nu(tower) + s * n + n + s if n > 0 else tower_nu(tower)
    expanded = tower.ideal() * MAXIMAL_IDEAL**n
    if expanded.colength() != length:
        raise AssertionError("m-power length form disagrees with the staircase count")
    if nu_monomial(expanded).nu != nu:
        raise AssertionError("m-power nu form disagrees with the edge formula")
    return length, nu
