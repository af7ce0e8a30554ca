"""Brute-force and cross-engine verification harness.

Every closed form in the package is checked here against an independent
route: staircase counts against length formulas, the Newton-polygon Behrend
number against the tower diagram engine, the polygon integral closure
against the definitional power membership test.  Instances are generated
from a seeded generator so failures reproduce; results are reported sorted
by (name, instance).  Only the definitional closure check may return
"inconclusive" (its certifying power p is unbounded a priori).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from .errors import UnsupportedError
from .expr import ideal_text, product_text
from .ideals import MonomialIdeal, complete_intersection
from .newton import (
    definitional_member,
    integral_closure,
    is_normal,
    pick_length,
    staircase_conditions,
)
from .normal_factor import n_ab
from .nu import nu_monomial
from .towers import (
    Factor,
    TowerProduct,
    make_tower,
    noncomplete_product_nu,
    product_nu,
    tower_ideal,
    tower_length,
    two_tower_length,
    two_tower_nu,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    instance: str
    expected: object
    actual: object
    status: str  # pass | fail | inconclusive

    @staticmethod
    def compare(name: str, instance: str, expected, actual) -> "CheckResult":
        status = "pass" if expected == actual else "fail"
        return CheckResult(name, instance, expected, actual, status)


@dataclass(frozen=True)
class Bounds:
    name: str
    tower_products: int = 500
    tangent_products: int = 150
    tower_exponent_max: int = 7
    power_ideals: int = 200
    power_max: int = 4
    closure_ideals: int = 200
    closure_p_max: int = 8
    normal_ideals: int = 200
    staircase_box: int = 10
    complete_tower_max: int = 8
    cross_height_max: int = 6
    pair_height_max: int = 8
    nab_max: int = 12
    balanced_pair_max: int = 10
    random_box: int = 8


PRESETS = {
    "default": Bounds(name="default"),
    "quick": Bounds(
        name="quick",
        tower_products=60,
        tangent_products=25,
        power_ideals=30,
        closure_ideals=30,
        normal_ideals=30,
        pair_height_max=5,
        nab_max=6,
        balanced_pair_max=6,
    ),
}


def random_ideal(rng: random.Random, box: int) -> MonomialIdeal:
    """Random finite-colength monomial ideal with generators in [0, box]^2."""
    a0 = rng.randint(1, box)
    b0 = rng.randint(1, box)
    gens = [(a0, 0), (0, b0)]
    for _ in range(rng.randint(0, 4)):
        point = (rng.randint(0, a0), rng.randint(0, b0))
        if point != (0, 0):
            gens.append(point)
    return MonomialIdeal(gens)


def random_normal_ideal(rng: random.Random, box: int) -> MonomialIdeal:
    return integral_closure(random_ideal(rng, box))


def random_monomial_tower_product(rng: random.Random, exp_max: int) -> TowerProduct:
    """Up to three monomial towers with random branches and exponent sets;
    resamples when the factors collide (same-branch overlapping exponents)."""
    while True:
        factors = []
        for _ in range(rng.randint(1, 3)):
            branch = rng.choice(("x", "y"))
            size = rng.randint(1, 4)
            exps = rng.sample(range(1, exp_max + 1), size)
            factors.extend(Factor(branch, (), e) for e in exps)
        try:
            return TowerProduct.from_factors(factors)
        except UnsupportedError:
            continue


def random_tangent_tower_product(rng: random.Random, exp_max: int) -> TowerProduct:
    """Up to three towers with random branches, exponent sets and rational
    tangents; resamples on factor collisions or aligned cross directions."""
    from fractions import Fraction

    while True:
        factors = []
        for _ in range(rng.randint(1, 3)):
            branch = rng.choice(("x", "y"))
            exps = sorted(rng.sample(range(1, exp_max + 1), rng.randint(1, 3)))
            degree = rng.randint(0, exps[-1] - 1)
            tangent = tuple(
                Fraction(rng.randint(-2, 2), rng.randint(1, 2)) for _ in range(degree)
            )
            factors.extend(Factor(branch, tangent, e) for e in exps)
        try:
            return TowerProduct.from_factors(factors)
        except UnsupportedError:
            continue


def check_length_forms(rng: random.Random, bounds: Bounds) -> list[CheckResult]:
    """Closed-form lengths against brute-force staircase counts."""
    results = []
    for s in range(1, bounds.complete_tower_max + 1):
        tower = make_tower("x", (), range(1, s + 1))
        results.append(
            CheckResult.compare(
                "length/complete-tower",
                f"s={s}",
                tower_ideal(tower).colength(),
                tower_length(tower),
            )
        )
    for hx in range(1, bounds.cross_height_max + 1):
        for hy in range(1, bounds.cross_height_max + 1):
            kx = make_tower("x", (), range(1, hx + 1))
            ky = make_tower("y", (), range(1, hy + 1))
            expected = (tower_ideal(kx) * tower_ideal(ky)).colength()
            results.append(
                CheckResult.compare(
                    "length/cross-pair",
                    f"hx={hx} hy={hy}",
                    expected,
                    two_tower_length(kx, ky),
                )
            )
            if hx == hy:
                closed = hx * (hx + 1) * (hx + 2) // 3 + hx * hx
                results.append(
                    CheckResult.compare(
                        "length/equal-cross-closed-form", f"h={hx}", expected, closed
                    )
                )
    for _ in range(bounds.normal_ideals):
        ideal = random_normal_ideal(rng, bounds.random_box)
        results.append(
            CheckResult.compare(
                "length/pick",
                ideal_text(ideal),
                ideal.colength(),
                pick_length(ideal),
            )
        )
    return results


def check_nu_cross(rng: random.Random, bounds: Bounds) -> list[CheckResult]:
    """The Newton-polygon Behrend number against every independent route."""
    results = []
    for _ in range(bounds.tower_products):
        product = random_monomial_tower_product(rng, bounds.tower_exponent_max)
        expected = nu_monomial(product.expand()).nu
        results.append(
            CheckResult.compare(
                "nu/dual-engine",
                product_text(product),
                expected,
                noncomplete_product_nu(product).nu,
            )
        )
    for _ in range(bounds.power_ideals):
        ideal = random_ideal(rng, bounds.random_box)
        d = rng.randint(1, bounds.power_max)
        results.append(
            CheckResult.compare(
                "nu/power-rule",
                f"{ideal_text(ideal)} ^ {d}",
                d * nu_monomial(ideal).nu,
                nu_monomial(ideal**d).nu,
            )
        )
    for h in range(1, bounds.balanced_pair_max + 1):
        for k in range(1, bounds.balanced_pair_max + 1):
            ideal = complete_intersection(h, h) * complete_intersection(k, k)
            results.append(
                CheckResult.compare(
                    "nu/equal-degree-pair",
                    f"h={h} k={k}",
                    gcd(h, k) * (h + k),
                    nu_monomial(ideal).nu,
                )
            )
    for alpha in range(1, bounds.nab_max + 1):
        for beta in range(1, bounds.nab_max + 1):
            results.append(
                CheckResult.compare(
                    "nu/normalized-intersection",
                    f"n({alpha},{beta})",
                    alpha * beta // gcd(alpha, beta),
                    nu_monomial(n_ab(alpha, beta)).nu,
                )
            )
    for _ in range(bounds.tangent_products):
        product = random_tangent_tower_product(rng, bounds.tower_exponent_max)
        # build_dynkin self-checks the divisor degrees of every curve, so a
        # clean run certifies the multiplicities and survival flags; monomial
        # instances are additionally pinned to the polygon engine.
        summary = noncomplete_product_nu(product)
        expected = (
            nu_monomial(product.expand()).nu if product.all_monomial else summary.nu
        )
        results.append(
            CheckResult.compare(
                "nu/diagram-consistency", product_text(product), expected, summary.nu
            )
        )
    results.extend(check_pair_agreement(bounds))
    return results


def check_pair_agreement(bounds: Bounds) -> list[CheckResult]:
    """Diagram engine against the two-tower closed form, all admissible depths."""
    results = []
    for h1 in range(1, bounds.pair_height_max + 1):
        for h2 in range(h1, bounds.pair_height_max + 1):
            k1 = make_tower("x", (), range(1, h1 + 1))
            ky = make_tower("y", (), range(1, h2 + 1))
            results.append(
                CheckResult.compare(
                    "nu/pair-agreement",
                    f"h1={h1} h2={h2} cross",
                    two_tower_nu(k1, ky),
                    product_nu(TowerProduct([k1, ky])).nu,
                )
            )
            for d in range(1, min(h1, h2) + 1):
                if d >= h2:  # the tangent degree must stay below the height
                    continue
                tangent = (0,) * (d - 1) + (1,)
                k2 = make_tower("x", tangent, range(1, h2 + 1))
                results.append(
                    CheckResult.compare(
                        "nu/pair-agreement",
                        f"h1={h1} h2={h2} d={d}",
                        two_tower_nu(k1, k2),
                        product_nu(TowerProduct([k1, k2])).nu,
                    )
                )
    return results


def check_closure(rng: random.Random, bounds: Bounds, p_max: int | None = None) -> list[CheckResult]:
    """Polygon closure against the definitional power test, plus normality checks.

    A definitional member missing from the polygon closure would be a real
    failure; a polygon member not certified by p <= p_max is inconclusive.
    """
    p_max = bounds.closure_p_max if p_max is None else p_max
    results = []
    seeds = [
        complete_intersection(2, 2),
        complete_intersection(2, 3),
        complete_intersection(5, 5),
    ]
    for ideal in seeds:
        results.append(_closure_result(ideal, 4))
    for _ in range(bounds.closure_ideals):
        results.append(_closure_result(random_ideal(rng, bounds.random_box), p_max))
    for _ in range(bounds.normal_ideals):
        ideal = random_normal_ideal(rng, bounds.random_box)
        results.append(
            CheckResult.compare(
                "closure/normal-fixed-point",
                ideal_text(ideal),
                ideal,
                integral_closure(ideal),
            )
        )
        results.append(
            CheckResult.compare(
                "closure/normal-staircase-conditions",
                ideal_text(ideal),
                True,
                staircase_conditions(ideal),
            )
        )
    for _ in range(bounds.normal_ideals):
        ideal = random_ideal(rng, bounds.staircase_box)
        if is_normal(ideal):
            results.append(
                CheckResult.compare(
                    "closure/normal-staircase-conditions",
                    ideal_text(ideal),
                    True,
                    staircase_conditions(ideal),
                )
            )
    return results


def _closure_result(ideal: MonomialIdeal, p_max: int) -> CheckResult:
    closure = integral_closure(ideal)
    powers = [None, ideal]
    for _ in range(p_max - 1):
        powers.append(powers[-1] * ideal)
    unresolved = 0
    for a in range(ideal.x_power + 1):
        for b in range(ideal.y_power + 1):
            polygon_member = (a, b) in closure
            certified = definitional_member(powers, a, b)
            if certified and not polygon_member:
                return CheckResult(
                    "closure/definitional",
                    ideal_text(ideal),
                    "polygon contains every definitional member",
                    f"({a}, {b}) certified at p <= {p_max} but outside the polygon",
                    "fail",
                )
            if polygon_member and not certified:
                unresolved += 1
    if unresolved:
        return CheckResult(
            "closure/definitional",
            ideal_text(ideal),
            "all memberships certified",
            f"{unresolved} polygon members not certified by p <= {p_max}",
            "inconclusive",
        )
    return CheckResult(
        "closure/definitional", ideal_text(ideal), "agreement", "agreement", "pass"
    )


def run_all(seed: int = 0, bounds: Bounds | None = None) -> list[CheckResult]:
    """Run every check with one seeded generator; results sorted by (name, instance)."""
    bounds = bounds or PRESETS["default"]
    rng = random.Random(seed)
    results = []
    results.extend(check_length_forms(rng, bounds))
    results.extend(check_nu_cross(rng, bounds))
    results.extend(check_closure(rng, bounds))
    return sorted(results, key=lambda r: (r.name, r.instance))


def summarize(results) -> dict[str, int]:
    counts = {"pass": 0, "fail": 0, "inconclusive": 0}
    for r in results:
        counts[r.status] += 1
    return counts
