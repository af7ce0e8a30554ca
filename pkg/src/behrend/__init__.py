"""Exact invariants of fat points in the affine plane.

Monomial ideals of finite colength in C[x, y]: lengths, Ferrers staircases,
Newton polygons, integral closures and normality, the unique factorization
of normal ideals into n(a, b) atoms, toric fans of blowups, towers of
curvilinear ideals with their exceptional-curve diagrams, and above all the
Behrend number, computed by two independent engines that verify each other.
"""

from .errors import BehrendError, DomainError, ParseError, UnsupportedError
from .expr import factors_text, ideal_text, parse, product_text, tower_text
from .ideals import (
    MAXIMAL_IDEAL,
    UNIT_IDEAL,
    FerrersDiagram,
    MonomialIdeal,
    complete_intersection,
    minimal_generators,
)
from .newton import (
    Edge,
    NewtonPolygon,
    closure_power,
    integral_closure,
    integral_closure_oracle,
    is_normal,
    newton_polygon,
    pick_length,
    staircase_conditions,
)
from .normal_factor import (
    Cone,
    Fan,
    NabFactor,
    component_count,
    factor_normal,
    fan_of,
    n_ab,
    reconstruct,
)
from .nu import (
    BehrendReport,
    ComponentRecord,
    edge_degree,
    edge_multiplicity,
    nu_lci,
    nu_monomial,
    nu_power_rule,
)
from .towers import (
    DynkinDiagram,
    DynkinNode,
    Factor,
    Tower,
    TowerNuSummary,
    TowerProduct,
    build_dynkin,
    contribution,
    equivalence_classes,
    make_tower,
    noncomplete_product_nu,
    product_nu,
    tower_ideal,
    tower_length,
    tower_nu,
    tower_times_m_power,
    two_tower_length,
    two_tower_nu,
)
from .verify import Bounds, CheckResult, run_all

__version__ = "0.1.0"

__all__ = [
    "BehrendError",
    "DomainError",
    "ParseError",
    "UnsupportedError",
    "MonomialIdeal",
    "FerrersDiagram",
    "MAXIMAL_IDEAL",
    "UNIT_IDEAL",
    "minimal_generators",
    "complete_intersection",
    "Edge",
    "NewtonPolygon",
    "newton_polygon",
    "closure_power",
    "integral_closure",
    "integral_closure_oracle",
    "is_normal",
    "pick_length",
    "staircase_conditions",
    "NabFactor",
    "Fan",
    "Cone",
    "n_ab",
    "factor_normal",
    "reconstruct",
    "fan_of",
    "component_count",
    "BehrendReport",
    "ComponentRecord",
    "edge_multiplicity",
    "edge_degree",
    "nu_monomial",
    "nu_power_rule",
    "nu_lci",
    "Tower",
    "TowerProduct",
    "TowerNuSummary",
    "Factor",
    "DynkinDiagram",
    "DynkinNode",
    "make_tower",
    "tower_ideal",
    "tower_length",
    "tower_nu",
    "two_tower_nu",
    "two_tower_length",
    "equivalence_classes",
    "build_dynkin",
    "contribution",
    "product_nu",
    "noncomplete_product_nu",
    "tower_times_m_power",
    "parse",
    "ideal_text",
    "factors_text",
    "tower_text",
    "product_text",
    "Bounds",
    "CheckResult",
    "run_all",
]
