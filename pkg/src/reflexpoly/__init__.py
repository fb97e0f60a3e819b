"""reflexpoly: exact computations on rational convex polytopes.

Polar duality, lattice-point counting, Ehrhart quasi-polynomials, the
reflexive / quasi-reflexive / dual-Fano / dual-integral hierarchy, the
polytope <-> toric divisor dictionary, Weyl-product Hilbert polynomials of
partial flag varieties, and seeded conjecture fuzzing.  All arithmetic is
exact; the only accelerated code path is the integer lattice scan.
"""

from .classify import (
    ClassificationReport,
    classify,
    is_dual_fano,
    is_dual_integral,
    is_fano,
    is_lattice_polytope,
    is_quasi_reflexive,
    is_reflexive,
    two_dim_criterion,
)
from .ehrhart import (
    CountSequence,
    QuasiPolynomial,
    count,
    count_interior,
    count_sequence,
    ehrhart_quasi_polynomial,
    evaluate,
    hibi_symmetry_check,
    hilbert_symmetry_check,
    is_quasi_lattice,
    reciprocity_check,
)
from .flag import (
    ParabolicChoice,
    RootSystemData,
    anticanonical_weight,
    build_root_system,
    detect_anticanonical,
    hilbert_polynomial,
    parabolic_positive_roots,
    string_polytope_cross_check,
)
from .fuzz import (
    FuzzConfig,
    FuzzReport,
    random_polytope,
    test_conjecture_dualfano,
    test_conjecture_quasilattice,
)
from .polytope import (
    HalfSpace,
    LatticePointSet,
    Polytope,
    count_lattice_points,
    dilate,
    from_hrep,
    from_json,
    from_vrep,
    lattice_points,
    normal_fan_rays,
    polar_dual,
    round_down,
    round_up,
    translate,
)
from .rationals import Rational, format_rational, parse_rational
from .toric import (
    FanRays,
    ToricDivisorData,
    anticanonical_divisor,
    divisor_from_polytope,
    euler_char_canonical_twist,
    euler_char_global,
    is_weil,
    polytope_from_divisor,
    round_down_divisor,
    round_up_divisor,
)

__version__ = "0.1.0"
