"""Goppa codes from Edwards curves.

Layers, bottom up: exact GF(p^t) arithmetic, Edwards/Weierstrass curves
with their group laws, the birational correspondence between the two
models, explicit bases for the function spaces of divisors, and the
Goppa code construction (generator, standard form, parity check, exact
minimum distance).  A CLI (`edgoppa` / `python -m edgoppa`) wraps the
same operations and emits JSON artifacts.
"""

from .birational import BirationalPair, canonical_pair, to_edwards, to_weierstrass
from .curves import (
    OMEGA1,
    OMEGA2,
    EdwardsCurve,
    EdwardsPoint,
    SingularPoint,
    WeierstrassCurve,
    WeierstrassPoint,
    format_point,
    parse_edwards_point,
    parse_weierstrass_point,
)
from .errors import EdwardsGoppaError
from .fields import GF, FieldElement, find_irreducible
from .goppa import (
    GoppaCode,
    build_code,
    build_generator,
    code_from_json,
    code_to_json,
    designed_distance,
    encode,
    matrix_rank,
    min_distance,
    parity_check,
    select_points,
    standard_form,
    syndrome,
)
from .riemann_roch import (
    Divisor,
    evaluate_basis,
    evaluate_function,
    format_divisor,
    formula_text,
    make_divisor,
    parse_divisor,
    reduce_divisor,
    riemann_roch_basis,
)

__version__ = "0.1.0"

__all__ = [
    "GF",
    "FieldElement",
    "find_irreducible",
    "EdwardsCurve",
    "EdwardsPoint",
    "SingularPoint",
    "OMEGA1",
    "OMEGA2",
    "WeierstrassCurve",
    "WeierstrassPoint",
    "format_point",
    "parse_edwards_point",
    "parse_weierstrass_point",
    "BirationalPair",
    "canonical_pair",
    "to_edwards",
    "to_weierstrass",
    "Divisor",
    "make_divisor",
    "parse_divisor",
    "format_divisor",
    "reduce_divisor",
    "riemann_roch_basis",
    "evaluate_function",
    "evaluate_basis",
    "formula_text",
    "GoppaCode",
    "build_code",
    "build_generator",
    "select_points",
    "standard_form",
    "parity_check",
    "designed_distance",
    "encode",
    "syndrome",
    "min_distance",
    "matrix_rank",
    "code_to_json",
    "code_from_json",
    "EdwardsGoppaError",
    "__version__",
]
