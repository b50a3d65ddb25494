"""
Poisson dialgebras twisted out of a Poisson algebra by a linear operator.

Both the differential construction and the averaging construction use the same
shape of formulas: x⊣y = x·T(y), x⊢y = T(x)·y and [x,y]_T = [x, T(y)]. They
differ only in the laws the operator T must satisfy.
"""

import itertools
import logging

from algebra_core import (
    AxiomReport, BilinearMap, GuardFailure, InvalidStructureError, LinearOperator, PoissonDialgebra,
    ReportBuilder, ShapeMismatchError, check_poisson_algebra,
)
from exact_linalg import add, basis_vector

logger = logging.getLogger(__name__)


def _require_operator(p_dim: int, operator: LinearOperator) -> None:
    if operator.dim != p_dim:
        raise ShapeMismatchError(f"Operator acts on K^{operator.dim}, algebra has dim {p_dim}")


def _require_poisson(p_dim: int, product: BilinearMap, bracket: BilinearMap) -> None:
    report = check_poisson_algebra(p_dim, product, bracket)
    if not report.passed:
        raise InvalidStructureError("poisson", report)


def _twisted(p_dim: int, product: BilinearMap, bracket: BilinearMap, operator: LinearOperator) -> PoissonDialgebra:
    images = [operator.matrix.column(j) for j in range(p_dim)]
    units = [basis_vector(p_dim, i) for i in range(p_dim)]
    shape = (p_dim, p_dim, p_dim)
    left = BilinearMap.from_function(shape, lambda i, j: product.evaluate(units[i], images[j]))
    right = BilinearMap.from_function(shape, lambda i, j: product.evaluate(images[i], units[j]))
    twisted_bracket = BilinearMap.from_function(shape, lambda i, j: bracket.evaluate(units[i], images[j]))
    return PoissonDialgebra(p_dim, left, right, twisted_bracket)


def check_derivation(p_dim: int, product: BilinearMap, bracket: BilinearMap, d: LinearOperator) -> AxiomReport:
    """
    Check that d is a square-zero derivation of both operations.

    Returns:
        AxiomReport: kind "differential" with axioms product-derivation,
        bracket-derivation and square-zero
    """
    _require_operator(p_dim, d)
    builder = ReportBuilder("differential", ["product-derivation", "bracket-derivation", "square-zero"])
    images = [d.matrix.column(j) for j in range(p_dim)]
    units = [basis_vector(p_dim, i) for i in range(p_dim)]

    for i, j in itertools.product(range(p_dim), repeat=2):
        builder.compare("product-derivation", (i, j),
                        d.apply(product.product(i, j)),
                        add(product.evaluate(units[i], images[j]), product.evaluate(images[i], units[j])))
        builder.compare("bracket-derivation", (i, j),
                        d.apply(bracket.product(i, j)),
                        add(bracket.evaluate(images[i], units[j]), bracket.evaluate(units[i], images[j])))

    square = d.compose(d)
    for j in range(p_dim):
        builder.compare("square-zero", (j,), square.matrix.column(j), (0,) * p_dim)
    return builder.build()


def poisson_dialgebra_from_differential(p_dim: int, product: BilinearMap, bracket: BilinearMap,
                                        d: LinearOperator, validate: bool = True) -> PoissonDialgebra:
    """
    The Poisson dialgebra x⊣y = x·dy, x⊢y = dx·y, [x,y]_d = [x, dy].

    Args:
        p_dim: Dimension of the Poisson algebra
        product: Its associative product
        bracket: Its Lie bracket
        d: A square-zero derivation of both
        validate: Check the Poisson algebra and the operator first

    Raises:
        GuardFailure: "differential-square-zero" if d∘d ≠ 0
        InvalidStructureError: If the algebra is not Poisson or d fails a derivation law
    """
    if validate:
        _require_poisson(p_dim, product, bracket)
        report = check_derivation(p_dim, product, bracket, d)
        if report.violations_for("square-zero"):
            raise GuardFailure("differential-square-zero", "d∘d is not the zero map")
        if not report.passed:
            raise InvalidStructureError("differential", report)
    else:
        _require_operator(p_dim, d)
    return _twisted(p_dim, product, bracket, d)


def check_averaging(p_dim: int, product: BilinearMap, bracket: BilinearMap, alpha: LinearOperator) -> AxiomReport:
    """
    Check the averaging laws α(x·αy) = αx·αy = α(αx·y) and [αx, αy] = α[αx, y].

    Returns:
        AxiomReport: kind "averaging" with axioms averaging-left,
        averaging-right and averaging-bracket
    """
    _require_operator(p_dim, alpha)
    builder = ReportBuilder("averaging", ["averaging-left", "averaging-right", "averaging-bracket"])
    images = [alpha.matrix.column(j) for j in range(p_dim)]
    units = [basis_vector(p_dim, i) for i in range(p_dim)]

    for i, j in itertools.product(range(p_dim), repeat=2):
        middle = product.evaluate(images[i], images[j])
        builder.compare("averaging-left", (i, j), alpha.apply(product.evaluate(units[i], images[j])), middle)
        builder.compare("averaging-right", (i, j), alpha.apply(product.evaluate(images[i], units[j])), middle)
        builder.compare("averaging-bracket", (i, j),
                        bracket.evaluate(images[i], images[j]),
                        alpha.apply(bracket.evaluate(images[i], units[j])))
    return builder.build()


def poisson_dialgebra_from_averaging(p_dim: int, product: BilinearMap, bracket: BilinearMap,
                                     alpha: LinearOperator, validate: bool = True) -> PoissonDialgebra:
    """
    The Poisson dialgebra x⊣y = x·αy, x⊢y = αx·y, [x,y]_α = [x, αy].

    Raises:
        InvalidStructureError: If the algebra is not Poisson or α is not averaging
    """
    if validate:
        _require_poisson(p_dim, product, bracket)
        report = check_averaging(p_dim, product, bracket, alpha)
        if not report.passed:
            raise InvalidStructureError("averaging", report)
    else:
        _require_operator(p_dim, alpha)
    p = _twisted(p_dim, product, bracket, alpha)
    logger.debug(f"Averaging construction on dim {p_dim}")
    return p
