"""
The Lie 2-algebra g ⊕ Z(g) of a (right) Leibniz algebra.

l1 is the inclusion of the right center, l2(x,y) = ½([x,y] − [y,x]) and
l3(x,y,z) = ¼([x,[y,z]] + [y,[z,x]] + [z,[x,y]]), which equals the
Jacobiator of l2 in every right Leibniz algebra. The cyclic form
¼([[z,y],x] + [[x,z],y] + [[y,x],z]) is not used: it breaks identity (iii)
already on [e1,e1] = e2, [e2,e1] = e2.

Identity (v) is checked as the full coherence law of a 2-term L∞ algebra,
six l3(l2) terms against four l2(l3) terms, rather than the shorter 4+3
display sometimes quoted for it.
"""

import itertools
import logging
from fractions import Fraction

from algebra_core import (
    AxiomReport, BilinearMap, GuardFailure, InvalidStructureError, LeibnizAlgebra, ReportBuilder,
    TrilinearMap, check_leibniz,
)
from constructions import right_center
from exact_linalg import Subspace, Vector, add, basis_vector, scale, sub
from graded import combine

from .two_term import TwoTermLie

logger = logging.getLogger(__name__)

LIE_2_AXIOMS = (
    "l2-antisymmetric", "l3-alternating",
    "identity-i", "identity-ii", "identity-iii", "identity-iv", "identity-v",
)


def l2_value(bracket: BilinearMap, u: Vector, v: Vector) -> Vector:
    """½([u,v] − [v,u]) in ambient coordinates."""
    return scale(Fraction(1, 2), sub(bracket.evaluate(u, v), bracket.evaluate(v, u)))


def l3_value(bracket: BilinearMap, u: Vector, v: Vector, w: Vector) -> Vector:
    """¼([u,[v,w]] + [v,[w,u]] + [w,[u,v]]) in ambient coordinates."""
    b = bracket.evaluate
    total = add(add(b(u, b(v, w)), b(v, b(w, u))), b(w, b(u, v)))
    return scale(Fraction(1, 4), total)


def two_term_lie_over(dim: int, bracket: BilinearMap, degree_one: Subspace, guard: str) -> TwoTermLie:
    """
    Build (g ⊕ V, l1, l2, l3) for a subspace V that should absorb the mixed l2
    placement and all l3 values.

    Raises:
        GuardFailure: If a mixed l2 value or an l3 value is not in V
    """
    m = degree_one.dim
    basis = [basis_vector(dim, i) for i in range(dim)]
    lifted = degree_one.vectors()

    def into(v: Vector, what: str) -> Vector:
        if not degree_one.contains(v):
            raise GuardFailure(guard, f"{what} is not in the degree-1 subspace")
        return degree_one.coordinates(v)

    l2_00 = BilinearMap.from_function((dim, dim, dim), lambda i, j: l2_value(bracket, basis[i], basis[j]))
    l2_01 = BilinearMap.from_function(
        (dim, m, m), lambda i, s: into(l2_value(bracket, basis[i], lifted[s]), f"l2(e{i}, c{s})"))
    l3 = TrilinearMap.from_function(
        (dim, dim, dim, m),
        lambda i, j, k: into(l3_value(bracket, basis[i], basis[j], basis[k]), f"l3(e{i}, e{j}, e{k})"))
    return TwoTermLie(dim, m, degree_one.inclusion(), l2_00, l2_01, l3)


def lie_2_algebra_from_leibniz(l: LeibnizAlgebra, validate: bool = True) -> TwoTermLie:
    """
    The Lie 2-algebra on g ⊕ Z(g).

    Args:
        l: A Leibniz algebra
        validate: Check the Leibniz identity first

    Returns:
        TwoTermLie: With g_1 = right_center(l) in its canonical coordinates

    Raises:
        InvalidStructureError: If validate is set and l is not a Leibniz algebra
        GuardFailure: "z-centrality" if a mixed l2 or an l3 value leaves Z(g)
    """
    if validate:
        report = check_leibniz(l)
        if not report.passed:
            raise InvalidStructureError("leibniz", report)
    t = two_term_lie_over(l.dim, l.bracket, right_center(l), "z-centrality")
    logger.info(f"Lie 2-algebra on g ⊕ Z(g) with dims ({t.dim0}, {t.dim1})")
    return t


def check_lie_2_algebra(t: TwoTermLie) -> AxiomReport:
    """
    Evaluate the Lie 2-algebra identities on basis tuples.

    x, y, z, w run over g_0 and a, b over g_1; l2(a, x) means −l2(x, a).

    - l2 antisymmetric on g_0, l3 alternating on g_0
    - (i)   l1 l2(x,a) = l2(x, l1 a)
    - (ii)  l2(l1 a, b) = l2(a, l1 b)
    - (iii) l2(x,l2(y,z)) + l2(y,l2(z,x)) + l2(z,l2(x,y)) = l1 l3(x,y,z)
    - (iv)  l2(x,l2(y,a)) + l2(y,l2(a,x)) + l2(a,l2(x,y)) = l3(x,y,l1 a)
    - (v)   l3(l2(x,y),z,w) − l3(l2(x,z),y,w) + l3(l2(x,w),y,z)
            + l3(l2(y,z),x,w) − l3(l2(y,w),x,z) + l3(l2(z,w),x,y)
            = l2(l3(x,y,z),w) − l2(l3(x,y,w),z) + l2(l3(x,z,w),y) − l2(l3(y,z,w),x)
    """
    builder = ReportBuilder("lie_2_algebra", LIE_2_AXIOMS)
    k1, k2, k3 = t.k1, t.k2, t.k3
    xs, cs = t.space.basis(0), t.space.basis(1)

    def check(axiom, index, lhs, rhs):
        builder.compare(axiom, index, lhs.vec, rhs.vec)

    for (s, x), (t_, y) in itertools.product(enumerate(xs), repeat=2):
        check("l2-antisymmetric", (s, t_), k2(x, y), combine((-1, k2(y, x))))

    for (s, x), (t_, y), (u, z) in itertools.product(enumerate(xs), repeat=3):
        value = k3(x, y, z)
        check("l3-alternating", (0, s, t_, u), value, combine((-1, k3(y, x, z))))
        check("l3-alternating", (1, s, t_, u), value, combine((-1, k3(x, z, y))))
        check("identity-iii", (s, t_, u),
              combine((1, k2(x, k2(y, z))), (1, k2(y, k2(z, x))), (1, k2(z, k2(x, y)))), k1(value))

    for (s, x), (p, a) in itertools.product(enumerate(xs), enumerate(cs)):
        check("identity-i", (s, p), k1(k2(x, a)), k2(x, k1(a)))

    for (p, a), (q, b) in itertools.product(enumerate(cs), repeat=2):
        check("identity-ii", (p, q), k2(k1(a), b), k2(a, k1(b)))

    for (s, x), (t_, y), (p, a) in itertools.product(enumerate(xs), enumerate(xs), enumerate(cs)):
        lhs = combine((1, k2(x, k2(y, a))), (1, k2(y, k2(a, x))), (1, k2(a, k2(x, y))))
        check("identity-iv", (s, t_, p), lhs, k3(x, y, k1(a)))

    for (s, x), (t_, y), (u, z), (v, w) in itertools.product(enumerate(xs), repeat=4):
        lhs = combine(
            (1, k3(k2(x, y), z, w)), (-1, k3(k2(x, z), y, w)), (1, k3(k2(x, w), y, z)),
            (1, k3(k2(y, z), x, w)), (-1, k3(k2(y, w), x, z)), (1, k3(k2(z, w), x, y)),
        )
        rhs = combine(
            (1, k2(k3(x, y, z), w)), (-1, k2(k3(x, y, w), z)),
            (1, k2(k3(x, z, w), y)), (-1, k2(k3(y, z, w), x)),
        )
        check("identity-v", (s, t_, u, v), lhs, rhs)

    return builder.build()
