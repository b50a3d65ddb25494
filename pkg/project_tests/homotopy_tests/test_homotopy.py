"""
Homotopy Structures Tests

This module tests the two-term homotopy structures including:
- The associative 2-algebra D ⊕ I of N2, of a dialgebra with non-zero μ3 and of generated dialgebras
- The Lie 2-algebra g ⊕ Z(g) of Leibniz algebras, including one with non-zero l3
- The homotopy pair on P ⊕ J, on fixtures and on 100 generated Poisson dialgebras
- 2-term homotopy Poisson algebras of reduced Poisson dialgebras, with the unit warning
- Pinned failing structures for every checker
- The "reduced" guard and the compatibility residual report
"""

import sys
from dataclasses import replace
from fractions import Fraction
from pathlib import Path

# Fix Unicode encoding for Windows terminal
if sys.platform == "win32":
    sys.stdout.reconfigure(encoding='utf-8')
    sys.stderr.reconfigure(encoding='utf-8')

# Add the project root to the path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from hypothesis import given, settings, strategies as st

from algebra_core import BilinearMap, Dialgebra, GuardFailure, LeibnizAlgebra, PoissonAlgebra, TrilinearMap
from constructions import (
    InstanceGenerator, induced_leibniz, induced_poisson_dialgebra, k2_pointwise_poisson, n2_dialgebra, sl2_lie,
    t3_dialgebra, truncated_polynomial,
)
from homotopy import (
    associative_2_algebra_from_dialgebra, check_associative_2_algebra, check_homotopy_poisson, check_lie_2_algebra,
    check_reduced, explore_compatibility, homotopy_pair_from_poisson_dialgebra, homotopy_poisson_from_reduced,
    lie_2_algebra_from_leibniz,
)


def scalar_module_dialgebra() -> Dialgebra:
    """M = K² over A = K with f(a, b) = a; x⊣y = f(y)x and x⊢y = f(x)y."""
    left = BilinearMap.from_entries((2, 2, 2), [(0, 0, 0, 1), (1, 0, 1, 1)])
    right = BilinearMap.from_entries((2, 2, 2), [(0, 0, 0, 1), (0, 1, 1, 1)])
    return Dialgebra(2, left, right)


def hemisemidirect_leibniz() -> LeibnizAlgebra:
    """[p,q] = q acting on a copy of itself from the right; basis p, q, p′, q′."""
    bracket = BilinearMap.from_entries((4, 4, 4), [(0, 1, 1, 1), (1, 0, 1, -1), (2, 1, 3, 1), (3, 0, 3, -1)])
    return LeibnizAlgebra(4, bracket)


def test_associative_2_algebra():
    """Test D ⊕ I for N2 and for a dialgebra with non-zero μ3."""
    print("🔍 TESTING ASSOCIATIVE 2-ALGEBRA")
    print("-" * 50)

    t = associative_2_algebra_from_dialgebra(n2_dialgebra())
    assert (t.dim0, t.dim1) == (2, 1)
    # μ1 includes I = span{y}
    assert t.mu1.column(0) == (0, 1)
    # μ2(x, x) = ½(x⊣x + x⊢x) = ½y
    assert t.mu2_00.product(0, 0) == (0, Fraction(1, 2))
    assert t.mu3.is_zero()
    report = check_associative_2_algebra(t)
    assert report.passed, report.summary()
    print("✅ N2 ⊕ I is an associative 2-algebra")

    t = associative_2_algebra_from_dialgebra(scalar_module_dialgebra())
    assert (t.dim0, t.dim1) == (2, 1)
    assert t.mu3.value(0, 0, 1) == (Fraction(1, 4),)
    assert t.mu3.value(1, 0, 0) == (Fraction(-1, 4),)
    report = check_associative_2_algebra(t)
    assert report.passed, report.summary()
    print("✅ Identities hold with non-zero μ3")

    # μ3(x, x, x) = 1 while μ2 is associative on N2
    perturbed = replace(associative_2_algebra_from_dialgebra(n2_dialgebra()),
                        mu3=TrilinearMap.from_entries((2, 2, 2, 1), [(0, 0, 0, 0, 1)]))
    report = check_associative_2_algebra(perturbed)
    assert not report.passed
    first = report.first_violation
    assert first.axiom == "identity-iii"
    assert first.indices == (0, 0, 0)
    assert first.lhs == (0, 0) and first.rhs == (0, 1)
    print(f"✅ Pinned failing structure: {report.summary()}")


def test_lie_2_algebra():
    """Test g ⊕ Z(g) for Leibniz algebras."""
    print("🔍 TESTING LIE 2-ALGEBRA")
    print("-" * 50)

    # [x, x] = y is Leibniz but not Lie
    t = lie_2_algebra_from_leibniz(induced_leibniz(n2_dialgebra()))
    assert (t.dim0, t.dim1) == (2, 1)
    assert t.l2_00.is_zero()
    assert check_lie_2_algebra(t).passed
    print("✅ Induced Leibniz algebra of N2 gives a Lie 2-algebra")

    sl2 = sl2_lie()
    t = lie_2_algebra_from_leibniz(LeibnizAlgebra(3, sl2.bracket))
    assert t.dim1 == 0
    assert t.l3.is_zero()
    assert check_lie_2_algebra(t).passed
    print("✅ sl2 has trivial center and zero l3")

    t = lie_2_algebra_from_leibniz(hemisemidirect_leibniz())
    assert (t.dim0, t.dim1) == (4, 2)
    # l3(p′, p, q) = ¼[p′, [p, q]] = ¼q′
    assert t.l3.value(2, 0, 1) == (0, Fraction(1, 4))
    assert t.l3.value(0, 2, 1) == (0, Fraction(-1, 4))
    report = check_lie_2_algebra(t)
    assert report.passed, report.summary()
    print("✅ Identities hold with non-zero l3")


def test_lie_2_failures():
    """Test pinned failing Lie 2-algebras."""
    print("🔍 TESTING LIE 2-ALGEBRA FAILURES")
    print("-" * 50)

    # T3: [a, b] = c, Z = span{c}
    t = lie_2_algebra_from_leibniz(induced_leibniz(t3_dialgebra()))
    assert (t.dim0, t.dim1) == (3, 1)
    assert check_lie_2_algebra(t).passed

    constant = replace(t, l3=TrilinearMap.from_function(t.l3.shape, lambda i, j, k: (1,)))
    report = check_lie_2_algebra(constant)
    assert not report.passed
    assert report.first_violation.axiom == "l3-alternating"
    assert report.first_violation.indices == (0, 0, 0, 0)
    assert report.first_violation.lhs == (1,) and report.first_violation.rhs == (-1,)
    print(f"✅ Constant l3 is not alternating: {report.summary()}")

    def sign(i, j, k):
        if sorted((i, j, k)) != [0, 1, 2]:
            return (0,)
        return (1,) if (i, j, k) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)) else (-1,)

    alternating = replace(t, l3=TrilinearMap.from_function(t.l3.shape, sign))
    report = check_lie_2_algebra(alternating)
    assert "l3-alternating" not in report.failed_axioms()
    assert report.first_violation.axiom == "identity-iii"
    assert report.first_violation.indices == (0, 1, 2)
    assert report.first_violation.lhs == (0, 0, 0)
    assert report.first_violation.rhs == (0, 0, 1)
    print("✅ Alternating l3 off the Jacobiator fails identity (iii)")


def test_homotopy_pair():
    """Test both structures on P ⊕ J."""
    print("🔍 TESTING HOMOTOPY PAIR")
    print("-" * 50)

    assoc, lie = homotopy_pair_from_poisson_dialgebra(induced_poisson_dialgebra(n2_dialgebra()))
    assert (assoc.dim0, assoc.dim1) == (2, 1)
    assert (lie.dim0, lie.dim1) == (2, 1)
    assert check_associative_2_algebra(assoc).passed
    assert check_lie_2_algebra(lie).passed
    print("✅ N2 gives an associative and a Lie 2-algebra on P ⊕ J")

    assoc, lie = homotopy_pair_from_poisson_dialgebra(induced_poisson_dialgebra(scalar_module_dialgebra()))
    assert (assoc.dim0, assoc.dim1) == (2, 1)
    assert assoc.mu3.value(0, 0, 1) == (Fraction(1, 4),)
    assert check_associative_2_algebra(assoc).passed
    assert check_lie_2_algebra(lie).passed
    print("✅ Non-zero μ3 lands in J")


def test_homotopy_pair_on_generated():
    """Test the pair on 100 generated Poisson dialgebras."""
    print("🔍 TESTING HOMOTOPY PAIR ON GENERATED POISSON DIALGEBRAS")
    print("-" * 50)

    nontrivial = 0
    for seed in range(100):
        p = InstanceGenerator(seed, max_dim=4).poisson_dialgebra()
        assoc, lie = homotopy_pair_from_poisson_dialgebra(p)
        assert check_associative_2_algebra(assoc).passed, f"seed {seed}"
        assert check_lie_2_algebra(lie).passed, f"seed {seed}"
        if not (assoc.mu3.is_zero() and lie.l3.is_zero()):
            nontrivial += 1
    print(f"✅ 100 pairs built without guard failures ({nontrivial} with non-zero μ3 or l3)")


def test_homotopy_poisson():
    """Test reduced Poisson dialgebras."""
    print("🔍 TESTING HOMOTOPY POISSON")
    print("-" * 50)

    a = truncated_polynomial(2)
    p = PoissonAlgebra(2, a.product, BilinearMap.square_zeros(2)).as_poisson_dialgebra()
    assert check_reduced(p)
    h = homotopy_poisson_from_reduced(p)
    assert (h.lie.dim0, h.lie.dim1) == (2, 1)
    assert not h.has_unit
    assert check_homotopy_poisson(h).passed
    print("✅ span{t, t²} with zero bracket gives a 2-term homotopy Poisson algebra")

    h = homotopy_poisson_from_reduced(k2_pointwise_poisson().as_poisson_dialgebra())
    assert h.has_unit
    assert h.lie.dim1 == 0
    print("✅ Unital product flagged")

    n2 = induced_poisson_dialgebra(n2_dialgebra())
    assert not check_reduced(n2)
    try:
        homotopy_poisson_from_reduced(n2)
        assert False, "Expected the reduced guard"
    except GuardFailure as e:
        assert e.guard == "reduced"
    print("✅ Non-reduced input rejected")


def test_homotopy_poisson_failure():
    """Test a pinned product that breaks the l2 derivation law."""
    print("🔍 TESTING HOMOTOPY POISSON FAILURE")
    print("-" * 50)

    h = homotopy_poisson_from_reduced(sl2_lie().as_poisson_dialgebra())
    assert (h.lie.dim0, h.lie.dim1) == (3, 0)
    assert check_homotopy_poisson(h).passed

    # h·h = h is associative but l2(e, h·h) = −2e while μ(l2(e, h), h) + μ(h, l2(e, h)) = 0
    idempotent = replace(h, mu_00=BilinearMap.from_entries((3, 3, 3), [(0, 0, 0, 1)]))
    report = check_homotopy_poisson(idempotent)
    assert not report.passed
    assert report.failed_axioms()[0] == "l2-derivation"
    assert "graded-associative" not in report.failed_axioms()
    first = report.first_violation
    assert first.indices == (0, 0, 0, 1, 0, 0)
    assert first.lhs == (0, -2, 0) and first.rhs == (0, 0, 0)
    print(f"✅ Pinned failing structure: {report.summary()}")


def test_compatibility_report():
    """Test the exploratory residual report."""
    print("🔍 TESTING COMPATIBILITY RESIDUALS")
    print("-" * 50)

    report = explore_compatibility(induced_poisson_dialgebra(n2_dialgebra()))
    assert report.dim == 2 and report.j_dim == 1
    assert len(report.residuals) == 5
    assert report.residual("mu3-vs-l2").evaluated == 8
    assert report.residual("l3-derivation-of-mu2").evaluated == 16
    data = report.to_dict()
    assert data["j_dim"] == 1 and len(data["residuals"]) == 5
    print(f"✅ {report.summary()}")

    # Zero product: μ2 vanishes but the sl2 bracket does not
    report = explore_compatibility(sl2_lie().as_poisson_dialgebra())
    assert report.residual("l2-derivation-of-mu2-right").vanishes
    assert not report.residual("mu3-vs-l2").vanishes
    print("✅ sl2 separates the candidates")


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10_000))
def test_generated_two_term_structures(seed):
    """Generated dialgebras give associative and Lie 2-algebras."""
    d = InstanceGenerator(seed, max_dim=3).dialgebra()
    assert check_associative_2_algebra(associative_2_algebra_from_dialgebra(d)).passed
    assert check_lie_2_algebra(lie_2_algebra_from_leibniz(induced_leibniz(d))).passed


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10_000))
def test_generated_homotopy_poisson(seed):
    """Poisson algebras viewed as reduced Poisson dialgebras give homotopy Poisson algebras."""
    p = InstanceGenerator(seed, max_dim=3).poisson_algebra().as_poisson_dialgebra()
    assert check_reduced(p)
    assert check_homotopy_poisson(homotopy_poisson_from_reduced(p)).passed


def main():
    """Run all homotopy structure tests."""
    print("🧪 HOMOTOPY STRUCTURES TESTS")
    print("=" * 70)

    try:
        test_associative_2_algebra()
        test_lie_2_algebra()
        test_lie_2_failures()
        test_homotopy_pair()
        test_homotopy_pair_on_generated()
        test_homotopy_poisson()
        test_homotopy_poisson_failure()
        test_compatibility_report()
        print("🔍 TESTING GENERATED INSTANCES (hypothesis)")
        print("-" * 50)
        test_generated_two_term_structures()
        test_generated_homotopy_poisson()
        print("✅ Two-term structures valid on generated instances")

        print("\n🎉 ALL HOMOTOPY STRUCTURES TESTS PASSED!")
    except Exception as e:
        print(f"\n❌ Test failed: {e}")
        import traceback
        traceback.print_exc()
        sys.exit(1)


if __name__ == "__main__":
    main()
