"""
Constructions Tests

This module tests the constructions on dialgebras and Poisson dialgebras including:
- Associativization and Poissonization of N2 (pinned quotients)
- The subspaces I, Z and J on N2 and T3
- Algebra objects in the category of linear maps and their round trip
- The adjoint factorizations at dialgebra and Poisson level
- Differential and averaging constructions, with their guards
- Property tests over generated instances (hypothesis)
"""

import sys
from dataclasses import replace
from pathlib import Path

# Fix Unicode encoding for Windows terminal
if sys.platform == "win32":
    sys.stdout.reconfigure(encoding='utf-8')
    sys.stderr.reconfigure(encoding='utf-8')

# Add the project root to the path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from hypothesis import given, settings, strategies as st

from algebra_core import (
    GuardFailure, InvalidStructureError, LinearOperator, StructureKind, check_associative, check_dialgebra,
    check_homomorphism, check_poisson_algebra, check_poisson_dialgebra,
)
from constructions import (
    InstanceGenerator, annihilator_J, associativization, check_adjoint_factorization, check_averaging,
    check_derivation, check_lm_object, check_poisson_adjoint_factorization, check_poisson_lm_object,
    dialgebra_from_lm_object, factor_through_quotient, first_coordinate_projection, ideal_I, induced_leibniz,
    induced_poisson_dialgebra, k2_pointwise_poisson, lm_object_from_dialgebra, n2_dialgebra,
    poisson_dialgebra_from_averaging, poisson_dialgebra_from_bimodule_map, poisson_dialgebra_from_differential,
    poisson_lm_object_from_poisson_dialgebra, poissonization, right_center, t3_dialgebra, truncated_derivation, truncated_polynomial,
)
from exact_linalg import Matrix, Subspace, quotient_data


def test_quotients_of_n2():
    """Test the pinned quotients of N2."""
    print("🔍 TESTING QUOTIENTS OF N2")
    print("-" * 50)

    d = n2_dialgebra()
    algebra, q = associativization(d)
    assert algebra.dim == 1
    assert algebra.product.is_zero()
    assert q.kernel.dim == 1 and q.kernel.contains((0, 1))
    assert q.projection == Matrix.from_rows([[1, 0]])
    assert check_homomorphism(q.projection, d, algebra.as_dialgebra(), StructureKind.DIALGEBRA).passed
    print("✅ N2_As is the 1-dim zero algebra with projection [[1, 0]]")

    p = induced_poisson_dialgebra(d)
    poisson, pq = poissonization(p)
    assert poisson.dim == 1
    assert poisson.product.is_zero() and poisson.bracket.is_zero()
    assert check_poisson_algebra(poisson.dim, poisson.product, poisson.bracket).passed
    assert check_homomorphism(pq.projection, p, poisson.as_poisson_dialgebra(),
                              StructureKind.POISSON_DIALGEBRA).passed
    print("✅ Poissonization of N2 is the 1-dim zero Poisson algebra")


def test_subspaces():
    """Test I, Z and J on fixtures."""
    print("🔍 TESTING I, Z AND J")
    print("-" * 50)

    for name, d, special in (("N2", n2_dialgebra(), (0, 1)), ("T3", t3_dialgebra(), (0, 0, 1))):
        p = induced_poisson_dialgebra(d)
        for label, space in (("I", ideal_I(d)), ("Z", right_center(induced_leibniz(d))), ("J", annihilator_J(p))):
            assert space.dim == 1, f"{name}: dim {label} = {space.dim}"
            assert space.contains(special), f"{name}: {label} misses the last basis vector"
        print(f"✅ {name}: I = Z = J = span of the last basis vector")


def test_lm_objects():
    """Test algebra objects in the category of linear maps."""
    print("🔍 TESTING LM OBJECTS")
    print("-" * 50)

    d = n2_dialgebra()
    o = lm_object_from_dialgebra(d)
    assert check_lm_object(o).passed
    assert o.downstairs.dim == 1 and o.upstairs_dim == 2
    back = dialgebra_from_lm_object(o)
    assert back.left == d.left and back.right == d.right
    print("✅ D → D_As is an LM object and gives back D")

    p = induced_poisson_dialgebra(d)
    po = poisson_lm_object_from_poisson_dialgebra(p)
    assert check_poisson_lm_object(po).passed
    back_p = poisson_dialgebra_from_bimodule_map(po)
    assert back_p == p
    print("✅ P → P_Poiss is a Poisson LM object and gives back P")


def test_adjoint_factorizations():
    """Test the factorization through the quotient functors."""
    print("🔍 TESTING ADJOINT FACTORIZATIONS")
    print("-" * 50)

    d = n2_dialgebra()
    phi, report = check_adjoint_factorization(d, lm_object_from_dialgebra(d), Matrix.identity(2))
    assert report.passed, report.summary()
    assert phi == Matrix.identity(1)
    print("✅ Identity on N2 factors as φ = id through N2_As")

    p = induced_poisson_dialgebra(d)
    phi, report = check_poisson_adjoint_factorization(p, poisson_lm_object_from_poisson_dialgebra(p),
                                                      Matrix.identity(2))
    assert report.passed, report.summary()
    assert phi == Matrix.identity(1)
    print("✅ Poisson-level factorization certified")

    swap = Matrix.from_rows([[0, 1], [1, 0]])
    try:
        check_adjoint_factorization(d, lm_object_from_dialgebra(d), swap)
        assert False, "Expected InvalidStructureError for a non-homomorphism"
    except InvalidStructureError as e:
        assert e.kind == "dialgebra-homomorphism"
    print("✅ Non-homomorphic φ′ rejected")

    # K² / span{e1} with g(a, b) = a + b: g does not kill the kernel
    q = quotient_data(2, Subspace.from_spanning(2, [(0, 1)]))
    phi, report = factor_through_quotient(q, Matrix.from_rows([[1, 1]]))
    assert not report.passed
    assert report.first_violation.axiom == "kernel-condition"
    assert report.first_violation.indices == (0,)
    assert report.first_violation.lhs == (1,) and report.first_violation.rhs == (0,)
    assert "uniqueness" not in report.failed_axioms()
    print("✅ Kernel condition reported when g does not vanish on ker p")

    broken = replace(q, section=Matrix.zeros(2, 1))
    phi, report = factor_through_quotient(broken, Matrix.from_rows([[1, 0]]))
    assert report.failed_axioms() == ["factorization", "uniqueness"]
    assert report.violations_for("uniqueness")[0].indices == (0,)
    assert report.violations_for("uniqueness")[0].lhs == (0,)
    print("✅ A section that does not split p fails uniqueness")


def test_adjoint_factorizations_on_generated():
    """Test the factorizations on 50 dialgebra and 20 Poisson dialgebra triples."""
    print("🔍 TESTING ADJOINT FACTORIZATIONS ON GENERATED TRIPLES")
    print("-" * 50)

    for seed in range(50):
        d = InstanceGenerator(seed, max_dim=4).dialgebra()
        algebra, _ = associativization(d)
        phi, report = check_adjoint_factorization(d, lm_object_from_dialgebra(d), Matrix.identity(d.dim))
        assert report.passed, f"seed {seed}: {report.summary()}"
        assert (phi.rows, phi.cols) == (algebra.dim, algebra.dim)
    print("✅ 50 dialgebra triples factor uniquely")

    for seed in range(20):
        p = InstanceGenerator(seed, max_dim=4).poisson_dialgebra()
        phi, report = check_poisson_adjoint_factorization(p, poisson_lm_object_from_poisson_dialgebra(p),
                                                          Matrix.identity(p.dim))
        assert report.passed, f"seed {seed}: {report.summary()}"
    print("✅ 20 Poisson dialgebra triples factor uniquely")


def test_operator_constructions():
    """Test the differential and averaging constructions."""
    print("🔍 TESTING OPERATOR CONSTRUCTIONS")
    print("-" * 50)

    a = truncated_polynomial(2)
    zero_bracket = a.product.scaled(0)
    d = truncated_derivation()
    assert check_derivation(2, a.product, zero_bracket, d).passed
    p = poisson_dialgebra_from_differential(2, a.product, zero_bracket, d)
    assert check_poisson_dialgebra(p).passed
    print("✅ d(t) = t² on span{t, t²} gives a Poisson dialgebra")

    try:
        poisson_dialgebra_from_differential(2, a.product, zero_bracket, LinearOperator.identity(2))
        assert False, "Expected the square-zero guard"
    except GuardFailure as e:
        assert e.guard == "differential-square-zero"
    print("✅ Square-zero guard fires for the identity")

    k2 = k2_pointwise_poisson()
    alpha = first_coordinate_projection()
    assert check_averaging(2, k2.product, k2.bracket, alpha).passed
    pa = poisson_dialgebra_from_averaging(2, k2.product, k2.bracket, alpha)
    assert check_poisson_dialgebra(pa).passed
    print("✅ Coordinate projection on K² is averaging")

    nilpotent = LinearOperator(2, Matrix.from_rows([[0, 1], [0, 0]]))
    report = check_averaging(2, k2.product, k2.bracket, nilpotent)
    assert not report.passed
    try:
        poisson_dialgebra_from_averaging(2, k2.product, k2.bracket, nilpotent)
        assert False, "Expected InvalidStructureError"
    except InvalidStructureError as e:
        assert e.kind == "averaging"
    print("✅ Non-averaging operator rejected")


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_associativization_on_generated(seed):
    """The associativization is associative and its projection a homomorphism."""
    d = InstanceGenerator(seed, max_dim=4).dialgebra()
    algebra, q = associativization(d)
    assert check_associative(algebra.dim, algebra.product).passed
    assert check_homomorphism(q.projection, d, algebra.as_dialgebra(), StructureKind.DIALGEBRA).passed


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_generated_poisson_dialgebras(seed):
    """Every family yields a Poisson dialgebra with a Poisson quotient."""
    p = InstanceGenerator(seed, max_dim=4).poisson_dialgebra()
    assert check_poisson_dialgebra(p).passed
    poisson, _ = poissonization(p)
    assert check_poisson_algebra(poisson.dim, poisson.product, poisson.bracket).passed


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000))
def test_lm_round_trip_on_generated(seed):
    """D → D_As gives back D for generated dialgebras."""
    d = InstanceGenerator(seed, max_dim=4).dialgebra()
    back = dialgebra_from_lm_object(lm_object_from_dialgebra(d))
    assert back.left == d.left and back.right == d.right
    assert check_dialgebra(back).passed


def main():
    """Run all construction tests."""
    print("🧪 CONSTRUCTIONS TESTS")
    print("=" * 70)

    try:
        test_quotients_of_n2()
        test_subspaces()
        test_lm_objects()
        test_adjoint_factorizations()
        test_adjoint_factorizations_on_generated()
        test_operator_constructions()
        print("🔍 TESTING GENERATED INSTANCES (hypothesis)")
        print("-" * 50)
        test_associativization_on_generated()
        test_generated_poisson_dialgebras()
        test_lm_round_trip_on_generated()
        print("✅ Quotients and LM round trips hold on generated instances")

        print("\n🎉 ALL CONSTRUCTIONS TESTS PASSED!")
    except Exception as e:
        print(f"\n❌ Test failed: {e}")
        import traceback
        traceback.print_exc()
        sys.exit(1)


if __name__ == "__main__":
    main()
