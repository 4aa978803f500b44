"""Finite fields, fiber counts, traces, bounds, group action, towers."""

import random
from itertools import product

import pytest

from dworklab.characters import WeightVector, classical_weight
from dworklab.counting import (
    BudgetError,
    CapabilityError,
    CharacteristicError,
    FiberSpec,
    SmoothnessError,
    candidate_count,
    count_projective_fast,
    count_projective_naive,
    enumerate_points,
    field_make,
    group_action_check,
    group_elements,
    is_prime,
    middle_trace,
    tower_counts,
    weil_bound_ok,
)

W5 = classical_weight(5)


def brute_count(spec):
    """Reference count with plain field scalar arithmetic, no tables."""
    f, n = spec.field, spec.N
    weights = spec.weight.entries
    c = f.mul(n % f.p, spec.t)
    total = 0
    for lead in range(n):
        for tail in product(range(f.q), repeat=n - 1 - lead):
            x = (0,) * lead + (1,) + tail
            lhs = 0
            for xi in x:
                lhs = f.add(lhs, f.pow(xi, n))
            rhs = c
            for xi, w in zip(x, weights):
                if w:
                    rhs = f.mul(rhs, f.pow(xi, w))
            total += lhs == rhs
    return total


class TestPrimality:
    def test_small(self):
        assert [p for p in range(2, 40) if is_prime(p)] == [
            2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37,
        ]

    def test_larger(self):
        assert is_prime(10**9 + 7)
        assert not is_prime(10**9 + 8)
        assert not is_prime(1)


class TestFieldMake:
    def test_prime_field(self):
        f = field_make(11, 1)
        assert (f.p, f.m, f.q) == (11, 1, 11)
        assert f.modulus == (0, 1)

    def test_gf9_modulus(self):
        # oracle: scan monic quadratics over F_3 for the first with no root
        expected = None
        for c0, c1 in product(range(3), repeat=2):
            if all((x * x + c1 * x + c0) % 3 for x in range(3)):
                expected = (c0, c1, 1)
                break
        f = field_make(3, 2)
        assert f.modulus == expected == (1, 0, 1)

    def test_composite_rejected(self):
        with pytest.raises(ValueError):
            field_make(10, 1)

    def test_bad_degree(self):
        with pytest.raises(ValueError):
            field_make(7, 0)

    def test_modulus_is_irreducible(self):
        # no roots, and for degree 2 rootlessness is irreducibility
        for p, m in [(3, 2), (5, 2), (7, 2), (11, 2), (2, 3), (3, 3)]:
            f = field_make(p, m)
            coeffs = f.modulus
            for x in range(p):
                val = sum(c * x**i for i, c in enumerate(coeffs)) % p
                assert val != 0, (p, m, x)

    @pytest.mark.parametrize("p,m", [(2, 4), (3, 2), (5, 3), (11, 2)])
    def test_arithmetic_axioms_sampled(self, p, m):
        f = field_make(p, m)
        rng = random.Random(p * 100 + m)
        for _ in range(40):
            a, b, c = (rng.randrange(f.q) for _ in range(3))
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
            if a:
                assert f.mul(a, f.inv(a)) == 1
            assert f.add(a, f.neg(a)) == 0
            assert f.pow(a, f.q) == a  # Frobenius iterate is the identity

    def test_generator_order(self):
        for p, m in [(11, 1), (3, 2), (7, 2)]:
            f = field_make(p, m)
            g = f.generator()
            seen = set()
            x = 1
            for _ in range(f.q - 1):
                seen.add(x)
                x = f.mul(x, g)
            assert x == 1 and len(seen) == f.q - 1


class TestFiberSpec:
    def test_all_roots_rejected_when_q_splits(self):
        f = field_make(11, 1)
        roots = [t for t in range(11) if pow(t, 5, 11) == 1]
        assert roots == [1, 3, 4, 5, 9]
        for t in roots:
            with pytest.raises(SmoothnessError):
                FiberSpec(5, W5, t, f)

    def test_t_one_always_rejected(self):
        for p in (7, 13, 23):
            with pytest.raises(SmoothnessError):
                FiberSpec(5, W5, 1, field_make(p, 1))

    def test_characteristic_guard(self):
        with pytest.raises(CharacteristicError):
            FiberSpec(5, W5, 2, field_make(5, 1))
        with pytest.raises(CharacteristicError):
            FiberSpec(4, classical_weight(4), 3, field_make(2, 3))

    def test_bad_reduction_note(self):
        assert FiberSpec(5, W5, 2, field_make(3, 1)).notes
        assert not FiberSpec(5, W5, 2, field_make(11, 1)).notes

    def test_candidate_count(self):
        assert candidate_count(11, 5) == 16105  # size of P^4(F_11)


class TestNaiveCounter:
    def test_against_scalar_brute_force(self):
        spec = FiberSpec(5, W5, 0, field_make(11, 1))
        assert count_projective_naive(spec).projective_count == brute_count(spec)

    def test_matches_point_enumeration(self):
        spec = FiberSpec(5, W5, 2, field_make(11, 1))
        assert count_projective_naive(spec).projective_count == len(enumerate_points(spec))

    def test_affine_cone_consistency(self):
        # (affine cone count - 1) / (q - 1) = projective count
        spec = FiberSpec(5, W5, 2, field_make(7, 1))
        f = spec.field
        c = f.mul(5 % 7, spec.t)
        affine = 0
        for x in product(range(7), repeat=5):
            lhs = 0
            for xi in x:
                lhs = f.add(lhs, f.pow(xi, 5))
            rhs = c
            for xi in x:
                rhs = f.mul(rhs, xi)
            affine += lhs == rhs
        cone_without_origin = affine - 1
        assert cone_without_origin % (7 - 1) == 0
        assert cone_without_origin // 6 == count_projective_naive(spec).projective_count

    def test_general_weight_and_extension(self):
        w4 = WeightVector(4, (2, 2, 0, 0))
        for field in (field_make(7, 1), field_make(7, 2), field_make(3, 2)):
            t = next(t for t in range(field.q) if field.pow(t, 4) != 1)
            spec = FiberSpec(4, w4, t, field)
            assert count_projective_naive(spec).projective_count == brute_count(spec)

    def test_workers_deterministic(self):
        spec = FiberSpec(5, W5, 7, field_make(31, 1))
        counts = {count_projective_naive(spec, workers=k).projective_count for k in (1, 2, 5)}
        assert len(counts) == 1

    def test_budget_refusal_carries_estimate(self):
        spec = FiberSpec(5, W5, 2, field_make(101, 1))
        with pytest.raises(BudgetError) as err:
            count_projective_naive(spec, budget=10_000)
        assert err.value.required == candidate_count(101, 5)

    def test_even_n_has_no_trace(self):
        spec = FiberSpec(4, classical_weight(4), 3, field_make(7, 1))
        fc = count_projective_naive(spec)
        assert fc.trace is None and fc.projective_count >= 0


class TestFastCounter:
    @pytest.mark.parametrize("q", [11, 31])
    def test_agreement_exhaustive(self, q):
        f = field_make(q, 1)
        for t in range(q):
            if pow(t, 5, q) == 1:
                continue
            spec = FiberSpec(5, W5, t, f)
            naive = count_projective_naive(spec)
            fast = count_projective_fast(spec)
            assert naive.projective_count == fast.projective_count, t
            assert naive.trace == fast.trace

    def test_requires_classical(self):
        spec = FiberSpec(4, WeightVector(4, (2, 2, 0, 0)), 3, field_make(7, 1))
        with pytest.raises(CapabilityError):
            count_projective_fast(spec)

    def test_requires_prime_field(self):
        spec = FiberSpec(5, W5, 2, field_make(3, 2))
        with pytest.raises(CapabilityError):
            count_projective_fast(spec)

    def test_nth_power_table_spot_value(self):
        # r(0) = 1: only x = 0 has x^5 = 0
        q = 11
        r = [sum(1 for x in range(q) if pow(x, 5, q) == a) for a in range(q)]
        assert r[0] == 1


class TestTraceAndBounds:
    def test_zero_trace_identity(self):
        q = 11
        assert middle_trace(1 + q + q**2 + q**3, q, 5) == 0

    def test_counter_trace(self):
        spec = FiberSpec(5, W5, 2, field_make(11, 1))
        fc = count_projective_naive(spec)
        assert fc.trace == middle_trace(fc.projective_count, 11, 5)
        assert fc.projective_count + fc.trace == 1 + 11 + 121 + 1331

    def test_even_dimension_rejected(self):
        with pytest.raises(CapabilityError):
            middle_trace(100, 7, 4)

    def test_weil_bound(self):
        # the bound 204 * q^(3/2) is irrational for q = 11; the check must
        # compare squares exactly, so the integer boundary is isqrt(204^2 * 11^3)
        import math

        limit = math.isqrt(204**2 * 11**3)
        assert weil_bound_ok(0, 11, 5)
        assert weil_bound_ok(limit, 11, 5)
        assert not weil_bound_ok(limit + 1, 11, 5)
        assert weil_bound_ok(-limit, 11, 5)

    def test_bounds_over_smooth_fibers(self):
        f = field_make(11, 1)
        for t in range(11):
            if pow(t, 5, 11) == 1:
                continue
            fc = count_projective_naive(FiberSpec(5, W5, t, f))
            assert weil_bound_ok(fc.trace, 11, 5)


class TestGroupAction:
    def setup_method(self):
        self.field = field_make(11, 1)
        self.spec = FiberSpec(5, W5, 2, self.field)

    def test_identity(self):
        assert group_action_check(self.spec, (1, 1, 1, 1, 1))

    def test_paired_roots(self):
        z = self.field.pow(self.field.generator(), 2)
        assert self.field.pow(z, 5) == 1 and z != 1
        assert group_action_check(self.spec, (z, self.field.inv(z), 1, 1, 1))

    def test_weight_relation_enforced(self):
        z = self.field.pow(self.field.generator(), 2)
        with pytest.raises(ValueError):
            group_action_check(self.spec, (z, 1, 1, 1, 1))

    def test_non_root_entry_rejected(self):
        with pytest.raises(ValueError):
            group_action_check(self.spec, (2, self.field.inv(2), 1, 1, 1))

    def test_requires_split_field(self):
        spec = FiberSpec(5, W5, 2, field_make(13, 1))
        with pytest.raises(CharacteristicError):
            group_action_check(spec, (1, 1, 1, 1, 1))

    def test_group_size(self):
        gammas = group_elements(W5, self.field)
        assert len(gammas) == 125
        assert gammas[0] == (1, 1, 1, 1, 1)
        for g in gammas:
            prod = 1
            for gi in g:
                prod = self.field.mul(prod, gi)
            assert prod == 1

    def test_sampled_check(self):
        z = self.field.pow(self.field.generator(), 2)
        gamma = (z, z, z, self.field.inv(z), self.field.mul(self.field.inv(z), self.field.inv(z)))
        assert group_action_check(self.spec, gamma, sample_size=50)


class TestTower:
    def test_single_level_equals_naive(self):
        spec = FiberSpec(5, W5, 2, field_make(3, 1))
        tower = tower_counts(spec, 1)
        assert len(tower) == 1
        assert tower[0].projective_count == count_projective_naive(spec).projective_count

    def test_two_levels(self):
        spec = FiberSpec(5, W5, 2, field_make(3, 1))
        tower = tower_counts(spec, 2)
        assert [fc.spec.field.q for fc in tower] == [3, 9]
        for fc in tower:
            q = fc.spec.field.q
            assert fc.projective_count + fc.trace == sum(q**j for j in range(4))
            assert weil_bound_ok(fc.trace, q, 5)
        # level-2 count against scalar brute force
        assert tower[1].projective_count == brute_count(tower[1].spec)

    def test_budget_refusal(self):
        spec = FiberSpec(5, W5, 2, field_make(11, 1))
        with pytest.raises(BudgetError) as err:
            tower_counts(spec, 50)
        assert err.value.required > err.value.budget

    def test_extension_parameter_rejected(self):
        f9 = field_make(3, 2)
        spec = FiberSpec(5, W5, 5, f9)  # t = 5 encodes x + 2, outside F_3
        with pytest.raises(CapabilityError):
            tower_counts(spec, 2)
