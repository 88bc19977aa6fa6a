"""Brute-force closure, witnesses, and the single-extension scan."""

import pytest

from conftest import all_vectors
from parity_forge.closure import (
    BACKEND,
    closure,
    closure_count,
    is_universal,
    pure_python_kernel,
    single_extension_scan,
    witness_sequence,
)
from parity_forge.errors import InvalidInputError, NotFoundError, ResourceLimitError
from parity_forge.parity_sets import (
    ParitySet,
    build_generating_set,
    chain_subset,
    minimal_parity,
    pairs_parity,
)
from parity_forge.pauli import PauliVector, evaluate_sequence


def single_qubit_gens(n):
    return [PauliVector.x(n, j) for j in range(1, n + 1)] + [
        PauliVector.z(n, j) for j in range(1, n + 1)
    ]


class TestClosure:
    def test_single_qubit_set_alone(self):
        result = closure(single_qubit_gens(2))
        assert result.size == 6
        assert not result.universal
        # single-qubit generators never entangle: no weight-2 vectors
        assert all(v.weight() == 1 for v in result.vectors())

    def test_single_parity_extension_is_universal(self):
        gens = single_qubit_gens(2) + [PauliVector.z_set(2, {1, 2})]
        result = closure(gens)
        assert result.size == 15
        assert result.universal

    def test_lone_generator(self):
        result = closure([PauliVector.x(3, 1)])
        assert result.size == 1
        assert result.reachable == {PauliVector.x(3, 1)}

    def test_zero_generators_are_skipped(self):
        result = closure([PauliVector.zero(2), PauliVector.x(2, 1)])
        assert result.size == 1

    def test_contains(self):
        result = closure(single_qubit_gens(2))
        assert PauliVector.x(2, 1) in result
        assert PauliVector.z_set(2, {1, 2}) not in result

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            closure(single_qubit_gens(11))

    def test_idempotence(self):
        for p in (minimal_parity(3), pairs_parity(2)):
            first = closure(build_generating_set(p).all)
            again = closure(sorted(first.vectors(), key=lambda v: v.packed))
            assert again.reachable == first.reachable

    def test_closure_count_matches(self):
        gens = build_generating_set(minimal_parity(4)).all
        assert closure_count(gens) == closure(gens).size


class TestUniversality:
    @pytest.mark.parametrize("n,expected", [(2, True), (3, True), (4, True), (5, True), (6, True)])
    def test_minimal_families(self, n, expected):
        assert is_universal(minimal_parity(n)) is expected

    def test_partial_cover_is_not_universal(self):
        assert not is_universal(ParitySet(4, [{1, 2}]))

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_chain_condition_implies_universal(self, n):
        for p in (minimal_parity(n), chain_subset(pairs_parity(n))):
            assert check_ok(p)
            assert is_universal(p)

    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_full_z_string_closure_exact(self, n):
        gens = single_qubit_gens(n) + [PauliVector.z_set(n, range(1, n + 1))]
        assert closure(gens).size == (1 << (2 * n)) - 1

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_removing_any_parity_set_breaks_universality(self, n):
        p = minimal_parity(n)
        assert is_universal(p)
        for drop in range(p.k):
            rest = [s for i, s in enumerate(p.sets) if i != drop]
            if rest:
                assert not is_universal(ParitySet(n, rest))
            else:
                assert not closure(single_qubit_gens(n)).universal


def check_ok(p):
    from parity_forge.parity_sets import check_chain_condition

    return check_chain_condition(p).ok


class TestWitness:
    def test_generator_target(self):
        gens = single_qubit_gens(2)
        result = closure(gens)
        seq = witness_sequence(result, PauliVector.x(2, 1))
        assert seq == [PauliVector.x(2, 1)]

    def test_two_step_target(self):
        result = closure(single_qubit_gens(1))
        target = PauliVector(1, 1, 1)
        seq = witness_sequence(result, target)
        assert len(seq) == 2
        assert set(seq) == {PauliVector.x(1, 1), PauliVector.z(1, 1)}
        assert evaluate_sequence(seq) == target

    @pytest.mark.parametrize("n", [2, 3])
    def test_all_witnesses_sound(self, n):
        result = closure(build_generating_set(minimal_parity(n)).all)
        assert result.universal
        for target in all_vectors(n):
            assert evaluate_sequence(witness_sequence(result, target)) == target

    def test_witnesses_sound_n4(self):
        result = closure(build_generating_set(minimal_parity(4)).all)
        for target in all_vectors(4):
            assert evaluate_sequence(witness_sequence(result, target)) == target

    def test_unreachable_target(self):
        result = closure(single_qubit_gens(2))
        with pytest.raises(NotFoundError):
            witness_sequence(result, PauliVector.z_set(2, {1, 2}))


class TestSingleExtensionScan:
    def test_n3_all_fail(self):
        out = single_extension_scan(3)
        assert out["all_fail"] is True
        assert 0 < out["max_closure"] < 63

    def test_n5_all_fail(self):
        out = single_extension_scan(5)
        assert out["all_fail"] is True
        assert out["max_closure"] < 1023

    def test_even_n_rejected(self):
        with pytest.raises(InvalidInputError):
            single_extension_scan(4)

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            single_extension_scan(9)

    @pytest.mark.parametrize("n", [3, 5])
    def test_full_weight_candidates_reach_only_odd_weight(self, n):
        # the impossibility argument for full-weight extensions
        full = (1 << n) - 1
        candidates = [
            v for v in all_vectors(n) if v.weight() == n
        ]
        assert len(candidates) == 3**n
        sample = candidates if n == 3 else candidates[:: max(1, len(candidates) // 40)]
        for cand in sample:
            result = closure(single_qubit_gens(n) + [cand])
            assert not result.universal
            assert all(v.weight() % 2 == 1 for v in result.vectors())

    @pytest.mark.parametrize("n", [3, 5])
    def test_partial_weight_candidates_miss_specific_element(self, n):
        # for wt(v) < n one explicit two-qubit element is unreachable
        for cand in all_vectors(n):
            if cand.weight() >= n:
                continue
            j = min(set(range(1, n + 1)) - cand.support())
            if cand.x_support():
                i = min(cand.x_support())
                blocked = PauliVector.x_set(n, {i, j})
            else:
                i = min(cand.z_support())
                blocked = PauliVector(
                    n, PauliVector.x(n, j).x_bits, PauliVector.z(n, i).z_bits
                )
            result = closure(single_qubit_gens(n) + [cand])
            assert blocked not in result


class TestBackends:
    def test_backend_is_known(self):
        assert BACKEND in ("cython", "python")

    @pytest.mark.parametrize("n", [2, 3])
    def test_pure_python_agrees_on_closure(self, n):
        gens = [g.packed for g in build_generating_set(minimal_parity(n)).all]
        py = pure_python_kernel()
        order_py, pg_py, _ = py.closure_reach(n, gens)
        result = closure(build_generating_set(minimal_parity(n)).all)
        assert len(order_py) == result.size
        assert set(order_py) == {v.packed for v in result.vectors()}

    def test_pure_python_agrees_on_scan(self):
        py = pure_python_kernel()
        assert py.scan_single_extensions(3) == (
            single_extension_scan(3)["all_fail"],
            single_extension_scan(3)["max_closure"],
        )
