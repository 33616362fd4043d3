import pytest

from solvcohom import (
    adjoint_representation,
    build_invariant_complex,
    infer_weights,
    sector_cohomology_full,
    trivial_representation,
    verify_quasi_iso,
)
from solvcohom.oracle import _alternating_evaluation
from solvcohom.scalars import MINUS_ONE, ONE, ZERO


def test_alternating_evaluation_signs():
    assert _alternating_evaluation((0, 1), (0, 1)) == 1
    assert _alternating_evaluation((0, 1), (1, 0)) == -1
    assert _alternating_evaluation((0, 1, 2), (2, 0, 1)) == 1
    assert _alternating_evaluation((0, 1, 2), (0, 2, 1)) == -1
    assert _alternating_evaluation((), ()) == 1


def test_alternating_evaluation_degeneracies():
    assert _alternating_evaluation((0, 1), (0, 0)) == 0
    assert _alternating_evaluation((0, 1), (0, 2)) == 0
    assert _alternating_evaluation((0,), (1,)) == 0


def test_full_sector_untwisted_heisenberg(heisenberg):
    rep = trivial_representation(heisenberg)
    result = sector_cohomology_full(heisenberg, rep, None)
    assert result.betti == (1, 2, 2, 1)
    zero = (ZERO for _ in heisenberg.complement)
    assert sector_cohomology_full(heisenberg, rep, tuple(zero)).betti == (
        1,
        2,
        2,
        1,
    )


def test_full_sector_twisted_split_3d(split_3d):
    rep = trivial_representation(split_3d)
    assert sector_cohomology_full(split_3d, rep, (ZERO,)).betti == (1, 1, 1, 1)
    # Nonzero tags still carry cohomology here: d is not injective on the
    # twisted complex of this algebra.
    assert sector_cohomology_full(split_3d, rep, (ONE,)).betti == (0, 1, 1, 0)
    assert sector_cohomology_full(split_3d, rep, (MINUS_ONE,)).betti == (
        0,
        1,
        1,
        0,
    )


def test_quasi_iso_split_3d(split_3d):
    rep = trivial_representation(split_3d)
    ic = build_invariant_complex(split_3d, rep, infer_weights(split_3d, rep))
    report = verify_quasi_iso(ic)
    assert report.ok
    by_tag = {s.tag: s for s in report.sectors}
    assert by_tag[(ZERO,)].block_betti == (1, 1, 1, 1)
    assert by_tag[(ONE,)].block_betti == (0, 1, 1, 0)
    assert by_tag[(MINUS_ONE,)].full_betti == (0, 1, 1, 0)
    assert len(report.summary_lines()) == 3
    assert all(line.endswith("[ok]") for line in report.summary_lines())


def test_quasi_iso_heisenberg(heisenberg):
    rep = trivial_representation(heisenberg)
    ic = build_invariant_complex(
        heisenberg, rep, infer_weights(heisenberg, rep)
    )
    report = verify_quasi_iso(ic)
    assert report.ok
    assert len(report.sectors) == 1
    assert report.sectors[0].block_betti == (1, 2, 2, 1)


@pytest.mark.slow
def test_quasi_iso_split_6d_adjoint(split_6d):
    rep = adjoint_representation(split_6d)
    ic = build_invariant_complex(split_6d, rep, infer_weights(split_6d, rep))
    report = verify_quasi_iso(ic)
    assert report.ok
    assert len(report.sectors) == 21
