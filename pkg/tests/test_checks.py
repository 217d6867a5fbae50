"""Certificates: associativity engines, skew symmetry, pairing, obstructions."""

import pytest

from orbisym import (
    builtin_algebra,
    check_associativity,
    check_inverse_obstruction,
    check_kummer_associativity,
    check_pairing,
    check_skew,
    ring_basis,
    symmetric_group,
)
from orbisym.frobenius import FrobeniusAlgebra
from orbisym.orbifold import pair_partition

import orbisym.checks as checks


def _edited_mock2(**overrides):
    data = builtin_algebra("mock2").to_json_dict()
    data.update(overrides)
    return FrobeniusAlgebra.from_json_dict(data)


def test_ring_basis_layout(s2, mock2):
    basis = ring_basis(s2, mock2)
    assert len(basis) == 6
    g0, key0 = basis[0]
    assert g0.is_identity()
    assert key0 == (0, 0)
    sectors = [g for g, _ in basis]
    assert sectors == sorted(sectors, key=s2.index)


def test_exhaustive_associativity_plain_engine(s2, mock2):
    cert = check_associativity(s2, mock2)
    assert cert.passed
    assert cert.mode == "exhaustive"
    assert cert.count == 216
    assert cert.detail == {"engine": "plain"}


def test_exhaustive_associativity_composed_engine(s2, mock2, monkeypatch):
    monkeypatch.setattr(checks, "PLAIN_TRIPLE_BOUND", 0)
    cert = check_associativity(s2, mock2)
    assert cert.passed
    assert cert.count == 216
    assert cert.detail == {"engine": "composed"}


def test_both_engines_reject_wrong_euler(s3, monkeypatch):
    # defects vanish at n = 2, so the Euler class first acts at n = 3
    bad = _edited_mock2(euler=["0/1", "24/1"])
    plain = check_associativity(s3, bad)
    assert not plain.passed
    assert plain.witness is not None
    monkeypatch.setattr(checks, "PLAIN_TRIPLE_BOUND", 0)
    composed = check_associativity(s3, bad)
    assert not composed.passed
    assert "sectors" in composed.witness


def test_signed_exhaustive(s3, mock2):
    cert = check_associativity(s3, mock2, signed=True)
    assert cert.passed
    assert cert.check == "associativity_signed"
    assert cert.count == 24**3


def test_sampled_mode_is_deterministic(s3, k3):
    one = check_associativity(s3, k3, mode="sampled", seed=5, samples=40)
    two = check_associativity(s3, k3, mode="sampled", seed=5, samples=40)
    assert one.to_json_dict() == two.to_json_dict()
    assert one.passed
    assert one.count == 40
    assert one.seed == 5


def test_exhaustive_refuses_large_rings(s2, k3):
    with pytest.raises(ValueError):
        check_associativity(s2, k3)


def test_unknown_mode_rejected(s2, mock2):
    with pytest.raises(ValueError):
        check_associativity(s2, mock2, mode="fuzzy")


def test_skew_commutativity(s3, mock2, abelian):
    for algebra in (mock2, abelian):
        cert = check_skew(s3, algebra, seed=0, pairs=60)
        assert cert.passed
        assert cert.count == 60
        assert cert.check == "skew_commutativity"


def test_pairing_certificates(s2, s3, mock2, abelian):
    cert = check_pairing(s3, mock2)
    assert cert.passed
    assert cert.count == 24
    assert check_pairing(s2, abelian).passed


def test_pairing_detects_degenerate_integral(s2):
    bad = _edited_mock2(integral=["0/1", "0/1"])
    cert = check_pairing(s2, bad)
    assert not cert.passed
    assert "zero_row" in cert.witness


def test_inverse_obstruction(s3, s4):
    for group in (s3, s4):
        cert = check_inverse_obstruction(group.n)
        assert cert.passed
        expected = sum(
            len(pair_partition(g, g.inverse()).blocks) for g in group.elements
        )
        assert cert.count == expected


def test_kummer_associativity_exhaustive_n2():
    cert = check_kummer_associativity(2)
    assert cert.passed
    assert cert.count == 512**3
    assert cert.detail == {"rank": 4}


def test_kummer_associativity_rank_scales_the_count():
    cert = check_kummer_associativity(2, rank=1)
    assert cert.passed
    # dim = sum over sectors of m(g)^rank * 16^(number of orbits)
    assert cert.count == (16**2 + 2 * 16) ** 3
