from fractions import Fraction

import pytest

from hulthen.model import PotentialSpec, QuantumNumbers

TWELFTH = Fraction(1, 12)


def exact_energy(state: str, delta: str, c0=Fraction(0), Z=Fraction(1)) -> Fraction:
    """Closed-form energy in exact rational arithmetic (atomic units)."""
    q = QuantumNumbers.parse(state)
    d = Fraction(delta)
    N = q.principal
    return Fraction(q.lam) * d * d * c0 / 2 - (N * d / 2 - Z / N) ** 2 / 2


@pytest.fixture
def au():
    def make(delta, c0=0.0, **kw):
        return PotentialSpec(delta=delta, c0=c0, **kw)

    return make
