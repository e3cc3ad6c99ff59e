"""Shared fixtures: the two closed-form wave families used across the suite."""

from fractions import Fraction

import pytest

from nbarrier import cos_family, tanh_family

# Worked three-species member with unit growth rates and unit self-limitation.
COS_ARGS = (Fraction(-1, 10), Fraction(1, 11), Fraction(1, 12), 2,
            1, 1, 1,
            Fraction(1067, 60), 1, Fraction(175, 11), Fraction(6, 11),
            15, Fraction(11, 12))


@pytest.fixture(scope="session")
def tanh_sol():
    return tanh_family(3, 4, 1, 2)


@pytest.fixture(scope="session")
def cos_sol():
    return cos_family(*[float(a) for a in COS_ARGS])


@pytest.fixture(scope="session")
def cos_sol_exact():
    return cos_family(*COS_ARGS)
