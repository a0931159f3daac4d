import random

import pytest

from coxlen.signedperm import SignedPermutation


@pytest.fixture
def rng():
    return random.Random(20240817)


def random_signed(rng: random.Random, n: int, signed: bool = True) -> SignedPermutation:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    if signed:
        perm = [-v if rng.random() < 0.5 else v for v in perm]
    return SignedPermutation(perm)
