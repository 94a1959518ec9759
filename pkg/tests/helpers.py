import numpy as np

from seqmerit import Sequence


def random_binary(rng, n):
    return Sequence.binary(rng.choice([-1, 1], size=n).tolist())


def random_roots(rng, n, m):
    k = rng.integers(0, m, size=n)
    return Sequence.roots(np.exp(2j * np.pi * k / m).tolist(), m)
