"""
This module defines the seeded random number source used by the
random graph generators.

"""

import random as _rnd


def rng(seed):
    """
    Creates a private, seeded random number generator

    The generator is Python's Mersenne Twister (MT19937), whose output
    for random() is fully determined by the integer seed on every
    platform. Each call returns an independent generator, so no global
    state is touched.

    Parameters
    ----------
    seed: int
        The seed

    Returns
    -------
    random.Random

    """
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise ValueError("Invalid seed. Must be an integer")
    return _rnd.Random(seed)


def bernoulli_trials(gen, p, count):
    """
    Draws a sequence of Bernoulli trials

    Each trial consumes exactly one random() draw, in order, so the
    outcome of trial k only depends on the seed and on k.

    Parameters
    ----------
    gen: random.Random
        The generator returned by rng()
    p: float
        The success probability in [0, 1]
    count: int
        The number of trials

    Returns
    -------
    generator
        A sequence of bool

    """
    if not 0 <= p <= 1:
        raise ValueError("Invalid probability. Must be in [0, 1]")
    for _ in range(count):
        yield gen.random() < p
