# -*- coding: utf-8 -*-
# Small exact-arithmetic helpers shared by the qhalpha modules. Nothing in
# here may touch floating point.

import logging
import itertools

from fractions import Fraction
from functools import lru_cache

import sympy
from sympy.combinatorics import Permutation

from qhalpha.exceptions import DomainError

LOG_LEVELS = (logging.ERROR, logging.WARN, logging.INFO, logging.DEBUG)


def get_logger(name):
    '''Return a logger set up the way the qhalpha classes expect. A Jupyter
    Notebook defines a root logger; use that if it exists.
    '''
    if logging.getLogger().handlers:
        return logging.getLogger()

    logger = logging.getLogger(name)
    if not logger.handlers:
        handler = logging.StreamHandler()
        formatter = logging.Formatter('%(levelname)s %(asctime)s %(filename)s '
                                      '%(funcName)s():%(lineno)d %(message)s')
        handler.setFormatter(formatter)
        logger.addHandler(handler)
        logger.propagate = False
        logger.setLevel(LOG_LEVELS[0])

    return logger


def to_fraction(value):
    '''Coerce int, Fraction, sympy Rational or a sympy ground-domain rational
    (PythonMPQ / gmpy2 mpq) to a Fraction. Floats are refused.
    '''
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise DomainError('Refusing inexact value {!r}'.format(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ValueError:
            raise DomainError('Not a rational: {!r}'.format(value))
    if hasattr(value, 'p') and hasattr(value, 'q'):
        return Fraction(int(value.p), int(value.q))
    try:
        return Fraction(int(value.numerator), int(value.denominator))
    except (AttributeError, TypeError, ValueError):
        raise DomainError('Not a rational: {!r}'.format(value))


def to_sympy_rational(value):
    '''Fraction (or anything to_fraction accepts) as a sympy Rational.
    '''
    fr = to_fraction(value)
    return sympy.Rational(fr.numerator, fr.denominator)


@lru_cache(maxsize=None)
def signed_permutations(size):
    '''Return tuple of (sign, perm) for every permutation of range(size);
    the terms of a Leibniz determinant expansion.
    '''
    perms = []
    for perm in itertools.permutations(range(size)):
        perms.append((Permutation(list(perm)).signature() if perm else 1, perm))

    return tuple(perms)


def leibniz(size, entry, one, zero):
    '''Determinant of the size x size matrix with entries entry(i, j) by
    permutation expansion. The entries only need to support * and +, so
    this serves rationals and sympy polynomials alike. entry() returning
    None marks a structural zero and drops the term early.
    '''
    total = zero
    for sign, perm in signed_permutations(size):
        term = one
        for i, j in enumerate(perm):
            value = entry(i, j)
            if value is None:
                break
            term = term * value
        else:
            total = total + term if sign > 0 else total - term

    return total
