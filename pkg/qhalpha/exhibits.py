# -*- coding: utf-8 -*-
'''Two worked examples outside Gr(m, n): the two parameter family of
quantum deformations of the Lagrangian Grassmannian LG(2,4), and the
orbit of the full flag variety GL(n)/B under quantum multiplication by
the Schubert class of t = (n, 1, 2, ..., n-1).
'''

import itertools

from collections import namedtuple
from fractions import Fraction

from sympy.combinatorics import Permutation

from qhalpha import converters
from qhalpha.exceptions import InternalInconsistency, DomainError
from qhalpha.partitions import check_permutation
from qhalpha.utils import to_fraction

# Homogeneity of tau_1 tau_2 = tau_3 + (2a - b) q fixes deg(q) = 3
LG24_Q_DEGREE = 3
LG24_DEGREES = (0, 1, 2, 3)
LG24_PAIRS = ((1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3))

# q = 0 part of the table: [X^1]^2 = 2[X^2], [X^1][X^2] = [X^3]
LG24_CLASSICAL = {(1, 1): {(0, 2): Fraction(2)}, (1, 2): {(0, 3): Fraction(1)},
                  (1, 3): {}, (2, 2): {}, (2, 3): {}, (3, 3): {}}


def _clean(terms):
    return {key: value for key, value in terms.items() if value}


def lg24_format(terms):
    '''Render {(d, i): coeff} as "tau3 + q*tau0".
    '''
    ordered = sorted(_clean(terms).items())
    return converters.format_terms(ordered, lambda i: 'tau{}'.format(i))


class LGFamily(namedtuple('LGFamily', 'a b')):
    '''Quantum deformation of H*(LG(2,4)) with basis tau_0 = 1, tau_1,
    tau_2, tau_3. Elements are dicts {(d, i): coeff} standing for
    sum coeff q^d tau_i.
    '''
    __slots__ = ()

    def __new__(cls, a, b):
        return super(LGFamily, cls).__new__(cls, to_fraction(a), to_fraction(b))

    def table(self):
        '''The six products tau_i tau_j, i <= j, of positive degree labels.
        '''
        a, b = self.a, self.b
        table = {(1, 1): {(0, 2): Fraction(2)},
                 (1, 2): {(0, 3): Fraction(1), (1, 0): 2 * a - b},
                 (1, 3): {(1, 1): b},
                 (2, 2): {(1, 1): a},
                 (2, 3): {(1, 2): b},
                 (3, 3): {(1, 3): 2 * b - 2 * a, (2, 0): 2 * a * b - b * b}}
        for (i, j), terms in table.items():
            for d, label in terms:
                if d * LG24_Q_DEGREE + LG24_DEGREES[label] != i + j:
                    raise InternalInconsistency('tau{} tau{} is not homogeneous'.format(i, j))

        return {pair: _clean(terms) for pair, terms in table.items()}

    def basis_product(self, i, j):
        if i not in LG24_DEGREES or j not in LG24_DEGREES:
            raise DomainError('No basis element tau{} or tau{} in LG(2,4)'.format(i, j))
        if i == 0:
            return {(0, j): Fraction(1)}
        if j == 0:
            return {(0, i): Fraction(1)}
        return dict(self.table()[(min(i, j), max(i, j))])

    def multiply(self, x, y):
        '''Q[q]-bilinear product of two elements.
        '''
        result = {}
        for (d, i), u in x.items():
            for (e, j), v in y.items():
                for (f, label), w in self.basis_product(i, j).items():
                    key = (d + e + f, label)
                    result[key] = result.get(key, 0) + u * v * w

        return _clean(result)

    def is_nonnegative(self):
        '''Return (True, None) when every table coefficient is >= 0, else
        (False, (i, j, d, label, value)) for the first negative one.
        '''
        table = self.table()
        for pair in LG24_PAIRS:
            for (d, label), value in sorted(table[pair].items()):
                if value < 0:
                    return False, pair + (d, label, value)

        return True, None

    def is_associative(self):
        '''(tau_i tau_j) tau_l == tau_i (tau_j tau_l) for all 64 triples.
        '''
        for i, j, l in itertools.product(LG24_DEGREES, repeat=3):
            ti, tj, tl = {(0, i): 1}, {(0, j): 1}, {(0, l): 1}
            if self.multiply(self.multiply(ti, tj), tl) != self.multiply(ti, self.multiply(tj, tl)):
                return False

        return True

    def classical_reduction(self):
        '''The table at q = 0.
        '''
        return {pair: {key: value for key, value in terms.items() if key[0] == 0}
                for pair, terms in self.table().items()}


def lg24_table(a, b):
    return LGFamily(a, b).table()


def lg24_is_nonnegative(a, b):
    return LGFamily(a, b).is_nonnegative()


def lg24_associativity(a, b):
    return LGFamily(a, b).is_associative()


def lg24_classical_reduction(a, b):
    return LGFamily(a, b).classical_reduction()


def is_change_of_basis(a, b):
    '''True iff the deformation comes from a change of basis of the quantum
    ring QH(LG(2,4)), which happens exactly for a = 1 (tau_2^2 = a q tau_1
    has to match the geometric normalization). b is free.
    '''
    return to_fraction(a) == 1


def default_grid():
    '''41 rationals -2, -19/10, ..., 2.
    '''
    return [Fraction(i, 10) for i in range(-20, 21)]


def lg24_region_check(grid=None):
    '''Compare lg24_is_nonnegative with the closed condition a <= b <= 2a
    over grid x grid. Returns the (a, b) points where they disagree.
    '''
    grid = default_grid() if grid is None else [to_fraction(v) for v in grid]
    mismatches = []
    for a in grid:
        for b in grid:
            if lg24_is_nonnegative(a, b)[0] != (a <= b <= 2 * a):
                mismatches.append((a, b))

    return mismatches


FlagOrbitRow = namedtuple('FlagOrbitRow', 'r permutation length')


def seidel_generator(n):
    '''t = (n, 1, 2, ..., n-1) as a sympy Permutation of 0..n-1.
    '''
    return Permutation([n - 1] + list(range(n - 1)))


def flag_seidel_orbit(w, n):
    '''Rows (r, t^r o w, inversions) for r = 0..n-1, with
    (u o w)(i) = u(w(i)).
    '''
    w = check_permutation(w)
    if len(w) != n:
        raise DomainError('{} is not a permutation of 1..{}'.format(w, n))
    t = seidel_generator(n)
    if not (t ** n).is_Identity:
        raise InternalInconsistency('t does not have order {}'.format(n))

    base = Permutation([v - 1 for v in w])
    rows = []
    for r in range(n):
        # sympy composes left to right: (p * q)(i) = q(p(i))
        shifted = base * t ** r
        rows.append(FlagOrbitRow(r, tuple(v + 1 for v in shifted.array_form),
                                 shifted.inversions()))

    return rows


def flag_orbit_length_sum(w, n):
    return sum(row.length for row in flag_seidel_orbit(w, n))
