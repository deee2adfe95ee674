# -*- coding: utf-8 -*-
# Young diagram combinatorics for partitions that live inside an m x k
# rectangle. Boxes are (row, column) pairs numbered from 1, rows top to
# bottom, columns left to right.

import itertools

from collections import namedtuple

from qhalpha.exceptions import (InvalidPartition, OutOfBox, InvalidPermutation,
                                DomainError)

EACH_COLUMN = 'each-column'
EACH_ROW = 'each-row'


class Partition(tuple):
    '''Weakly decreasing tuple of positive integers. Trailing zeros are
    stripped on construction so (2, 1, 0) == Partition((2, 1)). Tuple
    comparison on two partitions is the lexicographic order.
    '''

    def __new__(cls, parts=()):
        try:
            parts = [int(p) for p in parts]
        except (TypeError, ValueError):
            raise InvalidPartition('Parts must be integers: {!r}'.format(parts))
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p < 1:
                raise InvalidPartition('Negative part in {!r}'.format(parts))
            if i and parts[i - 1] < p:
                raise InvalidPartition('Parts not weakly decreasing: '
                                       '{!r}'.format(parts))

        return super(Partition, cls).__new__(cls, parts)

    def part(self, i):
        '''1-based part lookup; parts beyond the length read as 0.
        '''
        if 1 <= i <= len(self):
            return tuple.__getitem__(self, i - 1)
        return 0

    @property
    def weight(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def padded(self, rows):
        return tuple(self.part(i) for i in range(1, rows + 1))

    def __repr__(self):
        return 'Partition({})'.format(tuple(self))

    def __str__(self):
        if not self:
            return u'∅'
        return ','.join(str(p) for p in self)


EMPTY = Partition()


class BoxBound(namedtuple('BoxBound', 'm k')):
    '''The m x k rectangle (k^m).
    '''
    __slots__ = ()

    def __new__(cls, m, k):
        if int(m) < 1 or int(k) < 1:
            raise DomainError('Box bounds must be positive, got {}x{}'.format(m, k))
        return super(BoxBound, cls).__new__(cls, int(m), int(k))

    @property
    def n(self):
        return self.m + self.k

    def contains(self, lam):
        return lam.length <= self.m and lam.part(1) <= self.k

    def check(self, lam):
        '''Return lam as a Partition, raising OutOfBox if it does not fit.
        '''
        lam = Partition(lam)
        if not self.contains(lam):
            raise OutOfBox('{} is not inside {}x{}'.format(lam, self.m, self.k))
        return lam

    def full(self):
        return Partition((self.k,) * self.m)

    def transpose(self):
        return BoxBound(self.k, self.m)


def conjugate(lam):
    '''Mirror lam in the diagonal: lam'_j = #{i : lam_i >= j}.
    '''
    lam = Partition(lam)
    return Partition(sum(1 for p in lam if p >= j)
                     for j in range(1, lam.part(1) + 1))


def contains(lam, mu):
    '''True if mu is contained in lam.
    '''
    lam, mu = Partition(lam), Partition(mu)
    return all(mu.part(i) <= lam.part(i) for i in range(1, mu.length + 1))


def partitions_in_box(box):
    '''All partitions inside box, ascending in the degree-lexicographic order.
    '''
    found = []
    for parts in itertools.product(range(box.k + 1), repeat=box.m):
        if all(parts[i] >= parts[i + 1] for i in range(box.m - 1)):
            found.append(Partition(parts))

    return sorted(found, key=deg_lex_key)


def add_vertical_strips(lam, p, rows):
    '''Set of partitions mu with at most `rows` rows obtained by adding p
    boxes to lam, no two in the same row.
    '''
    lam = Partition(lam)
    if p < 0:
        raise DomainError('Strip size must be non-negative, got {}'.format(p))
    found = set()
    if lam.length > rows:
        return found
    for chosen in itertools.combinations(range(1, rows + 1), p):
        parts = [lam.part(i) + (1 if i in chosen else 0) for i in range(1, rows + 1)]
        if all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)):
            found.add(Partition(parts))

    return found


def add_horizontal_strips(lam, p, box):
    '''Set of partitions mu inside box obtained by adding p boxes to lam,
    no two in the same column. These are the mu interlacing lam:
    lam_i <= mu_i <= lam_{i-1}.
    '''
    lam = box.check(lam)
    if p < 0:
        raise DomainError('Strip size must be non-negative, got {}'.format(p))
    ranges = []
    for i in range(1, box.m + 1):
        upper = box.k if i == 1 else lam.part(i - 1)
        ranges.append(range(lam.part(i), upper + 1))

    found = set()
    for parts in itertools.product(*ranges):
        if sum(parts) - lam.weight == p:
            found.add(Partition(parts))

    return found


def outer_rim(lam):
    '''Boxes (i, j) of lam with lam_{i+1} <= j <= lam_i.
    '''
    lam = Partition(lam)
    if not lam:
        raise InvalidPartition('The empty partition has no outer rim')

    return {(i, j) for i in range(1, lam.length + 1)
                   for j in range(max(1, lam.part(i + 1)), lam.part(i) + 1)}


def rim_removals(lam, boxes_to_remove, mode):
    '''Set of partitions left after deleting `boxes_to_remove` boxes of the
    outer rim of lam, such that every column of lam (mode EACH_COLUMN) or
    every non-empty row of lam (mode EACH_ROW) loses at least one box.
    Removals that do not leave a partition shape are discarded.
    '''
    lam = Partition(lam)
    if mode not in (EACH_COLUMN, EACH_ROW):
        raise DomainError('Unknown rim removal mode {!r}'.format(mode))
    rim = sorted(outer_rim(lam))
    found = set()
    if boxes_to_remove < 0 or boxes_to_remove > len(rim):
        return found

    for removed in itertools.combinations(rim, boxes_to_remove):
        if mode == EACH_COLUMN:
            covered = {j for _, j in removed}
            if len(covered) < lam.part(1):
                continue
        else:
            covered = {i for i, _ in removed}
            if len(covered) < lam.length:
                continue

        per_row = {}
        for i, j in removed:
            per_row.setdefault(i, []).append(j)
        parts = []
        for i in range(1, lam.length + 1):
            cols = sorted(per_row.get(i, []))
            keep = lam.part(i) - len(cols)
            # Removed boxes must be the rightmost ones of the row
            if cols != list(range(keep + 1, lam.part(i) + 1)):
                break
            parts.append(keep)
        else:
            if all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)):
                found.add(Partition(parts))

    return found


def deg_lex_key(lam):
    '''Sort key for the degree-lexicographic order.
    '''
    lam = Partition(lam)
    return (lam.weight, tuple(lam))


def deg_lex_compare(mu, lam):
    '''Return -1, 0 or 1 as mu is smaller than, equal to or larger than lam
    in the degree-lexicographic order.
    '''
    a, b = deg_lex_key(mu), deg_lex_key(lam)
    return (a > b) - (a < b)


def dual_partition(nu, box):
    '''(k - nu_m, ..., k - nu_1), the complement of nu in the box.
    '''
    nu = box.check(nu)
    return Partition(box.k - nu.part(i) for i in range(box.m, 0, -1))


def remove_first_column(lam):
    lam = Partition(lam)
    return Partition(p - 1 for p in lam)


def check_permutation(w):
    w = tuple(int(v) for v in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise InvalidPermutation('{} is not a permutation of 1..{}'.format(w, len(w)))
    return w


def perm_to_partition(w, m):
    '''Partition (w_m - m, ..., w_2 - 2, w_1 - 1) of a permutation with its
    only descent at position m.
    '''
    w = check_permutation(w)
    if not 0 <= m <= len(w):
        raise InvalidPermutation('Descent position {} outside 0..{}'.format(m, len(w)))
    for i in range(len(w) - 1):
        if i + 1 != m and w[i] > w[i + 1]:
            raise InvalidPermutation('{} has a descent at position {}, '
                                     'expected only at {}'.format(w, i + 1, m))

    return Partition(w[i - 1] - i for i in range(m, 0, -1))


def partition_to_perm(lam, m, n):
    '''Inverse of perm_to_partition: the permutation of 1..n with descent only
    at m whose first m values are lam_{m+1-i} + i.
    '''
    box = BoxBound(m, n - m)
    lam = box.check(lam)
    head = [lam.part(m + 1 - i) + i for i in range(1, m + 1)]
    tail = sorted(set(range(1, n + 1)) - set(head))

    return tuple(head + tail)
