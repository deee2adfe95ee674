# -*- coding: utf-8 -*-
'''Determinantal symmetric functions over exact rationals and an
independent normal form for QH_alpha computed by graded linear algebra.
The normal form never uses a Pieri rule, so it is the ground truth the
Pieri based QuantumRing is checked against.
'''

import threading

from fractions import Fraction
from functools import lru_cache

import sympy
from sympy import Poly, QQ
from sympy.polys.matrices import DomainMatrix
from sympy.utilities.iterables import partitions as integer_partitions

from qhalpha.exceptions import DegreeCapExceeded, InternalInconsistency
from qhalpha.partitions import Partition, conjugate, partitions_in_box
from qhalpha.QuantumRing import QClass
from qhalpha.utils import get_logger, leibniz, to_fraction, to_sympy_rational, LOG_LEVELS


class RationalSequence(object):
    '''Finite sequence h_1, h_2, ... of Fractions. h_0 reads 1, negative
    indices and indices past the stored values read 0.
    '''
    __slots__ = ('values',)

    def __init__(self, values):
        self.values = tuple(to_fraction(v) for v in values)

    def __getitem__(self, i):
        if i == 0:
            return Fraction(1)
        if i < 0 or i > len(self.values):
            return Fraction(0)
        return self.values[i - 1]

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        if not isinstance(other, RationalSequence):
            return NotImplemented
        return self.values == other.values

    __hash__ = None

    def __repr__(self):
        return 'RationalSequence({})'.format(', '.join(str(v) for v in self.values))


def delta(lam, h):
    '''Delta_lam(h) = det(h_{lam_i + j - i}) of size l(lam); Delta of the
    empty partition is 1.
    '''
    lam = Partition(lam)
    size = lam.length
    if not size:
        return Fraction(1)
    rows = [[h[lam.part(i + 1) + j - i] for j in range(size)] for i in range(size)]
    matrix = DomainMatrix([[QQ(v.numerator, v.denominator) for v in row] for row in rows],
                          (size, size), QQ)

    return to_fraction(matrix.det())


def dual_sequence(h, up_to):
    '''e_p = sum_{i=1}^p (-1)^(i-1) h_i e_{p-i} for 1 <= p <= up_to.
    '''
    e = [Fraction(1)]
    for p in range(1, up_to + 1):
        e.append(sum(((-1) ** (i - 1) * h[i] * e[p - i] for i in range(1, p + 1)),
                     Fraction(0)))

    return RationalSequence(e[1:])


def generators(params):
    '''Symbols (c_1, ..., c_m, q) of S[q].
    '''
    cs = sympy.symbols('c1:{}'.format(params.m + 1))
    return tuple(cs) + (sympy.Symbol('q'),)


def weights(params):
    return tuple(range(1, params.m + 1)) + (params.n,)


def weighted_degree(monom, params):
    return sum(e * w for e, w in zip(monom, weights(params)))


def _exponents_of_degree(wts, degree):
    '''Exponent vectors over the weights wts with weighted degree `degree`.
    '''
    if not wts:
        if degree == 0:
            yield ()
        return
    for e in range(degree // wts[0] + 1):
        for rest in _exponents_of_degree(wts[1:], degree - e * wts[0]):
            yield (e,) + rest


def monomials(params, degree):
    '''Exponent vectors of weighted degree `degree` in lexicographic order
    (q last).
    '''
    return sorted(_exponents_of_degree(weights(params), degree))


def make_poly(terms, params):
    '''Polynomial in S[q] from a dict of exponent vector -> rational.
    '''
    return Poly.from_dict({monom: QQ(to_fraction(c).numerator, to_fraction(c).denominator)
                           for monom, c in terms.items()},
                          *generators(params), domain=QQ)


def c_variable(s, params):
    '''c_s as a polynomial: 1 for s = 0, a generator for 1 <= s <= m, None
    (structural zero) otherwise.
    '''
    gens = generators(params)
    if s == 0:
        return Poly(1, *gens, domain=QQ)
    if 1 <= s <= params.m:
        return Poly(gens[s - 1], *gens, domain=QQ)
    return None


def sigma_polynomial(lam, params):
    '''sigma_lam = Delta_{lam'}(c) by permutation expansion; zero when
    l(lam) > m.
    '''
    lam_conj = conjugate(lam)
    gens = generators(params)
    return leibniz(lam_conj.length,
                   lambda i, j: c_variable(lam_conj.part(i + 1) + j - i, params),
                   Poly(1, *gens, domain=QQ), Poly(0, *gens, domain=QQ))


def ideal_generators(params):
    '''sigma_{k+1}, ..., sigma_{n-1}, sigma_n + (-1)^m alpha q, each with its
    weighted degree.
    '''
    gens = generators(params)
    found = []
    for s in range(params.k + 1, params.n + 1):
        g = sigma_polynomial(Partition((s,)), params)
        if s == params.n:
            g = g + Poly(gens[-1], *gens, domain=QQ) * to_sympy_rational(
                (-1) ** params.m * params.alpha)
        found.append((s, g))

    return found


def render_polynomial(f):
    '''Debug rendering such as "3/2·c1^2·q − c2".
    '''
    gens = [str(g) for g in f.gens]
    pieces = []
    for monom, coeff in f.terms():
        coeff = to_fraction(coeff)
        factors = []
        for name, e in zip(gens, monom):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(u'{}^{}'.format(name, e))
        magnitude = abs(coeff)
        if magnitude != 1 or not factors:
            factors.insert(0, str(magnitude))
        body = u'·'.join(factors)
        if not pieces:
            pieces.append(u'−' + body if coeff < 0 else body)
        else:
            pieces.append((u' − ' if coeff < 0 else u' + ') + body)

    return u''.join(pieces) if pieces else u'0'


def _slice_partitions(degree, max_length):
    '''Partitions of `degree` with at most max_length parts.
    '''
    found = []
    for p in integer_partitions(degree, m=max_length):
        parts = []
        for value in sorted(p, reverse=True):
            parts.extend([value] * p[value])
        found.append(Partition(parts))

    return found


def sigma_rank(params, degree):
    '''Rank of {sigma_lam : l(lam) <= m, |lam| = degree} inside S, together
    with the number of such partitions.
    '''
    lams = _slice_partitions(degree, params.m)
    rows = [monom for monom in monomials(params, degree) if monom[-1] == 0]
    index = {monom: i for i, monom in enumerate(rows)}
    elements = {}
    for col, lam in enumerate(lams):
        for monom, coeff in sigma_polynomial(lam, params).terms():
            elements.setdefault(index[monom], {})[col] = coeff
    if not rows or not lams:
        return 0, len(lams)
    matrix = DomainMatrix(elements, (len(rows), len(lams)), QQ)

    return matrix.rank(), len(lams)


class NormalFormOracle(object):
    '''Normal forms modulo the ideal of QH_alpha, one graded slice at a time.
    For a slice of degree D the monomials are the rows; the columns are the
    basis images q^d sigma_lam, then the spanning set {monomial x generator}
    of the ideal, then the identity. Row reduction expresses every monomial
    in the basis modulo the ideal.
    '''

    logger = get_logger(__name__)
    _log_levels = LOG_LEVELS

    def __init__(self, params, degree_cap=None, verbosity=None):
        '''Initialize NormalFormOracle object.

        Args:
            params (RingParams): The ring
            degree_cap (int): Largest weighted degree accepted, defaults to 3n
            verbosity (int): range(4), default None leaves the level as is
        '''
        self.params = params
        self.degree_cap = 3 * params.n if degree_cap is None else degree_cap
        if verbosity is not None:
            self.set_verbosity(verbosity)
        self._slices = {}
        self._lock = threading.Lock()

    def set_verbosity(self, verbosity):
        self.logger.setLevel(self._log_levels[verbosity])

    def _build_slice(self, degree):
        params = self.params
        rows = monomials(params, degree)
        index = {monom: i for i, monom in enumerate(rows)}

        basis = [(d, lam) for d in range(degree // params.n + 1)
                          for lam in partitions_in_box(params.box)
                          if lam.weight == degree - d * params.n]
        columns = []
        for d, lam in basis:
            columns.append({monom[:-1] + (monom[-1] + d,): coeff
                            for monom, coeff in sigma_polynomial(lam, params).terms()})
        for deg_g, g in ideal_generators(params):
            if deg_g > degree:
                continue
            g_terms = g.terms()
            for shift in monomials(params, degree - deg_g):
                columns.append({tuple(a + b for a, b in zip(monom, shift)): coeff
                                for monom, coeff in g_terms})

        nb, nc = len(basis), len(columns)
        elements = {}
        for col, column in enumerate(columns):
            for monom, coeff in column.items():
                elements.setdefault(index[monom], {})[col] = coeff
        for i in range(len(rows)):
            elements.setdefault(i, {})[nc + i] = QQ(1)

        self.logger.info('Reducing degree %s slice of %s: %s monomials, %s columns',
                         degree, params, len(rows), nc)
        reduced, pivots = DomainMatrix(elements, (len(rows), nc + len(rows)), QQ).rref()

        if tuple(pivots[:nb]) != tuple(range(nb)):
            raise InternalInconsistency('Basis of degree {} is linearly dependent '
                                        'modulo the ideal'.format(degree))
        if pivots and pivots[-1] >= nc:
            raise InternalInconsistency('Basis and ideal do not span degree {}'.format(degree))

        dense = reduced.to_Matrix()
        table = {}
        for j, monom in enumerate(rows):
            table[monom] = [(basis[b], to_fraction(dense[b, nc + j]))
                            for b in range(nb) if dense[b, nc + j] != 0]

        return table

    def _slice(self, degree):
        with self._lock:
            cached = self._slices.get(degree)
        if cached is not None:
            return cached
        table = self._build_slice(degree)
        with self._lock:
            self._slices.setdefault(degree, table)
            return self._slices[degree]

    def normal_form(self, f):
        '''Return QClass expansion of the polynomial f (sympy Poly in
        generators(params)) on the basis {q^d sigma_lam}.
        '''
        if not isinstance(f, Poly):
            f = Poly(f, *generators(self.params), domain=QQ)
        result = QClass(self.params)
        for monom, coeff in f.terms():
            degree = weighted_degree(monom, self.params)
            if degree > self.degree_cap:
                raise DegreeCapExceeded('Degree {} above cap {} for {}'.format(
                                        degree, self.degree_cap, self.params))
            coeff = to_fraction(coeff)
            for (d, lam), value in self._slice(degree)[monom]:
                result._accumulate(d, lam, coeff * value)

        return result


@lru_cache(maxsize=32)
def oracle_for(params, degree_cap=None):
    '''Shared NormalFormOracle per (params, degree_cap); the least recently
    used oracles and their slices are dropped.
    '''
    return NormalFormOracle(params, degree_cap)


def normal_form(f, params, degree_cap=None):
    return oracle_for(params, degree_cap).normal_form(f)


def product_normal_form(lam, mu, params, degree_cap=None):
    '''Normal form of Delta_{lam'}(c) * Delta_{mu'}(c), the oracle side of
    sigma_lam * sigma_mu.
    '''
    return normal_form(sigma_polynomial(lam, params) * sigma_polynomial(mu, params),
                       params, degree_cap)
