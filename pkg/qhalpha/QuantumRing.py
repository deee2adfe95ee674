import threading

from collections import namedtuple
from fractions import Fraction
from functools import lru_cache

import pandas as pd

from qhalpha import converters
from qhalpha.exceptions import (ParamsMismatch, DomainError,
                                InternalInconsistency)
from qhalpha.partitions import (Partition, BoxBound, EMPTY, EACH_COLUMN, EACH_ROW,
                                conjugate, partitions_in_box, deg_lex_key,
                                add_vertical_strips, add_horizontal_strips,
                                rim_removals)
from qhalpha.utils import get_logger, to_fraction, signed_permutations, LOG_LEVELS


class RingParams(namedtuple('RingParams', 'm k alpha')):
    '''Parameters of one member QH_alpha of the ring family: the m x k box
    and the exact rational alpha. deg(q) = n = m + k.
    '''
    __slots__ = ()

    def __new__(cls, m, k, alpha=1):
        box = BoxBound(m, k)
        return super(RingParams, cls).__new__(cls, box.m, box.k, to_fraction(alpha))

    @property
    def n(self):
        return self.m + self.k

    @property
    def box(self):
        return BoxBound(self.m, self.k)

    def with_alpha(self, alpha):
        return RingParams(self.m, self.k, alpha)

    def __str__(self):
        return 'QH_{}(Gr({},{}))'.format(self.alpha, self.m, self.n)


def _term_key(item):
    (d, lam), _ = item
    return (d, deg_lex_key(lam))


class QClass(object):
    '''Element of QH_alpha on the Q-basis {q^d sigma_lambda}. Terms map
    (d, lambda) to a non-zero Fraction.
    '''
    __slots__ = ('params', '_terms')

    def __init__(self, params, terms=None):
        self.params = params
        self._terms = {}
        for (d, lam), coeff in (terms or {}).items():
            self._accumulate(d, lam, coeff)

    @classmethod
    def basis(cls, params, lam, d=0, coeff=1):
        return cls(params, {(d, lam): coeff})

    def _accumulate(self, d, lam, coeff):
        d = int(d)
        if d < 0:
            raise DomainError('Negative q-degree {}'.format(d))
        self._put((d, self.params.box.check(lam)), to_fraction(coeff))

    def _put(self, key, coeff):
        value = self._terms.get(key, 0) + coeff
        if value:
            self._terms[key] = value
        else:
            self._terms.pop(key, None)

    def _add_scaled(self, other, factor=1, shift=0):
        '''In-place self += factor * q^shift * other. Only used on fresh
        results owned by the caller.
        '''
        for (d, lam), coeff in other._terms.items():
            self._put((d + shift, lam), coeff * factor)
        return self

    def _check_params(self, other):
        if self.params != other.params:
            raise ParamsMismatch('{} and {} live in different rings'.format(
                                 self.params, other.params))

    def terms(self):
        '''List of ((d, lambda), coeff) in canonical order: ascending d, then
        deg-lex ascending lambda.
        '''
        return sorted(self._terms.items(), key=_term_key)

    def __iter__(self):
        return iter(self.terms())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    __nonzero__ = __bool__

    def coefficient(self, lam, d=0):
        return self._terms.get((d, Partition(lam)), Fraction(0))

    def degrees(self):
        return {d * self.params.n + lam.weight for d, lam in self._terms}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def __eq__(self, other):
        if not isinstance(other, QClass):
            return NotImplemented
        return self.params == other.params and self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __add__(self, other):
        self._check_params(other)
        result = QClass(self.params)
        result._terms = dict(self._terms)
        return result._add_scaled(other)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        return QClass(self.params)._add_scaled(self, to_fraction(factor))

    def q_shift(self, d):
        '''Multiply by q^d.
        '''
        if d < 0:
            raise DomainError('Negative q-shift {}'.format(d))
        return QClass(self.params)._add_scaled(self, 1, d)

    def __mul__(self, other):
        if isinstance(other, QClass):
            return shared_ring(self.params).multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __str__(self):
        return converters.format_qclass(self)

    def __repr__(self):
        return 'QClass({}, {})'.format(self.params, converters.format_qclass(self))


class StructureConstantTable(object):
    '''Non-zero structure constants N^{nu,d}_{lambda,mu} keyed by
    (lambda, mu, nu, d).
    '''

    def __init__(self, params, entries=None):
        self.params = params
        self.entries = {}
        for (lam, mu, nu, d), value in (entries or {}).items():
            self._put(lam, mu, nu, d, value)

    def _put(self, lam, mu, nu, d, value):
        lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
        if lam.weight + mu.weight != nu.weight + d * self.params.n:
            raise InternalInconsistency('Inhomogeneous constant {} for ({}, {}, {}, {})'.format(
                                        value, lam, mu, nu, d))
        value = to_fraction(value)
        if value:
            self.entries[(lam, mu, nu, d)] = value

    def add_product(self, lam, mu, product, max_degree=None):
        '''Record the expansion of sigma_lam * sigma_mu (a QClass).
        '''
        for (d, nu), coeff in product:
            if max_degree is None or d <= max_degree:
                self._put(lam, mu, nu, d, coeff)

    def get(self, lam, mu, nu, d):
        return self.entries.get((Partition(lam), Partition(mu), Partition(nu), d),
                                Fraction(0))

    def rows(self):
        '''Entries as (lam, mu, nu, d, value) tuples ascending in d, then
        deg-lex lam, mu, nu.
        '''
        keyed = sorted(self.entries.items(),
                       key=lambda item: (item[0][3], deg_lex_key(item[0][0]),
                                         deg_lex_key(item[0][1]), deg_lex_key(item[0][2])))
        return [(lam, mu, nu, d, value) for (lam, mu, nu, d), value in keyed]

    def __iter__(self):
        return iter(self.rows())

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, StructureConstantTable):
            return NotImplemented
        return self.params == other.params and self.entries == other.entries

    __hash__ = None

    def negative_entries(self):
        return [row for row in self.rows() if row[4] < 0]

    def to_dataframe(self):
        '''Return Pandas DataFrame with a (lambda, mu, nu, d) MultiIndex and a
        'coeff' column of exact Fractions.
        '''
        rows = self.rows()
        tuples = [(converters.partition_to_text(lam), converters.partition_to_text(mu),
                   converters.partition_to_text(nu), d) for lam, mu, nu, d, _ in rows]
        indices = pd.MultiIndex.from_tuples(tuples, names=['lambda', 'mu', 'nu', 'd'])
        return pd.DataFrame({'coeff': pd.Series([r[4] for r in rows],
                                                index=indices, dtype=object)})


def is_single_term(x):
    '''Return (coeff, d, lambda) when x is a multiple of a single basis
    element q^d sigma_lambda, None otherwise.
    '''
    if len(x) != 1:
        return None
    (d, lam), coeff = x.terms()[0]
    return coeff, d, lam


def rescale(x, alpha):
    '''Image of x in QH_1 under q -> alpha q, landing in QH_alpha. The
    coefficient of q^d sigma_nu picks up alpha^d.
    '''
    if x.params.alpha != 1:
        raise DomainError('rescale() maps out of QH_1, got {}'.format(x.params))
    alpha = to_fraction(alpha)
    params = x.params.with_alpha(alpha)
    return QClass(params, {(d, lam): coeff * alpha ** d for (d, lam), coeff in x})


class QuantumRing(object):
    '''The ring QH_alpha = S[q]/<sigma_{k+1}, ..., sigma_{n-1},
    sigma_n + (-1)^m alpha q> on its Schubert basis, multiplied through the
    quantum Pieri rules.
    '''

    logger = get_logger(__name__)
    _log_levels = LOG_LEVELS

    def __init__(self, m, k, alpha=1, verbosity=None):
        '''Initialize QuantumRing object.

        Args:
            m (int): Number of rows of the box, >= 1
            k (int): Number of columns of the box, >= 1
            alpha (Fraction, int or str): Deformation parameter, default 1
                                          which is the quantum cohomology ring
            verbosity (int): range(4), default None leaves the level as is
        '''
        self.params = RingParams(m, k, alpha)
        self.box = self.params.box
        if verbosity is not None:
            self.set_verbosity(verbosity)
        self._pieri_cache = {}
        self._memo = {}
        self._memo_lock = threading.Lock()

    @classmethod
    def from_params(cls, params, verbosity=None):
        return cls(params.m, params.k, params.alpha, verbosity=verbosity)

    def set_verbosity(self, verbosity):
        '''Change loglevel. 0: ERROR, 1: WARN, 2: INFO, 3:DEBUG.
        '''
        self.logger.setLevel(self._log_levels[verbosity])

    def sigma(self, lam, d=0, coeff=1):
        return QClass.basis(self.params, lam, d, coeff)

    def one(self):
        return self.sigma(EMPTY)

    def zero(self):
        return QClass(self.params)

    def partitions(self):
        return partitions_in_box(self.box)

    def _check_operand(self, x):
        if x.params != self.params:
            raise ParamsMismatch('{} is not an element of {}'.format(x, self.params))

    def pieri_chern(self, p, lam):
        '''Return c_p * sigma_lam: vertical strips inside the box, plus alpha q
        times the rim removals of n - p boxes touching every column when
        lam_1 = k.
        '''
        if not 1 <= p <= self.params.m:
            raise DomainError('Chern class index {} outside 1..{}'.format(p, self.params.m))
        lam = self.box.check(lam)
        key = ('c', p, lam)
        if key not in self._pieri_cache:
            terms = {}
            for mu in add_vertical_strips(lam, p, self.params.m):
                if mu.part(1) <= self.params.k:
                    terms[(0, mu)] = 1
            if lam.part(1) == self.params.k:
                for nu in rim_removals(lam, self.params.n - p, EACH_COLUMN):
                    terms[(1, nu)] = self.params.alpha
            self._pieri_cache[key] = QClass(self.params, terms)

        return self._pieri_cache[key]

    def pieri_special(self, p, lam):
        '''Return sigma_p * sigma_lam: horizontal strips inside the box, plus
        alpha q times the rim removals of n - p boxes touching every row
        when lam_m != 0.
        '''
        if not 1 <= p <= self.params.k:
            raise DomainError('Special class index {} outside 1..{}'.format(p, self.params.k))
        lam = self.box.check(lam)
        key = ('s', p, lam)
        if key not in self._pieri_cache:
            terms = {}
            for mu in add_horizontal_strips(lam, p, self.box):
                terms[(0, mu)] = 1
            if lam.part(self.params.m) != 0:
                for nu in rim_removals(lam, self.params.n - p, EACH_ROW):
                    terms[(1, nu)] = self.params.alpha
            self._pieri_cache[key] = QClass(self.params, terms)

        return self._pieri_cache[key]

    def _apply(self, rule, p, x):
        self._check_operand(x)
        result = self.zero()
        for (d, lam), coeff in x:
            result._add_scaled(rule(p, lam), coeff, d)
        return result

    def apply_chern(self, p, x):
        '''c_p * x for any element x.
        '''
        return self._apply(self.pieri_chern, p, x)

    def apply_special(self, p, x):
        '''sigma_p * x for any element x.
        '''
        return self._apply(self.pieri_special, p, x)

    def chern_power(self, e, lam):
        '''c_m^e * sigma_lam.
        '''
        x = self.sigma(lam)
        for _ in range(e):
            x = self.apply_chern(self.params.m, x)
        return x

    def special_class(self, s):
        '''sigma_s read through the defining ideal: the basis element for
        0 <= s <= k, 0 for s < 0 and k < s < n, (-1)^(m-1) alpha q for s = n.
        '''
        return self._times_special(s, self.one())

    def _times_special(self, s, x):
        m, k, n = self.params.m, self.params.k, self.params.n
        if s < 0 or k < s < n:
            return self.zero()
        if s == 0:
            return x
        if s <= k:
            return self.apply_special(s, x)
        if s == n:
            return x.q_shift(1).scale((-1) ** (m - 1) * self.params.alpha)
        raise DomainError('sigma_{} is beyond sigma_n in {}'.format(s, self.params))

    def _basis_product(self, lam, mu):
        '''sigma_lam * sigma_mu with sigma_mu = det(c_{mu'_i + j - i}) expanded
        over permutations and every c-factor applied by pieri_chern.
        '''
        key = (lam, mu)
        with self._memo_lock:
            cached = self._memo.get(key)
        if cached is not None:
            self.logger.debug('Memo hit for %s * %s', lam, mu)
            return cached

        m = self.params.m
        mu_conj = conjugate(mu)
        size = mu_conj.length
        product = self.zero()
        for sign, perm in signed_permutations(size):
            indices = [mu_conj.part(i + 1) + perm[i] - i for i in range(size)]
            if any(s < 0 or s > m for s in indices):
                continue
            x = self.sigma(lam)
            for s in indices:
                if s:
                    x = self.apply_chern(s, x)
                if not x:
                    break
            product._add_scaled(x, sign)

        with self._memo_lock:
            self._memo.setdefault(key, product)
            return self._memo[key]

    def multiply(self, x, y):
        '''Bilinear product x * y in QH_alpha.
        '''
        self._check_operand(x)
        self._check_operand(y)
        result = self.zero()
        for (d, lam), a in x:
            for (e, mu), b in y:
                result._add_scaled(self._basis_product(lam, mu), a * b, d + e)
        return result

    def structure_constants(self, lam, mu):
        '''Return StructureConstantTable slice of sigma_lam * sigma_mu.
        '''
        lam, mu = self.box.check(lam), self.box.check(mu)
        table = StructureConstantTable(self.params)
        table.add_product(lam, mu, self._basis_product(lam, mu))
        return table

    def structure_constant_table(self, max_degree=None):
        '''Return StructureConstantTable for every ordered pair of basis
        elements, optionally restricted to q-degree <= max_degree.
        '''
        table = StructureConstantTable(self.params)
        parts = self.partitions()
        self.logger.info('Building structure constants of %s for %s partitions',
                         self.params, len(parts))
        for lam in parts:
            for mu in parts:
                table.add_product(lam, mu, self._basis_product(lam, mu), max_degree)
        self.logger.info('Found %s non-zero constants', len(table))

        return table

    def positivity_witness(self):
        '''First negative structure constant (lam, mu, nu, d, value) in
        canonical order, None if all are non-negative.
        '''
        negatives = self.structure_constant_table().negative_entries()
        return negatives[0] if negatives else None

    def giambelli_check(self, lam):
        '''Evaluate det(sigma_{lam_i + j - i})_{m x m} through pieri_special and
        return whether it equals sigma_lam.
        '''
        lam = self.box.check(lam)
        m = self.params.m
        total = self.zero()
        for sign, perm in signed_permutations(m):
            x = self.one()
            for i in range(m):
                x = self._times_special(lam.part(i + 1) + perm[i] - i, x)
                if not x:
                    break
            total._add_scaled(x, sign)

        if total != self.sigma(lam):
            self.logger.warning('Giambelli determinant for %s gave %s', lam, total)
            return False
        return True

    def witten_relation_holds(self):
        '''sigma_(1^m) * sigma_(k) = alpha q.
        '''
        product = self.multiply(self.sigma((1,) * self.params.m),
                                self.sigma((self.params.k,)))
        return product == self.sigma(EMPTY, d=1, coeff=self.params.alpha)

    def poincare_pairing(self, lam, mu):
        '''Coefficient of sigma_(k^m) in the classical product sigma_lam sigma_mu.
        '''
        classical = shared_ring(self.params.with_alpha(0))
        return classical.multiply(classical.sigma(lam),
                                  classical.sigma(mu)).coefficient(self.box.full())


@lru_cache(maxsize=32)
def shared_ring(params):
    '''QuantumRing for params, reused across callers so its product memo
    survives between calls. The least recently used rings are dropped.
    '''
    return QuantumRing.from_params(params)
