# -*- coding: utf-8 -*-
# Module containing functions for converting qhalpha objects to and from
# their text, JSON and tab separated renderings. Rationals always travel as
# fraction strings such as "3/2"; there is no floating point here.

import re

from fractions import Fraction

from qhalpha.exceptions import InvalidPartition, InvalidPermutation, DomainError
from qhalpha.partitions import Partition

EMPTY_TEXT = '-'

_partition_re = re.compile(r'^\s*\d+(\s*,\s*\d+)*\s*$')
_rational_re = re.compile(r'^\s*[+-]?\d+(\s*/\s*\d+)?\s*$')


def partition_to_text(lam):
    '''"2,1" for (2,1) and "-" for the empty partition.
    '''
    lam = Partition(lam)
    return ','.join(str(p) for p in lam) if lam else EMPTY_TEXT


def parse_partition(text):
    '''Parse "2,1" into Partition((2, 1)); "-", "" and u"∅" are the empty
    partition.
    '''
    text = text.strip()
    if text in ('', EMPTY_TEXT, u'∅'):
        return Partition()
    if not _partition_re.match(text):
        raise InvalidPartition('Malformed partition {!r}'.format(text))

    return Partition(int(p) for p in text.split(','))


def format_rational(value):
    return str(Fraction(value))


def parse_rational(text):
    '''Parse an exact rational such as "3", "-1" or "7/3". Decimal points
    are refused.
    '''
    if not _rational_re.match(text):
        raise DomainError('Malformed rational {!r}, expected p or p/q'.format(text))
    try:
        return Fraction(text.replace(' ', ''))
    except ZeroDivisionError:
        raise DomainError('Zero denominator in {!r}'.format(text))


def parse_permutation(text):
    '''One-line notation, either digits ("321654") or comma separated
    ("3,2,1,6,5,4", required for n > 9).
    '''
    text = text.strip()
    try:
        if ',' in text:
            values = tuple(int(v) for v in text.split(','))
        else:
            values = tuple(int(v) for v in text)
    except ValueError:
        raise InvalidPermutation('Malformed permutation {!r}'.format(text))
    if sorted(values) != list(range(1, len(values) + 1)):
        raise InvalidPermutation('{!r} is not a permutation of 1..{}'.format(text, len(values)))

    return values


def permutation_to_text(w):
    if len(w) > 9:
        return ','.join(str(v) for v in w)
    return ''.join(str(v) for v in w)


def _format_term(d, body, coeff, first):
    magnitude = abs(coeff)
    text = '' if magnitude == 1 else '{}*'.format(magnitude)
    if d == 1:
        text += 'q*'
    elif d > 1:
        text += 'q^{}*'.format(d)
    text += body
    if first:
        return '-' + text if coeff < 0 else text
    return (' - ' if coeff < 0 else ' + ') + text


def format_terms(terms, body_of):
    '''Render ((d, label), coeff) terms as "sigma[2,2] + 3/2*q^2*sigma[1]".
    '''
    parts = []
    for (d, label), coeff in terms:
        parts.append(_format_term(d, body_of(label), coeff, not parts))

    return ''.join(parts) if parts else '0'


def format_qclass(x):
    return format_terms(x.terms(), lambda lam: 'sigma[{}]'.format(partition_to_text(lam)))


def qclass_to_json(x):
    '''List of {"d", "lambda", "coeff"} dicts in canonical term order.
    '''
    return [{'d': d, 'lambda': list(lam), 'coeff': format_rational(coeff)}
            for (d, lam), coeff in x.terms()]


def read_deformation_lines(lines):
    '''Parse deformation coefficient lines "<lambda> ; <mu> ; <rational>".
    Blank lines and lines starting with '#' are skipped. Returns a list of
    (lambda, mu, Fraction).
    '''
    entries = []
    for number, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        fields = line.split(';')
        if len(fields) != 3:
            raise DomainError('Line {}: expected "<lambda> ; <mu> ; <rational>", '
                              'got {!r}'.format(number, line))
        entries.append((parse_partition(fields[0]), parse_partition(fields[1]),
                        parse_rational(fields[2])))

    return entries


def read_deformation_file(file_name):
    with open(file_name, 'r') as f:
        return read_deformation_lines(f.readlines())


def to_tsv(df, tsv_file_name):
    '''Output a DataFrame of exact values (e.g. from
    StructureConstantTable.to_dataframe()) as a tab separated file with
    the index levels as leading columns. Fractions are written as "p/q".
    '''
    df.reset_index().to_csv(tsv_file_name, sep='\t', index=False)
