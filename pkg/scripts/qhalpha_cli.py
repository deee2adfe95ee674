#!/usr/bin/env python

import sys
from os.path import join, dirname
parent_dir = join(dirname(__file__), "../")
sys.path.insert(0, parent_dir)

import argparse
import json

from qhalpha import deform, exhibits, seidel
from qhalpha.converters import (parse_partition, parse_rational, parse_permutation,
                                partition_to_text, permutation_to_text, format_rational,
                                format_qclass, qclass_to_json, read_deformation_file,
                                to_tsv)
from qhalpha.exceptions import QHAlphaError, InternalInconsistency
from qhalpha.QuantumRing import QuantumRing, RingParams
from qhalpha.schur_oracle import NormalFormOracle, product_normal_form
from qhalpha.utils import get_logger, LOG_LEVELS


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    '''Report usage errors as a single line instead of exiting.
    '''

    def error(self, message):
        raise UsageError('{}: error: {}'.format(self.prog, message))


def partition(text):
    return parse_partition(text)


def rational(text):
    return parse_rational(text)


def permutation(text):
    return parse_permutation(text)


class QHAlphaCommand(object):

    logger = get_logger(__name__)
    _log_levels = LOG_LEVELS

    def __init__(self, out=sys.stdout, err=sys.stderr):
        self.out = out
        self.err = err

    def write(self, line=''):
        self.out.write(line + '\n')

    def write_json(self, obj):
        self.write(json.dumps(obj, sort_keys=True))

    def params(self):
        return RingParams(self.args.m, self.args.k, getattr(self.args, 'alpha', 0))

    def ring(self):
        return QuantumRing.from_params(self.params())

    def params_json(self, params):
        return {'m': params.m, 'k': params.k, 'alpha': format_rational(params.alpha)}

    def do_multiply(self):
        ring = self.ring()
        lam, mu = ring.box.check(self.args.lam), ring.box.check(self.args.mu)
        product = ring.multiply(ring.sigma(lam), ring.sigma(mu))
        status = 0
        result = {'params': self.params_json(ring.params), 'lambda': list(lam),
                  'mu': list(mu), 'product': qclass_to_json(product)}
        lines = [format_qclass(product)]
        if self.args.check_oracle:
            cap = self.args.degree_cap
            if cap is None:
                cap = max(3 * ring.params.n, lam.weight + mu.weight)
            oracle = product_normal_form(lam, mu, ring.params, cap)
            agree = oracle == product
            result['oracle_agrees'] = agree
            if agree:
                lines.append('oracle: agree')
            else:
                lines.append('oracle: DISAGREE {}'.format(format_qclass(oracle)))
                status = 1

        if self.args.json:
            self.write_json(result)
        else:
            for line in lines:
                self.write(line)
        return status

    def do_pieri(self):
        ring = self.ring()
        if self.args.chern is not None:
            kind, p, product = 'chern', self.args.chern, ring.pieri_chern(self.args.chern,
                                                                          self.args.lam)
        else:
            kind, p, product = 'special', self.args.special, ring.pieri_special(
                                                                self.args.special, self.args.lam)
        if self.args.json:
            self.write_json({'params': self.params_json(ring.params), 'rule': kind, 'p': p,
                             'lambda': list(self.args.lam), 'product': qclass_to_json(product)})
        else:
            self.write(format_qclass(product))
        return 0

    def do_giambelli(self):
        ring = self.ring()
        lams = self.args.lam or ring.partitions()
        results = [(lam, ring.giambelli_check(lam)) for lam in lams]
        if self.args.json:
            self.write_json({'params': self.params_json(ring.params),
                             'results': [{'lambda': list(lam), 'pass': ok}
                                         for lam, ok in results]})
        else:
            for lam, ok in results:
                self.write('{} {}'.format(partition_to_text(lam), 'pass' if ok else 'fail'))
        return 0 if all(ok for _, ok in results) else 1

    def do_constants(self):
        ring = self.ring()
        table = ring.structure_constant_table(self.args.max_degree)
        if self.args.tsv:
            to_tsv(table.to_dataframe(), self.args.tsv)
        if self.args.json:
            self.write_json({'params': self.params_json(ring.params),
                             'constants': [{'lambda': list(lam), 'mu': list(mu), 'nu': list(nu),
                                            'd': d, 'coeff': format_rational(value)}
                                           for lam, mu, nu, d, value in table.rows()]})
        else:
            for lam, mu, nu, d, value in table.rows():
                self.write('{} {} {} {} {}'.format(partition_to_text(lam), partition_to_text(mu),
                                                   partition_to_text(nu), d,
                                                   format_rational(value)))
        return 0

    def do_orbit(self):
        box = RingParams(self.args.m, self.args.k).box
        found = seidel.orbit(self.args.lam, box)
        if self.args.json:
            self.write_json({'m': box.m, 'k': box.k, 'lambda': list(found.base),
                             'shifts': [list(s) for s in found.shifts],
                             'weights': list(found.weights), 'sum': found.weight_sum})
        else:
            for p, (lam, weight) in enumerate(zip(found.shifts, found.weights)):
                self.write('{} {} {}'.format(p, partition_to_text(lam), weight))
            self.write('weights {}'.format(' '.join(str(w) for w in found.weights)))
            self.write('sum={}'.format(found.weight_sum))
        return 0

    def do_separate(self):
        box = RingParams(self.args.m, self.args.k).box
        found = seidel.find_separating_shift(self.args.lam, self.args.mu, box)
        if self.args.json:
            self.write_json({'m': box.m, 'k': box.k, 'lambda': list(self.args.lam),
                             'mu': list(self.args.mu), 'p': found.p,
                             'weights': [found.lambda_weight, found.mu_weight]})
        else:
            self.write('p={} weights {} {}'.format(found.p, found.lambda_weight, found.mu_weight))
        return 0

    def do_certify(self):
        params = self.params()
        if self.args.branch == deform.POSITIVE:
            report = deform.certify_positive_branch(params, jobs=self.args.jobs)
        else:
            report = deform.certify_classical_branch(params, jobs=self.args.jobs)

        if self.args.json:
            if report.branch == deform.POSITIVE:
                records = [{'lambda': list(r.lam), 'mu': list(r.mu), 'p': r.p,
                            'd': format_rational(r.d), 'e_prime': format_rational(r.e_prime),
                            'verified': r.verified} for r in report.records]
            else:
                records = [{'claim': r.claim, 'subject': [list(s) for s in r.subject],
                            'verified': r.verified} for r in report.records]
            self.write_json({'params': self.params_json(params), 'branch': report.branch,
                             'records': records, 'verified': report.verified})
        else:
            for r in report.records:
                if report.branch == deform.POSITIVE:
                    self.write("{} ; {} p={} d={} e'={} {}".format(
                               partition_to_text(r.lam), partition_to_text(r.mu),
                               r.p, r.d, r.e_prime, 'ok' if r.verified else 'FAILED'))
                else:
                    self.write('{} {} {}'.format(r.claim,
                                                 ' '.join(partition_to_text(s) for s in r.subject),
                                                 'ok' if r.verified else 'FAILED'))
            self.write('{} branch for {}: {} of {} records verified'.format(
                       report.branch, params, len(report.records) - len(report.failures()),
                       len(report.records)))
        return 0 if report.verified else 1

    def do_deform_check(self):
        params = self.params()
        try:
            entries = read_deformation_file(self.args.coeffs)
        except (IOError, OSError) as e:
            raise UsageError('Cannot read {}: {}'.format(self.args.coeffs, e))
        coeffs = deform.DeformationCoeffs.from_entries(params, entries)
        report = deform.check_nonnegative(coeffs)
        if self.args.json:
            self.write_json({'params': self.params_json(params),
                             'violations': [{'lambda': list(v.lam), 'mu': list(v.mu),
                                             'nu': list(v.nu), 'd': v.d,
                                             'value': format_rational(v.value)}
                                            for v in report.violations]})
        else:
            for v in report.violations:
                self.write('{} {} {} {} {}'.format(partition_to_text(v.lam),
                                                   partition_to_text(v.mu),
                                                   partition_to_text(v.nu), v.d,
                                                   format_rational(v.value)))
            self.write('violations={}'.format(len(report.violations)))
        return 0 if report.is_nonnegative else 1

    def do_lg24(self):
        family = exhibits.LGFamily(self.args.a, self.args.b)
        status = 0
        nonnegative, witness = family.is_nonnegative()
        result = {'a': format_rational(family.a), 'b': format_rational(family.b),
                  'table': {'tau{}*tau{}'.format(i, j): exhibits.lg24_format(terms)
                            for (i, j), terms in family.table().items()},
                  'nonnegative': nonnegative,
                  'change_of_basis': exhibits.is_change_of_basis(family.a, family.b)}
        lines = ['tau{}*tau{} = {}'.format(i, j, exhibits.lg24_format(family.table()[(i, j)]))
                 for i, j in exhibits.LG24_PAIRS]
        if nonnegative:
            lines.append('nonnegative=true')
        else:
            lines.append('nonnegative=false witness tau{}*tau{} q^{}*tau{} {}'.format(
                         witness[0], witness[1], witness[2], witness[3],
                         format_rational(witness[4])))
            result['witness'] = format_rational(witness[4])
        lines.append('change_of_basis={}'.format(
                     'true' if result['change_of_basis'] else 'false'))
        if self.args.check_assoc:
            result['associative'] = family.is_associative()
            lines.append('associative={}'.format('true' if result['associative'] else 'false'))
            status = status or (0 if result['associative'] else 1)
        if self.args.check_region:
            mismatches = exhibits.lg24_region_check()
            result['region_mismatches'] = len(mismatches)
            lines.append('region_mismatches={}'.format(len(mismatches)))
            status = status or (1 if mismatches else 0)

        if self.args.json:
            self.write_json(result)
        else:
            for line in lines:
                self.write(line)
        return status

    def do_flags(self):
        rows = exhibits.flag_seidel_orbit(self.args.w, self.args.n)
        total = sum(row.length for row in rows)
        if self.args.json:
            self.write_json({'n': self.args.n, 'w': permutation_to_text(self.args.w),
                             'rows': [{'r': row.r, 'permutation': permutation_to_text(row.permutation),
                                       'length': row.length} for row in rows],
                             'sum': total})
        else:
            for row in rows:
                self.write('{} {} {}'.format(row.r, permutation_to_text(row.permutation),
                                             row.length))
            self.write('sum={}'.format(total))
        return 0

    def process(self):
        verbosity = self.args.verbose
        for logger in (self.logger, QuantumRing.logger, NormalFormOracle.logger, deform.logger):
            logger.setLevel(self._log_levels[verbosity])
        self.logger.debug('Running %s with %s', self.args.command, vars(self.args))

        return getattr(self, 'do_' + self.args.command.replace('-', '_'))()

    def process_command_line(self, argv=None):
        examples = 'Examples:' + '\n'
        examples += '---------' + '\n'
        examples += sys.argv[0] + " multiply --m 2 --k 2 --alpha 1 2,1 1\n"
        examples += sys.argv[0] + " multiply --m 3 --k 3 --alpha=7/3 2,1 2,2 --check-oracle\n"
        examples += sys.argv[0] + " pieri --m 2 --k 3 --chern 2 3,1\n"
        examples += sys.argv[0] + " constants --m 2 --k 2 --alpha -1 --max-degree 1\n"
        examples += sys.argv[0] + " orbit --m 2 --k 2 -\n"
        examples += sys.argv[0] + " separate --m 2 --k 2 2,2 -\n"
        examples += sys.argv[0] + " certify --m 2 --k 3 --alpha 0 --branch classical --jobs 4\n"
        examples += sys.argv[0] + " deform-check --m 2 --k 2 --coeffs coeffs.txt\n"
        examples += sys.argv[0] + " lg24 --a 1 --b 3/2 --check-assoc\n"
        examples += sys.argv[0] + " flags --n 6 --w 321654\n"
        examples += "\n"
        examples += "Negative fractions need the = form, e.g. --alpha=-1/2\n"

        parser = _ArgumentParser(formatter_class=argparse.RawTextHelpFormatter,
                    description='Compute in the quantum deformations QH_alpha of the\n'
                                'cohomology of Grassmannians and check their positivity.',
                    epilog=examples)

        common = _ArgumentParser(add_help=False)
        common.add_argument('--json', action='store_true', help='Emit JSON on standard output')
        common.add_argument('-v', '--verbose', nargs='?', choices=[0,1,2,3], type=int,
                            help='0: ERROR, 1: WARN, 2: INFO, 3:DEBUG', default=0, const=2)

        box = _ArgumentParser(add_help=False)
        box.add_argument('--m', action='store', type=int, required=True,
                         help='Rows of the box')
        box.add_argument('--k', action='store', type=int, required=True,
                         help='Columns of the box')

        ring = _ArgumentParser(add_help=False, parents=[box])
        ring.add_argument('--alpha', action='store', type=rational, default='1',
                          help='Deformation parameter, default 1')

        subparsers = parser.add_subparsers(dest='command', title='commands')
        subparsers.required = True

        p = subparsers.add_parser('multiply', parents=[common, ring],
                                  help='Expand sigma_lambda * sigma_mu')
        p.add_argument('lam', type=partition, help='e.g. 2,1 or - for the empty partition')
        p.add_argument('mu', type=partition)
        p.add_argument('--check-oracle', action='store_true',
                       help='Compare with the ideal normal form')
        p.add_argument('--degree-cap', action='store', type=int,
                       help='Degree cap of the normal form, default max(3n, |lambda|+|mu|)')

        p = subparsers.add_parser('pieri', parents=[common, ring],
                                  help='Apply one quantum Pieri rule')
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument('--chern', action='store', type=int, help='Multiply by c_P')
        group.add_argument('--special', action='store', type=int, help='Multiply by sigma_P')
        p.add_argument('lam', type=partition)

        p = subparsers.add_parser('giambelli', parents=[common, ring],
                                  help='Check the Giambelli determinant')
        p.add_argument('lam', type=partition, nargs='*',
                       help='Partitions to check, default every one in the box')

        p = subparsers.add_parser('constants', parents=[common, ring],
                                  help='Full structure constant table')
        p.add_argument('--max-degree', action='store', type=int,
                       help='Keep constants with q-degree up to this value')
        p.add_argument('--tsv', action='store', help='Also write the table to this file')

        p = subparsers.add_parser('orbit', parents=[common, box], help='Seidel orbit of lambda')
        p.add_argument('lam', type=partition)

        p = subparsers.add_parser('separate', parents=[common, box],
                                  help='Smallest shift p with |lambda^p| < |mu^p|')
        p.add_argument('lam', type=partition)
        p.add_argument('mu', type=partition)

        p = subparsers.add_parser('certify', parents=[common, ring],
                                  help='Uniqueness certificate of one proof branch')
        p.add_argument('--branch', choices=[deform.POSITIVE, deform.CLASSICAL], required=True)
        p.add_argument('--jobs', action='store', type=int, default=1,
                       help='Worker threads for the per-pair checks')

        p = subparsers.add_parser('deform-check', parents=[common, ring],
                                  help='Negative structure constants of a deformed basis')
        p.add_argument('--coeffs', action='store', required=True,
                       help='File of "<lambda> ; <mu> ; <rational>" lines')

        p = subparsers.add_parser('lg24', parents=[common],
                                  help='The LG(2,4) deformation family')
        p.add_argument('--a', action='store', type=rational, required=True)
        p.add_argument('--b', action='store', type=rational, required=True)
        p.add_argument('--check-region', action='store_true',
                       help='Compare non-negativity with a <= b <= 2a on a grid')
        p.add_argument('--check-assoc', action='store_true', help='Check all 64 triples')

        p = subparsers.add_parser('flags', parents=[common],
                                  help='Seidel orbit of a permutation in GL(n)/B')
        p.add_argument('--n', action='store', type=int, required=True)
        p.add_argument('--w', action='store', type=permutation, required=True,
                       help='One-line notation, e.g. 321654 or 3,2,1,6,5,4')

        self.args = parser.parse_args(argv)


def run(argv=None, out=sys.stdout, err=sys.stderr):
    '''Run one command and return its exit code: 0 on success, 1 when a
    verification fails, 2 on a usage error.
    '''
    command = QHAlphaCommand(out, err)
    try:
        command.process_command_line(argv)
        return command.process()
    except UsageError as e:
        err.write('{}\n'.format(e))
        return 2
    except InternalInconsistency as e:
        err.write('verification failed: {}\n'.format(e))
        return 1
    except QHAlphaError as e:
        err.write('error: {}\n'.format(e))
        return 2
    except SystemExit as e:
        return e.code


if __name__ == '__main__':

    sys.exit(run())
