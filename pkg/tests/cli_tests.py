#!/usr/bin/env python

import ast
import io
import json
import os
import shutil
import sys
import tempfile
import unittest
parentDir = os.path.join(os.path.dirname(__file__), "../")
sys.path.insert(0, parentDir)

from scripts.qhalpha_cli import run

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), 'golden')


def golden(name):
    with io.open(os.path.join(GOLDEN_DIR, name), 'r') as f:
        return f.read()


class CliTest(unittest.TestCase):
    def run_cli(self, argv):
        out, err = io.StringIO(), io.StringIO()
        code = run(argv, out=out, err=err)
        return code, out.getvalue(), err.getvalue()

    def run_json(self, argv):
        code, out, _ = self.run_cli(argv + ['--json'])
        self.assertEqual(code, 0)
        return json.loads(out)

    def setUp(self):
        self.tmp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp_dir)


class TextOutputTest(CliTest):
    def test_multiply_golden(self):
        code, out, err = self.run_cli(['multiply', '--m', '2', '--k', '2', '--alpha', '1',
                                       '2,1', '1'])
        self.assertEqual(code, 0)
        self.assertEqual(err, '')
        self.assertEqual(out, golden('multiply.txt'))

    def test_orbit_golden(self):
        code, out, _ = self.run_cli(['orbit', '--m', '2', '--k', '2', '-'])
        self.assertEqual(code, 0)
        self.assertEqual(out, golden('orbit.txt'))

    def test_flags_golden(self):
        code, out, _ = self.run_cli(['flags', '--n', '6', '--w', '321654'])
        self.assertEqual(code, 0)
        self.assertEqual(out, golden('flags.txt'))

    def test_output_is_deterministic(self):
        argv = ['constants', '--m', '2', '--k', '3', '--alpha=7/3']
        self.assertEqual(self.run_cli(argv), self.run_cli(argv))

    def test_check_oracle(self):
        code, out, _ = self.run_cli(['multiply', '--m', '2', '--k', '2', '--alpha=7/3',
                                     '2,1', '2,1', '--check-oracle'])
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[-1], 'oracle: agree')

    def test_separate(self):
        code, out, _ = self.run_cli(['separate', '--m', '2', '--k', '2', '2,1', '-'])
        self.assertEqual(code, 0)
        self.assertEqual(out, 'p=1 weights 1 2\n')

    def test_giambelli(self):
        code, out, _ = self.run_cli(['giambelli', '--m', '2', '--k', '2'])
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(len(lines), 6)
        self.assertTrue(all(line.endswith(' pass') for line in lines))

    def test_certify(self):
        code, out, _ = self.run_cli(['certify', '--m', '2', '--k', '2', '--alpha', '1',
                                     '--branch', 'positive', '--jobs', '2'])
        self.assertEqual(code, 0)
        last = out.splitlines()[-1]
        self.assertTrue(last.startswith('positive branch for '))
        verified, total = last.split(': ')[1].split(' records')[0].split(' of ')
        self.assertEqual(verified, total)

        code, out, _ = self.run_cli(['certify', '--m', '2', '--k', '2', '--alpha', '0',
                                     '--branch', 'classical'])
        self.assertEqual(code, 0)
        self.assertNotIn('FAILED', out)

    def test_deform_check(self):
        coeffs = os.path.join(self.tmp_dir, 'coeffs.txt')
        with io.open(coeffs, 'w') as f:
            f.write(u'# t = 1/2\n2,2 ; - ; 1/2\n')
        code, out, _ = self.run_cli(['deform-check', '--m', '2', '--k', '2', '--alpha', '1',
                                     '--coeffs', coeffs])
        self.assertEqual(code, 1)
        self.assertIn('1,1 1,1 - 1 -1/2', out.splitlines())
        self.assertTrue(out.splitlines()[-1].startswith('violations='))

        with io.open(coeffs, 'w') as f:
            f.write(u'\n')
        code, out, _ = self.run_cli(['deform-check', '--m', '2', '--k', '2',
                                     '--coeffs', coeffs])
        self.assertEqual(code, 0)
        self.assertEqual(out, 'violations=0\n')

    def test_lg24(self):
        code, out, _ = self.run_cli(['lg24', '--a', '1', '--b', '3/2', '--check-assoc'])
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], 'tau1*tau1 = 2*tau2')
        self.assertIn('nonnegative=true', lines)
        self.assertIn('change_of_basis=true', lines)
        self.assertIn('associative=true', lines)

        code, out, _ = self.run_cli(['lg24', '--a', '1', '--b', '3'])
        self.assertEqual(code, 0)
        self.assertIn('nonnegative=false witness tau1*tau2 q^1*tau0 -1', out.splitlines())


class JsonOutputTest(CliTest):
    def test_multiply(self):
        payload = self.run_json(['multiply', '--m', '2', '--k', '2', '2,1', '1'])
        self.assertEqual(payload['params'], {'m': 2, 'k': 2, 'alpha': '1'})
        self.assertEqual(payload['product'], [{'d': 0, 'lambda': [2, 2], 'coeff': '1'},
                                              {'d': 1, 'lambda': [], 'coeff': '1'}])

    def test_negative_alpha(self):
        payload = self.run_json(['pieri', '--m', '2', '--k', '2', '--alpha=-1',
                                 '--special', '2', '1,1'])
        self.assertEqual(payload['product'], [{'d': 1, 'lambda': [], 'coeff': '-1'}])

    def test_orbit(self):
        payload = self.run_json(['orbit', '--m', '2', '--k', '2', '-'])
        self.assertEqual(payload['weights'], [0, 2, 4, 2])
        self.assertEqual(payload['sum'], 8)

    def test_flags(self):
        payload = self.run_json(['flags', '--n', '6', '--w', '1,2,3,4,5,6'])
        self.assertEqual(payload['sum'], 35)
        self.assertEqual([row['r'] for row in payload['rows']], list(range(6)))

    def test_certify(self):
        payload = self.run_json(['certify', '--m', '1', '--k', '2', '--branch', 'positive'])
        self.assertTrue(payload['verified'])
        self.assertEqual(payload['branch'], 'positive')


class UsageErrorTest(CliTest):
    def assertUsageError(self, argv):
        code, out, err = self.run_cli(argv)
        self.assertEqual(code, 2)
        self.assertEqual(out, '')
        self.assertNotEqual(err, '')

    def test_out_of_box(self):
        self.assertUsageError(['multiply', '--m', '2', '--k', '2', '3', '1'])

    def test_malformed_partition(self):
        self.assertUsageError(['multiply', '--m', '2', '--k', '2', '2;1', '1'])

    def test_decimal_alpha(self):
        self.assertUsageError(['multiply', '--m', '2', '--k', '2', '--alpha', '1.5', '1', '1'])

    def test_missing_box(self):
        self.assertUsageError(['orbit', '--k', '2', '-'])

    def test_separate_needs_heavier_lambda(self):
        self.assertUsageError(['separate', '--m', '2', '--k', '2', '1', '1'])

    def test_bad_permutation(self):
        self.assertUsageError(['flags', '--n', '3', '--w', '122'])

    def test_missing_coeffs_file(self):
        self.assertUsageError(['deform-check', '--m', '2', '--k', '2',
                               '--coeffs', os.path.join(self.tmp_dir, 'missing.txt')])

    def test_certify_wrong_branch_alpha(self):
        self.assertUsageError(['certify', '--m', '2', '--k', '2', '--alpha', '0',
                               '--branch', 'positive'])


class PackagingTest(unittest.TestCase):
    def setup_keywords(self):
        with io.open(os.path.join(parentDir, 'setup.py'), 'r') as f:
            tree = ast.parse(f.read())
        calls = [node for node in ast.walk(tree) if isinstance(node, ast.Call)
                 and getattr(node.func, 'id', None) == 'setup']
        self.assertEqual(len(calls), 1)
        return {kw.arg: kw.value for kw in calls[0].keywords}

    def test_scripts_are_plain_python(self):
        keywords = self.setup_keywords()
        self.assertNotIn('cmdclass', keywords)
        scripts = ast.literal_eval(keywords['scripts'])
        self.assertEqual(scripts, ['scripts/qhalpha_cli.py'])
        for script in scripts:
            self.assertTrue(os.path.isfile(os.path.join(parentDir, script)))


if __name__ == '__main__':
    unittest.main()
