"""
Tests for the command line interface
"""
import io
import json
import os
import shutil
import sys
import tempfile
import unittest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from groupdet.commands import COMMANDS, CommandType
from groupdet.core.groups import dihedral_group
from groupdet.ui.cli import build_parser, run
from groupdet.utils.settings import Settings


class CliTestCase(unittest.TestCase):
    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()
        self.config = os.path.join(self.tmpdir, "settings.json")

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def invoke(self, *argv):
        stdout, stderr = io.StringIO(), io.StringIO()
        code = run(list(argv) + ['--config', self.config], stdout=stdout, stderr=stderr)
        return code, stdout.getvalue(), stderr.getvalue()

    def invoke_json(self, *argv):
        code, out, err = self.invoke(*argv, '--json')
        return code, json.loads(out), err


class TestParser(unittest.TestCase):
    def test_every_command_is_registered(self):
        parser = build_parser()
        for command_type in CommandType:
            self.assertIn(command_type, COMMANDS)
            args = parser.parse_args(self._minimal(command_type))
            self.assertEqual(args.command, command_type.value)

    @staticmethod
    def _minimal(command_type):
        return {
            CommandType.EVAL: ['eval', 'C2', '1,0'],
            CommandType.FACTOR: ['factor', 'C4', '2', '1,2,3,4'],
            CommandType.ZPOLY: ['zpoly', 'C4', '2'],
            CommandType.CLASSIFY: ['classify', '9'],
            CommandType.WITNESS: ['witness', 'zero'],
            CommandType.CHECK_LEMMA: ['check-lemma', 'all'],
            CommandType.SEARCH: ['search', 'C4'],
            CommandType.VERIFY_SUBSET: ['verify-subset', '--inner', 'x.jsonl', '--outer', 'C4'],
            CommandType.SELFTEST: ['selftest'],
        }[command_type]


class TestAlgebraCommands(CliTestCase):
    def test_eval(self):
        code, out, _ = self.invoke('eval', 'C4', '1,2,3,4')
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "-160")

    def test_eval_checked_json(self):
        code, payload, _ = self.invoke_json('eval', 'C8xC2', '2,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1', '--check')
        self.assertEqual(code, 0)
        self.assertEqual(payload['value'], 33)
        self.assertEqual(payload['checks'], {'bareiss': 33, 'dedekind': 33})

    def test_eval_dihedral(self):
        code, out, _ = self.invoke('eval', 'D16', '0,0,0,0,0,0,1,1,0,1,0,1,1,1,1,1')
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "2048")

    def test_eval_usage_errors(self):
        code, _, err = self.invoke('eval', 'C4', '1,2,3')
        self.assertEqual(code, 2)
        self.assertIn("groupdet eval: error:", err)
        self.assertEqual(self.invoke('eval', 'C4', '1,x,3,4')[0], 2)
        self.assertEqual(self.invoke('eval', 'Q8', '1')[0], 2)
        self.assertEqual(self.invoke('eval', 'D16', '1' + ',0' * 15, '--evaluator', 'dedekind')[0], 2)

    def test_factor(self):
        code, payload, _ = self.invoke_json('factor', 'C4', '2', '1,2,3,4')
        self.assertEqual(code, 0)
        self.assertEqual(payload['product'], -160)
        self.assertEqual(payload['block_determinant'], -160)
        self.assertEqual([row['value'] for row in payload['z']], [-6, -14])

    def test_factor_random_transversals(self):
        code, out, _ = self.invoke('factor', 'C8xC2', '2:0', '1,2,0,0,1,0,3,0,0,1,0,0,2,0,0,1',
                                   '--random-transversals', '--seed', '5')
        self.assertEqual(code, 0)
        self.assertIn("product", out)

    def test_factor_dihedral_block(self):
        code, out, _ = self.invoke('factor', 'D16', '1', '1,2,0,0,1,0,3,0,0,1,0,0,2,0,0,1')
        self.assertEqual(code, 0)
        self.assertIn("block determinant", out)

    def test_zpoly(self):
        code, out, _ = self.invoke('zpoly', 'C4', '2')
        self.assertEqual(code, 0)
        self.assertIn("z[0] = x_0^2 - 2*x_1*x_3 + x_2^2", out)
        self.assertIn("z[2] = 2*x_0*x_2 - x_1^2 - x_3^2", out)

    def test_zpoly_expansion_limit_fails(self):
        code, _, err = self.invoke('zpoly', 'C2^4', 'e')
        self.assertEqual(code, 1)
        self.assertIn("ExpansionLimitError", err)


class TestC8C2Commands(CliTestCase):
    def test_classify_member(self):
        code, out, _ = self.invoke('classify', '2^11*17')
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("34816: member (even-2^11-p1mod8-rep3)"))

    def test_classify_non_member(self):
        code, payload, _ = self.invoke_json('classify', '2048')
        self.assertEqual(code, 0)
        self.assertFalse(payload['member'])
        self.assertEqual(payload['clause'], "excluded-2^11-shape")
        self.assertTrue(payload['certificate_checked'])

    def test_classify_negative_and_bound(self):
        code, payload, _ = self.invoke_json('classify', '-15')
        self.assertEqual(code, 0)
        self.assertTrue(payload['member'])
        code, _, _ = self.invoke('classify', '2^70', '--bound', '1000')
        self.assertEqual(code, 1)

    def test_witness(self):
        code, out, _ = self.invoke('witness', 'small', '1', '3')
        self.assertEqual(code, 0)
        first, second = out.strip().splitlines()
        self.assertEqual(first, "4" + ",3" * 15)
        self.assertIn("D8x2 = 49 (odd-1mod16)", second)

    def test_witness_json(self):
        code, payload, _ = self.invoke_json('witness', 'prime', '3', '17', '0')
        self.assertEqual(code, 0)
        self.assertEqual(payload['value'], 2 ** 11 * 17)
        self.assertEqual(payload['clause'], "even-2^11-p1mod8-rep3")

    def test_witness_errors(self):
        self.assertEqual(self.invoke('witness', 'value', '73')[0], 1)
        self.assertEqual(self.invoke('witness', 'prime', '1', '7', '0')[0], 1)
        self.assertEqual(self.invoke('witness', 'small', '9', '0')[0], 2)
        self.assertEqual(self.invoke('witness', 'zero', '1')[0], 2)

    def test_witness_beyond_classify_bound(self):
        code, out, err = self.invoke('witness', 'small', '1', '99999999999999999999')
        self.assertEqual(code, 0)
        self.assertIn("D8x2 = 1599999999999999999985 (clause unavailable)", out)
        self.assertIn("could not be classified", err)
        code, payload, _ = self.invoke_json('witness', 'small', '1', '99999999999999999999')
        self.assertEqual(code, 0)
        self.assertIsNone(payload['clause'])

    def test_residue_check_command(self):
        code, payload, _ = self.invoke_json('check-lemma', 'parity-collapse')
        self.assertEqual(code, 0)
        self.assertTrue(payload['passed'])
        self.assertEqual(self.invoke('check-lemma', 'bogus')[0], 2)


class TestSearchCommands(CliTestCase):
    def test_search_and_verify(self):
        table = os.path.join(self.tmpdir, "c4.jsonl")
        code, out, _ = self.invoke('search', 'C4', '--box=-1..1', '--out', table)
        self.assertEqual(code, 0)
        self.assertTrue(os.path.exists(table))
        self.assertIn("table written to", out)
        self.assertEqual(Settings(self.config).get_recent_outputs(), [table])

        code, payload, _ = self.invoke_json('verify-subset', '--outer', 'C4')
        self.assertEqual(code, 0)
        self.assertEqual(payload['inner'], table)

        code, payload, _ = self.invoke_json('verify-subset', '--inner', table, '--outer', 'C4')
        self.assertEqual(code, 0)
        self.assertTrue(payload['subset']['passed'])

        code, payload, _ = self.invoke_json('verify-subset', '--inner', table, '--outer', 'true',
                                            '--separate-from', 'C2')
        self.assertEqual(code, 0)
        self.assertIn(payload['separation']['status'], ('separated', 'inconclusive'))

    def test_search_c8c2_consistency(self):
        code, payload, _ = self.invoke_json('search', 'C8xC2', '--box', '0..1')
        self.assertEqual(code, 0)
        self.assertEqual(payload['classifier_excluded'], [])
        self.assertEqual(payload['two_adic_pattern_failures'], [])

    def test_search_usage(self):
        self.assertEqual(self.invoke('search', 'C8xC2', '--box=-2..2')[0], 2)
        self.assertEqual(self.invoke('search', 'C4', '--box', '1..0')[0], 2)
        self.assertEqual(self.invoke('search', 'C4', '--threads', '0')[0], 2)
        self.assertEqual(self.invoke('search', 'C4', '--value-bound=-5')[0], 2)
        self.assertEqual(self.invoke('verify-subset', '--outer', 'C4')[0], 2)
        self.assertEqual(self.invoke('verify-subset', '--inner', os.path.join(self.tmpdir, 'missing.jsonl'),
                                     '--outer', 'C4')[0], 2)

    def test_sampled_search(self):
        code, payload, _ = self.invoke_json('search', 'C8xC2', '--box=-2..2', '--sample', '200', '--seed', '1')
        self.assertEqual(code, 0)
        self.assertEqual(payload['meta']['scanned'], 200)


class TestGeneral(CliTestCase):
    def test_out_writes_json_payload(self):
        path = os.path.join(self.tmpdir, "reports", "eval.json")
        code, _, _ = self.invoke('eval', 'C2', '3,1', '--out', path)
        self.assertEqual(code, 0)
        with open(path) as f:
            self.assertEqual(json.load(f)['value'], 8)

    def test_out_writes_text_report(self):
        path = os.path.join(self.tmpdir, "reports", "eval.txt")
        code, _, _ = self.invoke('eval', 'C2', '3,1', '--out', path)
        self.assertEqual(code, 0)
        with open(path) as f:
            self.assertEqual(f.read(), "8\n")
        self.assertEqual(Settings(self.config).get_recent_outputs(), [path])

    def test_associativity_limit_from_settings(self):
        Settings(self.config).set('cayley.associativity_check_limit', 8)
        dihedral_group.cache_clear()
        code, out, err = self.invoke('eval', 'D16', '0,0,0,0,0,0,1,1,0,1,0,1,1,1,1,1', '--verbose')
        dihedral_group.cache_clear()
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "2048")
        self.assertIn("skipping associativity check for a table of size 16", err)

    def test_missing_command(self):
        stderr = io.StringIO()
        self.assertEqual(run([], stdout=io.StringIO(), stderr=stderr), 2)

    def test_selftest_small(self):
        code, payload, _ = self.invoke_json('selftest', '--samples', '3', '--groups', 'C4,C2^2,D16', '--skip-residues')
        self.assertEqual(code, 0)
        self.assertTrue(payload['passed'])
        self.assertEqual(len(payload['oracles']), 3)


if __name__ == '__main__':
    unittest.main()
