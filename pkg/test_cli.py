"""
End-to-end tests for the polarbox command line
"""
import os
import shutil
import tempfile
import unittest
from io import StringIO

import pandas as pd
from parameterized import parameterized

from config import DEFAULT_CAP, EXIT_CODES, LIFTCOMPARE_COLUMNS
from polarbox_app import main, parse_config
from representation.file_manager import rep_files
from representation.models import canonicalize, reps_equal
from representation.rep_format import parse_rep
from test_representation import DATA_DIR, EX1_V, EX1_VQ, EX2_H


def data_file(name):
    return os.path.join(DATA_DIR, name)


def run(*argv):
    stdout, stderr = StringIO(), StringIO()
    code = main(list(argv), stdout, stderr)
    return code, stdout.getvalue(), stderr.getvalue()


class CliTestCase(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def tmp_file(self, name, text=None):
        path = os.path.join(self.tmp, name)
        if text is not None:
            with open(path, 'w') as f:
                f.write(text)
        return path


class TestExample1(CliTestCase):
    def test_convert_polar_convert(self):
        code, out, err = run("convert", data_file('example1_wedge.ine'))
        self.assertEqual(code, EXIT_CODES['ok'])
        self.assertTrue(reps_equal(parse_rep(out), EX1_V))
        self.assertIn("feasible bases: 3", err)

        polar_file = self.tmp_file('wedge_polar.ine')
        code, _, _ = run("polar", data_file('example1_wedge.ine'), "-o", polar_file)
        self.assertEqual(code, EXIT_CODES['ok'])

        code, out, _ = run("convert", polar_file)
        self.assertEqual(code, EXIT_CODES['ok'])
        self.assertTrue(reps_equal(parse_rep(out), EX1_VQ))

    def test_symcheck_not_symmetric(self):
        code, out, _ = run("symcheck", data_file('example1_wedge.ext'))
        self.assertEqual(code, EXIT_CODES['not_symmetric'])
        self.assertIn("HV-symmetric: no\n", out)
        self.assertIn("reason: OriginOutside\n", out)
        self.assertIn("conditions (a,b,c,d): (false,false,false,false)\n", out)
        self.assertIn("witness facet: -1 0 1\n", out)

    def test_certify_outside(self):
        code, out, _ = run("certify", data_file('example1_wedge.ext'), "0", "0")
        self.assertEqual(code, EXIT_CODES['ok'])
        self.assertEqual(out, "not a member\n")

    def test_bipolar_is_the_quadrant(self):
        code, out, _ = run("bipolar", data_file('example1_wedge.ine'))
        self.assertEqual(code, EXIT_CODES['ok'])
        self.assertEqual(parse_rep(out), canonicalize(EX1_VQ))


class TestExample2(CliTestCase):
    def test_convert_direct(self):
        code, out, err = run("convert", data_file('example2_pyramid.ext'), "--direct")
        self.assertEqual(code, EXIT_CODES['ok'])
        h = parse_rep(out)
        self.assertEqual(h.rows.n_rows, 4)
        self.assertEqual(h.rows, canonicalize(EX2_H).rows)
        self.assertIn("route: direct", err)

    def test_convert_lifted_matches(self):
        _, lifted, _ = run("convert", data_file('example2_pyramid.ext'))
        _, direct, _ = run("convert", data_file('example2_pyramid.ext'), "--direct")
        self.assertEqual(lifted, direct)

    def test_symcheck_symmetric(self):
        code, out, _ = run("symcheck", data_file('example2_pyramid.ext'))
        self.assertEqual(code, EXIT_CODES['ok'])
        self.assertIn("HV-symmetric: yes\n", out)
        self.assertIn("shape: polytope\n", out)
        self.assertIn("conditions (a,b,c,d): (true,true,true,true)\n", out)
        self.assertNotIn("witness facet", out)

    def test_symcheck_accepts_h_file(self):
        code, out, _ = run("symcheck", data_file('example2_pyramid.ine'))
        self.assertEqual(code, EXIT_CODES['ok'])
        self.assertIn("HV-symmetric: yes\n", out)

    def test_certify_origin(self):
        code, out, _ = run("certify", data_file('example2_pyramid.ext'), "0", "0", "0")
        self.assertEqual(code, EXIT_CODES['ok'])
        self.assertEqual(out, "lambda = (0, 1/2, 1/2, 0)\nmu = ()\n")

    def test_certify_negative_coordinates(self):
        code, out, _ = run("certify", data_file('example2_pyramid.ext'), "-1", "0", "0")
        self.assertEqual(code, EXIT_CODES['ok'])
        self.assertEqual(out, "lambda = (0, 1, 0, 0)\nmu = ()\n")

    def test_save_beside_input(self):
        source = self.tmp_file('pyramid.ext')
        shutil.copy(data_file('example2_pyramid.ext'), source)
        code, out, _ = run("convert", source, "--save")
        self.assertEqual(code, EXIT_CODES['ok'])
        self.assertEqual(out, "")
        self.assertTrue(reps_equal(rep_files.load_rep(self.tmp_file('pyramid.ine')), EX2_H))

    def test_deterministic_output(self):
        first = run("convert", data_file('example2_pyramid.ext'))
        second = run("convert", data_file('example2_pyramid.ext'))
        self.assertEqual(first, second)


class TestLiftCompare(CliTestCase):
    # cube: each square facet has four nonsingular triples of its vertices
    # pyramid: 1 + 1 for the two vertices of Q, 3 + 3 for its two rays
    @parameterized.expand([
        ("pyramid", 'example2_pyramid.ext', 4, 4, 8),
        ("cube", 'cube.ext', 6, 24, 24),
    ])
    def test_routes_agree_and_counts_match(self, _, name, rows, lifted_bases, direct_bases):
        csv_path = self.tmp_file('compare.csv')
        code, out, err = run("liftcompare", data_file(name), "--csv", csv_path)
        self.assertEqual(code, EXIT_CODES['ok'])
        self.assertIn(f"H-representations identical: yes ({rows} rows)", err)
        self.assertIn("lifted", out)

        table = pd.read_csv(csv_path)
        self.assertEqual(list(table.columns), LIFTCOMPARE_COLUMNS)
        self.assertEqual(list(table['route']), ['lifted', 'direct'])
        self.assertEqual(list(table['output_rows']), [rows, rows])
        self.assertEqual(list(table['feasible_bases']), [lifted_bases, direct_bases])


class TestSuite(CliTestCase):
    def test_small_suite(self):
        code, out, _ = run("suite", "--count", "4", "--seed", "7")
        self.assertEqual(code, EXIT_CODES['ok'])
        lines = out.splitlines()
        self.assertIn("instances: 4", lines)
        self.assertIn("symmetric: 2", lines)
        self.assertIn("not_symmetric: 2", lines)
        self.assertIn("inconsistent: 0", lines)

    def test_same_seed_same_output(self):
        self.assertEqual(run("suite", "--count", "4"), run("suite", "--count", "4"))


class TestExitCodes(CliTestCase):
    def test_missing_file(self):
        code, _, _ = run("convert", self.tmp_file('missing.ine'))
        self.assertEqual(code, EXIT_CODES['parse'])

    def test_malformed_file(self):
        path = self.tmp_file('bad.ext', "V-representation\nbegin\n1 2 rational\n1 x\nend\n")
        code, _, _ = run("convert", path)
        self.assertEqual(code, EXIT_CODES['parse'])

    def test_certify_wrong_dimension(self):
        code, _, _ = run("certify", data_file('example2_pyramid.ext'), "0", "0")
        self.assertEqual(code, EXIT_CODES['parse'])

    def test_certify_bad_token(self):
        code, _, _ = run("certify", data_file('example2_pyramid.ext'), "0", "0.5", "0")
        self.assertEqual(code, EXIT_CODES['parse'])

    def test_infeasible(self):
        path = self.tmp_file('empty.ine', "H-representation\nbegin\n2 2 rational\n-1 1\n0 -1\nend\n")
        code, _, _ = run("convert", path)
        self.assertEqual(code, EXIT_CODES['infeasible'])

    def test_not_pointed(self):
        path = self.tmp_file('halfplane.ine', "H-representation\nbegin\n1 3 rational\n0 1 1\nend\n")
        code, _, _ = run("convert", path)
        self.assertEqual(code, EXIT_CODES['not_pointed'])

    @parameterized.expand([
        ("convert", "convert"),
        ("convert_direct", "convert", "--direct"),
        ("symcheck", "symcheck"),
        ("polar", "polar"),
    ])
    def test_line_in_v_file_refused(self, _, command, *flags):
        path = self.tmp_file('half_plane.ext', "V-representation\nbegin\n4 3 rational\n1 0 0\n0 1 0\n0 -1 0\n0 0 1\nend\n")
        code, out, _ = run(command, path, *flags)
        self.assertEqual(code, EXIT_CODES['not_pointed'])
        self.assertEqual(out, "")

    def test_direct_route_needs_origin(self):
        code, _, _ = run("convert", data_file('example1_wedge.ext'), "--direct")
        self.assertEqual(code, EXIT_CODES['origin_not_contained'])

    def test_liftcompare_needs_origin(self):
        code, _, _ = run("liftcompare", data_file('example1_wedge.ext'))
        self.assertEqual(code, EXIT_CODES['origin_not_contained'])

    def test_cap_exceeded(self):
        code, _, _ = run("liftcompare", data_file('cube.ext'), "--cap", "1")
        self.assertEqual(code, EXIT_CODES['cap_exceeded'])


class TestParseConfig(unittest.TestCase):
    def test_global_flags_before_command(self):
        config = parse_config(["--cap", "10", "--seed", "3", "convert", "x.ine"])
        self.assertEqual((config.cap, config.seed), (10, 3))

    def test_global_flags_after_command(self):
        config = parse_config(["convert", "x.ine", "--cap", "10", "-vv"])
        self.assertEqual((config.cap, config.verbose), (10, 2))

    def test_defaults(self):
        config = parse_config(["symcheck", "x.ext"])
        self.assertEqual(config.cap, DEFAULT_CAP)
        self.assertFalse(config.direct)

    def test_unknown_command_rejected(self):
        with self.assertRaises(SystemExit):
            parse_config(["lint", "x.ext"])


if __name__ == "__main__":
    unittest.main()
