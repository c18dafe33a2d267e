#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""End-to-end checks of the koecher binary: exit codes, reports, schema."""

import csv
import io
import json
import os
import re
import subprocess
import sys
import tempfile
import unittest

import jsonschema

BINARY = None
SCHEMA = None

ELAPSED = re.compile(r'("(?:elapsed|accelerated|direct)_ms":|elapsed_ms +)\d+')


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("KOECHER_DIGITS", None)
    if env:
        full_env.update(env)
    p = subprocess.run([BINARY, *args], capture_output=True, text=True, env=full_env, timeout=300)
    return p.returncode, p.stdout, p.stderr


def strip_timing(text):
    if text.startswith("identity_id,"):
        rows = list(csv.reader(io.StringIO(text)))
        col = rows[0].index("elapsed_ms")
        for row in rows[1:]:
            row[col] = "_"
        return rows
    return ELAPSED.sub(r"\1_", text)


class ExitCodes(unittest.TestCase):
    def test_pass(self):
        self.assertEqual(run("verify", "eq1.1")[0], 0)
        self.assertEqual(run("verify", "thm51", "c=2", "--digits", "30")[0], 0)

    def test_excluded_case(self):
        code, _, err = run("verify", "thm41", "n=2")
        self.assertEqual(code, 1)
        self.assertIn("excluded", err)

    def test_usage(self):
        self.assertEqual(run("verify", "eq9.9")[0], 1)
        self.assertEqual(run("verify", "eq1.3", "x=2")[0], 1)
        self.assertEqual(run("verify", "eq1.1", "--digits", "abc")[0], 1)
        self.assertEqual(run("verify", "eq1.1", "--json", "--csv")[0], 1)
        self.assertEqual(run("table", "pc", "--cmax", "13")[0], 1)
        self.assertEqual(run("expand", "cubic", "1")[0], 1)
        self.assertEqual(run("bench", "lemma43")[0], 1)
        self.assertEqual(run()[0], 1)

    def test_accuracy(self):
        # terms of order 1/k^2 cannot reach 30 digits within the term budget
        self.assertEqual(run("expand", "linear:c=0", "1", "--order", "1")[0], 3)

    def test_help(self):
        self.assertEqual(run("--help")[0], 0)


class Reports(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        with open(SCHEMA, encoding="utf-8") as f:
            cls.schema = json.load(f)

    def test_all_reports_validate(self):
        code, out, _ = run("verify", "--all", "--json")
        self.assertEqual(code, 0)
        lines = out.splitlines()
        _, listed, _ = run("list", "--json")
        ids = [json.loads(l)["identity_id"] for l in listed.splitlines()]
        self.assertEqual([json.loads(l)["identity_id"] for l in lines], ids)
        for line in lines:
            report = json.loads(line)
            jsonschema.validate(report, self.schema)
            self.assertEqual(list(report), self.schema["required"])
            self.assertTrue(report["pass"])

    def test_pass_matches_tolerance(self):
        _, out, _ = run("verify", "--all", "--json", "--digits", "20")
        for line in out.splitlines():
            r = json.loads(line)
            self.assertEqual(r["pass"], float(r["abs_diff"]) <= float(r["tolerance"]), r["identity_id"])

    def test_reruns_identical(self):
        for args in (
            ("verify", "--all", "--json"),
            ("verify", "--all", "--csv"),
            ("verify", "thm42", "z=3/4"),
            ("table", "pc", "--cmax", "4", "--csv"),
            ("expand", "halfsq", "0", "--order", "2"),
            ("bench", "eq1.1", "--json"),
        ):
            first, second = run(*args), run(*args)
            self.assertEqual(first[0], second[0], args)
            self.assertEqual(strip_timing(first[1]), strip_timing(second[1]), args)

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "report.json")
            code, out, _ = run("verify", "eq6.3", "--json", "--out", path)
            self.assertEqual(code, 0)
            self.assertEqual(out, "")
            with open(path, encoding="utf-8") as f:
                written = f.read()
            self.assertEqual(strip_timing(written), strip_timing(run("verify", "eq6.3", "--json")[1]))

    def test_digits_env(self):
        _, out, _ = run("verify", "eq1.1", "--json", env={"KOECHER_DIGITS": "20"})
        self.assertEqual(json.loads(out)["digits"], 20)
        self.assertEqual(json.loads(out)["tolerance"], "1.00e-20")
        _, out, _ = run("verify", "eq1.1", "--json", "--digits", "40", env={"KOECHER_DIGITS": "20"})
        self.assertEqual(json.loads(out)["digits"], 40)

    def test_csv_shape(self):
        _, out, _ = run("verify", "--all", "--csv")
        rows = out.splitlines()
        self.assertEqual(len(rows), 1 + len(run("list", "--json")[1].splitlines()))
        self.assertTrue(rows[0].startswith("identity_id,"))

    def test_table(self):
        _, out, _ = run("table", "pc", "--cmax", "1")
        self.assertIn("  5\n", out)
        self.assertIn("  2,4,12,5\n", out)


if __name__ == "__main__":
    BINARY, SCHEMA = sys.argv[1], sys.argv[2]
    unittest.main(argv=sys.argv[:1], verbosity=2)
