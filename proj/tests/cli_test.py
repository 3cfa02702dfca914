"""Exit codes, determinism and schema conformance of the acalg command line."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

BIN = DATA = SCHEMA = None


def run(*args):
    p = subprocess.run([BIN, *args], capture_output=True, text=True, timeout=600)
    return p.returncode, p.stdout, p.stderr


def doc(name):
    return os.path.join(DATA, name)


class ExitCodes(unittest.TestCase):
    def test_classify_h3_ok(self):
        code, out, _ = run("classify", doc("a9.json"))
        self.assertEqual(code, 0)
        self.assertIn("family: A9", out)
        self.assertIn("alias: h3", out)

    def test_check_invariants_derivations_ok(self):
        self.assertEqual(run("check", doc("a9.json"))[0], 0)
        code, out, _ = run("invariants", doc("a2_5.json"))
        self.assertEqual(code, 0)
        self.assertIn("dim_sq: 3", out)
        code, out, _ = run("derivations", doc("a9.json"))
        self.assertEqual(code, 0)
        self.assertIn("dim Der: 6", out)

    def test_iso(self):
        code, out, _ = run("iso", doc("a9.json"), doc("h3_scaled.json"))
        self.assertEqual(code, 0)
        self.assertIn("isomorphic: yes", out)
        code, out, _ = run("iso", doc("a9.json"), doc("a2_5.json"))
        self.assertEqual(code, 0)
        self.assertIn("isomorphic: no", out)

    def test_square_violation_is_math_error(self):
        code, _, err = run("check", doc("bad_square.json"))
        self.assertEqual(code, 3)
        self.assertIn("a^2 = 0", err)
        self.assertIn("(1,1)", err)

    def test_missing_root_is_math_error(self):
        code, _, err = run("classify", doc("gf3_no_root.json"))
        self.assertEqual(code, 3)
        self.assertIn("no square root", err)

    def test_input_errors(self):
        self.assertEqual(run("check", doc("malformed.json"))[0], 1)
        self.assertEqual(run("check", doc("no_such_file.json"))[0], 1)
        self.assertEqual(run("frobnicate")[0], 1)
        self.assertEqual(run()[0], 1)
        self.assertEqual(run("orbits", "--prime", "7")[0], 1)
        self.assertEqual(run("orbits", "--prime", "5")[0], 1)

    def test_audit_findings_exit_two(self):
        with tempfile.TemporaryDirectory() as d:
            a, b = os.path.join(d, "a.json"), os.path.join(d, "b.json")
            r1 = run("verify-paper", "--out", a)
            r2 = run("verify-paper", "--out", b)
            self.assertEqual(r1[0], 2)
            self.assertEqual(r1[1], r2[1])
            with open(a, "rb") as fa, open(b, "rb") as fb:
                self.assertEqual(fa.read(), fb.read())
            with open(a) as f:
                report = json.load(f)
            jsonschema.validate(report, SCHEMA)
            self.assertEqual(len(report["sections"]), 8)

    def test_compare_k(self):
        with tempfile.TemporaryDirectory() as d:
            out = os.path.join(d, "k.json")
            code, stdout, _ = run("compare-k", "--out", out)
            self.assertEqual(code, 0)
            with open(out) as f:
                report = json.load(f)
            jsonschema.validate(report, SCHEMA)
            self.assertEqual(report["sections"]["k_comparison"]["coverage"]["verdict"], "not complete")
            self.assertEqual(stdout, run("compare-k")[1])

    def test_orbits_cache(self):
        with tempfile.TemporaryDirectory() as d:
            cache = os.path.join(d, "orbits3.bin")
            a, b = os.path.join(d, "a.json"), os.path.join(d, "b.json")
            first = run("orbits", "--prime", "3", "--cache", cache, "--out", a)
            second = run("orbits", "--prime", "3", "--cache", cache, "--out", b)
            self.assertEqual(first[0], 0)
            self.assertIn("orbits: 16", first[1])
            self.assertEqual(first[1], second[1])
            with open(cache, "rb") as f:
                self.assertEqual(f.read(8), b"ACALGORB")
            with open(a, "rb") as fa, open(b, "rb") as fb:
                self.assertEqual(fa.read(), fb.read())

    def test_unwritable_output(self):
        self.assertEqual(run("compare-k", "--out", "/nonexistent/dir/k.json")[0], 1)


if __name__ == "__main__":
    BIN, DATA, schema_path = sys.argv[1:4]
    with open(schema_path) as f:
        SCHEMA = json.load(f)
    unittest.main(argv=sys.argv[:1], verbosity=2)
