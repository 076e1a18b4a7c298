#!/usr/bin/env python3
"""End-to-end checks of ohbox-cli: exit codes, schemas, worked examples."""

import json
import os
import subprocess
import sys
import unittest
from fractions import Fraction
from pathlib import Path

import jsonschema

CLI = sys.argv[1] if len(sys.argv) > 1 else "build/tools/ohbox-cli"
SCHEMAS = Path(sys.argv[2] if len(sys.argv) > 2 else "schemas")


def run(*args, env=None):
    full_env = {k: v for k, v in os.environ.items() if k != "OHBOX_FORMAT"}
    full_env.update(env or {})
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env)


def run_json(schema, *args):
    proc = run(*args, "--format", "json")
    assert proc.returncode == 0, proc.stderr
    data = json.loads(proc.stdout)
    jsonschema.validate(data, json.loads((SCHEMAS / f"{schema}.schema.json").read_text()))
    return data


class Group(unittest.TestCase):
    def test_classes(self):
        data = run_json("group_classes", "group", "classes")
        self.assertEqual([c["size"] for c in data], [1, 8, 6, 6, 3, 1, 6, 8, 3, 6])
        table = run("group", "classes").stdout.splitlines()
        self.assertEqual(len(table), 11)

    def test_elements(self):
        data = run_json("group_elements", "group", "elements")
        self.assertEqual(sorted(e["index"] for e in data), list(range(48)))

    def test_chartable(self):
        data = run_json("group_chartable", "group", "chartable")
        self.assertEqual([r["irrep"] for r in data["irreps"]][:3], ["A1g", "A2g", "Eg"])

    def test_products(self):
        proc = run("group", "products", "--a", "Eg", "--b", "T1u")
        self.assertEqual(proc.returncode, 0)
        self.assertIn("T1u + T2u", proc.stdout)
        data = run_json("group_products", "group", "products")
        self.assertEqual(len(data), 100)
        self.assertEqual(run("group", "products", "--a", "Xg").returncode, 2)

    def test_bad_flags(self):
        self.assertEqual(run("group", "nonsense").returncode, 2)
        self.assertEqual(run("group", "classes", "--format", "xml").returncode, 2)
        self.assertEqual(run().returncode, 2)


class Spectrum(unittest.TestCase):
    def test_lowest_levels(self):
        data = run_json("spectrum", "spectrum", "--max-shell", "14")
        self.assertEqual([r["shell"] for r in data], [3, 6, 9, 11, 12, 14])
        self.assertEqual([r["irreps"] for r in data],
                         ["A1g", "T1u", "T2g", "A1g + Eg", "A2u", "T1u + T2u"])

    def test_pythagorean(self):
        data = run_json("spectrum", "spectrum", "--max-shell", "54", "--pythagorean-only")
        self.assertEqual([r["shell"] for r in data], [27, 33, 38, 41, 51, 54])
        self.assertEqual([[c["irreps"] for c in r["classes"]] for r in data[-1:]],
                         [["T1u + T2u", "T1u", "T1u"]])
        self.assertEqual(data[0]["multiplicities"]["A1g"], 2)

    def test_below_ground(self):
        proc = run("spectrum", "--max-shell", "2")
        self.assertEqual(proc.returncode, 2)
        self.assertEqual(proc.stdout, "")

    def test_csv(self):
        lines = run("spectrum", "--max-shell", "14", "--format", "csv").stdout.splitlines()
        self.assertEqual(lines[0], "shell,energy_pi2,degeneracy,classes,class_irreps,irreps,pythagorean")
        self.assertEqual(len(lines), 7)
        self.assertEqual(lines[4].split(",")[:3], ["11", "11/4", "3"])

    def test_env_default_format(self):
        proc = run("spectrum", "--max-shell", "14", env={"OHBOX_FORMAT": "json"})
        self.assertEqual(len(json.loads(proc.stdout)), 6)
        self.assertEqual(run("spectrum", "--max-shell", "14", env={"OHBOX_FORMAT": "yaml"}).returncode, 2)


class Project(unittest.TestCase):
    def test_t2u(self):
        data = run_json("project", "project", "--level", "1,2,3", "--irrep", "T2u")
        fns = [f["terms"] for f in data["functions"]]
        self.assertEqual(len(fns), 3)
        self.assertIn({"(1,2,3)": "1", "(3,2,1)": "-1"}, fns)

    def test_zero_multiplicity(self):
        proc = run("project", "--level", "1,1,1", "--irrep", "Eg")
        self.assertEqual(proc.returncode, 3)
        self.assertIn("Eg", proc.stderr)

    def test_malformed(self):
        for level in ["1,2", "0,1,1", "a,b,c", "1,2,3,4", "1,,2"]:
            self.assertEqual(run("project", "--level", level).returncode, 2, level)


class Dynamical(unittest.TestCase):
    def test_135(self):
        data = run_json("dynamical", "dynamical", "--level", "1,3,5", "--op", "deg1")
        pairs = {(r["from"], r["to"]) for r in data}
        self.assertIn(("Eg", "A1g"), pairs)
        self.assertIn(("Eg", "A2g"), pairs)
        six = {"(1,3,5)", "(1,5,3)", "(3,1,5)", "(3,5,1)", "(5,1,3)", "(5,3,1)"}
        for r in data:
            if r["to"] == "A1g":
                self.assertEqual(set(r["function"]), six)
                self.assertEqual(set(r["function"].values()), {"1"})

    def test_bad_op(self):
        self.assertEqual(run("dynamical", "--level", "1,3,5", "--op", "dx").returncode, 2)


class Perturb(unittest.TestCase):
    def test_cross_table(self):
        data = run_json("perturb", "perturb", "--potential", "cross", "--max-shell", "14")
        rows = [(r["shell"], b["irrep"], b["first_order_exact"]) for r in data for b in r["blocks"]]
        self.assertEqual(rows, [
            (3, "A1g", "(pi^4-12*pi^2+36)/(3*pi^4)"),
            (6, "T1u", "(pi^4-9*pi^2+18)/(3*pi^4)"),
            (9, "T2g", "(4*pi^4-24*pi^2+27)/(12*pi^4)"),
            (11, "Eg", "(36*pi^4-304*pi^2+285)/(108*pi^4)"),
            (11, "A1g", "(18*pi^4-152*pi^2+507)/(54*pi^4)"),
            (12, "A2u", "(4*pi^4-12*pi^2+9)/(12*pi^4)"),
            (14, "T2u", "(36*pi^4-196*pi^2-75)/(108*pi^4)"),
            (14, "T1u", "(36*pi^4-196*pi^2+411)/(108*pi^4)"),
        ])
        self.assertEqual([Fraction(r["zeroth_pi2"]) for r in data],
                         [Fraction(3, 4), Fraction(3, 2), Fraction(9, 4), Fraction(11, 4), 3, Fraction(7, 2)])

    def test_lambda_and_harmonic(self):
        data = run_json("perturb", "perturb", "--potential", "harmonic", "--lambda", "0.5", "--max-shell", "30")
        for r in data:
            self.assertEqual(r["lambda"], 0.5)
        self.assertEqual(run("perturb", "--potential", "cubic", "--max-shell", "14").returncode, 2)
        self.assertEqual(run("perturb", "--max-shell", "1").returncode, 2)

    def test_table_has_12_digits(self):
        out = run("perturb", "--max-shell", "3").stdout
        self.assertIn("0.0512403858202", out)


class Ritz(unittest.TestCase):
    def test_ritz(self):
        data = run_json("ritz", "ritz", "--basis", "40")
        self.assertEqual(len(data["levels"]), 40)
        self.assertTrue(data["levels"][0]["converged"])
        self.assertEqual(run("ritz", "--basis", "4").returncode, 2)

    def test_harmonic(self):
        data = run_json("harmonic", "harmonic", "--level", "1,1,3")
        self.assertTrue(data["degenerate"])
        self.assertEqual(len({e["energy"] for e in data["energies"]}), 1)


class Determinism(unittest.TestCase):
    def test_byte_identical(self):
        for args in [("perturb", "--max-shell", "60", "--format", "json"),
                     ("spectrum", "--max-shell", "100"),
                     ("dynamical", "--level", "1,3,5", "--op", "da2g", "--format", "csv")]:
            self.assertEqual(run(*args).stdout, run(*args).stdout)


if __name__ == "__main__":
    unittest.main(argv=sys.argv[:1], verbosity=1)
