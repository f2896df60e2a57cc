"""End-to-end tests of the symidx command line: exit codes, outputs, schemas."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

BIN = None
SCHEMAS = None


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("SYMIDX_TOL", None)
    if env:
        full_env.update(env)
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=full_env)


def schema(name):
    with open(os.path.join(SCHEMAS, name)) as f:
        return json.load(f)


class CliTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tmp = tempfile.TemporaryDirectory()

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()

    def emit(self, name):
        out = run("catalog", "emit", name)
        self.assertEqual(out.returncode, 0, out.stderr)
        doc = json.loads(out.stdout)
        jsonschema.validate(doc, schema("homogeneous_space.schema.json"))
        path = os.path.join(self.tmp.name, name.replace(":", "_").replace(",", "_") + ".json")
        with open(path, "w") as f:
            f.write(out.stdout)
        return path

    def index(self, path, *extra):
        out = run("index", "--space", path, *extra)
        self.assertEqual(out.returncode, 0, out.stderr)
        doc = json.loads(out.stdout)
        jsonschema.validate(doc, schema("index_report.schema.json"))
        return doc

    def jacobi(self, path, direction, *extra):
        out = run("jacobi", "--space", path, "--direction", str(direction), *extra)
        self.assertEqual(out.returncode, 0, out.stderr)
        doc = json.loads(out.stdout)
        jsonschema.validate(doc, schema("jacobi_spectrum.schema.json"))
        return doc

    def test_catalog_list(self):
        out = run("catalog", "list")
        self.assertEqual(out.returncode, 0)
        names = out.stdout.split()
        self.assertIn("cp2-centriole", names)
        self.assertIn("so4-so2:lambda,s[,t]", names)

    def test_index_round_sphere(self):
        doc = self.index(self.emit("round-sphere:3"))
        self.assertEqual(doc["transvection"]["index"], 3)
        self.assertEqual(doc["transvection"]["coindex"], 0)

    def test_index_so4_so2(self):
        doc = self.index(self.emit("so4-so2:0.5,1.0"))
        self.assertEqual(doc["transvection"]["index"], 2)
        self.assertEqual(doc["transvection"]["coindex"], 3)
        self.assertTrue(doc["bound"]["equality"])

    def test_index_spin3_augmented(self):
        path = self.emit("spin3:1,1,2")
        # s = 1 lies on both families: I is already parallel before augmenting
        self.assertEqual(self.index(path)["transvection"]["index"], 1)
        doc = self.index(path, "--augment")
        self.assertEqual(doc["transvection"]["index"], 1)
        self.assertEqual(doc["bound"]["lhs"], 6)
        self.assertEqual(doc["bound"]["rhs"], 6)

    def test_augment_ignored_with_isotropy(self):
        out = run("index", "--space", self.emit("round-sphere:2"), "--augment")
        self.assertEqual(out.returncode, 0)
        self.assertIn("warning", out.stderr)

    def test_jacobi_round_sphere(self):
        doc = self.jacobi(self.emit("round-sphere:2"), 0)
        ev = doc["eigenvalues"]
        self.assertEqual(len(ev), 2)
        self.assertLess(abs(ev[0]), 1e-12)
        self.assertGreater(ev[1], 0)
        self.assertTrue(doc["psd"])

    def test_jacobi_so4_so2(self):
        self.assertTrue(self.jacobi(self.emit("so4-so2:0.5,1.0"), 0)["psd"])

    def test_jacobi_spin3_augmented(self):
        doc = self.jacobi(self.emit("spin3:1,1,2"), 0, "--augment")
        self.assertTrue(doc["psd"])
        self.assertLess(abs(doc["eigenvalues"][0]), 1e-12)
        k, v = doc["operator"], doc["direction"]
        kv = [sum(row[j] * v[j] for j in range(len(v))) for row in k]
        self.assertLess(max(abs(x) for x in kv), 1e-12)
        # frozen regression: spectrum (0, 2, 2) on the augmented Berger sphere
        self.assertAlmostEqual(doc["eigenvalues"][1], 2.0, places=10)
        self.assertAlmostEqual(doc["eigenvalues"][2], 2.0, places=10)

    def test_jacobi_direction_out_of_range(self):
        out = run("jacobi", "--space", self.emit("round-sphere:2"), "--direction", "2")
        self.assertEqual(out.returncode, 2)
        self.assertIn("out of range", out.stderr)

    def test_verify_all_pass(self):
        out = run("verify")
        self.assertEqual(out.returncode, 0, out.stderr)
        doc = json.loads(out.stdout)
        jsonschema.validate(doc, schema("verify_report.schema.json"))
        self.assertEqual({o["criterion"] for o in doc}, set(range(1, 9)))
        self.assertTrue(all(o["status"] == "pass" for o in doc))

    def test_verify_fault_injection(self):
        out = run("verify", "--inject-fault", "jacobi")
        self.assertEqual(out.returncode, 1)
        doc = json.loads(out.stdout)
        jsonschema.validate(doc, schema("verify_report.schema.json"))
        failed = [o["check_name"] for o in doc if o["status"] == "fail"]
        self.assertTrue(failed)
        self.assertTrue(all(name.endswith("/jacobi-identity") for name in failed))

    def test_verify_filter(self):
        out = run("verify", "--filter", "spin3")
        self.assertEqual(out.returncode, 0)
        doc = json.loads(out.stdout)
        self.assertTrue(doc)
        self.assertTrue(all("spin3" in o["check_name"] for o in doc))

    def test_verify_ignores_tolerance_override(self):
        out = run("verify", "--filter", "round-sphere:2/index", env={"SYMIDX_TOL": "0.5"})
        self.assertEqual(out.returncode, 0)

    def sweep(self, *args):
        out = run("sweep", *args)
        self.assertEqual(out.returncode, 0, out.stderr)
        lines = out.stdout.splitlines()
        self.assertEqual(lines[0], "lambda,s,t,rho,index,coindex,dim_transvection,psd_ok,bound_lhs,bound_rhs,equality")
        return out.stdout, [dict(zip(lines[0].split(","), l.split(","))) for l in lines[1:]]

    def test_sweep_coupled(self):
        _, rows = self.sweep("--family", "so4-so2", "--lambda", "0.25:1.0:0.25", "--s", "0.4:1.6:0.4", "--coupled")
        self.assertEqual(len(rows), 16)
        self.assertTrue(all(r["index"] == "2" and r["equality"] == "true" for r in rows))

    def test_sweep_free_t(self):
        _, rows = self.sweep("--family", "so4-so2", "--lambda", "0.5", "--s", "0.5", "--t", "0.7:1.1:0.2")
        self.assertEqual([r["index"] for r in rows], ["0", "0", "0"])

    def test_sweep_berger(self):
        _, rows = self.sweep("--family", "spin3-berger", "--t", "0.5:3.0:0.5")
        self.assertEqual([r["t"] for r in rows], ["0.5", "1", "1.5", "2.5", "3"])
        self.assertTrue(all(r["index"] == "1" for r in rows))

    def test_sweep_byte_identical(self):
        args = ("--family", "product-spheres", "--rho", "0.5:2:0.5")
        first, _ = self.sweep(*args)
        second, _ = self.sweep(*args)
        self.assertEqual(first, second)
        path = os.path.join(self.tmp.name, "sweep.csv")
        out = run("sweep", *args, "--out", path)
        self.assertEqual(out.returncode, 0)
        self.assertEqual(out.stdout, "")
        with open(path, "rb") as f:
            self.assertEqual(f.read(), first.encode())

    def test_sweep_errors(self):
        self.assertEqual(run("sweep", "--family", "so4-so2", "--lambda", "1:2", "--s", "1", "--coupled").returncode, 2)
        self.assertEqual(run("sweep", "--family", "so4-so2", "--lambda", "1", "--s", "1").returncode, 2)
        self.assertEqual(run("sweep", "--family", "mystery", "--s", "1").returncode, 2)

    def test_lambda_warning(self):
        out = run("sweep", "--family", "so4-so2", "--lambda", "2", "--s", "1", "--coupled")
        self.assertEqual(out.returncode, 0)
        self.assertIn("warning", out.stderr)

    def test_usage_errors(self):
        self.assertEqual(run().returncode, 2)
        self.assertEqual(run("frobnicate").returncode, 2)
        self.assertEqual(run("index").returncode, 2)
        self.assertEqual(run("catalog", "emit", "torus:1").returncode, 2)
        self.assertEqual(run("--help").returncode, 0)

    def test_tolerance_overrides(self):
        path = self.emit("round-sphere:2")
        self.assertEqual(run("--tol", "1e-6", "index", "--space", path).returncode, 0)
        self.assertEqual(run("--tol", "-1", "index", "--space", path).returncode, 2)
        self.assertEqual(run("index", "--space", path, env={"SYMIDX_TOL": "abc"}).returncode, 2)
        self.assertEqual(run("index", "--space", path, env={"SYMIDX_TOL": "1e-7"}).returncode, 0)

    def write(self, name, text):
        path = os.path.join(self.tmp.name, name)
        with open(path, "w") as f:
            f.write(text)
        return path

    def test_parse_errors(self):
        out = run("index", "--space", self.write("broken.json", "{"))
        self.assertEqual(out.returncode, 2)
        self.assertIn("parse error", out.stderr)
        doc = {"algebra": "so3", "isotropy": [[0, 0, 1]], "metric": [[1, 0], [0, "x"]]}
        out = run("index", "--space", self.write("bad.json", json.dumps(doc)))
        self.assertEqual(out.returncode, 2)
        self.assertIn("/metric/1/1", out.stderr)
        self.assertEqual(run("index", "--space", os.path.join(self.tmp.name, "missing.json")).returncode, 2)

    def test_construction_error(self):
        doc = {"algebra": "so3", "isotropy": [[0, 0, 1]], "metric": [[1, 0], [0, 2]]}
        out = run("index", "--space", self.write("aniso.json", json.dumps(doc)))
        self.assertEqual(out.returncode, 2)
        self.assertIn("isotropy-invariant", out.stderr)
        self.assertIn("residual", out.stderr)


if __name__ == "__main__":
    BIN, SCHEMAS = sys.argv[1], sys.argv[2]
    unittest.main(argv=[sys.argv[0], "-v"])
