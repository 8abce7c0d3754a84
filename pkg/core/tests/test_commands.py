import csv
import io
import json
import os
import tempfile

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

BELL_JSON = {
    "layout": {"labels": ["A", "B", "C"], "dims": [2, 2, 2]},
    "frame": "C",
    "gates": [
        {"builtin": "H", "support": ["A"]},
        {"builtin": "CNOT", "support": ["A", "B"]},
    ],
}


def run(*args):
    out = io.StringIO()
    call_command(*args, stdout=out, stderr=io.StringIO())
    return out.getvalue()


def run_json(*args):
    return json.loads(run(*args))


class CommandTestCase(SimpleTestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def path(self, name):
        return os.path.join(self.tmp.name, name)

    def write(self, name, data):
        with open(self.path(name), "w") as handle:
            handle.write(data if isinstance(data, str) else json.dumps(data))
        return self.path(name)

    def assertExitCode(self, code, *args):
        with self.assertRaises(CommandError) as cm:
            run(*args)
        self.assertEqual(cm.exception.returncode, code)
        return cm.exception


class ClassifyCommandTests(CommandTestCase):

    def test_hadamard_is_entangling(self):
        data = run_json("classify", "--group", "2", "--gate", "H")
        self.assertEqual(data["class"], "Entangling")
        self.assertIsNone(data["character"])
        self.assertEqual(data["orbit_size"], 2)

    def test_rotation_is_robust(self):
        data = run_json("classify", "--group", "2", "--gate", "RX(1.0)")
        self.assertEqual(data["class"], "FrameRobust")
        self.assertEqual(data["orbit_size"], 1)

    def test_z_is_phase_sector(self):
        data = run_json("classify", "--group", "2", "--gate", "Z")
        self.assertEqual(data["class"], "PhaseSector")
        self.assertEqual(data["character"]["label"], [1])
        self.assertAlmostEqual(data["character"]["values"][1]["re"], -1.0)

    def test_matrix_json(self):
        data = run_json("classify", "--gate", "[[0, 1], [1, 0]]")
        self.assertEqual(data["gate"], "U")
        self.assertEqual(data["class"], "FrameRobust")

    def test_csv(self):
        rows = list(csv.reader(io.StringIO(run("classify", "--gate", "Z", "--format", "csv"))))
        self.assertEqual(rows[0], ["group", "gate", "class", "character", "orbit_size"])
        self.assertEqual(rows[1][2], "PhaseSector")

    def test_malformed_matrix(self):
        error = self.assertExitCode(2, "classify", "--gate", "[[1, 0], [0")
        self.assertIn("--gate", str(error))

    def test_non_unitary_matrix(self):
        self.assertExitCode(2, "classify", "--gate", "[[1, 1], [0, 1]]")

    def test_unknown_gate(self):
        self.assertExitCode(2, "classify", "--gate", "FOO")

    def test_bad_group(self):
        self.assertExitCode(2, "classify", "--group", "two", "--gate", "H")

    def test_empty_group_factor(self):
        self.assertExitCode(2, "classify", "--group", "2,,2", "--gate", "H")


class TransformCommandTests(CommandTestCase):

    def test_hadamard_to_frame_b(self):
        data = run_json("transform", "--old", "C", "--new", "B", "--gate", "H", "--support", "A")
        controlled = data["controlled"]
        self.assertEqual(controlled["control"], "C")
        self.assertEqual(controlled["target"], ["A"])
        self.assertEqual(controlled["distinct_blocks"], 2)
        self.assertLess(data["residual"], 1e-10)

    def test_z3_layout(self):
        data = run_json("transform", "--group", "3", "--layout", "F,G,R", "--old", "F", "--new", "G",
                        "--gate", "[[0,0,1],[1,0,0],[0,1,0]]", "--support", "R")
        self.assertEqual(len(data["controlled"]["blocks"]), 3)
        self.assertLess(data["residual"], 1e-10)

    def test_frame_in_support(self):
        self.assertExitCode(2, "transform", "--old", "C", "--new", "B", "--gate", "H", "--support", "B")

    def test_unknown_label(self):
        self.assertExitCode(2, "transform", "--old", "C", "--new", "D", "--gate", "H", "--support", "A")


class CompileCommandTests(CommandTestCase):

    def read(self, name):
        with open(self.path(name)) as handle:
            return json.load(handle)

    def test_bell_to_frame_b(self):
        source = self.write("bell.json", BELL_JSON)
        circuit = run_json("compile", "--in", source, "--to-frame", "B", "--report", self.path("report.json"))
        report = self.read("report.json")
        self.assertEqual(report["n_ent"], {"C": 1, "B": 2})
        self.assertEqual(report["n_generic_locals"], 1)
        self.assertEqual(report["bound"], 2)
        self.assertTrue(report["saturated"])
        self.assertEqual(set(circuit), {"layout", "frame", "gates"})
        self.assertEqual(circuit["frame"], "B")

    def test_report_goes_to_stderr_without_report_file(self):
        source = self.write("bell.json", BELL_JSON)
        out, err = io.StringIO(), io.StringIO()
        call_command("compile", "--in", source, "--to-frame", "B", stdout=out, stderr=err)
        self.assertEqual(json.loads(err.getvalue())["n_ent"], {"C": 1, "B": 2})
        self.assertEqual(json.loads(out.getvalue())["frame"], "B")

    def test_writes_compiled_circuit(self):
        source = self.write("bell.json", BELL_JSON)
        run("compile", "--in", source, "--to-frame", "B", "--out", self.path("compiled.json"))
        compiled = self.read("compiled.json")
        self.assertEqual(compiled["layout"]["labels"], ["A", "B", "C"])
        self.assertTrue(all(gate["origin"]["kind"] == "compiled" for gate in compiled["gates"]))

    def test_compiled_circuit_compiles_again(self):
        source = self.write("bell.json", BELL_JSON)
        run("compile", "--in", source, "--to-frame", "B", "--out", self.path("in_b.json"))
        back = run_json("compile", "--in", self.path("in_b.json"), "--to-frame", "C",
                        "--report", self.path("report.json"))
        self.assertEqual(back["frame"], "C")
        self.assertTrue(all("C" not in gate["support"] for gate in back["gates"]))
        self.assertEqual(self.read("report.json")["n_ent"]["B"], 2)

    def test_empty_circuit(self):
        source = self.write("empty.json", {**BELL_JSON, "gates": []})
        circuit = run_json("compile", "--in", source, "--to-frame", "A", "--report", self.path("report.json"))
        self.assertEqual(circuit["gates"], [])
        self.assertEqual(self.read("report.json")["n_ent"], {"C": 0, "A": 0})

    def test_gate_on_frame(self):
        source = self.write("bad.json", {**BELL_JSON, "gates": [{"builtin": "H", "support": ["C"]}]})
        self.assertExitCode(2, "compile", "--in", source, "--to-frame", "B")

    def test_missing_file(self):
        self.assertExitCode(2, "compile", "--in", self.path("nope.json"), "--to-frame", "B")

    def test_invalid_json(self):
        source = self.write("broken.json", "{not json")
        self.assertExitCode(2, "compile", "--in", source, "--to-frame", "B")

    def test_invalid_circuit(self):
        source = self.write("bad.json", {**BELL_JSON, "frame": "Q"})
        self.assertExitCode(2, "compile", "--in", source, "--to-frame", "B")

    def test_csv_not_available(self):
        source = self.write("bell.json", BELL_JSON)
        self.assertExitCode(2, "compile", "--in", source, "--to-frame", "B", "--format", "csv")


class ProtocolCommandTests(CommandTestCase):

    def test_exact_mode(self):
        data = run_json("protocol", "--shots", "0")
        table = {row["frame"]: row for row in data["table"]}
        self.assertAlmostEqual(table["A"]["D2"], 1.0, delta=1e-10)
        self.assertAlmostEqual(table["A"]["C2"], 0.0, delta=1e-10)
        self.assertAlmostEqual(table["B"]["D2"], 0.0, delta=1e-10)
        self.assertAlmostEqual(table["B"]["C2"], 1.0, delta=1e-10)
        self.assertLess(abs(data["invariant_delta"]), 1e-12)

    def test_seeded_runs_match(self):
        args = ("protocol", "--shots", "200", "--seed", "5")
        self.assertEqual(run(*args), run(*args))

    def test_csv(self):
        rows = list(csv.reader(io.StringIO(run("protocol", "--shots", "0", "--format", "csv"))))
        self.assertEqual(rows[0], ["frame", "C2", "D2", "P2", "D2_purity", "sum"])
        self.assertEqual([row[0] for row in rows[1:]], ["A", "B"])
        self.assertEqual(rows[1][-1], "1.000000")

    def test_theta(self):
        data = run_json("protocol", "--shots", "0", "--theta", "pi/3")
        self.assertAlmostEqual(data["theta"], 1.0471975511965976)

    def test_bad_noise(self):
        self.assertExitCode(2, "protocol", "--noise", "p2q=7")

    def test_negative_shots(self):
        self.assertExitCode(2, "protocol", "--shots", "-1")

    def test_bad_theta(self):
        self.assertExitCode(2, "protocol", "--theta", "half")

    def test_strict_mode(self):
        self.assertExitCode(3, "protocol", "--shots", "100", "--seed", "2", "--strict")


class SweepCommandTests(CommandTestCase):

    def test_default_family_csv(self):
        rows = list(csv.reader(io.StringIO(run("sweep", "--format", "csv"))))
        self.assertEqual(rows[0], ["lambda", "frame", "C2", "D2", "P2", "D2_purity", "sum"])
        self.assertEqual(len(rows), 1 + 33 * 3)
        self.assertTrue(all(row[-1] == "1.000000" for row in rows[1:]))

    def test_json(self):
        data = run_json("sweep", "--grid", "0:pi/2:5")
        self.assertEqual(len(data["rows"]), 5)
        self.assertLess(data["max_residual"], 1e-9)

    def test_unknown_family(self):
        self.assertExitCode(2, "sweep", "--family", "ghz")

    def test_bad_grid(self):
        self.assertExitCode(2, "sweep", "--grid", "0:1")

    def test_out_directory_must_exist(self):
        self.assertExitCode(2, "sweep", "--out", self.path("missing/sweep.csv"))


class VerifyCommandTests(CommandTestCase):

    def test_clean_build_passes(self):
        data = run_json("verify", "--seed", "1")
        self.assertTrue(data["passed"])
        self.assertEqual(data["failures"], [])
        self.assertTrue(all(check["residual"] < 1e-9 for check in data["checks"]))

    def test_selected_checks_on_threads(self):
        data = run_json("verify", "--only", "trichotomy,physical_permutation,operator_identities", "--workers", "3")
        self.assertEqual([check["name"] for check in data["checks"]],
                         ["trichotomy", "physical_permutation", "operator_identities"])

    def test_unknown_check(self):
        self.assertExitCode(2, "verify", "--only", "everything")

    def test_bad_workers(self):
        self.assertExitCode(2, "verify", "--workers", "0")
