"""Command-line surface: output formats and exit statuses."""
import json

import pytest

from src.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, run_cli
from src.config.verification_config import SEED_ENV_VAR
from src.models.campaigns import CampaignEngine, CampaignReport


def run(capsys, *argv):
    code = run_cli(list(argv))
    return code, capsys.readouterr().out


class TestClassify:
    def test_text(self, capsys):
        code, out = run(capsys, "classify", "--graph", "wheel:4")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert "diamond-weakly-modular: true" in lines
        assert any(line.startswith("bridged: false") for line in lines)

    def test_json(self, capsys):
        code, out = run(capsys, "classify", "--graph", "prism", "--format", "json")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["classes"]["weakly_modular"] is True
        assert payload["witnesses"]["diamond_weakly_modular"]["kind"] == "TDC"

    def test_disconnected_graph(self, capsys):
        code, _ = run(capsys, "classify", "--graph", "B?")
        assert code == EXIT_USAGE

    def test_unparseable_graph(self, capsys):
        code, _ = run(capsys, "classify", "--graph", "foo:3")
        assert code == EXIT_USAGE


class TestAxioms:
    def test_fixture_witness_uses_labels(self, capsys):
        code, out = run(capsys, "check-axioms", "--transit", "fixtures/ex3", "--axioms", "t3", "--format", "json")
        assert code == EXIT_OK
        assert json.loads(out) == [{"axiom": "t3", "holds": False, "witness": ["u"]}]

    def test_text(self, capsys):
        code, out = run(capsys, "check-axioms", "--graph", "cycle:4", "--axioms", "J0',t1")
        assert code == EXIT_OK
        assert out.splitlines() == ["J0p: holds", "t1: holds"]

    def test_subset_containment(self, capsys):
        code, out = run(capsys, "check-axioms", "--graph", "cycle:4", "--axioms", "J0p", "--containment", "subset")
        assert out.startswith("J0p: fails  u=0 x=1 y=2 v=3")

    def test_needs_one_source(self, capsys):
        code, _ = run(capsys, "check-axioms", "--graph", "cycle:4", "--transit", "fixtures/ex3")
        assert code == EXIT_USAGE


class TestOtherCommands:
    def test_underlying_graph(self, capsys):
        code, out = run(capsys, "underlying-graph", "--transit", "fixtures/j0-not", "--format", "json")
        payload = json.loads(out)
        assert payload["connected"] is True
        assert payload["interval_function"] is False

    def test_gate(self, capsys):
        code, out = run(capsys, "gate", "--graph", "cycle:4", "--set", "0,1", "--vertex", "2")
        assert code == EXIT_OK
        assert out.strip() == "1"

    def test_gated_set(self, capsys):
        code, out = run(capsys, "gate", "--graph", "cycle:5", "--set", "0,1", "--format", "json")
        assert json.loads(out)["gated"] is False

    def test_amalgam(self, capsys):
        spec = json.dumps({"g1": "Bw", "g2": "Bw", "iso": [[0, 0]]})
        code, out = run(capsys, "amalgam", "--spec", spec, "--format", "json")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["classes"]["bridged"] is True

    def test_amalgam_rejects_ungated_sets(self, capsys):
        spec = json.dumps({"g1": "Bw", "g2": "Bw", "iso": [[0, 0], [1, 1]]})
        code, _ = run(capsys, "amalgam", "--spec", spec)
        assert code == EXIT_USAGE
        code, out = run(capsys, "amalgam", "--spec", spec, "--unchecked")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "C}"

    def test_fixture_list(self, capsys):
        code, out = run(capsys, "fixtures", "--list")
        assert code == EXIT_OK
        assert len(out.splitlines()) == 12

    def test_fixture_check(self, capsys):
        code, _ = run(capsys, "fixtures", "--check")
        assert code == EXIT_OK

    def test_fixture_show(self, capsys):
        code, out = run(capsys, "fixtures", "--show", "ex3")
        assert out.splitlines()[:2] == ["n 4", "labels u v x y"]

    def test_generate(self, capsys):
        code, out = run(capsys, "generate", "--connected", "3")
        assert code == EXIT_OK
        assert len(out.splitlines()) == 4
        code, out = run(capsys, "generate", "--graph", "path:3", "--format", "edges")
        assert out == "n 3\n0 1\n1 2\n"


class TestVerify:
    def test_passing_campaign(self, capsys):
        code, out = run(capsys, "verify", "T-4.1", "--max-n", "4", "--workers", "1", "--format", "json")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["pass"] is True
        assert payload["theorem"] == "T-4.1"
        assert payload["universe"]["max_n"] == 4

    def test_failing_campaign(self, capsys, monkeypatch):
        def failing(self, theorem):
            return CampaignReport("T-4.1", {}, [{"check": "custom", "message": "seeded"}])

        monkeypatch.setattr(CampaignEngine, "verify", failing)
        code, out = run(capsys, "verify", "T-4.1")
        assert code == EXIT_FAILED
        assert "FAIL" in out

    def test_unknown_theorem(self, capsys):
        code, _ = run(capsys, "verify", "T-9.9")
        assert code == EXIT_USAGE

    def test_bad_seed_environment(self, capsys, monkeypatch):
        monkeypatch.setenv(SEED_ENV_VAR, "x")
        code, _ = run(capsys, "verify", "X-PRISM")
        assert code == EXIT_USAGE


class TestUsage:
    def test_no_command(self, capsys):
        assert run_cli([]) == EXIT_USAGE

    def test_unknown_command(self, capsys):
        assert run_cli(["bogus"]) == EXIT_USAGE

    def test_help(self, capsys):
        assert run_cli(["--help"]) == EXIT_OK


class TestGraphStream:
    def test_verify_reads_graph6_file(self, capsys, tmp_path):
        stream = tmp_path / "wheels.g6"
        stream.write_text("E{Sw\nDhc\n")
        code, out = run(capsys, "verify", "T-5.3", "--graphs", str(stream), "--format", "json")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["universe"]["graphs"] == 2

    def test_missing_file(self, capsys, tmp_path):
        code, _ = run(capsys, "verify", "T-4.1", "--graphs", str(tmp_path / "absent.g6"))
        assert code == EXIT_USAGE
