import pytest
from fastapi.testclient import TestClient
from unittest.mock import patch, MagicMock
from src.core.analysis.report import Criterion, Outcome, Report
from src.main import app
from test.unit.corpus import FIXTURES

client = TestClient(app)

def source(name):
    return (FIXTURES / name).read_text(encoding="utf-8")

class TestRoot:
    def test_read_root(self):
        response = client.get("/")

        assert response.status_code == 200
        assert response.json()["app"] == "chrdc"
        assert response.json()["endpoints"]["Analysis"]["List critical peaks"] == "POST /analysis/peaks"

class TestPostPeaks:
    def test_pminus_single_peak(self):
        response = client.post("/analysis/peaks", json={"programs": [source("pminus.chr")]})

        assert response.status_code == 200
        body = response.json()
        assert body["exit_code"] == 0
        assert [line.split()[0] for line in body["report"]] == ["PEAK", "VERDICT"]

    def test_text_format(self):
        response = client.post("/analysis/peaks", json={"programs": [source("empty.chr")], "format": "text"})

        assert response.status_code == 200
        assert response.json()["report"][0] == "criterion: critical_peaks"

    def test_config_format_is_used(self):
        payload = {"programs": [source("empty.chr")], "config": "[options]\nformat = text\n"}
        response = client.post("/analysis/peaks", json=payload)

        assert response.json()["report"][0] == "criterion: critical_peaks"

    def test_parse_error(self):
        response = client.post("/analysis/peaks", json={"programs": ["r @ p(X <=> true."]})

        assert response.status_code == 422
        assert "ParseError" in response.json()

    def test_too_many_programs(self):
        response = client.post("/analysis/peaks", json={"programs": ["", "", ""]})

        assert response.status_code == 422

class TestPostCheck:
    def test_leq_decreasing(self):
        payload = {"programs": [source("leq.chr")], "config": source("leq.cfg"), "mode": "decreasing"}
        response = client.post("/analysis/check", json=payload)

        assert response.status_code == 200
        body = response.json()
        assert body["exit_code"] == 0
        assert body["established"] is True
        assert body["report"][0] == "TERMINATION inductive VERIFIED measure=atoms,size limitations=[builtin_store_ignored]"
        assert body["report"][-1].startswith("VERDICT rule_decreasing CONFLUENT")

    def test_leq_strong(self):
        response = client.post("/analysis/check", json={"programs": [source("leq.chr")], "mode": "strong"})

        body = response.json()
        assert body["exit_code"] == 1
        assert body["established"] is False

    def test_modular_needs_two_programs(self):
        response = client.post("/analysis/check", json={"programs": [source("leq.chr")], "mode": "modular"})

        assert response.status_code == 422
        assert "ContractError" in response.json()

    def test_config_error(self):
        payload = {"programs": [source("leq.chr")], "config": "[partition]\ninductive = nope\n"}
        response = client.post("/analysis/check", json=payload)

        assert response.status_code == 422
        assert response.json() == {"ConfigError": "unknown rule 'nope' (line 2)"}

    def test_unknown_mode(self):
        response = client.post("/analysis/check", json={"programs": [source("leq.chr")], "mode": "weak"})

        assert response.status_code == 422

    @patch("src.api.v1.analysis.check.check")
    def test_limits_are_forwarded(self, mock_check):
        mock_check.return_value = Report(Criterion.STRONG, Outcome.CONFLUENT)

        response = client.post("/analysis/check", json={"programs": [source("empty.chr")], "mode": "strong",
                                                        "max_depth": 2, "max_states": 9})

        assert response.status_code == 200
        args = mock_check.call_args.args
        assert args[0] == "strong"
        assert args[3:] == (2, 9)
