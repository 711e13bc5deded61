import json
import subprocess
import sys

import pytest

from mirrorcayley.cache import ENV_VAR, SeriesCache, resolve_cache_dir
from mirrorcayley.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, REGISTRY, main
from mirrorcayley.qforms import generators
from mirrorcayley.series import FracSeries, series_from_json


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_round_trip_and_truncation(tmp_path):
    cache = SeriesCache(tmp_path)
    c3 = generators(3, 20)["C"].series
    cache.store("C3", 20, c3)
    assert cache.load("C3", 20) == c3
    assert cache.load("C3", 10) == FracSeries(c3.offset, c3.body.truncate(10))
    assert cache.load("C3", 21) is None
    assert [e["name"] for e in cache.entries()] == ["C3"]


def test_higher_order_request_recomputes(tmp_path):
    cache = SeriesCache(tmp_path)
    calls = []

    def compute(order):
        calls.append(order)
        return generators(3, order)["A"].series

    cache.get_or_compute("A3", 10, compute)
    cache.get_or_compute("A3", 8, compute)
    cache.get_or_compute("A3", 15, compute)
    assert calls == [10, 15]


@pytest.mark.parametrize("garbage", ["{not json", '{"schema": 99, "name": "A3", "order": 50}', "[]"])
def test_corrupt_or_stale_files_are_ignored(tmp_path, garbage):
    cache = SeriesCache(tmp_path)
    cache.path("A3").write_text(garbage)
    assert cache.load("A3", 5) is None
    fresh = cache.get_or_compute("A3", 5, lambda n: generators(3, n)["A"].series)
    assert cache.load("A3", 5) == fresh


def test_cache_dir_precedence(tmp_path, monkeypatch):
    monkeypatch.setenv(ENV_VAR, str(tmp_path / "env"))
    assert resolve_cache_dir(str(tmp_path / "flag")) == tmp_path / "flag"
    assert resolve_cache_dir(None) == tmp_path / "env"
    monkeypatch.delenv(ENV_VAR)
    monkeypatch.setenv("XDG_CACHE_HOME", str(tmp_path / "xdg"))
    assert resolve_cache_dir(None) == tmp_path / "xdg" / "mirrorcayley"


def test_expand_json(tmp_path, capsys):
    code, out, _ = run(capsys, "--cache-dir", str(tmp_path), "--order", "6", "expand", "C3")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["name"] == "C3" and data["order"] == 6
    series = series_from_json(data)
    assert series == generators(3, 6)["C"].series


def test_expand_csv(tmp_path, capsys):
    code, out, _ = run(capsys, "expand", "B3", "--order", "5", "--format", "csv", "--cache-dir", str(tmp_path))
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "exponent,numerator,denominator"
    assert lines[1:] == ["0,1,1", "1,-3,1", "3,6,1", "4,-3,1"]


def test_expand_irrational_csv_is_usage_error(tmp_path, capsys):
    code, _, err = run(capsys, "expand", "cayley:B3", "--order", "4", "--format", "csv", "--cache-dir", str(tmp_path))
    assert code == EXIT_USAGE and "json" in err


def test_usage_errors(tmp_path, capsys):
    assert run(capsys, "expand", "nope", "--cache-dir", str(tmp_path))[0] == EXIT_USAGE
    assert run(capsys, "frobnicate")[0] == EXIT_USAGE
    assert run(capsys, "verify", "wdvv", "--order", "0")[0] == EXIT_USAGE
    assert run(capsys, "verify", "monodromy", "--precision", "10")[0] == EXIT_USAGE


def test_corrupt_cache_through_cli(tmp_path, capsys):
    cache = SeriesCache(tmp_path)
    cache.directory.mkdir(parents=True, exist_ok=True)
    cache.path("A3").write_text("garbage")
    code, out, _ = run(capsys, "expand", "A3", "--order", "5", "--cache-dir", str(tmp_path))
    assert code == EXIT_OK
    assert series_from_json(json.loads(out)) == generators(3, 5)["A"].series


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "correspondence", "--case", "cubic", "--order", "12", "--format", "json")
    assert code == EXIT_OK and json.loads(out)["pass"] is True
    code, out, _ = run(capsys, "verify", "correspondence", "--case", "cubic", "--order", "12", "--e3-denominator", "3")
    assert code == EXIT_FAIL
    code, out, _ = run(capsys, "verify", "ramanujan", "--level", "3", "--order", "12", "--e3-denominator", "3",
                       "--format", "pretty")
    assert code == EXIT_FAIL and "first mismatch at order 0" in out


@pytest.mark.parametrize("suite", ["ramanujan", "wdvv", "prepotential", "monodromy"])
def test_suites_pass(capsys, suite):
    code, out, _ = run(capsys, "verify", suite, "--order", "12", "--format", "csv")
    assert code == EXIT_OK
    assert out.startswith("name,pass,detail")


def test_cache_list_and_clear(tmp_path, capsys):
    run(capsys, "expand", "A3", "--order", "4", "--cache-dir", str(tmp_path))
    run(capsys, "expand", "gw:pillow:X", "--order", "4", "--cache-dir", str(tmp_path))
    code, out, _ = run(capsys, "cache", "list", "--cache-dir", str(tmp_path))
    assert code == EXIT_OK
    assert sorted(e["name"] for e in json.loads(out)["entries"]) == ["A3", "gw:pillow:X"]
    code, out, _ = run(capsys, "cache", "clear", "--cache-dir", str(tmp_path))
    assert json.loads(out) == {"removed": 2}


@pytest.mark.parametrize("name", sorted(REGISTRY))
def test_cached_equals_fresh(tmp_path, name):
    cache = SeriesCache(tmp_path)
    fresh = REGISTRY[name](10)
    cache.store(name, 10, fresh)
    assert cache.load(name, 10) == fresh
    assert SeriesCache(tmp_path).get_or_compute(name, 7, REGISTRY[name]) == REGISTRY[name](7)


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "mirrorcayley", "--order", "3", "--cache-dir", str(tmp_path), "expand", "alpha3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert data["offset"] == [1, 1] and data["coeffs"][0] == [27, 1]
