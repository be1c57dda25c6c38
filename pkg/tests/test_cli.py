import json

import pytest

from sparseruns import cli


def run_cli(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, data, name="input.bin"):
    p = tmp_path / name
    p.write_bytes(data)
    return str(p)


def test_square(tmp_path, capsys):
    code, out, _ = run_cli(capsys, [write(tmp_path, b"aa")])
    assert code == 0
    assert out == "1\t2\t1\n"


def test_no_runs(tmp_path, capsys):
    code, out, _ = run_cli(capsys, [write(tmp_path, b"ab")])
    assert code == 0
    assert out == ""


def test_sample_string(tmp_path, capsys):
    path = write(tmp_path, b"abcabcababcabb$")
    code, out, _ = run_cli(capsys, [path])
    assert code == 0
    assert out.splitlines() == ["1\t8\t3", "4\t13\t5", "7\t10\t2", "13\t14\t1"]


def test_algorithms_agree(tmp_path, capsys):
    path = write(tmp_path, b"abaababaabaab" * 6)
    outputs = set()
    for algo in ("lyndon-sparse", "lyndon-naive-lce", "brute"):
        code, out, _ = run_cli(capsys, [path, "--algorithm", algo])
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1


def test_json_format(tmp_path, capsys):
    code, out, _ = run_cli(capsys, [write(tmp_path, b"aabaab"), "--format", "json"])
    assert code == 0
    got = json.loads(out)
    assert got == [
        {"start": 1, "end": 2, "period": 1, "exponent": 2.0},
        {"start": 1, "end": 6, "period": 3, "exponent": 2.0},
        {"start": 4, "end": 5, "period": 1, "exponent": 2.0},
    ]


def test_stats_line(tmp_path, capsys):
    code, out, _ = run_cli(capsys, [write(tmp_path, b"aabaab"), "--stats"])
    assert code == 0
    assert out.splitlines()[-1] == "# runs=3 sum_exp=6.000000"


def test_count_comparisons(tmp_path, capsys):
    code, out, _ = run_cli(capsys, [write(tmp_path, b"banana"), "--count-comparisons"])
    assert code == 0
    last = out.splitlines()[-1]
    assert last.startswith("# comparisons=")
    assert int(last.split("=")[1]) > 0


def test_verify_ok(tmp_path, capsys):
    code, _, _ = run_cli(capsys, [write(tmp_path, b"abaabaab"), "--verify"])
    assert code == 0


def test_verify_refuses_large_input(tmp_path, capsys):
    code, _, err = run_cli(capsys, [write(tmp_path, b"a" * (cli.VERIFY_LIMIT + 1)),
                                    "--verify"])
    assert code == 2
    assert "refuses" in err


def test_missing_file(capsys):
    code, _, err = run_cli(capsys, ["/nonexistent/path/x.bin"])
    assert code == 1
    assert "runs:" in err


def test_tau_override(tmp_path, capsys):
    path = write(tmp_path, b"mississippi")
    base = run_cli(capsys, [path])[1]
    for tau in ("1", "2", "3"):
        code, out, _ = run_cli(capsys, [path, "--tau", tau])
        assert code == 0
        assert out == base


def test_benchmark_csv(capsys):
    code, out, _ = run_cli(capsys, ["--benchmark", "32,64"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,generator,seed,algorithm,runs,comparisons,millis"
    assert len(lines) == 1 + 2 * 4  # two sizes x four generators
    for line in lines[1:]:
        n, gen, seed, algo, runs, comparisons, ms = line.split(",")
        assert int(n) in (32, 64)
        assert gen in cli._GENERATORS
        assert int(runs) >= 0 and int(comparisons) > 0 and float(ms) >= 0


def test_benchmark_bad_list(capsys):
    code, _, err = run_cli(capsys, ["--benchmark", "12,x"])
    assert code == 2
    assert "size list" in err


def test_stdin(tmp_path, capsys, monkeypatch):
    class FakeStdin:
        class buffer:
            @staticmethod
            def read():
                return b"aaaa"
    monkeypatch.setattr(cli.sys, "stdin", FakeStdin)
    code, out, _ = run_cli(capsys, [])
    assert code == 0
    assert out == "1\t4\t1\n"
