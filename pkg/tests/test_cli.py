import json
import subprocess
import sys

HK = [sys.executable, "-m", "harmonic_kernels.cli"]


def run(*args, stdin=None):
    return subprocess.run(HK + list(args), capture_output=True, text=True,
                          input=stdin)


def test_kernel_command():
    out = run("kernel", "--case", "real", "--m", "3", "--k", "0", "--which", "K")
    assert out.returncode == 0 and out.stdout.strip() == "1"
    out = run("kernel", "--case", "real", "--m", "3", "--k", "1", "--which", "K")
    assert out.stdout.strip() == "3*x[1]*y[1]+3*x[2]*y[2]+3*x[3]*y[3]"
    out = run("kernel", "--case", "symplectic", "--n", "1", "--p", "0", "--q", "2",
              "--which", "ZS")
    assert out.stdout.strip() == ("1/2*zbar[1]^2*u[1]^2+zbar[1]*zbar[2]*u[1]*u[2]"
                                  "+1/2*zbar[2]^2*u[2]^2")
    out = run("kernel", "--case", "real", "--m", "3", "--k", "1", "--which", "K",
              "--format", "json")
    obj = json.loads(out.stdout)
    assert obj["params"] == {"case": "real", "m": 3, "k": 1}
    assert obj["polynomial"].startswith("3*x[1]*y[1]")


def test_kernel_invalid_params_exit_2():
    out = run("kernel", "--case", "real", "--m", "2", "--k", "1", "--which", "K")
    assert out.returncode == 2
    assert "error" in out.stderr


def test_project_command():
    out = run("project", "--flavor", "harmonic", "--m", "3", stdin="x[1]^2")
    assert out.returncode == 0
    assert out.stdout.strip() == "2/3*x[1]^2-1/3*x[2]^2-1/3*x[3]^2"
    out = run("project", "--flavor", "harmonic", "--m", "3",
              stdin="2/3*x[1]^2-1/3*x[2]^2-1/3*x[3]^2")
    assert out.stdout.strip() == "2/3*x[1]^2-1/3*x[2]^2-1/3*x[3]^2"
    out = run("project", "--flavor", "harmonic", "--m", "3",
              stdin="x[1]^2+x[2]^2+x[3]^2")
    assert out.stdout.strip() == "0"


def test_project_errors_exit_2():
    out = run("project", "--flavor", "harmonic", "--m", "3", stdin="x[1]^")
    assert out.returncode == 2
    out = run("project", "--flavor", "harmonic", "--m", "3", stdin="x[1]+x[2]^2")
    assert out.returncode == 2


def test_verify_single_point_and_schema():
    out = run("verify", "planewave", "--case", "real", "--m", "3", "--k", "1")
    assert out.returncode == 0
    lines = [json.loads(l) for l in out.stdout.splitlines()]
    assert len(lines) == 1
    rep = lines[0]
    assert rep["identity_id"] == "planewave.real"
    assert rep["params"] == {"case": "real", "k": 1, "m": 3}
    assert rep["status"] == "pass"
    assert rep["elapsed_ms"] == 0
    assert isinstance(rep["resolution_notes"], list)


GOLDEN_COMPLEX_10 = (
    '{"elapsed_ms":0,"identity_id":"planewave.complex",'
    '"params":{"case":"complex","n":2,"p":1,"q":0},'
    '"resolution_notes":["constant: lambda*dim on the unnormalized integrand '
    '(literal reading) verified"],'
    '"seed":9362101815328399859,"status":"pass"}')


def test_verify_golden_report_complex_10():
    out = run("verify", "planewave", "--case", "complex", "--n", "2",
              "--p", "1", "--q", "0")
    assert out.returncode == 0
    assert out.stdout.strip() == GOLDEN_COMPLEX_10


def test_verify_trivial_grid():
    out = run("verify", "spherical", "--m", "3", "--kmax", "0", "--seeds", "2")
    assert out.returncode == 0
    lines = [json.loads(l) for l in out.stdout.splitlines()]
    assert lines and all(r["status"] == "pass" for r in lines)
    ids = [(r["identity_id"], json.dumps(r["params"], sort_keys=True)) for r in lines]
    assert ids == sorted(ids)


def test_verify_determinism_bytes():
    args = ("verify", "pizzetti", "--m", "3", "--kmax", "1", "--n", "2",
            "--degmax", "1", "--seed", "42", "--seeds", "2")
    a = run(*args)
    b = run(*args)
    assert a.stdout == b.stdout and a.returncode == b.returncode == 0
    c = run(*args, "--jobs", "2")
    assert c.stdout == a.stdout


def test_verify_cap_skip_exit_codes():
    args = ("verify", "planewave", "--case", "real", "--m", "3", "--k", "2",
            "--max-terms", "5")
    out = run(*args)
    assert out.returncode == 3
    rep = json.loads(out.stdout.splitlines()[0])
    assert rep["status"] == "skipped"
    assert any(n.startswith("cap:") for n in rep["resolution_notes"])
    out = run(*args, "--allow-skip")
    assert out.returncode == 0


def test_usage_error_exit_2():
    out = run("kernel", "--case", "real", "--which", "K")
    assert out.returncode == 2
