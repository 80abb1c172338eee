from symprol.cli import main


def run_cli(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_catalog_list(capsys):
    code, out, _ = run_cli(["catalog", "list"], capsys)
    assert code == 0
    assert "entry=D4_12" in out and "entry=p1" in out


def test_catalog_verify_all(capsys):
    code, out, _ = run_cli(["catalog", "verify"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("config: command=catalog")
    assert lines[-1].startswith("summary:")
    assert " 0 fail" in lines[-1]
    assert all("check=pass" in ln for ln in lines[1:-1])


def test_catalog_verify_single(capsys):
    code, out, _ = run_cli(["catalog", "verify", "D4_12", "--params", "eps=-1"], capsys)
    assert code == 0
    assert "entry=D4_12" in out and "verdict=Finite" in out
    code, out, _ = run_cli(["catalog", "verify", "p1"], capsys)
    assert code == 0
    assert "verdict=Infinite" in out


def test_catalog_bad_inputs(capsys):
    code, _, err = run_cli(["catalog", "verify", "no-such"], capsys)
    assert code == 2
    code, _, err = run_cli(["catalog", "verify", "D6_13", "--params", "a=-1"], capsys)
    assert code == 2


def test_exit_one_on_verification_failure(capsys, monkeypatch):
    # no shipped entry fails, so force a wrong expectation to drive the
    # failure path and the exit status
    from symprol import catalog
    monkeypatch.setattr(catalog.get("glP"), "expected_dim", 5)
    code, out, _ = run_cli(["catalog", "verify", "glP"], capsys)
    assert code == 1
    assert "FAIL" in out and "1 fail" in out


def test_determinism(capsys):
    _, out1, _ = run_cli(["catalog", "verify"], capsys)
    _, out2, _ = run_cli(["catalog", "verify"], capsys)
    assert out1 == out2


def test_prolong_and_finite_type(tmp_path, capsys):
    gens = tmp_path / "gens.txt"
    gens.write_text("q1*p1\n")
    code, out, _ = run_cli(["prolong", "--gens", str(gens), "--kmax", "1"], capsys)
    assert code == 0 and "\ndims=1,0" in out and out.startswith("config:")

    gens.write_text("p1^2\n")
    code, out, _ = run_cli(["finite-type", "--gens", str(gens)], capsys)
    assert code == 0 and "verdict=Infinite" in out and "witness=" in out

    gens.write_text("p1^2\nq1^2\n")
    code, _, err = run_cli(["finite-type", "--gens", str(gens)], capsys)
    assert code == 2 and "not a subalgebra" in err

    gens.write_text("")
    code, _, err = run_cli(["finite-type", "--gens", str(gens)], capsys)
    assert code == 2


def test_realize_commands(capsys):
    code, out, _ = run_cli(["realize", "thmK1", "--base", "sphere", "--k", "2"], capsys)
    assert code == 0
    assert "dim=7" in out and "jacobi=0" in out
    code, out, _ = run_cli(["realize", "thmK2", "--base", "conf",
                            "--xi", "W(1,1)+W(1,-1)"], capsys)
    assert code == 0 and "dim=6" in out
    code, _, err = run_cli(["realize", "thmK2", "--base", "conf", "--xi", "W(2,2)"], capsys)
    assert code == 2 and "conjugation-invariant" in err
    code, _, err = run_cli(["realize", "thmK1", "--base", "sphere", "--k", "0"], capsys)
    assert code == 2


def test_fedosov_command(tmp_path, capsys):
    alg = tmp_path / "heis.alg"
    alg.write_text("dim 4\n[1,2] = 1 * e3\nomega(1,3) = 1\nomega(2,4) = 1\n")
    code, out, _ = run_cli(["fedosov", "--algebra", str(alg)], capsys)
    assert code == 0
    assert "ric_zero=True" in out and "nilpotent=True" in out

    aff = tmp_path / "aff.alg"
    aff.write_text("dim 2\n[1,2] = 1 * e2\nomega(1,2) = 1\n")
    code, out, _ = run_cli(["fedosov", "--algebra", str(aff), "--report", "full"], capsys)
    assert code == 0
    assert "ric(1,1) = 2/9" in out
    assert "product e1 e1 = -1 * e1" in out

    bad = tmp_path / "bad.alg"
    bad.write_text("dim 4\n[1,2] = 1 * e3\nomega(1,2) = 1\nomega(3,4) = 1\n")
    code, _, err = run_cli(["fedosov", "--algebra", str(bad)], capsys)
    assert code == 2 and "cocycle" in err


def test_ce_h1_command(capsys):
    code, out, _ = run_cli(["ce-h1", "--list"], capsys)
    assert code == 0 and "case=n2-p1w" in out
    code, out, _ = run_cli(["ce-h1", "--case", "n2-p1w"], capsys)
    assert code == 0 and "dim_h1=1" in out and "c(p2^2) = 1 * (p1*q2)" in out
    code, out, _ = run_cli(["ce-h1", "--case", "slw-p1w"], capsys)
    assert code == 0 and "dim_h1=0" in out
    code, _, err = run_cli(["ce-h1", "--case", "nope"], capsys)
    assert code == 2
