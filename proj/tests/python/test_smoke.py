import json
import os
import subprocess

import arrmod


def test_charpoly_boolean():
    assert arrmod.charpoly("x*y*z") == [-1, 3, -3, 1]


def test_tutte_braid():
    assert arrmod.tutte("(x-y)*(x-z)*(y-z)") == {(2, 0): 1, (1, 0): 1, (0, 1): 1}


def test_coboundary_matches_interpolation():
    direct = arrmod.coboundary("x*y*z*(x+y)*(x+2*y+z)")
    via_counts = arrmod.coboundary_interpolated("x*y*z*(x+y)*(x+2*y+z)", [3, 5, 7, 11])
    assert direct == via_counts


def test_counts():
    assert arrmod.count_points("(x-y)*(x-z)*(y-z)", 5) == 60
    assert arrmod.count_points("x*y*z", 7) == 6**3


def test_prime_scan():
    skew = "z*(4*x+z)*(2*x+y)*(6*x+y+3*z)*(8*x+2*y+5*z)"
    assert arrmod.nongood_primes(skew) == [2]
    assert arrmod.rho0(skew) == 16
    eq, witness = arrmod.equivalent_mod("x*y*z*(x+y)*(x+2*y+z)", 2)
    assert not eq and witness == [0, 2, 4]


def test_groebner():
    basis, excluded = arrmod.groebner(["x+y", "x+3*y+z"])
    assert basis == ["x + y", "2*y + z"]
    assert excluded == [2]


def _cli(*args):
    exe = os.environ["ARRMOD_CLI"]
    return subprocess.run([exe, *args], capture_output=True, text=True)


def test_cli_charpoly():
    r = _cli("charpoly", "-e", "x*y*z")
    assert r.returncode == 0
    assert r.stdout.strip() == "[-1, 3, -3, 1]"


def test_cli_gb_json():
    r = _cli("gb", "-e", "x+y", "-e", "x+3*y+z", "--json")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["basis"] == ["x + y", "2*y + z"]
    assert out["excluded_primes"] == [2]


def test_cli_primes():
    r = _cli("primes", "-e", "z*(4*x+z)*(2*x+y)*(6*x+y+3*z)*(8*x+2*y+5*z)", "--json")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["nongood"] == [2]
    assert out["rho0"] == 16
    assert out["equivalent_iff_coprime_to"] == 16


def test_cli_usage_error():
    r = _cli("charpoly")
    assert r.returncode == 2


def test_cli_domain_error():
    r = _cli("ffmethod", "-e", "(x-y)*(x-z)*(y-z)", "--primes", "2,3,5,7")
    assert r.returncode == 1
