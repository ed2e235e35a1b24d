import math

import sixvertex as sv


def test_config_counts():
    assert [sv.config_count(n) for n in range(1, 6)] == [1, 2, 7, 42, 429]


def test_partition_function_at_symmetric_point():
    z = float(sv.z(3, "pi/2", "pi/6", method="det"))
    assert math.isclose(z, 7 * (math.sqrt(3) / 2) ** 9, rel_tol=1e-12)


def test_emptiness_methods_agree():
    hom = float(sv.efp(3, 2, 1, "pi/2", "pi/6", method="hom"))
    mir = float(sv.efp(3, 2, 1, "pi/2", "pi/6", method="mir1"))
    assert math.isclose(hom, 5 / 7, rel_tol=1e-12)
    assert math.isclose(hom, mir, rel_tol=1e-12)


def test_sweep_csv_shape():
    csv = sv.sweep_csv(3, 2)
    lines = csv.strip().split("\n")
    assert lines[0] == "N,r,s,value,method,imag_residual"
    assert len(lines) == 1 + 3 * 2


def test_validate_recurrences():
    checks = sv.validate("recurrences", digits=128)
    assert len(checks) == 2
    assert all(c["pass"] for c in checks)
