#!/usr/bin/env python3
"""Smoke test for the qtop_py extension module.

Build the extension first, then run this script from anywhere:

    cargo build -p qtop-py --release
    python3 python/smoke_test.py
"""
import pathlib
import shutil
import sys

here = pathlib.Path(__file__).resolve().parent
root = here.parent

for profile in ("release", "debug"):
    built = root / "target" / profile / "libqtop_py.so"
    if built.exists():
        dest = here / "qtop_py.so"
        if not dest.exists() or built.stat().st_mtime > dest.stat().st_mtime:
            shutil.copy2(built, dest)
        break
else:
    sys.exit("extension not found; run: cargo build -p qtop-py --release")

sys.path.insert(0, str(here))
import qtop_py  # noqa: E402

# Link invariants.
trefoil = qtop_py.Diagram("B2 1 1 1")
assert trefoil.jones() == "-s^8 + s^6 + s^2"
assert trefoil.jones_terms() == [(2, "1"), (6, "1"), (8, "-1")]
assert trefoil.writhe() == 3
assert trefoil.crossing_count() == 3
assert trefoil.mirror().jones() == "s^-2 + s^-6 - s^-8"
assert all(trefoil.skein_residual(i) == "0" for i in range(3))
re, im = trefoil.jones_at_level(1)
assert abs(re - 1.0) < 1e-9 and abs(im) < 1e-9

fig8 = qtop_py.Diagram("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)")
assert fig8.jones() == "s^4 - s^2 + 1 - s^-2 + s^-4"
assert fig8.component_count() == 1
assert "4 crossings" in repr(fig8)

hopf = qtop_py.Diagram("B2 1 1")
assert hopf.jones() == "-s^5 - s"
assert hopf.component_count() == 2

try:
    qtop_py.Diagram("B2 5")
except ValueError as e:
    assert "out of range" in str(e)
else:
    raise AssertionError("bad braid letter must raise")

# Fusion rules and block dimensions.
assert qtop_py.fuse(2, 1, 1) == [0, 2]
assert qtop_py.fusion_dim(1, [1, 1, 1, 1]) == 1
assert qtop_py.fusion_dim(3, [1, 1, 1, 1]) == 2
assert qtop_py.verlinde_dim(4, 1) == 5
assert qtop_py.verlinde_dim(3, 0, [1, 1, 1, 1]) == 2

# 2d TQFT evaluation.
alg = qtop_py.z2_algebra_json()
rows, cols, entries = qtop_py.tqft_eval(alg, '["cap", ["copants"], ["pants"], "cup"]')
assert (rows, cols) == (1, 1) and entries == [["2"]]
v3 = qtop_py.verlinde_algebra_json(3)
assert qtop_py.closed_surface(v3, 2) == str(qtop_py.verlinde_dim(3, 2))

# Quantization residuals.
assert qtop_py.quantization_residual("q1^2*p1 + 3*q2", "p2") == "0"
assert qtop_py.quantization_residual("q1", "p1", rep="schrodinger") == "0"
assert qtop_py.is_polarized("z1^2*z2", 2)
assert not qtop_py.is_polarized("z1 + z1*zbar2", 2)

print("smoke test: all assertions passed")
