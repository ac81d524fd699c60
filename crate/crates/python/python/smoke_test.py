"""Smoke test for the extension module.

Build and run:
    cargo build --release -p fusion-sos-py --features extension-module
    cp ../../target/release/libfusion_sos_py.so fusion_sos_py.so   # .dylib on macOS
    python python/smoke_test.py
or `maturin develop --release` followed by the last line.
"""

from fractions import Fraction

import fusion_sos_py as fs


def frac(s):
    return Fraction(s)


p = fs.ModelParams(alpha="5/3")
u, v = Fraction(2, 7), Fraction(-3, 5)
assert fs.check_ybe(fs.r7v(str(v), p), fs.r7v(str(u), p), fs.r7v(str(u - v), p), (2, 2, 2))

r = fs.r7v(-1, p)
assert [frac(x) for x in r.entries()[1]] == [0, -1, 1, 0]

f = fs.fuse(2, 1, "1/3", p)
assert f.shape == (6, 6)
assert fs.Matrix.from_json(f.to_json()) == f

pw = fs.ModelParams.with_w("1/2")
assert fs.weight(1, 1, 2, 1, 1, 0, 3, pw) == "4"
vals = {m: fs.weight(2, 2, 1, -1, 1, 1, "-5/7", pw, method=m) for m in ("sum", "hyper", "solve")}
assert len(set(vals.values())) == 1, vals
assert fs.weight(1, 1, 3, 1, 1, 0, 3, pw) == "0"

z = fs.partition("vertex", 2, 2, "1/3", fs.ModelParams())
assert frac(z) == Fraction(868, 81), z

for name, ok, cases in fs.verify([1, 2, 8]):
    print(f"{'PASS' if ok else 'FAIL'} {name} ({cases} cases)")
    assert ok

print("smoke test ok")
