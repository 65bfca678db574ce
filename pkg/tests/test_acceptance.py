"""Exit criteria.  Each test prints one ``CRITERION n PASS|FAIL`` line."""

import io
import random
import time

import pytest

from skewchar import (
    Partition,
    Rectangle,
    base_of,
    base_product,
    base_skew,
    cover_product,
    durfee_schubert,
    make_skew,
    max_rectangle_placements,
    rotate,
    schubert_product,
    union_partition,
)
from skewchar.basecover import product_shape
from skewchar.cli import run
from skewchar.verify import check_symmetries, check_thm34, check_thm42, check_thm43, check_thm45

SEED = 20240601


@pytest.fixture
def report(capsys):
    def emit(n, title, ok, detail=""):
        with capsys.disabled():
            print(f"\nCRITERION {n} {'PASS' if ok else 'FAIL'} {title} {detail}".rstrip())
        assert ok, f"criterion {n} failed: {detail}"
    return emit


def _all_pass(results, names=None):
    picked = [r for r in results if names is None or r.name in names]
    bad = [r.line() for r in picked if not r.passed]
    return not bad, "; ".join(bad) or ", ".join(f"{r.name}={r.instances}" for r in picked)


def test_criterion_1_running_example(report):
    t = time.perf_counter()
    a = make_skew((11, 6, 5, 5, 5, 4), (3, 3))
    ups = union_partition(a)
    n = len(max_rectangle_placements(a))
    dt = time.perf_counter() - t
    ok = ups == (8, 5, 5, 4, 2, 1) and n == 6 and dt < 1
    report(1, "union partition and 6 maximal rectangles", ok,
           f"union={ups} placements={n} {dt:.3f}s")


def test_criterion_2_ordinary_product(report):
    t = time.perf_counter()
    mu, nu = (4, 3, 1), (5, 2, 2)
    b1 = base_skew(make_skew((9, 9, 9, 7, 7, 4), (4, 3, 1)))
    cov = cover_product(mu, nu)
    bp = base_product(mu, nu)
    dt = time.perf_counter() - t
    ok = (b1 == (8, 7, 6, 4, 3) and cov == (9, 6, 5, 3, 2, 1) and bp == (5, 3, 2)
          and rotate(product_shape(mu, nu, Rectangle(9, 6))) == make_skew((9, 9, 9, 7, 7, 4), (4, 3, 1))
          and dt < 1)
    report(2, "ordinary product base/cover", ok, f"B(A1)={b1} C={cov} B={bp} {dt:.3f}s")


def test_criterion_3_schubert_product(report):
    mu, nu, rect = (4, 3, 1), (5, 2, 2), Rectangle(7, 4)
    a2 = make_skew((7, 5, 5, 2), (4, 3, 1))
    b2 = base_skew(a2)
    cov = cover_product(mu, nu, rect)
    d = durfee_schubert(mu, nu, rect)
    t = time.perf_counter()
    oracle = base_of(schubert_product(mu, nu, rect))
    dt = time.perf_counter() - t
    ok = (b2 == (4, 2, 1) and cov == (7, 6, 5, 3) and d == 3
          and rotate(product_shape(mu, nu, rect)) == a2
          and oracle == (5, 4, 2) and oracle != base_product(mu, nu) and dt < 60)
    report(3, "Schubert product base/cover/durfee, non-strict base", ok,
           f"B(A2)={b2} C={cov} d={d} oracle B={oracle} {dt:.3f}s")


def test_criterion_4_base_equals_union_equals_oracle(report):
    t = time.perf_counter()
    results = check_thm34(random.Random(SEED), 500, 12)
    dt = time.perf_counter() - t
    ok, detail = _all_pass(results, {"base_equals_union", "base_equals_oracle"})
    report(4, "500 shapes <= 12 boxes: base = union = oracle base", ok and dt < 300,
           f"{detail} {dt:.2f}s")


def test_criterion_5_duality(report):
    t = time.perf_counter()
    results = check_thm42(random.Random(SEED), 200, 16)
    dt = time.perf_counter() - t
    ok, detail = _all_pass(results)
    ok = ok and results[0].instances == 200 and dt < 300
    report(5, "200 skew/Schubert duality instances, kl <= 16", ok, f"{detail} {dt:.2f}s")


def test_criterion_6_cover_theorems(report):
    t = time.perf_counter()
    prod = check_thm43(random.Random(SEED), 200, 10, max_area=16)
    skew = check_thm45(random.Random(SEED), 100, 12)
    dt = time.perf_counter() - t
    ok1, d1 = _all_pass(prod)
    ok2, d2 = _all_pass(skew)
    ok = ok1 and ok2 and dt < 600
    report(6, "cover of products (200) and constrained skew shapes (100)", ok,
           f"{d1}; {d2} {dt:.2f}s")


def test_criterion_7_symmetries(report):
    results = check_symmetries(random.Random(SEED), 200, 10)
    names = {"commutativity", "conjugation", "rotation", "conjugate_shape", "translation"}
    ok, detail = _all_pass(results, names)
    ok = ok and all(r.instances == 200 for r in results if r.name in names)
    report(7, "LR symmetries on 200 shapes <= 10 boxes", ok, detail)


def test_criterion_8_determinism(report):
    argv = ["verify", "all", "--max-boxes", "9", "--seed", "11", "--count", "40"]
    outs = []
    for _ in range(2):
        buf = io.StringIO()
        run(argv, out=buf, err=io.StringIO())
        outs.append(buf.getvalue().encode())
    ok = outs[0] == outs[1] and b"properties passed" in outs[0]
    report(8, "identical verify runs give identical bytes", ok, f"{len(outs[0])} bytes")
