"""Command line interface.

    skewchar base skew "9^3,7^2,4/4,3,1"
    skewchar cover product 4,3,1 5,2,2 --rect 7x4
    skewchar decompose skew 2,1/1 --json
    skewchar verify thm34 --max-boxes 12 --seed 7 --count 200
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time

from . import lr
from .basecover import (
    base_product,
    base_skew,
    cover_product,
    cover_skew,
    default_rectangle,
    durfee_schubert,
    product_shape,
)
from .errors import ParseError, SkewCharError
from .partition import Partition, Rectangle, format_partition, parse_partition
from .skew import SkewShape, format_skew, max_rectangle_placements, parse_skew, render, rho
from .verify import SCOPES, run_verify

COMMANDS = ("decompose", "base", "cover", "durfee", "rho", "rectangles", "verify")
TARGETS = ("skew", "product", "schubert")


def parse_rectangle(text: str) -> Rectangle:
    m = re.fullmatch(r"\s*(\d+)\s*[xX]\s*(\d+)\s*", text)
    if not m:
        raise ParseError(f"bad rectangle {text!r}, expected KxL")
    try:
        return Rectangle(int(m.group(1)), int(m.group(2)))
    except ValueError as err:
        raise ParseError(str(err)) from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="skewchar",
        description="Base and cover partitions of skew characters and products.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("target", help="skew | product | schubert; the scope for verify")
    p.add_argument("operands", nargs="*",
                   help="a skew shape OUTER/INNER, or two partitions for products")
    p.add_argument("--rect", help="bounding rectangle KxL (K columns, L rows)")
    p.add_argument("--json", action="store_true", help="structured output")
    p.add_argument("--draw", action="store_true", help="draw the diagram below the answer")
    p.add_argument("--max-boxes", type=int, default=None,
                   help=f"oracle box ceiling (default {lr.DEFAULT_MAX_BOXES})")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--row", type=int, default=None, help="single row index for rho")
    return p


class _Request:
    """Parsed operands for a non-verify command."""

    def __init__(self, args):
        self.command, self.target = args.command, args.target
        if self.target not in TARGETS:
            raise ParseError(f"unknown target {self.target!r}; choose from {', '.join(TARGETS)}")
        self.rect = parse_rectangle(args.rect) if args.rect else None
        ops = args.operands
        if self.target == "skew":
            if len(ops) != 1:
                raise ParseError("skew takes exactly one shape OUTER/INNER")
            self.shape = parse_skew(ops[0])
        else:
            if len(ops) != 2:
                raise ParseError(f"{self.target} takes exactly two partitions")
            self.mu, self.nu = parse_partition(ops[0]), parse_partition(ops[1])
            if self.target == "schubert" and self.rect is None:
                raise ParseError("schubert needs --rect KxL")
        if self.command in ("rho", "rectangles") and self.target != "skew":
            raise ParseError(f"{self.command} only applies to skew shapes")
        self.max_boxes = args.max_boxes
        self.row = args.row

    @property
    def is_schubert(self) -> bool:
        return self.target != "skew" and self.rect is not None

    def inputs(self) -> dict:
        if self.target == "skew":
            data = {"target": "skew", "shape": format_skew(self.shape)}
        else:
            data = {"target": self.target, "mu": format_partition(self.mu),
                    "nu": format_partition(self.nu)}
        if self.rect is not None:
            data["rect"] = str(self.rect)
        return data

    def product(self) -> lr.Decomposition:
        if self.is_schubert:
            return lr.schubert_product(self.mu, self.nu, self.rect, self.max_boxes)
        return lr.outer_product(self.mu, self.nu, self.max_boxes)

    def drawing(self) -> SkewShape | None:
        if self.target == "skew":
            return self.shape
        rect = self.rect or default_rectangle(self.mu, self.nu)
        return product_shape(self.mu, self.nu, rect) if rect else None


def _compute(req: _Request):
    """Return ``(text, structured)`` for one request."""
    cmd = req.command
    if cmd == "decompose":
        d = lr.decompose(req.shape, req.max_boxes) if req.target == "skew" else req.product()
        return d.to_text(), d.to_records()
    if cmd in ("base", "cover"):
        if req.target == "skew":
            p = base_skew(req.shape) if cmd == "base" else cover_skew(req.shape)
        elif cmd == "cover":
            p = cover_product(req.mu, req.nu, req.rect)
        elif req.is_schubert:
            # no closed form for the Schubert base; ask the oracle
            p = lr.base_of(req.product())
        else:
            p = base_product(req.mu, req.nu)
        return format_partition(p), list(p)
    if cmd == "durfee":
        if req.target == "skew":
            d = lr.durfee_of(lr.decompose(req.shape, req.max_boxes))
        else:
            d = durfee_schubert(req.mu, req.nu, req.rect)
        return str(d), d
    if cmd == "rho":
        rows = [req.row] if req.row else range(1, req.shape.num_rows + 1)
        data = [{"i": i, "parts": rho(req.shape, i)} for i in rows]
        text = "\n".join(f"{r['i']}\t{format_partition(Partition(r['parts']))}" for r in data)
        return text, data
    if cmd == "rectangles":
        pls = max_rectangle_placements(req.shape)
        data = [{"width": pl.rect.width, "height": pl.rect.height,
                 "top_row": pl.top_row, "left_col": pl.left_col} for pl in pls]
        text = "\n".join(f"{pl.rect}\t{pl.top_row}\t{pl.left_col}" for pl in pls)
        return text, data
    raise AssertionError(cmd)


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        if args.command == "verify":
            if args.target not in SCOPES + ("all",):
                raise ParseError(f"unknown scope {args.target!r}")
            max_boxes = lr.DEFAULT_MAX_BOXES if args.max_boxes is None else args.max_boxes
            report = run_verify(args.target, max_boxes, args.seed, args.count)
            inputs = {"scope": args.target, "max_boxes": max_boxes,
                      "seed": args.seed, "count": args.count}
            text, data, status = report.to_text(), report.to_record(), 0 if report.passed else 1
            drawing = None
        else:
            req = _Request(args)
            text, data = _compute(req)
            inputs, status = req.inputs(), 0
            drawing = req.drawing() if args.draw else None
    except (SkewCharError, ValueError) as e:
        err.write(f"error: {type(e).__name__}: {e}\n")
        return 2
    if args.json:
        payload = {"command": args.command, "inputs": inputs, "result": data,
                   "elapsed_ms": round((time.perf_counter() - start) * 1000, 3)}
        if drawing is not None:
            payload["drawing"] = render(drawing).splitlines()
        out.write(json.dumps(payload) + "\n")
    else:
        if text:
            out.write(text + "\n")
        if drawing is not None:
            out.write("\n" + render(drawing) + "\n")
    return status


def main() -> None:
    sys.exit(run())
