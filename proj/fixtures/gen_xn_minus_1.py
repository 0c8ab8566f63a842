#!/usr/bin/env python3
"""Emit a disks-mode problem file for x^n - 1, n in {4, 8, 16}.

The roots of unity at these orders have nested-radical coordinates, so the
centers are printed from exact square roots evaluated with the decimal
module; no floating point touches the file.

Usage: gen_xn_minus_1.py N [out.json]
"""
import json
import sys
from decimal import Decimal, getcontext

getcontext().prec = 60
RADIUS = "1e-40"


def dec(x):
    # trim to something readable but far more accurate than the radius
    return str(+Decimal(x).quantize(Decimal("1e-50")))


def roots_for(n):
    one = Decimal(1)
    zero = Decimal(0)
    if n == 4:
        return [(one, zero), (zero, one), (-one, zero), (zero, -one)]
    h = Decimal(2).sqrt() / 2  # cos(pi/4)
    if n == 8:
        return roots_for(4) + [(sa * h, sb * h)
                               for sa in (one, -one) for sb in (one, -one)]
    c8 = (2 + Decimal(2).sqrt()).sqrt() / 2  # cos(pi/8)
    s8 = (2 - Decimal(2).sqrt()).sqrt() / 2  # sin(pi/8)
    if n == 16:
        quads = []
        for sa in (one, -one):
            for sb in (one, -one):
                quads.append((sa * c8, sb * s8))
                quads.append((sa * s8, sb * c8))
        return roots_for(8) + quads
    raise SystemExit("supported orders: 4, 8, 16")


def main():
    if len(sys.argv) < 2:
        raise SystemExit(__doc__)
    n = int(sys.argv[1])
    doc = {
        "mode": "disks",
        "degree": str(n),
        "coefficients": [{"codegree": str(n), "value": "-1"}],
        "roots": [{"re": dec(re), "im": dec(im), "radius": RADIUS}
                  for re, im in roots_for(n)],
    }
    text = json.dumps(doc, indent=2) + "\n"
    if len(sys.argv) > 2:
        with open(sys.argv[2], "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()
