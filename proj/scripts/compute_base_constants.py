#!/usr/bin/env python3
"""Independent oracle for the moment-engine base constants.

Each modified-moment recursion starts from three base integrals; everything
else is exact rational recurrence on top of them.  This script evaluates the
integrals with mpmath (an implementation unrelated to the MPFR code paths in
the library) and freezes them as decimal strings so the test suite can
cross-check the library's own closed forms digit by digit.

Constants (weights w against 1/(1+x^2)^j):
  gaussian:  w = exp(-x^2/2) on R
    mu0     = integral w                 = sqrt(2 pi)
    lambda0 = integral w/(1+x^2)         = pi e^(1/2) erfc(1/sqrt 2)
    nu0     = integral w/(1+x^2)^2       = sqrt(2 pi)/2
  chebyshev1: w = 1/sqrt(1-x^2) on (-1, 1)
    mu0     = pi
    lambda0 = pi/sqrt(2)
    nu0     = 3 sqrt(2) pi/8

Usage: compute_base_constants.py [--digits N] [--out PATH]
"""
import argparse
import json

import mpmath as mp


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--digits", type=int, default=120,
                    help="decimal digits to emit (default 120 ~ 398 bits)")
    ap.add_argument("--out", default="data/base_constants.json")
    args = ap.parse_args()

    # Work with generous guard digits, print at the requested precision.
    mp.mp.dps = args.digits + 30

    def quad_r(f):
        return mp.quad(f, [-mp.inf, 0, mp.inf])

    # Chebyshev integrals via x = cos(theta): the weight's endpoint
    # singularities disappear and the integrand becomes smooth on [0, pi].
    def quad_theta(f):
        return mp.quad(f, [0, mp.pi / 2, mp.pi])

    gauss_w = lambda x: mp.e**(-x * x / 2)

    values = {
        "gaussian_mu0": (quad_r(gauss_w), mp.sqrt(2 * mp.pi)),
        "gaussian_lambda0": (
            quad_r(lambda x: gauss_w(x) / (1 + x * x)),
            mp.pi * mp.e**mp.mpf("0.5") * mp.erfc(1 / mp.sqrt(2)),
        ),
        "gaussian_nu0": (
            quad_r(lambda x: gauss_w(x) / (1 + x * x) ** 2),
            mp.sqrt(2 * mp.pi) / 2,
        ),
        "chebyshev1_mu0": (quad_theta(lambda t: mp.mpf(1)), mp.pi),
        "chebyshev1_lambda0": (
            quad_theta(lambda t: 1 / (1 + mp.cos(t) ** 2)),
            mp.pi / mp.sqrt(2),
        ),
        "chebyshev1_nu0": (
            quad_theta(lambda t: 1 / (1 + mp.cos(t) ** 2) ** 2),
            3 * mp.sqrt(2) * mp.pi / 8,
        ),
    }

    out = {}
    bits = int(args.digits * mp.log(10, 2))
    for name, (by_quadrature, closed_form) in values.items():
        err = abs(by_quadrature - closed_form)
        # The quadrature must agree with the closed form to well beyond the
        # emitted precision, otherwise the oracle itself is suspect.
        budget = mp.mpf(10) ** (-(args.digits + 5))
        if err > budget:
            raise SystemExit(f"{name}: quadrature disagrees with closed form "
                             f"by {mp.nstr(err, 3)}")
        out[name] = {
            "decimal": mp.nstr(closed_form, args.digits, strip_zeros=False),
            "precision_bits": bits,
            "oracle": "mpmath quad + closed form, cross-checked to "
                      f"{mp.nstr(err, 3)}",
        }

    with open(args.out, "w") as fh:
        json.dump(out, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {args.out} ({len(out)} constants, {args.digits} digits)")


if __name__ == "__main__":
    main()
