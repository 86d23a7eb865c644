#!/usr/bin/env python3
"""Writes the input files of corpus/ from readable sympy expressions.

Expected reports are produced by the CLI itself (see --expected) and then
reviewed; this script only owns the inputs and the manifest.
"""

import argparse
import json
import pathlib
import subprocess

import sympy as sp

x, y, z, w = sp.symbols("x y z w")
I = sp.I


def rat(c):
    c = sp.nsimplify(c)
    re, im = sp.re(c), sp.im(c)
    return [str(sp.Rational(re)), str(sp.Rational(im))]


def poly(expr, vs):
    p = sp.Poly(sp.expand(expr), *vs)
    terms = [{"coeff": rat(c), "exps": list(m)} for m, c in zip(p.monoms(), p.coeffs())]
    return {"vars": [str(v) for v in vs], "terms": terms}


def one_form(coeffs, vs):
    comps = {}
    for v, c in zip(vs, coeffs):
        if sp.expand(c) != 0:
            comps["d" + str(v)] = poly(c, vs)
    return {"p": 1, "vars": [str(v) for v in vs], "components": comps}


def d(f, vs):
    return one_form([sp.diff(f, v) for v in vs], vs)


def series(forms, truncated=False):
    out = {"K": len(forms) - 1, "coeffs": forms}
    if truncated:
        out["truncated"] = True
    return out


def fiber(factors, vs):
    return {"factors": [poly(f, vs) for f in factors]}


def example_family(lam):
    vs = [x, y]
    return series([d(x * y, vs), one_form([-lam * y, x], vs)])


def torus(c, plane, anchor=None):
    t = {"c": [float(sp.re(c)), float(sp.im(c))], "plane": plane}
    if anchor is not None:
        t["anchor"] = [[float(sp.re(a)), float(sp.im(a))] for a in anchor]
    return {"torus": t}


def cases():
    xy, xyz, xyzw = [x, y], [x, y, z], [x, y, z, w]
    a, b, c = 1, 2, 3
    log_xyz = one_form([a * y * z, b * x * z, c * x * y], xyz)
    h1 = x**2 * z + 3 * y * z**2 - x * y
    exact_xyz = series([d(x * y * z, xyz), d(h1, xyz), d(sp.Rational(1, 2) * z**3 + x, xyz)])
    torus_xyz = [torus(1, [0, 1], [0, 0, 1]), torus(1, [1, 2], [1, 0, 0]), torus(1, [0, 2], [0, 1, 0])]

    yield "check_integrable_example", "check-integrable", {"deformation": example_family(2)}, 0
    yield "check_integrable_log_xyz", "check-integrable", {
        "deformation": series([d(x * y * z, xyz), log_xyz])}, 0
    yield "check_integrable_dz_ydx", "check-integrable", {
        "deformation": series([d(z, xyz), one_form([y, 0, 0], xyz)])}, 1

    yield "equations_degree_one", "deformation-equations", {
        "deformation": series([d(x * y * z, xyz), log_xyz]), "f": poly(x * y * z, xyz)}, 0
    yield "equations_exact", "deformation-equations", {"deformation": exact_xyz, "f": poly(x * y * z, xyz)}, 0
    yield "equations_ydx_over_z", "deformation-equations", {
        "deformation": series([d(z, xyz), one_form([y, 0, 0], xyz)]), "f": poly(z, xyz)}, 1

    yield "decompose_example", "decompose", {
        "form": one_form([-(3 + I) * y, x], xy), "fiber": fiber([x, y], xy)}, 0
    yield "decompose_df", "decompose", {"form": d(x * y, xy), "fiber": fiber([x, y], xy)}, 0
    yield "decompose_log_xyz", "decompose", {"form": log_xyz, "fiber": fiber([x, y, z], xyz)}, 0
    yield "decompose_not_closed", "decompose", {
        "form": one_form([y, 0, 0], xyz), "fiber": fiber([x, y, z], xyz)}, 1

    yield "periods_example_lambda_2", "periods", {
        "deformation": example_family(2), "fiber": fiber([x, y], xy),
        "cycles": [torus(1, [0, 1]), torus(2 - I, [0, 1])]}, 1
    yield "periods_example_lambda_minus_1", "periods", {
        "deformation": example_family(-1), "fiber": fiber([x, y], xy), "cycles": [torus(4, [0, 1])]}, 0
    yield "periods_log_xyz", "periods", {
        "deformation": series([d(x * y * z, xyz), log_xyz]), "fiber": fiber([x, y, z], xyz),
        "cycles": torus_xyz}, 1

    yield "first_integral_example_lambda_2", "first-integral", {
        "deformation": example_family(2), "fiber": fiber([x, y], xy), "cycles": [torus(1, [0, 1])]}, 1
    yield "first_integral_example_lambda_minus_1", "first-integral", {
        "deformation": example_family(-1), "fiber": fiber([x, y], xy)}, 0
    yield "first_integral_exact_xyz", "first-integral", {"deformation": exact_xyz, "fiber": fiber([x, y, z], xyz)}, 0
    yield "first_integral_log_xyz", "first-integral", {
        "deformation": series([d(x * y * z, xyz), log_xyz]), "fiber": fiber([x, y, z], xyz),
        "cycles": torus_xyz}, 1
    yield "first_integral_degree_growth", "first-integral", {
        "deformation": series([d(y, xy), one_form([y, 0], xy)]), "fiber": fiber([y], xy)}, 2
    yield "first_integral_non_reduced", "first-integral", {
        "deformation": series([d(x**2 * y, xy), one_form([0, x * y], xy)]), "fiber": fiber([x**2, y], xy)}, 2

    yield "classify_example_lambda_2", "classify-degree-one", {
        "fiber": fiber([x, y], xy), "omega1": one_form([-2 * y, x], xy)}, 0
    yield "classify_example_lambda_minus_1", "classify-degree-one", {
        "fiber": fiber([x, y], xy), "omega1": one_form([y, x], xy)}, 0
    f1, f2 = x**2 + y * z, w
    h = 5 * f1 - f2 + sp.Rational(1, 2) * f2**3
    om = [sp.diff(sp.Rational(2, 3) * f1 * f2 + h, v) + (1 - 2 * I) * f2 * sp.diff(f1, v) for v in xyzw]
    yield "classify_pullback_quadric", "classify-degree-one", {
        "fiber": fiber([f1, f2], xyzw), "omega1": one_form(om, xyzw)}, 0
    yield "classify_not_integrable", "classify-degree-one", {
        "fiber": fiber([x, y], xyz), "omega1": one_form([z, 0, 0], xyz)}, 1

    P = x**2 + y**2 + z**2
    yield "rescale_quadric", "rescale", {
        "form": one_form([sp.diff(P, x) + y * z, sp.diff(P, y), sp.diff(P, z) + x**2], xyz), "nu": 1}, 0
    yield "rescale_not_exact", "rescale", {"form": one_form([0, x, 0], xyz), "nu": 1}, 2

    yield "radial_df", "radial-test", {"form": d(x**2 * y + z**3, xyz)}, 0
    yield "radial_rotation", "radial-test", {"form": one_form([-y, x], xy)}, 0
    yield "radial_log_xyz", "radial-test", {"form": log_xyz}, 0


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default=pathlib.Path(__file__).resolve().parent.parent / "corpus", type=pathlib.Path)
    parser.add_argument("--expected", metavar="CLI", help="also regenerate expected reports with this binary")
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    manifest = []
    for name, command, payload, code in cases():
        (args.out / f"{name}.json").write_text(json.dumps(payload, indent=1, sort_keys=True) + "\n")
        manifest.append({"name": name, "command": command, "exit": code})
    (args.out / "malformed.json").write_text('{"fiber": [1, 2,\n')
    manifest.append({"name": "malformed", "command": "classify-degree-one", "exit": 2})
    (args.out / "manifest.json").write_text(json.dumps(manifest, indent=1) + "\n")

    if args.expected:
        for entry in manifest:
            src = args.out / f"{entry['name']}.json"
            dst = args.out / f"{entry['name']}.expected.json"
            run = subprocess.run([args.expected, entry["command"], "--input", str(src), "--output", str(dst)],
                                 capture_output=True, text=True)
            status = "ok" if run.returncode == entry["exit"] else f"MISMATCH (got {run.returncode})"
            print(f"{entry['name']:42s} exit {run.returncode}  {status}  {run.stdout.strip()}")


if __name__ == "__main__":
    main()
