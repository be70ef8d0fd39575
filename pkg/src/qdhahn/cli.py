"""Command-line front end: evaluation, tabulation, verification,
zero-finding, and plot-data emission.

Exit codes: 0 success (all checks pass), 1 a verification check failed,
2 configuration/usage error, 3 numerical error.  All numbers print with
17 significant digits so they round-trip through text.

The environment variable QDH_TOL overrides the default series
truncation tolerance.
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys

import click

from . import cdqhahn, limits, recurrence, verify
from .errors import QdhError
from .qseries import TruncationPolicy

CONFIG_ERROR = 2
NUMERIC_ERROR = 3


def _fmt(value) -> str:
    return f"{value:.17g}"


def _parse_complex(text: str) -> complex:
    try:
        return complex(text.replace("i", "j").replace(" ", ""))
    except ValueError:
        raise click.UsageError(f"cannot parse complex literal {text!r}")


def _parse_grid(text: str):
    parts = text.split(":")
    if len(parts) != 3:
        raise click.UsageError("grid must be lo:hi:count")
    lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    if count < 1:
        raise click.UsageError("grid count must be >= 1")
    if count == 1:
        return [lo]
    step = (hi - lo) / (count - 1)
    return [lo + i * step for i in range(count)]


def _policy(tol):
    env = os.environ.get("QDH_TOL")
    rel_tol = tol if tol is not None else (float(env) if env else 1e-12)
    return TruncationPolicy(rel_tol=rel_tol)


def _build_family(family, q, a_par, b_par, c_par, d_par, delta, a_small):
    """Construct the requested coefficient family, reporting missing
    parameters as `missing: <name>`."""
    if q is None:
        raise click.UsageError("missing: q")
    given = {
        "A": a_par,
        "B": b_par,
        "C": c_par,
        "D": d_par,
        "delta": delta,
        "a": a_small,
    }
    if family == "cdqh":
        cls, names = cdqhahn.CDQHParams, cdqhahn.CDQHParams.param_names
    elif family in limits.FAMILIES:
        cls = limits.FAMILIES[family]
        names = cls.param_names
    else:
        known = ["cdqh"] + sorted(limits.FAMILIES)
        raise click.UsageError(f"unknown family {family!r}; known: {', '.join(known)}")
    missing = [n for n in names if given.get(n) is None]
    if missing:
        raise click.UsageError(f"missing: {', '.join(missing)}")
    try:
        return cls(q, **{n: given[n] for n in names})
    except (ValueError, TypeError) as exc:
        raise click.UsageError(str(exc))


def _emit_rows(rows, header, fmt, params_comment=None):
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\r\n")
        if params_comment:
            buffer.write(f"# {params_comment}\r\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) if isinstance(v, float) else v for v in row])
        click.echo(buffer.getvalue(), nl=False)
    elif fmt == "json":
        click.echo(
            json.dumps(
                {"header": list(header), "rows": [[_fmt(v) if isinstance(v, float) else v for v in row] for row in rows]},
                sort_keys=True,
            )
        )
    else:
        if params_comment:
            click.echo(f"# {params_comment}")
        for row in rows:
            click.echo(" ".join(_fmt(v) if isinstance(v, float) else str(v) for v in row))


def _family_comment(family_obj):
    parts = [f"family={getattr(family_obj, 'family_id', 'cdqh')}", f"q={_fmt(family_obj.q)}"]
    for name in family_obj.param_names:
        value = complex(getattr(family_obj, name))
        text = _fmt(value.real) if value.imag == 0 else f"{_fmt(value.real)}+{_fmt(value.imag)}i"
        parts.append(f"{name}={text}")
    return " ".join(parts)


@click.group()
def main():
    """Associated continuous dual q-Hahn polynomials and their limit
    families: solutions, continued fractions, weights, and checks."""


@main.command("eval")
@click.option("--family", required=True, help="cdqh or a limit-family id")
@click.option("--what", required=True,
              type=click.Choice(["poly", "poly-alt", "solution", "cf", "cf-trunc", "weight"]))
@click.option("--which", default=None,
              help="solution label (cdqh) or index (limit families)")
@click.option("--n", "n_index", type=int, default=0, help="degree / sequence index")
@click.option("--z", "z_text", default=None, help="spectral argument (re or re+imi)")
@click.option("--x", "x_text", default=None, help="rescaled argument on the cut side")
@click.option("--grid", default=None, help="lo:hi:count grid over z (or x for weight)")
@click.option("--depth", type=int, default=400, help="truncation depth for cf-trunc")
@click.option("--q", type=float, default=None)
@click.option("--A", "a_par", type=float, default=None)
@click.option("--B", "b_par", type=float, default=None)
@click.option("--C", "c_par", type=float, default=None)
@click.option("--D", "d_par", type=float, default=None)
@click.option("--delta", type=float, default=None)
@click.option("--a", "a_small", type=float, default=None)
@click.option("--cf-form", default=None, help="closed form variant for --what cf")
@click.option("--side", type=click.Choice(["off-cut", "above", "below"]),
              default=None, help="boundary side when the point lies on the cut")
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "text"]), default="csv")
@click.option("--tol", type=float, default=None, help="series truncation tolerance")
def cmd_eval(family, what, which, n_index, z_text, x_text, grid, depth, q,
             a_par, b_par, c_par, d_par, delta, a_small, cf_form, side, fmt, tol):
    """Evaluate a polynomial, solution, continued fraction, or weight at
    a point or over a grid; one CSV row per point (n_or_x, re, im)."""
    fam = _build_family(family, q, a_par, b_par, c_par, d_par, delta, a_small)
    policy = _policy(tol)

    if grid is not None:
        points = _parse_grid(grid)
    elif what == "weight" and x_text is not None:
        points = [float(x_text)]
    elif z_text is not None:
        points = [_parse_complex(z_text)]
    elif x_text is not None and family == "cdqh":
        points = [cdqhahn.spectral_point(fam, x=_parse_complex(x_text)).z]
    else:
        raise click.UsageError("missing: z (or x / --grid)")

    def spectral(pt):
        if side is not None:
            sd = {"off-cut": cdqhahn.OFF_CUT, "above": cdqhahn.ABOVE,
                  "below": cdqhahn.BELOW}[side]
            return cdqhahn.spectral_point(fam, z=pt, side=sd)
        try:
            return cdqhahn.spectral_point(fam, z=pt)
        except QdhError:
            if what in ("poly", "poly-alt"):
                # polynomials are single valued across the cut
                return cdqhahn.spectral_point(fam, z=pt, side=cdqhahn.ABOVE)
            raise

    def evaluate(pt):
        if family == "cdqh":
            if what == "weight":
                return complex(cdqhahn.weight(fam, float(pt.real), policy))
            point = spectral(pt)
            if what == "poly":
                return cdqhahn.explicit_poly(fam, point, n_index, policy)
            if what == "poly-alt":
                return cdqhahn.explicit_poly_ir(fam, point, n_index, policy)
            if what == "solution":
                label = which or "minimal"
                return cdqhahn.solution(fam, point, label, n_index, policy)
            if what == "cf":
                return cdqhahn.cf_stieltjes(fam, point, cf_form or "ratio", policy)
            if what == "cf-trunc":
                return 1.0 / recurrence.cf_truncated(fam, pt, depth)
        else:
            if what == "weight":
                return complex(limits.limit_weight(fam, float(pt.real), policy))
            if what == "poly":
                return limits.limit_poly(fam, pt, n_index, policy)
            if what == "poly-alt":
                if fam.family_id != "limit-asc1":
                    raise click.UsageError("poly-alt is only defined for limit-asc1")
                return limits.limit_asc1_poly_alt(fam, pt, n_index)
            if what == "solution":
                index = int(which) if which is not None else 1
                return limits.limit_solution(fam, pt, index, n_index, policy)
            if what == "cf":
                return limits.limit_cf(fam, pt, cf_form or "default", policy)
            if what == "cf-trunc":
                return 1.0 / recurrence.cf_truncated(fam, pt, depth)
        raise click.UsageError(f"unsupported combination family={family} what={what}")

    rows = []
    for pt in points:
        value = evaluate(pt)
        coord = pt.real if isinstance(pt, complex) and pt.imag == 0 else pt
        rows.append([coord if isinstance(coord, float) else str(coord),
                     value.real, value.imag])
    _emit_rows(rows, ("n_or_x", "re", "im"), fmt, _family_comment(fam))


@main.command("verify")
@click.option("--check", "check_id", default="all",
              help="one of %s or all" % (", ".join(verify.CHECK_IDS)))
@click.option("--seed", type=int, default=verify.DEFAULT_SEED)
@click.option("--fast", is_flag=True, help="smaller sample counts")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def cmd_verify(check_id, seed, fast, fmt):
    """Run identity/property checks; exit 0 iff every check passes."""
    if check_id != "all" and check_id not in verify.CHECK_IDS:
        raise click.UsageError(
            f"unknown check {check_id!r}; known: {', '.join(verify.CHECK_IDS)}, all"
        )
    reports = verify.run_checks(check_id, seed=seed, fast=fast)
    if fmt == "json":
        click.echo(json.dumps([r.to_dict() for r in reports], sort_keys=True))
    else:
        for report in reports:
            click.echo(report.to_text())
    if not all(r.passed for r in reports):
        raise SystemExit(1)


@main.command("zeros")
@click.option("--f", "f_name", default="fourth-limit",
              help="series handle: fourth-limit (index n) or a cf part like "
                   "al-salam-carlitz1:num (families with an A parameter pin "
                   "A = q, the explicit-pole regime)")
@click.option("--n", "n_index", type=int, default=0)
@click.option("--q", type=float, required=True)
@click.option("--delta", type=float, default=None)
@click.option("--a", "a_small", type=float, default=None)
@click.option("--scan-lo", type=float, default=None)
@click.option("--scan-hi", type=float, default=None)
@click.option("--max-zeros", type=int, default=8)
@click.option("--interlace", is_flag=True,
              help="also scan order n+1 and report interlacing")
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "text"]), default="csv")
def cmd_zeros(f_name, n_index, q, delta, a_small, scan_lo, scan_hi, max_zeros,
              interlace, fmt):
    """Bracket and bisect real zeros of a family's series handle; CSV
    columns: zero, bracket_lo, bracket_hi."""
    if f_name == "fourth-limit":
        fam = limits.FourthLimit(q)
        handle = limits.fourth_limit_series(fam, n_index)
        lo, hi = limits.fourth_limit_zero_window(q, n_index, max_zeros)
        next_handle = limits.fourth_limit_series(fam, n_index + 1)
        next_window = limits.fourth_limit_zero_window(q, n_index + 1, max_zeros)
    elif ":" in f_name:
        family_id, part = f_name.split(":", 1)
        if part not in ("num", "den"):
            raise click.UsageError("cf part must be num or den")
        kwargs = {}
        if delta is not None:
            kwargs["delta"] = delta
        if a_small is not None:
            kwargs["a"] = a_small
        try:
            fam = limits.family_from_id(family_id, q, A=q, **kwargs) \
                if "A" in limits.FAMILIES[family_id].param_names else \
                limits.family_from_id(family_id, q, **kwargs)
        except (KeyError, TypeError) as exc:
            raise click.UsageError(str(exc))
        index = 0 if part == "num" else 1

        def handle(x):
            return limits.limit_cf_parts(fam, x)[index].real

        next_handle = None
        next_window = None
        if scan_lo is None or scan_hi is None:
            raise click.UsageError("missing: scan-lo/scan-hi for cf parts")
        lo, hi = scan_lo, scan_hi
    else:
        raise click.UsageError(f"unknown series handle {f_name!r}")
    if scan_lo is not None:
        lo = scan_lo
    if scan_hi is not None:
        hi = scan_hi
    zl = limits.find_zeros(handle, lo, hi, max_zeros=max_zeros)
    rows = [[z, b[0], b[1]] for z, b in zip(zl.zeros, zl.brackets)]
    _emit_rows(rows, ("zero", "bracket_lo", "bracket_hi"), fmt)
    if interlace:
        if next_handle is None:
            raise click.UsageError("interlacing report needs --f fourth-limit")
        zl2 = limits.find_zeros(next_handle, next_window[0], next_window[1],
                                max_zeros=max_zeros)
        ok = limits.interlaces(zl, zl2)
        click.echo(f"interlace n={n_index} vs n={n_index + 1}: {'pass' if ok else 'fail'}")
        if not ok:
            raise SystemExit(1)


@main.command("table")
@click.option("--family", required=True)
@click.option("--n-lo", type=int, default=0)
@click.option("--n-hi", type=int, required=True)
@click.option("--grid", required=True, help="lo:hi:count grid over z")
@click.option("--q", type=float, default=None)
@click.option("--A", "a_par", type=float, default=None)
@click.option("--B", "b_par", type=float, default=None)
@click.option("--C", "c_par", type=float, default=None)
@click.option("--D", "d_par", type=float, default=None)
@click.option("--delta", type=float, default=None)
@click.option("--a", "a_small", type=float, default=None)
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "text"]), default="csv")
def cmd_table(family, n_lo, n_hi, grid, q, a_par, b_par, c_par, d_par, delta,
              a_small, fmt):
    """Matrix of monic polynomial values P_n(z) over an n range and a z
    grid, one grid point per row."""
    fam = _build_family(family, q, a_par, b_par, c_par, d_par, delta, a_small)
    if n_hi < n_lo:
        rows = []
        header = ["z"]
    else:
        points = _parse_grid(grid)
        header = ["z"] + [f"n{n}" for n in range(n_lo, n_hi + 1)]
        rows = []
        for z in points:
            seq = recurrence.forward_eval(fam, z, 0.0, 1.0, max(n_hi, 0))
            row = [z]
            for n in range(n_lo, n_hi + 1):
                value = seq.value(n)
                row.append(value.real if abs(value.imag) < 1e-300 else value)
            rows.append(row)
    _emit_rows(rows, header, fmt, _family_comment(fam))


def run():
    """Console entry point with the documented exit-code contract."""
    try:
        main(standalone_mode=False)
    except click.exceptions.Exit as exc:
        sys.exit(exc.exit_code)
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        sys.exit(CONFIG_ERROR)
    except click.ClickException as exc:
        exc.show()
        sys.exit(CONFIG_ERROR)
    except click.exceptions.Abort:
        sys.exit(CONFIG_ERROR)
    except QdhError as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        sys.exit(NUMERIC_ERROR)


if __name__ == "__main__":
    run()
