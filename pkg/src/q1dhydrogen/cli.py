"""Command-line front end.

Subcommands:

* ``table``  -- entropy table for n = 1..n_max (CSV or JSON).
* ``figure`` -- density profiles on a grid, one column per state.
* ``verify`` -- named verification checks, grouped into suites.
* ``eval``   -- a single wave-function or density value.

Exit codes: 0 success, 1 verification failure, 2 numerical
non-convergence, 64 usage error.  Output is deterministic: identical
flags produce byte-identical streams.
"""

from __future__ import annotations

import argparse
import dataclasses
import io
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import information, transforms, wavefun
from .information import bbm_check, entropy_table, orthonormality_check, shannon_entropy
from .quadrature import NonConvergence, integrate, IntegrationRequest
from .specfun import chebyshev_u, hyp1f1_terminating, laguerre

__all__ = ["main", "entry_point", "VerificationReport", "TABLE_REFERENCE"]

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_NON_CONVERGENCE = 2
EXIT_USAGE = 64


@dataclass(frozen=True)
class VerificationReport:
    """One named identity check: worst deviation over its grid vs tolerance."""

    name: str
    max_abs_deviation: float
    tolerance: float
    passed: bool


# Published reference cells (n -> (s_rho, s_gamma_o, s_gamma_s, sum_o, sum_s)).
# Some printed cells are internally inconsistent or numerically wrong;
# those are enumerated in ROW_SUM_FLAGGED and QUADRATURE_FLAGGED.
TABLE_REFERENCE = {
    1: (1.1544, 1.2242, 0.5575, 2.2786, 1.7119),
    2: (2.2343, 0.5310, -0.4357, 2.7653, 1.7968),
    3: (2.9056, 0.1256, -0.8668, 3.0312, 2.0388),
    4: (3.3954, -0.1621, -1.1622, 3.2333, 2.2332),
    5: (3.7817, -0.3853, -1.3947, 3.3964, 2.3870),
    6: (4.1012, -0.5676, -1.5900, 3.5336, 2.5112),
    7: (4.3737, -0.7217, -1.7407, 3.6520, 2.6333),
    8: (4.6114, -0.8553, -1.8760, 3.7561, 2.7354),
    9: (4.8223, -0.9830, -2.0065, 3.8393, 2.8158),
    10: (5.0118, -1.0784, -2.1055, 3.9334, 2.9063),
}
_COLUMNS = ("s_rho", "s_gamma_o", "s_gamma_s", "sum_o", "sum_s")

# Cells whose printed value fails its own row-sum identity; the value a
# consistent implementation reproduces is the identity sum of the row's
# printed addends.
ROW_SUM_FLAGGED = {
    (1, "sum_o"): 2.3786,  # printed 2.2786
    (2, "sum_s"): 1.7986,  # printed 1.7968
}

# Cells whose printed value disagrees with high-precision quadrature of
# the defining integral by more than 2e-3.  The replacement references
# below were computed independently (30-digit tanh-sinh quadrature,
# cross-checked against adaptive Gauss-Kronrod); s_gamma_o additionally
# has the exact closed form ln(pi) + 3 ln 2 - 2 - ln(n), which pins the
# n = 9 entry to -0.9731 against the printed -0.9830.
QUADRATURE_FLAGGED = {
    (4, "s_gamma_s"): -1.15815468,
    (5, "s_gamma_s"): -1.383246283,
    (6, "s_gamma_s"): -1.566422541,
    (7, "s_gamma_s"): -1.721006121,
    (8, "s_gamma_s"): -1.854779918,
    (9, "s_gamma_s"): -1.972709153,
    (10, "s_gamma_s"): -2.078163039,
    (4, "sum_s"): 2.237199055,
    (5, "sum_s"): 2.398489203,
    (6, "sum_s"): 2.534770337,
    (7, "sum_s"): 2.652694058,
    (8, "sum_s"): 2.756634822,
    (9, "sum_s"): 2.849585412,
    (10, "sum_s"): 2.933673976,
    (9, "s_gamma_o"): math.log(math.pi) + 3.0 * math.log(2.0) - 2.0 - math.log(9.0),
    (9, "sum_o"): 3.849242,
}

TABLE_CELL_TOL = 2e-3


class _Parser(argparse.ArgumentParser):
    """argparse with the sysexits usage code instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def _row_csv(row) -> str:
    cols = [f"{row.s_rho:.4f}", f"{row.s_gamma_o:.4f}", f"{row.s_gamma_s:.4f}"]
    # sums are re-derived from the rounded addends so the printed table
    # satisfies the row-sum identities exactly at printed precision
    sum_o = float(cols[0]) + float(cols[1])
    sum_s = float(cols[0]) + float(cols[2])
    return f"{row.n},{cols[0]},{cols[1]},{cols[2]},{sum_o:.4f},{sum_s:.4f}"


def cmd_table(args, out) -> int:
    try:
        rows = entropy_table(args.n_max, abs_tol=args.tol)
    except NonConvergence as exc:
        print(f"non-convergence: {exc}", file=sys.stderr)
        return EXIT_NON_CONVERGENCE
    if args.format == "csv":
        print("n,S_rho,S_gamma_o,S_gamma_s,sum_o,sum_s", file=out)
        for row in rows:
            print(_row_csv(row), file=out)
    else:
        print(json.dumps([dataclasses.asdict(row) for row in rows], indent=2), file=out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# figure
# ---------------------------------------------------------------------------

_FIGURES = {
    1: (wavefun.rho_q1d, "0:15:0.01", "x"),
    2: (wavefun.gamma_lorentz, "-3:3:0.002", "p"),
    3: (wavefun.rho_1d, "-15:15:0.01", "x"),
    4: (wavefun.gamma_q1d, "0:3:0.002", "p"),
}


def _parse_grid(grid_spec: str):
    try:
        start, stop, step = (float(part) for part in grid_spec.split(":"))
    except ValueError:
        raise ValueError(f"grid must be start:stop:step, got {grid_spec!r}")
    if step <= 0.0:
        raise ValueError("grid step must be positive")
    if stop <= start:
        raise ValueError("grid stop must exceed start")
    count = int(math.floor((stop - start) / step + 0.5)) + 1
    return start + step * np.arange(count)


def cmd_figure(args, out) -> int:
    factory, default_grid, coordinate = _FIGURES[args.id]
    grid = _parse_grid(args.grid or default_grid)
    densities = [factory(n) for n in args.n_list]
    if any(d.domain == "half-line" for d in densities) and grid[0] < 0.0:
        raise ValueError("half-line density: grid must start at >= 0")
    values = [d.evaluate(grid) for d in densities]
    header = [coordinate] + [f"value_n={n}" for n in args.n_list]
    if args.format == "csv":
        print(",".join(header), file=out)
        for i, g in enumerate(grid):
            cells = [f"{g:.6g}"] + [f"{v[i]:.12g}" for v in values]
            print(",".join(cells), file=out)
    else:
        payload = {
            "coordinate": [float(g) for g in grid],
            **{f"value_n={n}": [float(v) for v in vals]
               for n, vals in zip(args.n_list, values)},
        }
        print(json.dumps(payload, indent=2), file=out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _emit(report: VerificationReport, out) -> None:
    state = "pass" if report.passed else "FAIL"
    print(f"{report.name}: {state} (max deviation={report.max_abs_deviation:.3e}, "
          f"tol={report.tolerance:.1e})", file=out)


def _check(name, deviation, tol) -> VerificationReport:
    return VerificationReport(name=name, max_abs_deviation=float(deviation),
                              tolerance=float(tol), passed=bool(deviation <= tol))


def _suite_identities(tol, out):
    tol = 1e-12 if tol is None else tol
    reports = []
    x = np.linspace(0.0, 60.0, 200)
    dev = max(float(np.max(np.abs(wavefun.psi_q1d(n, x, "hypergeometric")
                                  - wavefun.psi_q1d(n, x, "laguerre"))))
              for n in range(1, 11))
    reports.append(_check("hypergeometric_equals_laguerre_form", dev, tol))

    p_full = np.linspace(-5.0, 5.0, 201)
    dev = max(float(np.max(np.abs(np.imag(wavefun.phi_lorentz(n, p_full))
                                  - wavefun.phi_lorentz_imag(n, p_full))))
              for n in range(1, 11))
    reports.append(_check("imag_part_matches_phi_lorentz", dev, tol))

    dev = max(float(np.max(np.abs(np.abs(wavefun.phi_lorentz(n, p_full)) ** 2
                                  - wavefun.gamma_lorentz(n).evaluate(p_full))))
              for n in range(1, 11))
    reports.append(_check("modulus_squared_matches_gamma_lorentz", dev, tol))

    p_half = np.linspace(0.025, 5.0, 200)
    dev = 0.0
    ratios = []
    for n in range(1, 11):
        cheb = np.abs(wavefun.phi_q1d_cheb(n, p_half))
        imag = np.abs(wavefun.phi_lorentz_imag(n, p_half))
        dev = max(dev, float(np.max(np.abs(cheb - 2.0 * imag))))
        keep = imag > 1e-3
        ratios.extend((cheb[keep] / imag[keep]).tolist())
    reports.append(_check("phi_q1d_cheb_is_twice_imag_part", dev, tol))
    print(f"  measured |phi_q1d_cheb| / |phi_lorentz_imag| = {np.median(ratios):.12f} [info]",
          file=out)

    xs = np.linspace(0.0, 40.0, 50)
    dev = 0.0
    for m in range(0, 13):
        lhs = (m + 1) * hyp1f1_terminating(-m, 2, xs)
        rhs = laguerre(m, 1, xs)
        dev = max(dev, float(np.max(np.abs(lhs - rhs) / np.maximum(1.0, np.abs(rhs)))))
    reports.append(_check("kummer_series_matches_laguerre", dev, tol))

    thetas = np.linspace(0.0, math.pi, 102)[1:-1]
    dev = max(float(np.max(np.abs(chebyshev_u(m, np.cos(thetas)) * np.sin(thetas)
                                  - np.sin((m + 1) * thetas))))
              for m in range(0, 13))
    reports.append(_check("chebyshev_u_trig_identity", dev, tol))

    # nodal structure
    dev = max(abs(len(wavefun.nodes_psi(n)) - (n - 1)) for n in range(1, 11))
    reports.append(_check("node_count_is_n_minus_1", dev, 0.0))
    node2 = wavefun.nodes_psi(2)[0]
    reports.append(_check("psi_node_n2_at_x_equals_2", abs(node2 - 2.0), 1e-10))
    gnode = wavefun.gamma_q1d(2).nodes[0]
    reports.append(_check("gamma_q1d_n2_zero_at_p_half", abs(gnode - 0.5), 1e-10))
    grid = np.linspace(1e-4, 0.5, 50000)
    hump = grid[int(np.argmax(wavefun.gamma_q1d(2).evaluate(grid)))]
    reports.append(_check("gamma_q1d_n2_first_hump_near_0.18", abs(hump - 0.18), 0.01))

    # functional identities
    base = wavefun.rho_q1d(1)
    i_base = information.fisher_information(base, abs_tol=1e-10)
    reports.append(_check("fisher_ground_state_anchor", abs(i_base - 4.0), 1e-8))
    dev = 0.0
    for lam in (0.5, 2.0):
        scaled = wavefun.DensitySpec(
            label="scaled", domain="half-line", scale=base.scale / lam, nodes=(),
            evaluate=lambda x, lam=lam: lam * base.evaluate(lam * np.asarray(x, dtype=float)),
            derivative=lambda x, lam=lam: lam * lam * base.derivative(lam * np.asarray(x, dtype=float)))
        dev = max(dev, abs(information.fisher_information(scaled, abs_tol=1e-10)
                           - lam * lam * i_base))
    reports.append(_check("fisher_scaling_covariance", dev, 1e-8))

    def bump(center):
        def evaluate(x):
            u = np.asarray(x, dtype=float) - center
            return np.where(np.abs(u) < 1.0, 0.75 * (1.0 - u * u), 0.0)
        return wavefun.DensitySpec(label=f"bump@{center}", domain="full-line",
                                   scale=abs(center) + 2.0,
                                   nodes=(center - 1.0, center + 1.0), evaluate=evaluate)

    dev = abs(shannon_entropy(bump(17.5), abs_tol=1e-12)
              - shannon_entropy(bump(0.0), abs_tol=1e-12))
    reports.append(_check("entropy_translation_invariance", dev, 1e-10))
    return reports, []


def _suite_normalization(tol, out):
    tol = 1e-8 if tol is None else tol
    reports = []
    quad_tol = min(1e-9, tol / 10.0)
    families = (wavefun.rho_q1d, wavefun.gamma_lorentz, wavefun.rho_1d, wavefun.gamma_q1d)
    for factory in families:
        dev = max(abs(information.density_norm(factory(n), abs_tol=quad_tol) - 1.0)
                  for n in range(1, 11))
        reports.append(_check(f"normalization_{factory.__name__}", dev, tol))

    dev = 0.0
    for n in range(1, 11):
        def integrand(p, n=n):
            v = wavefun.phi_lorentz_imag(n, p)
            return v * v
        res = integrate(IntegrationRequest(integrand, "half-line", scale=1.0 / n,
                                           abs_tol=quad_tol))
        dev = max(dev, abs(res.value - 0.25))
    reports.append(_check("quarter_norm_of_imag_part", dev, tol))

    pairs = ((1, 2), (1, 3), (2, 3))
    for family in ("q1d_position", "lorentz_momentum", "q1d_momentum"):
        dev = max(abs(orthonormality_check(a, b, family, abs_tol=quad_tol))
                  for a, b in pairs)
        dev = max(dev, max(abs(orthonormality_check(k, k, family, abs_tol=quad_tol) - 1.0)
                           for k in (1, 2, 3)))
        reports.append(_check(f"orthonormality_{family}", dev, tol))

    # closed-form quadrature battery with honest error estimates
    battery = [
        (IntegrationRequest(lambda x: np.where(x > 0, x * x * np.log(np.maximum(x, 1e-320)),
                                               0.0), (0.0, 1.0), abs_tol=1e-10),
         -1.0 / 9.0),
        (IntegrationRequest(lambda x: np.exp(-x), "half-line", scale=1.0, abs_tol=1e-10), 1.0),
    ]
    for n in (1, 2, 3):
        battery.append((IntegrationRequest(lambda p, n=n: 1.0 / (1.0 + (n * p) ** 2) ** 2,
                                           "full-line", scale=1.0 / n, abs_tol=1e-10),
                        math.pi / (2.0 * n)))
    dev, honesty = 0.0, 0.0
    for request, exact in battery:
        result = integrate(request)
        true_error = abs(result.value - exact)
        dev = max(dev, true_error)
        if true_error > 5e-14:
            honesty = max(honesty, true_error / (10.0 * result.error_estimate))
    reports.append(_check("quadrature_closed_form_battery", dev, 1e-10))
    reports.append(_check("quadrature_error_estimate_honesty", honesty, 1.0))
    return reports, []


def _suite_table(tol, out):
    tol = TABLE_CELL_TOL if tol is None else tol
    rows = entropy_table(10, abs_tol=1e-6)
    reports = []
    s_rho = [row.s_rho for row in rows]
    increasing = all(a < b for a, b in zip(s_rho, s_rho[1:]))
    reports.append(_check("position_entropy_strictly_increasing",
                          0.0 if increasing else 1.0, 0.0))
    worst = 0.0
    for row in rows:
        for column in _COLUMNS:
            computed = getattr(row, column)
            key = (row.n, column)
            printed = TABLE_REFERENCE[row.n][_COLUMNS.index(column)]
            if key in ROW_SUM_FLAGGED:
                identity = ROW_SUM_FLAGGED[key]
                print(f"  table_n{row.n}_{column}: warning printed cell {printed} breaks the "
                      f"row-sum identity; computed {computed:.4f} matches the identity value "
                      f"{identity} [info]", file=out)
                reports.append(_check(f"table_n{row.n}_{column}_row_sum_identity",
                                      abs(computed - identity), tol))
                continue
            if key in QUADRATURE_FLAGGED:
                reference = QUADRATURE_FLAGGED[key]
                print(f"  table_n{row.n}_{column}: warning printed cell {printed} deviates "
                      f"{abs(printed - reference):.1e} from the defining integral; computed "
                      f"{computed:.4f} vs independent reference {reference:.6f} [info]", file=out)
                reports.append(_check(f"table_n{row.n}_{column}_vs_independent_reference",
                                      abs(computed - reference), tol))
                continue
            worst = max(worst, abs(computed - printed))
    reports.insert(0, _check("table_cells_match_published_values", worst, tol))
    return reports, []


def _suite_bbm(tol, out):
    rows = entropy_table(10, abs_tol=1e-6)
    reports = []
    satisfied = {}
    for row in rows:
        verdict = bbm_check(row.s_rho, row.s_gamma_s)
        satisfied[row.n] = verdict.satisfied
        word = "satisfied" if verdict.satisfied else "violated"
        rel = ">=" if verdict.satisfied else "<"
        print(f"  bbm_sum_q1d n={row.n}: {word} (sum={verdict.entropy_sum:.4f} {rel} "
              f"{verdict.bound:.4f}) [info]", file=out)
    # the half-line entropy sum crosses the bound between n = 3 and n = 4
    expected = {n: n >= 4 for n in range(1, 11)}
    mismatches = sum(satisfied[n] != expected[n] for n in satisfied)
    reports.append(_check("bbm_transition_between_n3_and_n4", mismatches, 0.0))

    lorentz_ok = all(bbm_check(row.s_rho, row.s_gamma_o).satisfied for row in rows)
    reports.append(_check("bbm_satisfied_with_lorentz_density", 0.0 if lorentz_ok else 1.0, 0.0))
    return reports, []


_EXPECTED_VERDICTS = {
    "phi_q1d_cheb": lambda n: "match" if n % 2 == 1 else "match-up-to-constant",
    "phi_lorentz": lambda n: "match",
    "phi_lorentz[input sqrt2*psi]": lambda n: "match-up-to-constant",
    "gamma_lorentz": lambda n: "match",
    "phi_1d[-,n-phase]": lambda n: "match" if n % 2 == 1 else "match-up-to-constant",
    "phi_1d[+,n-phase]": lambda n: "match" if n % 2 == 1 else "match-up-to-constant",
    "phi_1d[-,plain-phase]": lambda n: "match" if n == 1 else "mismatch",
    "phi_1d[+,plain-phase]": lambda n: "match" if n == 1 else "mismatch",
}


def _suite_transforms(tol, out, deep: bool = False):
    tol = 1e-8 if tol is None else tol
    reports = []
    correspondence = []
    for n in (1, 2, 3):
        bad = 0
        for rep in transforms.adjudicate(n, abs_tol=1e-9, match_tol=tol):
            correspondence.append(rep)
            factor = rep.fitted_global_factor
            print(f"  n={rep.n} {rep.candidate} vs {rep.transform}: {rep.verdict} "
                  f"(deviation={rep.max_abs_deviation:.2e}, "
                  f"factor={factor.real:+.6f}{factor.imag:+.6f}j) [info]", file=out)
            if rep.verdict != _EXPECTED_VERDICTS[rep.candidate](n):
                bad += 1
        reports.append(_check(f"adjudication_pattern_n{n}", bad, 0.0))

    n_values = range(1, 7) if deep else (1, 2)
    for kind in ("sine", "halfline_exponential", "even", "odd"):
        dev, budget = 0.0, 0.0
        for n in n_values:
            src, img, bud = transforms.parseval_check(kind, n, abs_tol=1e-6)
            dev = max(dev, abs(src - img))
            budget = max(budget, bud)
        reports.append(_check(f"parseval_{kind}_n_max{max(n_values)}", dev, budget))
    return reports, correspondence


def cmd_verify(args, out) -> int:
    suites = {
        "identities": _suite_identities,
        "normalization": _suite_normalization,
        "table": _suite_table,
        "bbm": _suite_bbm,
        "transforms": lambda tol, stream: _suite_transforms(tol, stream, deep=args.deep),
    }
    selected = list(suites) if args.suite == "all" else [args.suite]
    as_json = args.format == "json"
    stream = io.StringIO() if as_json else out
    all_reports = []
    all_correspondence = []
    try:
        for name in selected:
            print(f"[{name}]", file=stream)
            reports, correspondence = suites[name](args.tol, stream)
            for report in reports:
                _emit(report, stream)
            all_reports.extend(reports)
            all_correspondence.extend(correspondence)
    except NonConvergence as exc:
        print(f"non-convergence: {exc}", file=sys.stderr)
        return EXIT_NON_CONVERGENCE
    failed = [r for r in all_reports if not r.passed]
    print(f"{len(all_reports) - len(failed)}/{len(all_reports)} checks passed", file=stream)
    if as_json:
        payload = {
            "checks": [dataclasses.asdict(r) for r in all_reports],
            "correspondence": [_correspondence_dict(r) for r in all_correspondence],
        }
        print(json.dumps(payload, indent=2), file=out)
    return EXIT_OK if not failed else EXIT_VERIFICATION_FAILED


def _correspondence_dict(rep) -> dict:
    d = dataclasses.asdict(rep)
    factor = d["fitted_global_factor"]
    d["fitted_global_factor"] = [factor.real, factor.imag]
    d["grid"] = list(d["grid"])
    return d


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------

def _fmt(value) -> str:
    if isinstance(value, complex) or np.iscomplexobj(value):
        value = complex(value)
        return f"{value.real:.17g}{value.imag:+.17g}j"
    return f"{float(value):.17g}"


def cmd_eval(args, out) -> int:
    n = args.n
    quantity = args.quantity
    if quantity in ("psi", "psi-q1d"):
        value = wavefun.psi_q1d(n, args.x, form=args.form)
    elif quantity == "psi-1d":
        value = wavefun.psi_1d(n, args.parity, args.x)
    elif quantity == "phi-cheb":
        value = wavefun.phi_q1d_cheb(n, args.p)
    elif quantity == "phi-lorentz":
        value = wavefun.phi_lorentz(n, args.p)
    elif quantity == "phi-lorentz-imag":
        value = wavefun.phi_lorentz_imag(n, args.p)
    elif quantity == "phi-1d":
        value = wavefun.phi_1d(n, args.p, branch=args.branch,
                               n_scaled_phase=(args.phase == "n-scaled"))
    elif quantity in ("rho", "rho-q1d"):
        value = wavefun.rho_q1d(n).evaluate(args.x)
    elif quantity == "rho-1d":
        value = wavefun.rho_1d(n).evaluate(args.x)
    elif quantity == "gamma-lorentz":
        value = wavefun.gamma_lorentz(n).evaluate(args.p)
    elif quantity == "gamma-q1d":
        value = wavefun.gamma_q1d(n).evaluate(args.p)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown quantity {quantity!r}")
    print(_fmt(value), file=out)
    return EXIT_OK


_POSITION_QUANTITIES = ("psi", "psi-q1d", "psi-1d", "rho", "rho-q1d", "rho-1d")
_MOMENTUM_QUANTITIES = ("phi-cheb", "phi-lorentz", "phi-lorentz-imag", "phi-1d",
                        "gamma-lorentz", "gamma-q1d")


# ---------------------------------------------------------------------------
# parser / entry point
# ---------------------------------------------------------------------------

def _build_parser() -> _Parser:
    parser = _Parser(prog="q1dh", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="entropy table for n = 1..n_max")
    p_table.add_argument("--n-max", type=int, default=10)
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.add_argument("--tol", type=float, default=1e-6)

    p_fig = sub.add_parser("figure", help="density profile data on a grid")
    p_fig.add_argument("--id", type=int, choices=(1, 2, 3, 4), required=True,
                       help="1: half-line position density, 2: Lorentzian momentum "
                            "density, 3: full-line position density, 4: half-line "
                            "trigonometric momentum density")
    p_fig.add_argument("--n", dest="n_list", default="1,2",
                       help="comma-separated principal quantum numbers")
    p_fig.add_argument("--grid", default=None, help="start:stop:step")
    p_fig.add_argument("--format", choices=("csv", "json"), default="csv")

    p_verify = sub.add_parser("verify", help="run named verification checks")
    p_verify.add_argument("--suite", default="all",
                          choices=("identities", "normalization", "table", "bbm",
                                   "transforms", "all"))
    p_verify.add_argument("--tol", type=float, default=None,
                          help="override the identity/normalization/table tolerances")
    p_verify.add_argument("--deep", action="store_true",
                          help="extend Parseval checks to n <= 6 (slow)")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")

    p_eval = sub.add_parser("eval", help="evaluate one quantity at one point")
    p_eval.add_argument("quantity", choices=_POSITION_QUANTITIES + _MOMENTUM_QUANTITIES)
    p_eval.add_argument("--n", type=int, required=True)
    p_eval.add_argument("--x", type=float, default=None)
    p_eval.add_argument("--p", type=float, default=None)
    p_eval.add_argument("--parity", choices=("even", "odd"), default="even")
    p_eval.add_argument("--branch", choices=("+", "-"), default="+")
    p_eval.add_argument("--phase", choices=("n-scaled", "plain"), default="n-scaled")
    p_eval.add_argument("--form", choices=("hypergeometric", "laguerre"),
                        default="hypergeometric")
    return parser


def _validate(parser, args) -> None:
    if args.command == "table":
        if not 1 <= args.n_max <= 32:
            parser.error(f"--n-max must be in [1, 32], got {args.n_max}")
        if args.tol <= 0.0:
            parser.error("--tol must be positive")
    elif args.command == "figure":
        try:
            args.n_list = [int(part) for part in str(args.n_list).split(",") if part]
        except ValueError:
            parser.error(f"--n must be comma-separated integers, got {args.n_list!r}")
        if not args.n_list or any(n < 1 for n in args.n_list):
            parser.error("--n entries must be integers >= 1")
    elif args.command == "eval":
        needs_x = args.quantity in _POSITION_QUANTITIES
        coord = args.x if needs_x else args.p
        flag = "--x" if needs_x else "--p"
        if coord is None:
            parser.error(f"{args.quantity} requires {flag}")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        _validate(parser, args)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK

    handler = {"table": cmd_table, "figure": cmd_figure,
               "verify": cmd_verify, "eval": cmd_eval}[args.command]
    try:
        return handler(args, sys.stdout)
    except NonConvergence as exc:
        print(f"non-convergence: {exc}", file=sys.stderr)
        return EXIT_NON_CONVERGENCE
    except ValueError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
