"""Command-line front end.

    resonances solve   --model winter --z -0.1 --n 1..10 --order 2 --out csv,json,svg --path results/
    resonances compare --model winter --z -0.1 --n 1..20 --order 8
    resonances plot    --model triple --zm 0.1 --z0 -0.05 --zp 0.15 --n 1..10 --order 1

Options can also come from a flat ``key = value`` config file (``--config``);
flags given on the command line override it. Files are written to
``<path>/<name>.<ext>`` where ``name`` defaults to the subcommand.
"""

import argparse
import logging
import os
import sys

from .errors import ResonanceError
from .models import MODELS, make_model
from .output import compare_csv, compare_json, poles_svg, records_csv, records_json
from .sweep import SweepConfig, compare_rows, solve_rows

log = logging.getLogger("resonances")

COUPLING_KEYS = ("z", "zm", "z0", "zp")
CONFIG_KEYS = {
    "model", "n", "n_min", "n_max", "order", "branches", "out", "path", "name",
    "tol", "max_iter", "basin", "z_order",
} | set(COUPLING_KEYS)


class ConfigError(ResonanceError, ValueError):
    pass


def read_config_file(path):
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
            key, value = (s.strip() for s in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in CONFIG_KEYS:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = value
    return values


def parse_range(text):
    """``"3"`` -> (3, 3); ``"1..10"`` -> (1, 10)."""
    text = str(text).strip()
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        return int(text), int(text)
    except ValueError:
        raise ConfigError(f"bad n range {text!r}; use N or N..M") from None


def _complex(text, key):
    try:
        return complex(str(text).replace(" ", ""))
    except ValueError:
        raise ConfigError(f"bad value for {key}: {text!r}") from None


def _list(text):
    return tuple(s.strip() for s in str(text).split(",") if s.strip())


def build_config(values, command):
    """Turn merged string/number settings into a validated :class:`SweepConfig`."""
    if "model" not in values:
        raise ConfigError("no model given (use --model or 'model =' in the config file)")
    name = values["model"]
    if name not in MODELS:
        raise ConfigError(f"unknown model {name!r}; choose from {', '.join(MODELS)}")
    couplings = {k: _complex(values[k], k) for k in MODELS[name].coupling_names if k in values}
    stray = [k for k in COUPLING_KEYS if k in values and k not in MODELS[name].coupling_names]
    if stray:
        raise ConfigError(f"{name} model does not take {', '.join(stray)}")
    model = make_model(name, **couplings)

    n_min, n_max = parse_range(values.get("n", "1..10"))
    n_min = int(values.get("n_min", n_min))
    n_max = int(values.get("n_max", n_max))
    default_out = {"solve": "csv", "compare": "csv", "plot": "svg"}[command]
    kwargs = dict(
        model=model,
        n_min=n_min,
        n_max=n_max,
        order=int(values.get("order", 2 if name == "winter" else 1)),
        branches=_list(values.get("branches", "")),
        outputs=_list(values.get("out", default_out)),
        output_path=str(values.get("path", ".")),
        tol=float(values.get("tol", 1e-13)),
        max_iter=int(values.get("max_iter", 50)),
        basin_radius=float(values["basin"]) if "basin" in values else None,
        z_order=int(values.get("z_order", 2)),
    )
    return SweepConfig(**kwargs)


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key = value config file")
    common.add_argument("--model", choices=sorted(MODELS))
    common.add_argument("--z", help="single-barrier coupling")
    common.add_argument("--zm", help="triple-barrier left coupling z-")
    common.add_argument("--z0", help="central coupling (double/triple)")
    common.add_argument("--zp", help="right coupling z+ (double/triple)")
    common.add_argument("--n", help="excitation numbers, N or N..M")
    common.add_argument("--order", type=int, help="expansion order K (K_max for compare)")
    common.add_argument("--branches", help="comma list of plus,minus (triple model)")
    common.add_argument("--out", help="comma list of csv,json,svg")
    common.add_argument("--path", help="output directory")
    common.add_argument("--name", help="output file stem (default: the subcommand)")
    common.add_argument("--tol", type=float, help="Newton residual tolerance")
    common.add_argument("--max-iter", dest="max_iter", type=int, help="Newton iteration limit")
    common.add_argument("--basin", type=float, help="basin radius in w (default pi or $RESONANCE_SEED_BASIN)")
    common.add_argument("--z-order", dest="z_order", type=int, help="order of the z-expansion (compare)")
    common.add_argument("-q", "--quiet", action="store_true", help="no table on stdout")

    parser = argparse.ArgumentParser(prog="resonances", description="1/n expansion of resonance poles")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("solve", parents=[common], help="expansion + exact poles per (n, branch)")
    sub.add_parser("compare", parents=[common], help="error vs expansion order, and vs the z-expansion")
    sub.add_parser("plot", parents=[common], help="SVG scatter of poles in the complex k-plane")
    return parser


def _merged_values(args):
    values = read_config_file(args.config) if args.config else {}
    for key in sorted(CONFIG_KEYS):
        v = getattr(args, key, None)
        if v is not None:
            values[key] = v
    return values


def _write(path, stem, ext, text):
    os.makedirs(path, exist_ok=True)
    target = os.path.join(path, f"{stem}.{ext}")
    with open(target, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    log.info("wrote %s", target)
    return target


def _print_solve(rows, model):
    print(f"# {model.describe()}")
    print(f"{'n':>4} {'branch':>6} {'Re k':>20} {'Im k':>22} {'gamma':>12} {'rel_error':>10} {'residual':>10}")
    for row in rows:
        rec = row.record
        if rec is None:
            print(f"{row.n:>4} {row.branch.value:>6}  ERROR {row.error}")
            continue
        k = rec.k
        rel = f"{rec.rel_error:.3e}" if rec.rel_error is not None else "-"
        res = f"{rec.residual:.2e}" if rec.residual is not None else "-"
        line = f"{row.n:>4} {row.branch.value:>6} {k.real:>20.14f} {k.imag:>22.14e} {rec.gamma:>12.6g} {rel:>10} {res:>10}"
        if row.error:
            line += f"  ERROR {row.error}"
        print(line)


def _print_compare(rows, k_max, z_order):
    head = " ".join(f"{'K=' + str(k):>10}" for k in range(k_max + 1))
    print(f"{'n':>4} {head} {'z^' + str(z_order):>10}")
    for row in rows:
        if row.error:
            print(f"{row.n:>4} ERROR {row.error}")
            continue
        errs = " ".join(f"{e:>10.3e}" for e in row.errors)
        print(f"{row.n:>4} {errs} {row.z_error:>10.3e}")


def run(argv=None):
    args = _parser().parse_args(argv)
    try:
        values = _merged_values(args)
        config = build_config(values, args.command)
    except (OSError, ResonanceError, ValueError) as exc:
        print(f"resonances: error: {exc}", file=sys.stderr)
        return 2
    stem = values.get("name") or args.command
    model = config.model

    if args.command == "compare":
        try:
            rows = compare_rows(config)
        except ResonanceError as exc:
            print(f"resonances: error: {exc}", file=sys.stderr)
            return 2
        if not args.quiet:
            _print_compare(rows, config.order, config.z_order)
        if "csv" in config.outputs:
            _write(config.output_path, stem, "csv", compare_csv(rows, config.order, config.z_order))
        if "json" in config.outputs:
            _write(config.output_path, stem, "json", compare_json(rows, config.order, config.z_order))
        if "svg" in config.outputs:
            print("resonances: svg output is not produced by compare", file=sys.stderr)
        return 0 if all(r.ok for r in rows) else 1

    rows = solve_rows(config)
    for row in rows:
        if row.error:
            print(f"resonances: n={row.n} branch={row.branch.value}: {row.error}", file=sys.stderr)
    if not args.quiet:
        _print_solve(rows, model)

    outputs = config.outputs
    if args.command == "plot" and "svg" not in outputs:
        outputs = tuple(outputs) + ("svg",)
    status = 0 if rows and all(r.ok for r in rows) else 1
    if "csv" in outputs:
        _write(config.output_path, stem, "csv", records_csv(rows, model.name))
    if "json" in outputs:
        _write(config.output_path, stem, "json", records_json(rows, model.name))
    if "svg" in outputs:
        points = [(r.record.k, r.branch) for r in rows if r.record is not None]
        try:
            svg = poles_svg(points, title=f"Resonance poles k = w/(2πi): {model.describe()}")
        except ResonanceError as exc:
            print(f"resonances: error: {exc}", file=sys.stderr)
            return 1
        _write(config.output_path, stem, "svg", svg)
    return status


def main(argv=None):
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(message)s")
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
