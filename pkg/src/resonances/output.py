"""CSV, JSON and SVG writers. All output is deterministic for a given input."""

import csv
import io
import json
import math

from .errors import EmptyPlotError

COLUMNS = (
    "model", "n", "branch", "K",
    "re_w", "im_w", "re_k", "im_k", "re_E", "im_E",
    "gamma", "residual", "re_w_exact", "im_w_exact", "rel_error",
)


def row_values(row, model_name):
    """Column -> value mapping for one sweep row; missing numbers are None."""
    values = dict.fromkeys(COLUMNS)
    values.update(model=model_name, n=row.n, branch=row.branch.value, K=row.K)
    rec = row.record
    if rec is None:
        return values
    k, E = rec.k, rec.E
    values.update(
        re_w=rec.w.real, im_w=rec.w.imag,
        re_k=k.real, im_k=k.imag,
        re_E=E.real, im_E=E.imag,
        gamma=rec.gamma,
        residual=rec.residual,
    )
    if rec.w_exact is not None:
        values.update(re_w_exact=rec.w_exact.real, im_w_exact=rec.w_exact.imag, rel_error=rec.rel_error)
    return values


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def records_csv(rows, model_name):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        values = row_values(row, model_name)
        writer.writerow([_csv_cell(values[c]) for c in COLUMNS])
    return buf.getvalue()


def records_json(rows, model_name):
    data = [row_values(row, model_name) for row in rows]
    return json.dumps(data, indent=2, allow_nan=False) + "\n"


def parse_csv(text):
    """Read a records CSV back into dicts with the JSON value types."""
    out = []
    for raw in csv.DictReader(io.StringIO(text)):
        rec = {}
        for c in COLUMNS:
            v = raw[c]
            if c in ("model", "branch"):
                rec[c] = v
            elif c in ("n", "K"):
                rec[c] = int(v)
            else:
                rec[c] = float(v) if v != "" else None
        out.append(rec)
    return out


def compare_columns(k_max):
    return ["n"] + [f"rel_error_K{k}" for k in range(k_max + 1)] + ["z_order", "z_rel_error", "error"]


def compare_csv(rows, k_max, z_order):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(compare_columns(k_max))
    for row in rows:
        errs = row.errors + [None] * (k_max + 1 - len(row.errors))
        writer.writerow([row.n] + [_csv_cell(e) for e in errs] + [z_order, _csv_cell(row.z_error), row.error or ""])
    return buf.getvalue()


def compare_json(rows, k_max, z_order):
    cols = compare_columns(k_max)
    data = []
    for row in rows:
        errs = row.errors + [None] * (k_max + 1 - len(row.errors))
        data.append(dict(zip(cols, [row.n] + errs + [z_order, row.z_error, row.error])))
    return json.dumps(data, indent=2, allow_nan=False) + "\n"


# --- SVG pole scatter -------------------------------------------------------

WIDTH, HEIGHT = 800, 600
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 90, 30, 50, 70


def _nice_step(span, target=6):
    raw = span / target
    mag = 10 ** math.floor(math.log10(raw))
    for m in (1, 2, 2.5, 5, 10):
        if raw <= m * mag:
            return m * mag
    return 10 * mag


def _ticks(lo, hi):
    step = _nice_step(hi - lo)
    start = math.ceil(lo / step - 1e-9)
    stop = math.floor(hi / step + 1e-9)
    return [round(i * step, 12) for i in range(start, stop + 1)]


def _num(v):
    return format(v, ".2f")


def _label(v):
    return format(v, ".6g")


def poles_svg(points, title="Resonance poles"):
    """Scatter of ``(Re k, Im k)`` with branch-coded markers.

    ``points`` is a sequence of ``(k, branch)``. Im k = 0 sits at the top so
    the fourth quadrant fills the page.
    """
    if not points:
        raise EmptyPlotError("no poles to plot")
    xs = [k.real for k, _ in points]
    ys = [k.imag for k, _ in points]
    x_lo, x_hi = min(0.0, min(xs)), max(0.0, max(xs))
    y_lo, y_hi = min(0.0, min(ys)), max(0.0, max(ys))
    pad_x = 0.05 * (x_hi - x_lo) or 1.0
    pad_y = 0.08 * (y_hi - y_lo) or 1.0
    x_lo, x_hi = x_lo - (pad_x if x_lo < 0 else 0.0), x_hi + pad_x
    y_lo, y_hi = y_lo - pad_y, y_hi + (pad_y if y_hi > 0 else 0.0)

    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def px(x):
        return MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w

    def py(y):
        return MARGIN_TOP + (y_hi - y) / (y_hi - y_lo) * plot_h

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.2f}" y="28" text-anchor="middle" font-family="sans-serif" '
        f'font-size="16">{_escape(title)}</text>',
        f'<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{plot_w}" height="{plot_h}" '
        'fill="none" stroke="black" stroke-width="1"/>',
    ]
    for t in _ticks(x_lo, x_hi):
        x = px(t)
        out.append(f'<line x1="{_num(x)}" y1="{MARGIN_TOP + plot_h}" x2="{_num(x)}" '
                   f'y2="{MARGIN_TOP + plot_h + 5}" stroke="black"/>')
        out.append(f'<text x="{_num(x)}" y="{MARGIN_TOP + plot_h + 20}" text-anchor="middle" '
                   f'font-family="sans-serif" font-size="12">{_label(t)}</text>')
    for t in _ticks(y_lo, y_hi):
        y = py(t)
        out.append(f'<line x1="{MARGIN_LEFT - 5}" y1="{_num(y)}" x2="{MARGIN_LEFT}" y2="{_num(y)}" stroke="black"/>')
        out.append(f'<text x="{MARGIN_LEFT - 8}" y="{_num(y + 4)}" text-anchor="end" '
                   f'font-family="sans-serif" font-size="12">{_label(t)}</text>')
    if y_lo < 0 < y_hi or y_hi == 0:
        out.append(f'<line x1="{MARGIN_LEFT}" y1="{_num(py(0))}" x2="{MARGIN_LEFT + plot_w}" '
                   f'y2="{_num(py(0))}" stroke="gray" stroke-dasharray="4,3"/>')
    out.append(f'<text x="{MARGIN_LEFT + plot_w / 2:.2f}" y="{HEIGHT - 20}" text-anchor="middle" '
               'font-family="sans-serif" font-size="14">Re k</text>')
    out.append(f'<text x="22" y="{MARGIN_TOP + plot_h / 2:.2f}" text-anchor="middle" font-family="sans-serif" '
               f'font-size="14" transform="rotate(-90 22 {MARGIN_TOP + plot_h / 2:.2f})">Im k</text>')

    out.append('<g id="poles">')
    for k, branch in points:
        out.append(_marker(px(k.real), py(k.imag), branch.value))
    out.append("</g>")

    present = []
    for b in ("plus", "minus", "none"):
        if any(br.value == b for _, br in points):
            present.append(b)
    lx, ly = MARGIN_LEFT + plot_w - 110, MARGIN_TOP + plot_h - 20 * len(present) - 6
    for i, b in enumerate(present):
        y = ly + 20 * i + 10
        out.append(_marker(lx + 8, y, b))
        name = {"plus": "branch +", "minus": "branch −", "none": "pole"}[b]
        out.append(f'<text x="{lx + 20}" y="{y + 4}" font-family="sans-serif" font-size="12">{name}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _marker(x, y, kind):
    if kind == "plus":
        return f'<circle class="plus" cx="{_num(x)}" cy="{_num(y)}" r="5" fill="none" stroke="#1f4e9c" stroke-width="1.5"/>'
    if kind == "minus":
        d = 4.5
        return (f'<path class="minus" d="M {_num(x - d)} {_num(y - d)} L {_num(x + d)} {_num(y + d)} '
                f'M {_num(x - d)} {_num(y + d)} L {_num(x + d)} {_num(y - d)}" stroke="#b3261e" stroke-width="1.5"/>')
    return f'<circle class="none" cx="{_num(x)}" cy="{_num(y)}" r="3" fill="black"/>'


def _escape(text):
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
