"""Command-line client for the engine service.

Every subcommand issues an HTTP request: against an in-process ASGI transport
by default (no server or network needed), or against a running service when
--server/DURFEE_SERVER is set.  Results go to stdout in plain, csv or json
form; errors go to stderr with a nonzero exit status.
"""

from __future__ import annotations

import asyncio
import csv
import io
import json

import click
import httpx

from .errors import CohortParseError
from .profiles import parse_cohort_csv, parse_profile_file

_app = None


def _get_app():
    global _app
    if _app is None:
        from .service.app import create_app

        _app = create_app()
    return _app


class ServiceClient:
    def __init__(self, server: str | None):
        self.server = server

    def request(self, method: str, path: str, **kwargs) -> dict:
        async def go():
            if self.server:
                async with httpx.AsyncClient(base_url=self.server, timeout=600.0) as client:
                    return await client.request(method, path, **kwargs)
            transport = httpx.ASGITransport(app=_get_app())
            async with httpx.AsyncClient(
                transport=transport, base_url="http://durfee.internal", timeout=600.0
            ) as client:
                return await client.request(method, path, **kwargs)

        try:
            response = asyncio.run(go())
        except httpx.HTTPError as exc:
            raise click.ClickException(f"service unreachable: {exc}")
        if response.status_code >= 400:
            try:
                detail = response.json().get("detail", response.text)
            except ValueError:
                detail = response.text
            raise click.ClickException(f"{response.status_code}: {detail}")
        return response.json()

    def get(self, path: str, **params) -> dict:
        return self.request("GET", path, params=params)

    def post(self, path: str, payload: dict) -> dict:
        return self.request("POST", path, json=payload)


def common_options(fn):
    fn = click.option(
        "--format", "fmt", type=click.Choice(["plain", "csv", "json"]),
        default="plain", show_default=True, help="Output format.",
    )(fn)
    fn = click.option(
        "--server", envvar="DURFEE_SERVER", default=None, metavar="URL",
        help="Base URL of a running service; default is in-process.",
    )(fn)
    return fn


def engine_options(fn):
    fn = click.option(
        "--epsilon", type=float, default=0.02, show_default=True,
        help="Excluded probability mass of the confidence interval.",
    )(fn)
    fn = click.option(
        "--rule", type=click.Choice(["symmetric", "minwidth"]), default="symmetric",
        show_default=True, help="Interval selection rule.",
    )(fn)
    return fn


def emit(fmt: str, payload: dict, columns: list[str], rows: list[dict], footer: list[str] = ()):
    """plain/csv render the tabular projection; json emits the full payload."""
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2))
        return
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            writer.writerow({c: _cell(row.get(c)) for c in columns})
        click.echo(buf.getvalue().rstrip("\n"))
        return
    cells = [[_cell(r.get(c)) for c in columns] for r in rows]
    widths = [max(len(col), *(len(row[i]) for row in cells)) if cells else len(col)
              for i, col in enumerate(columns)]
    click.echo("  ".join(col.ljust(w) for col, w in zip(columns, widths)))
    for row in cells:
        click.echo("  ".join(val.ljust(w) for val, w in zip(row, widths)))
    for line in footer:
        click.echo(line)


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def _interval_str(payload: dict) -> str:
    return f"[{payload['low']},{payload['high']}]"


@click.group()
@click.version_option()
def main():
    """Exact h-index ranges for citation counts under the uniform partition model."""


@main.command()
@click.argument("n", type=int)
@common_options
def pn(n, fmt, server):
    """Exact partition count p(N) next to its closed-form approximation."""
    payload = ServiceClient(server).get(f"/partitions/count/{n}")
    emit(fmt, payload, ["n", "exact", "hardy_ramanujan", "ratio"],
         [{"n": payload["n"], "exact": payload["count"],
           "hardy_ramanujan": payload["hardy_ramanujan"], "ratio": payload["ratio"]}])


@main.command()
@click.argument("n", type=int)
@common_options
def dist(n, fmt, server):
    """Distribution of the h-index over partitions of N."""
    payload = ServiceClient(server).get("/durfee/distribution", n=n)
    rows = [
        {"k": k, "count": c, "probability": p}
        for k, (c, p) in enumerate(zip(payload["counts"], payload["probabilities"]))
    ]
    emit(fmt, payload, ["k", "count", "probability"], rows,
         footer=[f"mode {payload['mode']}  total {payload['total']}"])


@main.command()
@click.argument("n", type=int)
@engine_options
@common_options
def interval(n, epsilon, rule, fmt, server):
    """Confidence interval for the h-index of N citations."""
    payload = ServiceClient(server).get("/durfee/interval", n=n, epsilon=epsilon, rule=rule)
    emit(fmt, payload,
         ["n", "interval", "mass", "mode", "estimate"],
         [{"n": payload["n"], "interval": _interval_str(payload), "mass": payload["mass"],
           "mode": payload["mode"], "estimate": payload["estimate_display"]}])


@main.command()
@click.argument("n", type=int)
@click.argument("t", type=int)
@common_options
def tail(n, t, fmt, server):
    """P(h >= T) for N citations, from exact integer counts."""
    payload = ServiceClient(server).get("/durfee/tail", n=n, t=t)
    emit(fmt, payload, ["n", "t", "probability"],
         [{"n": payload["n"], "t": payload["t"], "probability": payload["display"]}])


@main.command()
@click.argument("n", type=int)
@common_options
def estimate(n, fmt, server):
    """Rule-of-thumb h estimate 0.54*sqrt(N) and the hard bound isqrt(N)."""
    payload = ServiceClient(server).get("/durfee/estimate", n=n)
    emit(fmt, payload, ["n", "estimate", "max_h"],
         [{"n": payload["n"], "estimate": payload["estimate_display"],
           "max_h": payload["max_h"]}])


def _assessment_row(a: dict, nonbook: bool) -> dict:
    row = {
        "name": a["name"],
        "citations": a["citations"],
        "h": a["h"],
        "estimate": a["estimate_display"],
        "interval": f"[{a['interval']['low']},{a['interval']['high']}]",
        "in_interval": a["in_interval"],
        "anomaly": a["anomaly"],
        "ratio": None if a["ratio"] is None else round(a["ratio"], 2),
        "hirsch_a": None if a["hirsch_a"] is None else round(a["hirsch_a"], 2),
    }
    if nonbook and a.get("revised"):
        r = a["revised"]
        row["nb_citations"] = r["citations"]
        row["nb_h"] = r["h"]
        row["nb_estimate"] = r["estimate_display"]
        row["nb_interval"] = f"[{r['interval']['low']},{r['interval']['high']}]"
        row["nb_in_interval"] = r["in_interval"]
    return row


@main.command()
@click.argument("profile_file", type=click.Path(exists=True, dir_okay=False), required=False)
@click.option("--citations", type=int, default=None, help="Total citations (with --h).")
@click.option("--h", "h_value", type=int, default=None, help="Actual h-index (with --citations).")
@click.option("--citations-nonbook", type=int, default=None)
@click.option("--h-nonbook", type=int, default=None)
@click.option("--name", default="", help="Label for the assessed scholar.")
@engine_options
@common_options
def analyze(profile_file, citations, h_value, citations_nonbook, h_nonbook, name,
            epsilon, rule, fmt, server):
    """Assess a scholar (--citations/--h) or every profile in a profile file.

    Profile files carry one 'name: c1 c2 c3 ...' line per scholar.
    """
    client = ServiceClient(server)
    if profile_file is not None:
        try:
            parsed = parse_profile_file(open(profile_file, encoding="utf-8").read())
        except CohortParseError as exc:
            raise click.ClickException(f"{profile_file}: {exc}")
        payload = client.post("/profiles/analyze", {
            "profiles": [{"name": n_, "citations_per_paper": list(p.parts)} for n_, p in parsed],
            "epsilon": epsilon,
            "rule": rule,
        })
        rows = [
            {"name": p["name"], "papers": p["n_papers"], "citations": p["citations"],
             "h": p["h"], **{k: v for k, v in _assessment_row(p["assessment"], False).items()
                             if k not in ("name", "citations", "h")}}
            for p in payload["profiles"]
        ]
        emit(fmt, payload,
             ["name", "papers", "citations", "h", "estimate", "interval", "in_interval", "anomaly"],
             rows)
        return
    if citations is None or h_value is None:
        raise click.UsageError("provide a profile file, or both --citations and --h")
    payload = client.post("/profiles/assess", {
        "scholar": {"name": name, "citations": citations, "h": h_value,
                    "citations_nonbook": citations_nonbook, "h_nonbook": h_nonbook},
        "epsilon": epsilon,
        "rule": rule,
    })
    nonbook = citations_nonbook is not None
    columns = ["name", "citations", "h", "estimate", "interval", "in_interval",
               "anomaly", "ratio", "hirsch_a"]
    if nonbook:
        columns += ["nb_citations", "nb_h", "nb_estimate", "nb_interval", "nb_in_interval"]
    emit(fmt, payload, columns, [_assessment_row(payload, nonbook)])


@main.command()
@click.argument("csv_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--nonbook", is_flag=True, help="Also report the non-book correlation and columns.")
@click.option("--scatter", "scatter_path", type=click.Path(dir_okay=False), default=None,
              help="Write (estimate, h) scatter points to this CSV for plotting.")
@engine_options
@common_options
def cohort(csv_path, nonbook, scatter_path, epsilon, rule, fmt, server):
    """Assess every scholar in a cohort CSV and report the Pearson correlation.

    CSV schema: name,citations,h,citations_nonbook,h_nonbook (optionals empty).
    """
    try:
        records = parse_cohort_csv(open(csv_path, encoding="utf-8").read())
    except CohortParseError as exc:
        raise click.ClickException(f"{csv_path}: {exc}")
    payload = ServiceClient(server).post("/cohort/analyze", {
        "records": [
            {"name": s.name, "citations": s.citations, "h": s.h,
             "citations_nonbook": s.citations_nonbook, "h_nonbook": s.h_nonbook}
            for s in records
        ],
        "epsilon": epsilon,
        "rule": rule,
    })
    if scatter_path:
        with open(scatter_path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["estimate", "h", "estimate_nonbook", "h_nonbook"])
            nb_index = 0
            for i, a in enumerate(payload["assessments"]):
                est, h = payload["scatter_points"][i]
                if a.get("revised"):
                    nb_est, nb_h = payload["scatter_points_nonbook"][nb_index]
                    nb_index += 1
                    writer.writerow([est, h, nb_est, nb_h])
                else:
                    writer.writerow([est, h, "", ""])
    columns = ["name", "citations", "h", "estimate", "interval", "in_interval", "anomaly"]
    if nonbook:
        columns += ["nb_citations", "nb_h", "nb_estimate", "nb_interval", "nb_in_interval"]
    rows = [_assessment_row(a, nonbook) for a in payload["assessments"]]
    footer = []
    if payload["pearson_r"] is not None:
        footer.append(f"pearson R {payload['pearson_r']:.2f}")
    if payload["pearson_error"]:
        footer.append(f"pearson R unavailable: {payload['pearson_error']}")
    if nonbook:
        if payload["pearson_r_nonbook"] is not None:
            footer.append(f"pearson R (non-book) {payload['pearson_r_nonbook']:.2f}")
        if payload["pearson_nonbook_error"]:
            footer.append(f"pearson R (non-book) unavailable: {payload['pearson_nonbook_error']}")
    out = payload["out_of_interval"]
    footer.append(f"outside interval: {len(out)}" + (f" ({', '.join(out)})" if out else ""))
    emit(fmt, payload, columns, rows, footer=footer)


@main.command()
@click.argument("n", type=int)
@click.option("--samples", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--method", type=click.Choice(["recursive_unranking", "boltzmann_rejection"]),
              default="recursive_unranking", show_default=True)
@click.option("--compare-exact", is_flag=True,
              help="Report total-variation distance to the exact distribution.")
@common_options
def sample(n, samples, seed, method, compare_exact, fmt, server):
    """Draw uniform random partitions of N and histogram their h-index."""
    payload = ServiceClient(server).post("/sampler/run", {
        "n": n, "samples": samples, "seed": seed, "method": method,
        "compare_exact": compare_exact,
    })
    rows = [
        {"k": k, "count": c, "frequency": payload["frequencies"][k]}
        for k, c in sorted(payload["histogram"].items(), key=lambda kv: int(kv[0]))
    ]
    footer = [f"method {payload['method']}  rng {payload['rng']}  seed {payload['seed']}"]
    if payload["tv_distance"] is not None:
        footer.append(f"tv distance to exact: {payload['tv_distance']:.5f}")
    emit(fmt, payload, ["k", "count", "frequency"], rows, footer=footer)


@main.command()
@click.argument("target", type=click.Choice(["table1", "table2", "table3", "table4", "appendix"]))
@common_options
def reproduce(target, fmt, server):
    """Regenerate a published table and diff it cell by cell."""
    payload = ServiceClient(server).get(f"/reproduce/{target}")
    summary = payload["summary"]
    if target == "table1":
        rows = [
            {"n": r["n"], "printed": f"[{r['printed'][0]},{r['printed'][1]}]",
             "symmetric": f"[{r['symmetric'][0]},{r['symmetric'][1]}]",
             "minwidth": f"[{r['minwidth'][0]},{r['minwidth'][1]}]",
             "within_one": r["within_one"]}
            for r in payload["rows"]
        ]
        footer = [
            f"within one unit: {summary['within_one']}/{summary['rows']}",
            f"exact matches: symmetric {summary['exact_symmetric']}, "
            f"minwidth {summary['exact_minwidth']}",
            f"minimum interval mass: {summary['min_mass']:.4f}",
        ]
        emit(fmt, payload, ["n", "printed", "symmetric", "minwidth", "within_one"], rows, footer)
        return
    rows = []
    for r in payload["rows"]:
        row = {
            "name": r["name"], "citations": r["citations"],
            "printed_est": r["printed_estimate"], "computed_est": r["computed_estimate"],
            "match": r["estimate_match"], "issues": ";".join(r["issues"]),
        }
        if "interval" in r:
            iv = r["interval"]
            row["printed_interval"] = f"[{iv['printed'][0]},{iv['printed'][1]}]"
            row["computed_interval"] = f"[{iv['symmetric'][0]},{iv['symmetric'][1]}]"
        if "printed_estimate_nonbook" in r:
            row["printed_nb_est"] = r["printed_estimate_nonbook"]
            row["computed_nb_est"] = r["computed_estimate_nonbook"]
        rows.append(row)
    columns = list(rows[0].keys())
    footer = [
        f"estimate cells matching (unflagged rows): "
        f"{summary['estimate_matches_excluding_flagged']}/{summary['clean_rows']}",
    ]
    if summary["inconsistent_rows"]:
        names = ", ".join(
            f"{item['name']} ({'; '.join(item['issues'])})" for item in summary["inconsistent_rows"]
        )
        footer.append(f"inconsistent printed rows detected: {names}")
    if "outside_printed_interval" in summary:
        out = summary["outside_printed_interval"]
        detail = ", ".join(f"{o['name']} by {o['by']}" for o in out)
        footer.append(f"outside printed interval: {len(out)}" + (f" ({detail})" if out else ""))
    if "pearson_r" in summary and summary["pearson_r"] is not None:
        line = f"pearson R {summary['pearson_r']:.2f}"
        if summary.get("pearson_r_nonbook") is not None:
            line += f"  non-book {summary['pearson_r_nonbook']:.2f}"
        footer.append(line)
    emit(fmt, payload, columns, rows, footer)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run(_get_app(), host=host, port=port)


if __name__ == "__main__":
    main()
