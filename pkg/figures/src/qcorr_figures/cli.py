"""Console entry points: one figure per script, `plot-figN --csv ... --out ...`.

fig1  random-states survey: three scatter panels (average and maximum pair
      discord/concurrence against GGM, maximum discord against maximum
      concurrence).
fig2  kicked-top time series: smoothed curves with the raw data inset.
fig3  square-lattice catalog curves (cases A/B/C, plus GGM and concurrence
      for the directly linked pair; --normalize rescales each series to
      unit maximum).
fig4  hexagonal/triangular catalog discord curves with the square direct
      case for comparison.
fig5  fully connected clusters: discord per size, concurrence dashed,
      no-direct-link discord dotted.
fig6  random-weighted survey: discord against GGM scatter.

Exit codes: 0 success, 1 on missing columns or unreadable input.
"""
from __future__ import annotations

import argparse
import sys

from .csvio import MissingColumnError
from .plots import PanelSpec, PlotSpec, SeriesSpec, plot_curves, plot_scatter


def _parse(argv, description: str, normalize_flag: bool = False):
    parser = argparse.ArgumentParser(description=description)
    parser.add_argument("--csv", required=True, help="input CSV produced by qcorr")
    parser.add_argument("--out", required=True, help="output image path")
    if normalize_flag:
        parser.add_argument(
            "--normalize",
            action="store_true",
            help="rescale every series to unit maximum before drawing",
        )
    return parser.parse_args(argv)


def _run(renderer, spec: PlotSpec) -> int:
    try:
        path = renderer(spec)
    except MissingColumnError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(path)
    return 0


def fig1(argv=None) -> int:
    args = _parse(argv, "Random-states survey scatter (three panels).")
    spec = PlotSpec(
        csv_path=args.csv,
        out_path=args.out,
        panels=(
            PanelSpec(
                x="ggm",
                series=(
                    SeriesSpec("avg_discord", label="average discord"),
                    SeriesSpec("avg_concurrence", label="average concurrence"),
                ),
                xlabel="GGM",
                ylabel="average over pairs",
                title="(i)",
            ),
            PanelSpec(
                x="ggm",
                series=(
                    SeriesSpec("max_discord", label="maximum discord"),
                    SeriesSpec("max_concurrence", label="maximum concurrence"),
                ),
                xlabel="GGM",
                ylabel="maximum over pairs",
                title="(ii)",
            ),
            PanelSpec(
                x="max_concurrence",
                series=(SeriesSpec("max_discord", label="maximum discord"),),
                xlabel="maximum concurrence",
                ylabel="maximum discord",
                title="(iii)",
            ),
        ),
    )
    return _run(plot_scatter, spec)


def fig2(argv=None) -> int:
    args = _parse(argv, "Kicked-top time series, smoothed, with raw inset.")
    raw = (
        SeriesSpec("ggm", label="GGM"),
        SeriesSpec("discord", label="discord"),
        SeriesSpec("concurrence", label="concurrence"),
    )
    spec = PlotSpec(
        csv_path=args.csv,
        out_path=args.out,
        panels=(
            PanelSpec(
                x="step",
                series=(
                    SeriesSpec("ggm_smooth", label="GGM"),
                    SeriesSpec("discord_smooth", label="discord"),
                    SeriesSpec("concurrence_smooth", label="concurrence"),
                ),
                xlabel="kick number",
                ylabel="smoothed value",
            ),
        ),
        inset=PanelSpec(x="step", series=raw),
    )
    return _run(plot_curves, spec)


def fig3(argv=None) -> int:
    args = _parse(argv, "Square-lattice pair correlations against the link angle.", normalize_flag=True)
    spec = PlotSpec(
        csv_path=args.csv,
        out_path=args.out,
        normalize=args.normalize,
        panels=(
            PanelSpec(
                x="theta",
                series=(
                    SeriesSpec("discord", label="(A)", where=(("case", "square:A"),)),
                    SeriesSpec("discord", label="(B)", where=(("case", "square:B"),)),
                    SeriesSpec("discord", label="(C)", where=(("case", "square:C"),)),
                    SeriesSpec("ggm", label="GGM", where=(("case", "square:A"),), style={"linestyle": "--"}),
                    SeriesSpec(
                        "concurrence",
                        label="concurrence (A)",
                        where=(("case", "square:A"),),
                        style={"linestyle": ":"},
                    ),
                ),
                xlabel="link angle",
                ylabel="pair measures",
            ),
        ),
    )
    return _run(plot_curves, spec)


def fig4(argv=None) -> int:
    args = _parse(argv, "Hexagonal and triangular catalog discord curves.")
    cases = (
        ("hexagonal:A", "H-(A)", {}),
        ("hexagonal:B", "H-(B)", {}),
        ("triangular:A", "T-(A)", {"linestyle": "--"}),
        ("triangular:B", "T-(B)", {"linestyle": "--"}),
        ("triangular:C", "T-(C)", {"linestyle": "--"}),
        ("square:A", "S-(A)", {"linestyle": "-."}),
    )
    spec = PlotSpec(
        csv_path=args.csv,
        out_path=args.out,
        panels=(
            PanelSpec(
                x="theta",
                series=tuple(
                    SeriesSpec("discord", label=label, where=(("case", case),), style=style)
                    for case, label, style in cases
                ),
                xlabel="link angle",
                ylabel="discord",
            ),
        ),
    )
    return _run(plot_curves, spec)


def fig5(argv=None) -> int:
    args = _parse(argv, "Fully connected clusters: pair measures per size.")
    spec = PlotSpec(
        csv_path=args.csv,
        out_path=args.out,
        panels=(
            PanelSpec(
                x="theta",
                series=(
                    SeriesSpec(
                        "discord", label="discord N={group}", where=(("case", "with-direct"),), group="n"
                    ),
                    SeriesSpec(
                        "concurrence",
                        label="concurrence N={group}",
                        where=(("case", "with-direct"),),
                        group="n",
                        style={"linestyle": "--"},
                    ),
                    SeriesSpec(
                        "discord",
                        label="no direct link N={group}",
                        where=(("case", "no-direct"),),
                        group="n",
                        style={"linestyle": ":", "color": "black"},
                    ),
                ),
                xlabel="link angle",
                ylabel="pair measures",
            ),
        ),
    )
    return _run(plot_curves, spec)


def fig6(argv=None) -> int:
    args = _parse(argv, "Random-weighted survey: discord against GGM.")
    spec = PlotSpec(
        csv_path=args.csv,
        out_path=args.out,
        panels=(
            PanelSpec(
                x="ggm",
                series=(SeriesSpec("discord", label="pair discord"),),
                xlabel="GGM",
                ylabel="discord",
            ),
        ),
    )
    return _run(plot_scatter, spec)
