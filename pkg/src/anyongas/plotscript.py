"""Gnuplot script emission for CLI datasets.

Scripts are self-contained (data inlined in a heredoc block) and
byte-deterministic for identical input datasets.
"""

from .errors import DomainError

PLOT_KINDS = ("occupation", "bounds", "eos-isotherms", "virial-bars")


def _fmt(value):
    if isinstance(value, float):
        return format(value, ".15g")
    return str(value)


def _data_block(rows, name="$data"):
    lines = [f"{name} << EOD"]
    lines.extend(" ".join(_fmt(v) for v in row) for row in rows)
    lines.append("EOD")
    return lines


def _header(dataset, png_name):
    return [
        "# gnuplot script emitted by anyongas",
        f"# command: {dataset['command']}  schema_version: {dataset['schema_version']}",
        "set terminal pngcairo size 960,640",
        f"set output '{png_name}'",
        "set grid",
    ]


def _col(dataset, name):
    try:
        return dataset["columns"].index(name) + 1  # gnuplot columns are 1-based
    except ValueError:
        raise DomainError(
            f"dataset lacks column {name!r} needed by this plot kind"
        ) from None


def emit_plot_script(dataset, kind, png_name=None):
    """Render a dataset produced by the CLI into a gnuplot command file."""
    if kind not in PLOT_KINDS:
        raise DomainError(f"unknown plot kind {kind!r}; choose from {PLOT_KINDS}")
    png_name = png_name or f"{dataset['command']}.png"
    lines = _header(dataset, png_name)

    if kind == "bounds":
        lo, hi = _col(dataset, "n_lower"), _col(dataset, "n_upper")
        eta, exact = _col(dataset, "eta"), _col(dataset, "n_exact")
        lines += [
            "set xlabel 'eta'",
            "set ylabel 'occupation'",
            "set style fill transparent solid 0.3 noborder",
        ]
        lines += _data_block(dataset["rows"])
        lines.append(
            f"plot $data using {eta}:{lo}:{hi} with filledcurves "
            "title 'convergent bounds', \\"
        )
        lines.append(f"     $data using {eta}:{lo} with lines title 'lower', \\")
        lines.append(f"     $data using {eta}:{hi} with lines title 'upper', \\")
        lines.append(
            f"     $data using {eta}:{exact} with lines lw 2 title 'exact'"
        )
    elif kind == "occupation":
        eta = _col(dataset, "eta")
        lines += ["set xlabel 'eta'", "set ylabel 'occupation'"]
        lines += _data_block(dataset["rows"])
        plots = []
        for idx, name in enumerate(dataset["columns"], start=1):
            if idx == eta:
                continue
            plots.append(f"$data using {eta}:{idx} with lines title '{name}'")
        lines.append("plot " + ", \\\n     ".join(plots))
    elif kind == "eos-isotherms":
        qcol = _col(dataset, "q")
        x, y = _col(dataset, "fugacity"), _col(dataset, "pressure")
        qs = []
        for row in dataset["rows"]:
            if row[qcol - 1] not in qs:
                qs.append(row[qcol - 1])
        lines += ["set xlabel 'fugacity z'", "set ylabel 'pressure'"]
        block = ["$data << EOD"]
        for i, q in enumerate(qs):
            if i:
                block.extend(["", ""])  # two blank lines start a new index
            block.extend(
                " ".join(_fmt(v) for v in r)
                for r in dataset["rows"] if r[qcol - 1] == q
            )
        block.append("EOD")
        lines += block
        plots = [
            f"$data index {i} using {x}:{y} with linespoints title 'q={_fmt(q)}'"
            for i, q in enumerate(qs)
        ]
        lines.append("plot " + ", \\\n     ".join(plots))
    else:  # virial-bars
        k, coeff = _col(dataset, "k"), _col(dataset, "coefficient")
        lines += [
            "set xlabel 'coefficient index k'",
            "set ylabel 'virial coefficient'",
            "set boxwidth 0.6",
            "set style fill solid 0.5",
        ]
        lines += _data_block(dataset["rows"])
        lines.append(f"plot $data using {k}:{coeff} with boxes title 'b_k'")

    return "\n".join(lines) + "\n"
