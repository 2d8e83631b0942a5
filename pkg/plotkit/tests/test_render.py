import pytest

from plotkit import FigureSpec, build_figure, read_table, render, select_columns

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def spec_for(dataset_dir, tmp_path, csv_name, columns, style, out_name="fig.png"):
    return FigureSpec(
        csv_path=str(dataset_dir / csv_name),
        columns=columns,
        style=style,
        out_path=str(tmp_path / out_name),
    )


def test_read_table_skips_metadata(dataset_dir):
    times, data = read_table(dataset_dir / "swap_components.csv")
    assert times[0] == 0.0
    assert len(data) == 64
    assert all(len(v) == len(times) for v in data.values())


def test_read_table_rejects_missing_file(tmp_path):
    with pytest.raises(OSError):
        read_table(tmp_path / "absent.csv")


def test_select_columns_glob(dataset_dir):
    _, data = read_table(dataset_dir / "swap_pt_eigenvalues.csv")
    assert len(select_columns(data, "eig_rho_*")) == 8
    assert len(select_columns(data, "eig_pt?_*")) == 24


def test_missing_columns_error_lists_available(dataset_dir, tmp_path):
    spec = spec_for(dataset_dir, tmp_path, "swap_pt_eigenvalues.csv", "nope_*",
                    "components")
    with pytest.raises(ValueError, match="available columns: t?.*eig_rho_0"):
        render(spec)
    assert not (tmp_path / "fig.png").exists()  # nothing written on failure


def test_invalid_style_rejected(dataset_dir, tmp_path):
    with pytest.raises(ValueError, match="style"):
        spec_for(dataset_dir, tmp_path, "swap_components.csv", "c_*", "heatmap")


def test_component_figure_draws_all_curves(dataset_dir, tmp_path):
    spec = spec_for(dataset_dir, tmp_path, "swap_components.csv", "c_*", "components")
    fig, ax = build_figure(spec)
    assert len(ax.lines) == 64
    out = render(spec)
    assert out.read_bytes()[:8] == PNG_MAGIC


def test_eigenvalue_figure_dashes_density_only(dataset_dir, tmp_path):
    spec = spec_for(dataset_dir, tmp_path, "swap_pt_eigenvalues.csv", "eig_*",
                    "eigenvalues-with-dashed-density")
    fig, ax = build_figure(spec)
    styles = {line.get_label(): line.get_linestyle() for line in ax.lines
              if not line.get_label().startswith("_")}
    assert all(s == "--" for n, s in styles.items() if n.startswith("eig_rho_"))
    assert all(s == "-" for n, s in styles.items() if not n.startswith("eig_rho_"))
    # the zero reference line sits at y = 0 across the axis
    zero_lines = [l for l in ax.lines if l.get_label().startswith("_")]
    assert any(set(l.get_ydata()) == {0.0} for l in zero_lines)


def test_ancilla_pt_curves_dip_only_on_outer_cuts(dataset_dir, tmp_path):
    spec = spec_for(dataset_dir, tmp_path, "cubitt_pt_single.csv", "eig_pt*",
                    "eigenvalues-with-dashed-density")
    _, ax = build_figure(spec)
    mins = {}
    for line in ax.lines:
        name = line.get_label()
        if name.startswith("eig_pt"):
            cut = name[len("eig_pt")]
            mins[cut] = min(mins.get(cut, 0.0), min(line.get_ydata()))
    assert mins["A"] < -1e-3
    assert mins["C"] < -1e-3
    assert mins["B"] >= -1e-9


def test_render_svg(dataset_dir, tmp_path):
    spec = spec_for(dataset_dir, tmp_path, "cubitt_pt_pairs.csv", "eig_pt*",
                    "eigenvalues-with-dashed-density", out_name="fig.svg")
    out = render(spec)
    assert out.read_text().lstrip().startswith("<?xml")


def test_render_rejects_unknown_suffix(dataset_dir, tmp_path):
    spec = spec_for(dataset_dir, tmp_path, "swap_components.csv", "c_*",
                    "components", out_name="fig.bmp")
    with pytest.raises(ValueError, match="png or .svg"):
        render(spec)


def test_repeated_renders_are_identical(dataset_dir, tmp_path):
    spec1 = spec_for(dataset_dir, tmp_path, "swap_pt_eigenvalues.csv", "eig_*",
                     "eigenvalues-with-dashed-density", out_name="a.png")
    spec2 = spec_for(dataset_dir, tmp_path, "swap_pt_eigenvalues.csv", "eig_*",
                     "eigenvalues-with-dashed-density", out_name="b.png")
    assert render(spec1).read_bytes() == render(spec2).read_bytes()


def test_secondary_figure_rendering(dataset_dir, tmp_path, capsys):
    """Renders both scenario eigenvalue CSVs; the suite's one summary verdict."""
    ok = True
    detail = []
    for csv_name in ("swap_pt_eigenvalues.csv", "cubitt_pt_single.csv",
                     "cubitt_pt_pairs.csv"):
        try:
            out = render(FigureSpec(
                csv_path=str(dataset_dir / csv_name),
                columns="eig_*",
                style="eigenvalues-with-dashed-density",
                out_path=str(tmp_path / (csv_name + ".png")),
            ))
            detail.append(f"{csv_name} ok ({out.stat().st_size} bytes)")
        except Exception as exc:  # report, then fail below
            ok = False
            detail.append(f"{csv_name} failed: {exc}")
    state = "PASS" if ok else "FAIL"
    with capsys.disabled():
        print(f"[criterion S] figure rendering: {state} ({'; '.join(detail)})",
              flush=True)
    assert ok, detail
