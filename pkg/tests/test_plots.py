from frobcode.plots import plot_density
from frobcode.survey import density


def test_density_png(tmp_path):
    report = density(2, 200)
    out = tmp_path / "density.png"
    plot_density(report, str(out))
    data = out.read_bytes()
    assert data[:8] == b"\x89PNG\r\n\x1a\n"
    assert len(data) > 1000


def test_density_png_with_detail(tmp_path):
    report = density(2, 500, keep_detail=True)
    out = tmp_path / "detail.png"
    plot_density(report, str(out))
    assert out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_density_svg(tmp_path):
    # the backend picks the writer from the suffix
    report = density(2, 100)
    out = tmp_path / "density.svg"
    plot_density(report, str(out))
    assert b"<svg" in out.read_bytes()[:400]
