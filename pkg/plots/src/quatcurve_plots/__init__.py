"""Figure scripts for quatcurve CSV exports."""

from .plotting import (involute_csv_to_samples_spec, plot_projection,
                       plot_spatial, read_csv)

__all__ = ["involute_csv_to_samples_spec", "plot_projection", "plot_spatial",
           "read_csv"]
