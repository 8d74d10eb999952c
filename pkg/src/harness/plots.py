"""Gnuplot script for the fitness curve and prediction plots of one run."""

from pathlib import Path
from typing import Union

GNUPLOT_TEMPLATE = """\
# gnuplot -persist plot.gp
set datafile separator ','
set key autotitle columnhead
set terminal pngcairo size 1000,600

set output 'fitness.png'
set title '{name}: fitness per generation'
set xlabel 'generation'
set ylabel 'fitness (-RMSE, scaled)'
plot 'fitness.csv' using 1:2 with lines title 'best', \\
     'fitness.csv' using 1:3 with lines title 'mean'

set output 'predictions_train.png'
set title '{name}: training split'
set xlabel 'sample'
set ylabel 'noise (dB)'
plot 'predictions_train.csv' using 1:2 with points pt 7 ps 0.4 title 'actual', \\
     'predictions_train.csv' using 1:3 with points pt 7 ps 0.4 title 'predicted'

set output 'predictions_test.png'
set title '{name}: test split'
plot 'predictions_test.csv' using 1:2 with points pt 7 ps 0.4 title 'actual', \\
     'predictions_test.csv' using 1:3 with points pt 7 ps 0.4 title 'predicted'
"""

ELBOW_TEMPLATE = """\
# gnuplot -persist elbow.gp
set datafile separator ','
set terminal pngcairo size 1000,600
set output 'elbow.png'
set title 'FCM objective per cluster count (knee at c={knee})'
set xlabel 'clusters'
set ylabel 'J'
set arrow from {knee}, graph 0 to {knee}, graph 1 nohead dashtype 2
plot 'elbow.csv' using 1:2 with linespoints pt 7 notitle
"""


def write_run_script(out_dir: Union[str, Path], name: str) -> Path:
    """Write ``plot.gp`` next to a run's CSV files."""
    path = Path(out_dir) / 'plot.gp'
    path.write_text(GNUPLOT_TEMPLATE.format(name=name), encoding='utf-8')
    return path


def write_elbow_script(out_dir: Union[str, Path], knee: int) -> Path:
    path = Path(out_dir) / 'elbow.gp'
    path.write_text(ELBOW_TEMPLATE.format(knee=knee), encoding='utf-8')
    return path
