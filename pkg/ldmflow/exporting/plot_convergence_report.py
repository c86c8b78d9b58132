import numpy
from matplotlib import pyplot
from ..ConvergenceReport import ConvergenceReport


def plot_convergence_report(report: ConvergenceReport):
    """Input and output distances against term number, on a logarithmic axis."""
    fig = pyplot.figure()
    ax = fig.add_axes([0.15, 0.12, 0.8, 0.8])
    n = report.series("n")
    for key, color in (("input_l2", "#0f0f0f"), ("sup_D", "#047495"), ("sup_Psi", "#f10c45"), ("l2_Psi", "#7bc8f6")):
        values = report.series(key)
        positive = values > 0
        if numpy.any(positive):
            ax.semilogy(n[positive], values[positive], color=color, marker=".", label=key)
    ax.set_xlabel("n")
    ax.set_ylabel("distance")
    ax.set_title("Convergence of effective delays")
    if ax.get_legend_handles_labels()[0]:
        ax.legend()
    return fig
