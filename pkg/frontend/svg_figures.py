import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from matplotlib.colors import BoundaryNorm, ListedColormap

# SVG geometry is in points (72 per inch): this gives a 0 0 800 600 viewBox
FIGURE_SIZE = (800 / 72, 600 / 72)
GRAY_LEVELS = 8

plt.rcParams["svg.hashsalt"] = "hankel-lift"
plt.rcParams["svg.fonttype"] = "path"


def _save(fig, path):
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)


def plot_trial_grid(grid, path):
    """Success-count heatmap on a fixed 8-step grayscale ramp, white = all trials succeed."""
    (first, first_values), (second, second_values) = grid.axes
    counts = grid.counts
    trials = grid.trials_per_cell

    cmap = ListedColormap([str(level) for level in np.linspace(0.0, 1.0, GRAY_LEVELS)])
    norm = BoundaryNorm(np.linspace(0, trials, GRAY_LEVELS + 1), GRAY_LEVELS)

    fig, ax = plt.subplots(figsize=FIGURE_SIZE)
    image = ax.imshow(counts, cmap=cmap, norm=norm, origin="lower", aspect="auto")
    for i in range(counts.shape[0]):
        for j in range(counts.shape[1]):
            color = "black" if counts[i, j] > trials / 2 else "white"
            ax.text(j, i, str(int(counts[i, j])), ha="center", va="center", color=color)

    ax.set_xticks(range(len(second_values)), [str(v) for v in second_values])
    ax.set_yticks(range(len(first_values)), [str(v) for v in first_values])
    ax.set_xlabel(second)
    ax.set_ylabel(first)
    fixed = ", ".join(f"{name}={value}" for name, value in sorted(grid.fixed.items()))
    ax.set_title(f"successes out of {trials} ({fixed}, threshold {grid.threshold:g})")
    fig.colorbar(image, ax=ax, label="successes")
    _save(fig, path)


def plot_sweep(sweep, path):
    snr = np.asarray(sweep.snr_values, dtype=float)
    finite = np.isfinite(snr)
    means = sweep.mean_errors

    fig, ax = plt.subplots(figsize=FIGURE_SIZE)
    for k, label in enumerate(sweep.series):
        ax.plot(snr[finite], means[k, finite], marker="o", label=label)
    if np.all(means[:, finite] > 0):
        ax.set_yscale("log")
    ax.set_xlabel("SNR (dB)")
    ax.set_ylabel(f"mean Hausdorff error ({sweep.metric})")
    ax.set_title(f"frequency error over {sweep.trials} trials")
    ax.grid(True)
    ax.legend()
    _save(fig, path)


def plot_pseudospectrum(curve, peaks, path):
    fig, ax = plt.subplots(figsize=FIGURE_SIZE)
    ax.semilogy(curve.grid, curve.values, color="black", linewidth=0.8)
    for tau in peaks:
        ax.axvline(tau, color="red", linestyle="--", linewidth=0.8)
    ax.set_xlim(0, 1)
    ax.set_xlabel("tau")
    ax.set_ylabel("f(tau)")
    ax.set_title(f"pseudospectrum, {len(peaks)} peaks marked")
    _save(fig, path)
