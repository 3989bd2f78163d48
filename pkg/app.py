import argparse
import logging
import sys

from controller.controller import EXIT_IO, EXIT_USAGE, dispatch
from controller.run_config import RunConfig

logger = logging.getLogger("hankel-lift")


def _int_list(text):
    return [int(value) for value in text.split(",") if value]


def _float_list(text):
    return [float(value) for value in text.split(",") if value]


def _str_list(text):
    return [value for value in text.split(",") if value]


def _add_problem(parser):
    parser.add_argument("--n", type=int, help="sample count")
    parser.add_argument("--s", type=int, help="subspace dimension (snapshot rows)")
    parser.add_argument("--r", type=int, help="number of point sources")
    parser.add_argument("--seed", type=int, help="base RNG seed")
    parser.add_argument("--distribution", choices=["gaussian", "rademacher", "dft-rows"], help="law of B")
    parser.add_argument("--delta", type=float, help="minimum wraparound separation of the frequencies")


def _add_solver(parser):
    parser.add_argument("--rho", type=float, help="ADMM penalty parameter")
    parser.add_argument("--tol", type=float, help="relative residual tolerance")
    parser.add_argument("--max-iters", dest="max_iters", type=int, help="iteration cap")


def _add_experiment(parser):
    parser.add_argument("--trials", type=int, help="Monte Carlo trials per cell / SNR point")
    parser.add_argument("--threads", type=int, help="worker processes")


def build_parser():
    parser = argparse.ArgumentParser(prog="hankel-lift",
                                     description="Blind super-resolution via the vectorized Hankel lift")
    parser.add_argument("--config", help="JSON file with default option values")
    parser.add_argument("--verbose", action="store_true", help="debug logging")
    subparsers = parser.add_subparsers(dest="command", required=True)

    synth = subparsers.add_parser("synth", help="draw a model and write model.json, X.csv, y.csv")
    _add_problem(synth)
    synth.add_argument("--snr", type=float, help="also write X_noisy.csv at this SNR (dB)")
    synth.add_argument("--out", help="output directory")

    solve = subparsers.add_parser("solve", help="recover X from y and B")
    _add_solver(solve)
    solve.add_argument("--model", help="model.json holding B")
    solve.add_argument("--y", help="measurement CSV")
    solve.add_argument("--truth", help="X.csv to report the relative error against")
    solve.add_argument("--out", help="output directory")

    music = subparsers.add_parser("music", help="estimate frequencies and amplitudes from X")
    music.add_argument("--x", help="data matrix CSV")
    music.add_argument("--r", type=int, help="model order")
    music.add_argument("--estimator", choices=["vhm", "single", "mmv"])
    music.add_argument("--row", type=int, help="row used by the single-snapshot estimator")
    music.add_argument("--rows", "--s", dest="rows", type=int, help="use only the first ROWS rows of X")
    music.add_argument("--grid-step", dest="grid_step", type=float, help="frequency grid spacing")
    music.add_argument("--model", dest="psf_model", help="model.json; also write the recovered PSFs B h_k")
    music.add_argument("--svg", action="store_const", const=True, help="also draw pseudospectrum.svg")
    music.add_argument("--out", help="output directory")

    phase = subparsers.add_parser("phase-transition", help="success counts over a parameter grid")
    _add_problem(phase)
    _add_solver(phase)
    _add_experiment(phase)
    phase.add_argument("--axes", type=_str_list, help="two of r,s,n (first axis = grid rows)")
    phase.add_argument("--r-values", dest="r_values", type=_int_list)
    phase.add_argument("--s-values", dest="s_values", type=_int_list)
    phase.add_argument("--n-values", dest="n_values", type=_int_list)
    phase.add_argument("--threshold", type=float, help="success cutoff on the relative error")
    phase.add_argument("--out", help="output directory")

    sweep = subparsers.add_parser("snr-sweep", help="mean Hausdorff error of estimators against SNR")
    _add_problem(sweep)
    _add_experiment(sweep)
    sweep.add_argument("--snr-values", dest="snr_values", type=_float_list, help="e.g. 0,10,20,inf")
    sweep.add_argument("--series", type=_str_list, help="estimator:rows pairs, e.g. vhm:1,vhm:6,mmv:6")
    sweep.add_argument("--law", choices=["gaussian", "bernoulli"], help="law of the orientations h_k")
    sweep.add_argument("--metric", choices=["plain", "wraparound"])
    sweep.add_argument("--grid-step", dest="grid_step", type=float)
    sweep.add_argument("--out", help="output directory")

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if args.verbose else logging.INFO,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    flags = {key: value for key, value in vars(args).items() if key not in ("command", "config", "verbose")}
    try:
        file_values = RunConfig.read_file(args.config) if args.config else None
        config = RunConfig.from_sources(args.command, file_values, flags)
        return dispatch(config)
    except ValueError as e:
        logger.error("%s", e)
        return EXIT_USAGE
    except OSError as e:
        logger.error("%s", e)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
