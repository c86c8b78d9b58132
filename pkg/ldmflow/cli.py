import argparse
import logging
from .importing import load_scenario
from .workflows import reports_failures
from .workflows import run_continuity
from .workflows import run_due
from .workflows import run_load


WORKFLOWS = {
    "load": (run_load, "load path flows onto the network and write delays"),
    "due": (run_due, "solve for a dynamic user equilibrium"),
    "continuity": (run_continuity, "measure delay convergence along a converging flow sequence"),
}


def parse_args(argv=None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(prog="ldmflow",
                                     description="Dynamic network loading and equilibrium under the link delay model.")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, (_, description) in WORKFLOWS.items():
        subparser = subparsers.add_parser(name, help=description)
        subparser.add_argument("--scenario", required=True, type=str, help="scenario file (yaml or json)")
        subparser.add_argument("--out", default=None, type=str, help="output directory, overrides the scenario")
        subparser.add_argument("--seed", default=None, type=int, help="random seed, overrides the scenario")
        subparser.add_argument("--verbose", action="store_true", help="log debug messages")
    return parser.parse_args(argv)


@reports_failures
def run(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario, output_dir=args.out, seed=args.seed)
    workflow, _ = WORKFLOWS[args.command]
    return workflow(scenario)


def main(argv=None) -> int:
    args = parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format="%(levelname)s %(name)s: %(message)s")
    return run(args)
