#!/usr/bin/env python
"""
Command-line front-end ``gbl``.

Subcommands::

    gbl analyze  <instance>   full report (exit 0 consistent, 2 inconsistent)
    gbl witness  <instance>   strongest greedy violation certificate or a none record
    gbl renorm   <instance>   instance with the suppression renorm of its basis
    gbl gallery  [name]       builtin instances (--list for the families)

<instance> is a path to a JSON instance file or a gallery name. Input errors
exit with 1 and a one-line diagnostic on stderr.
"""
import argparse
import os
import sys

from .. import __version__
from ..constants.suppression import suppression_constant
from ..exceptions import GreedyBasisLabError, InstanceError
from ..greedybasislab_interface import GreedyBasisLabInterface
from ..theorem.hilbert import orthogonality_witnesses, strongest_witness
from ..theorem.verdict import STATUS_PROVED_ONE, verify_characterization
from ..utils.data_preparation import initialise_instance, instance_to_dict, load_instance_file
from ..utils.settings_utils import resolve_settings
from ..utils.utils import getlogger, to_jsonable
from ..utils.validation import SCHEMA_TAG
from .gallery import gallery_instance, is_gallery_name, list_families
from .report import build_report, certificate_record, empty_record, render

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INCONSISTENT = 2


def resolve_instance(ref: str):
    """Loads an instance from a file path, or from the gallery when `ref` is a gallery name."""
    if os.path.exists(ref):
        return load_instance_file(ref)
    if is_gallery_name(ref):
        return initialise_instance(gallery_instance(ref))
    raise InstanceError(f"'{ref}' is neither a readable instance file nor a gallery name "
                        f"(see 'gbl gallery --list').")


def write_output(text: str, out=None):
    if out:
        with open(out, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _cli_overrides(args) -> dict:
    return {'budget': args.budget, 'seed': args.seed, 'tol': args.tol}


def cmd_analyze(args) -> int:
    instance = resolve_instance(args.instance)
    lab = GreedyBasisLabInterface(log_level=args.log_level)
    store = lab.analyse(instance, **_cli_overrides(args))
    write_output(render(build_report(store, all_ties=args.all_ties)), args.out)
    return EXIT_OK if store.verdict.consistent else EXIT_INCONSISTENT


def cmd_witness(args) -> int:
    instance = resolve_instance(args.instance)
    space, basis = instance.space, instance.basis
    if args.hilbert:
        witness = strongest_witness(orthogonality_witnesses(space, basis))
        if witness is None:
            record = empty_record(STATUS_PROVED_ONE)
        else:
            record = {'schema': SCHEMA_TAG, **witness.to_dict()}
            if args.all_ties:
                record['certificate']['valid_sets'] = witness.certificate.all_valid_sets(basis)
        write_output(render(record), args.out)
        return EXIT_OK

    settings = resolve_settings(instance.analysis, _cli_overrides(args))
    ksu = suppression_constant(space, basis, settings=settings)
    verdict = verify_characterization(space, basis, settings=settings, ksu=ksu)
    if verdict.certificate is not None:
        record = certificate_record(verdict.certificate, basis, args.all_ties)
    else:
        record = empty_record(verdict.status)
    write_output(render(record), args.out)
    return EXIT_OK if verdict.consistent else EXIT_INCONSISTENT


def cmd_renorm(args) -> int:
    instance = resolve_instance(args.instance)
    settings = resolve_settings(instance.analysis, _cli_overrides(args))
    renormed = GreedyBasisLabInterface(log_level=args.log_level).renorm(instance, settings)
    write_output(render(instance_to_dict(renormed)), args.out)
    return EXIT_OK


def cmd_gallery(args) -> int:
    if args.list or not args.name:
        write_output(render(to_jsonable(list_families())), args.out)
        return EXIT_OK
    write_output(render(gallery_instance(args.name)), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--out', help="write the JSON output to this path instead of stdout")
    common.add_argument('--log-level', default='WARNING',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
                        help="logging level on stderr (default: WARNING)")

    analysis = argparse.ArgumentParser(add_help=False)
    analysis.add_argument('instance', help="instance JSON file or gallery name")
    analysis.add_argument('--budget', type=int, help="random restarts per searched constant")
    analysis.add_argument('--seed', type=int, help="seed of the restart generator")
    analysis.add_argument('--tol', type=float, help="relative tolerance for 'equals 1'")
    analysis.add_argument('--all-ties', action='store_true',
                          help="list every valid greedy set next to each certificate")

    parser = argparse.ArgumentParser(
        prog='gbl', description="Finite-dimensional laboratory for the thresholding greedy algorithm")
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest='command', required=True)

    p = subparsers.add_parser('analyze', parents=[common, analysis],
                              help="estimate K_su, C_w, C_t, C_qg and check the characterisation")
    p.set_defaults(func=cmd_analyze)

    p = subparsers.add_parser('witness', parents=[common, analysis],
                              help="emit the strongest greedy violation certificate")
    p.add_argument('--hilbert', action='store_true',
                   help="use the orthogonality witness of the Gram matrix (Hilbertian norms)")
    p.set_defaults(func=cmd_witness)

    p = subparsers.add_parser('renorm', parents=[common, analysis],
                              help="write the instance renormed by max_A ||P_A x||")
    p.set_defaults(func=cmd_renorm)

    p = subparsers.add_parser('gallery', parents=[common], help="emit builtin instances")
    p.add_argument('name', nargs='?', help="gallery instance name")
    p.add_argument('--list', action='store_true', help="list the instance families")
    p.set_defaults(func=cmd_gallery)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # usage errors are input errors; 2 stays reserved for inconsistency
        return EXIT_OK if e.code in (0, None) else EXIT_INPUT_ERROR
    logger = getlogger(args.log_level)
    logger.setLevel(args.log_level)
    try:
        return args.func(args)
    except (GreedyBasisLabError, OSError) as e:
        print(f"gbl: error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == '__main__':
    sys.exit(main())
