import argparse
import json

from ..models import SolverOptions, format_fraction
from ..utils.canonical_utils import automorphism_orbits, canonical_form
from ..utils.containment_utils import contains, is_free
from ..utils.density_utils import dense_witness
from ..utils.io_utils import serialize_hg
from ..utils.solver_lib import lagrangian
from .arguments import add_jobs, add_seed, emit, resolve_family, resolve_graph


def register(subparsers) -> None:
    parser = subparsers.add_parser("lambda", help="Lagrangian of a hypergraph with a certificate")
    parser.add_argument("graph", help=".hg/.json file or construction name")
    parser.add_argument("--tol", type=float, default=None, help="KKT residual tolerance")
    parser.add_argument("--starts", type=int, default=None, help="Multistart count")
    parser.add_argument("--support-enum-max", type=int, default=None,
                        help="Largest n solved by support enumeration")
    parser.add_argument("--json", nargs="?", const="-", default=None, dest="json_out",
                        metavar="FILE", help="Emit the certificate as JSON (stdout by default)")
    add_seed(parser)
    add_jobs(parser)
    parser.set_defaults(handler=lambda_command)

    parser = subparsers.add_parser("contains", help="Find a copy of a pattern in a host")
    parser.add_argument("pattern", help="Pattern file or construction name")
    parser.add_argument("graph", help="Host file or construction name")
    parser.set_defaults(handler=contains_command)

    parser = subparsers.add_parser("free", help="Check that a host is free of a family")
    parser.add_argument("family", help="Comma-separated construction names or files")
    parser.add_argument("graph", help="Host file or construction name")
    parser.set_defaults(handler=free_command)

    parser = subparsers.add_parser("dense", help="Decide whether a hypergraph is dense")
    parser.add_argument("graph", help=".hg/.json file or construction name")
    add_seed(parser)
    add_jobs(parser)
    parser.set_defaults(handler=dense_command)

    parser = subparsers.add_parser("canon", help="Canonical form and automorphism orbits")
    parser.add_argument("graph", help=".hg/.json file or construction name")
    parser.add_argument("--out", default=None, help="Write the canonical form to FILE")
    parser.set_defaults(handler=canon_command)


def _options(args: argparse.Namespace) -> SolverOptions:
    return SolverOptions(tol=getattr(args, "tol", None), starts=getattr(args, "starts", None),
                         seed=args.seed, jobs=args.jobs,
                         support_enum_threshold=getattr(args, "support_enum_max", None))


def lambda_command(args: argparse.Namespace) -> int:
    """Solve λ(G) and print the certificate.

    Args:
        args (argparse.Namespace): Parsed `lambda` arguments.

    Returns:
        int: Exit status, always 0 once the graph was read.
    """
    graph = resolve_graph(args.graph)
    certificate = lagrangian(graph, _options(args))
    if args.json_out is not None:
        emit(certificate.model_dump_json(indent=2), args.json_out)
        if args.json_out == "-":
            return 0
    lines = [
        f"graph: {graph}",
        f"lambda: {certificate.value!r}",
        f"exact: {format_fraction(certificate.exact) if certificate.exact is not None else '-'}",
        f"method: {certificate.method.value}",
        f"support: {' '.join(map(str, certificate.support))}",
        f"weights: {' '.join(f'{w:.12g}' for w in certificate.weights.weights)}",
        f"kkt_residual: {certificate.kkt_residual:.3g}",
        f"converged: {str(certificate.converged).lower()}",
        f"starts: {certificate.starts_used} (seed {certificate.seed})",
    ]
    print("\n".join(lines))
    return 0


def contains_command(args: argparse.Namespace) -> int:
    pattern = resolve_graph(args.pattern)
    host = resolve_graph(args.graph)
    embedding = contains(host, pattern)
    print(f"contains: {'true' if embedding else 'false'}")
    if embedding:
        print("embedding: " + " ".join(f"{p}->{h}" for p, h in
                                       enumerate(embedding.mapping, start=1)))
    return 0


def free_command(args: argparse.Namespace) -> int:
    family = resolve_family(args.family)
    host = resolve_graph(args.graph)
    free = is_free(host, family)
    print(f"free: {'true' if free else 'false'}")
    if not free:
        for member in family.members:
            embedding = contains(host, member)
            if embedding:
                print(f"copy of {member}: {json.dumps(list(embedding.mapping))}")
                break
    return 0


def dense_command(args: argparse.Namespace) -> int:
    """Print the density verdict and, for non-dense graphs, a witness subgraph."""
    graph = resolve_graph(args.graph)
    witness = dense_witness(graph, _options(args))
    dense = witness is None and bool(graph.edges)
    print(f"dense: {'true' if dense else 'false'}")
    if witness is not None:
        print("witness:")
        print(serialize_hg(witness), end="")
    return 0


def canon_command(args: argparse.Namespace) -> int:
    graph = resolve_graph(args.graph)
    form = canonical_form(graph)
    orbits = automorphism_orbits(graph)
    emit(serialize_hg(form, comment=f"canonical form of {graph}"), args.out)
    print("orbits: " + " | ".join(" ".join(map(str, orbit)) for orbit in orbits))
    return 0
